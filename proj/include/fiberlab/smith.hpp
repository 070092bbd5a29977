#pragma once

#include "fiberlab/matrix.hpp"

#include <cstddef>
#include <vector>

namespace fiberlab {

/// Smith normal form S = left * A * right with left, right unimodular.
///
/// `diagonal` holds the nonzero invariant factors d_1 | d_2 | ... | d_rank,
/// all positive. `right_inverse` is right^{-1}, kept so that callers can
/// move vectors into and out of the diagonal coordinates without inverting.
struct SmithForm {
    std::vector<Integer> diagonal;
    IntMatrix left;
    IntMatrix right;
    IntMatrix right_inverse;

    std::size_t rank() const { return diagonal.size(); }
};

enum class Transforms { None, Track };

/// Exact elimination with pivoting on the entry of minimal absolute value.
SmithForm smith_form(const IntMatrix& a, Transforms transforms = Transforms::None);

/// Nonzero invariant factors, ascending along the divisibility chain.
std::vector<Integer> invariant_factors(const IntMatrix& a);

/// Invariant factors strictly greater than one: the torsion of coker(a).
std::vector<Integer> torsion_factors(const IntMatrix& a);

/// Invariant-factor normal form of a direct sum of cyclic groups Z/n_i
/// (orders <= 1 are dropped). The result is a divisibility chain.
std::vector<Integer> normalize_cyclic_orders(const std::vector<Integer>& orders);

}  // namespace fiberlab
