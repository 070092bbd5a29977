#include "fiberlab/smith.hpp"

#include <optional>

namespace fiberlab {

namespace {

using boost::multiprecision::abs;

// Operations are mirrored into the transforms only when tracking is on.
class Reducer {
public:
    Reducer(const IntMatrix& a, bool track) : a_(a), track_(track) {
        if (track_) {
            left_ = IntMatrix::identity(a.rows());
            right_ = IntMatrix::identity(a.cols());
            right_inv_ = IntMatrix::identity(a.cols());
        }
    }

    SmithForm run() {
        std::vector<Integer> diag;
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < limit; ++t) {
            auto pivot = min_entry(t);
            if (!pivot) break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            reduce_at(t);
            if (a_(t, t) < 0) negate_row(t);
            diag.push_back(a_(t, t));
        }
        // reduce_at leaves a pivot dividing the whole trailing block, so the
        // diagonal is already a divisibility chain.
        SmithForm out;
        out.diagonal = std::move(diag);
        out.left = std::move(left_);
        out.right = std::move(right_);
        out.right_inverse = std::move(right_inv_);
        return out;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                if (a_(i, j) == 0) continue;
                Integer v = abs(a_(i, j));
                if (!best || v < best_abs) {
                    best = {i, j};
                    best_abs = v;
                    if (best_abs == 1) return best;
                }
            }
        return best;
    }

    // Clears row t and column t beyond the pivot and enforces that the pivot
    // divides every entry of the trailing submatrix.
    void reduce_at(std::size_t t) {
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == 0) continue;
                Integer q = a_(i, t) / a_(t, t);
                add_row(i, t, -q);
                if (a_(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == 0) continue;
                Integer q = a_(t, j) / a_(t, t);
                add_col(j, t, -q);
                if (a_(t, j) != 0) dirty = true;
            }
            if (dirty) {
                move_min_to(t);
                continue;
            }
            auto bad = find_nondivisible(t);
            if (!bad) return;
            add_row(t, *bad, Integer(1));
        }
    }

    void move_min_to(std::size_t t) {
        std::size_t bi = t, bj = t;
        Integer best = abs(a_(t, t));
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_(i, t) != 0 && abs(a_(i, t)) < best) { best = abs(a_(i, t)); bi = i; bj = t; }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_(t, j) != 0 && abs(a_(t, j)) < best) { best = abs(a_(t, j)); bi = t; bj = j; }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    std::optional<std::size_t> find_nondivisible(std::size_t t) const {
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (a_(i, j) % a_(t, t) != 0) return i;
        return std::nullopt;
    }

    // row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(dst, j) += k * a_(src, j);
        if (track_)
            for (std::size_t j = 0; j < left_.cols(); ++j) left_(dst, j) += k * left_(src, j);
    }

    // col_dst += k * col_src; the inverse transform gets row_src -= k * row_dst.
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        for (std::size_t i = 0; i < a_.rows(); ++i) a_(i, dst) += k * a_(i, src);
        if (track_) {
            for (std::size_t i = 0; i < right_.rows(); ++i) right_(i, dst) += k * right_(i, src);
            for (std::size_t j = 0; j < right_inv_.cols(); ++j) right_inv_(src, j) -= k * right_inv_(dst, j);
        }
    }

    void swap_rows(std::size_t x, std::size_t y) {
        a_.swap_rows(x, y);
        if (track_) left_.swap_rows(x, y);
    }

    void swap_cols(std::size_t x, std::size_t y) {
        a_.swap_cols(x, y);
        if (track_) {
            right_.swap_cols(x, y);
            right_inv_.swap_rows(x, y);
        }
    }

    void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(t, j) = -a_(t, j);
        if (track_)
            for (std::size_t j = 0; j < left_.cols(); ++j) left_(t, j) = -left_(t, j);
    }

    IntMatrix a_;
    bool track_;
    IntMatrix left_, right_, right_inv_;
};

}  // namespace

SmithForm smith_form(const IntMatrix& a, Transforms transforms) {
    return Reducer(a, transforms == Transforms::Track).run();
}

std::vector<Integer> invariant_factors(const IntMatrix& a) { return smith_form(a).diagonal; }

std::vector<Integer> torsion_factors(const IntMatrix& a) {
    std::vector<Integer> out;
    for (auto& d : invariant_factors(a))
        if (d > 1) out.push_back(d);
    return out;
}

std::vector<Integer> normalize_cyclic_orders(const std::vector<Integer>& orders) {
    std::vector<Integer> kept;
    for (const auto& n : orders)
        if (n > 1) kept.push_back(n);
    IntMatrix diag(kept.size(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) diag(i, i) = kept[i];
    return torsion_factors(diag);
}

}  // namespace fiberlab
