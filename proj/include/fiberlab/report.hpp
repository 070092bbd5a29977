#pragma once

#include "fiberlab/cochain.hpp"
#include "fiberlab/dual_complex.hpp"
#include "fiberlab/lattice.hpp"
#include "fiberlab/pic0.hpp"

#include <json.hpp>

#include <string>

namespace fiberlab::report {

using nlohmann::json;

// Machine-readable encodings. Every exact number is a string ("p/q" or "n").
json to_json(const RatVector& v);
json to_json(const IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const lattice::ValidationReport& r);
json to_json(const lattice::ExtensionOutcome& outcome);
json to_json(const lattice::FiniteAbelianGroup& g);
json to_json(const dual::HomologyProfile& h);
json to_json(const cochain::GroupProfile& g);
json to_json(const pic0::SemiAbelianType& t);
json to_json(const pic0::ObstructionOutcome& outcome);

const char* kind_name(lattice::ObstructionKind kind);

// Human-readable pieces.
std::string format_vector(const RatVector& v);  // "(0, 1/2)", or "0" when all zero
std::string format_element(const IntVector& v);
/// Group element in multiplicative notation over generators g1, g2, ...: "g1^2·g2", or "1".
std::string format_multiplicative(const IntVector& v);
std::string format_group(const cochain::GroupProfile& g);  // "ℤ ⊕ ℤ/2", "0"
std::string format_homology(const dual::HomologyProfile& h);
std::string format_type(const pic0::SemiAbelianType& t);

}  // namespace fiberlab::report
