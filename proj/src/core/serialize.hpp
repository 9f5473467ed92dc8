#pragma once

#include <string>

#include <json.hpp>

#include "ck_algebra.hpp"
#include "ck_extensions.hpp"
#include "cohomology.hpp"

namespace ckcoh {

using Json = nlohmann::ordered_json;

// Line format: header "dim N family omega..." ("dim 0 none" for algebras
// without CK metadata), then "i j k num/den" per nonzero constant with
// i < j. Lines starting with '#' are ignored by the parser.
std::string algebra_to_text(const LieAlgebra& g);
LieAlgebra algebra_from_text(const std::string& text);
Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);
// omega as an array of "num/den" strings.
Json omega_json(const OmegaVector& w);

// Accepts either format.
LieAlgebra parse_algebra(const std::string& text);

// Header "dim", then "i j num/den".
std::string cochain_to_text(const TwoCochain& xi);
TwoCochain cochain_from_text(const std::string& text);
Json cochain_to_json(const TwoCochain& xi);
TwoCochain cochain_from_json(const Json& j);

// Header "rows cols", then "row col num/den".
std::string matrix_to_text(const SparseMatrix& m);
SparseMatrix matrix_from_text(const std::string& text);
Json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const Json& j);

// Keys eta, tau, alpha, beta, gamma; two-index keys are "a,b"; values are
// rational strings; absent keys and entries mean zero.
Json coefficients_to_json(const BasicCoefficients& c);
BasicCoefficients coefficients_from_json(const Json& j);

Json classification_to_json(const ExtensionClassification& c);
Json contraction_to_json(const ContractionReport& r);
Json theorem_to_json(const TheoremReport& r);
Json table_to_json(const std::vector<TableRow>& rows);

}  // namespace ckcoh
