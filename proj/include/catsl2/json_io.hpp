#pragma once

#include <string>

#include "json.hpp"

#include "catsl2/geomdim.hpp"
#include "catsl2/homalg.hpp"
#include "catsl2/homvanish.hpp"
#include "catsl2/morclass.hpp"
#include "catsl2/nilhecke.hpp"
#include "catsl2/qcore.hpp"
#include "catsl2/uqsl2.hpp"

namespace catsl2 {

using Json = nlohmann::json;

// All serializers produce key-sorted JSON, so dump() output is byte-stable
// for equal values. Integer coefficients must fit in 64 bits; anything
// larger throws std::range_error rather than silently losing precision.

// ---------------------------------------------------------------------------
// Laurent polynomials: array of [exponent, coefficient], exponents ascending
// ---------------------------------------------------------------------------

[[nodiscard]] Json laurent_to_json(const LaurentPoly& p);
[[nodiscard]] LaurentPoly laurent_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Multivariate polynomials: array of {exponents, coeff} ordered by exponents
// ---------------------------------------------------------------------------

[[nodiscard]] Json multi_poly_to_json(const MultiPoly& f);
// nvars is explicit because the zero polynomial has no terms to infer it from.
[[nodiscard]] MultiPoly multi_poly_from_json(const Json& j, int nvars);

// ---------------------------------------------------------------------------
// Weight-space operators: matrix of Laurent entries, rows = target basis
// ---------------------------------------------------------------------------

[[nodiscard]] Json weight_operator_to_json(const WeightOperator& op);
[[nodiscard]] WeightOperator weight_operator_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Morphism classes: {mu, N, target_weight, terms:[{a, b, poly}]} by (a, b)
// ---------------------------------------------------------------------------

[[nodiscard]] Json mor_class_to_json(const MorClass& c);
[[nodiscard]] MorClass mor_class_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Graded complexes: objects as dims + labels, differentials as sparse
// [row, col, value] triplets per degree; rationals rendered as strings
// ---------------------------------------------------------------------------

[[nodiscard]] Json graded_vs_to_json(const GradedVS& v);
[[nodiscard]] GradedVS graded_vs_from_json(const Json& j);

[[nodiscard]] Json graded_complex_to_json(const GradedComplex& c);
[[nodiscard]] GradedComplex graded_complex_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Report payloads (output only)
// ---------------------------------------------------------------------------

[[nodiscard]] Json gap_report_to_json(const GapReport& row);
[[nodiscard]] Json convolution_report_to_json(const ConvolutionReport& report);

[[nodiscard]] Json bundle_expr_to_json(const BundleExpr& e);
[[nodiscard]] Json canonical_ledger_to_json(const CanonicalLedger& ledger);

}  // namespace catsl2
