#pragma once

#include <json.hpp>

#include <string>

#include "iris/alpha.hpp"
#include "iris/gaussian.hpp"
#include "iris/matrix.hpp"
#include "iris/theorem2.hpp"

namespace iris {

using Json = nlohmann::ordered_json;

/// {"re": "<decimal>", "im": "<decimal>"}; values never become JSON numbers.
Json to_json(const GaussianBigInt& x);
GaussianBigInt gaussian_from_json(const Json& j);

/// Exponents as JSON numbers below 2^63, decimal strings above.
Json exponent_json(Exponent e);

/// {"rows": [[entry, ...], ...]}; real entries as integers, others as
/// [re, im]. Components beyond 64 bits are decimal strings.
Json to_json(const ComplexIntMatrix& a);
/// Accepts the form above; throws IrisError(input) on anything else.
ComplexIntMatrix matrix_from_json(const Json& j);

/// {"t", "n", "rows", "alpha_T", "S", "provenance": {"kind", "p"?, "beta"?}}.
Json to_json(const AlphaMatrix& alpha);
/// Rows are required. A theorem1/lemma1 provenance must match the rows it
/// claims to describe.
AlphaMatrix alpha_from_json(const Json& j);

Json to_json(const CompositionVector& x);
Json to_json(const ValidationReport& r, bool timing);
Json to_json(const BigintTrace& t);
Json to_json(const Theorem2Report& r, bool timing);

}  // namespace iris
