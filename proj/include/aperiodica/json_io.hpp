#pragma once

#include <json.hpp>

#include "aperiodica/cap.hpp"

namespace aperiodica {

using Json = nlohmann::ordered_json;

// Integers fitting 53 bits are emitted as JSON numbers, larger ones as
// decimal strings.
Json bigint_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json rational_json(const Rational& r);  // [num, den]
Rational rational_from_json(const Json& j);

Json quadratic_json(const QuadraticReal& x);  // {a:[n,d], b:[n,d], d:k}
QuadraticReal quadratic_from_json(const Json& j);

Json point_json(const cap::CapPoint& pt, const cap::CapParams& params);
cap::CapPoint point_from_json(const Json& j);

}  // namespace aperiodica
