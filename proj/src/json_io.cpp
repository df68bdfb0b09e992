#include "aperiodica/json_io.hpp"

namespace aperiodica {

Json bigint_json(const BigInt& v) {
    if (v.fits_int64()) {
        long long x = v.to_int64();
        if (x <= (1ll << 53) && x >= -(1ll << 53)) return Json(x);
    }
    return Json(v.to_string());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    return BigInt(j.get<long long>());
}

Json rational_json(const Rational& r) { return Json::array({bigint_json(r.num()), bigint_json(r.den())}); }

Rational rational_from_json(const Json& j) {
    return Rational(bigint_from_json(j.at(0)), bigint_from_json(j.at(1)));
}

Json quadratic_json(const QuadraticReal& x) {
    Json j;
    j["a"] = rational_json(x.a());
    j["b"] = rational_json(x.b());
    j["d"] = x.d();
    return j;
}

QuadraticReal quadratic_from_json(const Json& j) {
    return QuadraticReal(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                         j.at("d").get<long long>());
}

Json point_json(const cap::CapPoint& pt, const cap::CapParams& params) {
    Json j;
    j["p"] = bigint_json(pt.p);
    j["q"] = bigint_json(pt.q);
    j["value"] = quadratic_json(pt.value(params.eta));
    j["star"] = quadratic_json(pt.star(params.eps));
    return j;
}

cap::CapPoint point_from_json(const Json& j) {
    return cap::CapPoint{bigint_from_json(j.at("p")), bigint_from_json(j.at("q"))};
}

}  // namespace aperiodica
