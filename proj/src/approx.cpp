#include "aperiodica/approx.hpp"

#include <cstdlib>
#include <stdexcept>

namespace aperiodica {

namespace {

Rational pow2_inv(int bits) { return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(bits)); }

Rational eval_poly(const std::vector<BigInt>& c, const Rational& x) {
    Rational acc(0);
    for (const BigInt& ci : c) acc = acc * x + Rational(ci);
    return acc;
}

}  // namespace

int ApproxReal::default_max_bits() {
    static int cached = [] {
        if (const char* env = std::getenv("APERIODICA_PRECISION")) {
            int v = std::atoi(env);
            if (v >= 8) return v;
        }
        return 4096;
    }();
    return cached;
}

ApproxReal ApproxReal::from_rational(Rational r) {
    return ApproxReal([r](int) { return std::make_pair(r, r); });
}

ApproxReal ApproxReal::sqrt(Rational r) {
    if (r.sign() < 0) throw std::domain_error("ApproxReal::sqrt: negative");
    return ApproxReal([r](int bits) {
        // scale by 4^k so the integer square root carries k extra bits
        unsigned k = static_cast<unsigned>(bits + 2);
        BigInt scaled_num = (r.num() << (2 * k)) * r.den();
        BigInt lo_num = isqrt(scaled_num);
        BigInt den = r.den() << k;
        Rational lo(lo_num, den);
        Rational hi(lo_num + BigInt(1), den);
        return std::make_pair(lo, hi);
    });
}

ApproxReal ApproxReal::poly_root(std::vector<BigInt> coeffs, Rational lo, Rational hi) {
    Rational flo = eval_poly(coeffs, lo);
    Rational fhi = eval_poly(coeffs, hi);
    if (flo.sign() == 0 || fhi.sign() == 0 || flo.sign() == fhi.sign())
        throw std::domain_error("ApproxReal::poly_root: bracket without sign change");
    int slo = flo.sign();
    return ApproxReal([coeffs, lo, hi, slo](int bits) {
        Rational a = lo, b = hi;
        Rational eps = pow2_inv(bits);
        while (b - a > eps) {
            Rational mid = (a + b) / Rational(2);
            int sm = eval_poly(coeffs, mid).sign();
            if (sm == 0) return std::make_pair(mid, mid);
            if (sm == slo)
                a = mid;
            else
                b = mid;
        }
        return std::make_pair(a, b);
    });
}

ApproxReal ApproxReal::operator+(const ApproxReal& o) const {
    Refiner a = refine_, b = o.refine_;
    return ApproxReal([a, b](int bits) {
        auto [alo, ahi] = a(bits + 1);
        auto [blo, bhi] = b(bits + 1);
        return std::make_pair(alo + blo, ahi + bhi);
    });
}

ApproxReal ApproxReal::operator-() const {
    Refiner a = refine_;
    return ApproxReal([a](int bits) {
        auto [lo, hi] = a(bits);
        return std::make_pair(-hi, -lo);
    });
}

ApproxReal ApproxReal::operator-(const ApproxReal& o) const { return *this + (-o); }

ApproxReal ApproxReal::operator*(const ApproxReal& o) const {
    Refiner a = refine_, b = o.refine_;
    return ApproxReal([a, b](int bits) {
        // crude magnitude bound first, then refine enough for the product
        auto [alo0, ahi0] = a(4);
        auto [blo0, bhi0] = b(4);
        auto mag = [](const Rational& lo, const Rational& hi) {
            Rational m = lo.abs() > hi.abs() ? lo.abs() : hi.abs();
            return m + Rational(1);
        };
        size_t abits = mag(blo0, bhi0).num().bit_length() + 2;
        size_t bbits = mag(alo0, ahi0).num().bit_length() + 2;
        auto [alo, ahi] = a(bits + static_cast<int>(abits));
        auto [blo, bhi] = b(bits + static_cast<int>(bbits));
        Rational c1 = alo * blo, c2 = alo * bhi, c3 = ahi * blo, c4 = ahi * bhi;
        Rational lo = c1, hi = c1;
        for (const Rational& c : {c2, c3, c4}) {
            if (c < lo) lo = c;
            if (c > hi) hi = c;
        }
        return std::make_pair(lo, hi);
    });
}

int ApproxReal::sign(int max_bits) const {
    for (int bits = 16; bits <= max_bits; bits *= 2) {
        auto [lo, hi] = refine_(bits);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        if (lo.sign() == 0 && hi.sign() == 0) return 0;
    }
    throw std::runtime_error("ApproxReal::sign: precision cap exhausted (value may be zero)");
}

BigInt ApproxReal::floor(int max_bits) const {
    for (int bits = 16; bits <= max_bits; bits *= 2) {
        auto [lo, hi] = refine_(bits);
        BigInt flo = lo.floor(), fhi = hi.floor();
        if (flo == fhi) return flo;
    }
    throw std::runtime_error("ApproxReal::floor: precision cap exhausted (value may be integral)");
}

}  // namespace aperiodica
