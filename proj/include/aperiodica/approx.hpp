#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "aperiodica/rational.hpp"

namespace aperiodica {

// Adaptive-precision interval backend for irrational values outside the
// quadratic field. Used exclusively for sign and floor queries; every
// exact-reproduction path goes through QuadraticReal instead.
//
// A value is a refiner: given a precision request in bits it returns rational
// bounds [lo, hi] with hi - lo <= 2^-bits that contain the value.
class ApproxReal {
  public:
    using Refiner = std::function<std::pair<Rational, Rational>(int bits)>;

    static ApproxReal from_rational(Rational r);
    static ApproxReal sqrt(Rational r);  // r >= 0
    // Root of an integer polynomial (coefficients highest degree first),
    // bracketed in [lo, hi] with a sign change. Bisection refiner.
    static ApproxReal poly_root(std::vector<BigInt> coeffs, Rational lo, Rational hi);

    ApproxReal operator+(const ApproxReal& o) const;
    ApproxReal operator-(const ApproxReal& o) const;
    ApproxReal operator-() const;
    ApproxReal operator*(const ApproxReal& o) const;

    std::pair<Rational, Rational> bounds(int bits) const { return refine_(bits); }

    // Exact sign, refining until the interval excludes zero. Throws if the
    // precision cap is exhausted (the value may actually be zero).
    int sign(int max_bits = default_max_bits()) const;
    BigInt floor(int max_bits = default_max_bits()) const;

    // Cap from APERIODICA_PRECISION when set, else 4096 bits.
    static int default_max_bits();

  private:
    explicit ApproxReal(Refiner r) : refine_(std::move(r)) {}
    Refiner refine_;
};

}  // namespace aperiodica
