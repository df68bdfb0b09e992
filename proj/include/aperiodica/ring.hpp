#pragma once

#include "aperiodica/quadratic.hpp"

namespace aperiodica {

// The Z-module Z[theta] = Z + Z*theta for a quadratic irrational theta with
// M*theta^2 = K*theta + L (primitive integer coefficients, M > 0).
struct RingContext {
    QuadraticReal theta;
    BigInt M, K, L;

    static RingContext of(const QuadraticReal& theta);
};

// Element p + q*theta with integer coordinates. The coordinate map is a
// bijection for irrational theta.
struct RingElem {
    BigInt p, q;

    QuadraticReal value(const RingContext& ctx) const {
        return QuadraticReal(Rational(p)) + QuadraticReal(Rational(q)) * ctx.theta;
    }
    // Same coordinates evaluated against another generator (the star map).
    QuadraticReal value_with(const QuadraticReal& gen) const {
        return QuadraticReal(Rational(p)) + QuadraticReal(Rational(q)) * gen;
    }

    RingElem operator+(const RingElem& o) const { return {p + o.p, q + o.q}; }
    RingElem operator-(const RingElem& o) const { return {p - o.p, q - o.q}; }
    RingElem operator-() const { return {-p, -q}; }
    bool operator==(const RingElem& o) const = default;
};

// gamma = a + M*b*theta; such numbers satisfy gamma * Z[theta] <= Z[theta].
struct UnitMultiplier {
    BigInt a, b;

    QuadraticReal gamma(const RingContext& ctx) const {
        return QuadraticReal(Rational(a)) + QuadraticReal(Rational(ctx.M * b)) * ctx.theta;
    }
    // norm over the module: a^2 + K a b - L M b^2
    BigInt norm(const RingContext& ctx) const {
        return a * a + ctx.K * a * b - ctx.L * ctx.M * b * b;
    }
    RingElem apply(const RingContext& ctx, const RingElem& x) const {
        return {a * x.p + b * x.q * ctx.L, a * x.q + ctx.M * b * x.p + b * x.q * ctx.K};
    }
    UnitMultiplier mul(const RingContext& ctx, const UnitMultiplier& o) const {
        return {a * o.a + ctx.M * ctx.L * b * o.b, a * o.b + o.a * b + ctx.K * b * o.b};
    }
    // inverse, valid when |norm| = 1
    UnitMultiplier inverse(const RingContext& ctx) const;
    UnitMultiplier negated() const { return {-a, -b}; }
};

// Finds gamma in (0,1) with conjugate > 1 and gamma * Z[theta] = Z[theta],
// by solving the Pell-type equation a^2 + K a b - L M b^2 = +-1 and moving
// the fundamental solution into the required range (squaring when the
// fundamental norm is -1).
UnitMultiplier fundamental_unit(const RingContext& ctx);

}  // namespace aperiodica
