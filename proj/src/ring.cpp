#include "aperiodica/ring.hpp"

#include <stdexcept>

namespace aperiodica {

RingContext RingContext::of(const QuadraticReal& theta) {
    RingContext ctx;
    ctx.theta = theta;
    theta.quadratic_equation(ctx.M, ctx.K, ctx.L);
    return ctx;
}

UnitMultiplier UnitMultiplier::inverse(const RingContext& ctx) const {
    BigInt n = norm(ctx);
    if (!(n == BigInt(1) || n == BigInt(-1)))
        throw std::domain_error("UnitMultiplier: inverse requires |norm| = 1");
    // (a + Mb theta)^(-1) = (a + Kb - Mb theta) / norm
    BigInt ia = (a + ctx.K * b) / n;
    BigInt ib = -b / n;
    return {ia, ib};
}

UnitMultiplier fundamental_unit(const RingContext& ctx) {
    const BigInt one(1), minus_one(-1);
    // Search a^2 + K a b - L M b^2 = +-1 with b = 1, 2, ... For each b the
    // equation is quadratic in a; test whether the discriminant is a square.
    UnitMultiplier found{BigInt(0), BigInt(0)};
    bool have = false;
    const long long cap = 2000000;
    for (long long bb = 1; bb <= cap && !have; ++bb) {
        BigInt b(bb);
        for (int target : {1, -1}) {
            // a^2 + (K b) a - (L M b^2 + target) = 0
            BigInt B = ctx.K * b;
            BigInt C = -(ctx.L * ctx.M * b * b + BigInt(target));
            BigInt disc = B * B - BigInt(4) * C;
            if (disc.sign() < 0) continue;
            BigInt s = isqrt(disc);
            if (s * s != disc) continue;
            for (const BigInt& num : {-B + s, -B - s}) {
                if (num % BigInt(2) != BigInt(0)) continue;
                BigInt a = num / BigInt(2);
                UnitMultiplier u{a, b};
                QuadraticReal g = u.gamma(ctx);
                if (g.is_zero() || g == QuadraticReal(1) || g == QuadraticReal(-1)) continue;
                found = u;
                have = true;
                break;
            }
            if (have) break;
        }
    }
    if (!have) throw std::runtime_error("fundamental_unit: search cap exceeded");

    // Move into range: w > 1 with norm +1, then gamma = w^{-1} in (0,1).
    UnitMultiplier u = found;
    QuadraticReal val = u.gamma(ctx);
    if (val.sign() < 0) {
        u = u.negated();
        val = u.gamma(ctx);
    }
    if (val < QuadraticReal(1)) u = u.inverse(ctx);  // |norm|=1 here by construction
    if (u.gamma(ctx).sign() < 0) u = u.negated();
    if (u.norm(ctx) == minus_one) u = u.mul(ctx, u);
    if (u.norm(ctx) != one) throw std::runtime_error("fundamental_unit: norm normalization failed");
    UnitMultiplier gamma = u.inverse(ctx);
    if (gamma.gamma(ctx).sign() < 0) gamma = gamma.negated();

    QuadraticReal g = gamma.gamma(ctx);
    if (!(g > QuadraticReal(0) && g < QuadraticReal(1) && g.conjugate() > QuadraticReal(1)))
        throw std::runtime_error("fundamental_unit: range normalization failed");
    return gamma;
}

}  // namespace aperiodica
