#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aperiodica/approx.hpp"
#include "aperiodica/json_io.hpp"
#include "aperiodica/quadratic.hpp"
#include "aperiodica/ring.hpp"
#include "oracle_helpers.hpp"

using namespace aperiodica;

namespace {

QuadraticReal qr(long long a_num, long long a_den, long long b_num, long long b_den, long long d) {
    return QuadraticReal(Rational(a_num, a_den), Rational(b_num, b_den), d);
}

const long long kRadicands[] = {2, 3, 5, 6, 7, 10, 11, 13};

QuadraticReal random_quadratic(std::mt19937_64& rng) {
    auto r = [&](long long lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
    return QuadraticReal(Rational(r(999), 1 + (rng() % 49)), Rational(r(999), 1 + (rng() % 49)),
                         kRadicands[rng() % 8]);
}

ApproxReal interval_of(const QuadraticReal& x) {
    return ApproxReal::from_rational(x.a()) +
           ApproxReal::from_rational(x.b()) * ApproxReal::sqrt(Rational(x.is_rational() ? 0 : x.d()));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == BigInt(-4));
    CHECK(Rational(-7, 2).ceil() == BigInt(-3));
    CHECK(Rational(7, 2).floor() == BigInt(3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field operations on worked values") {
    QuadraticReal one_plus = qr(1, 1, 1, 1, 2), one_minus = qr(1, 1, -1, 1, 2);
    CHECK(one_plus * one_minus == QuadraticReal(-1));

    // eps = -1/sqrt(2); gamma = 3+4*eps is a unit: gamma * gamma' = 1
    QuadraticReal eps = QuadraticReal::parse("-1/sqrt(2)");
    QuadraticReal gamma = QuadraticReal(3) + QuadraticReal(4) * eps;
    QuadraticReal gamma_conj = QuadraticReal(3) - QuadraticReal(4) * eps;
    CHECK(gamma * gamma_conj == QuadraticReal(1));
    CHECK(gamma == QuadraticReal::parse("3-2*sqrt(2)"));

    QuadraticReal tau = QuadraticReal::tau();
    CHECK((QuadraticReal(1) + tau) + (QuadraticReal(2) - tau) == QuadraticReal(3));
    CHECK_THROWS_AS(tau / QuadraticReal(0), std::domain_error);
    CHECK_THROWS_AS(tau + QuadraticReal::sqrt_int(2), std::domain_error);
}

TEST_CASE("conjugation") {
    QuadraticReal tau = QuadraticReal::tau();
    CHECK(tau.conjugate() == qr(1, 2, -1, 2, 5));  // (1-sqrt(5))/2
    CHECK(QuadraticReal(5).conjugate() == QuadraticReal(5));
    QuadraticReal eps = QuadraticReal::parse("-1/sqrt(2)");
    QuadraticReal g = QuadraticReal(3) + QuadraticReal(4) * eps;
    CHECK(g.conjugate() == QuadraticReal(3) - QuadraticReal(4) * eps);
}

TEST_CASE("conjugation is an involutive ring homomorphism (random pairs)") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        long long d = kRadicands[rng() % 8];
        auto r = [&](long long lim) { return static_cast<long long>(rng() % (2 * lim + 1)) - lim; };
        QuadraticReal x(Rational(r(999), 1 + (rng() % 49)), Rational(r(999), 1 + (rng() % 49)), d);
        QuadraticReal y(Rational(r(999), 1 + (rng() % 49)), Rational(r(999), 1 + (rng() % 49)), d);
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    }
}

TEST_CASE("exact sign against the rational-squaring oracle") {
    CHECK(QuadraticReal::parse("3-2*sqrt(2)").sign() == 1);  // 9 > 8
    CHECK(QuadraticReal(0).sign() == 0);
    CHECK((QuadraticReal(1) - QuadraticReal::tau()).sign() == -1);  // 1 < 5 under the radical
}

TEST_CASE("sign agrees with a 256-bit interval evaluation (random)") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        QuadraticReal x = random_quadratic(rng);
        if (x.is_zero()) continue;
        CHECK(x.sign() == interval_of(x).sign(256));
    }
}

TEST_CASE("floor on worked values") {
    QuadraticReal tau = QuadraticReal::tau();
    CHECK(tau.floor() == BigInt(1));
    CHECK((QuadraticReal(3) / tau).floor() == BigInt(1));       // 3/tau ~ 1.854
    CHECK((QuadraticReal(-1) / tau).floor() == BigInt(-1));     // ~ -0.618
    CHECK(QuadraticReal(Rational(7, 2)).floor() == BigInt(3));
    CHECK(QuadraticReal(Rational(-7, 2)).floor() == BigInt(-4));
}

TEST_CASE("floor(x) <= x < floor(x)+1 exactly (random)") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 10000; ++i) {
        QuadraticReal x = random_quadratic(rng);
        BigInt f = x.floor();
        QuadraticReal fv{Rational(f)};
        CHECK((x - fv).sign() >= 0);
        CHECK((x - fv - QuadraticReal(1)).sign() < 0);
    }
}

TEST_CASE("algebraic classification") {
    AlgebraicProfile tau = QuadraticReal::tau().classify();
    CHECK(tau.minpoly.A == BigInt(1));
    CHECK(tau.minpoly.B == BigInt(-1));
    CHECK(tau.minpoly.C == BigInt(-1));
    CHECK(tau.is_quadratic_integer);
    CHECK(tau.is_pisot);
    CHECK(tau.is_unit);
    CHECK_FALSE(tau.is_sturm);

    AlgebraicProfile silver = QuadraticReal::parse("3+2*sqrt(2)").classify();
    CHECK(silver.minpoly.A == BigInt(1));
    CHECK(silver.minpoly.B == BigInt(-6));
    CHECK(silver.minpoly.C == BigInt(1));
    CHECK(silver.is_quadratic_integer);
    CHECK(silver.is_pisot);
    CHECK(silver.is_unit);

    AlgebraicProfile half_rt2 = QuadraticReal::parse("1/sqrt(2)").classify();
    CHECK(half_rt2.minpoly.A == BigInt(2));
    CHECK(half_rt2.minpoly.B == BigInt(0));
    CHECK(half_rt2.minpoly.C == BigInt(-1));
    CHECK_FALSE(half_rt2.is_quadratic_integer);
    CHECK(half_rt2.is_sturm);  // conjugate -1/sqrt(2) outside (0,1)

    CHECK_THROWS_AS(QuadraticReal(Rational(1, 2)).classify(), std::domain_error);
}

TEST_CASE("fundamental units") {
    {
        RingContext ctx = RingContext::of(QuadraticReal::parse("-1/sqrt(2)"));
        UnitMultiplier u = fundamental_unit(ctx);
        CHECK(u.gamma(ctx) == QuadraticReal::parse("3-2*sqrt(2)"));  // 3+4*eps
        CHECK(u.a == BigInt(3));
        CHECK(u.b == BigInt(2));  // gamma = 3 + 2*2*eps
    }
    {
        QuadraticReal eps = QuadraticReal(-1) / QuadraticReal::tau();
        RingContext ctx = RingContext::of(eps);
        UnitMultiplier u = fundamental_unit(ctx);
        CHECK(u.gamma(ctx) == QuadraticReal(2) - QuadraticReal::tau());  // 1/tau^2
        CHECK(u.gamma(ctx).conjugate() > QuadraticReal(1));
    }
    {
        RingContext ctx = RingContext::of(QuadraticReal::sqrt_int(3));
        UnitMultiplier u = fundamental_unit(ctx);
        CHECK(u.gamma(ctx) == QuadraticReal::parse("2-sqrt(3)"));
        auto [px, py] = oracle::pell_min(3);
        CHECK(px == 2);
        CHECK(py == 1);
    }
}

TEST_CASE("unit multipliers preserve the module in both directions") {
    for (const char* theta_text : {"-1/sqrt(2)", "tau", "sqrt(3)", "-1/2+1/3*sqrt(7)"}) {
        QuadraticReal theta = QuadraticReal::parse(theta_text);
        RingContext ctx = RingContext::of(theta);
        UnitMultiplier u = fundamental_unit(ctx);
        QuadraticReal g = u.gamma(ctx);
        CHECK(g > QuadraticReal(0));
        CHECK(g < QuadraticReal(1));
        CHECK(g.conjugate() > QuadraticReal(1));
        // gamma * theta and gamma^-1 * theta stay in Z + Z theta
        CHECK((g * theta).integer_coordinates(theta).has_value());
        CHECK((g * QuadraticReal(1)).integer_coordinates(theta).has_value());
        QuadraticReal ginv = QuadraticReal(1) / g;
        CHECK((ginv * theta).integer_coordinates(theta).has_value());
        CHECK((ginv * QuadraticReal(1)).integer_coordinates(theta).has_value());
    }
}

TEST_CASE("literal parsing and canonical formatting") {
    CHECK(QuadraticReal::parse("3/4") == QuadraticReal(Rational(3, 4)));
    CHECK(QuadraticReal::parse("1/2+3/2*sqrt(5)") == qr(1, 2, 3, 2, 5));
    CHECK(QuadraticReal::parse("tau") == QuadraticReal::tau());
    CHECK(QuadraticReal::parse("-1/sqrt(2)") == qr(0, 1, -1, 2, 2));
    CHECK(QuadraticReal::parse("-2+2*sqrt(2)") == qr(-2, 1, 2, 1, 2));
    CHECK(QuadraticReal::parse("sqrt(8)") == qr(0, 1, 2, 1, 2));       // square part folds
    CHECK(QuadraticReal::parse("sqrt(9)") == QuadraticReal(3));        // perfect square
    CHECK(QuadraticReal::parse("(1+sqrt(5))/2") == QuadraticReal::tau());
    CHECK_THROWS_AS(QuadraticReal::parse("sqrt(2)+sqrt(3)"), std::domain_error);
    CHECK_THROWS_AS(QuadraticReal::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS((void)QuadraticReal(Rational(0), Rational(1), 2000003), std::domain_error);

    // formatting round-trips through the parser
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        QuadraticReal x = random_quadratic(rng);
        CHECK(QuadraticReal::parse(x.to_string()) == x);
    }
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        QuadraticReal x = random_quadratic(rng);
        CHECK(quadratic_from_json(quadratic_json(x)) == x);
    }
    BigInt huge = BigInt::from_string("123456789012345678901234567890");
    CHECK(bigint_from_json(bigint_json(huge)) == huge);
}

TEST_CASE("interval backend: floor and renyi agreement") {
    // plastic number, root of x^3 - x - 1
    ApproxReal rho = ApproxReal::poly_root({BigInt(1), BigInt(0), BigInt(-1), BigInt(-1)},
                                           Rational(1), Rational(2));
    CHECK(rho.sign() == 1);
    CHECK(rho.floor() == BigInt(1));
    auto [lo, hi] = (rho * rho * rho - rho - ApproxReal::from_rational(Rational(1))).bounds(128);
    CHECK(lo.sign() <= 0);
    CHECK(hi.sign() >= 0);
    CHECK(hi - lo < Rational(BigInt(1), BigInt(1) << 100));

    // sqrt(5): the approximate development matches the exact quadratic one
    ApproxReal root5 = ApproxReal::sqrt(Rational(5));
    CHECK(root5.floor() == BigInt(2));
}
