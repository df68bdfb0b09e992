#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "aperiodica/betanum.hpp"
#include "aperiodica/wordcomb.hpp"
#include "oracle_helpers.hpp"

using namespace aperiodica;
using namespace aperiodica::beta;

namespace {

BetaBasis tau_basis() { return BetaBasis::of(QuadraticReal::tau()); }
BetaBasis silver_basis() { return BetaBasis::of(QuadraticReal::parse("1+sqrt(2)")); }
BetaBasis sqrt3_basis() { return BetaBasis::of(QuadraticReal::parse("2+sqrt(3)")); }
// positive root of x^2 = 3x - 1
BetaBasis minus_basis() { return BetaBasis::of(QuadraticReal(Rational(3, 2), Rational(1, 2), 5)); }

}  // namespace

TEST_CASE("greedy expansions of worked values") {
    BetaBasis two = BetaBasis::of(QuadraticReal(2));
    CHECK(greedy_expand(QuadraticReal(6), two).to_string() == "110");
    CHECK(greedy_expand(QuadraticReal(0), two).to_string() == "0");

    BetaBasis tb = tau_basis();
    CHECK(greedy_expand(QuadraticReal(2), tb, 8).to_string() == "10.01");
    CHECK(greedy_expand(QuadraticReal::tau(), tb).to_string() == "10");
    CHECK_THROWS_AS(greedy_expand(QuadraticReal(-1), tb), std::domain_error);
}

TEST_CASE("renyi development of 1") {
    CHECK(renyi_development(tau_basis()).to_string() == "11");
    CHECK(renyi_development(minus_basis()).to_string() == "2(1)*");
    CHECK(renyi_development(BetaBasis::of(QuadraticReal(2))).to_string() == "2");
    CHECK(renyi_development(silver_basis()).to_string() == "21");    // beta^2 = 2 beta + 1
    CHECK(renyi_development(sqrt3_basis()).to_string() == "3(2)*");  // beta^2 = 4 beta - 1

    // quadratic non-Pisot: no eventual period, flagged non-exact
    auto dev = renyi_development(BetaBasis::of(QuadraticReal::parse("sqrt(5)")), 64);
    CHECK_FALSE(dev.exact);
    CHECK(dev.preperiod.size() == 64);
}

TEST_CASE("the development identity sum t_i beta^-i = 1, symbolically") {
    for (const BetaBasis& basis :
         {tau_basis(), silver_basis(), sqrt3_basis(), minus_basis(),
          BetaBasis::of(QuadraticReal(Rational(3, 2), Rational(1, 2), 13))}) {
        RenyiDev dev = renyi_development(basis);
        REQUIRE(dev.exact);
        QuadraticReal binv = QuadraticReal(1) / basis.beta;
        QuadraticReal sum(0), place = binv;
        for (int t : dev.preperiod) {
            sum += QuadraticReal(t) * place;
            place *= binv;
        }
        if (!dev.period.empty()) {
            QuadraticReal per(0), pp = QuadraticReal(1);
            for (int t : dev.period) {
                pp *= binv;
                per += QuadraticReal(t) * pp;
            }
            // place/binv = beta^-(preperiod length); tail ratio beta^-|period|
            sum += (place / binv) * per / (QuadraticReal(1) - pp);
        }
        CHECK(sum == QuadraticReal(1));
    }
}

TEST_CASE("parry admissibility on worked strings") {
    BetaBasis tb = tau_basis();
    CHECK(parry_admissible({1, 0, 1}, tb));
    CHECK_FALSE(parry_admissible({1, 1}, tb));
    CHECK(parry_admissible({1}, tb));
    CHECK(parry_admissible({0}, tb));
    CHECK_FALSE(parry_admissible({1, 0, 1, 1}, tb));  // tau^3+tau+1 = tau^4, not greedy

    BetaBasis mb = minus_basis();
    CHECK(parry_admissible({2, 1}, mb));
    CHECK_FALSE(parry_admissible({2, 2}, mb));
    CHECK_FALSE(parry_admissible({2, 1, 1, 1, 2}, mb));  // >= (m-1)(m-n-1)^s(m-n)
}

TEST_CASE("admissible strings are exactly the greedy expansions (random)") {
    std::mt19937_64 rng(4242);
    for (const BetaBasis& basis : {tau_basis(), silver_basis(), sqrt3_basis()}) {
        int dmax = static_cast<int>(basis.beta.ceil().to_int64()) - 1;
        int tested = 0;
        for (int it = 0; tested < 350; ++it) {
            size_t len = 1 + rng() % 10;
            std::vector<int> digits;
            for (size_t i = 0; i < len; ++i)
                digits.push_back(static_cast<int>(rng() % (dmax + 1)));
            while (!digits.empty() && digits.front() == 0) digits.erase(digits.begin());
            if (digits.empty()) continue;
            ++tested;
            QuadraticReal value(0);
            for (int d : digits) value = value * basis.beta + QuadraticReal(d);
            DigitString greedy = greedy_expand(value, basis);
            bool greedy_matches =
                greedy.exponent == static_cast<long>(digits.size()) - 1 && greedy.digits == digits;
            CHECK(parry_admissible(digits, basis) == greedy_matches);
        }
    }
}

TEST_CASE("round trip: value(greedy_expand(x)) == x over beta-integer values") {
    size_t total = 0;
    for (const BetaBasis& basis : {tau_basis(), silver_basis(), sqrt3_basis()}) {
        auto zs = beta_integers(basis, QuadraticReal(500));
        for (const auto& v : zs.values) {
            DigitString ds = greedy_expand(v, basis);
            CHECK(ds.value(basis) == v);
            ++total;
        }
    }
    CHECK(total >= 1000);
}

TEST_CASE("beta-integers of the golden base") {
    auto zs = beta_integers(tau_basis(), QuadraticReal(30));
    QuadraticReal tau = QuadraticReal::tau();
    REQUIRE(zs.values.size() > 6);
    CHECK(zs.values[0] == QuadraticReal(0));
    CHECK(zs.values[1] == QuadraticReal(1));
    CHECK(zs.values[2] == tau);
    CHECK(zs.values[3] == tau * tau);
    CHECK(zs.values[4] == tau * tau + QuadraticReal(1));
    // first gaps 1, 1/tau, 1, 1, 1/tau
    CHECK(zs.gap_word.substr(0, 5) == "ABAAB");
    CHECK(zs.gap_values[0] == QuadraticReal(1));
    CHECK(zs.gap_values[1] == QuadraticReal(1) / tau);

    // gap set {1, 1/beta} for beta^2 = m beta + 1
    auto silver = beta_integers(silver_basis(), QuadraticReal(40));
    CHECK(silver.gap_values ==
          std::vector<QuadraticReal>{QuadraticReal(1), QuadraticReal(1) / silver_basis().beta});

    CHECK_THROWS_AS(
        beta_integers(BetaBasis::of(QuadraticReal::parse("sqrt(5)")), QuadraticReal(10)),
        std::domain_error);
}

TEST_CASE("self-similarity: beta * Z_beta stays inside Z_beta") {
    for (const BetaBasis& basis : {tau_basis(), minus_basis()}) {
        auto zs = beta_integers(basis, QuadraticReal(80));
        QuadraticReal cutoff = QuadraticReal(80) / basis.beta;
        for (const auto& v : zs.values) {
            if (v > cutoff) break;
            CHECK(std::binary_search(zs.values.begin(), zs.values.end(), basis.beta * v));
        }
    }
}

TEST_CASE("gap word equals the substitution fixed point") {
    for (const BetaBasis& basis : {tau_basis(), silver_basis(), minus_basis()}) {
        auto zs = beta_integers(basis, QuadraticReal(1000));
        REQUIRE(zs.gap_word.size() >= 1000);
        Morphism m = beta_substitution(basis);
        auto fixed = fixed_point_prefix(m, 0, 1000);
        for (size_t i = 0; i < 1000; ++i)
            CHECK(zs.gap_word[i] == "AB"[static_cast<size_t>(fixed[i])]);
    }
}

TEST_CASE("substitutions for the three base families") {
    Morphism golden = beta_substitution(tau_basis());
    CHECK(golden.image_string(0) == "AB");
    CHECK(golden.image_string(1) == "A");
    Morphism silver = beta_substitution(silver_basis());
    CHECK(silver.image_string(0) == "AAB");
    CHECK(silver.image_string(1) == "A");
    Morphism minus = beta_substitution(minus_basis());
    CHECK(minus.image_string(0) == "AAB");
    CHECK(minus.image_string(1) == "AB");
}

TEST_CASE("cap equivalence windows and the non-unit obstruction") {
    auto tau_eq = cap_equivalence(tau_basis());
    REQUIRE(tau_eq.window_exists);
    CHECK(tau_eq.window.c == QuadraticReal(-1));
    CHECK(tau_eq.window.right() == QuadraticReal::tau());  // -1/beta'

    auto minus_eq = cap_equivalence(minus_basis());
    REQUIRE(minus_eq.window_exists);
    CHECK(minus_eq.window.c == QuadraticReal(0));
    CHECK(minus_eq.window.right() == minus_basis().beta);  // 1/beta' = beta for the unit

    // beta^2 = 2 beta + 2: Pisot but not a unit
    auto eq = cap_equivalence(BetaBasis::of(QuadraticReal::parse("1+sqrt(3)")));
    CHECK_FALSE(eq.window_exists);
    CHECK(eq.obstruction.find("unit") != std::string::npos);

    CHECK_THROWS_AS(cap_equivalence(BetaBasis::of(QuadraticReal::parse("sqrt(5)"))),
                    std::domain_error);
}

TEST_CASE("positive beta-integers coincide with the cut-and-project set") {
    for (const BetaBasis& basis : {tau_basis(), minus_basis()}) {
        auto eq = cap_equivalence(basis);
        REQUIRE(eq.window_exists);
        cap::CapParams params{basis.beta.conjugate(), basis.beta};
        auto zs = beta_integers(basis, QuadraticReal(200));
        auto g = cap::generate_any(params, eq.window, 10, zs.values.size() + 40);
        std::vector<QuadraticReal> cap_vals;
        for (const auto& pt : g.points) {
            QuadraticReal v = pt.value(params.eta);
            if (v.sign() >= 0 && !(v > QuadraticReal(200))) cap_vals.push_back(v);
        }
        CHECK(cap_vals == zs.values);
    }
}

TEST_CASE("approximate development matches the exact quadratic iteration") {
    auto exact = renyi_development(BetaBasis::of(QuadraticReal::parse("sqrt(5)")), 40);
    ApproxReal b = ApproxReal::sqrt(Rational(5));
    auto approx = renyi_development_approx(b, 40);
    CHECK_FALSE(approx.exact);
    REQUIRE(approx.preperiod.size() == 40);
    for (size_t i = 0; i < 40; ++i) CHECK(approx.preperiod[i] == exact.preperiod[i]);
}
