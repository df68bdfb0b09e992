#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "aperiodica/betanum.hpp"
#include "aperiodica/selfsim.hpp"
#include "aperiodica/substderive.hpp"
#include "oracle_helpers.hpp"

using namespace aperiodica;
using namespace aperiodica::cap;
using namespace aperiodica::subst;

namespace {

QuadraticReal root2_eps() { return QuadraticReal::parse("-1/sqrt(2)"); }
Window root2_window() { return {QuadraticReal(0), QuadraticReal::parse("-2+2*sqrt(2)")}; }

}  // namespace

TEST_CASE("first-return map g on the worked points") {
    QuadraticReal eps = root2_eps();
    GammaContext ctx = make_gamma_context(eps, root2_window());
    CHECK(ctx.gamma == QuadraticReal::parse("3-2*sqrt(2)"));
    CHECK(ctx.gamma_window.c == QuadraticReal(0));
    CHECK(ctx.gamma_window.len ==
          QuadraticReal(-14) - QuadraticReal(20) * eps);  // gamma * window length

    auto [g0, i0] = ctx.g(QuadraticReal(0));
    CHECK(g0 == QuadraticReal(0));
    CHECK(i0 == 0);

    auto [g3, i3] = ctx.g(-eps);
    CHECK(g3 == -eps);
    CHECK(i3 == 2);

    QuadraticReal c2 = QuadraticReal(-3) - QuadraticReal(5) * eps;
    auto [g2, i2] = ctx.g(c2);
    CHECK(g2 == QuadraticReal(-1) - QuadraticReal(2) * eps);
    CHECK(i2 == 4);
}

TEST_CASE("closure set of the worked example") {
    QuadraticReal eps = root2_eps();
    GammaContext ctx = make_gamma_context(eps, root2_window());
    auto s = closure_set(ctx);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == QuadraticReal(0));
    CHECK(s[1] == QuadraticReal(-1) - QuadraticReal(2) * eps);
    CHECK(s[2] == QuadraticReal(-3) - QuadraticReal(5) * eps);
    CHECK(s[3] == -eps);
    // seeds contained, image contained
    for (const QuadraticReal& seed : {QuadraticReal(0), ctx.f.delta1(), ctx.f.delta2()})
        CHECK(std::find(s.begin(), s.end(), seed) != s.end());
    for (const auto& x : s) {
        auto [gx, ind] = ctx.g(x);
        CHECK(ind <= 1000);
        CHECK(std::find(s.begin(), s.end(), gx) != s.end());
    }
}

TEST_CASE("derive reproduces the worked substitution") {
    auto res = derive(root2_eps(), root2_window());
    CHECK(res.gamma == QuadraticReal::parse("3-2*sqrt(2)"));
    CHECK(res.gamma_conj == QuadraticReal::parse("3+2*sqrt(2)"));
    REQUIRE(res.phi.size() == 4);
    CHECK(res.phi.image_string(0) == "002013");
    CHECK(res.phi.image_string(1) == "00202");
    CHECK(res.phi.image_string(2) == "00202013");
    CHECK(res.phi.image_string(3) == "013");
    CHECK(res.j[0] == 6);
    CHECK(res.j[1] == 5);
    CHECK(res.j[2] == 8);
    CHECK(res.j[3] == 3);
    CHECK(res.v_minus1 == 3);
    CHECK(res.v0 == 0);
    CHECK(res.psi == "AABC");
    CHECK_FALSE(res.reflected);

    // the cut points partition the window
    CHECK(res.cuts.front() == res.window.c);
    for (size_t i = 0; i + 1 < res.cuts.size(); ++i) CHECK(res.cuts[i] < res.cuts[i + 1]);
    CHECK(res.cuts.back() < res.window_end);
}

TEST_CASE("derive validates its preconditions") {
    CHECK_THROWS_AS(derive(QuadraticReal(Rational(-1, 2)), root2_window()), std::domain_error);
    CHECK_THROWS_AS(derive(root2_eps(), Window{QuadraticReal(1), QuadraticReal(Rational(4, 5))}),
                    std::domain_error);
    CHECK_THROWS_AS(derive(root2_eps(), Window{QuadraticReal(0), QuadraticReal(Rational(1, 2))}),
                    std::domain_error);  // length below max(-eps, 1+eps)
    // conjugate inside (-1,0): not a Sturm parameter
    QuadraticReal bad = QuadraticReal(Rational(-1, 2), Rational(1, 20), 2);  // conj also in (-1,0)
    CHECK_THROWS_AS(derive(bad, Window{QuadraticReal(0), QuadraticReal(Rational(99, 100))}),
                    std::domain_error);
}

TEST_CASE("iteration rounds match the printed table and extend each other") {
    auto res = derive(root2_eps(), root2_window());
    auto r0 = iterate(res.phi, res.v_minus1, res.v0, 0);
    CHECK(res.phi.render(r0.left) == "3");
    CHECK(res.phi.render(r0.right) == "0");
    auto r1 = iterate(res.phi, res.v_minus1, res.v0, 1);
    CHECK(res.phi.render(r1.left) == "013");
    CHECK(res.phi.render(r1.right) == "002013");
    auto r2 = iterate(res.phi, res.v_minus1, res.v0, 2);
    CHECK(res.phi.render(r2.left) == "00201300202013");
    CHECK(res.phi.render(r2.right) == "0020130020130020201300201300202013");

    // each round is a suffix (left) / prefix (right) of the next, 10 rounds
    PointedWord prev{{res.v_minus1}, {res.v0}};
    for (int round = 1; round <= 10; ++round) {
        PointedWord next{res.phi.apply(prev.left), res.phi.apply(prev.right)};
        REQUIRE(next.left.size() >= prev.left.size());
        REQUIRE(next.right.size() >= prev.right.size());
        CHECK(std::equal(prev.left.rbegin(), prev.left.rend(), next.left.rbegin()));
        CHECK(std::equal(prev.right.begin(), prev.right.end(), next.right.begin()));
        prev = std::move(next);
        // keep the comparison windows bounded
        if (prev.left.size() > 60000)
            prev.left.erase(prev.left.begin(), prev.left.end() - 60000);
        if (prev.right.size() > 60000) prev.right.resize(60000);
    }
}

TEST_CASE("projection of the fixed point equals the coded word") {
    auto res = derive(root2_eps(), root2_window());
    auto rep = verify_projection(res, 10000);
    CHECK(rep.ok);
    CHECK(rep.checked == 20000);
}

TEST_CASE("derivation with a power of the unit is still valid") {
    auto res = derive(root2_eps(), root2_window(), 2);
    CHECK(res.gamma == QuadraticReal::parse("3-2*sqrt(2)") * QuadraticReal::parse("3-2*sqrt(2)"));
    auto rep = verify_projection(res, 4000);
    CHECK(rep.ok);
}

TEST_CASE("binary window: derivation against the beta-integer gap word") {
    // normalize the golden-base window [-1, tau) and derive on the result
    QuadraticReal tau = QuadraticReal::tau();
    CapParams params{QuadraticReal(-1) / tau, tau};
    Window zb_window{QuadraticReal(-1), QuadraticReal(1) + tau};
    auto nr = normalize(params, zb_window);
    REQUIRE(nr.scale.sign() > 0);
    REQUIRE(nr.window.c.sign() <= 0);
    REQUIRE(nr.window.right().sign() > 0);

    auto res = derive(nr.params.eps, nr.window);
    auto rep = verify_projection(res, 5000);
    CHECK(rep.ok);

    // projected fixed point = gap word of the beta-integers (A = gap 1)
    auto v = iterate_to_length(res.phi, res.v_minus1, res.v0, 1000);
    auto zs = beta::beta_integers(beta::BetaBasis::of(tau), QuadraticReal(1000));
    REQUIRE(zs.gap_word.size() >= 1000);
    for (size_t i = 0; i < 1000; ++i) {
        char letter = res.psi[static_cast<size_t>(v.right[i])];
        char mapped = letter == 'A' ? 'A' : 'B';  // two-letter window: A and C cells
        CHECK(mapped == zs.gap_word[i]);
    }
}

TEST_CASE("conjugate below -1 is handled through the reflection reduction") {
    // eps = tau - 2 has conjugate -1/tau - 2 < -1
    QuadraticReal eps = QuadraticReal::tau() - QuadraticReal(2);
    REQUIRE(eps.conjugate() < QuadraticReal(-1));
    Window w{QuadraticReal(Rational(-1, 5)), QuadraticReal(Rational(7, 10))};
    auto res = derive(eps, w);
    CHECK(res.reflected);
    auto rep = verify_projection(res, 4000);
    CHECK(rep.ok);
}

TEST_CASE("merging letters with equal square images") {
    auto res = derive(root2_eps(), root2_window());
    auto merged = merge_letters(res.phi, 2, res.psi);
    CHECK(merged.class_rep == std::vector<int>{0, 0, 2, 3});
    REQUIRE(merged.projected.has_value());
    const Morphism& pm = *merged.projected;
    REQUIRE(pm.size() == 3);
    CHECK(pm.names == std::vector<std::string>{"A", "B", "C"});
    CHECK(pm.image_string(0) == "AABAACAABAACAABABAACAABAACAABABAAC");
    CHECK(pm.image_string(2) == "AABAACAABABAAC");
    CHECK(pm.image_string(1) == pm.image_string(0) + pm.image_string(2));

    // the projected fixed point is unchanged by the merge
    auto before = iterate_to_length(res.phi, res.v_minus1, res.v0, 10000);
    // v_-1 = 3 -> C (letter 2), v_0 = 0 -> A (letter 0) in the projected alphabet
    auto after = iterate_to_length(pm, 2, 0, 10000);
    for (size_t i = 0; i < 10000; ++i) {
        CHECK(res.psi[static_cast<size_t>(before.right[i])] == pm.names[after.right[i]][0]);
        CHECK(res.psi[static_cast<size_t>(before.left[before.left.size() - 1 - i])] ==
              pm.names[after.left[after.left.size() - 1 - i]][0]);
    }

    // fibonacci: nothing merges
    Morphism fib = Morphism::from_strings({"A", "B"}, {"AB", "A"});
    auto nofuse = merge_letters(fib, 2);
    CHECK(nofuse.class_rep == std::vector<int>{0, 1});
    CHECK(nofuse.quotient.size() == 2);
}

TEST_CASE("substitution matrix of the derived morphism") {
    auto res = derive(root2_eps(), root2_window());
    auto sm = substitution_matrix(res.phi);
    CHECK(sm.counts[0] == std::vector<long long>{3, 1, 1, 1});  // letters of 002013
    CHECK(sm.primitive);
    // its dominant eigenvalue is the conjugate unit
    CHECK(selfsim::dominant_eigenvalue(sm.counts) == res.gamma_conj);
}
