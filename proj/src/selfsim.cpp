#include "aperiodica/selfsim.hpp"

#include <algorithm>
#include <stdexcept>

namespace aperiodica {
namespace selfsim {

ConfigCheck check_selfsimilar_config(const cap::CapParams& params, const cap::Window& window) {
    params.validate();
    if (params.eps.is_rational()) return {false, "eps is rational"};
    if (!(params.eta == params.eps.conjugate()))
        return {false, "eta is not the Galois conjugate of eps"};
    if (window.c.sign() > 0 || window.right().sign() < 0)
        return {false, "window closure does not contain the origin"};
    return {true, ""};
}

SimilarityFactor find_factor(const cap::CapParams& params, const cap::Window& window) {
    ConfigCheck chk = check_selfsimilar_config(params, window);
    if (!chk.self_similar) throw std::domain_error("find_factor: " + chk.reason);

    RingContext ctx = RingContext::of(params.eta);
    const QuadraticReal zero(0), one(1);
    for (long long s = 1; s <= 200; ++s) {
        for (long long a = -s; a <= s; ++a) {
            long long rest = s - (a < 0 ? -a : a);
            for (long long b : {-rest, rest}) {
                if (b == 0 && rest != 0) continue;
                UnitMultiplier mult{BigInt(a), BigInt(b)};
                QuadraticReal gamma = mult.gamma(ctx);
                QuadraticReal conj = gamma.conjugate();
                if (!(conj > zero && conj < one)) continue;
                if (gamma > one) return {gamma, conj, BigInt(a), BigInt(b)};
                if (gamma < -one) {
                    UnitMultiplier sq = mult.mul(ctx, mult);
                    QuadraticReal g2 = sq.gamma(ctx);
                    return {g2, g2.conjugate(), sq.a, sq.b};
                }
                if (b == 0) break;
            }
        }
    }
    throw std::runtime_error("find_factor: search cap exceeded");
}

InclusionReport verify_inclusion(const SimilarityFactor& factor, const cap::CapParams& params,
                                 const cap::Window& window, size_t n_points) {
    RingContext ctx = RingContext::of(params.eta);
    UnitMultiplier mult{factor.cert_a, factor.cert_b};
    if (!(mult.gamma(ctx) == factor.gamma))
        throw std::domain_error("verify_inclusion: certificate does not match gamma");

    cap::GenResult g = cap::generate_any(params, window, n_points / 2, n_points - n_points / 2);
    InclusionReport rep{true, 0, std::nullopt};
    for (const cap::CapPoint& pt : g.points) {
        RingElem scaled = mult.apply(ctx, RingElem{pt.p, pt.q});
        QuadraticReal star = scaled.value_with(params.eps);
        ++rep.tested;
        if (!window.contains(star)) {
            rep.ok = false;
            rep.counterexample = pt;
            break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dominant eigenvalue by exact characteristic-polynomial factorization.
// ---------------------------------------------------------------------------

namespace {

// characteristic polynomial det(xI - M), monic, via Faddeev-LeVerrier
std::vector<BigInt> char_poly(const std::vector<std::vector<long long>>& m) {
    const size_t k = m.size();
    std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) M[i][j] = Rational(m[i][j]);

    std::vector<Rational> coeffs(k + 1);
    coeffs[0] = Rational(1);
    std::vector<std::vector<Rational>> N(k, std::vector<Rational>(k, Rational(0)));
    for (size_t i = 0; i < k; ++i) N[i][i] = Rational(1);
    std::vector<std::vector<Rational>> MN = N;
    for (size_t step = 1; step <= k; ++step) {
        // MN = M * N
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Rational acc(0);
                for (size_t l = 0; l < k; ++l) acc += M[i][l] * N[l][j];
                MN[i][j] = acc;
            }
        Rational tr(0);
        for (size_t i = 0; i < k; ++i) tr += MN[i][i];
        Rational c = -(tr / Rational(static_cast<long long>(step)));
        coeffs[step] = c;
        N = MN;
        for (size_t i = 0; i < k; ++i) N[i][i] += c;
    }
    std::vector<BigInt> out;
    for (const Rational& c : coeffs) {
        if (!c.is_integer()) throw std::logic_error("char_poly: non-integer coefficient");
        out.push_back(c.num());
    }
    return out;
}

// divides poly (monic, highest first) by x - r when the remainder vanishes
bool divide_linear(std::vector<BigInt>& poly, const BigInt& r) {
    std::vector<BigInt> q(poly.size() - 1);
    BigInt acc(0);
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
        acc = acc * r + poly[i];
        q[i] = acc;
    }
    if (!(acc * r + poly.back() == BigInt(0))) return false;
    poly = std::move(q);
    return true;
}

// divides poly by x^2 + p x + q when exact
bool divide_quadratic(std::vector<BigInt>& poly, const BigInt& p, const BigInt& q) {
    if (poly.size() < 3) return false;
    std::vector<BigInt> quot(poly.size() - 2, BigInt(0));
    std::vector<BigInt> rem = poly;
    for (size_t i = 0; i < quot.size(); ++i) {
        BigInt c = rem[i];
        quot[i] = c;
        rem[i + 1] -= c * p;
        rem[i + 2] -= c * q;
    }
    if (!(rem[rem.size() - 2] == BigInt(0)) || !(rem[rem.size() - 1] == BigInt(0))) return false;
    poly = std::move(quot);
    return true;
}

}  // namespace

QuadraticReal dominant_eigenvalue(const std::vector<std::vector<long long>>& counts) {
    std::vector<BigInt> poly = char_poly(counts);

    long long bound = 1;
    for (const auto& row : counts) {
        long long rs = 0;
        for (long long v : row) rs += v;
        bound = std::max(bound, rs);
    }

    std::vector<QuadraticReal> eigenvalues;
    // strip integer roots
    for (long long r = -bound; r <= bound && poly.size() > 1;) {
        if (divide_linear(poly, BigInt(r)))
            eigenvalues.push_back(QuadraticReal(r));
        else
            ++r;
    }
    // strip integer quadratic factors x^2 + p x + q
    for (long long p = -2 * bound; p <= 2 * bound && poly.size() > 2; ++p) {
        for (long long q = -bound * bound; q <= bound * bound && poly.size() > 2;) {
            if (divide_quadratic(poly, BigInt(p), BigInt(q))) {
                BigInt disc = BigInt(p) * BigInt(p) - BigInt(4) * BigInt(q);
                if (disc.sign() >= 0) {
                    QuadraticReal root(Rational(-p, 2), Rational(1, 2), disc.to_int64());
                    eigenvalues.push_back(root);
                    eigenvalues.push_back(root.conjugate());
                }
            } else {
                ++q;
            }
        }
    }
    if (poly.size() > 1)
        throw std::domain_error("dominant_eigenvalue: spectrum not within quadratic scope");
    if (eigenvalues.empty()) throw std::logic_error("dominant_eigenvalue: no eigenvalues found");
    QuadraticReal best = eigenvalues[0];
    for (const QuadraticReal& ev : eigenvalues)
        if (ev > best) best = ev;
    return best;
}

GeometricRep geometric_representation(const Morphism& m, size_t prefix_len) {
    SubstitutionMatrix sm = substitution_matrix(m);
    if (!sm.primitive) throw std::domain_error("geometric_representation: morphism not primitive");
    const size_t k = m.size();

    GeometricRep rep;
    rep.lambda = dominant_eigenvalue(sm.counts);

    // kernel of (counts - lambda I) by Gaussian elimination over the field
    std::vector<std::vector<QuadraticReal>> A(k, std::vector<QuadraticReal>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            A[i][j] = QuadraticReal(Rational(sm.counts[i][j]));
            if (i == j) A[i][j] -= rep.lambda;
        }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < k; ++col) {
        size_t pr = row;
        while (pr < k && A[pr][col].is_zero()) ++pr;
        if (pr == k) continue;
        std::swap(A[pr], A[row]);
        QuadraticReal inv = QuadraticReal(1) / A[row][col];
        for (size_t j = col; j < k; ++j) A[row][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            QuadraticReal f = A[i][col];
            for (size_t j = col; j < k; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row == k) throw std::logic_error("geometric_representation: eigenvector solve failed");
    // free column: first column not pivotal
    size_t free_col = 0;
    for (; free_col < k; ++free_col)
        if (std::find(pivot_col.begin(), pivot_col.end(), free_col) == pivot_col.end()) break;
    std::vector<QuadraticReal> y(k, QuadraticReal(0));
    y[free_col] = QuadraticReal(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = -A[r][free_col];

    // normalize all-positive with min entry 1
    if (y[0].sign() < 0)
        for (auto& v : y) v = -v;
    QuadraticReal mn = y[0];
    for (const auto& v : y) {
        if (v.sign() <= 0) throw std::logic_error("geometric_representation: eigenvector not positive");
        if (v < mn) mn = v;
    }
    for (auto& v : y) v /= mn;
    rep.lengths = y;

    // verify M y = lambda y exactly
    for (size_t i = 0; i < k; ++i) {
        QuadraticReal acc(0);
        for (size_t j = 0; j < k; ++j) acc += QuadraticReal(Rational(sm.counts[i][j])) * y[j];
        if (!(acc == rep.lambda * y[i]))
            throw std::logic_error("geometric_representation: eigenvector verification failed");
    }

    int seed = -1;
    for (size_t a = 0; a < k; ++a)
        if (m.images[a].size() >= 2 && m.images[a][0] == static_cast<int>(a)) {
            seed = static_cast<int>(a);
            break;
        }
    if (seed < 0)
        throw std::domain_error("geometric_representation: no letter with phi(a) = a...");
    std::vector<int> word = fixed_point_prefix(m, seed, prefix_len);
    rep.points.push_back(QuadraticReal(0));
    for (int a : word)
        rep.points.push_back(rep.points.back() + rep.lengths[static_cast<size_t>(a)]);
    return rep;
}

}  // namespace selfsim
}  // namespace aperiodica
