#include "aperiodica/wordcomb.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aperiodica {
namespace words {

const FactorEntry* FactorSet::find(const std::string& w) const {
    for (const auto& e : entries)
        if (e.word == w) return &e;
    return nullptr;
}

std::set<std::string> FactorSet::factor_words() const {
    std::set<std::string> s;
    for (const auto& e : entries) s.insert(e.word);
    return s;
}

FactorSet factors(const cap::CapParams& params, const cap::Window& window, int n) {
    if (n < 1) throw std::invalid_argument("factors: length must be >= 1");
    cap::SteppingFn f = cap::stepping(params, window);

    std::vector<QuadraticReal> bounds{window.c};
    for (const QuadraticReal& start : {f.delta1(), f.delta2()}) {
        QuadraticReal x = start;
        for (int j = 0; j < n; ++j) {
            bounds.push_back(x);
            x = f.step_inv(x);
        }
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
    bounds.push_back(window.right());

    FactorSet fs;
    fs.n = n;
    fs.window_len = window.len;
    std::map<std::string, size_t> seen;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        std::string w;
        QuadraticReal x = bounds[i];
        for (int j = 0; j < n; ++j) {
            w += f.letter(x);
            x = f.step(x);
        }
        if (!seen.emplace(w, i).second)
            throw std::logic_error("factors: duplicate label across cells");
        fs.entries.push_back(FactorEntry{std::move(w), bounds[i], bounds[i + 1]});
    }
    return fs;
}

std::optional<std::pair<BigInt, BigInt>> length_coordinates(const QuadraticReal& eps,
                                                            const QuadraticReal& len) {
    return len.integer_coordinates(eps);
}

std::optional<int> detect_n0(const cap::CapParams& params, const cap::Window& window, int cap) {
    size_t prev = 1;  // C(0)
    for (int n = 0; n <= cap; ++n) {
        size_t next = factors(params, window, n + 1).entries.size();
        if (next - prev == 1) return n;
        prev = next;
    }
    return std::nullopt;
}

ComplexityReport complexity(const cap::CapParams& params, const cap::Window& window, int n) {
    ComplexityReport rep;
    rep.count = factors(params, window, n).entries.size();
    if (!length_coordinates(params.eps, window.len)) {
        rep.regime = ComplexityRegime::generic;
        return rep;
    }
    rep.n0 = detect_n0(params, window);
    if (!rep.n0)
        throw std::runtime_error("complexity: n0 not found below cap despite len in Z[eps]");
    rep.regime = *rep.n0 == 0 ? ComplexityRegime::sturmian : ComplexityRegime::quasisturmian;
    return rep;
}

namespace {

std::string orbit_coding(const cap::SteppingFn& f, QuadraticReal x, int n) {
    std::string w;
    for (int j = 0; j < n; ++j) {
        w += f.letter(x);
        x = f.step(x);
    }
    return w;
}

}  // namespace

std::vector<SpecialFactor> special_factors(const cap::CapParams& params,
                                           const cap::Window& window, int n, Side side) {
    if (n < 1) throw std::invalid_argument("special_factors: length must be >= 1");
    FactorSet next = factors(params, window, n + 1);

    std::vector<std::string> specials;
    bool generic = !length_coordinates(params.eps, window.len).has_value();
    if (side == Side::left && generic) {
        // Left special factors are exactly the prefixes of the codings of the
        // two orbits entering at the discontinuities of the inverse step.
        cap::SteppingFn f = cap::stepping(params, window);
        QuadraticReal a1 = window.right() + f.dist().d2_star;  // f(delta1)
        QuadraticReal a2 = window.c + f.dist().d1_star;        // f^2(delta2)
        specials.push_back(orbit_coding(f, a1, n));
        std::string w2 = orbit_coding(f, a2, n);
        if (w2 != specials[0]) specials.push_back(w2);
    } else {
        // extension counting straight from L_{n+1}
        std::map<std::string, std::set<char>> ext;
        for (const auto& e : next.entries) {
            if (side == Side::left)
                ext[e.word.substr(1)].insert(e.word.front());
            else
                ext[e.word.substr(0, e.word.size() - 1)].insert(e.word.back());
        }
        for (const auto& [w, exts] : ext)
            if (exts.size() >= 2) specials.push_back(w);
    }
    std::sort(specials.begin(), specials.end());

    std::vector<SpecialFactor> out;
    for (const std::string& w : specials) {
        SpecialFactor sf;
        sf.word = w;
        for (char a : {'A', 'B', 'C'}) {
            std::string cand = side == Side::left ? a + w : w + a;
            if (next.find(cand)) sf.extensions += a;
        }
        out.push_back(std::move(sf));
    }
    return out;
}

QuadraticReal factor_density(const cap::CapParams& params, const cap::Window& window,
                             const std::string& w) {
    FactorSet fs = factors(params, window, static_cast<int>(w.size()));
    const FactorEntry* e = fs.find(w);
    if (!e) throw std::domain_error("factor_density: not a factor");
    return (e->hi - e->lo) / window.len;
}

size_t RauzyGraph::out_degree(size_t v) const {
    size_t d = 0;
    for (const auto& e : edges) d += e.from == v;
    return d;
}

size_t RauzyGraph::in_degree(size_t v) const {
    size_t d = 0;
    for (const auto& e : edges) d += e.to == v;
    return d;
}

RauzyGraph rauzy(const cap::CapParams& params, const cap::Window& window, int n) {
    FactorSet fn = factors(params, window, n);
    FactorSet fn1 = factors(params, window, n + 1);

    RauzyGraph g;
    g.n = n;
    std::map<std::string, size_t> index;
    for (const auto& e : fn.entries) {
        index[e.word] = g.vertices.size();
        g.vertices.push_back(e.word);
    }
    for (const auto& e : fn1.entries) {
        size_t from = index.at(e.word.substr(0, e.word.size() - 1));
        size_t to = index.at(e.word.substr(1));
        g.edges.push_back(RauzyEdge{from, to, e.word, (e.hi - e.lo) / window.len});
    }
    return g;
}

ReducedRauzyGraph reduce(const RauzyGraph& g) {
    struct Edge {
        size_t from, to;
        QuadraticReal weight;
        size_t path_len;
        bool alive = true;
    };
    std::vector<Edge> edges;
    for (const auto& e : g.edges) edges.push_back(Edge{e.from, e.to, e.weight, 1});
    std::vector<bool> vertex_alive(g.vertices.size(), true);

    for (;;) {
        bool changed = false;
        for (size_t v = 0; v < g.vertices.size(); ++v) {
            if (!vertex_alive[v]) continue;
            size_t in_idx = edges.size(), out_idx = edges.size();
            size_t ins = 0, outs = 0;
            for (size_t i = 0; i < edges.size(); ++i) {
                if (!edges[i].alive) continue;
                if (edges[i].to == v) {
                    ++ins;
                    in_idx = i;
                }
                if (edges[i].from == v) {
                    ++outs;
                    out_idx = i;
                }
            }
            if (ins != 1 || outs != 1 || in_idx == out_idx) continue;
            if (!(edges[in_idx].weight == edges[out_idx].weight))
                throw std::logic_error("reduce: conservation violated at a pass-through vertex");
            edges[in_idx].to = edges[out_idx].to;
            edges[in_idx].path_len += edges[out_idx].path_len;
            edges[out_idx].alive = false;
            vertex_alive[v] = false;
            changed = true;
        }
        if (!changed) break;
    }

    ReducedRauzyGraph r;
    std::vector<size_t> remap(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (vertex_alive[v]) {
            remap[v] = r.vertices.size();
            r.vertices.push_back(g.vertices[v]);
        }
    }
    for (const auto& e : edges)
        if (e.alive) r.edges.push_back(ReducedEdge{remap[e.from], remap[e.to], e.weight, e.path_len});
    return r;
}

// ---------------------------------------------------------------------------
// D_n breakpoints: piecewise-affine orbit of the discontinuities as a
// function of the window length over (max(-eps,1+eps), 1], with c = 0.
// ---------------------------------------------------------------------------

namespace {

struct Affine {
    QuadraticReal u, v;  // value(l) = u + v*l

    QuadraticReal at(const QuadraticReal& l) const { return u + v * l; }
    Affine operator+(const QuadraticReal& shift) const { return Affine{u + shift, v}; }
    Affine operator-(const Affine& o) const { return Affine{u - o.u, v - o.v}; }
};

struct Piece {
    QuadraticReal lo, hi;
    Affine g;
};

// root of diff == 0 strictly inside (lo, hi), if any; an identically zero
// diff means the orbit point sits on the boundary for every length (it then
// belongs to the boundary's own cell, no cut needed)
std::optional<QuadraticReal> root_in(const Affine& diff, const QuadraticReal& lo,
                                     const QuadraticReal& hi) {
    if (diff.v.is_zero()) return std::nullopt;
    QuadraticReal r = -diff.u / diff.v;
    if (r > lo && r < hi) return r;
    return std::nullopt;
}

bool identically_zero(const Affine& diff) { return diff.u.is_zero() && diff.v.is_zero(); }

}  // namespace

std::vector<QuadraticReal> dn_breakpoints(const QuadraticReal& eps, int n) {
    if (eps >= QuadraticReal(0) || eps <= QuadraticReal(-1))
        throw std::domain_error("dn_breakpoints: eps must lie in (-1,0)");
    QuadraticReal lmin = -eps;
    if (QuadraticReal(1) + eps > lmin) lmin = QuadraticReal(1) + eps;

    const Affine delta1{QuadraticReal(-1) - eps, QuadraticReal(1)};
    const Affine delta2{-eps, QuadraticReal(0)};
    const QuadraticReal da = QuadraticReal(1) + eps;           // A-shift
    const QuadraticReal db = QuadraticReal(1) + eps + eps;     // B-shift
    const QuadraticReal dc = eps;                              // C-shift

    std::vector<QuadraticReal> roots;
    for (int which = 0; which < 2; ++which) {
        const Affine& start = which == 0 ? delta1 : delta2;
        const Affine& target = which == 0 ? delta2 : delta1;
        // Collisions of the boundary set need f^k(delta1) = delta2 for
        // k <= n-1 and f^k(delta2) = delta1 for k <= n; the extra level on
        // the second orbit accounts for c = f(delta2).
        const int kmax = which == 0 ? n - 1 : n;
        std::vector<Piece> pieces{Piece{lmin, QuadraticReal(1), start}};
        for (int k = 0; k <= kmax; ++k) {
            for (const Piece& pc : pieces) {
                Affine diff = pc.g - target;
                if (identically_zero(diff))
                    throw std::logic_error("dn_breakpoints: an entire length interval degenerates");
                if (auto r = root_in(diff, pc.lo, pc.hi)) roots.push_back(*r);
                // include endpoints: solutions at l = 1 (and piece joints) count too
                if (diff.at(pc.hi).is_zero()) roots.push_back(pc.hi);
            }
            if (k == kmax) break;
            std::vector<Piece> next;
            for (const Piece& pc : pieces) {
                std::vector<QuadraticReal> cuts{pc.lo};
                for (const Affine* d : {&delta1, &delta2})
                    if (auto r = root_in(pc.g - *d, pc.lo, pc.hi)) cuts.push_back(*r);
                cuts.push_back(pc.hi);
                std::sort(cuts.begin(), cuts.end());
                for (size_t i = 0; i + 1 < cuts.size(); ++i) {
                    if (!(cuts[i] < cuts[i + 1])) continue;
                    QuadraticReal mid = (cuts[i] + cuts[i + 1]) / QuadraticReal(2);
                    QuadraticReal gv = pc.g.at(mid);
                    QuadraticReal shift = dc;
                    if (gv < delta1.at(mid))
                        shift = da;
                    else if (gv < delta2.at(mid))
                        shift = db;
                    next.push_back(Piece{cuts[i], cuts[i + 1], pc.g + shift});
                }
            }
            pieces = std::move(next);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

std::set<std::string> scan_factors_of(const std::string& word, int n) {
    std::set<std::string> out;
    if (static_cast<int>(word.size()) < n) return out;
    for (size_t i = 0; i + n <= word.size(); ++i) out.insert(word.substr(i, n));
    return out;
}

}  // namespace

SturmianReport sturmian_checks(const QuadraticReal& alpha, const QuadraticReal& beta, int n) {
    if (!(alpha > QuadraticReal(0) && alpha < QuadraticReal(1)) || alpha.is_rational())
        throw std::domain_error("sturmian_checks: slope must be irrational in (0,1)");
    const long N = 40L * n + 2000;
    std::string seg = cap::mechanical(alpha, beta, cap::MechanicalKind::upper, -N, 2 * N);
    std::set<std::string> fs = scan_factors_of(seg, n);

    QuadraticReal na = QuadraticReal(Rational(n)) * alpha;
    BigInt lo = na.floor(), hi = na.ceil();

    SturmianReport rep;
    rep.factor_count = fs.size();
    rep.ones_count_ok = true;
    rep.balanced = true;
    long long min_ones = n + 1, max_ones = -1;
    size_t prefixed_by_one = 0;
    for (const std::string& w : fs) {
        long long ones = std::count(w.begin(), w.end(), '1');
        if (!(BigInt(ones) == lo || BigInt(ones) == hi)) rep.ones_count_ok = false;
        min_ones = std::min(min_ones, ones);
        max_ones = std::max(max_ones, ones);
        if (w.front() == '1') ++prefixed_by_one;
    }
    rep.balanced = max_ones - min_ones <= 1;
    rep.prefix_count_ok = BigInt(static_cast<long long>(prefixed_by_one)) == hi;

    std::string window_word =
        cap::mechanical(alpha, -alpha, cap::MechanicalKind::upper, -n + 1, 2 * static_cast<size_t>(n));
    rep.window_factors_ok = scan_factors_of(window_word, n) == fs;
    return rep;
}

}  // namespace words
}  // namespace aperiodica
