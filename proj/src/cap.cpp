#include "aperiodica/cap.hpp"

#include <stdexcept>

namespace aperiodica {
namespace cap {

void CapParams::validate() const {
    if (eps.is_rational() || eta.is_rational())
        throw std::domain_error("cap: eps and eta must be irrational");
    if (eps == eta) throw std::domain_error("cap: eps and eta must be distinct");
}

DistancePair distances(const QuadraticReal& eps, const QuadraticReal& len) {
    if (len.sign() <= 0) throw std::domain_error("distances: window length must be positive");
    if (eps >= QuadraticReal(0) || eps <= QuadraticReal(-1))
        throw std::domain_error("distances: eps must lie in (-1,0); normalize first");
    if (len > QuadraticReal(1)) throw std::domain_error("distances: length > 1; normalize first");

    QuadraticReal d1s = QuadraticReal(1) + eps;
    QuadraticReal d2s = eps;
    GapCoords d1{BigInt(1), BigInt(1)}, d2{BigInt(0), BigInt(1)};
    int level = 0;
    const int cap = 100000;
    for (;;) {
        QuadraticReal sum = d1s + d2s;
        int ssum = sum.sign();
        QuadraticReal lower = ssum > 0 ? d1s : -d2s;
        if (len > lower) break;
        if (ssum > 0) {
            d1s = sum;
            d1 = d1 + d2;
        } else {
            d2s = sum;
            d2 = d1 + d2;
        }
        if (--level < -cap) throw std::runtime_error("distances: ladder descent cap exceeded");
    }
    bool three = len < d1s - d2s;
    return DistancePair{d1s, d2s, d1, d2, three, level};
}

std::vector<QuadraticReal> ladder_lengths(const QuadraticReal& eps, int levels) {
    QuadraticReal d1s = QuadraticReal(1) + eps;
    QuadraticReal d2s = eps;
    std::vector<QuadraticReal> out{QuadraticReal(1)};
    for (int i = 0; i < levels; ++i) {
        QuadraticReal sum = d1s + d2s;
        if (sum.sign() > 0) {
            out.push_back(d1s);
            d1s = sum;
        } else {
            out.push_back(-d2s);
            d2s = sum;
        }
    }
    return out;
}

SteppingFn::SteppingFn(Window w, DistancePair dp)
    : w_(std::move(w)),
      dp_(std::move(dp)),
      delta1_(w_.right() - dp_.d1_star),
      delta2_(w_.c - dp_.d2_star),
      inv_lo_(w_.right() + dp_.d2_star),
      inv_hi_(w_.c + dp_.d1_star) {}

int SteppingFn::branch(const QuadraticReal& y) const {
    if (!w_.contains(y)) throw std::domain_error("stepping: point outside the window");
    if (y < delta1_) return 0;
    if (y < delta2_) return 1;
    return 2;
}

QuadraticReal SteppingFn::step(const QuadraticReal& y) const {
    switch (branch(y)) {
        case 0: return y + dp_.d1_star;
        case 1: return y + dp_.d1_star + dp_.d2_star;
        default: return y + dp_.d2_star;
    }
}

QuadraticReal SteppingFn::step_inv(const QuadraticReal& y) const {
    if (!w_.contains(y)) throw std::domain_error("stepping: point outside the window");
    if (y < inv_lo_) return y - dp_.d2_star;
    if (y < inv_hi_) return y - dp_.d1_star - dp_.d2_star;
    return y - dp_.d1_star;
}

GapCoords SteppingFn::gap(const QuadraticReal& y) const {
    switch (branch(y)) {
        case 0: return dp_.d1;
        case 1: return dp_.d1 + dp_.d2;
        default: return dp_.d2;
    }
}

GapCoords SteppingFn::gap_into(const QuadraticReal& y) const {
    if (!w_.contains(y)) throw std::domain_error("stepping: point outside the window");
    if (y < inv_lo_) return dp_.d2;
    if (y < inv_hi_) return dp_.d1 + dp_.d2;
    return dp_.d1;
}

SteppingFn stepping(const CapParams& params, const Window& window) {
    params.validate();
    return SteppingFn(window, distances(params.eps, window.len));
}

CodedWord::CodedWord(SteppingFn f, QuadraticReal origin_star)
    : f_(std::move(f)), right_cursor_(origin_star), left_cursor_(std::move(origin_star)) {}

char CodedWord::at(long n) {
    if (n >= 0) {
        while (static_cast<long>(right_.size()) <= n) {
            right_.push_back(f_.letter(right_cursor_));
            right_cursor_ = f_.step(right_cursor_);
        }
        return right_[static_cast<size_t>(n)];
    }
    long k = -n - 1;
    while (static_cast<long>(left_.size()) <= k) {
        left_cursor_ = f_.step_inv(left_cursor_);
        left_.push_back(f_.letter(left_cursor_));
    }
    return left_[static_cast<size_t>(k)];
}

std::string CodedWord::slice(long from, long to) {
    std::string s;
    for (long i = from; i < to; ++i) s += at(i);
    return s;
}

namespace {

// First lattice point whose star value falls in the window, scanning
// q = 0, 1, -1, 2, -2, ... with p = ceil(c - q*eps).
CapPoint find_seed(const CapParams& params, const Window& window) {
    if (window.contains(QuadraticReal(0))) return {BigInt(0), BigInt(0)};
    const long long cap = 1000000;
    for (long long k = 0; k <= cap; ++k) {
        for (long long q : {k, -k}) {
            QuadraticReal qe = QuadraticReal(Rational(q)) * params.eps;
            BigInt p = (window.c - qe).ceil();
            QuadraticReal star = QuadraticReal(Rational(p)) + qe;
            if (star < window.right()) return {p, BigInt(q)};
            if (q == 0) break;
        }
    }
    throw std::runtime_error("generate: no seed found (window too small for scan cap)");
}

}  // namespace

GenResult generate(const CapParams& params, const Window& window, size_t n_left, size_t n_right) {
    params.validate();
    if (params.eta.sign() <= 0) throw std::domain_error("generate: eta must be positive");
    SteppingFn f = stepping(params, window);

    CapPoint cur = find_seed(params, window);
    QuadraticReal star = cur.star(params.eps);

    // position on the first point with physical value >= 0
    const long long walk_cap = 20000000;
    long long walked = 0;
    while (cur.value(params.eta).sign() < 0) {
        GapCoords g = f.gap(star);
        star = f.step(star);
        cur = {cur.p + g.p, cur.q + g.q};
        if (++walked > walk_cap) throw std::runtime_error("generate: origin walk cap exceeded");
    }
    for (;;) {
        QuadraticReal prev_star = f.step_inv(star);
        GapCoords g = f.gap(prev_star);
        CapPoint prev{cur.p - g.p, cur.q - g.q};
        if (prev.value(params.eta).sign() < 0) break;
        cur = prev;
        star = prev_star;
        if (++walked > walk_cap) throw std::runtime_error("generate: origin walk cap exceeded");
    }

    GenResult res;
    res.origin_index = n_left;
    res.points.resize(n_left + n_right + 1);
    res.word.assign(n_left + n_right, '?');
    res.points[n_left] = cur;

    // left side
    {
        QuadraticReal s = star;
        CapPoint pt = cur;
        for (size_t i = 0; i < n_left; ++i) {
            QuadraticReal ps = f.step_inv(s);
            GapCoords g = f.gap(ps);
            pt = {pt.p - g.p, pt.q - g.q};
            res.points[n_left - 1 - i] = pt;
            res.word[n_left - 1 - i] = f.letter(ps);
            s = ps;
        }
    }
    // right side
    {
        QuadraticReal s = star;
        CapPoint pt = cur;
        for (size_t i = 0; i < n_right; ++i) {
            res.word[n_left + i] = f.letter(s);
            GapCoords g = f.gap(s);
            pt = {pt.p + g.p, pt.q + g.q};
            s = f.step(s);
            res.points[n_left + 1 + i] = pt;
        }
    }
    return res;
}

bool in_normal_range(const QuadraticReal& eps, const QuadraticReal& eta, const QuadraticReal& len) {
    if (!(eps > QuadraticReal(-1) && eps < QuadraticReal(0) && eta.sign() > 0)) return false;
    QuadraticReal lower = QuadraticReal(1) + eps;
    if (-eps > lower) lower = -eps;
    return len > lower && len <= QuadraticReal(1);
}

namespace {

struct NormState {
    QuadraticReal eps, eta;
    Window win;
    QuadraticReal scale;
    std::array<std::array<BigInt, 2>, 2> back;
    int moves = 0;

    // One lattice transformation by A = ((a,b),(c,d)), det +-1. The sign of A
    // is chosen so the star-side scalar a+c*eps stays positive, which keeps
    // the window left-closed right-open.
    void apply(BigInt a, BigInt b, BigInt c, BigInt d) {
        QuadraticReal se = QuadraticReal(Rational(a)) + QuadraticReal(Rational(c)) * eps;
        if (se.sign() < 0) {
            a = -a; b = -b; c = -c; d = -d;
            se = -se;
        }
        QuadraticReal sh = QuadraticReal(Rational(a)) + QuadraticReal(Rational(c)) * eta;
        QuadraticReal new_eps = (QuadraticReal(Rational(b)) + QuadraticReal(Rational(d)) * eps) / se;
        QuadraticReal new_eta = (QuadraticReal(Rational(b)) + QuadraticReal(Rational(d)) * eta) / sh;
        win = Window{win.c / se, win.len / se};
        scale *= sh;
        eps = new_eps;
        eta = new_eta;
        std::array<std::array<BigInt, 2>, 2> nb;
        nb[0][0] = back[0][0] * a + back[0][1] * c;
        nb[0][1] = back[0][0] * b + back[0][1] * d;
        nb[1][0] = back[1][0] * a + back[1][1] * c;
        nb[1][1] = back[1][0] * b + back[1][1] * d;
        back = nb;
        ++moves;
    }

    void shift(const BigInt& k) { apply(BigInt(1), k, BigInt(0), BigInt(1)); }
    void negpair() { apply(BigInt(1), BigInt(0), BigInt(0), BigInt(-1)); }
    void invert() { apply(BigInt(0), BigInt(1), BigInt(1), BigInt(0)); }

    // Jump straight to the normal-range window via the ladder: descend to the
    // two-distance level bracketing the current length, then change basis so
    // those distances become (1+eps, eps).
    void ladder_jump() {
        DistancePair dp = distances(eps, win.len);
        apply(dp.d1.p - dp.d2.p, dp.d2.p, dp.d1.q - dp.d2.q, dp.d2.q);
    }
};

}  // namespace

NormalizeResult normalize(const CapParams& params, const Window& window) {
    params.validate();
    if (window.len.sign() <= 0) throw std::domain_error("normalize: window length must be positive");
    NormState st{params.eps, params.eta, window, QuadraticReal(1),
                 {{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}}};

    const int cap = 1000;
    while (st.moves < cap) {
        if (in_normal_range(st.eps, st.eta, st.win.len)) {
            return NormalizeResult{CapParams{st.eps, st.eta}, st.win, st.scale, st.back, st.moves};
        }
        if (!(st.eps.sign() < 0 && st.eta.sign() > 0)) {
            if (st.eta.sign() < 0 && st.eps.sign() > 0) {
                st.negpair();
                continue;
            }
            BigInt fe = st.eps.floor(), fh = st.eta.floor();
            if (fe == fh) {
                // common integer part: strip it and invert (continued-fraction
                // step); eps != eta guarantees eventual separation
                st.shift(-fe);
                st.invert();
            } else if (fh > fe) {
                st.shift(-(fe + BigInt(1)));  // eps lands in (-1,0), eta stays positive
            } else {
                st.shift(-(fh + BigInt(1)));  // eta lands in (-1,0); negpair follows
            }
            continue;
        }
        if (st.eps < QuadraticReal(-1)) {
            st.invert();
            continue;
        }
        if (st.win.len > QuadraticReal(1)) {
            st.shift(BigInt(-1));
            st.invert();
        } else {
            st.ladder_jump();
        }
        if (st.eta.sign() < 0) {
            // here eta < -1 always, so -1-eta > 0 restores both ranges
            st.negpair();
            st.shift(BigInt(-1));
        }
    }
    throw std::runtime_error("normalize: move cap exceeded");
}

GenResult generate_any(const CapParams& params, const Window& window, size_t n_left,
                       size_t n_right) {
    if (in_normal_range(params.eps, params.eta, window.len))
        return generate(params, window, n_left, n_right);
    NormalizeResult nr = normalize(params, window);
    bool reversed = nr.scale.sign() < 0;
    GenResult base = generate(nr.params, nr.window, reversed ? n_right : n_left,
                              reversed ? n_left : n_right);
    GenResult out;
    out.points.reserve(base.points.size());
    for (const CapPoint& pt : base.points) out.points.push_back(nr.map_back(pt));
    if (reversed) {
        std::reverse(out.points.begin(), out.points.end());
        out.word.assign(base.word.rbegin(), base.word.rend());
    } else {
        out.word = base.word;
    }
    out.origin_index = 0;
    for (size_t i = 0; i < out.points.size(); ++i) {
        if (out.points[i].value(params.eta).sign() >= 0) {
            out.origin_index = i;
            break;
        }
    }
    return out;
}

std::string mechanical(const QuadraticReal& alpha, const QuadraticReal& beta, MechanicalKind kind,
                       long n_from, size_t count) {
    if (alpha.is_rational()) throw std::domain_error("mechanical: slope must be irrational");
    std::string s;
    s.reserve(count);
    auto level = [&](long n) {
        QuadraticReal v = QuadraticReal(Rational(static_cast<long long>(n))) * alpha + beta;
        return kind == MechanicalKind::lower ? v.floor() : v.ceil();
    };
    BigInt prev = level(n_from);
    for (size_t i = 0; i < count; ++i) {
        BigInt next = level(n_from + static_cast<long>(i) + 1);
        BigInt digit = next - prev;
        s += static_cast<char>('0' + digit.to_int64());
        prev = next;
    }
    return s;
}

Rational point_density(const CapParams& params, const Window& window, size_t horizon) {
    GenResult g = generate_any(params, window, horizon, horizon);
    BigInt right_n = g.points.back().value(params.eta).floor();
    BigInt left_n = (-g.points.front().value(params.eta)).floor();
    BigInt N = right_n < left_n ? right_n : left_n;
    if (N.sign() <= 0) throw std::domain_error("point_density: horizon too small");
    QuadraticReal bound{Rational(N)};
    long long count = 0;
    for (const CapPoint& pt : g.points) {
        QuadraticReal v = pt.value(params.eta);
        if (v >= -bound && v <= bound) ++count;
    }
    return Rational(BigInt(count), BigInt(2) * N + BigInt(1));
}

}  // namespace cap
}  // namespace aperiodica
