#include "aperiodica/substderive.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aperiodica {
namespace subst {

std::pair<QuadraticReal, long> GammaContext::g(const QuadraticReal& x) const {
    QuadraticReal y = x;
    long ind = 0;
    while (!gamma_window.contains(y)) {
        y = f.step_inv(y);
        if (++ind > ind_cap) throw std::runtime_error("g_gamma: index cap exceeded");
    }
    return {y / gamma, ind};
}

GammaContext make_gamma_context(const QuadraticReal& eps, const cap::Window& window,
                                int gamma_power) {
    if (gamma_power < 1) throw std::invalid_argument("gamma power must be >= 1");
    RingContext ring = RingContext::of(eps);
    UnitMultiplier unit = fundamental_unit(ring);
    UnitMultiplier powered = unit;
    for (int i = 1; i < gamma_power; ++i) powered = powered.mul(ring, unit);
    QuadraticReal gamma = powered.gamma(ring);

    cap::CapParams params{eps, eps.conjugate()};
    cap::SteppingFn f = cap::stepping(params, window);
    cap::Window gw{gamma * window.c, gamma * window.len};
    return GammaContext{std::move(f), gamma, gamma.conjugate(), gw};
}

std::vector<QuadraticReal> closure_set(const GammaContext& ctx, size_t size_cap) {
    std::vector<QuadraticReal> s;
    auto insert = [&](const QuadraticReal& x) {
        auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it != s.end() && *it == x) return false;
        s.insert(it, x);
        return true;
    };
    std::vector<QuadraticReal> work{ctx.f.window().c, ctx.f.delta1(), ctx.f.delta2()};
    for (const auto& x : work) insert(x);
    while (!work.empty()) {
        QuadraticReal x = work.back();
        work.pop_back();
        QuadraticReal gx = ctx.g(x).first;
        if (insert(gx)) {
            if (s.size() > size_cap) throw std::runtime_error("closure_set: size cap exceeded");
            work.push_back(gx);
        }
    }
    return s;
}

namespace {

size_t cell_of(const std::vector<QuadraticReal>& cuts, const QuadraticReal& end,
               const QuadraticReal& x) {
    if (x < cuts.front() || !(x < end)) throw std::logic_error("derive: point escapes the window");
    size_t lo = 0, hi = cuts.size();
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (x < cuts[mid])
            hi = mid;
        else
            lo = mid;
    }
    return lo;
}

SubstitutivityResult derive_core(const QuadraticReal& eps, const cap::Window& window,
                                 int gamma_power) {
    GammaContext ctx = make_gamma_context(eps, window, gamma_power);
    SubstitutivityResult res;
    res.gamma = ctx.gamma;
    res.gamma_conj = ctx.gamma_conj;
    res.cuts = closure_set(ctx);
    res.window_end = window.right();
    res.eps_input = eps;
    res.eps_derive = eps;
    res.window = window;
    res.reflected = false;

    const size_t k = res.cuts.size();
    res.phi.images.resize(k);
    res.phi.names.resize(k);
    res.j.resize(k);
    for (size_t i = 0; i < k; ++i) res.phi.names[i] = std::to_string(i);

    for (size_t i = 0; i < k; ++i) {
        QuadraticReal x = ctx.gamma * res.cuts[i];
        std::vector<int> word;
        long j = 0;
        for (;;) {
            if (j >= 1 && ctx.gamma_window.contains(x)) break;
            word.push_back(static_cast<int>(cell_of(res.cuts, res.window_end, x)));
            x = ctx.f.step(x);
            if (++j > ctx.ind_cap) throw std::runtime_error("derive: return-time cap exceeded");
        }
        res.phi.images[i] = std::move(word);
        res.j[i] = j;
    }

    res.v0 = static_cast<int>(cell_of(res.cuts, res.window_end, QuadraticReal(0)));
    res.v_minus1 =
        static_cast<int>(cell_of(res.cuts, res.window_end, ctx.f.step_inv(QuadraticReal(0))));

    for (size_t i = 0; i < k; ++i) res.psi += ctx.f.letter(res.cuts[i]);
    return res;
}

}  // namespace

SubstitutivityResult derive(const QuadraticReal& eps, const cap::Window& window, int gamma_power) {
    if (eps.is_rational() || !(eps > QuadraticReal(-1) && eps < QuadraticReal(0)))
        throw std::domain_error("derive: eps must be a quadratic irrational in (-1,0)");
    if (!(window.c.sign() <= 0 && window.right().sign() > 0))
        throw std::domain_error("derive: window must satisfy c <= 0 < c+len");
    QuadraticReal lower = -eps;
    if (QuadraticReal(1) + eps > lower) lower = QuadraticReal(1) + eps;
    if (!(window.len > lower && window.len <= QuadraticReal(1)))
        throw std::domain_error("derive: window length out of the admissible range");

    QuadraticReal conj = eps.conjugate();
    if (conj.sign() > 0) return derive_core(eps, window, gamma_power);
    if (conj > QuadraticReal(-1))
        throw std::domain_error("derive: -eps is not a Sturm number (conjugate inside (-1,0))");

    // eps' < -1: run on -1-eps (same point set, same window) and undo the
    // orientation flip afterwards: reversed images, swapped initial letters,
    // and A <-> C in the projection.
    QuadraticReal reduced = QuadraticReal(-1) - eps;
    SubstitutivityResult res = derive_core(reduced, window, gamma_power);
    res.reflected = true;
    for (auto& img : res.phi.images) std::reverse(img.begin(), img.end());
    std::swap(res.v_minus1, res.v0);
    for (char& c : res.psi) c = c == 'A' ? 'C' : (c == 'C' ? 'A' : 'B');
    res.eps_input = eps;
    return res;
}

PointedWord iterate(const Morphism& m, int v_minus1, int v0, int rounds) {
    PointedWord w{{v_minus1}, {v0}};
    for (int r = 0; r < rounds; ++r) {
        w.left = m.apply(w.left);
        w.right = m.apply(w.right);
    }
    return w;
}

PointedWord iterate_to_length(const Morphism& m, int v_minus1, int v0, size_t min_len) {
    PointedWord w{{v_minus1}, {v0}};
    for (int r = 0; r < 256 && (w.left.size() < min_len || w.right.size() < min_len); ++r) {
        size_t before_l = w.left.size(), before_r = w.right.size();
        w.left = m.apply(w.left);
        w.right = m.apply(w.right);
        if (w.left.size() == before_l && w.right.size() == before_r)
            throw std::runtime_error("iterate_to_length: morphism does not grow");
        // keep only what feeds the next rounds
        if (w.left.size() > 4 * min_len)
            w.left.erase(w.left.begin(), w.left.end() - static_cast<long>(4 * min_len));
        if (w.right.size() > 4 * min_len) w.right.resize(4 * min_len);
    }
    if (w.left.size() < min_len || w.right.size() < min_len)
        throw std::runtime_error("iterate_to_length: did not reach requested length");
    return w;
}

ProjectionReport verify_projection(const SubstitutivityResult& res, size_t n_letters) {
    PointedWord v = iterate_to_length(res.phi, res.v_minus1, res.v0, n_letters);

    QuadraticReal eps = res.eps_input;
    QuadraticReal conj = eps.conjugate();
    QuadraticReal eta = conj.sign() > 0 ? conj : QuadraticReal(-1) - conj;
    cap::SteppingFn f = cap::stepping(cap::CapParams{eps, eta}, res.window);
    cap::CodedWord coded(f, QuadraticReal(0));

    ProjectionReport rep{true, 0, 0};
    for (size_t i = 0; i < n_letters; ++i) {
        char expected = coded.at(static_cast<long>(i));
        char got = res.psi[static_cast<size_t>(v.right[i])];
        ++rep.checked;
        if (expected != got) {
            rep.ok = false;
            rep.first_mismatch = static_cast<long>(i);
            return rep;
        }
        char expected_l = coded.at(-static_cast<long>(i) - 1);
        char got_l = res.psi[static_cast<size_t>(v.left[v.left.size() - 1 - i])];
        ++rep.checked;
        if (expected_l != got_l) {
            rep.ok = false;
            rep.first_mismatch = -static_cast<long>(i) - 1;
            return rep;
        }
    }
    return rep;
}

MergeResult merge_letters(const Morphism& m, int power, std::string_view psi) {
    Morphism p = m.power(power);
    const size_t k = m.size();

    std::vector<int> rep(k);
    for (size_t i = 0; i < k; ++i) rep[i] = static_cast<int>(i);
    for (;;) {
        // group letters by their phi^power images rewritten through the
        // candidate quotient; the smallest letter of a group represents it
        std::map<std::vector<int>, int> canon;
        std::vector<int> next(k);
        for (size_t i = 0; i < k; ++i) {
            std::vector<int> img = p.images[i];
            for (int& a : img) a = rep[static_cast<size_t>(a)];
            auto it = canon.emplace(std::move(img), static_cast<int>(i)).first;
            next[i] = it->second;
        }
        if (next == rep) break;
        rep = std::move(next);
    }

    MergeResult out;
    out.class_rep = rep;

    // compact the representatives into letters 0..r-1
    std::vector<int> reps;
    for (size_t i = 0; i < k; ++i)
        if (rep[i] == static_cast<int>(i)) reps.push_back(static_cast<int>(i));
    std::map<int, int> compact;
    for (size_t i = 0; i < reps.size(); ++i) compact[reps[i]] = static_cast<int>(i);

    out.quotient.names.reserve(reps.size());
    for (int r : reps) out.quotient.names.push_back(m.names[static_cast<size_t>(r)]);
    for (int r : reps) {
        std::vector<int> img = p.images[static_cast<size_t>(r)];
        for (int& a : img) a = compact.at(rep[static_cast<size_t>(a)]);
        out.quotient.images.push_back(std::move(img));
    }

    if (!psi.empty()) {
        // classes must be unions of psi-fibers for the projected morphism
        std::map<int, char> class_letter;
        bool consistent = true;
        for (size_t i = 0; i < k && consistent; ++i) {
            auto [it, fresh] = class_letter.emplace(rep[i], psi[i]);
            if (!fresh && it->second != psi[i]) consistent = false;
        }
        std::map<char, int> letter_class;
        for (const auto& [cls, letter] : class_letter) {
            if (letter_class.count(letter)) consistent = false;
            letter_class[letter] = cls;
        }
        if (consistent) {
            Morphism proj;
            for (const auto& [letter, cls] : letter_class) {
                proj.names.push_back(std::string(1, letter));
                std::vector<int> img;
                for (int a : p.images[static_cast<size_t>(cls)]) {
                    char la = psi[static_cast<size_t>(a)];
                    img.push_back(static_cast<int>(
                        std::distance(letter_class.begin(), letter_class.find(la))));
                }
                proj.images.push_back(std::move(img));
            }
            out.projected = std::move(proj);
        }
    }
    return out;
}

}  // namespace subst
}  // namespace aperiodica
