#include "aperiodica/betanum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace aperiodica {
namespace beta {

BetaBasis BetaBasis::of(QuadraticReal b) {
    if (!(b > QuadraticReal(1))) throw std::domain_error("BetaBasis: beta must exceed 1");
    BetaBasis basis;
    basis.beta = std::move(b);
    if (!basis.beta.is_rational()) basis.profile = basis.beta.classify();
    return basis;
}

void BetaBasis::trace_norm(long long& m, long long& n) const {
    if (!profile || !profile->is_quadratic_integer)
        throw std::domain_error("BetaBasis: beta is not a quadratic integer");
    m = (-profile->minpoly.B).to_int64();
    n = (-profile->minpoly.C).to_int64();
}

QuadraticReal DigitString::value(const BetaBasis& basis) const {
    QuadraticReal v(0);
    for (int d : digits) v = v * basis.beta + QuadraticReal(d);
    // digits.back() sits at exponent - (digits.size()-1)
    long tail = exponent - static_cast<long>(digits.size()) + 1;
    if (tail > 0)
        for (long i = 0; i < tail; ++i) v *= basis.beta;
    else
        for (long i = 0; i < -tail; ++i) v /= basis.beta;
    return v;
}

std::string DigitString::to_string() const {
    if (digits.empty()) return "0";
    auto digit_str = [](int d) {
        return d < 10 ? std::string(1, static_cast<char>('0' + d))
                      : "(" + std::to_string(d) + ")";
    };
    std::string s;
    long e = exponent;
    if (e < -1) {
        s = "0.";
        for (long i = -1; i > e; --i) s += '0';
    }
    for (size_t i = 0; i < digits.size(); ++i, --e) {
        if (e == -1 && s.empty()) s = "0.";
        s += digit_str(digits[i]);
        if (e == 0 && i + 1 < digits.size()) s += '.';
    }
    for (; e >= 0; --e) s += '0';
    return s;
}

DigitString greedy_expand(const QuadraticReal& x, const BetaBasis& basis, long frac_depth) {
    if (x.sign() < 0) throw std::domain_error("greedy_expand: negative value");
    DigitString out;
    if (x.is_zero()) return out;

    long k = 0;
    QuadraticReal power(1);
    if (x >= QuadraticReal(1)) {
        while (power * basis.beta <= x) {
            power *= basis.beta;
            ++k;
        }
    } else {
        while (power > x) {
            power /= basis.beta;
            --k;
        }
    }
    out.exponent = k;
    QuadraticReal r = x;
    for (long i = k; i >= std::min(0L, -frac_depth); --i) {
        BigInt d = (r / power).floor();
        out.digits.push_back(static_cast<int>(d.to_int64()));
        r -= QuadraticReal(Rational(d)) * power;
        power /= basis.beta;
        if (i <= 0 && r.is_zero()) break;
    }
    while (out.digits.size() > static_cast<size_t>(std::max(0L, out.exponent) + 1) &&
           out.digits.back() == 0)
        out.digits.pop_back();
    return out;
}

int RenyiDev::digit_at(size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty()) return 0;
    return period[(i - preperiod.size()) % period.size()];
}

int RenyiDev::quasi_digit_at(size_t i) const {
    if (period.empty()) {
        // finite t_1..t_m compares as (t_1 .. t_{m-1} (t_m - 1))^omega
        size_t m = preperiod.size();
        size_t j = i % m;
        return j == m - 1 ? preperiod[j] - 1 : preperiod[j];
    }
    return digit_at(i);
}

std::string RenyiDev::to_string() const {
    std::string s;
    for (int d : preperiod) s += std::to_string(d);
    if (!period.empty()) {
        s += "(";
        for (int d : period) s += std::to_string(d);
        s += ")*";
    }
    return s;
}

RenyiDev renyi_development(const BetaBasis& basis, size_t max_terms) {
    RenyiDev dev;
    std::map<QuadraticReal, size_t> seen;
    QuadraticReal state(1);
    std::vector<int> digits;
    for (size_t i = 0; i < max_terms; ++i) {
        auto it = seen.find(state);
        if (it != seen.end()) {
            dev.preperiod.assign(digits.begin(), digits.begin() + static_cast<long>(it->second));
            dev.period.assign(digits.begin() + static_cast<long>(it->second), digits.end());
            return dev;
        }
        seen.emplace(state, i);
        QuadraticReal bx = basis.beta * state;
        BigInt t = bx.floor();
        digits.push_back(static_cast<int>(t.to_int64()));
        state = bx - QuadraticReal(Rational(t));
        if (state.is_zero()) {
            dev.preperiod = digits;
            return dev;
        }
    }
    // no cycle: quadratic non-Pisot bases have aperiodic developments
    dev.preperiod = digits;
    dev.exact = false;
    return dev;
}

RenyiDev renyi_development_approx(const ApproxReal& b, size_t depth) {
    // concrete rational interval state; precision is retried from scratch
    // whenever a digit's floor is ambiguous at the current resolution
    for (int bits = 128; bits <= ApproxReal::default_max_bits(); bits *= 2) {
        auto [blo, bhi] = b.bounds(bits);
        if (blo.sign() <= 0) throw std::domain_error("renyi_development_approx: base must exceed 1");
        RenyiDev dev;
        dev.exact = false;
        Rational lo(1), hi(1);
        bool ok = true;
        for (size_t i = 0; i < depth; ++i) {
            Rational plo = lo * blo, phi = hi * bhi;
            BigInt flo = plo.floor(), fhi = phi.floor();
            if (!(flo == fhi)) {
                ok = false;
                break;
            }
            dev.preperiod.push_back(static_cast<int>(flo.to_int64()));
            Rational fr(flo);
            lo = plo - fr;
            hi = phi - fr;
            if (lo.sign() < 0) lo = Rational(0);
            if (hi.sign() == 0) return dev;  // development terminated exactly
        }
        if (ok) return dev;
    }
    throw std::runtime_error("renyi_development_approx: precision cap exhausted");
}

bool parry_admissible(const std::vector<int>& digits, const BetaBasis& basis) {
    for (int d : digits)
        if (d < 0) throw std::domain_error("parry_admissible: negative digit");
    RenyiDev dev = renyi_development(basis);
    if (!dev.exact)
        throw std::domain_error("parry_admissible: development of 1 is not eventually periodic");
    size_t period = dev.period.empty() ? dev.preperiod.size() : dev.period.size();
    for (size_t s = 0; s < digits.size(); ++s) {
        size_t horizon = (digits.size() - s) + dev.preperiod.size() + period + 2;
        bool smaller = false;
        for (size_t i = 0; i < horizon; ++i) {
            int a = s + i < digits.size() ? digits[s + i] : 0;
            int b = dev.quasi_digit_at(i);
            if (a < b) {
                smaller = true;
                break;
            }
            if (a > b) return false;
        }
        if (!smaller) return false;
    }
    return true;
}

BetaIntegers beta_integers(const BetaBasis& basis, const QuadraticReal& bound) {
    bool exact_ok = basis.beta.is_rational()
                        ? basis.beta.rational_value().is_integer()
                        : (basis.profile && basis.profile->is_pisot);
    if (!exact_ok)
        throw std::domain_error("beta_integers: exact enumeration needs an integer or quadratic Pisot base");

    BetaIntegers out;
    out.values.push_back(QuadraticReal(0));

    int dmax = static_cast<int>(basis.beta.ceil().to_int64()) - 1;
    std::vector<int> digits;
    QuadraticReal power(1);  // beta^k while scanning leading exponents

    // depth-first over digit strings of fixed leading exponent, lexicographic;
    // within one exponent this is value order, and exponents sort by value
    auto dfs = [&](auto&& self, QuadraticReal value, QuadraticReal place) -> void {
        if (place < QuadraticReal(1)) {
            out.values.push_back(value);
            return;
        }
        QuadraticReal next_place = place / basis.beta;
        for (int d = 0; d <= dmax; ++d) {
            QuadraticReal v = value + QuadraticReal(d) * place;
            if (v > bound) break;
            digits.push_back(d);
            if (parry_admissible(digits, basis)) self(self, v, next_place);
            digits.pop_back();
        }
    };

    while (power <= bound) {
        for (int d = 1; d <= dmax; ++d) {
            QuadraticReal v = QuadraticReal(d) * power;
            if (v > bound) break;
            digits.assign(1, d);
            if (parry_admissible(digits, basis)) dfs(dfs, v, power / basis.beta);
        }
        power *= basis.beta;
    }

    // gap labels: distinct gaps, largest first -> A, B, C, ...
    std::vector<QuadraticReal> gaps;
    for (size_t i = 0; i + 1 < out.values.size(); ++i) gaps.push_back(out.values[i + 1] - out.values[i]);
    std::vector<QuadraticReal> distinct = gaps;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::reverse(distinct.begin(), distinct.end());
    out.gap_values = distinct;
    for (const QuadraticReal& g : gaps) {
        size_t idx = std::find(distinct.begin(), distinct.end(), g) - distinct.begin();
        out.gap_word += static_cast<char>('A' + idx);
    }
    return out;
}

CapEquivalence cap_equivalence(const BetaBasis& basis) {
    if (!basis.profile || !basis.profile->is_pisot)
        throw std::domain_error("cap_equivalence: beta must be a quadratic Pisot number");
    long long m, n;
    basis.trace_norm(m, n);
    QuadraticReal conj = basis.beta.conjugate();
    CapEquivalence eq;
    if (n == 1) {
        // beta^2 = m beta + 1: window [-1, -1/beta')
        eq.window_exists = true;
        QuadraticReal right = QuadraticReal(-1) / conj;
        eq.window = cap::Window{QuadraticReal(-1), right - QuadraticReal(-1)};
    } else if (n == -1) {
        // beta^2 = m beta - 1: window [0, 1/beta')
        eq.window_exists = true;
        eq.window = cap::Window{QuadraticReal(0), QuadraticReal(1) / conj};
    } else {
        eq.window_exists = false;
        eq.obstruction =
            "two-distance condition |window| = d1' - d2' forces (1-|n|)*beta' = 0, "
            "so beta must be a unit; here |norm| = " + std::to_string(n < 0 ? -n : n);
    }
    return eq;
}

Morphism beta_substitution(const BetaBasis& basis) {
    if (!basis.profile || !basis.profile->is_pisot || !basis.profile->is_unit)
        throw std::domain_error("beta_substitution: beta must be a quadratic Pisot unit");
    long long m, n;
    basis.trace_norm(m, n);
    Morphism mo;
    mo.names = {"A", "B"};
    if (n == 1) {
        mo.images = {std::vector<int>(static_cast<size_t>(m), 0), {0}};
        mo.images[0].push_back(1);
    } else {
        mo.images = {std::vector<int>(static_cast<size_t>(m - 1), 0),
                     std::vector<int>(static_cast<size_t>(m - 2), 0)};
        mo.images[0].push_back(1);
        mo.images[1].push_back(1);
    }
    return mo;
}

}  // namespace beta
}  // namespace aperiodica
