#include "aperiodica/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace aperiodica {

namespace {

// Extract the square part of d by trial division (d stays small by policy),
// returning the square-free core and accumulating the extracted root in mult.
long long squarefree_core(long long d, long long& mult) {
    mult = 1;
    for (long long p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
            d /= p * p;
            mult *= p;
        }
    }
    return d;
}

constexpr long long kMaxRadicand = 1000000;

}  // namespace

QuadraticReal::QuadraticReal(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ < 0) throw std::domain_error("QuadraticReal: negative radicand");
    if (d_ > kMaxRadicand) throw std::domain_error("QuadraticReal: radicand too large");
    long long mult;
    long long core = squarefree_core(d_, mult);
    if (mult != 1) {
        b_ *= Rational(mult);
        d_ = core;
    }
    if (d_ <= 1) {
        // sqrt(0) or sqrt(1): value is rational
        a_ += b_ * Rational(d_ == 1 ? 1 : 0);
        b_ = Rational(0);
        d_ = 0;
    }
}

const Rational& QuadraticReal::rational_value() const {
    if (!is_rational()) throw std::domain_error("QuadraticReal: not rational");
    return a_;
}

QuadraticReal QuadraticReal::operator-() const {
    QuadraticReal r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticReal QuadraticReal::operator+(const QuadraticReal& o) const {
    if (o.is_rational()) {
        QuadraticReal r = *this;
        r.a_ += o.a_;
        return r;
    }
    if (is_rational()) return o + *this;
    if (d_ != o.d_) throw std::domain_error("QuadraticReal: mixed radicands");
    return QuadraticReal(a_ + o.a_, b_ + o.b_, d_);
}

QuadraticReal QuadraticReal::operator-(const QuadraticReal& o) const { return *this + (-o); }

QuadraticReal QuadraticReal::operator*(const QuadraticReal& o) const {
    if (o.is_rational()) {
        if (o.a_.is_zero()) return QuadraticReal();
        QuadraticReal r = *this;
        r.a_ *= o.a_;
        r.b_ *= o.a_;
        return r;
    }
    if (is_rational()) return o * *this;
    if (d_ != o.d_) throw std::domain_error("QuadraticReal: mixed radicands");
    Rational rd(d_);
    return QuadraticReal(a_ * o.a_ + b_ * o.b_ * rd, a_ * o.b_ + b_ * o.a_, d_);
}

QuadraticReal QuadraticReal::operator/(const QuadraticReal& o) const {
    if (o.is_zero()) throw std::domain_error("QuadraticReal: division by zero");
    if (o.is_rational()) {
        QuadraticReal r = *this;
        r.a_ /= o.a_;
        r.b_ /= o.a_;
        return r;
    }
    // multiply by the conjugate, divide by the norm
    QuadraticReal num = *this * o.conjugate();
    Rational n = o.norm();
    num.a_ /= n;
    num.b_ /= n;
    return num;
}

QuadraticReal QuadraticReal::conjugate() const {
    QuadraticReal r = *this;
    r.b_ = -r.b_;
    return r;
}

int QuadraticReal::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    auto c = lhs <=> rhs;
    if (c == std::strong_ordering::equal) return 0;  // impossible for square-free d>1, b!=0
    return c == std::strong_ordering::greater ? sa : sb;
}

BigInt QuadraticReal::floor() const {
    if (is_rational()) return a_.floor();
    // Write value as (A + B*sqrt(d)) / D with D > 0, then bracket B*sqrt(d)
    // between consecutive integers via an exact integer square root.
    BigInt D = a_.den() * b_.den();
    BigInt A = a_.num() * b_.den();
    BigInt B = b_.num() * a_.den();
    BigInt s = isqrt(B * B * BigInt(d_));  // floor(|B| sqrt(d))
    BigInt L = B.sign() > 0 ? A + s : A - s - BigInt(1);
    // L < D*value < L+1 and value is irrational, so floor(value) = floor(L/D).
    return Rational(L, D).floor();
}

MinPoly QuadraticReal::minimal_polynomial() const {
    if (is_rational()) throw std::domain_error("minimal_polynomial: rational value");
    // x^2 - 2a x + (a^2 - b^2 d) = 0, cleared to primitive integer form
    Rational t = trace();
    Rational n = norm();
    BigInt den = t.den() * n.den() / gcd(t.den(), n.den());  // lcm
    BigInt A = den;
    BigInt B = -(t.num() * (den / t.den()));
    BigInt C = n.num() * (den / n.den());
    BigInt g = gcd(gcd(A, B), C);
    if (!g.is_one()) {
        A = A / g;
        B = B / g;
        C = C / g;
    }
    return MinPoly{A, B, C};
}

void QuadraticReal::quadratic_equation(BigInt& M, BigInt& K, BigInt& L) const {
    MinPoly mp = minimal_polynomial();
    M = mp.A;
    K = -mp.B;
    L = -mp.C;
}

AlgebraicProfile QuadraticReal::classify() const {
    AlgebraicProfile p;
    p.minpoly = minimal_polynomial();
    p.is_quadratic_integer = p.minpoly.A.is_one();
    QuadraticReal conj = conjugate();
    p.is_pisot = p.is_quadratic_integer && *this > QuadraticReal(1) &&
                 conj > QuadraticReal(-1) && conj < QuadraticReal(1);
    p.is_unit = p.is_quadratic_integer && norm().abs() == Rational(1);
    p.is_sturm = *this > QuadraticReal(0) && *this < QuadraticReal(1) &&
                 !(conj > QuadraticReal(0) && conj < QuadraticReal(1));
    return p;
}

std::optional<std::pair<BigInt, BigInt>> QuadraticReal::integer_coordinates(
    const QuadraticReal& theta) const {
    // Solve p + q*theta = *this over the rationals, then require integrality.
    Rational q, p;
    if (theta.is_rational()) {
        if (!is_rational()) return std::nullopt;
        // degenerate: only meaningful if theta irrational; treat as failure
        return std::nullopt;
    }
    if (is_rational()) {
        q = Rational(0);
        p = a_;
    } else {
        if (d_ != theta.d_) return std::nullopt;
        q = b_ / theta.b_;
        p = a_ - q * theta.a_;
    }
    if (!q.is_integer() || !p.is_integer()) return std::nullopt;
    return std::make_pair(p.num(), q.num());
}

double QuadraticReal::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticReal::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s;
    bool have_rat = !a_.is_zero();
    if (have_rat) s += a_.to_string();
    if (b_ == Rational(1)) {
        if (have_rat) s += "+";
    } else if (b_ == Rational(-1)) {
        s += "-";
    } else {
        if (have_rat && b_.sign() > 0) s += "+";
        s += b_.to_string() + "*";
    }
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Literal parser: integers, rationals, sqrt(n), tau, + - * /, parentheses.
// No floating-point literals; everything stays exact.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("number literal: " + msg + " at position " + std::to_string(i));
    }

    QuadraticReal parse_expr() {
        QuadraticReal v = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                v += parse_term();
            } else if (eat('-')) {
                v -= parse_term();
            } else {
                return v;
            }
        }
    }

    QuadraticReal parse_term() {
        QuadraticReal v = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                v /= parse_factor();
            } else {
                return v;
            }
        }
    }

    QuadraticReal parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            QuadraticReal v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (match_word("sqrt")) {
            if (!eat('(')) fail("expected '(' after sqrt");
            QuadraticReal arg = parse_expr();
            if (!eat(')')) fail("expected ')'");
            if (!arg.is_rational()) fail("nested radicals not supported");
            Rational r = arg.rational_value();
            if (r.sign() < 0) fail("sqrt of negative value");
            // sqrt(p/q) = sqrt(p*q)/q
            BigInt rad = r.num() * r.den();
            if (!rad.fits_int64()) fail("radicand too large");
            return QuadraticReal(Rational(0), Rational(BigInt(1), r.den()), rad.to_int64());
        }
        if (match_word("tau")) return QuadraticReal::tau();
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected a number");
        return QuadraticReal(Rational(BigInt::from_string(s.substr(start, i - start))));
    }

    bool match_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) != w) return false;
        size_t end = i + w.size();
        if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) return false;
        i = end;
        return true;
    }
};

}  // namespace

QuadraticReal QuadraticReal::parse(std::string_view text) {
    Parser p{text};
    QuadraticReal v = p.parse_expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing characters");
    return v;
}

}  // namespace aperiodica
