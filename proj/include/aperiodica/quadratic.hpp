#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "aperiodica/rational.hpp"

namespace aperiodica {

// Primitive integer relation A*x^2 + B*x + C = 0, A > 0, gcd(A,B,C) = 1.
struct MinPoly {
    BigInt A, B, C;
};

struct AlgebraicProfile {
    MinPoly minpoly;
    bool is_quadratic_integer = false;
    bool is_pisot = false;
    bool is_unit = false;
    bool is_sturm = false;
};

// Exact element a + b*sqrt(d) of a real quadratic field.
// Canonical form: d square-free and > 1 when b != 0; d == 0 when the value is
// rational. Two values are equal iff their (a, b, d) triples are.
class QuadraticReal {
  public:
    QuadraticReal() : a_(0), b_(0), d_(0) {}
    QuadraticReal(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadraticReal(long long a) : a_(a), b_(0), d_(0) {}
    QuadraticReal(int a) : a_(a), b_(0), d_(0) {}
    QuadraticReal(Rational a, Rational b, long long d);

    static QuadraticReal sqrt_int(long long d) { return QuadraticReal(Rational(0), Rational(1), d); }
    // golden mean (1+sqrt(5))/2
    static QuadraticReal tau() { return QuadraticReal(Rational(1, 2), Rational(1, 2), 5); }

    static QuadraticReal parse(std::string_view text);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_integer() const { return b_.is_zero() && a_.is_integer(); }
    const Rational& rational_value() const;  // throws if irrational

    QuadraticReal operator-() const;
    QuadraticReal operator+(const QuadraticReal& o) const;
    QuadraticReal operator-(const QuadraticReal& o) const;
    QuadraticReal operator*(const QuadraticReal& o) const;
    QuadraticReal operator/(const QuadraticReal& o) const;
    QuadraticReal& operator+=(const QuadraticReal& o) { return *this = *this + o; }
    QuadraticReal& operator-=(const QuadraticReal& o) { return *this = *this - o; }
    QuadraticReal& operator*=(const QuadraticReal& o) { return *this = *this * o; }
    QuadraticReal& operator/=(const QuadraticReal& o) { return *this = *this / o; }

    QuadraticReal conjugate() const;
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }
    Rational trace() const { return a_ + a_; }

    // Exact sign in {-1, 0, +1}; no floating point anywhere.
    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    BigInt floor() const;
    BigInt ceil() const { return -(-*this).floor(); }

    std::strong_ordering operator<=>(const QuadraticReal& o) const {
        return (*this - o).sign() <=> 0;
    }
    bool operator==(const QuadraticReal& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
    }

    // Requires *this irrational (degree 2), else throws.
    MinPoly minimal_polynomial() const;
    AlgebraicProfile classify() const;

    // Coefficients M, K, L of M*x^2 = K*x + L (primitive, M > 0).
    void quadratic_equation(BigInt& M, BigInt& K, BigInt& L) const;

    // If *this = p + q*theta with integers p, q, returns them.
    std::optional<std::pair<BigInt, BigInt>> integer_coordinates(const QuadraticReal& theta) const;

    double to_double() const;
    std::string to_string() const;

  private:
    Rational a_, b_;
    long long d_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadraticReal& v) {
    return os << v.to_string();
}

}  // namespace aperiodica
