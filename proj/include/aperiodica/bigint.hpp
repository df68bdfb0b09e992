#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aperiodica {

// Signed arbitrary-precision integer, base 2^32 little-endian magnitude.
// Invariant: no trailing zero limbs; sign() == 0 iff magnitude empty.
class BigInt {
  public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated toward zero, like built-in integers.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    BigInt operator<<(unsigned bits) const;

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

    BigInt pow(unsigned long long e) const;

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if out of range
    double to_double() const;
    std::string to_string() const;

    size_t bit_length() const;

    friend BigInt gcd(BigInt a, BigInt b);
    friend BigInt isqrt(const BigInt& n);  // floor(sqrt(n)), n >= 0

  private:
    int sign_;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

BigInt gcd(BigInt a, BigInt b);
BigInt isqrt(const BigInt& n);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace aperiodica
