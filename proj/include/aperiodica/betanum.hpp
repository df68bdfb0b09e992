#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aperiodica/approx.hpp"
#include "aperiodica/cap.hpp"
#include "aperiodica/morphism.hpp"

namespace aperiodica {
namespace beta {

struct BetaBasis {
    QuadraticReal beta;  // > 1
    std::optional<AlgebraicProfile> profile;  // present when beta is irrational

    static BetaBasis of(QuadraticReal beta);
    // For quadratic integers: beta^2 = m*beta + n (n may be negative).
    void trace_norm(long long& m, long long& n) const;
};

struct DigitString {
    std::vector<int> digits;  // most significant first; empty means zero
    long exponent = 0;        // power of beta carried by digits.front()

    QuadraticReal value(const BetaBasis& basis) const;
    std::string to_string() const;  // big-endian, '.' radix point when needed
    bool operator==(const DigitString& o) const = default;
};

// x >= 0 expanded by the greedy algorithm, exact for quadratic beta. Digits
// are produced down to beta^-frac_depth (further exact zeros are trimmed).
DigitString greedy_expand(const QuadraticReal& x, const BetaBasis& basis, long frac_depth = 0);

struct RenyiDev {
    std::vector<int> preperiod;
    std::vector<int> period;  // empty means the development is finite
    bool exact = true;

    int digit_at(size_t i) const;        // digits of d_beta(1), zero-padded
    int quasi_digit_at(size_t i) const;  // quasi-greedy comparison sequence
    std::string to_string() const;
};

RenyiDev renyi_development(const BetaBasis& basis, size_t max_terms = 256);

// Depth-limited development through the interval backend; never exact.
RenyiDev renyi_development_approx(const ApproxReal& beta, size_t depth);

// Every zero-padded suffix lexicographically strictly below the quasi-greedy
// form of d_beta(1).
bool parry_admissible(const std::vector<int>& digits, const BetaBasis& basis);

struct BetaIntegers {
    std::vector<QuadraticReal> values;      // 0 = values[0], increasing
    std::string gap_word;                   // letters by decreasing gap value
    std::vector<QuadraticReal> gap_values;  // letter i (A=0, ...) -> gap
};

BetaIntegers beta_integers(const BetaBasis& basis, const QuadraticReal& bound);

struct CapEquivalence {
    bool window_exists;
    cap::Window window;       // meaningful when window_exists
    std::string obstruction;  // otherwise: why no window can work
};

// The acceptance window making the positive beta-integers a cut-and-project
// set, which exists precisely for quadratic Pisot units.
CapEquivalence cap_equivalence(const BetaBasis& basis);

// The substitution fixing the gap word of Z_beta (quadratic Pisot units).
Morphism beta_substitution(const BetaBasis& basis);

}  // namespace beta
}  // namespace aperiodica
