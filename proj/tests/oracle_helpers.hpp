#pragma once

// Independent reference computations for tests. Everything here recomputes
// expected values from first principles, away from the library's algorithmic
// paths (direct lattice filtering instead of the stepping walk, substring
// scans instead of interval machinery, small Pell searches, ...).

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "aperiodica/cap.hpp"

namespace oracle {

using aperiodica::BigInt;
using aperiodica::QuadraticReal;
using aperiodica::Rational;

// All points of the cut-and-project set with |q| <= qmax, by direct
// filtering of lattice rows. Sorted by physical value.
inline std::vector<aperiodica::cap::CapPoint> brute_points(const aperiodica::cap::CapParams& params,
                                                           const aperiodica::cap::Window& window,
                                                           long qmax) {
    std::vector<aperiodica::cap::CapPoint> pts;
    for (long long q = -qmax; q <= qmax; ++q) {
        QuadraticReal qe = QuadraticReal(Rational(q)) * params.eps;
        BigInt p = (window.c - qe).ceil();
        for (;;) {
            QuadraticReal star = QuadraticReal(Rational(p)) + qe;
            if (!(star < window.right())) break;
            pts.push_back(aperiodica::cap::CapPoint{p, BigInt(q)});
            p += BigInt(1);
        }
    }
    std::sort(pts.begin(), pts.end(),
              [&](const aperiodica::cap::CapPoint& a, const aperiodica::cap::CapPoint& b) {
                  return a.value(params.eta) < b.value(params.eta);
              });
    return pts;
}

// Letters from the gap sequence: distinct gaps descending map to B,A,C for
// three gaps (the composite gap is the longest) and A,C for two.
inline std::string word_from_values(const std::vector<QuadraticReal>& values) {
    std::vector<QuadraticReal> gaps;
    for (size_t i = 0; i + 1 < values.size(); ++i) gaps.push_back(values[i + 1] - values[i]);
    std::vector<QuadraticReal> distinct = gaps;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::reverse(distinct.begin(), distinct.end());
    std::string letters = distinct.size() == 3 ? "BAC" : distinct.size() == 2 ? "AC" : "A";
    std::string w;
    for (const auto& g : gaps) {
        size_t idx = std::find(distinct.begin(), distinct.end(), g) - distinct.begin();
        w += letters.at(idx);
    }
    return w;
}

inline std::set<std::string> scan_factors(const std::string& word, int n) {
    std::set<std::string> out;
    for (size_t i = 0; i + n <= word.size(); ++i) out.insert(word.substr(i, n));
    return out;
}

// Minimal solution of x^2 - d y^2 = +-1 with y >= 1, by direct search.
inline std::pair<long long, long long> pell_min(long long d) {
    for (long long y = 1;; ++y) {
        for (long long target : {1, -1}) {
            long long rhs = d * y * y + target;
            if (rhs < 0) continue;
            long long x = static_cast<long long>(std::sqrt(static_cast<double>(rhs)));
            for (long long xx = std::max(0ll, x - 2); xx <= x + 2; ++xx)
                if (xx * xx == rhs) return {xx, y};
        }
        if (y > 2000000) throw std::runtime_error("pell oracle: cap");
    }
}

}  // namespace oracle
