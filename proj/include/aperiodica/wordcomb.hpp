#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aperiodica/cap.hpp"

namespace aperiodica {
namespace words {

struct FactorEntry {
    std::string word;
    QuadraticReal lo, hi;  // the factor's window cell [lo, hi)
};

// All length-n factors, each with its acceptance cell; cells partition the
// window from left to right.
struct FactorSet {
    int n;
    QuadraticReal window_len;
    std::vector<FactorEntry> entries;  // in cell order

    const FactorEntry* find(const std::string& w) const;
    std::set<std::string> factor_words() const;
};

FactorSet factors(const cap::CapParams& params, const cap::Window& window, int n);

// Integer coordinates (p, q) with len = p + q*eps, when they exist.
std::optional<std::pair<BigInt, BigInt>> length_coordinates(const QuadraticReal& eps,
                                                            const QuadraticReal& len);

enum class ComplexityRegime { generic, sturmian, quasisturmian };

struct ComplexityReport {
    size_t count;
    ComplexityRegime regime;
    std::optional<int> n0;  // set for the sturmian/quasisturmian regimes
};

ComplexityReport complexity(const cap::CapParams& params, const cap::Window& window, int n);

// Smallest n0 >= 0 with C(n0+1) - C(n0) = 1, taking C(0) = 1.
std::optional<int> detect_n0(const cap::CapParams& params, const cap::Window& window, int cap = 64);

enum class Side { left, right };

struct SpecialFactor {
    std::string word;
    std::string extensions;  // one-letter extensions on the chosen side
};

std::vector<SpecialFactor> special_factors(const cap::CapParams& params, const cap::Window& window,
                                           int n, Side side);

// Exact factor density |cell(w)| / |window|.
QuadraticReal factor_density(const cap::CapParams& params, const cap::Window& window,
                             const std::string& w);

struct RauzyEdge {
    size_t from, to;
    std::string label;
    QuadraticReal weight;
};

struct RauzyGraph {
    int n;
    std::vector<std::string> vertices;
    std::vector<RauzyEdge> edges;

    size_t out_degree(size_t v) const;
    size_t in_degree(size_t v) const;
};

RauzyGraph rauzy(const cap::CapParams& params, const cap::Window& window, int n);

struct ReducedEdge {
    size_t from, to;
    QuadraticReal weight;
    size_t path_len;  // number of contracted original edges
};

struct ReducedRauzyGraph {
    std::vector<std::string> vertices;
    std::vector<ReducedEdge> edges;
};

// Contracts every vertex with in-degree and out-degree 1, preserving weights.
ReducedRauzyGraph reduce(const RauzyGraph& g);

// Window lengths in (max(-eps,1+eps), 1] where the length-n factor set
// degenerates, i.e. C(n) < 2n+1. Solved piecewise-affinely in the length.
std::vector<QuadraticReal> dn_breakpoints(const QuadraticReal& eps, int n);

struct SturmianReport {
    size_t factor_count;      // expected n+1
    bool ones_count_ok;       // each factor has floor(n a) or ceil(n a) ones
    bool window_factors_ok;   // all factors occur in s(a,-a) on [-n+1, n]
    bool prefix_count_ok;     // #factors starting with 1 equals ceil(n a)
    bool balanced;

    bool all_ok() const {
        return ones_count_ok && window_factors_ok && prefix_count_ok && balanced;
    }
};

SturmianReport sturmian_checks(const QuadraticReal& alpha, const QuadraticReal& beta, int n);

}  // namespace words
}  // namespace aperiodica
