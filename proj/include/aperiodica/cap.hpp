#pragma once

#include <array>
#include <deque>
#include <string>
#include <vector>

#include "aperiodica/ring.hpp"

namespace aperiodica {
namespace cap {

struct CapParams {
    QuadraticReal eps, eta;

    void validate() const;
};

// Acceptance window [c, c+len), always left-closed right-open.
struct Window {
    QuadraticReal c, len;

    QuadraticReal right() const { return c + len; }
    bool contains(const QuadraticReal& x) const { return x >= c && x < right(); }
};

struct CapPoint {
    BigInt p, q;

    QuadraticReal value(const QuadraticReal& eta) const {
        return QuadraticReal(Rational(p)) + QuadraticReal(Rational(q)) * eta;
    }
    QuadraticReal star(const QuadraticReal& eps) const {
        return QuadraticReal(Rational(p)) + QuadraticReal(Rational(q)) * eps;
    }
    bool operator==(const CapPoint& o) const = default;
};

// Lattice coordinates of a gap; valid on both sides of the star map.
struct GapCoords {
    BigInt p, q;

    GapCoords operator+(const GapCoords& o) const { return {p + o.p, q + o.q}; }
    bool operator==(const GapCoords& o) const = default;
};

struct DistancePair {
    QuadraticReal d1_star;  // > 0
    QuadraticReal d2_star;  // < 0
    GapCoords d1, d2;
    bool three_distances;
    int level;  // ladder steps descended from the unit-window case
};

// Star distances for a window of the given length. eps must lie in (-1,0) and
// 0 < len <= 1; lengths below the two-distance threshold are reached by
// running the ladder recurrence downward.
DistancePair distances(const QuadraticReal& eps, const QuadraticReal& len);

// Two-distance window lengths l_0 = 1 > l_-1 > ... > l_{-(levels)} for eps.
std::vector<QuadraticReal> ladder_lengths(const QuadraticReal& eps, int levels);

// The stepping function: a two- or three-interval exchange on the window
// mapping a point's star image to its right neighbour's.
class SteppingFn {
  public:
    SteppingFn(Window w, DistancePair dp);

    const Window& window() const { return w_; }
    const DistancePair& dist() const { return dp_; }
    const QuadraticReal& delta1() const { return delta1_; }
    const QuadraticReal& delta2() const { return delta2_; }

    // 0 = A-cell, 1 = B-cell, 2 = C-cell; throws if y outside the window
    int branch(const QuadraticReal& y) const;
    char letter(const QuadraticReal& y) const { return "ABC"[branch(y)]; }

    QuadraticReal step(const QuadraticReal& y) const;
    QuadraticReal step_inv(const QuadraticReal& y) const;

    // Gap coordinates traversed when stepping right from y.
    GapCoords gap(const QuadraticReal& y) const;
    // Gap traversed when stepping right from step_inv(y), i.e. into y.
    GapCoords gap_into(const QuadraticReal& y) const;

  private:
    Window w_;
    DistancePair dp_;
    QuadraticReal delta1_, delta2_;        // cell boundaries
    QuadraticReal inv_lo_, inv_hi_;        // branch boundaries of the inverse
};

SteppingFn stepping(const CapParams& params, const Window& window);

// Lazily extended bidirectional coded word; index 0 is the gap leaving the
// point whose star value seeds the walk.
class CodedWord {
  public:
    CodedWord(SteppingFn f, QuadraticReal origin_star);

    char at(long n);
    std::string slice(long from, long to);  // letters at from..to-1

  private:
    SteppingFn f_;
    QuadraticReal right_cursor_, left_cursor_;
    std::deque<char> right_, left_;
};

struct GenResult {
    std::vector<CapPoint> points;  // increasing physical order
    std::string word;              // word[i] codes the gap points[i] -> points[i+1]
    size_t origin_index;           // index into points of the first point >= 0
};

// Walks the stepping function from a seed, recovering lattice coordinates
// incrementally. Requires eps in (-1,0), eta > 0 and a normal-range window.
GenResult generate(const CapParams& params, const Window& window, size_t n_left, size_t n_right);

struct NormalizeResult {
    CapParams params;
    Window window;
    QuadraticReal scale;                       // original set = scale * normalized set
    std::array<std::array<BigInt, 2>, 2> back; // original (p,q)^T = back * normalized (p,q)^T
    int moves;

    CapPoint map_back(const CapPoint& pt) const {
        return {back[0][0] * pt.p + back[0][1] * pt.q, back[1][0] * pt.p + back[1][1] * pt.q};
    }
};

bool in_normal_range(const QuadraticReal& eps, const QuadraticReal& eta, const QuadraticReal& len);

// Reduces (eps, eta, window) by lattice transformations to the normal form
// eps in (-1,0), eta > 0, max(1+eps, -eps) < |window| <= 1. Exact: the
// original set equals scale times the normalized one, point for point.
NormalizeResult normalize(const CapParams& params, const Window& window);

// generate() for arbitrary parameters: normalizes first, then maps points
// back to original lattice coordinates. A negative scale reverses order.
GenResult generate_any(const CapParams& params, const Window& window, size_t n_left,
                       size_t n_right);

enum class MechanicalKind { lower, upper };

// s(n) = floor((n+1)a+b) - floor(na+b), or the ceiling analogue.
std::string mechanical(const QuadraticReal& alpha, const QuadraticReal& beta, MechanicalKind kind,
                       long n_from, size_t count);

// Counted density of points in [-N, N] with N taken from a generated sample
// of the given size. Converges to a constant multiple of |window|.
Rational point_density(const CapParams& params, const Window& window, size_t horizon);

}  // namespace cap
}  // namespace aperiodica
