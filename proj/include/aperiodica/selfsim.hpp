#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aperiodica/cap.hpp"
#include "aperiodica/morphism.hpp"

namespace aperiodica {
namespace selfsim {

struct ConfigCheck {
    bool self_similar;
    std::string reason;
};

// Self-similar iff eps is quadratic, eta its Galois conjugate, and the
// window closure contains the origin.
ConfigCheck check_selfsimilar_config(const cap::CapParams& params, const cap::Window& window);

struct SimilarityFactor {
    QuadraticReal gamma;      // > 1, quadratic Pisot
    QuadraticReal conjugate;  // |conjugate| < 1
    BigInt cert_a, cert_b;    // gamma = cert_a + M * cert_b * eta
};

// First factor in the documented search order: |a|+|b| increasing, then a,
// then b; gamma' constrained to (0,1) and gamma^2 returned when gamma < -1.
SimilarityFactor find_factor(const cap::CapParams& params, const cap::Window& window);

struct InclusionReport {
    bool ok;
    size_t tested;
    std::optional<cap::CapPoint> counterexample;
};

// Checks star(gamma * x) stays in the window for n generated points.
InclusionReport verify_inclusion(const SimilarityFactor& factor, const cap::CapParams& params,
                                 const cap::Window& window, size_t n_points);

struct GeometricRep {
    QuadraticReal lambda;                  // dominant eigenvalue
    std::vector<QuadraticReal> lengths;    // right eigenvector, min entry 1
    std::vector<QuadraticReal> points;     // z_0 .. z_{prefix_len}
};

// Geometric representation of a primitive morphism's fixed point: letter
// lengths from the dominant right eigenvector, points by accumulation.
GeometricRep geometric_representation(const Morphism& m, size_t prefix_len);

// Exact dominant eigenvalue of a non-negative integer matrix whose
// characteristic polynomial splits into integer linear/quadratic factors.
QuadraticReal dominant_eigenvalue(const std::vector<std::vector<long long>>& counts);

}  // namespace selfsim
}  // namespace aperiodica
