#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aperiodica/cap.hpp"
#include "aperiodica/morphism.hpp"

namespace aperiodica {
namespace subst {

// Stepping function together with the contracted window gamma*Omega; hosts
// the first-return map used by the derivation.
struct GammaContext {
    cap::SteppingFn f;
    QuadraticReal gamma;       // unit in (0,1)
    QuadraticReal gamma_conj;  // = 1/gamma > 1
    cap::Window gamma_window;  // gamma * Omega
    long ind_cap = 1000;

    // g(x) = (1/gamma) f^{-ind(x)}(x), ind(x) = min{i >= 0 : f^-i(x) in gamma*Omega}
    std::pair<QuadraticReal, long> g(const QuadraticReal& x) const;
};

GammaContext make_gamma_context(const QuadraticReal& eps, const cap::Window& window,
                                int gamma_power = 1);

// Minimal g-closed set containing {c, delta1, delta2}, sorted increasing.
std::vector<QuadraticReal> closure_set(const GammaContext& ctx, size_t size_cap = 10000);

struct SubstitutivityResult {
    QuadraticReal gamma;       // in (0,1)
    QuadraticReal gamma_conj;  // > 1
    std::vector<QuadraticReal> cuts;  // c_0 < ... < c_k
    QuadraticReal window_end;         // c_{k+1} = c + len
    Morphism phi;                     // letters 0..k
    std::vector<long> j;              // return exponents j_i
    int v_minus1, v0;
    std::string psi;   // psi[i] in {A,B,C}
    bool reflected;    // input had eps' < -1 and was reduced via eps -> -1-eps

    QuadraticReal eps_input;          // as given
    cap::Window window;               // as given
    QuadraticReal eps_derive;         // parameter the algorithm ran on
};

// The substitutive structure of the coded word: alphabet, morphism phi,
// initial letters v_-1 | v_0, and projection psi with psi(v) = coded word.
SubstitutivityResult derive(const QuadraticReal& eps, const cap::Window& window,
                            int gamma_power = 1);

// Pointed word around the marker: left holds ... v_-2 v_-1 in natural order.
struct PointedWord {
    std::vector<int> left;
    std::vector<int> right;
};

PointedWord iterate(const Morphism& m, int v_minus1, int v0, int rounds);
PointedWord iterate_to_length(const Morphism& m, int v_minus1, int v0, size_t min_len);

struct ProjectionReport {
    bool ok;
    long first_mismatch;  // word index, meaningful when !ok
    size_t checked;
};

// Compares psi(fixed point) against the generated coded word on n letters
// in each direction.
ProjectionReport verify_projection(const SubstitutivityResult& res, size_t n_letters);

struct MergeResult {
    std::vector<int> class_rep;         // letter -> representative letter
    Morphism quotient;                  // phi^power on the representatives
    std::optional<Morphism> projected;  // over the psi alphabet when classes respect psi
};

// Merges letters whose phi^power images coincide under the candidate
// quotient, iterated to stability. psi may be empty.
MergeResult merge_letters(const Morphism& m, int power, std::string_view psi = {});

}  // namespace subst
}  // namespace aperiodica
