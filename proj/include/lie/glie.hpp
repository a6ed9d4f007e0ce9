// Graded Lie algebras from partitions of a fundamental system, and the
// restricted-root (Satake) data of the noncompact real forms that realize
// the third-kind gradations behind the mark-3 torsion generators.
//
// A partition assigns a nonnegative weight to every simple root; the
// induced height function h(alpha) = sum of weights times coefficients
// determines the characteristic coweight Z, the grade decomposition
// g_p = span{E_alpha : alpha(Z) = p} (plus the Cartan at p = 0) and the
// kind nu = h(delta).  The grade-reversing Cartan involution of the split
// form acts as theta(E_alpha) = -E_{-alpha}.
//
// Restricted-root data is shipped for exactly the eight real forms needed
// here (the split exceptional forms plus e8(-24), e7(-5), e6(2)); all
// eight have reduced restricted root systems, so no BC bookkeeping is
// required.  The table records, per real form, the restricted type and
// the restriction pattern of the ambient simple roots (0 = restricts to
// zero); the restricted marks recomputed from this pattern are checked
// against the restricted root system on load.
#pragma once

#include "lie/chevalley.hpp"
#include "lie/invol.hpp"

#include <map>
#include <string>
#include <vector>

namespace lie {

struct Gradation {
  RatVec Z;                     // characteristic coweight, K-basis
  int kind = 0;                 // nu = grade of the highest root
  std::map<int, int> grade_dims;  // p -> dim g_p (Cartan counted at p = 0)
};

// weights[i] = block index of simple root i (0 = Pi_0).  Requires a
// nonempty Pi_1 and nonempty top block.
Gradation gradation_from_partition(const RootSystem& rs,
                                   const std::vector<int>& weights);

// Eigenvalues of ad(Z) on root vectors, plus 0 for the Cartan.
std::vector<Rat> grade_spectrum(const RootSystem& rs, const RatVec& Z);

// The grade-reversing involution theta: E_alpha -> -E_{-alpha}.
RootAut split_cartan_involution(const Chevalley& ch);

// Checks [g_p, g_q] subset g_{p+q} on explicit brackets of root-vector
// and coroot basis elements, and theta(g_p) = g_{-p}.  Pairs are swept
// exhaustively when root_count^2 <= budget, otherwise sampled with the
// given seed.  Throws on violation.
void check_grading(const Chevalley& ch, const Gradation& g,
                   long long budget = 400000, unsigned seed = 1);

struct SatakeForm {
  std::string label;         // e.g. "e8(-24)"
  SimpleType ambient;        // complexification type
  SimpleType restricted;     // restricted root system type
  std::vector<int> restriction;  // per ambient simple root: 0 = black,
                                 // otherwise 1-based restricted node
  std::string k_label;       // maximal compact subalgebra, e.g. "e7+su(2)"
  int k_dim = 0;
};

// The eight real forms, loaded from data/satake_forms.tsv and validated
// (restriction onto the full restricted base, recomputed restricted marks
// equal to the marks of the restricted root system).
const std::vector<SatakeForm>& satake_forms();
const SatakeForm& satake_form(const std::string& label);

// Restricted marks n_q recomputed from the restriction pattern.
std::vector<int> restricted_marks(const SatakeForm& f);

// Lift of the restricted coweight h_q: sum of K_j over ambient simple
// roots restricting to the restricted node q (1-based).
RatVec lift_restricted_coweight(const SatakeForm& f, int q);

// Case filter for candidate torsion generators tau_{(1/2)h}, where h is
// given by coefficients on the restricted fundamental coweights.  The
// decision is computational: a candidate survives only if its fixed
// algebra is not that of an involution or an order-3 automorphism, has a
// 1-dimensional center, and is the full centralizer of that center.
enum class P61Verdict {
  Accepted,        // h = h_p with n_p = 3
  Symmetric,       // fixed algebra equals that of an involution
  ThreeSymmetric,  // fixed algebra equals that of an order-3 automorphism
  WrongCenterDim,  // center of the fixed algebra is not 1-dimensional
  NotCentralizer,  // fixed algebra is a proper subalgebra of the
                   // centralizer of its center
};
P61Verdict prop61_filter(const SatakeForm& f,
                         const std::vector<int>& restricted_coeffs);

}  // namespace lie
