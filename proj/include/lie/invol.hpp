// Finite-order automorphisms of the compact simple Lie algebra that
// normalize the Cartan subalgebra and permute the root spaces:
//   tau(E_alpha) = e^{i pi phase(alpha)} E_{M alpha},  tau|_t = coweight
// action of M.  All data is exact: M is an integer matrix on root
// coordinates and the phases are rationals mod 2.
#pragma once

#include "lie/chevalley.hpp"
#include "lie/linalg.hpp"
#include "lie/rootsys.hpp"
#include "lie/weyl.hpp"

#include <optional>
#include <vector>

namespace lie {

class RootAut {
 public:
  // Torsion automorphism tau_H (identity on t).
  static RootAut torsion(const Chevalley& ch, const RatVec& H);
  // Extends simple-root images (arbitrary roots with the right pairings)
  // and simple phases to the whole algebra by height induction; throws if
  // the images do not define an automorphism.
  static RootAut from_simple_images(const Chevalley& ch,
                                    const std::vector<RootCoord>& images,
                                    const std::vector<Rat>& simple_phases);

  const Chevalley& ch() const { return *ch_; }
  const RootSystem& rs() const { return ch_->rs(); }
  int perm(int id) const { return perm_[id]; }
  const Rat& phase(int id) const { return phase_[id]; }
  const RatMat& root_matrix() const { return rmat_; }
  const RatMat& coweight_matrix() const { return cmat_; }
  RatVec map_coweight(const RatVec& H) const { return mat_vec(cmat_, H); }

  RootAut compose(const RootAut& other) const;  // this after other
  RootAut inverse() const;
  bool operator==(const RootAut& o) const {
    return perm_ == o.perm_ && phase_ == o.phase_;
  }
  bool is_identity() const;
  bool is_involution() const;
  int order(int max_order = 48) const;  // 0 if it exceeds max_order

  // Conjugate s~^{-1} o tau o s~ by the root reflection automorphism
  // s~ = s~_{beta}; keeps phases rational.
  RootAut conj_by_stilde(int beta_id) const;
  // Successive conjugation by the entries of w in order: the result is
  // (s~_{w_k})^{-1} ... (s~_{w_1})^{-1} tau s~_{w_1} ... s~_{w_k}.
  RootAut conj_by_word(const WeylWord& w) const;
  // Torus conjugate tau_{-z} o tau o tau_z.
  RootAut conj_by_torus(const RatVec& z) const;

  // Full automorphism check against the structure constants (throws if it
  // fails); constructors already enforce this, the hook is for tests.
  void verify() const;

  // Dimension of the fixed subspace of t.
  int dim_t_fixed() const;
  // dim g^tau by eigenspace counting over the orbit decomposition of the
  // root permutation (requires an involution).
  int dim_fixed_eigen() const;
  // dim g^tau by the closed positive-root formula
  //   dim t_+ + #Delta^+ + 2#{a > 0 : tau E_a = E_a} - #{a > 0 : Ma = a}.
  int dim_fixed_formula() const;
  // dim of the fixed points inside t + sum of the given root spaces (the
  // id set must be tau-stable; used for h cap g^tau with t contained in h).
  int dim_fixed_restricted(const std::vector<int>& root_ids) const;

 private:
  const Chevalley* ch_ = nullptr;
  RatMat rmat_;  // root-coordinate action, integer entries
  RatMat cmat_;  // coweight action = transpose(inverse(rmat))
  std::vector<int> perm_;
  std::vector<Rat> phase_;  // normalized into [0,2)

  void finish_from_rmat();  // fills perm_ (from rmat_) and cmat_
};

// Is there z with tau' = tau_{-z} o tau o tau_z, i.e. the same root map and
// phase difference (alpha - M alpha)(z) mod 2?  Decided exactly via an
// integer-lattice membership test.
bool equal_mod_torus(const RootAut& a, const RootAut& b);

// Builds an involution with the given root map: extends the preferred
// simple phases and, if the square is a nontrivial torsion factor,
// composes with a correcting tau_H (H searched over half-integer
// coordinates).  Returns nullopt if no involution exists in that range.
std::optional<RootAut> make_involution(const Chevalley& ch,
                                       const std::vector<RootCoord>& images,
                                       const std::vector<Rat>& simple_phases);

// Relation of tau with sigma = tau_{(1/2)K_node}: +1 if they commute,
// -1 if tau o sigma = sigma^{-1} o tau, 0 otherwise.
int sigma_commutation(const RootAut& tau, int node_1based);

// Name of the fixed-point subalgebra of an involution of the compact
// simple algebra g, looked up by dimension (the symmetric-space catalog;
// dimensions are distinct within each exceptional g).  Throws on an
// unknown dimension.
TypeLabel symmetric_subalgebra_type(SimpleType g, int dim_fixed);

// Membership test for integer linear systems B x = c, x integral (small
// dense matrices; used by the torus-equality decision).
bool integer_solvable(std::vector<std::vector<long long>> B,
                      std::vector<long long> c);

}  // namespace lie
