// Chevalley basis of the complex simple Lie algebra attached to a root
// system: integral structure constants N_{a,b}, exact brackets, nilpotent
// exponentials, and the signed-permutation automorphisms
// s~_a = exp(ad E_a) exp(-ad E_{-a}) exp(ad E_a).
//
// Basis: {E_alpha : alpha in Delta} in root-id order, plus a Cartan part
// carried in fundamental-coweight coordinates (H corresponds to the coweight
// vector, so alpha(H) is a coordinate dot product).  Bracket conventions:
//   [H, E_a]        = a(H) E_a
//   [E_a, E_{-a}]   = H_a = a^vee
//   [E_a, E_b]      = N_{a,b} E_{a+b}   (a + b a root)
// with N_{a,b} = +(p+1) on extraspecial pairs, |N_{a,b}| = p+1 everywhere
// (p the largest k with b - k a a root), and N_{-a,-b} = -N_{a,b}.
#pragma once

#include "lie/linalg.hpp"
#include "lie/rootsys.hpp"

#include <vector>

namespace lie {

// Element of the Lie algebra: root-vector coefficients (indexed by root id)
// plus the Cartan part as a coweight vector.
struct LieElt {
  RatVec e;  // size root_count()
  RatVec h;  // size rank(), fundamental-coweight coordinates

  bool is_zero() const;
  LieElt& operator+=(const LieElt& o);
  LieElt& operator*=(const Rat& c);
};

class Chevalley {
 public:
  static const Chevalley& get(SimpleType t);  // cached per type
  static Chevalley build(SimpleType t);

  const RootSystem& rs() const { return *rs_; }
  int dim() const;  // root_count + rank

  // Structure constant N_{a,b}; 0 when a+b is not a root (or a+b = 0).
  long long N(int a_id, int b_id) const { return nmat_[a_id][b_id]; }
  // Id of a+b when it is a root, else -1.
  int sum_id(int a_id, int b_id) const { return sum_[a_id][b_id]; }

  LieElt zero() const;
  LieElt E(int id, Rat c = Rat(1)) const;
  LieElt H(const RatVec& coweight) const;

  LieElt bracket(const LieElt& x, const LieElt& y) const;

  // exp(ad x) applied to y; requires ad x nilpotent (throws otherwise).
  LieElt exp_ad(const LieElt& x, const LieElt& y, const Rat& t = Rat(1)) const;

  // The inner automorphism s~_a as a signed permutation: E_b maps to
  // sign[b] E_{img[b]} and a coweight H maps to t_a(H).  Computed by exact
  // exponentiation and verified to be monomial on construction.
  struct SignedPerm {
    int refl_root = -1;           // the reflecting root id
    std::vector<int> img;         // image root id per root id
    std::vector<int> sign;        // +1 / -1 per root id
  };
  const SignedPerm& s_tilde(int a_id) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<std::vector<long long>> nmat_;
  std::vector<std::vector<int>> sum_;
  mutable std::vector<SignedPerm> stilde_cache_;  // lazily filled per root
};

}  // namespace lie
