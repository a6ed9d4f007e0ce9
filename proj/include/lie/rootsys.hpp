// Root systems of the finite simple types, with exact integer/rational data.
//
// Node numbering convention: simple roots are numbered as in Bourbaki,
// "Groupes et algebres de Lie", ch. VI plates.  For every type handled here
// this coincides with the numbering used throughout the classification
// engine (checked against the extended-diagram data and the highest-root
// coefficient displays), so the mapping "engine node -> Bourbaki node" is
// the identity.
//
// A root is stored by its integer coordinate vector in the simple-root
// basis.  Coweights are stored in the fundamental-coweight basis
// {K_1, ..., K_n} (alpha_i(K_j) = delta_ij), so evaluating a root on a
// coweight is a dot product of coordinates.
#pragma once

#include "lie/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D',
                           E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  std::string str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }
  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;

  // Parses "E8", "A1", ... and validates the rank range.
  static SimpleType parse(const std::string& s);
};

using RootCoord = std::vector<int>;  // coordinates in the simple-root basis

// A semisimple-plus-center type label: multiset of simple factors and the
// dimension of the abelian part, e.g. A5+A1+R^2.
struct TypeLabel {
  std::vector<SimpleType> factors;  // kept sorted
  int center_dim = 0;

  int dim() const;          // sum of factor dims + center_dim
  int rank() const;         // sum of factor ranks + center_dim
  std::string str() const;  // canonical printable form
  bool operator==(const TypeLabel&) const = default;

  // Applies the low-rank coincidences B1=C1=A1, B2=C2 (keep B2), D2=A1+A1,
  // D3=A3 and sorts the factor list.
  TypeLabel canonical() const;
};

// Dimension of the compact simple Lie algebra of the given type.
int algebra_dim(SimpleType t);

class RootSystem {
 public:
  static const RootSystem& get(SimpleType t);  // cached per type
  static RootSystem build(SimpleType t);

  SimpleType type() const { return type_; }
  int rank() const { return n_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return n_pos_; }

  // Roots are indexed 0..root_count()-1; the first positive_count() are the
  // positive roots in height-then-lex order, followed by their negatives in
  // the same order (so negate(i) = i +- positive_count()).
  const RootCoord& root(int id) const { return roots_[id]; }
  int negate(int id) const {
    return id < n_pos_ ? id + n_pos_ : id - n_pos_;
  }
  bool is_positive(int id) const { return id < n_pos_; }
  int height(int id) const;

  // Index of a coordinate vector, or nullopt if it is not a root.
  std::optional<int> index_of(const RootCoord& c) const;
  int simple_root_id(int i) const { return simple_ids_[i]; }

  // Cartan matrix C[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Half squared lengths d_j = (alpha_j, alpha_j)/2; long roots have d = 1.
  const std::vector<Rat>& half_lengths() const { return d_; }

  // Exact invariant inner product on the root lattice.
  Rat inner(const RootCoord& a, const RootCoord& b) const;
  Rat half_length(const RootCoord& a) const { return inner(a, a) / 2; }

  // Integer pairing <b, a^vee> = 2(b,a)/(a,a).
  int pairing(const RootCoord& b, const RootCoord& a) const;

  // Coroot a^vee expressed in the fundamental-coweight basis (these
  // coordinates are the simple-coroot coefficients and are integers).
  RatVec coroot(const RootCoord& a) const;

  // alpha(H) for H in the fundamental-coweight basis.
  Rat eval(const RootCoord& alpha, const RatVec& H) const;

  // Highest root delta and its coefficients (the marks m_j).
  const RootCoord& highest_root() const { return roots_[highest_id_]; }
  int highest_root_id() const { return highest_id_; }
  const std::vector<int>& marks() const { return marks_; }

  // Base of a subsystem: given root ids closed under negation, returns the
  // ids of the simple roots of the subsystem (positive indecomposables).
  std::vector<int> subsystem_base(const std::vector<int>& ids) const;

  // Type of the subsystem spanned by a base (ids of linearly independent
  // roots with pairwise non-positive pairings).  Distinguishes B vs C via
  // root lengths.  The result is not canonicalized.
  TypeLabel base_type(const std::vector<int>& base_ids) const;

 private:
  SimpleType type_;
  int n_ = 0;
  int n_pos_ = 0;
  int highest_id_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> d_;
  std::vector<RootCoord> roots_;
  std::vector<int> simple_ids_;
  std::vector<int> marks_;
  std::map<RootCoord, int> index_;
};

}  // namespace lie
