// Weyl group actions on roots and coweights, congruence reduction, and a
// bounded search for conjugating Weyl elements.
#pragma once

#include "lie/linalg.hpp"
#include "lie/rootsys.hpp"

#include <optional>
#include <set>
#include <vector>

namespace lie {

// A Weyl word is a sequence of root ids; application is right-to-left
// (the first entry acts last), matching composition of maps.
using WeylWord = std::vector<int>;

// t_a(b) = b - <b, a^vee> a on the root lattice.
RootCoord reflect_root(const RootSystem& rs, int a_id, const RootCoord& b);

// t_a(H) = H - a(H) a^vee on coweights (fundamental-coweight coordinates).
RatVec reflect_coweight(const RootSystem& rs, int a_id, const RatVec& H);

RootCoord apply_word_root(const RootSystem& rs, const WeylWord& w,
                          RootCoord b);
RatVec apply_word_coweight(const RootSystem& rs, const WeylWord& w, RatVec H);

// Matrix of t_a on coweight coordinates.
RatMat coweight_reflection_matrix(const RootSystem& rs, int a_id);

// Coweight-coordinate matrix of a root-lattice map given by the images of
// the simple roots (root_map column j = root coordinates of w(alpha_j)).
RatMat coweight_map_from_root_map(const RatMat& root_map);

// Congruence modulo 2 Pi: equal iff the difference has even integer
// coordinates (then tau_H = tau_H').
bool congruent_mod2(const RatVec& a, const RatVec& b);

// Reduces an integral coweight to 0/1 coordinates mod 2; throws on
// non-integral input.
RatVec reduce_mod2(const RatVec& h);

// Orbit of an integral coweight modulo 2 Pi under the reflections t_beta,
// beta ranging over the given root ids (closure under repeated application).
std::set<RatVec> coweight_orbit_mod2(const RootSystem& rs,
                                     const std::vector<int>& refl_ids,
                                     const RatVec& start);

// Same with an arbitrary modulus k >= 1; tau_{(1/2)h} and tau_{(1/2)h'}
// coincide iff h = h' mod 4, so torsion classes of quarter-coweights are
// compared with k = 4 on the doubled vector.
std::set<RatVec> coweight_orbit_modk(const RootSystem& rs,
                                     const std::vector<int>& refl_ids,
                                     const RatVec& start, int k);

// Bounded breadth-first search for a word w in the simple reflections with
// w(from) = to (exactly, or modulo 2 Pi).  Fallback utility only; returns
// nullopt when no word of length <= max_depth exists or the search budget
// is exhausted.
std::optional<WeylWord> find_weyl_element(const RootSystem& rs,
                                          const RatVec& from, const RatVec& to,
                                          bool mod2, int max_depth = 12);

}  // namespace lie
