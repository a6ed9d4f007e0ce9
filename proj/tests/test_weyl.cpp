// Weyl-action tests, including the brute-force confirmation of the
// low-rank conjugation lemma (A_n, D_4, E_6) by full orbit enumeration.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie/weyl.hpp"

using namespace lie;

namespace {

RatVec K(const RootSystem& rs, std::initializer_list<std::pair<int, Rat>> cs) {
  RatVec v(rs.rank(), Rat(0));
  for (auto [i, c] : cs) v[i - 1] = c;  // 1-based node index
  return v;
}

std::vector<int> all_root_ids(const RootSystem& rs) {
  std::vector<int> ids(rs.root_count());
  for (int i = 0; i < rs.root_count(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

TEST_CASE("reflections permute the root system") {
  const auto& rs = RootSystem::get(SimpleType::parse("F4"));
  for (int a = 0; a < rs.root_count(); ++a)
    for (int b = 0; b < rs.root_count(); ++b)
      CHECK(rs.index_of(reflect_root(rs, a, rs.root(b))).has_value());
}

TEST_CASE("coweight action is dual to the root action") {
  const auto& rs = RootSystem::get(SimpleType::parse("E6"));
  RatVec H = K(rs, {{2, Rat(1)}, {4, Rat(1, 2)}, {6, Rat(3)}});
  for (int a = 0; a < rs.root_count(); a += 5)
    for (int b = 0; b < rs.root_count(); b += 3) {
      // alpha(t_a H) = (t_a alpha)(H) since t_a is an involution.
      CHECK(rs.eval(rs.root(b), reflect_coweight(rs, a, H)) ==
            rs.eval(reflect_root(rs, a, rs.root(b)), H));
    }
}

TEST_CASE("reflection matrices agree with the direct action") {
  const auto& rs = RootSystem::get(SimpleType::parse("F4"));
  RatVec H = K(rs, {{1, Rat(1)}, {3, Rat(1, 4)}});
  for (int i = 0; i < rs.rank(); ++i) {
    int id = rs.simple_root_id(i);
    CHECK(mat_vec(coweight_reflection_matrix(rs, id), H) ==
          reflect_coweight(rs, id, H));
    // The same matrix recovered from the root images of the reflection.
    RatMat root_map(rs.rank(), RatVec(rs.rank(), Rat(0)));
    for (int j = 0; j < rs.rank(); ++j) {
      RootCoord img = reflect_root(rs, id, rs.root(rs.simple_root_id(j)));
      for (int r = 0; r < rs.rank(); ++r) root_map[r][j] = Rat(img[r]);
    }
    CHECK(coweight_map_from_root_map(root_map) ==
          coweight_reflection_matrix(rs, id));
  }
}

TEST_CASE("low-rank conjugations of torsion coweights by full enumeration") {
  // A_n: K_i ~ K_{n+1-i}; checked as membership of the target in the full
  // Weyl orbit of K_i modulo the even coweight lattice.
  for (int n = 2; n <= 5; ++n) {
    const auto& rs = RootSystem::get(SimpleType{Family::A, n});
    for (int i = 1; i <= n; ++i) {
      auto orbit = coweight_orbit_mod2(rs, all_root_ids(rs),
                                       K(rs, {{i, Rat(1)}}));
      CHECK(orbit.count(K(rs, {{n + 1 - i, Rat(1)}})) == 1);
    }
  }
  // D_4: the full orbit of K_1 mod 2 is {K_1, K_1+K_2, K_3+K_4,
  // K_2+K_3+K_4}.  In particular K_1 is NOT inner-conjugate to the
  // half-spin coweight K_3 (the three so(6)+so(2) fixed algebras are
  // related by triality, an outer symmetry); the inner identity that does
  // hold is K_1 ~ K_3+K_4.  This refutes the literal low-rank statement
  // for the spin nodes and is flagged as a documented discrepancy.
  {
    const auto& rs = RootSystem::get(SimpleType::parse("D4"));
    auto orbit = coweight_orbit_mod2(rs, all_root_ids(rs),
                                     K(rs, {{1, Rat(1)}}));
    CHECK(orbit.size() == 4);
    CHECK(orbit.count(K(rs, {{3, Rat(1)}, {4, Rat(1)}})) == 1);
    CHECK(orbit.count(K(rs, {{3, Rat(1)}})) == 0);
  }
  // D_5: the interior pair K_2 ~ K_3 holds, as does the odd-rank spin pair
  // K_4 ~ K_5.
  {
    const auto& rs = RootSystem::get(SimpleType::parse("D5"));
    auto o2 = coweight_orbit_mod2(rs, all_root_ids(rs), K(rs, {{2, Rat(1)}}));
    CHECK(o2.count(K(rs, {{3, Rat(1)}})) == 1);
    auto o4 = coweight_orbit_mod2(rs, all_root_ids(rs), K(rs, {{4, Rat(1)}}));
    CHECK(o4.count(K(rs, {{5, Rat(1)}})) == 1);
  }
  // E_6: K_1 ~ K_6, K_2 ~ K_3 ~ K_5.
  {
    const auto& rs = RootSystem::get(SimpleType::parse("E6"));
    auto o1 = coweight_orbit_mod2(rs, all_root_ids(rs), K(rs, {{1, Rat(1)}}));
    CHECK(o1.count(K(rs, {{6, Rat(1)}})) == 1);
    auto o2 = coweight_orbit_mod2(rs, all_root_ids(rs), K(rs, {{2, Rat(1)}}));
    CHECK(o2.count(K(rs, {{3, Rat(1)}})) == 1);
    CHECK(o2.count(K(rs, {{5, Rat(1)}})) == 1);
  }
}

TEST_CASE("E6 reflection-word identity for K_2 ~ K_5") {
  const auto& rs = RootSystem::get(SimpleType::parse("E6"));
  auto id_of = [&](RootCoord c) { return rs.index_of(c).value(); };
  int b1 = id_of({1, 1, 2, 2, 1, 0});  // a1+a2+2a3+2a4+a5
  int b2 = id_of({0, 1, 0, 1, 1, 0});  // a2+a4+a5
  RatVec img = apply_word_coweight(rs, {b1, b2}, K(rs, {{2, Rat(1)}}));
  CHECK(img == K(rs, {{5, Rat(-1)}, {6, Rat(2)}}));
  CHECK(congruent_mod2(img, K(rs, {{5, Rat(1)}})));
}

TEST_CASE("find_weyl_element basics") {
  const auto& rs = RootSystem::get(SimpleType{Family::A, 2});
  RatVec k1 = K(rs, {{1, Rat(1)}});
  RatVec k2 = K(rs, {{2, Rat(1)}});
  auto w = find_weyl_element(rs, k1, k2, /*mod2=*/true);
  REQUIRE(w.has_value());
  CHECK(congruent_mod2(apply_word_coweight(rs, *w, k1), k2));
  auto trivial = find_weyl_element(rs, k1, k1, false);
  REQUIRE(trivial.has_value());
  CHECK(trivial->empty());
  // Unreachable target: K_1 is not Weyl-conjugate to 0 mod 2.
  CHECK(!find_weyl_element(rs, k1, RatVec(2, Rat(0)), true, 6).has_value());
}
