// Root-system construction tests.
//
// The generator in liecore builds roots by height induction on root strings.
// The oracle here is independent: it closes the simple roots under all
// simple reflections using only the Cartan matrix, which touches none of the
// string bookkeeping of the production path.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie/rootsys.hpp"

#include <set>

using namespace lie;

namespace {

// Reflection-closure oracle: s_i(b) = b - <b, alpha_i^vee> alpha_i.
std::set<RootCoord> closure_oracle(SimpleType t) {
  const auto cartan = RootSystem::get(t).cartan();
  const int n = t.rank;
  std::set<RootCoord> roots;
  for (int i = 0; i < n; ++i) {
    RootCoord a(n, 0);
    a[i] = 1;
    roots.insert(a);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootCoord> pending(roots.begin(), roots.end());
    for (const auto& b : pending) {
      for (int i = 0; i < n; ++i) {
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += b[j] * cartan[j][i];
        RootCoord r = b;
        r[i] -= pair;
        if (roots.insert(r).second) grew = true;
      }
    }
  }
  return roots;
}

void check_against_oracle(SimpleType t, int expected_count) {
  const auto& rs = RootSystem::get(t);
  auto oracle = closure_oracle(t);
  CHECK(rs.root_count() == expected_count);
  CHECK(oracle.size() == static_cast<size_t>(expected_count));
  for (int id = 0; id < rs.root_count(); ++id)
    CHECK(oracle.count(rs.root(id)) == 1);
}

}  // namespace

TEST_CASE("root counts match the reflection-closure oracle") {
  check_against_oracle(SimpleType::parse("E8"), 240);
  check_against_oracle(SimpleType::parse("E7"), 126);
  check_against_oracle(SimpleType::parse("E6"), 72);
  check_against_oracle(SimpleType::parse("F4"), 48);
  check_against_oracle(SimpleType::parse("G2"), 12);
  check_against_oracle(SimpleType::parse("A1"), 2);
  check_against_oracle(SimpleType::parse("A5"), 30);
  check_against_oracle(SimpleType::parse("B3"), 18);
  check_against_oracle(SimpleType::parse("C4"), 32);
  check_against_oracle(SimpleType::parse("D4"), 24);
  check_against_oracle(SimpleType::parse("D5"), 40);
}

TEST_CASE("highest roots and marks") {
  auto marks = [](const char* s) { return RootSystem::get(SimpleType::parse(s)).marks(); };
  CHECK(marks("E8") == RootCoord{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(marks("E7") == RootCoord{2, 2, 3, 4, 3, 2, 1});
  CHECK(marks("E6") == RootCoord{1, 2, 2, 3, 2, 1});
  CHECK(marks("F4") == RootCoord{2, 3, 4, 2});
  CHECK(marks("G2") == RootCoord{3, 2});

  // The highest root is the unique root of maximal height.
  for (const char* s : {"E8", "F4", "G2", "A3", "B4", "C3", "D5"}) {
    const auto& rs = RootSystem::get(SimpleType::parse(s));
    int hmax = rs.height(rs.highest_root_id());
    int count = 0;
    for (int id = 0; id < rs.positive_count(); ++id) {
      CHECK(rs.height(id) <= hmax);
      if (rs.height(id) == hmax) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("lengths, pairings and coroots") {
  for (const char* s : {"E7", "F4", "G2", "B3", "C3"}) {
    const auto& rs = RootSystem::get(SimpleType::parse(s));
    std::set<Rat> lengths;
    for (int id = 0; id < rs.root_count(); ++id) {
      const auto& a = rs.root(id);
      lengths.insert(rs.inner(a, a));
      // <b, a^vee> is an integer for all root pairs, and eval against the
      // coroot coweight vector agrees with the pairing.
      for (int j = 0; j < rs.root_count(); j += 7) {
        const auto& b = rs.root(j);
        int p = rs.pairing(b, a);
        CHECK(rs.eval(b, rs.coroot(a)) == Rat(p));
      }
    }
    // Long roots have squared length 2; at most two lengths occur.
    CHECK(lengths.count(Rat(2)) == 1);
    CHECK(lengths.size() <= 2);
  }
}

TEST_CASE("root strings: q - p = -pairing") {
  const auto& rs = RootSystem::get(SimpleType::parse("F4"));
  for (int id = 0; id < rs.root_count(); ++id) {
    for (int i = 0; i < rs.rank(); ++i) {
      const auto& b = rs.root(id);
      const auto& ai = rs.root(rs.simple_root_id(i));
      RootCoord nai(ai.size());
      for (size_t j = 0; j < ai.size(); ++j) nai[j] = -ai[j];
      if (b == ai || b == nai) continue;  // the string through 0 is special
      int p = 0, q = 0;
      RootCoord x = b;
      while (true) {
        x[i] -= 1;
        if (!rs.index_of(x)) break;
        ++p;
      }
      // walk up
      x = b;
      while (true) {
        x[i] += 1;
        if (!rs.index_of(x)) break;
        ++q;
      }
      CHECK(q - p == -rs.pairing(b, ai));
    }
  }
}

TEST_CASE("fixed subsystems of the order-4 torsion nodes") {
  // Delta_h = { alpha : alpha(K_i) = 0 mod 4 } for the mark-4 node K_i;
  // its type matches the Borel-de Siebenthal reading of the extended
  // diagram.
  auto h_type = [](const char* s, int node1based) {
    const auto& rs = RootSystem::get(SimpleType::parse(s));
    std::vector<int> ids;
    for (int id = 0; id < rs.root_count(); ++id) {
      int v = rs.root(id)[node1based - 1];
      if (v % 4 == 0) ids.push_back(id);
    }
    auto base = rs.subsystem_base(ids);
    return rs.base_type(base).canonical().str();
  };
  CHECK(h_type("E8", 3) == "A7+A1");
  CHECK(h_type("E8", 6) == "D5+A3");
  CHECK(h_type("E7", 4) == "A3+A3+A1");
  CHECK(h_type("F4", 3) == "A3+A1");
}

TEST_CASE("type parsing rejects junk") {
  CHECK_THROWS(SimpleType::parse("X9"));
  CHECK_THROWS(SimpleType::parse("E9"));
  CHECK_THROWS(SimpleType::parse("F5"));
  CHECK_THROWS(SimpleType::parse("D3"));
  CHECK_THROWS(SimpleType::parse(""));
  CHECK(SimpleType::parse("A1").str() == "A1");
}

TEST_CASE("canonical low-rank labels") {
  TypeLabel l;
  l.factors = {{Family::B, 1}, {Family::C, 2}, {Family::D, 3}, {Family::D, 1}};
  l.center_dim = 1;
  CHECK(l.canonical().str() == "A3+B2+A1+R^2");
  TypeLabel d2;
  d2.factors = {{Family::D, 2}};
  CHECK(d2.canonical().str() == "A1+A1");
}
