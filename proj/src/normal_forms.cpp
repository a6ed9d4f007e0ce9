#include "lie/normal_forms.hpp"

#include <map>
#include <stdexcept>

namespace lie {

namespace {

RootCoord simple(int n, int i) {  // 1-based
  RootCoord c(n, 0);
  c[i - 1] = 1;
  return c;
}

RootCoord lowest(SimpleType t) {  // -delta
  const auto& m = RootSystem::get(t).marks();
  RootCoord c(m.size());
  for (size_t i = 0; i < m.size(); ++i) c[i] = -m[i];
  return c;
}

std::vector<TStarForm> build_forms() {
  std::vector<TStarForm> out;
  const SimpleType e7{Family::E, 7}, e8{Family::E, 8}, f4{Family::F, 4};
  const Rat z(0), o(1);

  // e7, node 4: the fixed diagram of sigma is three A_3/A_1 strands; one
  // symmetry commutes with sigma, two invert it.
  const RootCoord b3 = {1, 1, 2, 3, 2, 1, 0};
  out.push_back({"e7-K4-comm", e7, 4, +1,
                 {simple(7, 6), simple(7, 2), simple(7, 5), simple(7, 4),
                  simple(7, 3), simple(7, 1), lowest(e7)},
                 {z, z, z, z, z, z, z}});
  out.push_back({"e7-K4-anti-a", e7, 4, -1,
                 {simple(7, 1), simple(7, 2), lowest(e7), b3, simple(7, 7),
                  simple(7, 6), simple(7, 5)},
                 {o, o, z, z, z, o, z}});
  out.push_back({"e7-K4-anti-b", e7, 4, -1,
                 {simple(7, 6), simple(7, 2), simple(7, 7), b3, lowest(e7),
                  simple(7, 1), simple(7, 3)},
                 {o, o, z, z, z, o, z}});

  // e8, node 3.
  const RootCoord b1 = {1, 2, 3, 4, 3, 2, 1, 0};
  out.push_back({"e8-K3-anti", e8, 3, -1,
                 {simple(8, 1), lowest(e8), b1, simple(8, 8), simple(8, 7),
                  simple(8, 6), simple(8, 5), simple(8, 4)},
                 {o, z, z, z, z, o, z, z}});

  // e8, node 6.
  const RootCoord b2 = {1, 1, 2, 3, 3, 3, 2, 1};
  out.push_back({"e8-K6-anti", e8, 6, -1,
                 {simple(8, 1), simple(8, 5), simple(8, 3), simple(8, 4),
                  simple(8, 2), b2, lowest(e8), simple(8, 8)},
                 {z, z, z, z, z, z, z, z}});

  // f4, node 3.
  const RootCoord b4 = {1, 2, 3, 1};
  out.push_back({"f4-K3-anti", f4, 3, -1,
                 {simple(4, 1), lowest(f4), b4, simple(4, 4)},
                 {z, z, z, z}});
  return out;
}

}  // namespace

const std::vector<TStarForm>& tstar_forms() {
  static const std::vector<TStarForm> forms = build_forms();
  return forms;
}

const TStarForm& tstar_form(const std::string& id) {
  for (const auto& f : tstar_forms())
    if (f.id == id) return f;
  throw std::domain_error("unknown normal form " + id);
}

RootAut standard_involution(const Chevalley& ch, const std::string& id) {
  const TStarForm& f = tstar_form(id);
  if (ch.rs().type() != f.g)
    throw std::domain_error("normal form " + id + " is for " + f.g.str());
  auto inv = make_involution(ch, f.images, f.phases);
  if (!inv) throw std::logic_error("no involution extends form " + id);
  return *inv;
}

}  // namespace lie
