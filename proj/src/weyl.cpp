#include "lie/weyl.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace lie {

RootCoord reflect_root(const RootSystem& rs, int a_id, const RootCoord& b) {
  const RootCoord& a = rs.root(a_id);
  const int p = rs.pairing(b, a);
  RootCoord out = b;
  for (int j = 0; j < rs.rank(); ++j) out[j] -= p * a[j];
  return out;
}

RatVec reflect_coweight(const RootSystem& rs, int a_id, const RatVec& H) {
  const RootCoord& a = rs.root(a_id);
  const Rat v = rs.eval(a, H);
  if (v == Rat(0)) return H;
  const RatVec av = rs.coroot(a);
  RatVec out = H;
  for (int j = 0; j < rs.rank(); ++j) out[j] -= v * av[j];
  return out;
}

RootCoord apply_word_root(const RootSystem& rs, const WeylWord& w,
                          RootCoord b) {
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    b = reflect_root(rs, *it, b);
  return b;
}

RatVec apply_word_coweight(const RootSystem& rs, const WeylWord& w, RatVec H) {
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    H = reflect_coweight(rs, *it, H);
  return H;
}

RatMat coweight_reflection_matrix(const RootSystem& rs, int a_id) {
  const int n = rs.rank();
  RatMat m = identity_mat(n);
  const RootCoord& a = rs.root(a_id);
  const RatVec av = rs.coroot(a);
  // t_a(K_j) = K_j - alpha(K_j) a^vee = K_j - a_j a^vee.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m[i][j] -= Rat(a[j]) * av[i];
  return m;
}

RatMat coweight_map_from_root_map(const RatMat& root_map) {
  return transpose(mat_inverse(root_map));
}

bool congruent_mod2(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const Rat d = a[i] - b[i];
    if (!is_even_integer(d)) return false;
  }
  return true;
}

RatVec reduce_mod2(const RatVec& h) {
  RatVec out(h.size());
  for (size_t i = 0; i < h.size(); ++i) {
    if (!is_integer(h[i]))
      throw std::domain_error("reduce_mod2: non-integral coweight");
    out[i] = mod(h[i], 2);
  }
  return out;
}

std::set<RatVec> coweight_orbit_mod2(const RootSystem& rs,
                                     const std::vector<int>& refl_ids,
                                     const RatVec& start) {
  return coweight_orbit_modk(rs, refl_ids, start, 2);
}

std::set<RatVec> coweight_orbit_modk(const RootSystem& rs,
                                     const std::vector<int>& refl_ids,
                                     const RatVec& start, int k) {
  auto reduce = [k](const RatVec& h) {
    RatVec out(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
      if (!is_integer(h[i]))
        throw std::domain_error("coweight_orbit_modk: non-integral coweight");
      out[i] = mod(h[i], k);
    }
    return out;
  };
  std::set<RatVec> seen;
  std::deque<RatVec> queue;
  RatVec s = reduce(start);
  seen.insert(s);
  queue.push_back(s);
  while (!queue.empty()) {
    RatVec h = queue.front();
    queue.pop_front();
    for (int id : refl_ids) {
      RatVec img = reduce(reflect_coweight(rs, id, h));
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen;
}

std::optional<WeylWord> find_weyl_element(const RootSystem& rs,
                                          const RatVec& from, const RatVec& to,
                                          bool mod2, int max_depth) {
  constexpr size_t kStateBudget = 200000;
  auto canon = [&](const RatVec& h) {
    if (!mod2) return h;
    RatVec out(h.size());
    for (size_t i = 0; i < h.size(); ++i) out[i] = mod(h[i], 2);
    return out;
  };
  auto matches = [&](const RatVec& h) {
    return mod2 ? congruent_mod2(h, to) : h == to;
  };
  if (matches(from)) return WeylWord{};
  std::map<RatVec, std::pair<RatVec, int>> parent;  // state -> (prev, refl)
  std::deque<std::pair<RatVec, int>> queue;          // (state, depth)
  RatVec s0 = canon(from);
  parent[s0] = {s0, -1};
  queue.push_back({s0, 0});
  while (!queue.empty()) {
    auto [h, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      const int id = rs.simple_root_id(i);
      RatVec img = canon(reflect_coweight(rs, id, h));
      if (parent.count(img)) continue;
      parent[img] = {h, id};
      if (matches(img)) {
        WeylWord w;
        RatVec cur = img;
        while (parent[cur].second >= 0) {
          w.push_back(parent[cur].second);
          cur = parent[cur].first;
        }
        // Built from target back to source; entries already act
        // right-to-left on the source, so keep the order as collected.
        return w;
      }
      if (parent.size() > kStateBudget) return std::nullopt;
      queue.push_back({img, depth + 1});
    }
  }
  return std::nullopt;
}

}  // namespace lie
