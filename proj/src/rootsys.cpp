#include "lie/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace lie {

namespace {

// ---------------------------------------------------------------------------
// Cartan matrices (Bourbaki numbering) and root lengths
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  const int n = t.rank;
  // Build 1-based to match the plate numbering, re-index at the end.
  std::vector<std::vector<int>> c1(n + 1, std::vector<int>(n + 1, 0));
  auto L = [&](int i, int j) { c1[i][j] = c1[j][i] = -1; };
  auto CH = [&](int a, int b) {
    for (int i = a; i < b; ++i) L(i, i + 1);
  };
  for (int i = 1; i <= n; ++i) c1[i][i] = 2;
  switch (t.family) {
    case Family::A:
      CH(1, n);
      break;
    case Family::B:
      CH(1, n - 1);
      c1[n - 1][n] = -2;  // alpha_n is the short root
      c1[n][n - 1] = -1;
      break;
    case Family::C:
      CH(1, n - 1);
      c1[n - 1][n] = -1;  // alpha_n is the long root
      c1[n][n - 1] = -2;
      break;
    case Family::D:
      CH(1, n - 1);
      L(n - 2, n);
      c1[n - 1][n] = c1[n][n - 1] = 0;
      break;
    case Family::E:
      // Chain 1-3-4-5-...-n with node 2 attached to node 4.
      L(1, 3);
      CH(3, n);
      L(2, 4);
      break;
    case Family::F:
      L(1, 2);
      c1[2][3] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c1[3][2] = -1;
      L(3, 4);
      break;
    case Family::G:
      c1[1][2] = -1;  // alpha_1 short, alpha_2 long (delta = 3a1 + 2a2)
      c1[2][1] = -3;
      break;
  }
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = c1[i + 1][j + 1];
  return c;
}

std::vector<Rat> half_length_vector(SimpleType t) {
  const int n = t.rank;
  std::vector<Rat> d(n, Rat(1));  // long roots normalized to length^2 = 2
  switch (t.family) {
    case Family::B:
      d[n - 1] = Rat(1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Family::F:
      d[2] = d[3] = Rat(1, 2);
      break;
    case Family::G:
      d[0] = Rat(1, 3);
      break;
    default:
      break;
  }
  return d;
}

void validate(SimpleType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported simple type " + t.str());
}

}  // namespace

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type string '" + s + "'");
  char f = s[0];
  if (f < 'A' || f > 'G' || f == 'H')
    throw std::invalid_argument("bad type string '" + s + "'");
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad type string '" + s + "'");
  }
  SimpleType t{static_cast<Family>(f), rank};
  validate(t);
  return t;
}

int algebra_dim(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B: return n * (2 * n + 1);
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

int TypeLabel::dim() const {
  int d = center_dim;
  for (const auto& f : factors) d += algebra_dim(f);
  return d;
}

int TypeLabel::rank() const {
  int r = center_dim;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string TypeLabel::str() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "+";
    s += f.str();
  }
  if (center_dim > 0) {
    if (!s.empty()) s += "+";
    s += center_dim == 1 ? "R" : ("R^" + std::to_string(center_dim));
  }
  if (s.empty()) s = "0";
  return s;
}

TypeLabel TypeLabel::canonical() const {
  TypeLabel out;
  out.center_dim = center_dim;
  for (const auto& f : factors) {
    const int n = f.rank;
    switch (f.family) {
      case Family::B:
      case Family::C:
        if (n == 0) break;
        if (n == 1)
          out.factors.push_back({Family::A, 1});
        else if (n == 2)
          out.factors.push_back({Family::B, 2});
        else
          out.factors.push_back(f);
        break;
      case Family::D:
        if (n == 0) break;
        if (n == 1)
          out.center_dim += 1;
        else if (n == 2) {
          out.factors.push_back({Family::A, 1});
          out.factors.push_back({Family::A, 1});
        } else if (n == 3)
          out.factors.push_back({Family::A, 3});
        else
          out.factors.push_back(f);
        break;
      default:
        out.factors.push_back(f);
        break;
    }
  }
  // Sort descending by (rank, family letter) for a stable printable form.
  std::sort(out.factors.begin(), out.factors.end(),
            [](const SimpleType& a, const SimpleType& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return static_cast<char>(a.family) < static_cast<char>(b.family);
            });
  return out;
}

// ---------------------------------------------------------------------------
// RootSystem construction: height-by-height closure via root strings
// ---------------------------------------------------------------------------

RootSystem RootSystem::build(SimpleType t) {
  validate(t);
  RootSystem rs;
  rs.type_ = t;
  rs.n_ = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.d_ = half_length_vector(t);

  const int n = rs.n_;
  std::map<RootCoord, int> seen;  // coord -> height
  std::vector<RootCoord> level;   // current height layer
  std::vector<RootCoord> positives;
  for (int i = 0; i < n; ++i) {
    RootCoord a(n, 0);
    a[i] = 1;
    level.push_back(a);
    seen[a] = 1;
    positives.push_back(a);
  }
  // Membership test against the positives found so far; a candidate with
  // mixed signs is never a root, one with all coordinates <= 0 is the
  // negative of a known positive.
  auto is_root = [&](const RootCoord& x) {
    bool any = false, all_nonneg = true, all_nonpos = true;
    for (int v : x) {
      if (v != 0) any = true;
      if (v < 0) all_nonneg = false;
      if (v > 0) all_nonpos = false;
    }
    if (!any) return false;
    if (all_nonneg) return seen.count(x) > 0;
    if (!all_nonpos) return false;
    RootCoord neg(x.size());
    for (size_t j = 0; j < x.size(); ++j) neg[j] = -x[j];
    return seen.count(neg) > 0;
  };
  while (!level.empty()) {
    std::vector<RootCoord> next;
    for (const auto& b : level) {
      for (int i = 0; i < n; ++i) {
        // b + alpha_i is a root iff q > 0, where q = p - <b, alpha_i^vee>
        // and p is the largest k with b - k*alpha_i a root.
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += b[j] * rs.cartan_[j][i];
        int p = 0;
        RootCoord down = b;
        while (true) {
          down[i] -= 1;
          if (!is_root(down)) break;
          ++p;
        }
        if (p - pair > 0) {
          RootCoord up = b;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = 1;
            next.push_back(up);
            positives.push_back(up);
          }
        }
      }
    }
    level = std::move(next);
  }

  std::sort(positives.begin(), positives.end(),
            [](const RootCoord& a, const RootCoord& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  rs.n_pos_ = static_cast<int>(positives.size());
  rs.roots_ = positives;
  for (const auto& a : positives) {
    RootCoord neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -a[j];
    rs.roots_.push_back(neg);
  }
  for (int id = 0; id < static_cast<int>(rs.roots_.size()); ++id)
    rs.index_[rs.roots_[id]] = id;

  rs.simple_ids_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootCoord a(n, 0);
    a[i] = 1;
    rs.simple_ids_[i] = rs.index_.at(a);
  }
  rs.highest_id_ = rs.n_pos_ - 1;  // unique root of maximal height
  rs.marks_ = rs.roots_[rs.highest_id_];
  return rs;
}

const RootSystem& RootSystem::get(SimpleType t) {
  static std::map<SimpleType, RootSystem> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return it->second;
}

int RootSystem::height(int id) const {
  const auto& c = roots_[id];
  return std::accumulate(c.begin(), c.end(), 0);
}

std::optional<int> RootSystem::index_of(const RootCoord& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rat RootSystem::inner(const RootCoord& a, const RootCoord& b) const {
  // (alpha_i, alpha_j) = C[i][j] * d_j.
  Rat s(0);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(cartan_[i][j]) * d_[j] * Rat(b[j]);
    }
  }
  return s;
}

int RootSystem::pairing(const RootCoord& b, const RootCoord& a) const {
  Rat v = Rat(2) * inner(b, a) / inner(a, a);
  return static_cast<int>(to_int(v));
}

RatVec RootSystem::coroot(const RootCoord& a) const {
  // a^vee = sum_i a_i (d_i / d_a) alpha_i^vee, alpha_i^vee = i-th Cartan
  // column in the coweight basis.
  RatVec v(n_, Rat(0));
  const Rat da = half_length(a);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    const Rat coef = Rat(a[i]) * d_[i] / da;
    for (int j = 0; j < n_; ++j) v[j] += coef * Rat(cartan_[j][i]);
  }
  return v;
}

Rat RootSystem::eval(const RootCoord& alpha, const RatVec& H) const {
  Rat s(0);
  for (int i = 0; i < n_; ++i)
    if (alpha[i] != 0) s += Rat(alpha[i]) * H[i];
  return s;
}

std::vector<int> RootSystem::subsystem_base(const std::vector<int>& ids) const {
  std::vector<int> pos;
  std::map<RootCoord, int> member;
  for (int id : ids) {
    member[roots_[id]] = id;
    if (is_positive(id)) pos.push_back(id);
  }
  std::vector<int> base;
  for (int b : pos) {
    bool decomposable = false;
    for (int g1 : pos) {
      if (g1 == b) continue;
      RootCoord diff(n_);
      for (int j = 0; j < n_; ++j) diff[j] = roots_[b][j] - roots_[g1][j];
      auto it = member.find(diff);
      if (it != member.end() && is_positive(it->second)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(b);
  }
  std::sort(base.begin(), base.end());
  return base;
}

TypeLabel RootSystem::base_type(const std::vector<int>& base_ids) const {
  const int m = static_cast<int>(base_ids.size());
  // Pairwise integer pairings of the base elements.
  std::vector<std::vector<int>> c(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      c[i][j] = pairing(roots_[base_ids[i]], roots_[base_ids[j]]);

  // Connected components of the Dynkin graph.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (comp[v] < 0 && c[u][v] != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  TypeLabel out;
  for (int k = 0; k < ncomp; ++k) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (comp[i] == k) nodes.push_back(i);
    const int r = static_cast<int>(nodes.size());
    if (r == 1) {
      out.factors.push_back({Family::A, 1});
      continue;
    }
    // Edge multiplicities and degrees within the component.
    int max_mult = 1, n_double = 0, n_triple = 0;
    std::vector<int> deg(r, 0);
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b) {
        int mult = c[nodes[a]][nodes[b]] * c[nodes[b]][nodes[a]];
        if (mult > 0) {
          ++deg[a];
          ++deg[b];
          max_mult = std::max(max_mult, mult);
          if (mult == 2) ++n_double;
          if (mult == 3) ++n_triple;
        }
      }
    int max_deg = *std::max_element(deg.begin(), deg.end());
    auto bad = [&]() {
      throw std::logic_error("base_type: unrecognized diagram component");
    };
    if (n_triple > 0) {
      if (r != 2 || n_triple != 1) bad();
      out.factors.push_back({Family::G, 2});
    } else if (n_double > 0) {
      if (n_double != 1 || max_deg > 2) bad();
      // A chain with one double edge: F4, B_r, or C_r by short-root count.
      int n_short = 0;
      Rat dmax(0);
      for (int a = 0; a < r; ++a)
        dmax = std::max(dmax, half_length(roots_[base_ids[nodes[a]]]));
      for (int a = 0; a < r; ++a)
        if (half_length(roots_[base_ids[nodes[a]]]) < dmax) ++n_short;
      if (r == 4 && n_short == 2)
        out.factors.push_back({Family::F, 4});
      else if (r == 2)
        out.factors.push_back({Family::B, 2});
      else if (n_short == 1)
        out.factors.push_back({Family::B, r});
      else if (n_short == r - 1)
        out.factors.push_back({Family::C, r});
      else
        bad();
    } else if (max_deg <= 2) {
      out.factors.push_back({Family::A, r});
    } else {
      // Simply-laced with a branch node: D or E by arm lengths.
      int branches = 0;
      for (int a = 0; a < r; ++a)
        if (deg[a] == 3) ++branches;
      if (branches != 1 || max_deg != 3) bad();
      // Arm lengths from the branch node.
      int bnode = 0;
      for (int a = 0; a < r; ++a)
        if (deg[a] == 3) bnode = a;
      std::vector<int> arms;
      for (int s = 0; s < r; ++s) {
        if (s == bnode || c[nodes[bnode]][nodes[s]] == 0) continue;
        int len = 1, prev = bnode, cur = s;
        while (true) {
          int nxt = -1;
          for (int v = 0; v < r; ++v)
            if (v != prev && v != cur && c[nodes[cur]][nodes[v]] != 0) nxt = v;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3) bad();
      if (arms[0] == 1 && arms[1] == 1)
        out.factors.push_back({Family::D, r});
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        out.factors.push_back({Family::E, r});
      else
        bad();
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const SimpleType& a, const SimpleType& b) {
              if (a.rank != b.rank) return a.rank > b.rank;
              return static_cast<char>(a.family) < static_cast<char>(b.family);
            });
  return out;
}

}  // namespace lie
