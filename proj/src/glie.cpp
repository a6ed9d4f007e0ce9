#include "lie/glie.hpp"

#include "lie/linalg.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lie {

Gradation gradation_from_partition(const RootSystem& rs,
                                   const std::vector<int>& weights) {
  if (static_cast<int>(weights.size()) != rs.rank())
    throw std::invalid_argument("partition weight count != rank");
  int top = 0;
  for (int w : weights) {
    if (w < 0) throw std::invalid_argument("negative partition weight");
    top = std::max(top, w);
  }
  if (std::count(weights.begin(), weights.end(), 1) == 0)
    throw std::invalid_argument("partition with empty Pi_1");
  if (top == 0) throw std::invalid_argument("partition with empty Pi_1");

  Gradation g;
  g.Z.assign(rs.rank(), Rat(0));
  for (int i = 0; i < rs.rank(); ++i) g.Z[i] = Rat(weights[i]);
  g.grade_dims[0] = rs.rank();
  for (int id = 0; id < rs.root_count(); ++id) {
    Rat v = rs.eval(rs.root(id), g.Z);
    if (!is_integer(v)) throw std::logic_error("non-integer grade");
    ++g.grade_dims[static_cast<int>(to_int(v))];
  }
  g.kind = static_cast<int>(to_int(rs.eval(rs.highest_root(), g.Z)));
  return g;
}

std::vector<Rat> grade_spectrum(const RootSystem& rs, const RatVec& Z) {
  std::vector<Rat> out = {Rat(0)};
  for (int id = 0; id < rs.root_count(); ++id) {
    Rat v = rs.eval(rs.root(id), Z);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootAut split_cartan_involution(const Chevalley& ch) {
  const RootSystem& rs = ch.rs();
  std::vector<RootCoord> images;
  std::vector<Rat> phases(rs.rank(), Rat(1));
  for (int i = 0; i < rs.rank(); ++i) {
    RootCoord c = rs.root(rs.simple_root_id(i));
    for (int& x : c) x = -x;
    images.push_back(c);
  }
  RootAut theta = RootAut::from_simple_images(ch, images, phases);
  // The negation rule N_{-a,-b} = -N_{a,b} propagates the phase 1 to
  // every root, so theta(E_alpha) = -E_{-alpha} throughout.
  for (int id = 0; id < rs.root_count(); ++id) {
    if (theta.perm(id) != rs.negate(id) || theta.phase(id) != Rat(1))
      throw std::logic_error("split Cartan involution is not -E_{-alpha}");
  }
  return theta;
}

void check_grading(const Chevalley& ch, const Gradation& g, long long budget,
                   unsigned seed) {
  const RootSystem& rs = ch.rs();
  const int m = rs.root_count();
  auto grade_of_root = [&](int id) {
    return to_int(rs.eval(rs.root(id), g.Z));
  };
  auto check_pair = [&](int x, int y) {
    LieElt b = ch.bracket(ch.E(x), ch.E(y));
    long long p = grade_of_root(x), q = grade_of_root(y);
    for (int id = 0; id < m; ++id)
      if (b.e[id] != Rat(0) && grade_of_root(id) != p + q)
        throw std::logic_error("bracket leaves its grade");
    for (int i = 0; i < rs.rank(); ++i)
      if (b.h[i] != Rat(0) && p + q != 0)
        throw std::logic_error("Cartan component off grade 0");
  };
  if (static_cast<long long>(m) * m <= budget) {
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) check_pair(x, y);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (long long k = 0; k < budget / m; ++k) check_pair(pick(rng), pick(rng));
  }
  // theta reverses the grading: theta(g_p) = g_{-p}.
  RootAut theta = split_cartan_involution(ch);
  for (int id = 0; id < m; ++id)
    if (grade_of_root(theta.perm(id)) != -grade_of_root(id))
      throw std::logic_error("theta does not reverse the grading");
}

namespace {

std::vector<SatakeForm> load_forms() {
  std::ifstream in(std::string(LIE_DATA_DIR) + "/satake_forms.tsv");
  if (!in) throw std::runtime_error("cannot open satake_forms.tsv");
  std::vector<SatakeForm> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    SatakeForm f;
    std::string ambient, restricted, pat;
    ss >> f.label >> ambient >> restricted >> f.k_label >> f.k_dim >> pat;
    if (!ss) throw std::runtime_error("malformed satake_forms.tsv row");
    f.ambient = SimpleType::parse(ambient);
    f.restricted = SimpleType::parse(restricted);
    std::istringstream ps(pat);
    std::string tok;
    while (std::getline(ps, tok, ',')) f.restriction.push_back(std::stoi(tok));
    if (static_cast<int>(f.restriction.size()) != f.ambient.rank)
      throw std::runtime_error("restriction pattern length != ambient rank");
    // Validation: the white nodes cover the whole restricted base, and
    // the recomputed restricted marks agree with the restricted system.
    std::vector<int> marks = restricted_marks(f);
    const auto& expect = RootSystem::get(f.restricted).marks();
    if (marks != expect)
      throw std::runtime_error("restricted marks mismatch for " + f.label);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<SatakeForm>& satake_forms() {
  static const std::vector<SatakeForm> forms = load_forms();
  return forms;
}

const SatakeForm& satake_form(const std::string& label) {
  for (const auto& f : satake_forms())
    if (f.label == label) return f;
  throw std::domain_error("unknown real form " + label);
}

std::vector<int> restricted_marks(const SatakeForm& f) {
  const auto& ambient_marks = RootSystem::get(f.ambient).marks();
  std::vector<int> n(f.restricted.rank, 0);
  for (int j = 0; j < f.ambient.rank; ++j) {
    int q = f.restriction[j];
    if (q < 0 || q > f.restricted.rank)
      throw std::runtime_error("restriction index out of range");
    if (q > 0) n[q - 1] += ambient_marks[j];
  }
  for (int v : n)
    if (v == 0) throw std::runtime_error("restricted base not covered");
  return n;
}

RatVec lift_restricted_coweight(const SatakeForm& f, int q) {
  if (q < 1 || q > f.restricted.rank)
    throw std::domain_error("restricted node out of range");
  RatVec h(f.ambient.rank, Rat(0));
  for (int j = 0; j < f.ambient.rank; ++j)
    if (f.restriction[j] == q) h[j] = Rat(1);
  return h;
}

P61Verdict prop61_filter(const SatakeForm& f,
                         const std::vector<int>& restricted_coeffs) {
  if (static_cast<int>(restricted_coeffs.size()) != f.restricted.rank)
    throw std::invalid_argument("coefficient count != restricted rank");
  const RootSystem& rs = RootSystem::get(f.ambient);
  RatVec h(rs.rank(), Rat(0));
  for (int q = 1; q <= f.restricted.rank; ++q)
    if (restricted_coeffs[q - 1] != 0) {
      RatVec l = lift_restricted_coweight(f, q);
      for (int j = 0; j < rs.rank(); ++j)
        h[j] += Rat(restricted_coeffs[q - 1]) * l[j];
    }

  auto fixed_mod = [&](const RatVec& w, long long mod) {
    std::vector<int> ids;
    for (int id = 0; id < rs.root_count(); ++id) {
      Rat v = rs.eval(rs.root(id), w);
      if (is_integer(v) && to_int(v) % mod == 0) ids.push_back(id);
    }
    return ids;
  };
  std::vector<int> fix4 = fixed_mod(h, 4);

  // Symmetric: same fixed algebra as the involution tau_h.
  if (fix4 == fixed_mod(h, 2)) return P61Verdict::Symmetric;

  // 3-symmetric: same fixed algebra as an order-3 torsion element
  // tau_{(2/3)w}; candidates replace restricted coefficients 2 by 1.
  std::vector<int> twos;
  for (int q = 0; q < f.restricted.rank; ++q)
    if (restricted_coeffs[q] == 2) twos.push_back(q);
  for (int mask = 0; mask < (1 << twos.size()); ++mask) {
    std::vector<int> cs = restricted_coeffs;
    for (size_t b = 0; b < twos.size(); ++b)
      if (mask & (1 << b)) cs[twos[b]] = 1;
    RatVec w(rs.rank(), Rat(0));
    for (int q = 1; q <= f.restricted.rank; ++q)
      if (cs[q - 1] != 0) {
        RatVec l = lift_restricted_coweight(f, q);
        for (int j = 0; j < rs.rank(); ++j) w[j] += Rat(cs[q - 1]) * l[j];
      }
    if (fix4 == fixed_mod(w, 3)) return P61Verdict::ThreeSymmetric;
  }

  // Center of the fixed algebra: directions of t orthogonal to every
  // fixed root.  dim z = rank - rank(fixed root matrix).
  RatMat rows;
  for (int id : fix4) {
    RatVec r(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) r[j] = Rat(rs.root(id)[j]);
    rows.push_back(std::move(r));
  }
  int r0 = rows.empty() ? 0 : mat_rank(rows);
  if (rs.rank() - r0 != 1) return P61Verdict::WrongCenterDim;

  // Centralizer test: a root outside the fixed set but inside the row
  // space of the fixed roots commutes with the center, so the fixed
  // algebra would not be the centralizer of its own center.
  for (int id = 0; id < rs.root_count(); ++id) {
    if (std::binary_search(fix4.begin(), fix4.end(), id)) continue;
    RatMat ext = rows;
    RatVec r(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) r[j] = Rat(rs.root(id)[j]);
    ext.push_back(std::move(r));
    if (mat_rank(ext) == r0) return P61Verdict::NotCentralizer;
  }
  return P61Verdict::Accepted;
}

}  // namespace lie
