#include "lie/classify.hpp"

#include "lie/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

// ------------------------------------------------------------- utilities --

std::string data_path(const std::string& rel) {
  return std::string(LIE_DATA_DIR) + "/" + rel;
}

// Whitespace-tokenized data rows, comments and blank lines skipped.
std::vector<std::vector<std::string>> read_rows(const std::string& rel) {
  std::ifstream in(data_path(rel));
  if (!in) throw std::runtime_error("cannot open data file " + rel);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  return rows;
}

RootCoord parse_root_coords(const std::string& s) {
  RootCoord c;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
  return c;
}

RatVec to_ratvec(const RootCoord& c) {
  RatVec v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = Rat(c[i]);
  return v;
}

int root_id_of(const RootSystem& rs, const RootCoord& c) {
  auto id = rs.index_of(c);
  if (!id) throw std::invalid_argument("not a root of " + rs.type().str());
  return *id;
}

RatVec fundamental_coweight(const RootSystem& rs, int node_1based) {
  RatVec K(rs.rank(), Rat(0));
  K.at(node_1based - 1) = Rat(1);
  return K;
}

// Exact inner product on rational root-coordinate vectors:
// (alpha_i, alpha_j) = d_j * C[i][j].
Rat gram_inner(const RootSystem& rs, const RatVec& u, const RatVec& v) {
  const auto& C = rs.cartan();
  const auto& d = rs.half_lengths();
  const int n = rs.rank();
  Rat s(0);
  for (int i = 0; i < n; ++i) {
    if (u[i] == Rat(0)) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == Rat(0) || C[i][j] == 0) continue;
      s += u[i] * v[j] * d[j] * Rat(C[i][j]);
    }
  }
  return s;
}

bool same_perm(const RootAut& a, const RootAut& b) {
  const int m = a.rs().root_count();
  for (int id = 0; id < m; ++id)
    if (a.perm(id) != b.perm(id)) return false;
  return true;
}

// --------------------------------------------------- label parsing pieces --

std::vector<std::string> split_top(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == delim && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses");
  out.push_back(cur);
  return out;
}

void append_su(TypeLabel& out, int n) {
  if (n >= 2) out.factors.push_back({Family::A, n - 1});
}

void append_so(TypeLabel& out, int n) {
  if (n <= 1) return;
  if (n == 2) {
    out.center_dim += 1;
  } else if (n == 3) {
    out.factors.push_back({Family::A, 1});
  } else if (n == 4) {
    out.factors.push_back({Family::A, 1});
    out.factors.push_back({Family::A, 1});
  } else if (n == 6) {
    out.factors.push_back({Family::A, 3});
  } else if (n % 2 == 1) {
    out.factors.push_back({Family::B, (n - 1) / 2});
  } else {
    out.factors.push_back({Family::D, n / 2});
  }
}

void append_sp(TypeLabel& out, int n) {
  if (n == 1)
    out.factors.push_back({Family::A, 1});
  else if (n >= 2)
    out.factors.push_back({Family::C, n});
}

int paren_arg(const std::string& t, size_t open) {
  if (open >= t.size() || t[open] != '(' || t.back() != ')')
    throw std::invalid_argument("bad label term '" + t + "'");
  return std::stoi(t.substr(open + 1, t.size() - open - 2));
}

void parse_terms(const std::string& s, TypeLabel& out);

void parse_term(const std::string& t, TypeLabel& out) {
  if (t.empty()) throw std::invalid_argument("empty label term");
  if (t.front() == '(' && t.back() == ')') {
    // A parenthesized group, provided the parens match each other.
    int depth = 0;
    bool wraps = true;
    for (size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (wraps) {
      parse_terms(t.substr(1, t.size() - 2), out);
      return;
    }
  }
  if (t == "R") {
    out.center_dim += 1;
    return;
  }
  if (t.rfind("R^", 0) == 0) {
    out.center_dim += std::stoi(t.substr(2));
    return;
  }
  if (t.size() >= 2 && t[0] >= 'A' && t[0] <= 'G' &&
      std::all_of(t.begin() + 1, t.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const Family fam = static_cast<Family>(t[0]);
    const int r = std::stoi(t.substr(1));
    if (r == 0) return;
    if (fam == Family::D && r == 1) {
      out.center_dim += 1;  // D_1 = so(2)
      return;
    }
    out.factors.push_back({fam, r});
    return;
  }
  if (t.rfind("su(", 0) == 0) {
    append_su(out, paren_arg(t, 2));
    return;
  }
  if (t.rfind("so(", 0) == 0) {
    append_so(out, paren_arg(t, 2));
    return;
  }
  if (t.rfind("sp(", 0) == 0) {
    append_sp(out, paren_arg(t, 2));
    return;
  }
  if (t.rfind("u(", 0) == 0) {
    append_su(out, paren_arg(t, 1));
    out.center_dim += 1;
    return;
  }
  if (t.rfind("s(", 0) == 0 && t.back() == ')') {
    const auto parts = split_top(t.substr(2, t.size() - 3), '+');
    for (const auto& p : parts) {
      if (p.rfind("u(", 0) != 0)
        throw std::invalid_argument("bad s(...) term '" + t + "'");
      append_su(out, paren_arg(p, 1));
    }
    out.center_dim += static_cast<int>(parts.size()) - 1;
    return;
  }
  if (t == "e6" || t == "e7" || t == "e8") {
    out.factors.push_back({Family::E, t[1] - '0'});
    return;
  }
  if (t == "f4") {
    out.factors.push_back({Family::F, 4});
    return;
  }
  if (t == "g2") {
    out.factors.push_back({Family::G, 2});
    return;
  }
  throw std::invalid_argument("unrecognized label term '" + t + "'");
}

void parse_terms(const std::string& s, TypeLabel& out) {
  for (const auto& t : split_top(s, '+')) parse_term(t, out);
}

}  // namespace

TypeLabel parse_type_label(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  TypeLabel out;
  if (s.empty() || s == "0") return out;
  parse_terms(s, out);
  return out;
}

// ---------------------------------------------------------------- coweights --

RatVec parse_coweight_expr(const std::string& s0, int rank) {
  std::string s;
  for (char c : s0)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  RatVec H(rank, Rat(0));
  if (s.empty() || s == "-" || s == "0") return H;
  size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
      ++j;
    Rat coeff(1);
    if (j > i) {
      coeff = parse_rat(s.substr(i, j - i));
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i >= s.size() || s[i] != 'K')
      throw std::invalid_argument("bad coweight expression '" + s0 + "'");
    ++i;
    j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i)
      throw std::invalid_argument("bad coweight expression '" + s0 + "'");
    const int idx = std::stoi(s.substr(i, j - i));
    i = j;
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("coweight index out of range in '" + s0 +
                                  "'");
    H[idx - 1] += Rat(sign) * coeff;
  }
  return H;
}

std::string coweight_str(const RatVec& h) {
  std::string out;
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i] == Rat(0)) continue;
    Rat c = h[i];
    if (!out.empty() && c > Rat(0)) out += "+";
    if (c == Rat(-1))
      out += "-";
    else if (c != Rat(1))
      out += to_string(c);
    out += "K" + std::to_string(i + 1);
  }
  return out.empty() ? "-" : out;
}

// -------------------------------------------------------------- golden data --

std::string GoldenBlock::key() const {
  std::string k = g.str() + ":" + std::to_string(node);
  if (outer()) k += "-" + rows.front().base;
  return k;
}

bool GoldenBlock::outer() const {
  return !rows.empty() && (rows.front().base == "phi" || rows.front().base == "psi");
}

const std::vector<GoldenBlock>& golden_table(int n) {
  static std::map<int, std::vector<GoldenBlock>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n != 2 && n != 3 && n != 4 && n != 5 && n != 7 && n != 8)
    throw std::invalid_argument("no block-structured golden table " +
                                std::to_string(n));
  std::vector<GoldenBlock> blocks;
  for (const auto& row : read_rows("golden/table" + std::to_string(n) + ".tsv")) {
    if (row[0] == "block") {
      if (row.size() != 4) throw std::runtime_error("malformed block line");
      blocks.push_back(
          {SimpleType::parse(row[1]), std::stoi(row[2]), row[3], {}});
    } else if (row[0] == "row") {
      if (row.size() != 5 || blocks.empty())
        throw std::runtime_error("malformed row line");
      blocks.back().rows.push_back({row[1], row[2], row[3], row[4]});
    } else {
      throw std::runtime_error("unknown line kind '" + row[0] + "'");
    }
  }
  return cache.emplace(n, std::move(blocks)).first->second;
}

const std::vector<Table1Row>& golden_table1() {
  static std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    for (const auto& r : read_rows("golden/table1.tsv")) {
      if (r.size() != 4) throw std::runtime_error("malformed table1 line");
      out.push_back(
          {SimpleType::parse(r[0]), std::stoi(r[1]), std::stoi(r[2]), r[3]});
    }
    return out;
  }();
  return rows;
}

const std::vector<Table6Row>& golden_table6() {
  static std::vector<Table6Row> rows = [] {
    std::vector<Table6Row> out;
    for (const auto& r : read_rows("golden/table6.tsv")) {
      if (r.size() != 9 || r[0] != "row")
        throw std::runtime_error("malformed table6 line");
      out.push_back({SimpleType::parse(r[1]), std::stoi(r[2]), r[3], r[4],
                     std::stoi(r[5]), r[6], r[7], r[8]});
    }
    return out;
  }();
  return rows;
}

const std::vector<Discrepancy>& discrepancies() {
  static std::vector<Discrepancy> list = [] {
    std::vector<Discrepancy> out;
    for (const auto& r : read_rows("golden/discrepancies.tsv")) {
      if (r.size() != 6) throw std::runtime_error("malformed discrepancy line");
      out.push_back({std::stoi(r[0]), r[1], r[2], r[3], r[4], r[5]});
    }
    return out;
  }();
  return list;
}

namespace {

const Discrepancy* find_discrepancy(int table, const std::string& block,
                                    const std::string& rowkey,
                                    const std::string& column) {
  for (const auto& d : discrepancies())
    if (d.table == table && d.block == block && d.rowkey == rowkey &&
        d.column == column)
      return &d;
  return nullptr;
}

}  // namespace

// --------------------------------------------------- involutions from rows --

namespace {

RootAut psi_involution(const Chevalley& ch) {
  const RootSystem& rs = ch.rs();
  if (rs.type() != SimpleType{Family::E, 6})
    throw std::domain_error("psi is an involution of e6");
  static const int flip[6] = {6, 2, 5, 4, 3, 1};
  std::vector<RootCoord> images;
  for (int i = 0; i < 6; ++i)
    images.push_back(rs.root(rs.simple_root_id(flip[i] - 1)));
  auto inv = make_involution(ch, images, std::vector<Rat>(6, Rat(0)));
  if (!inv) throw std::logic_error("no involution extends the e6 diagram flip");
  return *inv;
}

}  // namespace

RootAut base_involution(const Chevalley& ch, const std::string& base) {
  // The printed normal forms tau1..tau4 fix a root-lattice action but leave
  // some unit constants in the lift free; standard_involution() picks one
  // branch.  The torsion offsets below pin each lift to the branch the
  // source tables use, so regenerated rows carry the printed labels.
  struct Pinned {
    const char* form;
    const char* offset;
  };
  static const std::map<std::string, Pinned> form_of = {
      {"tau1", {"e8-K3-anti", "1/2K3"}},
      {"tau2", {"e8-K6-anti", "K3+1/2K6"}},
      {"tau3", {"e7-K4-anti-a", "1/2K4"}},
      {"tau4", {"f4-K3-anti", "K1+K4"}},
      {"phi", {"e7-K4-comm", "-"}}};
  auto it = form_of.find(base);
  if (it != form_of.end()) {
    RootAut X = standard_involution(ch, it->second.form);
    const RatVec off = parse_coweight_expr(it->second.offset, ch.rs().rank());
    X = X.compose(RootAut::torsion(ch, off));
    if (!X.is_involution())
      throw std::logic_error("pinned lift of " + base + " is not involutive");
    return X;
  }
  if (base == "psi") return psi_involution(ch);
  if (base == "tau3phi") {
    RootAut X = base_involution(ch, "tau3").compose(base_involution(ch, "phi"));
    if (X.is_involution()) return X;
    // The preferred lifts compose to an order-4 map; re-extend the composed
    // root images with a correcting torus factor.
    const RootSystem& rs = ch.rs();
    std::vector<RootCoord> images;
    std::vector<Rat> phases;
    for (int i = 0; i < rs.rank(); ++i) {
      const int id = rs.simple_root_id(i);
      images.push_back(rs.root(X.perm(id)));
      phases.push_back(X.phase(id));
    }
    auto inv = make_involution(ch, images, phases);
    if (!inv) throw std::logic_error("tau3 o phi has no involutive lift");
    return *inv;
  }
  throw std::invalid_argument("unknown base involution '" + base + "'");
}

RootAut row_involution(const Chevalley& ch, const GoldenRow& row) {
  const RatVec H = parse_coweight_expr(row.twist, ch.rs().rank());
  if (row.base == "-") {
    for (const Rat& c : H)
      if (!is_integer(c))
        throw std::invalid_argument("inner row with non-integral twist");
    return RootAut::torsion(ch, H);
  }
  RootAut X = base_involution(ch, row.base).compose(RootAut::torsion(ch, H));
  if (!X.is_involution())
    throw std::logic_error("row " + row.base + "/" + row.twist +
                           " is not an involution");
  return X;
}

// ------------------------------------------------------------- subalgebras --

const std::vector<int>& delta_h_ids(const RootSystem& rs, int node_1based) {
  static std::map<std::pair<std::string, int>, std::vector<int>> cache;
  const auto key = std::make_pair(rs.type().str(), node_1based);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RatVec H = fundamental_coweight(rs, node_1based);
  for (Rat& c : H) c /= 2;
  return cache.emplace(key, fixed_subalgebra(rs, H).root_ids).first->second;
}

TypeLabel k_type(const RootAut& tau) {
  const int d = tau.dim_fixed_eigen();
  if (d != tau.dim_fixed_formula())
    throw std::logic_error("dimension formula disagrees with eigencount");
  return symmetric_subalgebra_type(tau.rs().type(), d);
}

int hk_dim(const RootAut& tau, int node_1based) {
  return tau.dim_fixed_restricted(delta_h_ids(tau.rs(), node_1based));
}

namespace {

// Type of one connected component of a (restricted) simple system, given
// as rational root-coordinate vectors with the ambient Gram form.
SimpleType classify_simple_component(const RootSystem& rs,
                                     const std::vector<RatVec>& S) {
  const int r = static_cast<int>(S.size());
  if (r == 1) return {Family::A, 1};
  std::vector<Rat> len(r);
  for (int i = 0; i < r; ++i) len[i] = gram_inner(rs, S[i], S[i]);
  std::vector<std::vector<long long>> bond(r, std::vector<long long>(r, 0));
  std::vector<int> deg(r, 0);
  long long maxbond = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const Rat nij = Rat(2) * gram_inner(rs, S[i], S[j]) / len[j];
      const Rat nji = Rat(2) * gram_inner(rs, S[j], S[i]) / len[i];
      if (!is_integer(nij) || !is_integer(nji))
        throw std::logic_error("non-integral restricted Cartan pairing");
      bond[i][j] = to_int(nij) * to_int(nji);
      if (bond[i][j] < 0 || bond[i][j] > 3)
        throw std::logic_error("invalid restricted bond");
      if (bond[i][j] != 0 && i < j) {
        ++deg[i];
        ++deg[j];
      }
      maxbond = std::max(maxbond, bond[i][j]);
    }
  if (maxbond == 3) {
    if (r != 2) throw std::logic_error("G2 bond in rank > 2 system");
    return {Family::G, 2};
  }
  if (maxbond == 2) {
    if (r == 2) return {Family::B, 2};
    int di = -1, dj = -1;
    for (int i = 0; i < r && di < 0; ++i)
      for (int j = i + 1; j < r; ++j)
        if (bond[i][j] == 2) {
          di = i;
          dj = j;
          break;
        }
    if (r == 4 && deg[di] == 2 && deg[dj] == 2) return {Family::F, 4};
    const Rat lmax = *std::max_element(len.begin(), len.end());
    const int nl = static_cast<int>(std::count(len.begin(), len.end(), lmax));
    const int ns = r - nl;
    if (nl > ns) return {Family::B, r};
    if (ns > nl) return {Family::C, r};
    throw std::logic_error("unrecognized doubly-laced diagram");
  }
  // Simply laced.
  int branch = -1;
  for (int i = 0; i < r; ++i) {
    if (deg[i] > 3) throw std::logic_error("diagram vertex of degree > 3");
    if (deg[i] == 3) {
      if (branch >= 0) throw std::logic_error("two branch vertices");
      branch = i;
    }
  }
  if (branch < 0) return {Family::A, r};
  std::vector<int> arms;
  for (int nb = 0; nb < r; ++nb) {
    if (bond[branch][nb] == 0) continue;
    int prev = branch, cur = nb, length = 1;
    while (true) {
      int next = -1;
      for (int k = 0; k < r; ++k)
        if (k != prev && k != cur && bond[cur][k] != 0) {
          if (next >= 0) throw std::logic_error("diagram is not a tree");
          next = k;
        }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("bad branch arm count");
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, r};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {Family::E, r};
  throw std::logic_error("unrecognized simply-laced diagram");
}

}  // namespace

TypeLabel hk_sigma_type(const RootAut& tau, int node_1based) {
  const RootSystem& rs = tau.rs();
  const auto& ids = delta_h_ids(rs, node_1based);
  std::vector<char> in_h(rs.root_count(), 0);
  for (int id : ids) in_h[id] = 1;

  // Restricted weights on t_+ of the tau-fixed part of h: one dimension per
  // fixed root space with trivial phase and one per 2-orbit of the root
  // permutation; the weight is the rmat-invariant average (alpha + M a)/2.
  std::map<RatVec, int> mult;
  int zero_extra = 0;
  for (int id : ids) {
    const int p = tau.perm(id);
    if (!in_h[p]) throw std::domain_error("involution does not normalize h");
    RatVec w;
    if (p == id) {
      if (tau.phase(id) != Rat(0)) continue;
      w = to_ratvec(rs.root(id));
    } else if (id < p) {
      w = Rat(1, 2) * (to_ratvec(rs.root(id)) + to_ratvec(rs.root(p)));
      if (is_zero(w)) {
        ++zero_extra;
        continue;
      }
    } else {
      continue;
    }
    ++mult[w];
  }
  for (const auto& [w, m] : mult)
    if (m != 1)
      throw std::logic_error("restricted-root multiplicity > 1 on t_+");

  // Reduce: drop the doubles of a non-reduced pair.
  std::set<RatVec> sigma_all;
  for (const auto& [w, m] : mult) sigma_all.insert(w);
  std::vector<RatVec> pos;
  for (const auto& w : sigma_all) {
    if (sigma_all.count(Rat(1, 2) * w)) continue;
    for (const Rat& c : w) {
      if (c == Rat(0)) continue;
      if (c > Rat(0)) pos.push_back(w);
      break;
    }
  }

  // Simple restricted roots: positives that are not sums of two positives.
  std::set<RatVec> posset(pos.begin(), pos.end());
  std::vector<RatVec> simples;
  for (const auto& w : pos) {
    bool decomposable = false;
    for (const auto& u : pos) {
      if (u == w) continue;
      if (posset.count(w - u)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(w);
  }

  // Connected components under the Gram form.
  const int m = static_cast<int>(simples.size());
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && gram_inner(rs, simples[x], simples[j]) != Rat(0)) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }

  TypeLabel out;
  int ranksum = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<RatVec> S;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) S.push_back(simples[i]);
    const SimpleType t = classify_simple_component(rs, S);
    out.factors.push_back(t);
    ranksum += t.rank;
  }
  RatMat A = tau.coweight_matrix();
  for (int i = 0; i < rs.rank(); ++i) A[i][i] -= Rat(1);
  const int t_plus = rs.rank() - mat_rank(A);
  out.center_dim = t_plus + zero_extra - ranksum;
  if (out.center_dim < 0)
    throw std::logic_error("negative restricted center dimension");
  return out;
}

namespace {

// Fixed subalgebra of an involutive automorphism of the compact simple
// algebra of type T, looked up by its dimension (dimensions are distinct
// among the symmetric subalgebras of each type needed here).
TypeLabel outer_fixed_catalog(SimpleType T, int d) {
  auto mk = [](std::vector<SimpleType> f, int z = 0) {
    TypeLabel l;
    l.factors = std::move(f);
    l.center_dim = z;
    return l;
  };
  if (d == algebra_dim(T)) return mk({T});
  std::vector<std::pair<int, TypeLabel>> cand;
  if (T.family == Family::A) {
    const int n = T.rank + 1;
    {
      TypeLabel l;
      append_so(l, n);
      cand.push_back({n * (n - 1) / 2, l});
    }
    if (n % 2 == 0) {
      TypeLabel l;
      append_sp(l, n / 2);
      cand.push_back({n * (n + 1) / 2, l});
    }
    for (int a = 1; 2 * a <= n; ++a) {
      TypeLabel l;
      append_su(l, a);
      append_su(l, n - a);
      l.center_dim = 1;
      cand.push_back({a * a + (n - a) * (n - a) - 1, l});
    }
  } else if (T == SimpleType{Family::D, 5}) {
    const Family A = Family::A, B = Family::B, D = Family::D;
    cand = {{36, mk({{B, 4}})},           {29, mk({{D, 4}}, 1)},
            {24, mk({{B, 3}, {A, 1}})},   {21, mk({{A, 3}, {A, 1}, {A, 1}})},
            {20, mk({{B, 2}, {B, 2}})},   {25, mk({{A, 4}}, 1)}};
  } else if (T == SimpleType{Family::E, 6}) {
    const Family A = Family::A, C = Family::C, D = Family::D, F = Family::F;
    cand = {{52, mk({{F, 4}})},
            {46, mk({{D, 5}}, 1)},
            {38, mk({{A, 5}, {A, 1}})},
            {36, mk({{C, 4}})}};
  } else {
    throw std::domain_error("no symmetric-subalgebra catalog for " + T.str());
  }
  const TypeLabel* hit = nullptr;
  for (const auto& [dd, l] : cand) {
    if (dd != d) continue;
    if (hit && !(hit->canonical() == l.canonical()))
      throw std::logic_error("ambiguous symmetric subalgebra of " + T.str() +
                             " at dim " + std::to_string(d));
    hit = &l;
  }
  if (!hit)
    throw std::domain_error("no symmetric subalgebra of " + T.str() +
                            " with dim " + std::to_string(d));
  return *hit;
}

}  // namespace

TypeLabel hk_algebra_type(const RootAut& tau, int node_1based) {
  const RootSystem& rs = tau.rs();
  RatVec Hs = fundamental_coweight(rs, node_1based);
  for (Rat& c : Hs) c /= 2;
  const FixedData fd = fixed_subalgebra(rs, Hs);

  // Connected components of the base of Delta_h.
  const int m = static_cast<int>(fd.base_ids.size());
  std::vector<int> cidx(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (cidx[i] >= 0) continue;
    cidx[i] = ncomp;
    std::vector<int> stack = {i};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j)
        if (cidx[j] < 0 &&
            rs.pairing(rs.root(fd.base_ids[x]), rs.root(fd.base_ids[j])) != 0) {
          cidx[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> comp_base(ncomp);
  for (int i = 0; i < m; ++i) comp_base[cidx[i]].push_back(fd.base_ids[i]);

  // Component membership of every root of Delta_h.
  std::map<int, int> comp_of;
  for (int id : fd.root_ids) {
    int found = -1;
    for (int c = 0; c < ncomp; ++c)
      for (int b : comp_base[c])
        if (rs.pairing(rs.root(id), rs.root(b)) != 0) {
          if (found >= 0 && found != c)
            throw std::logic_error("root meets two components of h");
          found = c;
        }
    if (found < 0) throw std::logic_error("root orthogonal to the base of h");
    comp_of[id] = found;
  }

  // tau permutes the components.
  std::vector<int> img(ncomp, -1);
  for (int id : fd.root_ids) {
    auto pit = comp_of.find(tau.perm(id));
    if (pit == comp_of.end())
      throw std::domain_error("involution does not normalize h");
    const int ci = comp_of[id], cj = pit->second;
    if (img[ci] < 0)
      img[ci] = cj;
    else if (img[ci] != cj)
      throw std::logic_error("inconsistent component permutation");
  }

  const RatMat& cm = tau.coweight_matrix();
  RatMat cmI = cm;
  for (int i = 0; i < rs.rank(); ++i) cmI[i][i] -= Rat(1);

  TypeLabel out;
  int t_claimed = 0;
  long long dim_claimed = 0;
  std::vector<char> done(ncomp, 0);
  for (int ci = 0; ci < ncomp; ++ci) {
    if (done[ci]) continue;
    done[ci] = 1;
    TypeLabel ct = rs.base_type(comp_base[ci]);
    if (ct.factors.size() != 1 || ct.center_dim != 0)
      throw std::logic_error("component is not connected");
    const SimpleType T = ct.factors[0];
    const int rank_c = T.rank;
    std::vector<int> cids;
    for (const auto& [id, c] : comp_of)
      if (c == ci) cids.push_back(id);

    if (img[ci] == ci) {
      bool identity = true;
      for (int id : cids)
        if (tau.perm(id) != id) {
          identity = false;
          break;
        }
      if (identity) {
        // tau acts by phases only: the fixed part is the full Cartan of the
        // component plus the closed subsystem of phase-0 roots.
        std::vector<int> fixed_ids;
        for (int id : cids)
          if (tau.phase(id) == Rat(0)) fixed_ids.push_back(id);
        const TypeLabel tl = rs.base_type(rs.subsystem_base(fixed_ids));
        for (const auto& f : tl.factors) out.factors.push_back(f);
        out.center_dim += rank_c - tl.rank();
        dim_claimed += tl.dim() + (rank_c - tl.rank());
        t_claimed += rank_c;
      } else {
        // Genuine involution of the component: catalog lookup by fixed dim.
        RatMat Bc(rs.rank(), RatVec(rank_c, Rat(0)));
        for (int j = 0; j < rank_c; ++j) {
          const RatVec cv = rs.coroot(rs.root(comp_base[ci][j]));
          for (int i = 0; i < rs.rank(); ++i) Bc[i][j] = cv[i];
        }
        const int t_fix = rank_c - mat_rank(mat_mul(cmI, Bc));
        int d = t_fix;
        for (int id : cids) {
          const int p = tau.perm(id);
          if (p == id) {
            if (tau.phase(id) == Rat(0)) ++d;
          } else if (p > id) {
            ++d;
          }
        }
        const TypeLabel tl = outer_fixed_catalog(T, d);
        for (const auto& f : tl.factors) out.factors.push_back(f);
        out.center_dim += tl.center_dim;
        dim_claimed += tl.dim();
        t_claimed += t_fix;
      }
    } else {
      // tau swaps this component with another: diagonal subalgebra.
      const int cj = img[ci];
      if (done[cj] || img[cj] != ci)
        throw std::logic_error("bad component pairing");
      done[cj] = 1;
      const TypeLabel ct2 = rs.base_type(comp_base[cj]);
      if (!(ct2.canonical() == ct.canonical()))
        throw std::logic_error("swapped components of different type");
      out.factors.push_back(T);
      dim_claimed += algebra_dim(T);
      t_claimed += rank_c;
    }
  }
  const int extra = tau.dim_t_fixed() - t_claimed;
  if (extra < 0) throw std::logic_error("negative residual center");
  out.center_dim += extra;
  dim_claimed += extra;
  if (dim_claimed != tau.dim_fixed_restricted(fd.root_ids))
    throw std::logic_error("h cap k dimension bookkeeping failed");
  return out;
}

// --------------------------------------------------------------- named maps --

namespace {

RatMat root_map_from_images(const std::vector<RootCoord>& images) {
  const int n = static_cast<int>(images.size());
  RatMat M(n, RatVec(n, Rat(0)));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) M[r][j] = Rat(images[j][r]);
  return M;
}

bool maps_roots_to_roots(const RootSystem& rs, const RatMat& M) {
  std::set<int> seen;
  for (int id = 0; id < rs.root_count(); ++id) {
    const RatVec v = mat_vec(M, to_ratvec(rs.root(id)));
    RootCoord c(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      if (!is_integer(v[i])) return false;
      c[i] = static_cast<int>(to_int(v[i]));
    }
    const auto idx = rs.index_of(c);
    if (!idx) return false;
    seen.insert(*idx);
  }
  return static_cast<int>(seen.size()) == rs.root_count();
}

RatMat reflection_root_matrix(const RootSystem& rs, int a_id) {
  const int n = rs.rank();
  RatMat M(n, RatVec(n, Rat(0)));
  for (int j = 0; j < n; ++j) {
    const RootCoord c = reflect_root(rs, a_id, rs.root(rs.simple_root_id(j)));
    for (int r = 0; r < n; ++r) M[r][j] = Rat(c[r]);
  }
  return M;
}

RatMat build_named_root_matrix(const RootSystem& rs, const std::string& name) {
  const SimpleType t = rs.type();
  if (name == "phi") {
    if (t != SimpleType{Family::E, 7}) throw std::domain_error("phi is for e7");
    return standard_involution(Chevalley::get(t), "e7-K4-comm").root_matrix();
  }
  if (name == "psi") {
    if (t != SimpleType{Family::E, 6}) throw std::domain_error("psi is for e6");
    return psi_involution(Chevalley::get(t)).root_matrix();
  }
  if (name == "mu1") {
    if (t != SimpleType{Family::E, 6}) throw std::domain_error("mu1 is for e6");
    const RatMat psi = build_named_root_matrix(rs, "psi");
    const int a56 = root_id_of(rs, {0, 0, 0, 0, 1, 1});
    const int a2 = rs.simple_root_id(1);
    RatMat M = mat_mul(reflection_root_matrix(rs, a56),
                       mat_mul(reflection_root_matrix(rs, a2), psi));
    if (!maps_roots_to_roots(rs, M))
      throw std::logic_error("mu1 does not preserve the root system");
    return M;
  }
  if (name == "nu") {
    if (t != SimpleType{Family::E, 8}) throw std::domain_error("nu is for e8");
    auto simple = [&](int i) { return rs.root(rs.simple_root_id(i - 1)); };
    std::vector<RootCoord> images = {simple(8),
                                     {-1, -1, -2, -3, -3, -3, -2, -1},
                                     simple(7),
                                     simple(6),
                                     simple(5),
                                     simple(4),
                                     simple(3),
                                     simple(1)};
    RatMat M = root_map_from_images(images);
    if (maps_roots_to_roots(rs, M)) return M;
    // Solve for the single underdetermined image directly: it must pair
    // with the other images exactly as alpha_4 pairs with the base.
    for (int id = 0; id < rs.root_count(); ++id) {
      const RootCoord c = rs.root(id);
      bool ok = true;
      for (int j = 0; j < 8 && ok; ++j) {
        if (j == 3) continue;
        ok = rs.pairing(c, images[j]) == rs.cartan()[3][j] &&
             rs.pairing(images[j], c) == rs.cartan()[j][3];
      }
      if (!ok) continue;
      images[3] = c;
      M = root_map_from_images(images);
      if (maps_roots_to_roots(rs, M)) return M;
    }
    throw std::logic_error("no root-system automorphism extends nu");
  }
  throw std::invalid_argument("unknown named map '" + name + "'");
}

}  // namespace

const RatMat& named_root_matrix(SimpleType g, const std::string& name) {
  static std::map<std::string, RatMat> cache;
  const std::string key = g.str() + "/" + name;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build_named_root_matrix(RootSystem::get(g), name))
      .first->second;
}

RatMat named_coweight_matrix(SimpleType g, const std::string& name) {
  std::string base = name;
  bool inverse = false;
  const std::string suffix = "_inv";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    inverse = true;
    base.resize(base.size() - suffix.size());
  }
  RatMat cm = coweight_map_from_root_map(named_root_matrix(g, base));
  return inverse ? mat_inverse(cm) : cm;
}

// ------------------------------------------------------------ conjugations --

namespace {

bool pm_congruent_mod4(const RatVec& v, const RatVec& K) {
  bool plus = true, minus = true;
  for (size_t i = 0; i < v.size(); ++i) {
    const Rat dp = v[i] - K[i], dm = v[i] + K[i];
    plus = plus && is_integer(dp) && to_int(dp) % 4 == 0;
    minus = minus && is_integer(dm) && to_int(dm) % 4 == 0;
  }
  return plus || minus;
}

}  // namespace

const ConjMoves& conj_moves(const RootSystem& rs, int node_1based) {
  static std::map<std::pair<std::string, int>, ConjMoves> cache;
  const auto key = std::make_pair(rs.type().str(), node_1based);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int npos = rs.positive_count();
  const int nroots = rs.root_count();
  const auto& hids = delta_h_ids(rs, node_1based);
  std::vector<char> in_h(nroots, 0);
  for (int id : hids) in_h[id] = 1;
  const RatVec K = fundamental_coweight(rs, node_1based);

  // Per positive root: the reflection as a root-id permutation and its
  // coweight image of K.
  std::vector<std::vector<int>> perm1(npos, std::vector<int>(nroots));
  std::vector<RatVec> Kimg(npos);
  for (int a = 0; a < npos; ++a) {
    for (int id = 0; id < nroots; ++id)
      perm1[a][id] = root_id_of(rs, reflect_root(rs, a, rs.root(id)));
    Kimg[a] = reflect_coweight(rs, a, K);
  }
  auto preserves_h = [&](const std::vector<int>& pa,
                         const std::vector<int>* pb) {
    for (int id : hids) {
      const int im = pb ? pa[(*pb)[id]] : pa[id];
      if (!in_h[im]) return false;
    }
    return true;
  };

  ConjMoves mv;
  std::set<std::vector<int>> seen;
  std::vector<int> ident(nroots);
  std::iota(ident.begin(), ident.end(), 0);
  auto add_word = [&](WeylWord w, std::vector<int> action) {
    if (action == ident) return;
    if (!seen.insert(std::move(action)).second) return;
    RatMat cm = coweight_reflection_matrix(rs, w[0]);
    for (size_t k = 1; k < w.size(); ++k)
      cm = mat_mul(cm, coweight_reflection_matrix(rs, w[k]));
    mv.words.push_back(std::move(w));
    mv.word_cmats.push_back(std::move(cm));
  };

  for (int a = 0; a < npos; ++a) {
    if (!pm_congruent_mod4(Kimg[a], K)) continue;
    if (!preserves_h(perm1[a], nullptr)) continue;
    add_word({a}, perm1[a]);
  }
  for (int a = 0; a < npos; ++a)
    for (int b = 0; b < npos; ++b) {
      if (a == b) continue;
      if (!pm_congruent_mod4(reflect_coweight(rs, a, Kimg[b]), K)) continue;
      if (!preserves_h(perm1[a], &perm1[b])) continue;
      std::vector<int> action(nroots);
      for (int id = 0; id < nroots; ++id) action[id] = perm1[a][perm1[b][id]];
      add_word({a, b}, std::move(action));
    }

  // Named maps applicable to this block.
  std::vector<std::string> names;
  const SimpleType t = rs.type();
  if (t == SimpleType{Family::E, 7} && node_1based == 4) names = {"phi"};
  if (t == SimpleType{Family::E, 6} && node_1based == 4) names = {"psi"};
  if (t == SimpleType{Family::E, 8} && node_1based == 2)
    names = {"nu", "nu_inv"};
  for (const auto& name : names) {
    const RatMat cm = named_coweight_matrix(t, name);
    if (!pm_congruent_mod4(mat_vec(cm, K), K)) continue;
    RatMat rm = named_root_matrix(t, name.substr(0, name.find("_inv")) == name
                                         ? name
                                         : name.substr(0, name.size() - 4));
    if (name.size() > 4 && name.compare(name.size() - 4, 4, "_inv") == 0)
      rm = mat_inverse(rm);
    bool ok = true;
    for (int id : hids) {
      const RatVec v = mat_vec(rm, to_ratvec(rs.root(id)));
      RootCoord c(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) c[i] = static_cast<int>(to_int(v[i]));
      const auto idx = rs.index_of(c);
      if (!idx || !in_h[*idx]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    mv.named.push_back(name);
    mv.named_cmats.push_back(cm);
  }
  return cache.emplace(key, std::move(mv)).first->second;
}

// ---------------------------------------------------------- classification --

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<RatVec>> classify_inner(const Chevalley& ch,
                                                int node_1based) {
  const RootSystem& rs = ch.rs();
  const int n = rs.rank();
  const ConjMoves& mv = conj_moves(rs, node_1based);

  // Move actions on h mod 2, as row bitmasks; deduplicated.
  std::set<std::vector<unsigned>> mats;
  auto add_mat = [&](const RatMat& C) {
    std::vector<unsigned> rows(n, 0);
    bool ident = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const long long e = ((to_int(C[i][j]) % 2) + 2) % 2;
        if (e) rows[i] |= 1u << j;
        if (e != (i == j ? 1 : 0)) ident = false;
      }
    if (!ident) mats.insert(std::move(rows));
  };
  for (const auto& C : mv.word_cmats) add_mat(C);
  for (const auto& C : mv.named_cmats) add_mat(C);

  const unsigned total = 1u << n;
  UnionFind uf(total);
  for (unsigned s = 1; s < total; ++s)
    for (const auto& M : mats) {
      unsigned img = 0;
      for (int i = 0; i < n; ++i)
        if (std::popcount(M[i] & s) & 1) img |= 1u << i;
      if (img == 0) throw std::logic_error("singular move action mod 2");
      uf.unite(s, img);
    }

  std::map<int, std::vector<RatVec>> groups;
  for (unsigned s = 1; s < total; ++s) {
    RatVec h(n, Rat(0));
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) h[i] = Rat(1);
    groups[uf.find(s)].push_back(std::move(h));
  }
  std::vector<std::vector<RatVec>> out;
  for (auto& [root, vecs] : groups) {
    std::sort(vecs.begin(), vecs.end());
    out.push_back(std::move(vecs));
  }
  return out;
}

std::vector<std::vector<RootAut>> classify_slice(
    const Chevalley& ch, int node_1based, const std::vector<RootAut>& bases,
    int sign) {
  const RootSystem& rs = ch.rs();
  const int n = rs.rank();
  const RatVec K = fundamental_coweight(rs, node_1based);
  const int modv = (sign < 0) ? 4 : 2;

  std::vector<RootAut> reps;
  auto locate = [&](const RootAut& X) -> int {
    for (size_t j = 0; j < reps.size(); ++j)
      if (same_perm(X, reps[j]) && equal_mod_torus(X, reps[j]))
        return static_cast<int>(j);
    return -1;
  };

  for (const RootAut& B : bases) {
    if (!B.is_involution())
      throw std::invalid_argument("slice base is not an involution");
    const RatMat& C = B.coweight_matrix();
    std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        A[i][j] = to_int(C[i][j]) + (i == j ? 1 : 0);

    std::vector<int> H(n, 0);
    while (true) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += A[i][j] * H[j];
        ok = s % modv == 0;
      }
      if (ok) {
        RatVec Hv(n);
        for (int i = 0; i < n; ++i)
          Hv[i] = (sign < 0) ? Rat(H[i], 2) : Rat(H[i]);
        RootAut X = B.compose(RootAut::torsion(ch, Hv));
        if (!X.is_involution())
          throw std::logic_error("slice candidate is not an involution");
        if (sigma_commutation(X, node_1based) != sign)
          throw std::logic_error("slice candidate has the wrong sigma sign");
        if (locate(X) < 0) reps.push_back(std::move(X));
      }
      int i = 0;
      while (i < n && ++H[i] == modv) H[i++] = 0;
      if (i == n) break;
    }
  }

  const ConjMoves& mv = conj_moves(rs, node_1based);
  std::vector<RootAut> gs;
  for (const auto& name : mv.named) {
    if (name == "phi") gs.push_back(standard_involution(ch, "e7-K4-comm"));
    if (name == "psi") gs.push_back(psi_involution(ch));
  }

  UnionFind uf(static_cast<int>(reps.size()));
  auto try_merge = [&](int i, const RootAut& Y) {
    const int j = locate(Y);
    if (j >= 0) uf.unite(i, j);
  };
  for (size_t i = 0; i < reps.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (sign < 0) try_merge(ii, reps[i].compose(RootAut::torsion(ch, K)));
    for (const auto& w : mv.words) try_merge(ii, reps[i].conj_by_word(w));
    for (const auto& g : gs)
      try_merge(ii, g.compose(reps[i]).compose(g.inverse()));
  }

  std::map<int, std::vector<RootAut>> groups;
  for (size_t i = 0; i < reps.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(reps[i]);
  std::vector<std::vector<RootAut>> out;
  for (auto& [root, list] : groups) out.push_back(std::move(list));
  return out;
}

std::vector<EnumeratedForm> enumerate_normal_forms(const RootSystem& rs,
                                                   int node_1based) {
  const int n = rs.rank();
  std::vector<RootCoord> b(n);
  for (int i = 0; i < n; ++i) {
    if (i == node_1based - 1) {
      RootCoord low(n);
      for (int j = 0; j < n; ++j) low[j] = -rs.marks()[j];
      b[i] = low;
    } else {
      b[i] = rs.root(rs.simple_root_id(i));
    }
  }
  std::vector<std::vector<int>> G(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G[i][j] = rs.pairing(b[i], b[j]);

  RatMat Bmat(n, RatVec(n, Rat(0)));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) Bmat[r][j] = Rat(b[j][r]);
  const RatMat Binv = mat_inverse(Bmat);
  const RatVec K = fundamental_coweight(rs, node_1based);
  const RatMat I = identity_mat(n);

  std::vector<EnumeratedForm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool gram = true;
    for (int i = 0; i < n && gram; ++i)
      for (int j = 0; j < n; ++j)
        if (G[p[i]][p[j]] != G[i][j]) {
          gram = false;
          break;
        }
    if (!gram) continue;
    RatMat P(n, RatVec(n, Rat(0)));
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) P[r][j] = Rat(b[p[j]][r]);
    const RatMat M = mat_mul(P, Binv);
    bool integral = true;
    for (int i = 0; i < n && integral; ++i)
      for (int j = 0; j < n; ++j)
        if (!is_integer(M[i][j])) {
          integral = false;
          break;
        }
    if (!integral || M == I || !(mat_mul(M, M) == I)) continue;
    if (!maps_roots_to_roots(rs, M)) continue;
    const RatMat cmat = transpose(mat_inverse(M));
    const RatVec v = mat_vec(cmat, K);
    int sign = 0;
    {
      bool plus = true, minus = true;
      for (int i = 0; i < n; ++i) {
        const Rat dp = v[i] - K[i], dm = v[i] + K[i];
        plus = plus && is_integer(dp) && to_int(dp) % 4 == 0;
        minus = minus && is_integer(dm) && to_int(dm) % 4 == 0;
      }
      if (plus) sign = 1;
      if (minus) sign = -1;
    }
    if (sign == 0) continue;
    EnumeratedForm ef{M, sign, ""};
    for (const auto& f : tstar_forms()) {
      if (f.g != rs.type() || f.node != node_1based) continue;
      if (standard_involution(Chevalley::get(f.g), f.id).root_matrix() == M) {
        ef.form = f.id;
        break;
      }
    }
    out.push_back(std::move(ef));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ------------------------------------------------------------ table checks --

namespace {

std::string label_str(const TypeLabel& l) { return l.canonical().str(); }

void compare_cell(TableCheck& tc, int table, const std::string& block,
                  const std::string& rowkey, const std::string& column,
                  const TypeLabel& computed, const std::string& printed) {
  TypeLabel want;
  try {
    want = parse_type_label(printed);
  } catch (const std::exception& e) {
    tc.mismatches.push_back("table " + std::to_string(table) + " " + block +
                            " " + rowkey + " " + column +
                            ": unparseable printed label '" + printed + "'");
    return;
  }
  if (computed.canonical() == want.canonical()) return;
  const std::string line = "table " + std::to_string(table) + " " + block +
                           " " + rowkey + " " + column + ": printed '" +
                           printed + "', computed " + label_str(computed);
  const Discrepancy* d = find_discrepancy(table, block, rowkey, column);
  if (d && computed.canonical() == parse_type_label(d->computed).canonical())
    tc.flagged.push_back(line + " [documented]");
  else
    tc.mismatches.push_back(line);
}

void check_block_header(TableCheck& tc, int table, const GoldenBlock& blk,
                        int expect_dim_z) {
  const RootSystem& rs = RootSystem::get(blk.g);
  RatVec H = fundamental_coweight(rs, blk.node);
  for (Rat& c : H) c /= 2;
  const FixedData fd = fixed_subalgebra(rs, H);
  compare_cell(tc, table, blk.key(), "header", "h", fd.type, blk.h_label);
  if (fd.dim_z != expect_dim_z)
    tc.mismatches.push_back("table " + std::to_string(table) + " " + blk.key() +
                            " header: dim z = " + std::to_string(fd.dim_z) +
                            ", expected " + std::to_string(expect_dim_z));
}

void check_row_labels(TableCheck& tc, int table, const GoldenBlock& blk,
                      bool algebra_labels, int expected_sign) {
  const Chevalley& ch = Chevalley::get(blk.g);
  for (const auto& row : blk.rows) {
    const std::string rk = row.base + "/" + row.twist;
    try {
      const RootAut tau = row_involution(ch, row);
      if (sigma_commutation(tau, blk.node) != expected_sign)
        tc.mismatches.push_back("table " + std::to_string(table) + " " +
                                blk.key() + " " + rk +
                                ": wrong commutation with sigma");
      compare_cell(tc, table, blk.key(), rk, "k", k_type(tau), row.k);
      const TypeLabel hk = algebra_labels ? hk_algebra_type(tau, blk.node)
                                          : hk_sigma_type(tau, blk.node);
      compare_cell(tc, table, blk.key(), rk, "hk", hk, row.hk);
    } catch (const std::exception& e) {
      tc.mismatches.push_back("table " + std::to_string(table) + " " +
                              blk.key() + " " + rk + ": " + e.what());
    }
  }
}

// Assigns each row of a final-table block to a computed conjugacy class and
// requires the assignment to be a bijection.
void check_class_bijection(TableCheck& tc, int table, const GoldenBlock& blk,
                           int sign) {
  const Chevalley& ch = Chevalley::get(blk.g);
  const std::string where = "table " + std::to_string(table) + " " + blk.key();
  std::vector<int> class_of_row;
  size_t nclasses = 0;

  if (blk.outer() || sign < 0) {
    std::vector<RootAut> bases;
    std::vector<std::string> base_names;
    for (const auto& row : blk.rows)
      if (std::find(base_names.begin(), base_names.end(), row.base) ==
          base_names.end())
        base_names.push_back(row.base);
    for (const auto& bn : base_names)
      bases.push_back(base_involution(ch, bn));
    const auto classes = classify_slice(ch, blk.node, bases, sign);
    nclasses = classes.size();
    auto class_of = [&](const RootAut& X) -> int {
      for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& rep : classes[c])
          if (same_perm(X, rep) && equal_mod_torus(X, rep))
            return static_cast<int>(c);
      return -1;
    };
    for (const auto& row : blk.rows)
      class_of_row.push_back(class_of(row_involution(ch, row)));
    if (blk.g == SimpleType{Family::E, 7} && sign < 0) {
      // The remaining Table-1 normal form lands in one of these classes.
      const int c = class_of(standard_involution(ch, "e7-K4-anti-b"));
      if (c < 0)
        tc.mismatches.push_back(where +
                                ": e7-K4-anti-b not located in any class");
      else
        tc.notes.push_back(
            where + ": e7-K4-anti-b lies in the class of row " +
            blk.rows[std::find(class_of_row.begin(), class_of_row.end(), c) -
                     class_of_row.begin()]
                .base +
            "/" +
            blk.rows[std::find(class_of_row.begin(), class_of_row.end(), c) -
                     class_of_row.begin()]
                .twist);
    }
  } else {
    const auto classes = classify_inner(ch, blk.node);
    nclasses = classes.size();
    for (const auto& row : blk.rows) {
      const RatVec h =
          reduce_mod2(parse_coweight_expr(row.twist, ch.rs().rank()));
      int found = -1;
      for (size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].begin(), classes[c].end(), h))
          found = static_cast<int>(c);
      class_of_row.push_back(found);
    }
  }

  for (size_t i = 0; i < blk.rows.size(); ++i) {
    if (class_of_row[i] < 0) {
      tc.mismatches.push_back(where + " " + blk.rows[i].base + "/" +
                              blk.rows[i].twist +
                              ": row not located in any computed class");
      continue;
    }
    for (size_t j = 0; j < i; ++j)
      if (class_of_row[j] == class_of_row[i])
        tc.mismatches.push_back(where + ": rows " + blk.rows[j].twist +
                                " and " + blk.rows[i].twist +
                                " fall in the same class");
  }
  if (nclasses != blk.rows.size())
    tc.mismatches.push_back(
        where + ": " + std::to_string(nclasses) + " computed classes vs " +
        std::to_string(blk.rows.size()) + " golden rows");
}

TableCheck run_table1() {
  TableCheck tc;
  std::vector<std::pair<SimpleType, int>> pairs;
  for (const auto& r : golden_table1())
    if (std::find(pairs.begin(), pairs.end(),
                  std::make_pair(r.g, r.node)) == pairs.end())
      pairs.emplace_back(r.g, r.node);
  for (const auto& [g, node] : pairs) {
    const std::string where =
        "table 1 " + g.str() + ":" + std::to_string(node);
    const auto found = enumerate_normal_forms(RootSystem::get(g), node);
    std::vector<const Table1Row*> want;
    for (const auto& r : golden_table1())
      if (r.g == g && r.node == node) want.push_back(&r);
    if (found.size() != want.size())
      tc.mismatches.push_back(where + ": enumerated " +
                              std::to_string(found.size()) + " forms vs " +
                              std::to_string(want.size()) + " golden rows");
    for (const auto& ef : found) {
      if (ef.form.empty()) {
        tc.mismatches.push_back(where + ": enumerated form matches no "
                                        "shipped normal form");
        continue;
      }
      const auto it = std::find_if(
          want.begin(), want.end(),
          [&](const Table1Row* r) { return r->form == ef.form; });
      if (it == want.end())
        tc.mismatches.push_back(where + ": unexpected form " + ef.form);
      else if ((*it)->sign != ef.sign)
        tc.mismatches.push_back(where + ": " + ef.form + " has sign " +
                                std::to_string(ef.sign) + ", golden " +
                                std::to_string((*it)->sign));
    }
  }
  return tc;
}

TableCheck run_table6() {
  TableCheck tc;
  const auto& rows = golden_table6();

  // Coverage: every (real form, restricted mark-3 node) pair has a row.
  std::set<std::pair<std::string, int>> needed;
  for (const auto& f : satake_forms()) {
    const auto marks = restricted_marks(f);
    for (size_t q = 0; q < marks.size(); ++q)
      if (marks[q] == 3) needed.insert({f.label, static_cast<int>(q) + 1});
  }

  for (const auto& row : rows) {
    const std::string block = row.g.str() + ":" + std::to_string(row.node);
    const std::string where = "table 6 " + block + " " + row.form;
    std::string form_label = row.form;
    const Discrepancy* fd_disc = find_discrepancy(6, block, row.form, "form");
    if (fd_disc) {
      form_label = fd_disc->computed;
      tc.flagged.push_back(where + " form: printed '" + row.form +
                           "', computed " + form_label + " [documented]");
    }
    try {
      const SatakeForm& f = satake_form(form_label);
      const RootSystem& rs = RootSystem::get(row.g);
      if (f.ambient != row.g) {
        tc.mismatches.push_back(where + ": ambient type mismatch");
        continue;
      }
      if (f.restricted.str() != row.Pi)
        tc.mismatches.push_back(where + ": restricted system is " +
                                f.restricted.str() + ", printed " + row.Pi);
      if (row.alpha != row.node)
        tc.mismatches.push_back(where + ": alpha column disagrees with node");
      const int q = f.restriction.at(row.alpha - 1);
      if (q <= 0 || restricted_marks(f).at(q - 1) != 3) {
        tc.mismatches.push_back(where +
                                ": node does not restrict to a mark-3 node");
        continue;
      }
      needed.erase({form_label, q});
      if (prop61_filter(f, [&] {
            std::vector<int> cs(f.restricted.rank, 0);
            cs[q - 1] = 1;
            return cs;
          }()) != P61Verdict::Accepted)
        tc.mismatches.push_back(where + ": candidate rejected by the "
                                        "graded-algebra case filter");

      RatVec h = lift_restricted_coweight(f, q);
      for (Rat& c : h) c /= 2;
      const FixedData fdat = fixed_subalgebra(rs, h);
      compare_cell(tc, 6, block, row.form, "h", fdat.type, row.h_label);
      compare_cell(tc, 6, block, row.form, "k", parse_type_label(f.k_label),
                   row.k);

      if (f.restricted == f.ambient) {
        // Split form: h cap k is the maximal compact subalgebra of the
        // split form of [h, h].
        const TypeLabel bt = rs.base_type(fdat.base_ids);
        TypeLabel hk;
        for (const auto& fac : bt.factors) {
          if (fac.family == Family::A)
            append_so(hk, fac.rank + 1);
          else if (fac == SimpleType{Family::E, 6})
            hk.factors.push_back({Family::C, 4});
          else
            throw std::logic_error("unexpected split factor " + fac.str());
        }
        if (hk.dim() != static_cast<int>(fdat.root_ids.size()) / 2)
          tc.mismatches.push_back(where + ": split h cap k dimension " +
                                  std::to_string(hk.dim()) + " != " +
                                  std::to_string(fdat.root_ids.size() / 2));
        compare_cell(tc, 6, block, row.form, "hk", hk, row.hk);
      } else {
        tc.notes.push_back(where + ": h cap k = " + row.hk +
                           " taken from the restricted-root catalog "
                           "(non-split form, not independently recomputed)");
      }
    } catch (const std::exception& e) {
      tc.mismatches.push_back(where + ": " + e.what());
    }
  }
  for (const auto& [label, q] : needed)
    tc.mismatches.push_back("table 6: no row for " + label + " node " +
                            std::to_string(q));
  return tc;
}

TableCheck run_table_n(int n) {
  if (n == 1) return run_table1();
  if (n == 6) return run_table6();
  TableCheck tc;
  const bool final_table = (n == 5 || n == 7 || n == 8);
  const int sign = (n == 2 || n == 5) ? -1 : 1;
  const int dim_z = (n == 4 || n == 8) ? 1 : 0;
  for (const auto& blk : golden_table(n)) {
    check_block_header(tc, n, blk, dim_z);
    check_row_labels(tc, n, blk, final_table, sign);
    if (final_table) {
      try {
        check_class_bijection(tc, n, blk, sign);
      } catch (const std::exception& e) {
        tc.mismatches.push_back("table " + std::to_string(n) + " " +
                                blk.key() + ": " + e.what());
      }
    }
  }
  return tc;
}

}  // namespace

const TableCheck& check_table(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("no table " +
                                                  std::to_string(n));
  static std::map<int, TableCheck> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, run_table_n(n)).first->second;
}

// --------------------------------------------------------------- witnesses --

namespace {

WeylWord parse_word(const RootSystem& rs, const std::string& s) {
  WeylWord w;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) w.push_back(root_id_of(rs, parse_root_coords(tok)));
  return w;
}

std::string join(const std::vector<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += " ";
    out += t;
  }
  return out;
}

bool check_claim(const std::vector<std::string>& c) {
  const std::string& kind = c.at(0);
  if (kind == "weyl_word" || kind == "weyl_word_mod2") {
    const RootSystem& rs = RootSystem::get(SimpleType::parse(c.at(1)));
    const WeylWord w = parse_word(rs, c.at(2));
    const RatVec in = parse_coweight_expr(c.at(3), rs.rank());
    const RatVec want = parse_coweight_expr(c.at(4), rs.rank());
    const RatVec got = apply_word_coweight(rs, w, in);
    return kind == "weyl_word" ? got == want : congruent_mod2(got, want);
  }
  if (kind == "named") {
    const SimpleType g = SimpleType::parse(c.at(1));
    const RootSystem& rs = RootSystem::get(g);
    const RatMat M = named_coweight_matrix(g, c.at(2));
    return mat_vec(M, parse_coweight_expr(c.at(3), rs.rank())) ==
           parse_coweight_expr(c.at(4), rs.rank());
  }
  if (kind == "root_image") {
    const SimpleType g = SimpleType::parse(c.at(1));
    const RatMat& M = named_root_matrix(g, c.at(2));
    return mat_vec(M, to_ratvec(parse_root_coords(c.at(3)))) ==
           to_ratvec(parse_root_coords(c.at(4)));
  }
  if (kind == "orbit_mod2") {
    const RootSystem& rs = RootSystem::get(SimpleType::parse(c.at(1)));
    const int node = std::stoi(c.at(2));
    std::vector<int> refl;
    for (int id : delta_h_ids(rs, node))
      if (rs.is_positive(id)) refl.push_back(id);
    const auto orbit = coweight_orbit_mod2(
        rs, refl, parse_coweight_expr(c.at(3), rs.rank()));
    return orbit.count(
        reduce_mod2(parse_coweight_expr(c.at(4), rs.rank()))) > 0;
  }
  if (kind == "conj") {
    const TStarForm& f = tstar_form(c.at(3));
    const Chevalley& ch = Chevalley::get(f.g);
    const RootSystem& rs = ch.rs();
    const RootAut tau = standard_involution(ch, c.at(3));
    const RootCoord beta = parse_root_coords(c.at(4));
    const RootAut lhs = tau.conj_by_stilde(root_id_of(rs, beta));
    const RatVec H = parse_coweight_expr(c.at(5), rs.rank());
    // The s~ lift is determined only up to a coroot torsion factor, so the
    // identity is checked with and without the beta-coroot twist.
    const RootAut t1 = tau.compose(RootAut::torsion(ch, H));
    const RootAut t2 =
        tau.compose(RootAut::torsion(ch, H + rs.coroot(beta)));
    return equal_mod_torus(lhs, t1) || equal_mod_torus(lhs, t2);
  }
  if (kind == "sigma_twist") {
    const TStarForm& f = tstar_form(c.at(3));
    const Chevalley& ch = Chevalley::get(f.g);
    const int node = std::stoi(c.at(2));
    const RootAut tau = standard_involution(ch, c.at(3));
    RatVec z = fundamental_coweight(ch.rs(), node);
    const RootAut rhs = tau.compose(RootAut::torsion(ch, z));
    for (Rat& x : z) x /= -2;
    return tau.conj_by_torus(z) == rhs;  // sigma tau sigma^{-1}
  }
  if (kind == "a1_ideal") {
    const RootSystem& rs = RootSystem::get(SimpleType::parse(c.at(1)));
    const int node = std::stoi(c.at(2));
    const RatVec h = parse_coweight_expr(c.at(3), rs.rank());
    const RootCoord gamma = parse_root_coords(c.at(4));
    const int gid = root_id_of(rs, gamma);
    auto in_k = [&](int id) {
      const Rat v = rs.eval(rs.root(id), h);
      return is_even_integer(v);
    };
    if (!in_k(gid)) return false;
    for (int id = 0; id < rs.root_count(); ++id) {
      if (!in_k(id) || id == gid || id == rs.negate(gid)) continue;
      if (rs.inner(gamma, rs.root(id)) != Rat(0)) return false;
      RootCoord sum = gamma;
      for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.root(id)[i];
      if (rs.index_of(sum)) return false;
    }
    const bool inside = gamma[node - 1] % 4 == 0;
    return inside == (c.at(5) == "in");
  }
  throw std::invalid_argument("unknown claim kind '" + kind + "'");
}

}  // namespace

WitnessReport verify_witnesses() {
  WitnessReport rep;
  for (const auto& claim : read_rows("witnesses/claims.tsv")) {
    ++rep.total;
    const std::string line = join(claim);
    bool ok = false;
    std::string err;
    try {
      ok = check_claim(claim);
    } catch (const std::exception& e) {
      err = std::string(": ") + e.what();
    }
    rep.checked.push_back(line + (ok ? "  [ok]" : "  [FAIL]" + err));
    if (!ok) rep.failures.push_back(line + err);
  }
  return rep;
}

}  // namespace lie
