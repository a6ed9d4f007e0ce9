#include "lie/chevalley.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace lie {

namespace {

RootCoord coord_diff(const RootCoord& a, const RootCoord& b) {
  RootCoord out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

bool LieElt::is_zero() const {
  for (const auto& c : e)
    if (c != Rat(0)) return false;
  for (const auto& c : h)
    if (c != Rat(0)) return false;
  return true;
}

LieElt& LieElt::operator+=(const LieElt& o) {
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
  for (size_t i = 0; i < h.size(); ++i) h[i] += o.h[i];
  return *this;
}

LieElt& LieElt::operator*=(const Rat& c) {
  for (auto& v : e) v *= c;
  for (auto& v : h) v *= c;
  return *this;
}

const Chevalley& Chevalley::get(SimpleType t) {
  static std::map<SimpleType, Chevalley> cache;
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return it->second;
}

Chevalley Chevalley::build(SimpleType t) {
  Chevalley ch;
  const RootSystem& rs = RootSystem::get(t);
  ch.rs_ = &rs;
  const int m = rs.root_count();
  ch.sum_.assign(m, std::vector<int>(m, -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == rs.negate(a)) continue;
      RootCoord s = rs.root(a);
      for (int j = 0; j < rs.rank(); ++j) s[j] += rs.root(b)[j];
      if (auto id = rs.index_of(s)) ch.sum_[a][b] = *id;
    }

  auto& nt = ch.nmat_;
  nt.assign(m, std::vector<long long>(m, 0));

  // Squared length of a root by id.
  auto len2 = [&](int id) { return rs.inner(rs.root(id), rs.root(id)); };

  // N for an arbitrary-sign pair, reduced to the positive-positive table
  // through antisymmetry, N_{-a,-b} = -N_{a,b}, and the cyclic relation
  // N_{a,b}/(c,c) = N_{b,c}/(a,a) for a+b+c = 0.  During construction the
  // positive pairs it touches are already filled (their sums have smaller
  // height than the root currently being processed).
  auto signed_n = [&](auto&& self, int a, int b) -> long long {
    const bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) {
      if (nt[a][b] == 0) throw std::logic_error("signed_n: unfilled pair");
      return nt[a][b];
    }
    if (!pa && !pb) return -self(self, rs.negate(a), rs.negate(b));
    if (!pa) return -self(self, b, a);
    // a positive, b negative, a+b a root.
    const int c = rs.negate(ch.sum_[a][b]);
    Rat val;
    if (!rs.is_positive(c)) {
      // b, c negative: the positive pair (-b, -c) sums to a.
      const long long nbc = -nt[rs.negate(b)][rs.negate(c)];
      val = Rat(nbc) * len2(c) / len2(a);
    } else {
      // a, c positive: the positive pair (c, a) sums to -b.
      val = Rat(nt[c][a]) * len2(c) / len2(b);
    }
    if (!is_integer(val) || val == Rat(0))
      throw std::logic_error("signed_n: non-integral value");
    return to_int(val);
  };

  // Fill positive pairs in increasing height of the sum (root-id order is
  // height-then-lex, so a plain id sweep works).
  for (int g = 0; g < rs.positive_count(); ++g) {
    std::vector<std::pair<int, int>> decomps;
    for (int a = 0; a < rs.positive_count(); ++a) {
      for (int b = a + 1; b < rs.positive_count(); ++b)
        if (ch.sum_[a][b] == g) decomps.push_back({a, b});
    }
    if (decomps.empty()) continue;  // simple root
    // Extraspecial pair: minimal first element in the root order.
    const auto [eps, eta] = decomps.front();
    auto string_p = [&](int a, int b) {
      int p = 0;
      RootCoord x = rs.root(b);
      while (true) {
        x = coord_diff(x, rs.root(a));
        if (!rs.index_of(x)) break;
        ++p;
      }
      return p;
    };
    nt[eps][eta] = string_p(eps, eta) + 1;
    nt[eta][eps] = -nt[eps][eta];
    for (size_t k = 1; k < decomps.size(); ++k) {
      const auto [al, be] = decomps[k];
      // Jacobi identity on (E_{-eps}, E_al, E_be), projected onto E_eta:
      //   N_{al,be} N_{-eps,g} =
      //     N_{-eps,al} N_{al-eps,be} + N_{-eps,be} N_{al,be-eps}.
      long long rhs = 0;
      if (auto d = rs.index_of(coord_diff(rs.root(al), rs.root(eps))))
        rhs += signed_n(signed_n, rs.negate(eps), al) *
               signed_n(signed_n, *d, be);
      if (auto d = rs.index_of(coord_diff(rs.root(be), rs.root(eps))))
        rhs += signed_n(signed_n, rs.negate(eps), be) *
               signed_n(signed_n, al, *d);
      const long long denom = signed_n(signed_n, rs.negate(eps), g);
      if (denom == 0 || rhs % denom != 0)
        throw std::logic_error("structure constant recursion failed");
      nt[al][be] = rhs / denom;
      nt[be][al] = -nt[al][be];
      // A special pair still satisfies |N| = p+1.
      if (std::abs(nt[al][be]) != string_p(al, be) + 1)
        throw std::logic_error("structure constant magnitude check failed");
    }
  }

  // Extend to all sign combinations.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (ch.sum_[a][b] < 0 || nt[a][b] != 0) continue;
      nt[a][b] = signed_n(signed_n, a, b);
    }

  ch.stilde_cache_.assign(m, SignedPerm{});
  return ch;
}

int Chevalley::dim() const { return rs_->root_count() + rs_->rank(); }

LieElt Chevalley::zero() const {
  return LieElt{RatVec(rs_->root_count(), Rat(0)), RatVec(rs_->rank(), Rat(0))};
}

LieElt Chevalley::E(int id, Rat c) const {
  LieElt x = zero();
  x.e[id] = c;
  return x;
}

LieElt Chevalley::H(const RatVec& coweight) const {
  LieElt x = zero();
  x.h = coweight;
  return x;
}

LieElt Chevalley::bracket(const LieElt& x, const LieElt& y) const {
  const RootSystem& rs = *rs_;
  LieElt out = zero();
  std::vector<int> xa, yb;
  for (int i = 0; i < rs.root_count(); ++i) {
    if (x.e[i] != Rat(0)) xa.push_back(i);
    if (y.e[i] != Rat(0)) yb.push_back(i);
  }
  for (int a : xa)
    for (int b : yb) {
      const Rat c = x.e[a] * y.e[b];
      if (b == rs.negate(a)) {
        const RatVec hv = rs.coroot(rs.root(a));
        for (int j = 0; j < rs.rank(); ++j) out.h[j] += c * hv[j];
      } else if (sum_[a][b] >= 0) {
        out.e[sum_[a][b]] += Rat(nmat_[a][b]) * c;
      }
    }
  const bool xh = !std::all_of(x.h.begin(), x.h.end(),
                               [](const Rat& v) { return v == Rat(0); });
  const bool yh = !std::all_of(y.h.begin(), y.h.end(),
                               [](const Rat& v) { return v == Rat(0); });
  if (xh)
    for (int b : yb) out.e[b] += rs.eval(rs.root(b), x.h) * y.e[b];
  if (yh)
    for (int a : xa) out.e[a] -= rs.eval(rs.root(a), y.h) * x.e[a];
  return out;
}

LieElt Chevalley::exp_ad(const LieElt& x, const LieElt& y, const Rat& t) const {
  LieElt acc = y;
  LieElt term = y;
  for (long long k = 1;; ++k) {
    term = bracket(x, term);
    term *= t / Rat(k);
    if (term.is_zero()) break;
    acc += term;
    if (k > 60) throw std::domain_error("exp_ad: ad x is not nilpotent");
  }
  return acc;
}

const Chevalley::SignedPerm& Chevalley::s_tilde(int a_id) const {
  SignedPerm& sp = stilde_cache_[a_id];
  if (sp.refl_root == a_id) return sp;
  const RootSystem& rs = *rs_;
  const int m = rs.root_count();
  sp.refl_root = a_id;
  sp.img.assign(m, -1);
  sp.sign.assign(m, 0);
  const LieElt ea = E(a_id);
  const LieElt ena = E(rs.negate(a_id));
  auto act = [&](LieElt y) {
    y = exp_ad(ea, y);
    y = exp_ad(ena, y, Rat(-1));
    return exp_ad(ea, y);
  };
  for (int b = 0; b < m; ++b) {
    LieElt img = act(E(b));
    int hit = -1;
    for (int i = 0; i < m; ++i) {
      if (img.e[i] == Rat(0)) continue;
      if (hit >= 0) throw std::logic_error("s_tilde: not monomial");
      hit = i;
    }
    for (const Rat& v : img.h)
      if (v != Rat(0)) throw std::logic_error("s_tilde: Cartan leak");
    if (hit < 0 || (img.e[hit] != Rat(1) && img.e[hit] != Rat(-1)))
      throw std::logic_error("s_tilde: coefficient not a sign");
    sp.img[b] = hit;
    sp.sign[b] = img.e[hit] == Rat(1) ? 1 : -1;
  }
  return sp;
}

}  // namespace lie
