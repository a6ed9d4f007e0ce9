#include "lie/torsion.hpp"

#include <numeric>

namespace lie {

FixedData fixed_subalgebra(const RootSystem& rs, const RatVec& H) {
  FixedData out;
  for (int id = 0; id < rs.root_count(); ++id)
    if (is_even_integer(rs.eval(rs.root(id), H))) out.root_ids.push_back(id);
  out.base_ids = rs.subsystem_base(out.root_ids);
  TypeLabel label = rs.base_type(out.base_ids);
  out.dim_z = rs.rank() - label.rank();
  label.center_dim = out.dim_z;
  out.type = label.canonical();
  out.dim = rs.rank() + static_cast<int>(out.root_ids.size());
  return out;
}

int torsion_order(const RootSystem& rs, const RatVec& H) {
  // (tau_H)^k = Id iff k * alpha_i(H) = k * H_i is an even integer for all
  // i.  Writing H_i = p_i / q_i in lowest terms, the needed k is
  // lcm_i(2 q_i / gcd(2 q_i, p_i)).
  long long k = 1;
  for (int i = 0; i < rs.rank(); ++i) {
    const Rat h = H[i];
    const long long p = std::abs(h.numerator());
    const long long q2 = 2 * h.denominator();
    const long long ki = p == 0 ? 1 : q2 / std::gcd(q2, p);
    k = std::lcm(k, ki);
  }
  return static_cast<int>(k);
}

Rat tau_phase(const RootSystem& rs, const RatVec& H, const RootCoord& alpha) {
  return mod(rs.eval(alpha, H), 2);
}

}  // namespace lie
