// Torsion inner automorphisms tau_H = Ad(exp pi i H) for a coweight H:
// tau_H fixes the Cartan subalgebra pointwise and acts on a root vector
// E_alpha by the phase e^{i pi alpha(H)}.  The fixed subalgebra is the
// Cartan part plus the root spaces with alpha(H) an even integer.
#pragma once

#include "lie/rootsys.hpp"

#include <vector>

namespace lie {

struct FixedData {
  TypeLabel type;             // canonical label, center recorded as R^z
  std::vector<int> base_ids;  // simple roots of the fixed subsystem
  std::vector<int> root_ids;  // all alpha with alpha(H) in 2Z
  int dim_z = 0;              // rank - semisimple rank of the subsystem
  int dim = 0;                // rank + #root_ids
};

FixedData fixed_subalgebra(const RootSystem& rs, const RatVec& H);

// Smallest k >= 1 with (tau_H)^k = Id, i.e. all coordinates of kH even
// integers; 0 if no such k exists (irrational multiples cannot arise with
// exact rational input, so this is always positive).
int torsion_order(const RootSystem& rs, const RatVec& H);

// Phase exponent of tau_H on E_alpha: alpha(H) reduced mod 2 into [0,2).
Rat tau_phase(const RootSystem& rs, const RatVec& H, const RootCoord& alpha);

}  // namespace lie
