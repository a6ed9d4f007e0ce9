// Normal forms for involutions normalizing the fixed subalgebra h of the
// inner order-4 generator sigma = tau_{(1/2)K_node} and acting
// nontrivially on the Cartan subalgebra.  Each form records the action on
// the simple roots (the image of the base of h under the induced diagram
// symmetry forces these), whether it commutes with sigma or inverts it,
// and a preferred phase choice; `standard_involution` turns a form into a
// concrete involutive automorphism.
#pragma once

#include "lie/invol.hpp"

#include <string>
#include <vector>

namespace lie {

struct TStarForm {
  std::string id;
  SimpleType g;
  int node = 0;  // sigma node (1-based)
  int sign = 0;  // +1 commutes with sigma, -1 inverts it
  std::vector<RootCoord> images;
  std::vector<Rat> phases;  // preferred simple phases
};

const std::vector<TStarForm>& tstar_forms();
const TStarForm& tstar_form(const std::string& id);

// Involution built from the form (preferred phases, corrected by a torus
// factor when needed).
RootAut standard_involution(const Chevalley& ch, const std::string& id);

}  // namespace lie
