#pragma once

#include <string>
#include <vector>

#include "grouph1/exact_linalg.hpp"
#include "grouph1/representation.hpp"
#include "grouph1/types.hpp"

namespace grouph1 {

// An abelian coefficient group Z^rank / L together with the ambient rank.
// L is spanned by relation_vectors; the list is kept verbatim (canonical
// forms are computed inside the lattice operations as needed).
struct CoefficientModule {
  Index rank = 0;
  std::vector<IntVector> relation_vectors;
  std::string description;
};

// Rank 1, no relations; pair with the dimension-1 identity representation.
CoefficientModule trivial_module();

// The sublattice L spanned by the relation vectors.
LatticeBasis<Int> relation_lattice(const CoefficientModule& m);

// True iff psi(x) * l and psi(x)^-1 * l stay in L for every generator x and
// every relation vector l, so the action descends to the quotient module.
bool check_action_compatibility(const CoefficientModule& m,
                                const MatrixRepresentation& rep);

// Relation check on the quotient module: a relation holds when the matrices
// of its two sides agree as maps of Z^rank / L, i.e. every column of their
// difference lies in L.  With L = 0 this coincides with the exact check
// verify_representation(p, rep); with a nontrivial L it is strictly weaker,
// and some actions (a quotient module's included) only pass in this form.
RepReport verify_representation(const GroupPresentation& p,
                                const MatrixRepresentation& rep,
                                const CoefficientModule& m);

}  // namespace grouph1
