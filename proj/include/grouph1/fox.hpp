#pragma once

#include <vector>

#include "grouph1/coefficients.hpp"
#include "grouph1/presentation.hpp"
#include "grouph1/representation.hpp"
#include "grouph1/types.hpp"

namespace grouph1 {

// Chain vectors live in Z^(|X| * g), one length-g block per generator of the
// presentation, in presentation order.  Coordinate (x, i) with 1 <= i <= g is
// the class [x] (x) gamma_i.
using ChainVector = IntVector;

// Flat index of coordinate (x, i), generator-major, basis-minor.
inline Index chain_position(Index generator, Index i, Index g) {
  return generator * g + (i - 1);
}

// The g x (|X| * g) matrix D with column (x, i) equal to
// (psi(x)^-1 - I) * e_i, i.e. the boundary of [x] (x) gamma_i.
IntMatrix boundary_matrix(const GroupPresentation& p,
                          const MatrixRepresentation& rep, Index g);

// Rewrites one group relation into a chain for each module basis vector.
// Walking one side left to right with prefix q = x1...x_{k-1}, a positive
// letter x contributes +[x] (x) psi(q)^-1 gamma_i and a negative letter x^-1
// contributes -[x] (x) psi(x) psi(q)^-1 gamma_i; the result is the walk of the
// left side minus the walk of the right side.  i is 1-based.
ChainVector relation_vector(const GroupPresentation& p,
                            const MatrixRepresentation& rep, const Relation& r,
                            Index i);

// The chains [x] (x) l for every generator x and every relation vector l of
// the module; empty when the module is free.
std::vector<ChainVector> module_relation_vectors(const GroupPresentation& p,
                                                 const CoefficientModule& m);

}  // namespace grouph1
