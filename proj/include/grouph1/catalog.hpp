#pragma once

#include <vector>

#include "grouph1/coefficients.hpp"
#include "grouph1/fox.hpp"
#include "grouph1/homology.hpp"
#include "grouph1/presentation.hpp"
#include "grouph1/representation.hpp"
#include "grouph1/types.hpp"

namespace grouph1 {

// Nonorientable surface of genus g with s boundary components.  Supported:
// s = 1 with g >= 3, s = 0 with g >= 4.
struct SurfaceSpec {
  Index genus = 0;
  int boundary = 0;

  bool supported() const {
    return (boundary == 1 && genus >= 3) || (boundary == 0 && genus >= 4);
  }
  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

class UnsupportedSurface : public Error {
 public:
  explicit UnsupportedSurface(const SurfaceSpec& spec)
      : Error("unsupported surface: genus " + std::to_string(spec.genus) +
              ", " + std::to_string(spec.boundary) + " boundary components") {}
};

// Mapping class group presentation with generators in fixed order:
// a1..a{g-1}, u1..u{umax} with umax = min(5, g-1), then the b block
// (b1 for g = 4 or odd g >= 5; b0..b{(g-2)/2} for even g >= 6), then rho
// when s = 0.  Relations carry their customary labels (A1[j,k], B2, ...).
GroupPresentation mcg_presentation(const SurfaceSpec& spec);

// The induced action on H1 of the surface (dimension g), with closed-form
// inverses attached.
MatrixRepresentation mcg_action(const SurfaceSpec& spec);

// H1 of the surface as coefficient module: free of rank g for s = 1, one
// relation 2(gamma_1 + ... + gamma_g) = 0 for s = 0.
CoefficientModule mcg_module(const SurfaceSpec& spec);

// Known value of H1 of the mapping class group with these coefficients:
// (Z/2)^3 for g in {3,4,5,6}, (Z/2)^2 for g >= 7.
AbelianGroupStructure<Int> expected_h1(const SurfaceSpec& spec);

// Individual action matrices, also defined for indices beyond the generator
// set (u_j for any 1 <= j <= g-1, b_j for any 0 <= 2j+2 <= g).
IntMatrix a_action(Index g, Index j);
IntMatrix a_action_inverse(Index g, Index j);
IntMatrix u_action(Index g, Index j);  // self-inverse
IntMatrix b_action(Index g, Index j);
IntMatrix b_action_inverse(Index g, Index j);
IntMatrix rho_action(Index g);  // -I, self-inverse

// Candidate generating sets for the boundary kernel K, one chain per family
// member, in catalog coordinates.  The family pairing each odd b column with
// the first (b_{j,2i+1} +/- b_{j,1}) is emitted in both sign variants; a
// candidate set assembled with either sign must be checked, and whichever
// generates K wins.
enum class FamilySign { plus, minus };

struct KernelCandidates {
  std::vector<ChainVector> common;
  std::vector<ChainVector> odd_column_plus;
  std::vector<ChainVector> odd_column_minus;

  std::vector<ChainVector> with_sign(FamilySign sign) const;
};

KernelCandidates kernel_generator_candidates(const SurfaceSpec& spec);

}  // namespace grouph1
