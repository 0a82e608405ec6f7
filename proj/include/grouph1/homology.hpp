#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "grouph1/exact_linalg.hpp"
#include "grouph1/fox.hpp"

namespace grouph1 {

class RepresentationInvalid : public Error {
 public:
  explicit RepresentationInvalid(const std::string& detail)
      : Error("representation does not satisfy the presentation: " + detail) {}
};

class ModuleIncompatible : public Error {
 public:
  ModuleIncompatible()
      : Error("module relations are not preserved by the action") {}
};

class CycleViolation : public Error {
 public:
  explicit CycleViolation(const std::string& detail)
      : Error("relation chain falls outside the boundary kernel: " + detail) {}
};

struct H1Diagnostics {
  Index ambient_dim = 0;          // |X| * g
  Index kernel_rank = 0;          // rank of K
  std::size_t relation_chain_count = 0;
  std::size_t module_chain_count = 0;
  double elapsed_seconds = 0.0;
};

struct H1Result {
  AbelianGroupStructure<Int> invariants;
  Index kernel_rank = 0;
  std::size_t num_relation_vectors = 0;
  H1Diagnostics diagnostics;
};

// The lattice K = {v : D v lies in L}, i.e. the chains whose boundary
// vanishes in the quotient module.  Computed by projecting the kernel of the
// augmented matrix [D | -L] onto the chain coordinates, then certified: every
// basis vector is re-tested for D v in L, so a saturation defect would be
// caught rather than silently returned.
LatticeBasis<Int> boundary_kernel(const GroupPresentation& p,
                                  const MatrixRepresentation& rep,
                                  const CoefficientModule& m);

// H1 of the presented group with coefficients in m twisted by rep, as the
// quotient of K by the span of all rewritten relation chains plus the module
// relation chains.  Throws RepresentationInvalid, ModuleIncompatible or
// CycleViolation when the input triple is inconsistent.
H1Result twisted_h1(const GroupPresentation& p, const MatrixRepresentation& rep,
                    const CoefficientModule& m);

// Independent untwisted oracle: invariants of Z^|X| modulo the exponent-sum
// vectors of the relations.
AbelianGroupStructure<Int> abelianization(const GroupPresentation& p);

struct KernelCheckReport {
  bool membership = false;   // every candidate lies in K
  bool generation = false;   // candidates + module chains span K exactly
  bool independent = false;  // candidate lattice rank equals candidate count
  Index kernel_rank = 0;
  Index candidate_rank = 0;
  std::vector<std::size_t> non_members;  // indices of failing candidates
};

KernelCheckReport verify_kernel_generators(
    const GroupPresentation& p, const MatrixRepresentation& rep,
    const CoefficientModule& m, const std::vector<ChainVector>& candidates);

}  // namespace grouph1
