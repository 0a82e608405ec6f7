#include "grouph1/fox.hpp"

namespace grouph1 {

namespace {

void require_alignment(const GroupPresentation& p,
                       const MatrixRepresentation& rep) {
  if (rep.generator_count() != p.generator_count())
    throw UnknownGenerator("representation covers " +
                           std::to_string(rep.generator_count()) +
                           " generators, presentation has " +
                           std::to_string(p.generator_count()));
  for (Index i = 0; i < p.generator_count(); ++i)
    if (rep.generator_names()[static_cast<std::size_t>(i)] !=
        p.generators[static_cast<std::size_t>(i)].name)
      throw UnknownGenerator(p.generators[static_cast<std::size_t>(i)].name);
}

// One side of a relation, rewritten against the basis vector e_{i-1}.  The
// accumulator holds psi(prefix)^-1 applied to that basis vector.
ChainVector side_walk(const GroupPresentation& p,
                      const MatrixRepresentation& rep, const Word& w,
                      Index i) {
  const Index g = rep.dimension();
  ChainVector out = ChainVector::Zero(p.generator_count() * g);
  IntVector acc = IntVector::Zero(g);
  acc(i - 1) = 1;
  for (const Letter& l : w) {
    if (l.exponent > 0) {
      out.segment(l.generator * g, g) += acc;
      acc = rep.inverse(l.generator) * acc;
    } else {
      acc = rep.matrix(l.generator) * acc;
      out.segment(l.generator * g, g) -= acc;
    }
  }
  return out;
}

}  // namespace

IntMatrix boundary_matrix(const GroupPresentation& p,
                          const MatrixRepresentation& rep, Index g) {
  require_alignment(p, rep);
  if (rep.dimension() != g)
    throw DimensionMismatch("boundary rank " + std::to_string(g) +
                            " does not match representation dimension " +
                            std::to_string(rep.dimension()));
  IntMatrix d(g, p.generator_count() * g);
  const IntMatrix identity = IntMatrix::Identity(g, g);
  for (Index x = 0; x < p.generator_count(); ++x)
    d.middleCols(x * g, g) = rep.inverse(x) - identity;
  return d;
}

ChainVector relation_vector(const GroupPresentation& p,
                            const MatrixRepresentation& rep, const Relation& r,
                            Index i) {
  require_alignment(p, rep);
  if (i < 1 || i > rep.dimension())
    throw DimensionMismatch("basis index " + std::to_string(i) +
                            " out of range 1.." +
                            std::to_string(rep.dimension()));
  return side_walk(p, rep, r.lhs, i) - side_walk(p, rep, r.rhs, i);
}

std::vector<ChainVector> module_relation_vectors(const GroupPresentation& p,
                                                 const CoefficientModule& m) {
  std::vector<ChainVector> out;
  const Index g = m.rank;
  for (Index x = 0; x < p.generator_count(); ++x)
    for (const IntVector& l : m.relation_vectors) {
      if (l.size() != g)
        throw DimensionMismatch("module relation vector has length " +
                                std::to_string(l.size()) + ", expected " +
                                std::to_string(g));
      ChainVector v = ChainVector::Zero(p.generator_count() * g);
      v.segment(x * g, g) = l;
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace grouph1
