#include "grouph1/coefficients.hpp"

namespace grouph1 {

CoefficientModule trivial_module() {
  CoefficientModule m;
  m.rank = 1;
  m.description = "trivial Z";
  return m;
}

LatticeBasis<Int> relation_lattice(const CoefficientModule& m) {
  IntMatrix generators(m.rank, static_cast<Index>(m.relation_vectors.size()));
  for (std::size_t c = 0; c < m.relation_vectors.size(); ++c) {
    const IntVector& v = m.relation_vectors[c];
    if (v.size() != m.rank)
      throw DimensionMismatch("module relation vector has length " +
                              std::to_string(v.size()) + ", expected " +
                              std::to_string(m.rank));
    generators.col(static_cast<Index>(c)) = v;
  }
  return LatticeBasis<Int>(m.rank, generators);
}

bool check_action_compatibility(const CoefficientModule& m,
                                const MatrixRepresentation& rep) {
  if (m.rank != rep.dimension())
    throw DimensionMismatch("module rank " + std::to_string(m.rank) +
                            " does not match representation dimension " +
                            std::to_string(rep.dimension()));
  if (m.relation_vectors.empty()) return true;
  const LatticeBasis<Int> lattice = relation_lattice(m);
  for (Index x = 0; x < rep.generator_count(); ++x)
    for (const IntVector& l : m.relation_vectors) {
      if (!lattice_membership(lattice, IntVector(rep.matrix(x) * l))) return false;
      if (!lattice_membership(lattice, IntVector(rep.inverse(x) * l))) return false;
    }
  return true;
}

RepReport verify_representation(const GroupPresentation& p,
                                const MatrixRepresentation& rep,
                                const CoefficientModule& m) {
  if (m.rank != rep.dimension())
    throw DimensionMismatch("module rank " + std::to_string(m.rank) +
                            " does not match representation dimension " +
                            std::to_string(rep.dimension()));
  RepReport report = verify_representation(p, rep);
  if (m.relation_vectors.empty()) return report;

  // Retest the exact failures against the lattice; generator certificates
  // are unaffected by the module.
  const LatticeBasis<Int> lattice = relation_lattice(m);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    RelationCheck& check = report.relations[r];
    if (check.holds) continue;
    const IntMatrix diff = word_matrix(rep, p.relations[r].lhs) -
                           word_matrix(rep, p.relations[r].rhs);
    bool holds = true;
    for (Index c = 0; c < diff.cols() && holds; ++c)
      holds = lattice_membership(lattice, IntVector(diff.col(c))).has_value();
    check.holds = holds;
  }

  bool pass = true;
  for (const GeneratorCheck& gen : report.generators)
    pass = pass && gen.inverse_consistent && gen.unimodular;
  for (const RelationCheck& rel : report.relations) pass = pass && rel.holds;
  report.pass = pass;
  return report;
}

}  // namespace grouph1
