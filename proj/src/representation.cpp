#include "grouph1/representation.hpp"

#include <utility>

#include "grouph1/exact_linalg.hpp"

namespace grouph1 {

MatrixRepresentation::MatrixRepresentation(Index dimension)
    : dimension_(dimension) {
  if (dimension <= 0) throw DimensionMismatch("representation dimension must be positive");
}

std::optional<Index> MatrixRepresentation::generator_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Index>(i);
  return std::nullopt;
}

namespace {

void check_shape(const IntMatrix& m, Index dimension, const std::string& name) {
  if (m.rows() != dimension || m.cols() != dimension)
    throw DimensionMismatch("matrix for generator `" + name + "` is " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " +
                            std::to_string(dimension) + "x" +
                            std::to_string(dimension));
}

}  // namespace

void MatrixRepresentation::add_generator(const std::string& name,
                                         IntMatrix matrix) {
  check_shape(matrix, dimension_, name);
  // Row-reducing [m] to the identity turns the recorded row operations into
  // the inverse; a non-identity echelon form means |det| != 1.
  const auto red = hnf(matrix);
  if (!matrices_equal(red.h, IntMatrix::Identity(dimension_, dimension_)))
    throw NotUnimodular(name);
  add_generator(name, std::move(matrix), red.u);
}

void MatrixRepresentation::add_generator(const std::string& name,
                                         IntMatrix matrix, IntMatrix inverse) {
  check_shape(matrix, dimension_, name);
  check_shape(inverse, dimension_, name);
  if (generator_index(name))
    throw Error("representation already has generator `" + name + "`");
  const IntMatrix product = matrix * inverse;
  if (!matrices_equal(product, IntMatrix::Identity(dimension_, dimension_)))
    throw NotUnimodular(name);
  names_.push_back(name);
  matrices_.push_back(std::move(matrix));
  inverses_.push_back(std::move(inverse));
}

const IntMatrix& MatrixRepresentation::matrix(Index generator) const {
  if (generator < 0 || generator >= generator_count())
    throw UnknownGenerator("#" + std::to_string(generator));
  return matrices_[static_cast<std::size_t>(generator)];
}

const IntMatrix& MatrixRepresentation::inverse(Index generator) const {
  if (generator < 0 || generator >= generator_count())
    throw UnknownGenerator("#" + std::to_string(generator));
  return inverses_[static_cast<std::size_t>(generator)];
}

const IntMatrix& MatrixRepresentation::matrix(std::string_view name) const {
  const auto idx = generator_index(name);
  if (!idx) throw UnknownGenerator(std::string(name));
  return matrices_[static_cast<std::size_t>(*idx)];
}

const IntMatrix& MatrixRepresentation::inverse(std::string_view name) const {
  const auto idx = generator_index(name);
  if (!idx) throw UnknownGenerator(std::string(name));
  return inverses_[static_cast<std::size_t>(*idx)];
}

IntMatrix word_matrix(const MatrixRepresentation& rep, const Word& w) {
  IntMatrix result = IntMatrix::Identity(rep.dimension(), rep.dimension());
  for (const Letter& l : w) {
    const IntMatrix& factor =
        l.exponent > 0 ? rep.matrix(l.generator) : rep.inverse(l.generator);
    result = result * factor;
  }
  return result;
}

IntVector act(const MatrixRepresentation& rep, const Word& w,
              const IntVector& v) {
  if (v.size() != rep.dimension())
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " does not match dimension " +
                            std::to_string(rep.dimension()));
  return word_matrix(rep, w) * v;
}

RepReport verify_representation(const GroupPresentation& p,
                                const MatrixRepresentation& rep) {
  RepReport report;
  report.pass = true;

  for (Index i = 0; i < p.generator_count(); ++i) {
    const std::string& name = p.generators[static_cast<std::size_t>(i)].name;
    const auto idx = rep.generator_index(name);
    if (!idx || *idx != i) throw UnknownGenerator(name);

    GeneratorCheck check;
    check.name = name;
    const IntMatrix product = rep.matrix(i) * rep.inverse(i);
    check.inverse_consistent = matrices_equal(
        product, IntMatrix::Identity(rep.dimension(), rep.dimension()));
    const auto diag = snf_diagonal(rep.matrix(i));
    check.unimodular = true;
    for (Index k = 0; k < diag.size(); ++k)
      if (diag[k] != 1) check.unimodular = false;
    report.pass = report.pass && check.inverse_consistent && check.unimodular;
    report.generators.push_back(std::move(check));
  }

  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const Relation& rel = p.relations[r];
    RelationCheck check;
    check.relation_index = r;
    check.label = rel.label;
    check.holds =
        matrices_equal(word_matrix(rep, rel.lhs), word_matrix(rep, rel.rhs));
    report.pass = report.pass && check.holds;
    report.relations.push_back(std::move(check));
  }
  return report;
}

MatrixRepresentation trivial_representation(const GroupPresentation& p) {
  MatrixRepresentation rep(1);
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  for (const auto& g : p.generators) rep.add_generator(g.name, one, one);
  return rep;
}

}  // namespace grouph1
