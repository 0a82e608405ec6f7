#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grouph1/presentation.hpp"
#include "grouph1/types.hpp"

namespace grouph1 {

class NotUnimodular : public Error {
 public:
  explicit NotUnimodular(const std::string& generator_name)
      : Error("matrix for generator `" + generator_name + "` is not unimodular"),
        generator_name_(generator_name) {}
  const std::string& generator_name() const { return generator_name_; }

 private:
  std::string generator_name_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& generator_name)
      : Error("unknown generator `" + generator_name + "`"),
        generator_name_(generator_name) {}
  const std::string& generator_name() const { return generator_name_; }

 private:
  std::string generator_name_;
};

// Assigns an invertible integer matrix to each generator of a presentation.
// Generator order must match the presentation the words are built over, since
// words address generators by index.  Vectors are coordinate columns; matrices
// act on the left; a word x1 x2 ... xk maps to the ordered product
// psi(x1) psi(x2) ... psi(xk), a letter with exponent -1 contributing the
// stored inverse.
class MatrixRepresentation {
 public:
  explicit MatrixRepresentation(Index dimension);

  Index dimension() const { return dimension_; }
  Index generator_count() const { return static_cast<Index>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::optional<Index> generator_index(std::string_view name) const;

  // Computes the inverse by exact elimination; throws NotUnimodular if the
  // matrix has |det| != 1 and DimensionMismatch if the shape is wrong.
  void add_generator(const std::string& name, IntMatrix matrix);
  // Uses the supplied closed-form inverse after checking matrix * inverse = I.
  void add_generator(const std::string& name, IntMatrix matrix,
                     IntMatrix inverse);

  const IntMatrix& matrix(Index generator) const;
  const IntMatrix& inverse(Index generator) const;
  const IntMatrix& matrix(std::string_view name) const;
  const IntMatrix& inverse(std::string_view name) const;

 private:
  Index dimension_;
  std::vector<std::string> names_;
  std::vector<IntMatrix> matrices_;
  std::vector<IntMatrix> inverses_;
};

struct RelationCheck {
  std::size_t relation_index = 0;
  std::string label;
  bool holds = false;
};

struct GeneratorCheck {
  std::string name;
  bool inverse_consistent = false;
  bool unimodular = false;
};

struct RepReport {
  std::vector<RelationCheck> relations;
  std::vector<GeneratorCheck> generators;
  bool pass = false;
};

IntMatrix word_matrix(const MatrixRepresentation& rep, const Word& w);

IntVector act(const MatrixRepresentation& rep, const Word& w,
              const IntVector& v);

// Checks that every relation of p holds under rep (word_matrix of the two
// sides agree exactly) and that every stored inverse and unimodularity
// certificate is consistent.  Requires rep's generators to match p's, in
// order; a missing or misplaced name throws UnknownGenerator.
RepReport verify_representation(const GroupPresentation& p,
                                const MatrixRepresentation& rep);

// Dimension-1 representation sending every generator to (1).
MatrixRepresentation trivial_representation(const GroupPresentation& p);

}  // namespace grouph1
