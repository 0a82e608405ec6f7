#include "doctest.h"

#include "builders.hpp"
#include "grouph1/catalog.hpp"
#include "grouph1/coefficients.hpp"

using namespace grouph1;
using builders::mat;
using builders::vec;

TEST_CASE("trivial module is free of rank one") {
  const auto m = trivial_module();
  CHECK(m.rank == 1);
  CHECK(m.relation_vectors.empty());

  const auto p = parse_presentation("gen a\n");
  CHECK(check_action_compatibility(m, trivial_representation(p)));
}

TEST_CASE("relation lattice spans the listed vectors") {
  CoefficientModule m;
  m.rank = 3;
  m.relation_vectors = {vec({2, 0, 0}), vec({0, 4, 0}), vec({2, 4, 0})};
  const auto l = relation_lattice(m);
  CHECK(l.ambient_dim() == 3);
  CHECK(l.rank() == 2);
  CHECK(lattice_membership(l, vec({4, -4, 0})).has_value());
  CHECK(!lattice_membership(l, vec({1, 0, 0})).has_value());
}

TEST_CASE("catalog modules are compatible with the catalog action") {
  const auto closed = mcg_module({6, 0});
  REQUIRE(closed.relation_vectors.size() == 1);
  CHECK(matrices_equal(closed.relation_vectors[0], vec({2, 2, 2, 2, 2, 2})));
  CHECK(check_action_compatibility(closed, mcg_action({6, 0})));

  const auto bounded = mcg_module({5, 1});
  CHECK(bounded.relation_vectors.empty());
  CHECK(check_action_compatibility(bounded, mcg_action({5, 1})));
}

TEST_CASE("an action that moves the relation lattice is incompatible") {
  CoefficientModule m;
  m.rank = 2;
  m.relation_vectors = {vec({1, 0})};

  MatrixRepresentation shear(2);
  shear.add_generator("x", mat({{1, 0}, {1, 1}}));
  CHECK(!check_action_compatibility(m, shear));

  MatrixRepresentation keeps(2);
  keeps.add_generator("x", mat({{1, 1}, {0, 1}}));
  CHECK(check_action_compatibility(m, keeps));

  CHECK_THROWS_AS(check_action_compatibility(trivial_module(), shear),
                  DimensionMismatch);
}
