#include <random>
#include <vector>

#include "doctest.h"

#include "builders.hpp"
#include "grouph1/exact_linalg.hpp"
#include "oracles.hpp"

using namespace grouph1;
using builders::mat;
using builders::vec;

namespace {

bool is_canonical_row_hnf(const IntMatrix& h) {
  Index last_pivot = -1;
  bool zero_rows_started = false;
  for (Index r = 0; r < h.rows(); ++r) {
    Index col = 0;
    while (col < h.cols() && h(r, col) == 0) ++col;
    if (col == h.cols()) {
      zero_rows_started = true;
      continue;
    }
    if (zero_rows_started) return false;
    if (col <= last_pivot) return false;
    last_pivot = col;
    if (h(r, col) <= 0) return false;
    for (Index above = 0; above < r; ++above)
      if (h(above, col) < 0 || h(above, col) >= h(r, col)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of the identity is the identity") {
  const IntMatrix m = IntMatrix::Identity(2, 2);
  const auto res = hnf(m);
  CHECK(matrices_equal(res.h, m));
  CHECK(matrices_equal(res.u, m));
}

TEST_CASE("hnf canonicalizes a 2x2 matrix") {
  const auto res = hnf(mat({{2, 0}, {1, 1}}));
  CHECK(matrices_equal(res.h, mat({{1, 1}, {0, 2}})));
  CHECK(matrices_equal(res.u * mat({{2, 0}, {1, 1}}), res.h));
  CHECK(is_unimodular(res.u));
}

TEST_CASE("hnf of a zero matrix") {
  const IntMatrix m = IntMatrix::Zero(3, 2);
  const auto res = hnf(m);
  CHECK(matrices_equal(res.h, m));
  CHECK(matrices_equal(res.u, IntMatrix::Identity(3, 3)));
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix m = oracles::random_matrix(rng, rows, cols, -9, 9);
    const auto res = hnf(m);
    CHECK(matrices_equal(res.u * m, res.h));
    const Int du = oracles::naive_det(res.u);
    CHECK((du == 1 || du == -1));
    CHECK(is_canonical_row_hnf(res.h));

    // Idempotence: a matrix already in canonical form is left untouched.
    const auto again = hnf(res.h);
    CHECK(matrices_equal(again.h, res.h));
    CHECK(matrices_equal(again.u, IntMatrix::Identity(rows, rows)));
  }
}

TEST_CASE("hnf is a complete row-lattice invariant") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Index rows = 2 + static_cast<Index>(rng() % 3);
    const Index cols = 2 + static_cast<Index>(rng() % 3);
    const IntMatrix m = oracles::random_matrix(rng, rows, cols, -9, 9);
    const IntMatrix t = oracles::random_unimodular(rng, rows);
    CHECK(matrices_equal(hnf(m).h, hnf(IntMatrix(t * m)).h));
  }
}

TEST_CASE("snf fixtures") {
  CHECK(matrices_equal(snf(mat({{2, 0}, {0, 2}})).s, mat({{2, 0}, {0, 2}})));
  const auto res = snf(mat({{2, 4}, {6, 8}}));
  CHECK(matrices_equal(res.s, mat({{2, 0}, {0, 4}})));
  CHECK(matrices_equal(res.u * mat({{2, 4}, {6, 8}}) * res.v, res.s));
  CHECK(matrices_equal(snf(mat({{0}})).s, mat({{0}})));
}

TEST_CASE("snf factorization and divisor oracle on random matrices") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 4);
    const Index cols = 1 + static_cast<Index>(rng() % 4);
    const IntMatrix m = oracles::random_matrix(rng, rows, cols, -9, 9);
    const auto res = snf(m);
    CHECK(matrices_equal(res.u * m * res.v, res.s));
    CHECK(is_unimodular(res.u));
    CHECK(is_unimodular(res.v));
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        if (r != c) CHECK(res.s(r, c) == 0);
    const Index n = std::min(rows, cols);
    Int product = 1;
    for (Index k = 0; k < n; ++k) {
      CHECK(res.s(k, k) >= 0);
      if (k + 1 < n && res.s(k, k) != 0)
        CHECK(res.s(k + 1, k + 1) % res.s(k, k) == 0);
      if (k + 1 < n && res.s(k, k) == 0) CHECK(res.s(k + 1, k + 1) == 0);
      product *= res.s(k, k);
      CHECK(oracles::minor_gcd(m, k + 1) == abs(product));
    }
  }
}

TEST_CASE("kernel fixtures") {
  const auto k1 = kernel(mat({{1, 1}}));
  CHECK(k1.rank() == 1);
  CHECK(lattice_equal(k1, LatticeBasis<Int>::from_vectors(2, {vec({1, -1})})));

  CHECK(kernel(IntMatrix(IntMatrix::Identity(3, 3))).rank() == 0);

  const auto k3 = kernel(mat({{1, 0, 0}, {0, 1, 0}}));
  CHECK(lattice_equal(k3,
                      LatticeBasis<Int>::from_vectors(3, {vec({0, 0, 1})})));
}

TEST_CASE("kernel correctness and saturation on random matrices") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 4);
    const Index cols = 1 + static_cast<Index>(rng() % 5);
    const IntMatrix m = oracles::random_matrix(rng, rows, cols, -9, 9);
    const auto k = kernel(m);
    CHECK(is_zero_matrix(IntMatrix(m * k.basis())));
    CHECK(k.rank() + integer_rank(m) == cols);

    // Saturation: any standard basis vector outside the kernel lattice is
    // outside its rational span too, so appending it must raise the rank.
    for (Index i = 0; i < cols; ++i) {
      IntVector e = IntVector::Zero(cols);
      e(i) = 1;
      if (lattice_membership(k, e)) continue;
      IntMatrix extended(cols, k.rank() + 1);
      extended.leftCols(k.rank()) = k.basis();
      extended.col(k.rank()) = e;
      CHECK(LatticeBasis<Int>(cols, extended).rank() == k.rank() + 1);
    }
  }
}

TEST_CASE("lattice membership fixtures") {
  const auto b = LatticeBasis<Int>::from_vectors(2, {vec({2, 0}), vec({0, 2})});
  const auto coords = lattice_membership(b, vec({4, -2}));
  REQUIRE(coords.has_value());
  CHECK(matrices_equal(*coords, vec({2, -1})));
  CHECK(matrices_equal(IntVector(b.basis() * *coords), vec({4, -2})));

  CHECK(!lattice_membership(b, vec({1, 0})).has_value());

  const LatticeBasis<Int> empty(2, IntMatrix(2, 0));
  const auto trivial = lattice_membership(empty, vec({0, 0}));
  REQUIRE(trivial.has_value());
  CHECK(trivial->size() == 0);
  CHECK(!lattice_membership(empty, vec({0, 1})).has_value());

  CHECK_THROWS_AS(lattice_membership(b, vec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("lattice equality fixtures") {
  const auto standard =
      LatticeBasis<Int>::from_vectors(2, {vec({1, 0}), vec({0, 1})});
  CHECK(lattice_equal(
      standard, LatticeBasis<Int>::from_vectors(2, {vec({1, 1}), vec({0, 1})})));
  CHECK(!lattice_equal(
      standard, LatticeBasis<Int>::from_vectors(2, {vec({2, 0}), vec({0, 1})})));
  CHECK(lattice_equal(LatticeBasis<Int>::from_vectors(2, {vec({1, -1})}),
                      LatticeBasis<Int>::from_vectors(2, {vec({-1, 1})})));
  CHECK_THROWS_AS(
      lattice_equal(standard, LatticeBasis<Int>::from_vectors(3, {})),
      DimensionMismatch);
}

TEST_CASE("quotient invariant fixtures") {
  const auto z2 = LatticeBasis<Int>::from_vectors(2, {vec({1, 0}), vec({0, 1})});
  const auto mod2 = quotient_invariants(z2, {vec({2, 0}), vec({0, 2})});
  CHECK(mod2.free_rank == 0);
  CHECK(mod2.torsion == std::vector<Int>{2, 2});

  const auto half = quotient_invariants(z2, {vec({1, 0})});
  CHECK(half.free_rank == 1);
  CHECK(half.torsion.empty());

  const auto z3 = LatticeBasis<Int>::from_vectors(
      3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  const auto free3 = quotient_invariants(z3, {});
  CHECK(free3.free_rank == 3);
  CHECK(free3.torsion.empty());

  const auto even = LatticeBasis<Int>::from_vectors(2, {vec({2, 0}), vec({0, 2})});
  CHECK_THROWS_WITH_AS(quotient_invariants(even, {vec({1, 0})}),
                       "subgroup generator 0 is not in the lattice",
                       SubgroupNotContained);
  bool threw = false;
  try {
    quotient_invariants(even, {vec({2, 0}), vec({1, 0})});
  } catch (const SubgroupNotContained& e) {
    threw = true;
    CHECK(e.generator_index() == 1);
  }
  CHECK(threw);
}

TEST_CASE("quotient invariants do not depend on the presentation of the data") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Index ambient = 3 + static_cast<Index>(rng() % 2);
    const IntMatrix gens = oracles::random_matrix(rng, ambient, ambient, -5, 5);
    const LatticeBasis<Int> k(ambient, gens);
    if (k.rank() < 2) continue;

    std::vector<IntVector> subgroup;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < 3; ++i) {
      IntVector v = IntVector::Zero(ambient);
      for (Index c = 0; c < k.rank(); ++c)
        v += Int(coef(rng)) * k.basis().col(c);
      subgroup.push_back(std::move(v));
    }
    const auto base = quotient_invariants(k, subgroup);

    // Same lattice handed over via a shuffled, redundant generating set.
    IntMatrix regen(ambient, k.rank() + 2);
    regen.leftCols(k.rank()) = k.basis() * oracles::random_unimodular(rng, k.rank());
    regen.col(k.rank()) = k.basis().col(0) + k.basis().col(1);
    regen.col(k.rank() + 1) = 2 * k.basis().col(k.rank() - 1);
    const LatticeBasis<Int> k2(ambient, regen);
    REQUIRE(lattice_equal(k, k2));

    // Same subgroup span, different generators.
    std::vector<IntVector> subgroup2 = {subgroup[1] + subgroup[0], subgroup[1],
                                        subgroup[2], subgroup[2] - subgroup[0]};
    CHECK(quotient_invariants(k2, subgroup2) == base);
  }
}
