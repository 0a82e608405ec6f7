#pragma once

#include "grouph1/types.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace grouph1 {

class SubgroupNotContained : public Error {
 public:
  SubgroupNotContained(std::string what, std::size_t generator_index)
      : Error(std::move(what)), generator_index_(generator_index) {}
  std::size_t generator_index() const { return generator_index_; }

 private:
  std::size_t generator_index_;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : Scalar(x);
}

// Floor division. Plain operator/ truncates toward zero for both builtin
// integers and mpz_class, so the correction below is portable.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

template <typename Scalar>
struct HnfResult {
  DenseMatrix<Scalar> h;  // row echelon, pivots positive, entries above a pivot in [0, pivot)
  DenseMatrix<Scalar> u;  // unimodular, h = u * input
};

// Row-style Hermite normal form. The form is canonical: two matrices span the
// same row lattice iff their h parts coincide.
template <typename Derived>
HnfResult<typename Derived::Scalar> hnf(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  HnfResult<Scalar> res;
  res.h = m;
  res.u = DenseMatrix<Scalar>::Identity(m.rows(), m.rows());
  DenseMatrix<Scalar>& h = res.h;
  DenseMatrix<Scalar>& u = res.u;

  Index pivot_row = 0;
  for (Index col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Euclidean elimination below the pivot, always pivoting on the entry of
    // least absolute value to limit growth.
    while (true) {
      Index best = -1;
      for (Index r = pivot_row; r < h.rows(); ++r)
        if (h(r, col) != 0 &&
            (best < 0 ||
             detail::abs_value(h(r, col)) < detail::abs_value(h(best, col))))
          best = r;
      if (best < 0) break;
      if (best != pivot_row) {
        h.row(best).swap(h.row(pivot_row));
        u.row(best).swap(u.row(pivot_row));
      }
      bool remainder_left = false;
      for (Index r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        const Scalar q = detail::floor_div(h(r, col), h(pivot_row, col));
        if (q != 0) {
          h.row(r) -= q * h.row(pivot_row);
          u.row(r) -= q * u.row(pivot_row);
        }
        if (h(r, col) != 0) remainder_left = true;
      }
      if (!remainder_left) break;
    }
    if (h(pivot_row, col) == 0) continue;  // column has no pivot
    if (h(pivot_row, col) < 0) {
      h.row(pivot_row) = -h.row(pivot_row);
      u.row(pivot_row) = -u.row(pivot_row);
    }
    for (Index r = 0; r < pivot_row; ++r) {
      const Scalar q = detail::floor_div(h(r, col), h(pivot_row, col));
      if (q != 0) {
        h.row(r) -= q * h.row(pivot_row);
        u.row(r) -= q * u.row(pivot_row);
      }
    }
    ++pivot_row;
  }
  return res;
}

template <typename Scalar>
struct SnfResult {
  DenseMatrix<Scalar> s;  // diagonal, d1 | d2 | ... >= 0
  DenseMatrix<Scalar> u;  // unimodular
  DenseMatrix<Scalar> v;  // unimodular, s = u * input * v
};

namespace detail {

template <typename Scalar>
SnfResult<Scalar> snf_impl(DenseMatrix<Scalar> s, const bool track) {
  const Index rows = s.rows();
  const Index cols = s.cols();
  const Index n = std::min(rows, cols);
  DenseMatrix<Scalar> u, v;
  if (track) {
    u = DenseMatrix<Scalar>::Identity(rows, rows);
    v = DenseMatrix<Scalar>::Identity(cols, cols);
  }

  for (Index t = 0; t < n; ++t) {
    // Move the nonzero entry of least absolute value of the working
    // submatrix to (t, t).
    Index pr = -1, pc = -1;
    for (Index c = t; c < cols; ++c)
      for (Index r = t; r < rows; ++r)
        if (s(r, c) != 0 &&
            (pr < 0 || abs_value(s(r, c)) < abs_value(s(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;  // submatrix is zero; zero invariants trail
    if (pr != t) {
      s.row(pr).swap(s.row(t));
      if (track) u.row(pr).swap(u.row(t));
    }
    if (pc != t) {
      s.col(pc).swap(s.col(t));
      if (track) v.col(pc).swap(v.col(t));
    }

    while (true) {
      // Clear column t by Euclidean steps.
      while (true) {
        Index rbest = t;
        for (Index r = t; r < rows; ++r)
          if (s(r, t) != 0 && (s(rbest, t) == 0 ||
                               abs_value(s(r, t)) < abs_value(s(rbest, t))))
            rbest = r;
        if (rbest != t) {
          s.row(rbest).swap(s.row(t));
          if (track) u.row(rbest).swap(u.row(t));
        }
        bool remainder_left = false;
        for (Index r = t + 1; r < rows; ++r) {
          if (s(r, t) == 0) continue;
          const Scalar q = floor_div(s(r, t), s(t, t));
          if (q != 0) {
            s.row(r) -= q * s.row(t);
            if (track) u.row(r) -= q * u.row(t);
          }
          if (s(r, t) != 0) remainder_left = true;
        }
        if (!remainder_left) break;
      }
      // Clear row t. Column operations cannot dirty column t here because
      // its entries below the pivot are already zero.
      bool swapped_column = false;
      while (true) {
        Index cbest = t;
        for (Index c = t; c < cols; ++c)
          if (s(t, c) != 0 && (s(t, cbest) == 0 ||
                               abs_value(s(t, c)) < abs_value(s(t, cbest))))
            cbest = c;
        if (cbest != t) {
          s.col(cbest).swap(s.col(t));
          if (track) v.col(cbest).swap(v.col(t));
          swapped_column = true;
        }
        bool remainder_left = false;
        for (Index c = t + 1; c < cols; ++c) {
          if (s(t, c) == 0) continue;
          const Scalar q = floor_div(s(t, c), s(t, t));
          if (q != 0) {
            s.col(c) -= q * s.col(t);
            if (track) v.col(c) -= q * v.col(t);
          }
          if (s(t, c) != 0) remainder_left = true;
        }
        if (!remainder_left) break;
      }
      if (!swapped_column) break;  // a swap may have brought nonzeros into column t
    }

    // The pivot must divide every entry of the trailing submatrix so the
    // diagonal forms a divisibility chain. Fold an offending row into row t
    // and redo the elimination at the same position.
    bool redo = false;
    for (Index r = t + 1; r < rows && !redo; ++r)
      for (Index c = t + 1; c < cols && !redo; ++c)
        if (s(r, c) % s(t, t) != 0) {
          s.row(t) += s.row(r);
          if (track) u.row(t) += u.row(r);
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      if (track) u.row(t) = -u.row(t);
    }
  }

  SnfResult<Scalar> res;
  res.s = std::move(s);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

}  // namespace detail

template <typename Derived>
SnfResult<typename Derived::Scalar> snf(const Eigen::MatrixBase<Derived>& m) {
  return detail::snf_impl<typename Derived::Scalar>(m, true);
}

// Diagonal of the Smith normal form without transform bookkeeping.
template <typename Derived>
DenseVector<typename Derived::Scalar> snf_diagonal(
    const Eigen::MatrixBase<Derived>& m) {
  const auto res = detail::snf_impl<typename Derived::Scalar>(m, false);
  return res.s.diagonal();
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  const auto d = snf_diagonal(m);
  for (Index i = 0; i < d.size(); ++i)
    if (d(i) != 1) return false;
  return true;
}

template <typename Derived>
Index integer_rank(const Eigen::MatrixBase<Derived>& m) {
  const auto res = hnf(m);
  Index rank = 0;
  while (rank < res.h.rows() && !is_zero_matrix(res.h.row(rank))) ++rank;
  return rank;
}

// A full-rank column basis of a sublattice of Z^ambient, kept in the
// canonical echelon form produced by the Hermite normal form. Construction
// accepts an arbitrary generating set.
template <typename Scalar>
class LatticeBasis {
 public:
  LatticeBasis(Index ambient_dim, const DenseMatrix<Scalar>& generators)
      : ambient_(ambient_dim) {
    if (generators.cols() > 0 && generators.rows() != ambient_dim)
      throw DimensionMismatch("lattice generators do not match ambient dimension");
    if (generators.cols() == 0) {
      basis_ = DenseMatrix<Scalar>(ambient_, 0);
      return;
    }
    const auto res = hnf(generators.transpose());
    Index rank = 0;
    while (rank < res.h.rows() && !is_zero_matrix(res.h.row(rank))) ++rank;
    basis_ = res.h.topRows(rank).transpose();
    pivots_.reserve(static_cast<std::size_t>(rank));
    for (Index t = 0; t < rank; ++t) {
      Index p = 0;
      while (basis_(p, t) == 0) ++p;
      pivots_.push_back(p);
    }
  }

  static LatticeBasis from_vectors(Index ambient_dim,
                                   const std::vector<DenseVector<Scalar>>& vectors) {
    DenseMatrix<Scalar> gens(ambient_dim, static_cast<Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim)
        throw DimensionMismatch("lattice generators do not match ambient dimension");
      gens.col(static_cast<Index>(i)) = vectors[i];
    }
    return LatticeBasis(ambient_dim, gens);
  }

  Index ambient_dim() const { return ambient_; }
  Index rank() const { return basis_.cols(); }
  const DenseMatrix<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

 private:
  Index ambient_;
  DenseMatrix<Scalar> basis_;
  std::vector<Index> pivots_;
};

// Basis of {v : m * v = 0}. The kernel of an integer matrix is saturated, so
// the rows of the Hermite transform belonging to zero rows of the echelon
// form are a basis of it, not merely a finite-index sublattice.
template <typename Derived>
LatticeBasis<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto res = hnf(m.transpose());
  Index rank = 0;
  while (rank < res.h.rows() && !is_zero_matrix(res.h.row(rank))) ++rank;
  const Index k = m.cols() - rank;
  DenseMatrix<Scalar> basis(m.cols(), k);
  for (Index j = 0; j < k; ++j) basis.col(j) = res.u.row(rank + j).transpose();
  return LatticeBasis<Scalar>(m.cols(), basis);
}

// Exact coordinates of v in the basis, or nullopt when v is outside the
// lattice. The echelon shape of the stored basis makes this a single
// divisibility-checked substitution sweep.
template <typename Scalar>
std::optional<DenseVector<Scalar>> lattice_membership(const LatticeBasis<Scalar>& b,
                                                      const DenseVector<Scalar>& v) {
  if (v.size() != b.ambient_dim())
    throw DimensionMismatch("vector does not match ambient dimension");
  DenseVector<Scalar> residual = v;
  DenseVector<Scalar> coords(b.rank());
  for (Index t = 0; t < b.rank(); ++t) {
    const Index p = b.pivots()[static_cast<std::size_t>(t)];
    const Scalar& pivot = b.basis()(p, t);
    if (residual(p) % pivot != 0) return std::nullopt;
    coords(t) = residual(p) / pivot;
    if (coords(t) != 0) residual -= coords(t) * b.basis().col(t);
  }
  if (!is_zero_matrix(residual)) return std::nullopt;
  return coords;
}

template <typename Scalar>
bool lattice_equal(const LatticeBasis<Scalar>& a, const LatticeBasis<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("lattices live in different ambient dimensions");
  return matrices_equal(a.basis(), b.basis());
}

template <typename Scalar>
struct AbelianGroupStructure {
  Index free_rank = 0;
  std::vector<Scalar> torsion;  // ascending divisibility chain, entries >= 2

  friend bool operator==(const AbelianGroupStructure&,
                         const AbelianGroupStructure&) = default;
};

// Invariant-factor decomposition of lattice/<subgroup>. Every subgroup
// generator must lie in the lattice.
template <typename Scalar>
AbelianGroupStructure<Scalar> quotient_invariants(
    const LatticeBasis<Scalar>& lattice,
    const std::vector<DenseVector<Scalar>>& subgroup) {
  DenseMatrix<Scalar> coords(lattice.rank(), static_cast<Index>(subgroup.size()));
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    auto c = lattice_membership(lattice, subgroup[i]);
    if (!c)
      throw SubgroupNotContained(
          "subgroup generator " + std::to_string(i) + " is not in the lattice", i);
    coords.col(static_cast<Index>(i)) = *c;
  }
  // Row-reduce the transposed coordinate matrix first so the Smith reduction
  // only ever sees a matrix no taller than the lattice rank.
  const auto res = hnf(coords.transpose());
  Index rows = 0;
  while (rows < res.h.rows() && !is_zero_matrix(res.h.row(rows))) ++rows;
  const DenseVector<Scalar> d = snf_diagonal(res.h.topRows(rows));

  AbelianGroupStructure<Scalar> out;
  Index nonzero = 0;
  for (Index i = 0; i < d.size(); ++i) {
    if (d(i) == 0) continue;
    ++nonzero;
    if (d(i) > 1) out.torsion.push_back(d(i));
  }
  out.free_rank = lattice.rank() - nonzero;
  return out;
}

}  // namespace grouph1
