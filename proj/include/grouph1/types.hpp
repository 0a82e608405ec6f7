#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

// Exact arbitrary-precision integer scalar for dense matrices. The cost
// constants are rough order-of-magnitude hints; nothing downstream is
// sensitive to them.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

// Let machine-integer literals mix with the big-integer scalar, so that
// expressions like 2 * v evaluate exactly in mpz_class.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<int, mpz_class, BinaryOp> {
  typedef mpz_class ReturnType;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<mpz_class, int, BinaryOp> {
  typedef mpz_class ReturnType;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<long, mpz_class, BinaryOp> {
  typedef mpz_class ReturnType;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<mpz_class, long, BinaryOp> {
  typedef mpz_class ReturnType;
};

}  // namespace Eigen

namespace grouph1 {

using Int = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using Index = Eigen::Index;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Exact entrywise comparison helpers. Eigen's isZero/isApprox go through
// floating-point tolerances, which is the wrong tool for exact integers.
template <typename DerivedA, typename DerivedB>
bool matrices_equal(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return false;
  return true;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace grouph1
