#pragma once

/**
 * @file matrix.hpp
 * @brief Dense algebra-tagged matrix with 1-based indexing.
 *
 * All indices across the library are 1-based, exactly like the source
 * formulas; translating once at this boundary keeps every path and minor
 * convention literal.
 */

#include "trsk/algebra.hpp"

#include <vector>

namespace trsk {

class Matrix {
 public:
  Matrix(Algebra alg, int rows, int cols)
      : alg_(alg), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, Scalar::one(alg)) {
    if (rows < 0 || cols < 0) fail(Errc::InvalidArgument, "negative matrix dimensions");
  }

  static Matrix identity(int n) {
    Matrix m(Algebra::Rational, n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        m.at(i, j) = Scalar::from_rational(i == j ? 1 : 0);
    return m;
  }

  Algebra algebra() const { return alg_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) {
    check(i, j);
    return data_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
  }
  const Scalar& at(int i, int j) const {
    check(i, j);
    return data_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
  }

  bool operator==(const Matrix& o) const {
    return alg_ == o.alg_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Semiring product: entries ⊕-summed over ⊗-products. Works in both
  /// algebras (the k-sum is never empty).
  Matrix mul(const Matrix& o) const;

  std::vector<Scalar> row(int i) const;
  std::vector<Scalar> col(int j) const;

 private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      fail(Errc::BoundsError, "matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") out of " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  Algebra alg_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// The x^i_j grid of the correspondences; same layout, named for intent.
using TransportMatrix = Matrix;

Matrix transpose(const Matrix& m);

}  // namespace trsk
