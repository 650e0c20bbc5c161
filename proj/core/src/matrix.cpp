#include "trsk/matrix.hpp"

namespace trsk {

Matrix Matrix::mul(const Matrix& o) const {
  if (alg_ != o.alg_) fail(Errc::AlgebraMismatch, "matrix product across algebras");
  if (cols_ != o.rows_) fail(Errc::LengthMismatch, "matrix product shape mismatch");
  if (cols_ == 0) fail(Errc::InvalidArgument, "empty contraction has no ⊕-identity");
  Matrix r(alg_, rows_, o.cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= o.cols_; ++j) {
      Scalar acc = at(i, 1).mul(o.at(1, j));
      for (int k = 2; k <= cols_; ++k) acc = acc.add(at(i, k).mul(o.at(k, j)));
      r.at(i, j) = acc;
    }
  return r;
}

std::vector<Scalar> Matrix::row(int i) const {
  std::vector<Scalar> v;
  v.reserve(cols_);
  for (int j = 1; j <= cols_; ++j) v.push_back(at(i, j));
  return v;
}

std::vector<Scalar> Matrix::col(int j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (int i = 1; i <= rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.algebra(), m.cols(), m.rows());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace trsk
