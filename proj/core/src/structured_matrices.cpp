#include "trsk/structured_matrices.hpp"

#include <cassert>
#include <numeric>

namespace trsk {

namespace {

Scalar rat(const Rat& v) { return Scalar::from_rational(v); }

void require_rational(const Matrix& m, const char* what) {
  if (m.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, std::string(what) + " requires the Rational algebra");
}

void require_rational_vec(std::span<const Scalar> x, const char* what) {
  for (const Scalar& s : x)
    if (s.algebra() != Algebra::Rational)
      fail(Errc::AlgebraUnsupported, std::string(what) + " requires Rational entries");
}

std::vector<Scalar> padded(std::span<const Scalar> x, int k) {
  std::vector<Scalar> v(x.begin(), x.end());
  for (int j = 0; j < k - 1 && j < static_cast<int>(v.size()); ++j)
    v[j] = Scalar::one(Algebra::Rational);
  return v;
}

Rat det_bareiss(std::vector<std::vector<Rat>> a) {
  const int r = static_cast<int>(a.size());
  if (r == 0) return 1;
  Rat sign = 1, prev = 1;
  for (int k = 0; k < r - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < r; ++i)
        if (a[i][k] != 0) { swap = i; break; }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i)
      for (int j = k + 1; j < r; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[r - 1][r - 1];
}

#ifndef NDEBUG
Rat det_cofactor(const std::vector<std::vector<Rat>>& a) {
  const int r = static_cast<int>(a.size());
  if (r == 0) return 1;
  if (r == 1) return a[0][0];
  Rat acc = 0;
  for (int j = 0; j < r; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<Rat>> sub;
    for (int i = 1; i < r; ++i) {
      std::vector<Rat> row;
      for (int c = 0; c < r; ++c)
        if (c != j) row.push_back(a[i][c]);
      sub.push_back(std::move(row));
    }
    Rat term = a[0][j] * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}
#endif

}  // namespace

SquareMatrix build_E(std::span<const Scalar> x, int k) {
  require_rational_vec(x, "build_E");
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) fail(Errc::InvalidArgument, "truncation index outside 1..n");
  std::vector<Scalar> v = padded(x, k);
  SquareMatrix m(Algebra::Rational, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j)
        m.at(i, j) = v[i - 1];
      else if (j == i + 1 && i >= k)
        m.at(i, j) = rat(1);
      else
        m.at(i, j) = rat(0);
    }
  return m;
}

SquareMatrix build_H(std::span<const Scalar> x, int k) {
  require_rational_vec(x, "build_H");
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) fail(Errc::InvalidArgument, "truncation index outside 1..n");
  std::vector<Scalar> v = padded(x, k);
  SquareMatrix m(Algebra::Rational, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < k) {
        m.at(i, j) = rat(i == j ? 1 : 0);
      } else if (j >= i) {
        Scalar prod = v[i - 1];
        for (int c = i + 1; c <= j; ++c) prod = prod.mul(v[c - 1]);
        m.at(i, j) = prod;
      } else {
        m.at(i, j) = rat(0);
      }
    }
  return m;
}

SquareMatrix assemble_E(const CanonicalFactors& f) {
  if (f.vectors.empty()) fail(Errc::InvalidArgument, "no factors");
  SquareMatrix acc = build_E(f.vectors[0], 1);
  for (int i = 2; i <= f.m(); ++i) acc = acc.mul(build_E(f.vectors[i - 1], i));
  return acc;
}

SquareMatrix assemble_H(const CanonicalFactors& f) {
  if (f.vectors.empty()) fail(Errc::InvalidArgument, "no factors");
  SquareMatrix acc = build_H(f.vectors[f.m() - 1], f.m());
  for (int i = f.m() - 1; i >= 1; --i) acc = acc.mul(build_H(f.vectors[i - 1], i));
  return acc;
}

Scalar minor_det(const SquareMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  require_rational(m, "minor_det");
  if (rows.size() != cols.size()) fail(Errc::LengthMismatch, "minor index lists differ in length");
  for (size_t a = 1; a < rows.size(); ++a)
    if (rows[a] <= rows[a - 1] || cols[a] <= cols[a - 1])
      fail(Errc::InvalidArgument, "minor index lists must be strictly increasing");
  std::vector<std::vector<Rat>> sub(rows.size(), std::vector<Rat>(cols.size()));
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < cols.size(); ++b) sub[a][b] = m.at(rows[a], cols[b]).payload();
#ifndef NDEBUG
  if (rows.size() <= 4) {
    assert(det_bareiss(sub) == det_cofactor(sub));
  }
#endif
  return rat(det_bareiss(std::move(sub)));
}

Scalar corner_minor_Q(const SquareMatrix& m, int i, int j) {
  if (j < i) return rat(1);
  std::vector<int> rows(j - i + 1), cols(j - i + 1);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), i);
  return minor_det(m, rows, cols);
}

Scalar corner_minor_tau(const SquareMatrix& h, int i, int j) {
  if (i == 0) return rat(1);
  if (i > j) fail(Errc::InvalidArgument, "tau^i_j needs i <= j");
  std::vector<int> rows(i), cols(i);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), j - i + 1);
  return minor_det(h, rows, cols);
}

CanonicalFactors decompose_triangular_E(const SquareMatrix& m, int band) {
  require_rational(m, "decompose_triangular_E");
  const int n = m.rows();
  if (m.cols() != n) fail(Errc::InvalidArgument, "square matrix required");
  if (band < 1 || band > n) fail(Errc::InvalidArgument, "band outside 1..n");
  const Rat zero = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < i && m.at(i, j).payload() != zero)
        fail(Errc::InvalidArgument, "matrix is not upper triangular");
      if (j > i + band && m.at(i, j).payload() != zero)
        fail(Errc::InvalidArgument, "band condition violated above the band");
      if (j == i + band && m.at(i, j).payload() != 1)
        fail(Errc::InvalidArgument, "band condition requires ones on the outer diagonal");
    }

  CanonicalFactors f;
  f.vectors.assign(band, std::vector<Scalar>(n, Scalar::one(Algebra::Rational)));
  auto q = [&](int i, int j) {
    Scalar v = corner_minor_Q(m, i, j);
    if (v.payload() == zero)
      fail(Errc::DecompositionObstruction,
           "Q(" + std::to_string(i) + "," + std::to_string(j) + ") vanishes");
    return v;
  };
  for (int i = 1; i <= band; ++i) {
    f.vectors[i - 1][i - 1] = q(i, i);
    for (int j = i + 1; j <= n; ++j)
      f.vectors[i - 1][j - 1] = q(i, j).mul(q(i + 1, j - 1)).div(q(i + 1, j).mul(q(i, j - 1)));
  }
  return f;
}

CanonicalFactors decompose_triangular_H(const SquareMatrix& h, int band) {
  require_rational(h, "decompose_triangular_H");
  const int n = h.rows();
  if (h.cols() != n) fail(Errc::InvalidArgument, "square matrix required");
  if (band < 1 || band > n) fail(Errc::InvalidArgument, "band outside 1..n");
  const Rat zero = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (h.at(i, j).payload() != zero) fail(Errc::InvalidArgument, "matrix is not upper triangular");
  // Degenerate condition above the band: tau^i_j = delta_{ij} tau^band_j.
  for (int i = band + 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Scalar t = corner_minor_tau(h, i, j);
      Scalar expect = (i == j) ? corner_minor_tau(h, band, j) : rat(0);
      if (t != expect)
        fail(Errc::DecompositionObstruction, "degeneracy condition fails at tau(" +
                                                 std::to_string(i) + "," + std::to_string(j) + ")");
    }

  CanonicalFactors f;
  f.vectors.assign(band, std::vector<Scalar>(n, Scalar::one(Algebra::Rational)));
  auto tau = [&](int i, int j) {
    Scalar v = corner_minor_tau(h, i, j);
    if (i >= 1 && v.payload() == zero)
      fail(Errc::DecompositionObstruction,
           "tau(" + std::to_string(i) + "," + std::to_string(j) + ") vanishes");
    return v;
  };
  for (int i = 1; i <= band; ++i) {
    f.vectors[i - 1][i - 1] = tau(i, i).div(tau(i - 1, i));
    for (int j = i + 1; j <= n; ++j)
      f.vectors[i - 1][j - 1] =
          tau(i, j).mul(tau(i - 1, j - 1)).div(tau(i - 1, j).mul(tau(i, j - 1)));
  }
  return f;
}

Matrix conjugate_J(const Matrix& m) {
  Matrix r(m.algebra(), m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      r.at(i, j) = m.at(m.rows() + 1 - i, m.cols() + 1 - j);
  return r;
}

SquareMatrix invert(const SquareMatrix& m) {
  require_rational(m, "invert");
  const int n = m.rows();
  if (m.cols() != n) fail(Errc::InvalidArgument, "square matrix required");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i + 1, j + 1).payload();
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) { pivot = i; break; }
    if (pivot < 0) fail(Errc::InvalidArgument, "singular matrix");
    std::swap(a[k], a[pivot]);
    Rat inv = Rat(1) / a[k][k];
    for (int j = 0; j < 2 * n; ++j) a[k][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat factor = a[i][k];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  SquareMatrix r(Algebra::Rational, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i + 1, j + 1) = rat(a[i][n + j]);
  return r;
}

SquareMatrix build_spectral_E(std::span<const Scalar> x, const Scalar& z) {
  require_rational_vec(x, "build_spectral_E");
  if (z.algebra() != Algebra::Rational) fail(Errc::AlgebraUnsupported, "spectral z must be rational");
  const int n = static_cast<int>(x.size());
  SquareMatrix m = build_E(x, 1);
  if (n >= 2) m.at(n, 1) = z;
  else m.at(1, 1) = m.at(1, 1).add(z);
  return m;
}

SquareMatrix build_spectral_H(std::span<const Scalar> x, const Scalar& z) {
  require_rational_vec(x, "build_spectral_H");
  if (z.algebra() != Algebra::Rational) fail(Errc::AlgebraUnsupported, "spectral z must be rational");
  const int n = static_cast<int>(x.size());
  Rat total = 1;
  for (const Scalar& s : x) total *= s.payload();
  Rat denom = Rat(1) - total * z.payload();
  if (denom == 0) fail(Errc::SpectralPole, "1 - x_1...x_n z vanishes");
  SquareMatrix m(Algebra::Rational, n, n);
  auto range = [&](int lo, int hi) {
    Rat p = 1;
    for (int c = lo; c <= hi; ++c) p *= x[c - 1].payload();
    return p;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i <= j)
        m.at(i, j) = rat(range(i, j) / denom);
      else
        m.at(i, j) = rat(range(1, j) * range(i, n) * z.payload() / denom);
    }
  return m;
}

SquareMatrix build_G(int l, const Scalar& u, const Scalar& z, int n) {
  if (u.algebra() != Algebra::Rational || z.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "build_G requires Rational parameters");
  if (l < 0 || l > n - 1) fail(Errc::InvalidArgument, "index l outside 0..n-1");
  if (u.payload() == 0) fail(Errc::GenericityFailure, "G parameter u vanishes");
  SquareMatrix m = Matrix::identity(n);
  if (l == 0) {
    if (z.payload() == 0) fail(Errc::SpectralPole, "G_0 needs z != 0");
    m.at(1, n) = m.at(1, n).add(rat(Rat(1) / (u.payload() * z.payload())));
  } else {
    m.at(l + 1, l) = rat(Rat(1) / u.payload());
  }
  return m;
}

}  // namespace trsk
