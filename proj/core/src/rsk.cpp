#include "trsk/rsk.hpp"

#include "trsk/schutzenberger.hpp"
#include "trsk/structured_matrices.hpp"

#include <algorithm>
#include <numeric>

namespace trsk {

namespace {

void require_positive_rational(const Matrix& x, const char* what) {
  if (x.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, std::string(what) + " requires the Rational algebra");
  for (int i = 1; i <= x.rows(); ++i)
    for (int j = 1; j <= x.cols(); ++j)
      if (!x.at(i, j).is_positive())
        fail(Errc::PositivityViolation, std::string(what) + " requires positive entries");
}

void check_shapes_match(const TableauContent& u, const TableauContent& v) {
  std::vector<Scalar> lu = u.shape(), lv = v.shape();
  if (lu.size() != lv.size()) fail(Errc::ShapeMismatch, "U and V have different row counts");
  for (size_t i = 0; i < lu.size(); ++i)
    if (lu[i] != lv[i]) fail(Errc::ShapeMismatch, "U and V shapes differ at row " + std::to_string(i + 1));
}

// H_U = H_m(u^m)...H_1(u^1) over the tableau's alphabet size.
SquareMatrix assemble_H_of(const TableauContent& t) {
  CanonicalFactors f;
  for (int i = 1; i <= t.rows(); ++i) f.vectors.push_back(t.row(i));
  return assemble_H(f);
}

}  // namespace

PathMatrix phi(const TransportMatrix& x) {
  require_positive_rational(x, "phi");
  const int m = x.rows(), n = x.cols();
  PathMatrix out(Algebra::Rational, m, n);
  for (int i = 1; i <= m; ++i) {
    // Vertex-weighted paths from (i,1) up-right to (1,j), row by row.
    std::vector<Scalar> reach(n + 1, Scalar::from_rational(0));
    std::vector<Scalar> prev;
    for (int a = i; a >= 1; --a) {
      std::vector<Scalar> cur(n + 1, Scalar::from_rational(0));
      for (int b = 1; b <= n; ++b) {
        Scalar incoming = Scalar::from_rational(0);
        if (a == i && b == 1) incoming = Scalar::from_rational(1);
        if (a < i) incoming = incoming.add(prev[b]);
        if (b > 1) incoming = incoming.add(cur[b - 1]);
        cur[b] = incoming.mul(x.at(a, b));
      }
      prev = cur;
      if (a == 1) reach = cur;
    }
    for (int j = 1; j <= n; ++j) out.at(i, j) = reach[j];
  }
  return out;
}

MinorTable path_matrix_tau(const PathMatrix& phi_matrix) {
  if (phi_matrix.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "special minors of a path matrix are determinants");
  const int m = phi_matrix.rows(), n = phi_matrix.cols();
  MinorTable table(Algebra::Rational, m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int r = std::min(i, j);
      std::vector<int> rows(r), cols(r);
      std::iota(rows.begin(), rows.end(), i - r + 1);
      std::iota(cols.begin(), cols.end(), j - r + 1);
      table.set(i, j, minor_det(phi_matrix, rows, cols));
    }
  return table;
}

TransportMatrix phi_inverse(const PathMatrix& phi_matrix) {
  MinorTable tau = path_matrix_tau(phi_matrix);
  const int m = phi_matrix.rows(), n = phi_matrix.cols();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (tau.at(i, j).payload() == 0)
        fail(Errc::NotInTauCell,
             "tau(" + std::to_string(i) + "," + std::to_string(j) + ") vanishes");
  TransportMatrix x(Algebra::Rational, m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) x.at(i, j) = tau.ratio(i, j);
  return x;
}

TransportMatrix iota(const TransportMatrix& x) {
  MinorTable sigma = rect_minor_table(x, Orientation::Iota);
  TransportMatrix y(x.algebra(), x.rows(), x.cols());
  for (int i = 1; i <= x.rows(); ++i)
    for (int j = 1; j <= x.cols(); ++j) y.at(i, j) = sigma.ratio(i, j);
  return y;
}

TableauPair rsk_star(const TransportMatrix& x) {
  const int m = x.rows(), n = x.cols();
  if (m > n) {
    TableauPair swapped = rsk_star(transpose(x));
    return {std::move(swapped.V), std::move(swapped.U)};
  }
  TableauContent u = insert_word(x, RowOrder::BottomUp);
  TableauContent v = insert_word(transpose(x), RowOrder::BottomUp);
  return {std::move(u), std::move(v)};
}

TableauPair rsk_variants(const TransportMatrix& a, RskVariant variant) {
  // X = J_m A: reverse the row order, then U = P and V = the evacuated Q.
  Matrix x(a.algebra(), a.rows(), a.cols());
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) x.at(i, j) = a.at(a.rows() + 1 - i, j);
  TableauPair star = rsk_star(x);
  switch (variant) {
    case RskVariant::PQt: return star;
    case RskVariant::PQ: return {star.U, evacuate(star.V)};
    case RskVariant::PtQ: return {evacuate(star.U), evacuate(star.V)};
    case RskVariant::PtQt: return {evacuate(star.U), star.V};
  }
  fail(Errc::InvalidArgument, "unknown variant");
}

MinorTable sigma_from_pair(const TableauContent& u, const TableauContent& v) {
  check_shapes_match(u, v);
  const int n = u.n(), m = v.n();
  if (u.rows() > std::min(m, n)) fail(Errc::ShapeMismatch, "too many rows for an m x n pair");
  const Algebra alg = u.algebra();
  MinorTable table(alg, m, n);
  auto prod_region = [&](const TableauContent& t, int imax, int bmax) {
    Scalar acc = Scalar::one(alg);
    for (int a = 1; a <= std::min(imax, t.rows()); ++a)
      for (int b = a; b <= std::min(bmax, t.n()); ++b) acc = acc.mul(t.entry(a, b));
    return acc;
  };
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      Scalar s = i <= j ? prod_region(u, i, n - j + i) : prod_region(v, j, m - i + j);
      table.set(i, j, s);
    }
  return table;
}

GTPattern gt_pattern(const TableauContent& u) {
  GTPattern p;
  for (int j = 1; j <= u.n(); ++j) {
    std::vector<Scalar> level;
    for (int i = 1; i <= std::min(j, u.rows()); ++i) {
      Scalar prod = u.entry(i, i);
      for (int c = i + 1; c <= j; ++c) prod = prod.mul(u.entry(i, c));
      level.push_back(prod);
    }
    p.levels.push_back(std::move(level));
  }
  return p;
}

bool gt_interlaces(const GTPattern& p) {
  for (size_t j = 0; j + 1 < p.levels.size(); ++j) {
    const auto& lo = p.levels[j];
    const auto& hi = p.levels[j + 1];
    for (size_t i = 0; i < lo.size(); ++i) {
      if (i < hi.size() && hi[i].compare(lo[i]) == std::strong_ordering::less) return false;
      if (i + 1 < hi.size() && lo[i].compare(hi[i + 1]) == std::strong_ordering::less) return false;
    }
  }
  return true;
}

TransportMatrix inverse_rsk_star(const TableauContent& u, const TableauContent& v) {
  const int n = u.n(), m = v.n();
  if (m > n) return transpose(inverse_rsk_star(v, u));
  check_shapes_match(u, v);
  const Algebra alg = u.algebra();
  const Scalar one = Scalar::one(alg);
  std::vector<Scalar> lambda = u.shape();

  auto uat = [&](int a, int b) { return a <= u.rows() ? u.entry(a, b) : one; };
  auto vat = [&](int a, int b) { return a <= v.rows() ? v.entry(a, b) : one; };

  TransportMatrix y(alg, m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j) {
        int c = n - j + i;
        Scalar num = one, den = one;
        for (int a = 1; a <= i - 1; ++a) num = num.mul(uat(a, c));
        for (int a = 1; a <= i; ++a) den = den.mul(uat(a, c + 1));
        y.at(i, j) = num.div(den);
      } else if (i > j) {
        int c = m - i + j;
        Scalar num = one, den = one;
        for (int a = 1; a <= j - 1; ++a) num = num.mul(vat(a, c));
        for (int a = 1; a <= j; ++a) den = den.mul(vat(a, c + 1));
        y.at(i, j) = num.div(den);
      } else {
        // Diagonal case from the sigma ratios: lambda_i ⊗ (tail column
        // products of U and V). The displayed closed form in the source
        // carries these products inverted; the sigma route is the one
        // consistent with the involution.
        Scalar tails = one;
        for (int a = 1; a <= i - 1; ++a) tails = tails.mul(uat(a, n)).mul(vat(a, m));
        y.at(i, j) = (i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : one).mul(tails);
      }
    }
  return iota(y);
}

GaussFactors gauss_decompose(const TableauContent& u, const TableauContent& v) {
  if (u.algebra() != Algebra::Rational || v.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "gauss_decompose requires the Rational algebra");
  check_shapes_match(u, v);
  const int n = u.n(), m = v.n();
  if (m > n) fail(Errc::UnsupportedShape, "gauss_decompose assumes m <= n");

  SquareMatrix hu = assemble_H_of(u);  // n x n
  SquareMatrix hv = assemble_H_of(v);  // m x m
  std::vector<Scalar> lambda = u.shape();

  Matrix diag(Algebra::Rational, m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      diag.at(i, j) =
          i == j ? (i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : Scalar::from_rational(1))
                 : Scalar::from_rational(0);

  // Psi_+^i_j = det Hu^{1..i}_{{n-j+1} u {n-i+2..n}} / det Hu^{1..i}_{n-i+1..n}
  Matrix upper(Algebra::Rational, m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j < i) { upper.at(i, j) = Scalar::from_rational(0); continue; }
      if (j == i) { upper.at(i, j) = Scalar::from_rational(1); continue; }
      std::vector<int> rows(i), num_cols, den_cols(i);
      std::iota(rows.begin(), rows.end(), 1);
      num_cols.push_back(n - j + 1);
      for (int c = n - i + 2; c <= n; ++c) num_cols.push_back(c);
      std::iota(den_cols.begin(), den_cols.end(), n - i + 1);
      Scalar den = minor_det(hu, rows, den_cols);
      if (den.payload() == 0) fail(Errc::GenericityFailure, "vanishing principal minor of H_U");
      upper.at(i, j) = minor_det(hu, rows, num_cols).div(den);
    }

  // Psi_-^i_j = det Hv^{1..j}_{{m-i+1} u {m-j+2..m}} / det Hv^{1..j}_{m-j+1..m}
  Matrix lower(Algebra::Rational, m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (j > i) { lower.at(i, j) = Scalar::from_rational(0); continue; }
      if (j == i) { lower.at(i, j) = Scalar::from_rational(1); continue; }
      std::vector<int> rows(j), num_cols, den_cols(j);
      std::iota(rows.begin(), rows.end(), 1);
      num_cols.push_back(m - i + 1);
      for (int c = m - j + 2; c <= m; ++c) num_cols.push_back(c);
      std::iota(den_cols.begin(), den_cols.end(), m - j + 1);
      Scalar den = minor_det(hv, rows, den_cols);
      if (den.payload() == 0) fail(Errc::GenericityFailure, "vanishing principal minor of H_V");
      lower.at(i, j) = minor_det(hv, rows, num_cols).div(den);
    }

  return {std::move(lower), std::move(diag), std::move(upper)};
}

}  // namespace trsk
