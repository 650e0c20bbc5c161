#include "trsk/weyl.hpp"

#include "trsk/structured_matrices.hpp"

#include <algorithm>

namespace trsk {

namespace {

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

void require_period(const Matrix& x, const WeylParams& params) {
  if (params.p.algebra() != x.algebra() || params.q.algebra() != x.algebra())
    fail(Errc::AlgebraMismatch, "period multipliers must live in the matrix algebra");
}

}  // namespace

Scalar ExtendedIndexer::at(long i, long j) const {
  const long m = x_.rows(), n = x_.cols();
  long a = floor_div(i - 1, m), b = floor_div(j - 1, n);
  Scalar v = x_.at(static_cast<int>(i - a * m), static_cast<int>(j - b * n));
  if (a != 0) v = v.mul(params_.q.pow(-a));
  if (b != 0) v = v.mul(params_.p.pow(-b));
  return v;
}

WeylWord parse_weyl_word(const std::string& text) {
  WeylWord word;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok == "w") {
      word.push_back(WeylGenerator::omega());
    } else if (tok == "p") {
      word.push_back(WeylGenerator::pi());
    } else if (tok.size() >= 2 && (tok[0] == 'r' || tok[0] == 's')) {
      int idx;
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        fail(Errc::InvalidArgument, "bad generator token '" + tok + "'");
      }
      word.push_back(tok[0] == 'r' ? WeylGenerator::r(idx) : WeylGenerator::s(idx));
    } else if (!tok.empty()) {
      fail(Errc::InvalidArgument, "bad generator token '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return word;
}

Scalar P_poly(const Matrix& x, const WeylParams& params, long i, long j) {
  require_period(x, params);
  const int n = x.cols();
  ExtendedIndexer xt(x, params);
  std::optional<Scalar> acc;
  for (int k = 1; k <= n; ++k) {
    Scalar term = xt.at(i + 1, j + 1);
    for (int a = 2; a <= k; ++a) term = term.mul(xt.at(i + 1, j + a));
    for (int a = k; a <= n; ++a) term = term.mul(xt.at(i, j + a));
    acc = acc ? acc->add(term) : term;
  }
  return *acc;
}

Scalar Q_poly(const Matrix& x, const WeylParams& params, long i, long j) {
  require_period(x, params);
  const int m = x.rows();
  ExtendedIndexer xt(x, params);
  std::optional<Scalar> acc;
  for (int k = 1; k <= m; ++k) {
    Scalar term = xt.at(i + 1, j + 1);
    for (int a = 2; a <= k; ++a) term = term.mul(xt.at(i + a, j + 1));
    for (int a = k; a <= m; ++a) term = term.mul(xt.at(i + a, j));
    acc = acc ? acc->add(term) : term;
  }
  return *acc;
}

Matrix apply_generator(const WeylGenerator& g, const Matrix& x, const WeylParams& params) {
  require_period(x, params);
  const int m = x.rows(), n = x.cols();
  ExtendedIndexer xt(x, params);
  Matrix y(x.algebra(), m, n);

  switch (g.kind) {
    case WeylGenerator::Kind::R: {
      if (m < 2) fail(Errc::InvalidArgument, "row reflections need m >= 2");
      int k = ((g.index % m) + m) % m;
      for (int r = 1; r <= m; ++r) {
        bool top = (r % m) == k;
        bool bottom = (r % m) == (k + 1) % m;
        for (int j = 1; j <= n; ++j) {
          if (top)
            y.at(r, j) = params.p.mul(xt.at(r + 1, j))
                             .mul(P_poly(x, params, r, j))
                             .div(P_poly(x, params, r, j - 1));
          else if (bottom)
            y.at(r, j) = xt.at(r - 1, j)
                             .mul(P_poly(x, params, r - 1, j - 1))
                             .div(params.p.mul(P_poly(x, params, r - 1, j)));
          else
            y.at(r, j) = x.at(r, j);
        }
      }
      return y;
    }
    case WeylGenerator::Kind::S: {
      if (n < 2) fail(Errc::InvalidArgument, "column reflections need n >= 2");
      int l = ((g.index % n) + n) % n;
      for (int c = 1; c <= n; ++c) {
        bool left = (c % n) == l;
        bool right = (c % n) == (l + 1) % n;
        for (int i = 1; i <= m; ++i) {
          if (left)
            y.at(i, c) = params.q.mul(xt.at(i, c + 1))
                             .mul(Q_poly(x, params, i, c))
                             .div(Q_poly(x, params, i - 1, c));
          else if (right)
            y.at(i, c) = xt.at(i, c - 1)
                             .mul(Q_poly(x, params, i - 1, c - 1))
                             .div(params.q.mul(Q_poly(x, params, i, c - 1)));
          else
            y.at(i, c) = x.at(i, c);
        }
      }
      return y;
    }
    case WeylGenerator::Kind::Omega: {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) y.at(i, j) = xt.at(i + 1, j);
      return y;
    }
    case WeylGenerator::Kind::Pi: {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) y.at(i, j) = xt.at(i, j + 1);
      return y;
    }
  }
  fail(Errc::InvalidArgument, "unknown generator");
}

Matrix apply_word(const WeylWord& word, const Matrix& x, const WeylParams& params) {
  Matrix y = x;
  for (const WeylGenerator& g : word) y = apply_generator(g, y, params);
  return y;
}

Scalar g0_from_matrix(const Matrix& x, const WeylParams& params, int l) {
  if (x.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "g_0 carries a subtraction; Rational only");
  const int m = x.rows(), n = x.cols();
  if (l < 1 || l >= n) fail(Errc::InvalidArgument, "column index l outside 1..n-1");
  Rat left = params.q.inv().payload(), right = 1;
  for (int a = 1; a <= m; ++a) {
    left *= x.at(a, l + 1).payload();
    right *= x.at(a, l).payload();
  }
  Rat den = left - right;
  if (den == 0) fail(Errc::GenericityFailure, "g_0 denominator vanishes at l = " + std::to_string(l));
  return Scalar::from_rational(Q_poly(x, params, 0, l).payload() / den);
}

Scalar g0_from_tableau(const TableauContent& u, const Scalar& q, int l) {
  if (u.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "g_0 carries a subtraction; Rational only");
  const int m = u.rows(), n = u.n();
  if (l < 1 || l >= n) fail(Errc::InvalidArgument, "column index l outside 1..n-1");
  const int top = std::min(l, m);        // rows of column l
  const int top1 = std::min(l + 1, m);   // rows of column l+1
  Rat num = 0;
  for (int k = 1; k <= top; ++k) {
    Rat term = 1;
    for (int a = 1; a <= k; ++a) term *= u.entry(a, l + 1).payload();
    for (int a = k; a <= top; ++a) term *= u.entry(a, l).payload();
    num += term;
  }
  Rat left = q.inv().payload(), right = 1;
  for (int a = 1; a <= top1; ++a) left *= u.entry(a, l + 1).payload();
  for (int a = 1; a <= top; ++a) right *= u.entry(a, l).payload();
  Rat den = left - right;
  if (den == 0) fail(Errc::GenericityFailure, "g_0 denominator vanishes at l = " + std::to_string(l));
  return Scalar::from_rational(num / den);
}

std::vector<Scalar> g_chain(const Matrix& x, const WeylParams& params, int l) {
  std::vector<Scalar> g{g0_from_matrix(x, params, l)};
  ExtendedIndexer xt(x, params);
  for (int i = 1; i <= x.rows(); ++i) {
    Rat xi_l = xt.at(i, l).payload(), xi_l1 = xt.at(i, l + 1).payload();
    g.push_back(Scalar::from_rational(xi_l + xi_l / xi_l1 * g.back().payload()));
  }
  return g;
}

Scalar tableau_A(const TableauContent& u, const Scalar& q, int i, int l) {
  const int m = u.rows(), n = u.n();
  if (l < 1 || l >= n) fail(Errc::InvalidArgument, "column index l outside 1..n-1");
  const int top = std::min(l, m);
  const int top1 = std::min(l + 1, m);
  if (i < 0 || i > top) fail(Errc::InvalidArgument, "A^i_l needs 0 <= i <= min(l, rows)");
  const Scalar one = Scalar::one(u.algebra());

  std::optional<Scalar> acc;
  if (i < top) {
    Scalar prefix = one;
    for (int a = 1; a <= i; ++a) prefix = prefix.mul(u.entry(a, l));
    for (int k = i + 1; k <= top; ++k) {
      Scalar term = prefix;
      for (int a = i + 1; a <= k; ++a) term = term.mul(u.entry(a, l + 1));
      for (int a = k; a <= top; ++a) term = term.mul(u.entry(a, l));
      acc = acc ? acc->add(term) : term;
    }
  }
  if (i >= 1) {
    Scalar prefix = q.inv();
    for (int a = i + 1; a <= top1; ++a) prefix = prefix.mul(u.entry(a, l + 1));
    for (int k = 1; k <= i; ++k) {
      Scalar term = prefix;
      for (int a = 1; a <= k; ++a) term = term.mul(u.entry(a, l + 1));
      for (int a = k; a <= i; ++a) term = term.mul(u.entry(a, l));
      acc = acc ? acc->add(term) : term;
    }
  }
  return *acc;
}

TableauContent s_on_tableau(int l, const TableauContent& u, const Scalar& q) {
  if (q.algebra() != u.algebra()) fail(Errc::AlgebraMismatch, "parameter q must match the tableau algebra");
  const int m = u.rows(), n = u.n();
  if (l < 1 || l >= n) fail(Errc::InvalidArgument, "column index l outside 1..n-1");
  TableauContent t = u;
  const int imax = std::min(l, m);
  std::vector<Scalar> A;
  for (int i = 0; i <= imax; ++i) A.push_back(tableau_A(u, q, i, l));
  for (int i = 1; i <= imax; ++i) {
    t.entry(i, l) = u.entry(i, l + 1).mul(A[i]).div(A[i - 1]);
    t.entry(i, l + 1) = u.entry(i, l).mul(A[i - 1]).div(A[i]);
  }
  return t;
}

void CheckReport::add(std::string relation, bool pass, std::string lhs, std::string rhs) {
  items.push_back({std::move(relation), pass, std::move(lhs), std::move(rhs)});
}

Matrix spectral_H(const Matrix& x, const WeylParams& params, const Scalar& z) {
  if (x.algebra() != Algebra::Rational)
    fail(Errc::AlgebraUnsupported, "spectral matrices are Rational-only instruments");
  const int m = x.rows();
  std::optional<Matrix> acc;
  for (int i = m; i >= 1; --i) {
    std::vector<Scalar> row = x.row(i);
    Matrix factor = build_spectral_H(row, z.mul(params.p.pow(m - i)));
    acc = acc ? acc->mul(factor) : factor;
  }
  return *acc;
}

CheckReport spectral_check_r_invariance(const Matrix& x, const WeylParams& params, int k,
                                        std::span<const Scalar> z_samples) {
  const int m = x.rows();
  if (m < 2 || ((k % m) + m) % m == 0)
    fail(Errc::InvalidArgument, "invariance holds for the non-affine reflections r_1..r_{m-1}");
  CheckReport report;
  Matrix y = apply_generator(WeylGenerator::r(k), x, params);
  for (const Scalar& z : z_samples) {
    bool equal = spectral_H(x, params, z) == spectral_H(y, params, z);
    report.add("H(r_" + std::to_string(k) + "(X);z) == H(X;z) at z=" + z.str(), equal);
  }
  return report;
}

CheckReport spectral_check_s_conjugation(const Matrix& x, const WeylParams& params, int l,
                                         std::span<const Scalar> z_samples) {
  const int m = x.rows(), n = x.cols();
  if (n < 2 || ((l % n) + n) % n == 0)
    fail(Errc::InvalidArgument, "conjugation is checked for the non-affine reflections s_1..s_{n-1}");
  l = ((l % n) + n) % n;
  CheckReport report;
  Matrix y = apply_generator(WeylGenerator::s(l), x, params);
  Scalar g0 = g0_from_matrix(x, params, l);
  Scalar g0q = params.q.inv().mul(g0);

  for (const Scalar& z : z_samples) {
    Scalar zeta = n % 2 == 0 ? z : Scalar::from_rational(-z.payload());
    Matrix right = build_G(l, g0, zeta, n);
    Matrix left_inv = build_G(l, Scalar::from_rational(-g0q.payload()), zeta, n);
    Matrix lhs = spectral_H(y, params, z);
    Matrix rhs = left_inv.mul(spectral_H(x, params, z)).mul(right);
    report.add("H(s_" + std::to_string(l) + "(X);z) == G^-1 H(X;z) G at z=" + z.str(), lhs == rhs);
  }

  // The g-chain recurrence g_i = x^i_l + (x^i_l / x^i_{l+1}) g_{i-1} closes
  // up to the period twist: g_m = q^{-1} g_0.
  std::vector<Scalar> chain = g_chain(x, params, l);
  report.add("g_m == q^{-1} g_0", chain.back() == g0q, chain.back().str(), g0q.str());
  return report;
}

CheckReport toda_residual(const Matrix& x, const Matrix& y, const WeylParams& params,
                          TodaKind kind, int index) {
  if (kind != TodaKind::RowAction && kind != TodaKind::ColumnAction)
    fail(Errc::InvalidArgument, "matrix overload handles RowAction/ColumnAction");
  const int m = x.rows(), n = x.cols();
  if (y.rows() != m || y.cols() != n || y.algebra() != x.algebra())
    fail(Errc::ShapeMismatch, "X and Y must agree in shape and algebra");
  ExtendedIndexer xt(x, params), yt(y, params);
  const Scalar one = Scalar::one(x.algebra());
  CheckReport report;

  auto emit = [&](const std::string& name, const Scalar& lhs, const Scalar& rhs) {
    report.add(name, lhs == rhs, lhs.str(), rhs.str());
  };

  if (kind == TodaKind::RowAction) {
    long k = index;
    for (int j = 1; j <= n; ++j) {
      emit("bilinear col " + std::to_string(j), xt.at(k, j).mul(xt.at(k + 1, j)),
           yt.at(k, j).mul(yt.at(k + 1, j)));
      emit("reciprocal col " + std::to_string(j),
           one.div(xt.at(k, j)).add(one.div(xt.at(k + 1, j + 1))),
           one.div(yt.at(k, j)).add(one.div(yt.at(k + 1, j + 1))));
    }
    Scalar xrow_k = one, xrow_k1 = one, yrow_k = one, yrow_k1 = one;
    for (int j = 1; j <= n; ++j) {
      xrow_k = xrow_k.mul(xt.at(k, j));
      xrow_k1 = xrow_k1.mul(xt.at(k + 1, j));
      yrow_k = yrow_k.mul(yt.at(k, j));
      yrow_k1 = yrow_k1.mul(yt.at(k + 1, j));
    }
    emit("row product k", yrow_k, params.p.inv().mul(xrow_k1));
    emit("row product k+1", yrow_k1, params.p.mul(xrow_k));
    int kk = ((index % m) + m) % m;
    for (int r = 1; r <= m; ++r)
      if (r % m != kk && r % m != (kk + 1) % m)
        for (int j = 1; j <= n; ++j)
          emit("fixed row " + std::to_string(r) + " col " + std::to_string(j), x.at(r, j),
               y.at(r, j));
  } else {
    long l = index;
    for (int i = 1; i <= m; ++i) {
      emit("bilinear row " + std::to_string(i), xt.at(i, l).mul(xt.at(i, l + 1)),
           yt.at(i, l).mul(yt.at(i, l + 1)));
      emit("reciprocal row " + std::to_string(i),
           one.div(xt.at(i, l)).add(one.div(xt.at(i + 1, l + 1))),
           one.div(yt.at(i, l)).add(one.div(yt.at(i + 1, l + 1))));
    }
    Scalar xcol_l = one, xcol_l1 = one, ycol_l = one, ycol_l1 = one;
    for (int i = 1; i <= m; ++i) {
      xcol_l = xcol_l.mul(xt.at(i, l));
      xcol_l1 = xcol_l1.mul(xt.at(i, l + 1));
      ycol_l = ycol_l.mul(yt.at(i, l));
      ycol_l1 = ycol_l1.mul(yt.at(i, l + 1));
    }
    emit("col product l", ycol_l, params.q.inv().mul(xcol_l1));
    emit("col product l+1", ycol_l1, params.q.mul(xcol_l));
    int ll = ((index % n) + n) % n;
    for (int c = 1; c <= n; ++c)
      if (c % n != ll && c % n != (ll + 1) % n)
        for (int i = 1; i <= m; ++i)
          emit("fixed col " + std::to_string(c) + " row " + std::to_string(i), x.at(i, c),
               y.at(i, c));
  }
  return report;
}

CheckReport toda_residual(const TableauContent& u, const TableauContent& t, const Scalar& q,
                          TodaKind kind, int index) {
  if (kind != TodaKind::TableauLo && kind != TodaKind::TableauHi)
    fail(Errc::InvalidArgument, "tableau overload handles TableauLo/TableauHi");
  const int m = u.rows(), n = u.n();
  const int l = index;
  if (l < 1 || l >= n) fail(Errc::InvalidArgument, "column index l outside 1..n-1");
  if (kind == TodaKind::TableauLo && l > m - 1)
    fail(Errc::InvalidArgument, "TableauLo needs l <= rows-1");
  if (kind == TodaKind::TableauHi && l < m)
    fail(Errc::InvalidArgument, "TableauHi needs l >= rows");
  const Scalar one = Scalar::one(u.algebra());
  CheckReport report;
  auto emit = [&](const std::string& name, const Scalar& lhs, const Scalar& rhs) {
    report.add(name, lhs == rhs, lhs.str(), rhs.str());
  };

  const int top = std::min(l, m);
  for (int i = 1; i <= top; ++i)
    emit("bilinear row " + std::to_string(i), t.entry(i, l).mul(t.entry(i, l + 1)),
         u.entry(i, l).mul(u.entry(i, l + 1)));
  for (int i = 1; i <= top - 1; ++i)
    emit("reciprocal row " + std::to_string(i),
         one.div(t.entry(i, l)).add(one.div(t.entry(i + 1, l + 1))),
         one.div(u.entry(i, l)).add(one.div(u.entry(i + 1, l + 1))));

  if (kind == TodaKind::TableauLo) {
    emit("fixed corner", t.entry(l + 1, l + 1), u.entry(l + 1, l + 1));
    emit("twisted reciprocal",
         one.div(t.entry(l, l)).add(q.div(t.entry(l + 1, l + 1).mul(t.entry(1, l + 1)))),
         one.div(u.entry(l, l)).add(q.div(u.entry(l + 1, l + 1).mul(u.entry(1, l + 1)))));
  } else {
    emit("twisted reciprocal", one.div(t.entry(m, l)).add(q.div(t.entry(1, l + 1))),
         one.div(u.entry(m, l)).add(q.div(u.entry(1, l + 1))));
  }

  const int top1 = std::min(l + 1, m);
  Scalar tl = one, tl1 = one, ul = one, ul1 = one;
  for (int i = 1; i <= top; ++i) {
    tl = tl.mul(t.entry(i, l));
    ul = ul.mul(u.entry(i, l));
  }
  for (int i = 1; i <= top1; ++i) {
    tl1 = tl1.mul(t.entry(i, l + 1));
    ul1 = ul1.mul(u.entry(i, l + 1));
  }
  emit("col product l", tl, q.inv().mul(ul1));
  emit("col product l+1", tl1, q.mul(ul));

  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= n; ++j)
      if (j != l && j != l + 1)
        emit("fixed (" + std::to_string(i) + "," + std::to_string(j) + ")", t.entry(i, j),
             u.entry(i, j));
  return report;
}

}  // namespace trsk
