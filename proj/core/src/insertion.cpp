#include "trsk/insertion.hpp"

#include "trsk/lattice_paths.hpp"

#include <algorithm>

namespace trsk {

namespace {

void check_pair(const RowVector& x, const RowVector& a) {
  if (x.empty() || x.size() != a.size())
    fail(Errc::LengthMismatch, "row_insert needs two nonempty vectors of equal length");
  for (size_t j = 0; j < x.size(); ++j)
    if (x[j].algebra() != x[0].algebra() || a[j].algebra() != x[0].algebra())
      fail(Errc::AlgebraMismatch, "row_insert entries must share one algebra");
}

// The recurrence restricted to indices level..n; x, a and the outputs are
// full vectors whose entries before `level` are the algebra one.
InsertionResult row_insert_at(int level, const RowVector& x, const RowVector& a) {
  const int n = static_cast<int>(x.size());
  const Algebra alg = x[0].algebra();
  const Scalar one = Scalar::one(alg);
  InsertionResult r{RowVector(n, one), RowVector(n, one)};

  Scalar xi = x[level - 1];
  Scalar eta = xi.mul(a[level - 1]);
  r.y[level - 1] = eta;
  Scalar eta_prev = eta;
  for (int j = level + 1; j <= n; ++j) {
    xi = xi.mul(x[j - 1]);
    eta = eta_prev.add(xi).mul(a[j - 1]);
    r.y[j - 1] = eta.div(eta_prev);
    r.b[j - 1] = a[j - 1].mul(x[j - 1]).div(r.y[j - 1]);
    eta_prev = eta;
  }
  return r;
}

}  // namespace

InsertionResult row_insert(const RowVector& x, const RowVector& a) {
  check_pair(x, a);
  return row_insert_at(1, x, a);
}

std::vector<Scalar> insertion_eta(const RowVector& x, const RowVector& a) {
  check_pair(x, a);
  std::vector<Scalar> etas;
  Scalar xi = x[0];
  Scalar eta = xi.mul(a[0]);
  etas.push_back(eta);
  for (size_t j = 1; j < x.size(); ++j) {
    xi = xi.mul(x[j]);
    eta = eta.add(xi).mul(a[j]);
    etas.push_back(eta);
  }
  return etas;
}

std::pair<Word, Word> classical_bump_oracle(const Word& row, const Word& v) {
  if (!std::is_sorted(row.begin(), row.end()) || !std::is_sorted(v.begin(), v.end()))
    fail(Errc::InvalidArgument, "bumping expects weakly increasing words");
  Word cur = row, bumped;
  for (int letter : v) {
    auto it = std::upper_bound(cur.begin(), cur.end(), letter);
    if (it == cur.end()) {
      cur.push_back(letter);
    } else {
      bumped.push_back(*it);
      *it = letter;
    }
  }
  return {cur, bumped};
}

void TableauContent::push_row(RowVector row) {
  if (static_cast<int>(row.size()) != n_) fail(Errc::LengthMismatch, "tableau row length mismatch");
  const int i = rows() + 1;
  for (int j = 1; j < i && j <= n_; ++j)
    if (!(row[j - 1] == Scalar::one(alg_)))
      fail(Errc::InvalidArgument, "tableau row " + std::to_string(i) +
                                      " must lead with algebra ones before column " +
                                      std::to_string(i));
  rows_.push_back(std::move(row));
}

const Scalar& TableauContent::entry(int i, int j) const {
  if (i < 1 || i > rows() || j < 1 || j > n_) fail(Errc::BoundsError, "tableau entry out of range");
  return rows_[i - 1][j - 1];
}

Scalar& TableauContent::entry(int i, int j) {
  if (i < 1 || i > rows() || j < 1 || j > n_) fail(Errc::BoundsError, "tableau entry out of range");
  return rows_[i - 1][j - 1];
}

std::vector<Scalar> TableauContent::shape() const {
  std::vector<Scalar> lambda;
  for (const RowVector& r : rows_) {
    Scalar prod = r[0];
    for (size_t j = 1; j < r.size(); ++j) prod = prod.mul(r[j]);
    lambda.push_back(prod);
  }
  return lambda;
}

Matrix TableauContent::to_matrix() const {
  Matrix m(alg_, rows(), n_);
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= n_; ++j) m.at(i, j) = rows_[i - 1][j - 1];
  return m;
}

bool is_column_strict(const TableauContent& u) {
  if (u.algebra() != Algebra::MaxPlus) fail(Errc::AlgebraUnsupported, "validator is combinatorial");
  const Rat zero = 0;
  for (int i = 1; i <= u.rows(); ++i)
    for (int j = i; j <= u.n(); ++j) {
      const Rat& v = u.entry(i, j).payload();
      if (v < zero || denominator(v) != 1) return false;
    }
  // Column strictness: sum_{k<=j} u^{i+1}_k <= sum_{k<=j-1} u^i_k.
  for (int i = 1; i < u.rows(); ++i) {
    Rat upper = 0, lower = 0;
    for (int j = 1; j <= u.n(); ++j) {
      lower += u.entry(i + 1, j).payload();
      if (j >= 2) upper += u.entry(i, j - 1).payload();
      if (lower > upper) return false;
    }
  }
  std::vector<Scalar> lambda = u.shape();
  for (size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i].payload() > lambda[i - 1].payload()) return false;
  return true;
}

TableauContent insert_word(const Matrix& x, RowOrder order) {
  const int m = x.rows(), n = x.cols();
  TableauContent t(x.algebra(), n);
  if (m == 0 || n == 0) return t;
  std::vector<RowVector> rows;
  for (int step = 0; step < m; ++step) {
    int i = order == RowOrder::TopDown ? step + 1 : m - step;
    RowVector carry = x.row(i);
    for (size_t level = 1; level <= rows.size(); ++level) {
      if (static_cast<int>(level) == n) {
        // Bottom cell of a full-height tableau absorbs the carry.
        rows[level - 1][n - 1] = rows[level - 1][n - 1].mul(carry[n - 1]);
        carry.clear();
        break;
      }
      InsertionResult r = row_insert_at(static_cast<int>(level), rows[level - 1], carry);
      rows[level - 1] = std::move(r.y);
      carry = std::move(r.b);
    }
    if (!carry.empty() && static_cast<int>(rows.size()) < n) rows.push_back(std::move(carry));
  }
  for (RowVector& r : rows) t.push_row(std::move(r));
  return t;
}

TableauContent tableau_via_minors(const Matrix& x) {
  const int m = x.rows(), n = x.cols();
  MinorTable tau = rect_minor_table(x, Orientation::Insertion);
  TableauContent t(x.algebra(), n);
  for (int i = 1; i <= std::min(m, n); ++i) {
    RowVector row(n, Scalar::one(x.algebra()));
    row[i - 1] = tau.at(i, i).div(tau.at(i - 1, i));
    for (int j = i + 1; j <= n; ++j) row[j - 1] = tau.ratio(i, j);
    t.push_row(std::move(row));
  }
  return t;
}

Matrix word_to_matrix(const Word& w, int n, const std::optional<std::vector<int>>& blocks) {
  for (int letter : w)
    if (letter < 1 || letter > n)
      fail(Errc::BoundsError, "letter " + std::to_string(letter) + " outside 1.." + std::to_string(n));

  std::vector<std::pair<size_t, size_t>> ranges;  // [begin, end)
  if (blocks) {
    size_t pos = 0;
    for (int len : *blocks) {
      if (len < 0 || pos + len > w.size()) fail(Errc::LengthMismatch, "block lengths do not fit the word");
      ranges.emplace_back(pos, pos + len);
      pos += len;
    }
    if (pos != w.size()) fail(Errc::LengthMismatch, "block lengths do not cover the word");
  } else {
    size_t begin = 0;
    for (size_t k = 1; k <= w.size(); ++k)
      if (k == w.size() || w[k] < w[k - 1]) {
        ranges.emplace_back(begin, k);
        begin = k;
      }
  }

  Matrix x(Algebra::MaxPlus, static_cast<int>(ranges.size()), n);
  for (size_t r = 0; r < ranges.size(); ++r) {
    std::vector<long> counts(n, 0);
    for (size_t k = ranges[r].first; k < ranges[r].second; ++k) ++counts[w[k] - 1];
    for (int j = 1; j <= n; ++j) x.at(static_cast<int>(r) + 1, j) = Scalar::max_plus(counts[j - 1]);
  }
  return x;
}

Word parse_word(const std::string& digits) {
  Word w;
  for (char c : digits) {
    if (c < '1' || c > '9') fail(Errc::InvalidArgument, "word digits must be 1..9");
    w.push_back(c - '0');
  }
  return w;
}

}  // namespace trsk
