#pragma once

/**
 * @file insertion.hpp
 * @brief Row insertion in both worlds: the bumping recurrence on content
 *        vectors, iterated to the word -> tableau map, plus the minor-ratio
 *        route as an independent second computation.
 */

#include "trsk/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trsk {

/// Content of a weakly increasing word: entry j is the multiplicity of
/// letter j (or its tropical stand-in).
using RowVector = std::vector<Scalar>;

/// Letters in 1..n.
using Word = std::vector<int>;

struct InsertionResult {
  RowVector y;  // new row content
  RowVector b;  // bumped word content, b_1 = algebra one
};

/**
 * One row-insertion step on content vectors:
 *   eta_1 = xi_1 ⊗ a_1,  eta_j = (eta_{j-1} ⊕ xi_j) ⊗ a_j,
 *   y_j = eta_j ⊘ eta_{j-1},  b_1 = one,  b_j = a_j ⊗ x_j ⊘ y_j,
 * with xi the ⊗-prefix products of x. Same length and algebra required.
 */
InsertionResult row_insert(const RowVector& x, const RowVector& a);

/// The eta prefix values themselves (handy for tests and reports).
std::vector<Scalar> insertion_eta(const RowVector& x, const RowVector& a);

/**
 * Literal Schensted bumping on letters: insert the weakly increasing word v
 * into the weakly increasing row, returning (new row, bumped word). Used as
 * an independent oracle for the content arithmetic.
 */
std::pair<Word, Word> classical_bump_oracle(const Word& row, const Word& v);

/**
 * Tableau content table u^i_j (1 <= i <= min(m,n), i <= j <= n), stored as
 * full length-n rows with leading algebra-ones.
 */
class TableauContent {
 public:
  TableauContent(Algebra alg, int n) : alg_(alg), n_(n) {}

  Algebra algebra() const { return alg_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(rows_.size()); }

  /// Appends row i = rows()+1; entries before column i must be one.
  void push_row(RowVector row);

  const Scalar& entry(int i, int j) const;
  Scalar& entry(int i, int j);
  const RowVector& row(int i) const { return rows_.at(i - 1); }

  /// lambda_i = ⊗-product of row i; weakly ⊗-decreasing for valid content.
  std::vector<Scalar> shape() const;

  /// Full m x n matrix view (leading cells hold the algebra one).
  Matrix to_matrix() const;

  bool operator==(const TableauContent& o) const {
    return alg_ == o.alg_ && n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const TableauContent& o) const { return !(*this == o); }

 private:
  Algebra alg_;
  int n_;
  std::vector<RowVector> rows_;
};

/**
 * Combinatorial validity of MaxPlus integer content: nonnegative entries,
 * column-strictness of the partial sums, weakly decreasing shape.
 */
bool is_column_strict(const TableauContent& u);

enum class RowOrder { TopDown, BottomUp };

/**
 * Iterated row insertion of the rows of X (TopDown: rows 1..m in order;
 * BottomUp: rows m..1). Output has min(m,n) rows.
 */
TableauContent insert_word(const Matrix& x, RowOrder order);

/// Same map computed from the Insertion minor table by Laplacian ratios.
TableauContent tableau_via_minors(const Matrix& x);

/**
 * MaxPlus multiplicity matrix of a word: one row per block. Blocks default
 * to maximal weakly increasing runs; explicit block lengths override.
 */
Matrix word_to_matrix(const Word& w, int n,
                      const std::optional<std::vector<int>>& blocks = std::nullopt);

/// Parse a word from a digit string like "2234134411224" (letters 1..9).
Word parse_word(const std::string& digits);

}  // namespace trsk
