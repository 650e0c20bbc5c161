#pragma once

/**
 * @file lattice_paths.hpp
 * @brief Monotone lattice paths, nonintersecting families, and the special
 *        minor tables built from them.
 *
 * Two evaluators with one contract: a brute-force enumerator (the
 * Gessel-Viennot oracle every higher module is tested against) and a
 * column-run sweep DP over strictly increasing crossing tuples. Grid rows
 * are numbered 1..m top-to-bottom, exactly as in the source diagrams; all
 * endpoint conventions are centralized in Orientation.
 */

#include "trsk/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace trsk {

struct GridPoint {
  int row = 1;  // 1..m, top to bottom
  int col = 1;  // 1..n, left to right
  bool operator==(const GridPoint&) const = default;
};

/// Vertex list of a monotone shortest path; consecutive points differ by
/// one unit step toward the endpoint.
using LatticePath = std::vector<GridPoint>;
using PathTuple = std::vector<LatticePath>;

/// Brute-force cap: max Δrow+Δcol for a single enumerated path.
/// TRSK_ENUM_CAP overrides the default of 14.
int enumeration_cap();

/**
 * All monotone shortest paths from start to end inside an m x n grid.
 * Row steps move one unit toward end.row, column steps toward end.col;
 * unreachable endpoints yield an empty list. Throws CapExceeded past the
 * enumeration cap.
 */
std::vector<LatticePath> enumerate_paths(GridPoint start, GridPoint end, int m, int n);

/// ⊗-product of the entries of X on the vertices of gamma.
Scalar path_weight(const Matrix& x, const LatticePath& gamma);

/**
 * Every pairwise vertex-disjoint tuple (gamma_1, ..., gamma_r) with
 * gamma_k : starts[k] -> ends[k]. Exhaustive; possibly empty.
 */
std::vector<PathTuple> nonintersecting_tuples(const std::vector<GridPoint>& starts,
                                              const std::vector<GridPoint>& ends, int m, int n);

/**
 * ⊕-sum over all nonintersecting tuples of the ⊗-product of path weights
 * (Rational: sum of products; MaxPlus: max of sums). nullopt signals the
 * empty family — "the minor vanishes" — since neither algebra carries an
 * additive zero.
 */
std::optional<Scalar> lgv_minor(const Matrix& x, const std::vector<GridPoint>& starts,
                                const std::vector<GridPoint>& ends);

/**
 * Endpoint families for the three special minor tables.
 *
 *   Insertion: gamma_k : (1,k) -> (m, j-i+k)          (word -> tableau)
 *   Iota:      gamma_k : (m-i+k,1) -> (1, n-j+k)      (involution / inverse)
 *   Schutz:    gamma_k : (1,n-i+k) -> (min{m,n-j+k}, n-j+k), staying in the
 *              staircase a <= b of a tableau content table.
 */
enum class Orientation { Insertion, Iota, Schutz };

/// Table of special minors tau^i_j / sigma^i_j indexed by right-bottom
/// corner; indices 0 read as the algebra one.
class MinorTable {
 public:
  MinorTable(Algebra alg, int m, int n) : alg_(alg), m_(m), n_(n) {}

  Algebra algebra() const { return alg_; }
  int m() const { return m_; }
  int n() const { return n_; }

  bool defined(int i, int j) const { return entries_.count({i, j}) != 0; }
  void set(int i, int j, Scalar v) { entries_.insert_or_assign({i, j}, std::move(v)); }

  /// Entry lookup; i == 0 or j == 0 returns the algebra one.
  Scalar at(int i, int j) const;

  /// Laplacian ratio t(i,j) t(i-1,j-1) / (t(i-1,j) t(i,j-1)).
  Scalar ratio(int i, int j) const;

 private:
  Algebra alg_;
  int m_, n_;
  std::map<std::pair<int, int>, Scalar> entries_;
};

/**
 * Full special-minor table for the orientation, computed by the sweep DP.
 * Insertion: entries (i,j) for 1 <= i <= min(m,n), i <= j <= n.
 * Iota: all (i,j) in the m x n rectangle.
 * Schutz: entries (i,j) for 1 <= i <= m, i <= j <= n on a tableau content
 * matrix (cells below the staircase are never read).
 * Throws EmptyFamily if some required entry has no nonintersecting family.
 */
MinorTable rect_minor_table(const Matrix& x, Orientation orientation);

/**
 * Entry (i,j) of E(x^1)...E(x^m) as a weighted path sum in the slanted-edge
 * diagram: vertical edges carry x^a_b, slanted edges carry one. nullopt for
 * the structurally vanishing entries (j < i or j > i+m).
 */
std::optional<Scalar> e_diagram_entry(const std::vector<std::vector<Scalar>>& xs, int i, int j);

namespace detail {

/// One path of a vertex-disjoint family, listed left-to-right in the
/// noncrossing order. Paths move down/right; a path is active on rows
/// srow..erow, entering at scol and terminating at (erow, ecol).
struct PathSpec {
  int srow, scol, erow, ecol;
};

/**
 * ⊕-sum over all vertex-disjoint down-right families matching the specs,
 * of the ⊗-product of vertex weights. weight(a,b) is consulted only on
 * in_region cells; rows run 1..m_rows. nullopt if no family exists.
 */
std::optional<Scalar> disjoint_path_sum(
    Algebra alg, int m_rows, const std::function<Scalar(int, int)>& weight,
    const std::function<bool(int, int)>& in_region, const std::vector<PathSpec>& paths);

}  // namespace detail

}  // namespace trsk
