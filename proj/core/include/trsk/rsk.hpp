#pragma once

/**
 * @file rsk.hpp
 * @brief The fundamental path-matrix isomorphism, the iota involution, the
 *        RSK* correspondence with its four classical variants, and two
 *        independent inverses (minor ratios; Gauss decomposition).
 */

#include "trsk/insertion.hpp"
#include "trsk/lattice_paths.hpp"

#include <vector>

namespace trsk {

/// phi(X): entry (i,j) is the weighted sum over paths (i,1) -> (1,j).
using PathMatrix = Matrix;

struct TableauPair {
  TableauContent U;  // letters 1..n
  TableauContent V;  // letters 1..m
};

/// Triangular array mu^{(j)}_i = u^i_i ⊗ ... ⊗ u^i_j of partial row
/// products; levels()[j-1] holds mu^{(j)}.
struct GTPattern {
  std::vector<std::vector<Scalar>> levels;
};

struct GaussFactors {
  Matrix lower;  // m x m lower unitriangular
  Matrix diag;   // m x m diagonal, entries lambda_i
  Matrix upper;  // m x n upper unitriangular
};

/// Rational positive matrices only; phi is a bijection onto the tau-cell.
PathMatrix phi(const TransportMatrix& x);

/// x^i_j = tau^i_j tau^{i-1}_{j-1} / (tau^{i-1}_j tau^i_{j-1}); throws
/// NotInTauCell on a vanishing special minor.
TransportMatrix phi_inverse(const PathMatrix& phi_matrix);

/// The special minor tau^i_j(Phi) (largest square with right-bottom corner
/// (i,j)) for every cell, by exact determinants.
MinorTable path_matrix_tau(const PathMatrix& phi_matrix);

/**
 * The birational involution with phi(iota(X)) = J_m phi(X) J_n, computed by
 * the corner-path sigma ratios. Generic over both algebras.
 */
TransportMatrix iota(const TransportMatrix& x);

/**
 * RSK*: U from the rows of X read bottom-to-top, V from the columns read
 * right-to-left. m > n is handled by transposing and swapping the pair.
 */
TableauPair rsk_star(const TransportMatrix& x);

enum class RskVariant { PQ, PQt, PtQ, PtQt };

/// The four classical correspondences, as compositions of rsk_star with the
/// row flip J_m and evacuation.
TableauPair rsk_variants(const TransportMatrix& a, RskVariant variant);

/**
 * Inverse of rsk_star: rebuild y^i_j from the glued (U,V) ratio formulas,
 * then X = iota(Y). Works in both algebras; ShapeMismatch if the shapes of
 * U and V disagree.
 */
TransportMatrix inverse_rsk_star(const TableauContent& u, const TableauContent& v);

/**
 * The full m x n sigma table glued from U (upper part) and V (lower part):
 * sigma^i_j = prod_{a<=i, b<=n-j+i} u^a_b (i<=j), prod_{a<=j, b<=m-i+j} v^a_b
 * (i>=j).
 */
MinorTable sigma_from_pair(const TableauContent& u, const TableauContent& v);

GTPattern gt_pattern(const TableauContent& u);

/// Interlacing mu^{(j+1)}_i >= mu^{(j)}_i >= mu^{(j+1)}_{i+1}.
bool gt_interlaces(const GTPattern& p);

/**
 * Gauss decomposition Psi = Psi_- Psi_0 Psi_+ of the matrix determined by
 * the pair (U,V), via exact minors of H_U and H_V. Rational algebra;
 * lower * diag * upper equals J_m phi(X) J_n when (U,V) = rsk_star(X).
 */
GaussFactors gauss_decompose(const TableauContent& u, const TableauContent& v);

}  // namespace trsk
