#pragma once

/**
 * @file structured_matrices.hpp
 * @brief E/H bidiagonal-type matrices, truncations, exact minors, canonical
 *        triangular decompositions, and the spectral-parameter variants.
 *
 * Everything here lives in the Rational algebra: these matrices carry
 * structural zeros (and the verification arithmetic needs subtraction), so
 * full-field rationals are permitted in this module only. Outputs handed
 * back to the subtraction-free world are positive whenever the inputs are.
 */

#include "trsk/matrix.hpp"

#include <span>
#include <vector>

namespace trsk {

using SquareMatrix = Matrix;

/// Tables of factor vectors u^i = (u^i_i, ..., u^i_n), stored as full
/// length-n vectors with leading ones.
struct CanonicalFactors {
  std::vector<std::vector<Scalar>> vectors;
  int n() const { return vectors.empty() ? 0 : static_cast<int>(vectors[0].size()); }
  int m() const { return static_cast<int>(vectors.size()); }
};

/// E_k(x) = diag{x} + Lambda_{>=k}; entries below index k forced to one.
SquareMatrix build_E(std::span<const Scalar> x, int k = 1);

/// H_k(x) = (diag{1/x} - Lambda_{>=k})^{-1}: identity block above k, and
/// x_i...x_j at (i,j) for k <= i <= j.
SquareMatrix build_H(std::span<const Scalar> x, int k = 1);

/// E_1(v^1) E_2(v^2) ... E_m(v^m).
SquareMatrix assemble_E(const CanonicalFactors& f);

/// H_m(u^m) ... H_2(u^2) H_1(u^1).
SquareMatrix assemble_H(const CanonicalFactors& f);

/**
 * Exact minor determinant det M^{rows}_{cols} by fraction-free (Bareiss)
 * elimination; index lists strictly increasing, Rational algebra only
 * (tropical minors live in lattice_paths).
 */
Scalar minor_det(const SquareMatrix& m, std::span<const int> rows, std::span<const int> cols);

/// Q_{i,j}(M) = det M^{1..j-i+1}_{i..j}; Q with an empty index range is 1.
Scalar corner_minor_Q(const SquareMatrix& m, int i, int j);

/// tau^i_j(H) = det H^{1..i}_{j-i+1..j}; tau^0_j = 1.
Scalar corner_minor_tau(const SquareMatrix& h, int i, int j);

/**
 * Unique decomposition M = E_1(v^1)...E_m(v^m) of a banded upper
 * triangular matrix with v^i_i = Q_{i,i} and
 * v^i_j = Q_{i,j} Q_{i+1,j-1} / (Q_{i+1,j} Q_{i,j-1}).
 * Throws DecompositionObstruction naming (i,j) on a vanishing Q.
 */
CanonicalFactors decompose_triangular_E(const SquareMatrix& m, int band);

/**
 * Unique decomposition H = H_m(u^m)...H_1(u^1) with
 * u^i_i = tau^i_i/tau^{i-1}_i and
 * u^i_j = tau^i_j tau^{i-1}_{j-1} / (tau^{i-1}_j tau^i_{j-1}).
 */
CanonicalFactors decompose_triangular_H(const SquareMatrix& h, int band);

/// J_m M J_n: reverse rows and columns (any algebra; pure permutation).
Matrix conjugate_J(const Matrix& m);

/// Exact inverse via Gauss-Jordan; Rational algebra, small sizes.
SquareMatrix invert(const SquareMatrix& m);

/// E(x;z) = diag{x} + Lambda(z), with Lambda(z) adding z at (n,1).
SquareMatrix build_spectral_E(std::span<const Scalar> x, const Scalar& z);

/**
 * H(x;z) = (diag{1/x} - Lambda(z))^{-1} by its closed-form entries; throws
 * SpectralPole when 1 - x_1...x_n z vanishes. z = 0 reduces to build_H.
 */
SquareMatrix build_spectral_H(std::span<const Scalar> x, const Scalar& z);

/// G_0(u;z) = 1 + (1/u) E_{1,n} z^{-1};  G_l(u;z) = 1 + (1/u) E_{l+1,l}.
SquareMatrix build_G(int l, const Scalar& u, const Scalar& z, int n);

}  // namespace trsk
