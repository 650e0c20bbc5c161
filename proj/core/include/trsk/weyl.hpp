#pragma once

/**
 * @file weyl.hpp
 * @brief Birational affine Weyl group actions r_k, s_l, omega, pi on
 *        transport matrices with period multipliers (p,q), the induced
 *        column action on tableaux, and the spectral / discrete-Toda
 *        verification instruments.
 */

#include "trsk/insertion.hpp"
#include "trsk/matrix.hpp"

#include <string>
#include <vector>

namespace trsk {

struct WeylParams {
  Scalar p, q;
  static WeylParams ones(Algebra a) { return {Scalar::one(a), Scalar::one(a)}; }
};

/**
 * Accessor for x^i_j with i,j in Z under the periodicity
 * x^{i+m}_j = q^{-1} x^i_j and x^i_{j+n} = p^{-1} x^i_j; normalizes into
 * the base block and applies the accumulated multiplier.
 */
class ExtendedIndexer {
 public:
  ExtendedIndexer(const Matrix& x, const WeylParams& params) : x_(x), params_(params) {}
  Scalar at(long i, long j) const;

 private:
  const Matrix& x_;
  WeylParams params_;
};

struct WeylGenerator {
  enum class Kind { R, S, Omega, Pi };
  Kind kind = Kind::Omega;
  int index = 0;  // reduced mod m (R) or mod n (S); unused for rotations

  static WeylGenerator r(int k) { return {Kind::R, k}; }
  static WeylGenerator s(int l) { return {Kind::S, l}; }
  static WeylGenerator omega() { return {Kind::Omega, 0}; }
  static WeylGenerator pi() { return {Kind::Pi, 0}; }
};

using WeylWord = std::vector<WeylGenerator>;

/// Parse a comma-separated generator word: "r1,s0,w,p" (w = omega, p = pi).
WeylWord parse_weyl_word(const std::string& text);

/// Two-row path sum P^i_j = sum_k x^{i+1}_{j+1..j+k} ⊗ x^i_{j+k..j+n}.
Scalar P_poly(const Matrix& x, const WeylParams& params, long i, long j);
/// Two-column path sum Q^i_j = sum_k x^{i+1..i+k}_{j+1} ⊗ x^{i+k..i+m}_j.
Scalar Q_poly(const Matrix& x, const WeylParams& params, long i, long j);

/// One generator applied to the base block; untouched rows/columns are
/// preserved exactly.
Matrix apply_generator(const WeylGenerator& g, const Matrix& x, const WeylParams& params);

/// Left-to-right composition: the first listed generator acts first.
Matrix apply_word(const WeylWord& word, const Matrix& x, const WeylParams& params);

/// g_0 = Q^0_l / (q^{-1} x^1_{l+1}...x^m_{l+1} - x^1_l...x^m_l); Rational
/// only, GenericityFailure on a vanishing denominator.
Scalar g0_from_matrix(const Matrix& x, const WeylParams& params, int l);

/// The same quantity from the u-variables of the tableau (dual route).
Scalar g0_from_tableau(const TableauContent& u, const Scalar& q, int l);

/// The chain g_0..g_m of the G-conjugation recurrence (g_m = q^{-1} g_0).
std::vector<Scalar> g_chain(const Matrix& x, const WeylParams& params, int l);

/**
 * Column action on the tableau: s_l(u^i_l) = u^i_{l+1} ⊗ A^i_l ⊘ A^{i-1}_l,
 * s_l(u^i_{l+1}) = u^i_l ⊗ A^{i-1}_l ⊘ A^i_l, other entries fixed.
 * Subtraction-free; generic over both algebras.
 */
TableauContent s_on_tableau(int l, const TableauContent& u, const Scalar& q);

/// The A^i_l auxiliary sums (exposed for tests).
Scalar tableau_A(const TableauContent& u, const Scalar& q, int i, int l);

struct CheckItem {
  std::string relation;
  bool pass = false;
  std::string lhs, rhs;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const CheckItem& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string relation, bool pass, std::string lhs = "", std::string rhs = "");
};

/// H(X;z) = H(x^m;z) H(x^{m-1};pz) ... H(x^1;p^{m-1}z).
Matrix spectral_H(const Matrix& x, const WeylParams& params, const Scalar& z);

/// Entrywise H(r_k(X);z) == H(X;z) at each sampled z.
CheckReport spectral_check_r_invariance(const Matrix& x, const WeylParams& params, int k,
                                        std::span<const Scalar> z_samples);

/// H(s_l(X);z) == G_l(q^{-1}g_0;(-1)^n z)^{-1} H(X;z) G_l(g_0;(-1)^n z),
/// plus the g-chain recurrence replay.
CheckReport spectral_check_s_conjugation(const Matrix& x, const WeylParams& params, int l,
                                         std::span<const Scalar> z_samples);

enum class TodaKind { RowAction, ColumnAction, TableauLo, TableauHi };

/// Discrete-Toda residuals for y = r_k(x) (RowAction) or y = s_l(x)
/// (ColumnAction): bilinear, reciprocal-sum and product-covariant
/// relations, one report item each.
CheckReport toda_residual(const Matrix& x, const Matrix& y, const WeylParams& params,
                          TodaKind kind, int index);

/// Residuals for t = s_l(u) on tableaux; kind selects the l <= m-1
/// (TableauLo) or l >= m (TableauHi) system.
CheckReport toda_residual(const TableauContent& u, const TableauContent& t, const Scalar& q,
                          TodaKind kind, int index);

}  // namespace trsk
