#pragma once

/**
 * @file algebra.hpp
 * @brief The two evaluation semifields behind one contract.
 *
 * Every formula in this library is written once against ⊕/⊗/⊘ and runs in
 * two worlds:
 *
 *   | algebra  | ⊕   | ⊗ | ⊘ | one |
 *   | Rational | +   | × | ÷ |  1  |
 *   | MaxPlus  | max | + | − |  0  |
 *
 * Payloads are exact arbitrary-precision rationals (boost cpp_rational);
 * in MaxPlus the payload is the tropical exponent, i.e. the value of the
 * piecewise-linear function. There is no additive zero in either algebra
 * (no -inf in MaxPlus, and user-facing Rational values are positive);
 * "vanishing" results are signalled structurally by the callers that need
 * them, never by a sentinel value.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace trsk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Algebra { Rational, MaxPlus };

std::string to_string(Algebra a);

/// Error codes surfaced to the CLI as machine-readable strings.
enum class Errc {
  PositivityViolation,
  AlgebraMismatch,
  AlgebraUnsupported,
  DivisionByZero,
  LengthMismatch,
  BoundsError,
  CapExceeded,
  EmptyFamily,
  ZeroMinor,
  DecompositionObstruction,
  SpectralPole,
  GenericityFailure,
  NotInTauCell,
  ShapeMismatch,
  UnsupportedShape,
  InvalidArgument,
};

std::string to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(to_string(code) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

/**
 * Immutable semifield value. Structural equality on the canonical reduced
 * payload; two Scalars combine only if their algebra tags match.
 *
 * Rational values built through positive_rational() are strictly > 0.
 * Full-field rationals (signs, zero) are permitted via from_rational() for
 * the verification arithmetic in structured_matrices; they never arise from
 * the subtraction-free operations if the inputs are positive.
 */
class Scalar {
 public:
  Scalar() : alg_(Algebra::Rational), payload_(1) {}

  /// K_{>0} constructor; rejects num <= 0 or den <= 0.
  static Scalar positive_rational(const Int& num, const Int& den);
  /// Full-field rational (verification helpers only).
  static Scalar from_rational(const Rat& v) { return Scalar(Algebra::Rational, v); }
  /// Ultra-discrete value: the payload is the tropical exponent.
  static Scalar max_plus(const Rat& v) { return Scalar(Algebra::MaxPlus, v); }
  /// Multiplicative identity: 1 (Rational) or 0 (MaxPlus).
  static Scalar one(Algebra a) { return Scalar(a, a == Algebra::Rational ? Rat(1) : Rat(0)); }

  Algebra algebra() const { return alg_; }
  const Rat& payload() const { return payload_; }
  bool is_one() const { return *this == one(alg_); }
  bool is_positive() const { return alg_ == Algebra::MaxPlus || payload_ > 0; }

  Scalar add(const Scalar& o) const;  // ⊕
  Scalar mul(const Scalar& o) const;  // ⊗
  Scalar div(const Scalar& o) const;  // ⊘
  Scalar inv() const { return one(alg_).div(*this); }
  /// ⊗-power with integer exponent (negative allowed).
  Scalar pow(long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return a.add(b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return a.mul(b); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a.div(b); }

  bool operator==(const Scalar& o) const { return alg_ == o.alg_ && payload_ == o.payload_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order on payloads; algebra tags must match.
  std::strong_ordering compare(const Scalar& o) const;

  std::string str() const;

 private:
  Scalar(Algebra a, Rat v) : alg_(a), payload_(std::move(v)) {}
  void check_same(const Scalar& o) const;

  Algebra alg_;
  Rat payload_;
};

/// The semifield contract as first-class operations (one table per algebra).
struct AlgebraOps {
  Algebra algebra;
  Scalar one;
  std::function<Scalar(const Scalar&, const Scalar&)> add, mul, div;
  std::function<std::strong_ordering(const Scalar&, const Scalar&)> compare;
};

AlgebraOps ops_for(Algebra a);

/**
 * Min-plus value of a subtraction-free expression, derived from its
 * max-plus evaluator: m(f) = M(iota(f)^-1), i.e. evaluate at negated
 * inputs and negate the result. Inputs must be MaxPlus.
 */
Scalar min_plus_dual(std::span<const Scalar> inputs,
                     const std::function<Scalar(std::span<const Scalar>)>& evaluator);

}  // namespace trsk
