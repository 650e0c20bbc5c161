#include "trsk/algebra.hpp"

#include <vector>

namespace trsk {

std::string to_string(Algebra a) {
  return a == Algebra::Rational ? "rational" : "maxplus";
}

std::string to_string(Errc c) {
  switch (c) {
    case Errc::PositivityViolation: return "PositivityViolation";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::AlgebraUnsupported: return "AlgebraUnsupported";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BoundsError: return "BoundsError";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::ZeroMinor: return "ZeroMinor";
    case Errc::DecompositionObstruction: return "DecompositionObstruction";
    case Errc::SpectralPole: return "SpectralPole";
    case Errc::GenericityFailure: return "GenericityFailure";
    case Errc::NotInTauCell: return "NotInTauCell";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

Scalar Scalar::positive_rational(const Int& num, const Int& den) {
  if (num <= 0 || den <= 0)
    fail(Errc::PositivityViolation,
         "positive rational requires num > 0 and den > 0, got " + num.str() + "/" + den.str());
  return Scalar(Algebra::Rational, Rat(num, den));
}

void Scalar::check_same(const Scalar& o) const {
  if (alg_ != o.alg_)
    fail(Errc::AlgebraMismatch, "cannot combine " + to_string(alg_) + " with " + to_string(o.alg_));
}

Scalar Scalar::add(const Scalar& o) const {
  check_same(o);
  if (alg_ == Algebra::Rational) return Scalar(alg_, payload_ + o.payload_);
  return Scalar(alg_, payload_ >= o.payload_ ? payload_ : o.payload_);
}

Scalar Scalar::mul(const Scalar& o) const {
  check_same(o);
  if (alg_ == Algebra::Rational) return Scalar(alg_, payload_ * o.payload_);
  return Scalar(alg_, payload_ + o.payload_);
}

Scalar Scalar::div(const Scalar& o) const {
  check_same(o);
  if (alg_ == Algebra::Rational) {
    if (o.payload_ == 0) fail(Errc::DivisionByZero, "rational division by zero");
    return Scalar(alg_, payload_ / o.payload_);
  }
  return Scalar(alg_, payload_ - o.payload_);
}

Scalar Scalar::pow(long e) const {
  Scalar acc = one(alg_);
  Scalar base = e >= 0 ? *this : inv();
  for (long k = e >= 0 ? e : -e; k > 0; --k) acc = acc.mul(base);
  return acc;
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
  check_same(o);
  if (payload_ < o.payload_) return std::strong_ordering::less;
  if (payload_ > o.payload_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  Int num = numerator(payload_), den = denominator(payload_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

AlgebraOps ops_for(Algebra a) {
  AlgebraOps ops;
  ops.algebra = a;
  ops.one = Scalar::one(a);
  ops.add = [](const Scalar& x, const Scalar& y) { return x.add(y); };
  ops.mul = [](const Scalar& x, const Scalar& y) { return x.mul(y); };
  ops.div = [](const Scalar& x, const Scalar& y) { return x.div(y); };
  ops.compare = [](const Scalar& x, const Scalar& y) { return x.compare(y); };
  return ops;
}

Scalar min_plus_dual(std::span<const Scalar> inputs,
                     const std::function<Scalar(std::span<const Scalar>)>& evaluator) {
  std::vector<Scalar> negated;
  negated.reserve(inputs.size());
  for (const Scalar& s : inputs) {
    if (s.algebra() != Algebra::MaxPlus)
      fail(Errc::AlgebraMismatch, "min_plus_dual expects MaxPlus inputs");
    negated.push_back(s.inv());
  }
  return evaluator(negated).inv();
}

}  // namespace trsk
