#pragma once

/**
 * @file rng.hpp
 * @brief Seedable, platform-stable randomness for verification suites.
 *
 * mt19937_64 is fully specified by the standard; sampling uses rejection on
 * raw words (never std::uniform_int_distribution, whose output is
 * implementation-defined), so identical seeds give identical trials on
 * every platform.
 */

#include "trsk/matrix.hpp"

#include <cstdint>
#include <random>

namespace trsk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    if (hi < lo) fail(Errc::InvalidArgument, "empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t word;
    do {
      word = eng_();
    } while (word >= limit);
    return lo + static_cast<long>(word % span);
  }

  /// Strictly positive rational with numerator/denominator in [1, max_part].
  Scalar positive_rational(long max_part = 9) {
    return Scalar::positive_rational(uniform(1, max_part), uniform(1, max_part));
  }

  /// MaxPlus integer value in [lo, hi].
  Scalar max_plus(long lo = 0, long hi = 9) { return Scalar::max_plus(uniform(lo, hi)); }

  Matrix positive_matrix(int m, int n, long max_part = 9) {
    Matrix x(Algebra::Rational, m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) x.at(i, j) = positive_rational(max_part);
    return x;
  }

  Matrix max_plus_matrix(int m, int n, long lo = 0, long hi = 9) {
    Matrix x(Algebra::MaxPlus, m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) x.at(i, j) = max_plus(lo, hi);
    return x;
  }

  Matrix random_matrix(Algebra alg, int m, int n) {
    return alg == Algebra::Rational ? positive_matrix(m, n) : max_plus_matrix(m, n);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace trsk
