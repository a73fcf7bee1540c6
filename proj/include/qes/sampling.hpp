#pragma once

#include <cstdint>
#include <random>

#include "qes/rational.hpp"

namespace qes {

/// Deterministic source of small random rationals.
///
/// Bounded draws are done by rejection on the raw 64-bit engine output so
/// the sequence is identical across standard libraries.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Non-integer rational p/q with |p| ≤ max_numerator and 2 ≤ q ≤ max_denominator.
  /// Non-integers keep clear of every pole of the form s = −n or α = −n.
  Rational non_integer(int max_numerator = 30, int max_denominator = 9);

  /// Arbitrary rational p/q, 1 ≤ q ≤ max_denominator.
  Rational any(int max_numerator = 30, int max_denominator = 9);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qes
