#include "qes/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace qes {

std::int64_t SampleSource::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("SampleSource::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational SampleSource::non_integer(int max_numerator, int max_denominator) {
  for (;;) {
    Rational r(uniform(-max_numerator, max_numerator), uniform(2, max_denominator));
    if (!r.is_integer()) return r;
  }
}

Rational SampleSource::any(int max_numerator, int max_denominator) {
  return {uniform(-max_numerator, max_numerator), uniform(1, max_denominator)};
}

}  // namespace qes
