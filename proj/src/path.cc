#include "mtt/path.h"

#include <random>

namespace mtt {

std::vector<Nonneg> random_points(const Nonneg &bound, const SampleSpec &spec) {
  std::vector<Nonneg> out;
  out.reserve(spec.count);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t k = 0; k < spec.count; ++k) {
    long den = static_cast<long>(rng() % 97) + 1;
    long num = static_cast<long>(rng() % static_cast<unsigned long>(den + 1));
    out.emplace_back(bound.value() * Rational(num, den));
  }
  return out;
}

}  // namespace mtt
