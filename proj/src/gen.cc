#include "mtt/gen.h"

#include <vector>

namespace mtt {

long Gen::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational Gen::scalar() {
  switch (ring_.kind()) {
    case RingKind::trivial:
      return Rational(0);
    case RingKind::integers:
      return Rational(uniform(-12, 12));
    case RingKind::rationals:
      break;
  }
  return Rational(uniform(-24, 24), uniform(1, 12));
}

Nonneg Gen::nonneg() {
  switch (ring_.kind()) {
    case RingKind::trivial:
      return Nonneg(0);
    case RingKind::integers:
      return Nonneg(uniform(0, 8));
    case RingKind::rationals:
      break;
  }
  return Nonneg(uniform(0, 24), uniform(1, 12));
}

Nonneg Gen::positive() {
  switch (ring_.kind()) {
    case RingKind::trivial:
      return Nonneg(0);
    case RingKind::integers:
      return Nonneg(uniform(1, 6));
    case RingKind::rationals:
      break;
  }
  return Nonneg(uniform(1, 24), uniform(1, 12));
}

Nonneg Gen::unit_interval() {
  if (ring_.kind() == RingKind::trivial) return Nonneg(0);
  if (ring_.kind() == RingKind::integers) return Nonneg(uniform(0, 1));
  long den = uniform(1, 16);
  return Nonneg(uniform(0, den), den);
}

Polynomial Gen::polynomial(const Rational &constant_term, int max_degree) {
  std::vector<Rational> coeffs{constant_term};
  int degree = static_cast<int>(uniform(0, max_degree));
  for (int k = 1; k <= degree; ++k) coeffs.push_back(scalar());
  return Polynomial(std::move(coeffs));
}

PiecewisePath Gen::path_from(const Rational &source, int max_pieces) {
  int pieces = ring_.kind() == RingKind::trivial
                   ? 0
                   : static_cast<int>(uniform(0, max_pieces));
  if (pieces == 0) return PiecewisePath::constant(source);
  std::vector<Nonneg> bps;
  std::vector<Polynomial> polys;
  Rational value = source;
  Nonneg end(0);
  for (int k = 0; k < pieces; ++k) {
    Nonneg len = positive();
    Polynomial poly = polynomial(value);
    end = end + len;
    bps.push_back(end);
    value = poly(len.value());
    polys.push_back(std::move(poly));
  }
  return PiecewisePath(std::move(bps), std::move(polys));
}

}  // namespace mtt
