#ifndef MTT_GEN_H
#define MTT_GEN_H

#include <cstdint>
#include <random>

#include "mtt/piecewise.h"
#include "mtt/ring.h"

namespace mtt {

/// Seeded generator of scalars and piecewise paths drawn from one ring
/// instance. Integer instances only produce integers; the trivial instance
/// only produces 0 and therefore only shape-0 paths.
class Gen {
 public:
  explicit Gen(std::uint64_t seed, RingInstance ring = RingInstance())
      : rng_(seed), ring_(ring) {}

  const RingInstance &ring() const { return ring_; }

  std::uint64_t next() { return rng_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (rng_() & 1U) != 0; }

  Rational scalar();
  Nonneg nonneg();
  /// Strictly positive when the ring allows it, 0 in the trivial ring.
  Nonneg positive();
  /// Nonneg in [0, 1].
  Nonneg unit_interval();

  Polynomial polynomial(const Rational &constant_term, int max_degree = 2);
  /// A random path starting at `source` with up to `max_pieces` pieces.
  PiecewisePath path_from(const Rational &source, int max_pieces = 3);
  PiecewisePath path(int max_pieces = 3) { return path_from(scalar(), max_pieces); }

 private:
  std::mt19937_64 rng_;
  RingInstance ring_;
};

}  // namespace mtt

#endif  // MTT_GEN_H
