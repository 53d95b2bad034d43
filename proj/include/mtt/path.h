#ifndef MTT_PATH_H
#define MTT_PATH_H

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtt/ring.h"

namespace mtt {

/// Deterministic probe-set parameters for sampled path equality.
struct SampleSpec {
  /// "MOORE" in ASCII.
  static constexpr std::uint64_t kDefaultSeed = 0x4D4F4F5245ULL;
  static constexpr std::size_t kDefaultCount = 64;

  std::uint64_t seed = kDefaultSeed;
  std::size_t count = kDefaultCount;
};

/// Seeded rationals in [0, bound]. The same (spec, bound) always yields the
/// same points.
std::vector<Nonneg> random_points(const Nonneg &bound, const SampleSpec &spec);

/// Raised by compose when the target of the first path is not the source of
/// the second.
class EndpointMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Moore path: a shape together with an evaluation function that is
/// constant from the shape onwards.
///
/// Evaluation always clamps its argument to min(j, shape), so any closure
/// yields a lawful path. The optional breakpoint list records parameters
/// where the path is known to switch pieces; it only feeds probe sets.
template <typename A>
class Path {
 public:
  using Eval = std::function<A(const Nonneg &)>;

  Path(Nonneg shape, Eval eval, std::vector<Nonneg> breakpoints = {})
      : shape_(std::move(shape)),
        eval_(std::make_shared<const Eval>(std::move(eval))),
        breakpoints_(std::move(breakpoints)) {}

  const Nonneg &shape() const { return shape_; }
  const std::vector<Nonneg> &breakpoints() const { return breakpoints_; }

  A at(const Nonneg &j) const { return (*eval_)(min(j, shape_)); }
  A source() const { return at(Nonneg(0)); }
  A target() const { return at(shape_); }

  /// Probe set: 0, the shape, known breakpoints and seeded random points.
  /// The endpoints first, then the breakpoints and seeded interior points
  /// in increasing order, without repeats.
  std::vector<Nonneg> probes(const SampleSpec &spec) const {
    if (shape_ == Nonneg(0)) return {Nonneg(0)};
    std::vector<Nonneg> inner(breakpoints_.begin(), breakpoints_.end());
    auto extra = random_points(shape_, spec);
    inner.insert(inner.end(), extra.begin(), extra.end());
    return endpoints_then(std::move(inner));
  }

  /// Probes of this path and of `other`, merged.
  std::vector<Nonneg> probes(const Path &other, const SampleSpec &spec) const {
    auto inner = probes(spec);
    auto more = other.probes(spec);
    inner.insert(inner.end(), more.begin(), more.end());
    return endpoints_then(std::move(inner));
  }

 private:
  std::vector<Nonneg> endpoints_then(std::vector<Nonneg> inner) const {
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    std::vector<Nonneg> out{Nonneg(0)};
    if (shape_ != Nonneg(0)) out.push_back(shape_);
    for (auto &k : inner)
      if (k != Nonneg(0) && k != shape_) out.push_back(std::move(k));
    return out;
  }

  Nonneg shape_;
  std::shared_ptr<const Eval> eval_;
  std::vector<Nonneg> breakpoints_;
};

/// The degenerate path at x: shape 0, constantly x.
template <typename A>
Path<A> idp(A x) {
  return Path<A>(Nonneg(0), [x = std::move(x)](const Nonneg &) { return x; });
}

/// Bounded abstraction: the path of shape j that evaluates phi at min(i, j).
template <typename A>
Path<A> babs(Nonneg j, std::function<A(const Nonneg &)> phi) {
  return Path<A>(j, [j, phi = std::move(phi)](const Nonneg &i) {
    return phi(min(i, j));
  });
}

namespace detail {
inline std::vector<Nonneg> shifted(const std::vector<Nonneg> &points,
                                   const Nonneg &by) {
  std::vector<Nonneg> out;
  out.reserve(points.size());
  for (const auto &p : points) out.push_back(p + by);
  return out;
}
}  // namespace detail

/// q after p. The caller guarantees target(p) = source(q); use the overload
/// taking an equality to have it checked.
template <typename A>
Path<A> compose_unchecked(const Path<A> &q, const Path<A> &p) {
  Nonneg sp = p.shape();
  std::vector<Nonneg> bps = p.breakpoints();
  bps.push_back(sp);
  auto tail = detail::shifted(q.breakpoints(), sp);
  bps.insert(bps.end(), tail.begin(), tail.end());
  return Path<A>(
      sp + q.shape(),
      [p, q, sp](const Nonneg &j) {
        if (leq(j, sp)) return p.at(j);
        return q.at(Nonneg(j.value() - sp.value()));
      },
      std::move(bps));
}

template <typename A, typename Eq>
Path<A> compose(const Path<A> &q, const Path<A> &p, Eq &&equal) {
  if (!equal(p.target(), q.source()))
    throw EndpointMismatch(
        "cannot compose paths: target of the first path is not the source "
        "of the second");
  return compose_unchecked(q, p);
}

template <std::equality_comparable A>
Path<A> compose(const Path<A> &q, const Path<A> &p) {
  return compose(q, p, std::equal_to<A>{});
}

/// The reversed path: same shape, evaluated at shape - i (truncated).
template <typename A>
Path<A> reverse(const Path<A> &p) {
  std::vector<Nonneg> bps;
  for (auto it = p.breakpoints().rbegin(); it != p.breakpoints().rend(); ++it)
    bps.push_back(truncated_sub(p.shape(), *it));
  Nonneg s = p.shape();
  return Path<A>(
      s, [p, s](const Nonneg &i) { return p.at(truncated_sub(s, i)); },
      std::move(bps));
}

/// Congruence: apply g pointwise along p.
template <typename A, typename G>
auto map(G g, const Path<A> &p) -> Path<std::invoke_result_t<G, const A &>> {
  using B = std::invoke_result_t<G, const A &>;
  return Path<B>(
      p.shape(), [p, g = std::move(g)](const Nonneg &i) { return g(p.at(i)); },
      p.breakpoints());
}

/// Path contraction: the initial segment of p up to parameter i.
template <typename A>
Path<A> upto(const Nonneg &i, const Path<A> &p) {
  Nonneg m = min(p.shape(), i);
  std::vector<Nonneg> bps;
  for (const auto &b : p.breakpoints())
    if (b < m) bps.push_back(b);
  return Path<A>(
      m, [p](const Nonneg &j) { return p.at(j); }, std::move(bps));
}

/// The final segment of q from parameter i: rev((shape q - i) |> rev q).
template <typename A>
Path<A> from(const Nonneg &i, const Path<A> &q) {
  return reverse(upto(truncated_sub(q.shape(), i), reverse(q)));
}

/// Outcome of a path comparison. `witness` is the first probe point where
/// the paths disagree, absent when they agree or when only shapes differ.
struct PathEqResult {
  bool equal = true;
  bool shapes_differ = false;
  std::optional<Nonneg> witness;

  explicit operator bool() const { return equal; }
};

/// Sampled extensional comparison: shapes exactly, values at the union of
/// both probe sets. Sound for refutation only.
template <typename A, typename Eq>
PathEqResult path_eq(const Path<A> &p, const Path<A> &q,
                     const SampleSpec &spec, Eq &&equal) {
  PathEqResult result;
  if (p.shape() != q.shape()) {
    result.equal = false;
    result.shapes_differ = true;
    return result;
  }
  for (const auto &i : p.probes(q, spec)) {
    if (!equal(p.at(i), q.at(i))) {
      result.equal = false;
      result.witness = i;
      return result;
    }
  }
  return result;
}

template <std::equality_comparable A>
PathEqResult path_eq(const Path<A> &p, const Path<A> &q,
                     const SampleSpec &spec = {}) {
  return path_eq(p, q, spec, std::equal_to<A>{});
}

}  // namespace mtt

#endif  // MTT_PATH_H
