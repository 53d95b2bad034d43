#ifndef MTT_FUNEXT_H
#define MTT_FUNEXT_H

#include <functional>

#include "mtt/path.h"
#include "mtt/value.h"

namespace mtt {

/// A family of paths e x : f x ~ g x indexed by the domain.
struct PointwiseHomotopy {
  SemType domain;
  std::function<ValuePath(const Value &)> e;

  ValuePath operator()(const Value &x) const { return e(x); }
};

/// (λf. f x)' p
ValuePath happly(const ValuePath &p, const Value &x);

/// ⟨i ≤ 1⟩ λx. e x (i·⌞e x⌟). Always shape 1.
ValuePath funext(const PointwiseHomotopy &e);

/// u = (1 - j) + j·s and v = (1 - j)·s + j for j in [0, 1].
struct Interpolants {
  Nonneg u, v;
};
Interpolants interpolants(const Nonneg &j, const Nonneg &s);

/// ε e = ⟨j ≤ 1⟩ λx. ⟨i ≤ u⟩ e x (i·v), a path from happly(funext e) to e.
Path<PointwiseHomotopy> epsilon(const PointwiseHomotopy &e);

/// η p = ⟨j ≤ 1⟩ ⟨i ≤ (1 - j)·⌞p⌟ + j⟩ p (i·(1 - j + j·⌞p⌟)), a path from p
/// to funext(happly p).
Path<ValuePath> eta(const ValuePath &p);

// Value-level forms used by the evaluator; they block on neutral paths.

/// The value of a path at factor·shape.
Value path_at_scaled(const Value &path, const Nonneg &factor);
Value happly_value(const Value &path, const Value &x);
/// funext of a function returning path values.
Value funext_value(const Value &e);

}  // namespace mtt

#endif  // MTT_FUNEXT_H
