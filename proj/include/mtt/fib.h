#ifndef MTT_FIB_H
#define MTT_FIB_H

#include <functional>
#include <string>

#include "mtt/path.h"
#include "mtt/value.h"

namespace mtt {

using Transport = std::function<Value(const ValuePath &, const Value &)>;

/// A family of semantic types over a context together with its transport
/// along context paths. Transport along a degenerate path is expected to be
/// the identity; the law suite checks it for every former.
///
/// Context points are values. A comprehension Γ.A has points (x, a).
struct Fibration {
  Family fam;
  Transport transp;
  /// Label used in stuck transports.
  std::string name = "A";
};

Fibration reindex(const Fibration &a, Fn gamma);

/// The path (x, a) ~ (y, transp p a) in Γ.A over p.
ValuePath lift(const Fibration &a, const ValuePath &p, const Value &x);

/// For a path p : (x, a) ~ (y, b) in Γ.A, the path transp(fst' p, a) ~ b in
/// the fiber over y.
ValuePath snd_path(const Fibration &a, const ValuePath &p);

Fibration const_fib(SemType ty);
/// Σ and Π over Γ of a family B over Γ.A.
Fibration sigma_fib(Fibration a, Fibration b);
Fibration pi_fib(Fibration a, Fibration b);
Fibration sum_fib(Fibration a, Fibration b);
/// W-types: labels from A, branching from B over Γ.A.
Fibration w_fib(Fibration a, Fibration b);
/// The path family over Γ.A.A: the fiber at ((x, a1), a2) is a1 ~ a2.
Fibration id_fib(Fibration a);

/// (((x, a), a), idp a) as a point of Γ.A.A.Id.
Value refl(const Value &x, const Value &a);

/// J for a family B over Γ.A.A.Id with base case beta(x, a).
Value j_elim(const Fibration &b, const Fn2 &beta, const Value &x,
             const Value &a1, const Value &a2, const ValuePath &p);

/// The contraction path from refl(x, a1) to (((x, a1), a2), p) along which
/// j_elim transports.
ValuePath j_path(const Value &x, const Value &a1, const Value &a2,
                 const ValuePath &p);

/// Transport in an arbitrary family of semantic types, by case analysis on
/// the type former at the source of the path.
Fibration type_fibration(Family fam, std::string name = "A");

}  // namespace mtt

#endif  // MTT_FIB_H
