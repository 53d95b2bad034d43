#include "mtt/fib.h"

#include <utility>

namespace mtt {

namespace {

/// Transport blocked on a non-canonical element. Shape-0 paths are
/// degenerate, so the element passes through unchanged.
Value stuck(const std::string &name, const ValuePath &p, const Value &a) {
  if (p.shape() == Nonneg(0)) return a;
  return Value::neutral(Neutral{Neutral::Transport{a, p, name}});
}

Value fst_fst(const Value &v) { return fst(fst(v)); }

}  // namespace

Fibration reindex(const Fibration &a, Fn gamma) {
  return Fibration{
      [fam = a.fam, gamma](const Value &x) { return fam(gamma(x)); },
      [transp = a.transp, gamma](const ValuePath &p, const Value &v) {
        return transp(map(gamma, p), v);
      },
      a.name};
}

ValuePath lift(const Fibration &a, const ValuePath &p, const Value &x) {
  Transport transp = a.transp;
  return ValuePath(
      p.shape(),
      [p, x, transp](const Nonneg &i) {
        return Value::pair(p.at(i), transp(upto(i, p), x));
      },
      p.breakpoints());
}

ValuePath snd_path(const Fibration &a, const ValuePath &p) {
  ValuePath base = map(fst, p);
  Transport transp = a.transp;
  return ValuePath(
      p.shape(),
      [p, base, transp](const Nonneg &i) {
        return transp(from(i, base), snd(p.at(i)));
      },
      p.breakpoints());
}

Fibration const_fib(SemType ty) {
  return Fibration{[ty](const Value &) { return ty; },
                   [](const ValuePath &, const Value &v) { return v; },
                   "const"};
}

Fibration sigma_fib(Fibration a, Fibration b) {
  Family fam = [fa = a.fam, fb = b.fam](const Value &x) {
    return SemType::sigma(fa(x), [fb, x](const Value &v) {
      return fb(Value::pair(x, v));
    });
  };
  Transport transp = [a, b](const ValuePath &p, const Value &pair) {
    Value first = fst(pair);
    return Value::pair(a.transp(p, first), b.transp(lift(a, p, first), snd(pair)));
  };
  return Fibration{std::move(fam), std::move(transp), "Sigma"};
}

Fibration pi_fib(Fibration a, Fibration b) {
  Family fam = [fa = a.fam, fb = b.fam](const Value &x) {
    return SemType::pi(fa(x), [fb, x](const Value &v) {
      return fb(Value::pair(x, v));
    });
  };
  Transport transp = [a, b](const ValuePath &p, const Value &f) {
    ValuePath back = reverse(p);
    return Value::lambda([a, b, back, f](const Value &y) {
      Value x = a.transp(back, y);
      return b.transp(reverse(lift(a, back, y)), apply(f, x));
    });
  };
  return Fibration{std::move(fam), std::move(transp), "Pi"};
}

Fibration sum_fib(Fibration a, Fibration b) {
  Family fam = [fa = a.fam, fb = b.fam](const Value &x) {
    return SemType::sum(fa(x), fb(x));
  };
  Transport transp = [a, b](const ValuePath &p, const Value &s) {
    if (const auto *l = s.as<InlV>()) return Value::inl(a.transp(p, l->value));
    if (const auto *r = s.as<InrV>()) return Value::inr(b.transp(p, r->value));
    if (s.is_neutral()) return stuck("Sum", p, s);
    throw SemanticError("transport of a " + s.kind_name() + " in a sum");
  };
  return Fibration{std::move(fam), std::move(transp), "Sum"};
}

namespace {

Value w_transport(const Fibration &a, const Fibration &b, const ValuePath &p,
                  const Value &w) {
  const auto *node = w.as<SupV>();
  if (!node) {
    if (w.is_neutral()) return stuck("W", p, w);
    throw SemanticError("transport of a " + w.kind_name() + " in a W-type");
  }
  Value label = node->label;
  Fn children = node->children;
  ValuePath back = reverse(lift(a, p, label));
  return Value::sup(a.transp(p, label), [a, b, p, back, children](const Value &y) {
    return w_transport(a, b, p, children(b.transp(back, y)));
  });
}

}  // namespace

Fibration w_fib(Fibration a, Fibration b) {
  Family fam = [fa = a.fam, fb = b.fam](const Value &x) {
    return SemType::w(fa(x), [fb, x](const Value &v) {
      return fb(Value::pair(x, v));
    });
  };
  Transport transp = [a, b](const ValuePath &p, const Value &w) {
    return w_transport(a, b, p, w);
  };
  return Fibration{std::move(fam), std::move(transp), "W"};
}

Fibration id_fib(Fibration a) {
  Family fam = [fa = a.fam](const Value &pt) {
    return SemType::id(fa(fst_fst(pt)), snd(fst(pt)), snd(pt));
  };
  Transport transp = [a](const ValuePath &p, const Value &q) {
    if (q.is_neutral()) return stuck("Id", p, q);
    ValuePath base = map(fst_fst, p);
    ValuePath p1 = snd_path(a, map([](const Value &pt) { return fst(pt); }, p));
    ValuePath p2 = snd_path(a, map([](const Value &pt) {
                              return Value::pair(fst_fst(pt), snd(pt));
                            }, p));
    Transport ta = a.transp;
    ValuePath middle =
        map([ta, base](const Value &v) { return ta(base, v); }, as_path(q));
    return Value::path(
        compose_unchecked(p2, compose_unchecked(middle, reverse(p1))));
  };
  return Fibration{std::move(fam), std::move(transp), "Id"};
}

Value refl(const Value &x, const Value &a) {
  return Value::pair(Value::pair(Value::pair(x, a), a), Value::path(idp(a)));
}

ValuePath j_path(const Value &x, const Value &a1, const Value &,
                 const ValuePath &p) {
  return ValuePath(
      p.shape(),
      [x, a1, p](const Nonneg &i) {
        return Value::pair(Value::pair(Value::pair(x, a1), p.at(i)),
                           Value::path(upto(i, p)));
      },
      p.breakpoints());
}

Value j_elim(const Fibration &b, const Fn2 &beta, const Value &x,
             const Value &a1, const Value &a2, const ValuePath &p) {
  return b.transp(j_path(x, a1, a2, p), beta(x, a1));
}

namespace {

template <typename T>
const T &former(const SemType &ty, const char *what) {
  if (const auto *t = ty.as<T>()) return *t;
  throw SemanticError(std::string("type family leaves the ") + what +
                      " former along a path");
}

}  // namespace

Fibration type_fibration(Family fam, std::string name) {
  Transport transp = [fam, name](const ValuePath &p, const Value &a) -> Value {
    SemType src = fam(p.source());
    SemType tgt = fam(p.target());
    if (src.node().v.index() != tgt.node().v.index())
      throw SemanticError("type family changes from " + src.kind_name() +
                          " to " + tgt.kind_name() + " along a path");
    if (src.as<BoolT>() || src.as<NatT>() || src.as<EmptyT>() ||
        src.as<UnitT>() || src.as<RingT>() || src.as<UniverseT>())
      return a;
    if (src.as<PiT>() || src.as<SigmaT>()) {
      bool is_pi = src.as<PiT>() != nullptr;
      auto dom = [fam, is_pi](const Value &x) {
        SemType t = fam(x);
        return is_pi ? former<PiT>(t, "Pi").domain : former<SigmaT>(t, "Sigma").domain;
      };
      auto cod = [fam, is_pi](const Value &xa) {
        SemType t = fam(fst(xa));
        return is_pi ? former<PiT>(t, "Pi").codomain(snd(xa))
                     : former<SigmaT>(t, "Sigma").codomain(snd(xa));
      };
      Fibration fa = type_fibration(dom, name + ".dom");
      Fibration fb = type_fibration(cod, name + ".cod");
      return (is_pi ? pi_fib(fa, fb) : sigma_fib(fa, fb)).transp(p, a);
    }
    if (src.as<SumT>()) {
      Fibration fl = type_fibration(
          [fam](const Value &x) { return former<SumT>(fam(x), "Sum").left; },
          name + ".inl");
      Fibration fr = type_fibration(
          [fam](const Value &x) { return former<SumT>(fam(x), "Sum").right; },
          name + ".inr");
      return sum_fib(fl, fr).transp(p, a);
    }
    if (src.as<WT>()) {
      Fibration fl = type_fibration(
          [fam](const Value &x) { return former<WT>(fam(x), "W").label; },
          name + ".label");
      Fibration fb = type_fibration(
          [fam](const Value &xa) {
            return former<WT>(fam(fst(xa)), "W").branch(snd(xa));
          },
          name + ".branch");
      return w_fib(fl, fb).transp(p, a);
    }
    if (src.as<IdT>()) {
      Fibration carrier = type_fibration(
          [fam](const Value &x) { return former<IdT>(fam(x), "Id").carrier; },
          name + ".carrier");
      Fibration ids = reindex(id_fib(carrier), [fam](const Value &x) {
        SemType ty = fam(x);
        const IdT &id = former<IdT>(ty, "Id");
        return Value::pair(Value::pair(x, id.lhs), id.rhs);
      });
      return ids.transp(p, a);
    }
    return stuck(name, p, a);
  };
  return Fibration{std::move(fam), std::move(transp), name};
}

}  // namespace mtt
