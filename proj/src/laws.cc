#include "mtt/laws.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "mtt/fib.h"
#include "mtt/funext.h"
#include "mtt/piecewise.h"
#include "mtt/universe.h"

namespace mtt {

namespace {

using Outcome = std::optional<Json>;

// Small helpers for building counterexamples.

Json describe(const PiecewisePath &p) { return p.to_json(); }

Outcome fail_piecewise(const PathEqResult &r, Json inputs) {
  if (r) return std::nullopt;
  inputs["witness"] = r.shapes_differ ? Json("shapes differ")
                                      : Json(r.witness ? r.witness->to_string() : "?");
  return inputs;
}

Outcome fail_conversion(const Conversion &c, Json inputs) {
  if (c) return std::nullopt;
  inputs["witness"] = c.witness;
  return inputs;
}

Outcome require(bool ok, Json inputs, const std::string &what) {
  if (ok) return std::nullopt;
  inputs["witness"] = what;
  return inputs;
}

Value boolean(bool b) { return Value::boolean(b); }
Value scalar(const Rational &r) { return Value::scalar(r); }

/// A path that stays at `a` until `cut` and is `b` afterwards.
ValuePath step_path(const Nonneg &shape, const Nonneg &cut, Value a, Value b) {
  return babs<Value>(shape, [cut, a, b](const Nonneg &i) { return leq(i, cut) ? a : b; });
}

/// A path from a to b; degenerate when the ring has no room for a step or
/// the endpoints agree.
ValuePath path_between(Gen &gen, const Value &a, const Value &b) {
  if (equal_untyped(a, b) && gen.coin()) return idp(a);
  Nonneg shape = gen.positive();
  if (shape == Nonneg(0)) return idp(a);
  // A cut strictly below the shape so the target is b.
  Nonneg cut(shape.value() * Rational(static_cast<long>(gen.uniform(0, 3)), 4));
  if (!(cut < shape)) cut = Nonneg(0);
  return step_path(shape, cut, a, b);
}

/// Weight of a context point, used by the shifting family below.
Rational weight(const Value &v) {
  if (const auto *s = v.as<ScalarV>()) return s->value;
  if (const auto *b = v.as<BoolV>()) return Rational(b->value ? 1 : 0);
  if (const auto *n = v.as<NatV>()) return Rational(static_cast<long>(n->value));
  if (const auto *p = v.as<PairV>()) return weight(p->first) + weight(p->second);
  return Rational(0);
}

// Base fibrations over arbitrary contexts.

/// Bool fibers, flipped whenever the path has distinct endpoints.
Fibration flip_fib() {
  return Fibration{[](const Value &) { return SemType::boolean(); },
                   [](const ValuePath &p, const Value &b) {
                     bool moved = !equal_untyped(p.source(), p.target());
                     return boolean(as_bool(b) != moved);
                   },
                   "flip"};
}

/// R fibers, shifted by the change in weight along the path.
Fibration shift_fib() {
  return Fibration{[](const Value &) { return SemType::ring(); },
                   [](const ValuePath &p, const Value &a) {
                     return scalar(as_scalar(a) + weight(p.target()) - weight(p.source()));
                   },
                   "shift"};
}

/// Branching over Γ.Bool: a Bool of children for a true label, none
/// otherwise.
Fibration branch_fib() {
  return Fibration{[](const Value &pt) {
                     return as_bool(snd(pt)) ? SemType::boolean() : SemType::empty();
                   },
                   [](const ValuePath &, const Value &b) { return b; }, "branch"};
}

struct Named {
  Fibration fib;
  std::string name;
};

Named base_fib(Gen &gen) {
  switch (gen.uniform(0, 4)) {
    case 0:
      return {const_fib(SemType::boolean()), "Bool"};
    case 1:
      return {const_fib(SemType::nat()), "Nat"};
    case 2:
      return {const_fib(SemType::ring()), "R"};
    case 3:
      return {flip_fib(), "flip"};
    default:
      return {shift_fib(), "shift"};
  }
}

Value context_point(Gen &gen) {
  switch (gen.uniform(0, 2)) {
    case 0:
      return boolean(gen.coin());
    case 1:
      return scalar(gen.scalar());
    default:
      return Value::pair(scalar(gen.scalar()), boolean(gen.coin()));
  }
}

Value random_tree(Gen &gen, int depth) {
  bool label = depth > 0 && gen.coin();
  if (!label) return Value::sup(boolean(false), [](const Value &e) { return absurd(e); });
  Value l = random_tree(gen, depth - 1);
  Value r = random_tree(gen, depth - 1);
  return Value::sup(boolean(true), [l, r](const Value &b) { return bool_elim(b, l, r); });
}

/// A random closed element of `ty`, for the types the law suite builds.
Value random_element(Gen &gen, const SemType &ty, int depth = 0) {
  if (ty.as<BoolT>()) return boolean(gen.coin());
  if (ty.as<NatT>()) return Value::nat(static_cast<std::uint64_t>(gen.uniform(0, 9)));
  if (ty.as<RingT>()) return scalar(gen.scalar());
  if (ty.as<UnitT>()) return Value::unit();
  if (const auto *s = ty.as<SigmaT>()) {
    Value a = random_element(gen, s->domain, depth + 1);
    return Value::pair(a, random_element(gen, s->codomain(a), depth + 1));
  }
  if (const auto *s = ty.as<SumT>()) {
    if (gen.coin()) return Value::inl(random_element(gen, s->left, depth + 1));
    return Value::inr(random_element(gen, s->right, depth + 1));
  }
  if (const auto *pi = ty.as<PiT>()) {
    if (pi->domain.as<BoolT>()) {
      Value on_true = random_element(gen, pi->codomain(boolean(true)), depth + 1);
      Value on_false = random_element(gen, pi->codomain(boolean(false)), depth + 1);
      return Value::lambda([on_true, on_false](const Value &x) {
        return bool_elim(x, on_true, on_false);
      });
    }
    SemType cod = pi->codomain(Value::var(0, "x"));
    if (cod.as<RingT>() && pi->domain.as<RingT>()) {
      Rational a = gen.scalar(), b = gen.scalar();
      return Value::lambda([a, b](const Value &x) { return scalar(a * as_scalar(x) + b); });
    }
    if (cod.as<NatT>() && pi->domain.as<NatT>()) {
      auto k = static_cast<std::uint64_t>(gen.uniform(0, 3));
      return Value::lambda([k](const Value &x) {
        return nat_elim(x, Value::nat(k), [](const Value &, const Value &ih) {
          return Value::succ(ih);
        });
      });
    }
    // A constant function at an element of the fiber over a sample point.
    auto samples = probe_elements(pi->domain, {});
    Value c = random_element(gen, pi->codomain(samples.empty() ? Value::unit() : samples[0]),
                             depth + 1);
    return Value::lambda([c](const Value &) { return c; });
  }
  if (const auto *w = ty.as<WT>()) {
    (void)w;
    return random_tree(gen, 3);
  }
  if (const auto *id = ty.as<IdT>()) return Value::path(path_between(gen, id->lhs, id->rhs));
  if (ty.as<UniverseT>()) return Value::code_bool();
  throw SemanticError("no generator for " + show(ty));
}

// Transport laws: a fibration of a given former with a point in its fiber.

struct TapInstance {
  Fibration fib;
  Value x;  // context point
  Value a;  // element of fib.fam(x)
  std::string desc;
};

TapInstance tap_instance(Gen &gen, const std::string &former) {
  Value x = context_point(gen);
  if (former == "const") {
    Named b = base_fib(gen);
    return {b.fib, x, random_element(gen, b.fib.fam(x)), b.name};
  }
  if (former == "Sigma" || former == "Pi" || former == "Sum") {
    Named a = base_fib(gen), b = base_fib(gen);
    Fibration f = former == "Sigma" ? sigma_fib(a.fib, b.fib)
                  : former == "Pi"  ? pi_fib(a.fib, b.fib)
                                    : sum_fib(a.fib, b.fib);
    return {f, x, random_element(gen, f.fam(x)), former + "(" + a.name + ", " + b.name + ")"};
  }
  if (former == "W") {
    bool flip = gen.coin();
    Fibration labels = flip ? flip_fib() : const_fib(SemType::boolean());
    Fibration f = w_fib(labels, branch_fib());
    return {f, x, random_tree(gen, 3), std::string("W(") + (flip ? "flip" : "Bool") + ", branch)"};
  }
  // Id: the context is ((x, a1), a2) and the element a path a1 ~ a2.
  Named a = base_fib(gen);
  SemType fiber = a.fib.fam(x);
  Value a1 = random_element(gen, fiber);
  Value a2 = gen.coin() ? a1 : random_element(gen, fiber);
  Value pt = Value::pair(Value::pair(x, a1), a2);
  return {id_fib(a.fib), pt, Value::path(path_between(gen, a1, a2)), "Id(" + a.name + ")"};
}

Json tap_inputs(const TapInstance &t) {
  Json j;
  j["family"] = t.desc;
  j["context"] = show(t.x);
  j["element"] = show(t.a);
  return j;
}

// J motives over Γ.A.A.Id for A in {Bool, Nat}.

struct Motive {
  std::string desc;
  Family fam;  // over (((x, a1), a2), q)
};

Motive random_motive(Gen &gen, const SemType &carrier, int depth = 0) {
  auto a1 = [](const Value &pt) { return snd(fst(fst(pt))); };
  auto a2 = [](const Value &pt) { return snd(fst(pt)); };
  int choice = static_cast<int>(gen.uniform(0, depth >= 2 ? 4 : 7));
  switch (choice) {
    case 0:
      return {"Bool", [](const Value &) { return SemType::boolean(); }};
    case 1:
      return {"Nat", [](const Value &) { return SemType::nat(); }};
    case 2:
      return {"Id A a1 a2", [carrier, a1, a2](const Value &pt) {
                return SemType::id(carrier, a1(pt), a2(pt));
              }};
    case 3:
      return {"Id A a2 a1", [carrier, a1, a2](const Value &pt) {
                return SemType::id(carrier, a2(pt), a1(pt));
              }};
    case 4:
      return {"(y : A) * Id A a1 y", [carrier, a1](const Value &pt) {
                Value lhs = a1(pt);
                return SemType::sigma(carrier, [carrier, lhs](const Value &y) {
                  return SemType::id(carrier, lhs, y);
                });
              }};
    case 5: {
      Motive l = random_motive(gen, carrier, depth + 1);
      Motive r = random_motive(gen, carrier, depth + 1);
      return {"(" + l.desc + ") + (" + r.desc + ")",
              [l, r](const Value &pt) { return SemType::sum(l.fam(pt), r.fam(pt)); }};
    }
    case 6: {
      Motive r = random_motive(gen, carrier, depth + 1);
      return {"A -> (" + r.desc + ")", [carrier, r](const Value &pt) {
                return SemType::arrow(carrier, r.fam(pt));
              }};
    }
    default: {
      Motive l = random_motive(gen, carrier, depth + 1);
      Motive r = random_motive(gen, carrier, depth + 1);
      return {"(" + l.desc + ") * (" + r.desc + ")",
              [l, r](const Value &pt) { return SemType::product(l.fam(pt), r.fam(pt)); }};
    }
  }
}

// Universe codes.

Value random_code(Gen &gen, int depth) {
  int choice = static_cast<int>(gen.uniform(0, depth >= 2 ? 0 : 2));
  if (choice == 0) return Value::code_bool();
  if (choice == 1) {
    Value cod_true = random_code(gen, depth + 1);
    Value cod_false = gen.coin() ? cod_true : random_code(gen, depth + 1);
    return Value::code_pi(Value::code_bool(), [cod_true, cod_false](const Value &x) {
      return bool_elim(x, cod_true, cod_false);
    });
  }
  Value inner = random_code(gen, depth + 1);
  SemType carrier = decode(inner);
  Value lhs = random_element(gen, carrier);
  Value rhs = gen.coin() ? lhs : random_element(gen, carrier);
  return Value::code_eq(inner, lhs, rhs);
}

/// A bool-valued path with source `from`, switching at most once.
ValuePath bool_path(Gen &gen, bool from) {
  return path_between(gen, boolean(from), boolean(gen.coin() ? from : !from));
}

Nonneg max_shape(const ValuePath &a, const ValuePath &b) {
  return leq(a.shape(), b.shape()) ? b.shape() : a.shape();
}

Conversion equal_at(const SemType &ty, const Value &a, const Value &b) {
  return equal_values(ty, a, b, EqualityContext{0, SampleSpec{}});
}

// The registry.

std::vector<Law> build_registry() {
  std::vector<Law> laws;
  auto add = [&](std::string id, std::string summary, double scale,
                 std::function<Outcome(Gen &)> check) {
    laws.push_back(Law{std::move(id), std::move(summary), scale, std::nullopt, std::move(check)});
  };
  auto add_fixed = [&](std::string id, std::string summary,
                       std::function<Outcome(Gen &)> check) {
    laws.push_back(Law{std::move(id), std::move(summary), 1.0, 1, std::move(check)});
  };

  // Groupoid structure of Moore paths, exact on piecewise paths.
  add("groupoid.left_unit", "idp(target p) . p = p", 1.0, [](Gen &g) {
    auto p = g.path();
    return fail_piecewise(piecewise::path_eq(piecewise::compose(piecewise::idp(p.target()), p), p),
                          Json{{"p", describe(p)}});
  });
  add("groupoid.right_unit", "p . idp(source p) = p", 1.0, [](Gen &g) {
    auto p = g.path();
    return fail_piecewise(piecewise::path_eq(piecewise::compose(p, piecewise::idp(p.source())), p),
                          Json{{"p", describe(p)}});
  });
  add("groupoid.assoc", "r . (q . p) = (r . q) . p", 1.0, [](Gen &g) {
    auto p = g.path();
    auto q = g.path_from(p.target());
    auto r = g.path_from(q.target());
    using namespace piecewise;
    return fail_piecewise(path_eq(compose(r, compose(q, p)), compose(compose(r, q), p)),
                          Json{{"p", describe(p)}, {"q", describe(q)}, {"r", describe(r)}});
  });
  add("groupoid.reverse_shape", "rev p has the shape of p", 1.0, [](Gen &g) {
    auto p = g.path();
    auto r = piecewise::reverse(p);
    return require(r.shape() == p.shape() && r.source() == p.target() && r.target() == p.source(),
                   Json{{"p", describe(p)}}, "shape or endpoints of rev p");
  });
  add("groupoid.reverse_involution", "rev (rev p) = p", 1.0, [](Gen &g) {
    auto p = g.path();
    return fail_piecewise(piecewise::path_eq(piecewise::reverse(piecewise::reverse(p)), p),
                          Json{{"p", describe(p)}});
  });
  add("groupoid.reverse_antihom", "rev (q . p) = rev p . rev q", 1.0, [](Gen &g) {
    auto p = g.path();
    auto q = g.path_from(p.target());
    using namespace piecewise;
    return fail_piecewise(path_eq(reverse(compose(q, p)), compose(reverse(p), reverse(q))),
                          Json{{"p", describe(p)}, {"q", describe(q)}});
  });

  // Bounded abstraction and contraction; exact on piecewise paths, sampled
  // on the closure representation.
  add("babs.zero", "babs(0, phi) = idp(phi 0)", 1.0, [](Gen &g) {
    Polynomial phi = g.polynomial(g.scalar());
    Json in{{"phi", phi.to_string()}};
    auto exact = piecewise::path_eq(piecewise::babs(Nonneg(0), phi), piecewise::idp(phi(Rational(0))));
    if (!exact) return fail_piecewise(exact, in);
    auto closure = babs<Rational>(Nonneg(0), [phi](const Nonneg &i) { return phi(i.value()); });
    return fail_piecewise(path_eq(closure, idp(phi(Rational(0)))), in);
  });
  add("babs.full", "babs(shape p, i. p i) = p", 1.0, [](Gen &g) {
    auto p = g.path();
    auto view = p.to_path();
    auto rebuilt = babs<Rational>(p.shape(), [view](const Nonneg &i) { return view.at(i); });
    Json in{{"p", describe(p)}};
    if (p.pieces().size() == 1) {
      auto exact = piecewise::path_eq(piecewise::babs(p.shape(), p.pieces()[0]), p);
      if (!exact) return fail_piecewise(exact, in);
    }
    return fail_piecewise(path_eq(rebuilt, view), in);
  });
  add("babs.map", "map(g, babs(j, phi)) = babs(j, g . phi)", 1.0, [](Gen &g) {
    Nonneg j = g.nonneg();
    Polynomial phi = g.polynomial(g.scalar());
    Polynomial fn = g.polynomial(g.scalar());
    Json in{{"j", j.to_string()}, {"phi", phi.to_string()}, {"g", fn.to_string()}};
    auto exact = piecewise::path_eq(piecewise::map(fn, piecewise::babs(j, phi)),
                                    piecewise::babs(j, fn.compose(phi)));
    if (!exact) return fail_piecewise(exact, in);
    auto lhs = map([fn](const Rational &x) { return fn(x); },
                   babs<Rational>(j, [phi](const Nonneg &i) { return phi(i.value()); }));
    auto rhs = babs<Rational>(j, [fn, phi](const Nonneg &i) { return fn(phi(i.value())); });
    return fail_piecewise(path_eq(lhs, rhs), in);
  });
  add("upto.zero", "upto(0, p) = idp(source p)", 1.0, [](Gen &g) {
    auto p = g.path();
    Json in{{"p", describe(p)}};
    auto exact = piecewise::path_eq(piecewise::upto(Nonneg(0), p), piecewise::idp(p.source()));
    if (!exact) return fail_piecewise(exact, in);
    return fail_piecewise(path_eq(upto(Nonneg(0), p.to_path()), idp(p.source())), in);
  });
  add("upto.beyond", "upto(i, p) = p for i >= shape p", 1.0, [](Gen &g) {
    auto p = g.path();
    Nonneg i = p.shape() + g.nonneg();
    Json in{{"p", describe(p)}, {"i", i.to_string()}};
    auto exact = piecewise::path_eq(piecewise::upto(i, p), p);
    if (!exact) return fail_piecewise(exact, in);
    return fail_piecewise(path_eq(upto(i, p.to_path()), p.to_path()), in);
  });
  add("upto.endpoints", "upto(i, p) runs from source p to p at i", 1.0, [](Gen &g) {
    auto p = g.path();
    Nonneg i = g.nonneg();
    auto u = piecewise::upto(i, p);
    return require(u.shape() == min(i, p.shape()) && u.source() == p.source() &&
                       u.target() == p.at(i),
                   Json{{"p", describe(p)}, {"i", i.to_string()}}, "shape or endpoints of upto");
  });
  add("from.zero", "from(0, q) = q", 1.0, [](Gen &g) {
    auto q = g.path();
    Json in{{"q", describe(q)}};
    auto exact = piecewise::path_eq(piecewise::from(Nonneg(0), q), q);
    if (!exact) return fail_piecewise(exact, in);
    return fail_piecewise(path_eq(from(Nonneg(0), q.to_path()), q.to_path()), in);
  });
  add("from.beyond", "from(i, q) = idp(target q) for i >= shape q", 1.0, [](Gen &g) {
    auto q = g.path();
    Nonneg i = q.shape() + g.nonneg();
    Json in{{"q", describe(q)}, {"i", i.to_string()}};
    auto exact = piecewise::path_eq(piecewise::from(i, q), piecewise::idp(q.target()));
    if (!exact) return fail_piecewise(exact, in);
    return fail_piecewise(path_eq(from(i, q.to_path()), idp(q.target())), in);
  });

  // Transport along degenerate paths is the identity, per former.
  for (std::string former : {"const", "Sigma", "Pi", "Sum", "W", "Id"}) {
    add("tap.idp." + former, "transp(idp x, a) = a for " + former + " families", 0.5,
        [former](Gen &g) {
          TapInstance t = tap_instance(g, former);
          Value moved = t.fib.transp(idp(t.x), t.a);
          return fail_conversion(equal_at(t.fib.fam(t.x), moved, t.a), tap_inputs(t));
        });
  }
  add("tap.lift_idp", "lift(idp x, a) = idp (x, a)", 0.5, [](Gen &g) {
    static const char *const formers[] = {"const", "Sigma", "Pi", "Sum", "W", "Id"};
    TapInstance t = tap_instance(g, formers[g.uniform(0, 5)]);
    auto l = lift(t.fib, idp(t.x), t.a);
    Json in = tap_inputs(t);
    if (!(l.shape() == Nonneg(0))) return require(false, in, "lift has positive shape");
    auto c = equal_untyped(fst(l.source()), t.x);
    if (c) c = equal_at(t.fib.fam(t.x), snd(l.source()), t.a);
    return fail_conversion(c, in);
  });
  add("tap.snd_idp", "snd_path(idp (x, a)) = idp a", 0.5, [](Gen &g) {
    static const char *const formers[] = {"const", "Sigma", "Pi", "Sum", "W", "Id"};
    TapInstance t = tap_instance(g, formers[g.uniform(0, 5)]);
    auto s = snd_path(t.fib, idp(Value::pair(t.x, t.a)));
    Json in = tap_inputs(t);
    if (!(s.shape() == Nonneg(0))) return require(false, in, "snd path has positive shape");
    return fail_conversion(equal_at(t.fib.fam(t.x), s.source(), t.a), in);
  });

  // J computes on refl.
  add("j.refl", "J B beta refl = beta", 0.2, [](Gen &g) {
    bool nat = g.coin();
    SemType carrier = nat ? SemType::nat() : SemType::boolean();
    Motive m = random_motive(g, carrier);
    Fibration b = type_fibration(m.fam, "B");
    Value x = context_point(g);
    Value a = random_element(g, carrier);
    Value beta = random_element(g, m.fam(refl(x, a)));
    Value out = j_elim(b, [beta](const Value &, const Value &) { return beta; }, x, a, a, idp(a));
    Json in{{"carrier", nat ? "Nat" : "Bool"}, {"motive", m.desc}, {"a", show(a)},
            {"beta", show(beta)}};
    return fail_conversion(equal_at(m.fam(refl(x, a)), out, beta), in);
  });

  // Function extensionality.
  struct Homotopy {
    PointwiseHomotopy e;
    Json desc;
  };
  auto homotopy = [](Gen &g) {
    // e x = ⟨i ≤ s + t x²⟩ c0 + c1 x + c2 i over R.
    Nonneg s = g.nonneg(), t = g.nonneg();
    Rational c0 = g.scalar(), c1 = g.scalar(), c2 = g.scalar();
    PointwiseHomotopy e{SemType::ring(), [=](const Value &x) {
                          Rational v = as_scalar(x);
                          Nonneg len(s.value() + t.value() * v * v);
                          return babs<Value>(len, [=](const Nonneg &i) {
                            return scalar(c0 + c1 * v + c2 * i.value());
                          });
                        }};
    Json desc{{"shape", s.to_string() + " + " + t.to_string() + "*x^2"},
              {"value", c0.to_string() + " + " + c1.to_string() + "*x + " + c2.to_string() + "*i"}};
    return Homotopy{e, desc};
  };
  SemType ring_fn = SemType::arrow(SemType::ring(), SemType::ring());
  add("funext.shape", "shape(funext e) = 1", 0.5, [homotopy](Gen &g) {
    Homotopy h = homotopy(g);
    return require(funext(h.e).shape() == Nonneg(1), h.desc, "shape is not 1");
  });
  add("funext.endpoints", "funext e runs from f to g", 0.5, [homotopy](Gen &g) {
    Homotopy h = homotopy(g);
    auto p = funext(h.e);
    for (const auto &x : probe_elements(SemType::ring(), {})) {
      auto ex = h.e(x);
      auto c = equal_untyped(apply(p.source(), x), ex.source());
      if (c) c = equal_untyped(apply(p.target(), x), ex.target());
      if (!c) {
        h.desc["x"] = show(x);
        return fail_conversion(c, h.desc);
      }
    }
    return Outcome{};
  });
  add("funext.epsilon", "epsilon e runs from happly(funext e) to e", 0.5, [homotopy](Gen &g) {
    Homotopy h = homotopy(g);
    auto eps = epsilon(h.e);
    auto fe = funext(h.e);
    if (!(eps.shape() == Nonneg(1))) return require(false, h.desc, "shape is not 1");
    Nonneg j = g.unit_interval();
    for (const auto &x : probe_elements(SemType::ring(), {})) {
      auto ex = h.e(x);
      auto c = equal_paths(SemType::ring(), eps.source()(x), happly(fe, x));
      if (c) c = equal_paths(SemType::ring(), eps.target()(x), ex);
      auto mid = eps.at(j)(x);
      if (c) c = equal_untyped(mid.source(), ex.source());
      if (c) c = equal_untyped(mid.target(), ex.target());
      if (!c) {
        h.desc["x"] = show(x);
        h.desc["j"] = j.to_string();
        return fail_conversion(c, h.desc);
      }
    }
    return Outcome{};
  });
  add("funext.eta", "eta p runs from p to funext(happly p)", 0.5, [ring_fn](Gen &g) {
    // p = ⟨i ≤ s⟩ λx. a x + b i
    Nonneg s = g.nonneg();
    Rational a = g.scalar(), b = g.scalar();
    auto p = babs<Value>(s, [a, b](const Nonneg &i) {
      Rational bi = b * i.value();
      return Value::lambda([a, bi](const Value &x) { return scalar(a * as_scalar(x) + bi); });
    });
    Json in{{"shape", s.to_string()}, {"value", a.to_string() + "*x + " + b.to_string() + "*i"}};
    auto h = eta(p);
    if (!(h.shape() == Nonneg(1))) return require(false, in, "shape is not 1");
    PointwiseHomotopy hp{SemType::ring(), [p](const Value &x) { return happly(p, x); }};
    auto c = equal_paths(ring_fn, h.source(), p);
    if (c) c = equal_paths(ring_fn, h.target(), funext(hp));
    return fail_conversion(c, in);
  });
  add("funext.interpolants", "u v = s + j (1 - j) (s - 1)^2", 0.5, [](Gen &g) {
    Nonneg j = g.unit_interval();
    Nonneg s = g.nonneg();
    auto uv = interpolants(j, s);
    Rational d = s.value() - Rational(1);
    Rational expected = s.value() + j.value() * (Rational(1) - j.value()) * d * d;
    return require(uv.u.value() * uv.v.value() == expected,
                   Json{{"j", j.to_string()}, {"s", s.to_string()}},
                   "u v = " + (uv.u.value() * uv.v.value()).to_string() + ", expected " +
                       expected.to_string());
  });
  add_fixed("funext.k0_id", "funext of K0 ~ id is 2 at (1/2, 4)", [](Gen &) {
    PointwiseHomotopy e{SemType::ring(), [](const Value &x) {
                          return babs<Value>(Nonneg(as_scalar(x)),
                                             [](const Nonneg &j) { return scalar(j.value()); });
                        }};
    Value v = apply(funext(e).at(Nonneg(1, 2)), scalar(Rational(4)));
    return require(equal_untyped(v, scalar(Rational(2))).equal, Json{{"value", show(v)}},
                   "expected 2");
  });

  // The universe.
  auto decoded = type_fibration([](const Value &c) { return decode(c); }, "T");
  add("universe.idp", "u_transport(idp u, a) = a", 0.2, [](Gen &g) {
    Value u = random_code(g, 0);
    SemType ty = decode(u);
    Value a = random_element(g, ty);
    return fail_conversion(equal_at(ty, u_transport(idp(u), a), a),
                           Json{{"code", show(u)}, {"a", show(a)}});
  });
  add("universe.bool", "u_transport agrees with decoded transport on #bool paths", 0.2,
      [decoded](Gen &g) {
        Nonneg s = g.nonneg();
        auto p = babs<Value>(s, [](const Nonneg &) { return Value::code_bool(); });
        Value b = boolean(g.coin());
        return fail_conversion(equal_at(SemType::boolean(), u_transport(p, b), decoded.transp(p, b)),
                               Json{{"shape", s.to_string()}, {"a", show(b)}});
      });
  add("universe.pi", "u_transport agrees with decoded transport on #pi paths", 0.2,
      [decoded](Gen &g) {
        // #pi #bool (x. #eq #bool (l_i x) (r x)) or with a #bool codomain.
        bool eq_cod = g.coin();
        ValuePath lt = bool_path(g, g.coin()), lf = bool_path(g, g.coin());
        Nonneg shape = max_shape(lt, lf);
        bool rt = g.coin(), rf = g.coin();
        auto code_at = [=](const Nonneg &i) {
          if (!eq_cod) return Value::code_pi(Value::code_bool(), [](const Value &) {
            return Value::code_bool();
          });
          Value l_true = lt.at(i), l_false = lf.at(i);
          return Value::code_pi(Value::code_bool(), [=](const Value &x) {
            return Value::code_eq(Value::code_bool(), bool_elim(x, l_true, l_false),
                                  bool_elim(x, boolean(rt), boolean(rf)));
          });
        };
        auto p = babs<Value>(shape, code_at);
        SemType src = decode(p.source());
        Value f = random_element(g, src);
        Json in{{"codomain", eq_cod ? "#eq" : "#bool"}, {"shape", shape.to_string()},
                {"f", show(f)}};
        if (!constructor_stable(p)) return require(false, in, "generated path is not stable");
        return fail_conversion(equal_at(decode(p.target()), u_transport(p, f), decoded.transp(p, f)),
                               in);
      });
  add("universe.eq", "u_transport agrees with decoded transport on #eq paths", 0.2,
      [decoded](Gen &g) {
        ValuePath l = bool_path(g, g.coin());
        ValuePath r = bool_path(g, g.coin());
        Nonneg shape = max_shape(l, r);
        auto p = babs<Value>(shape, [l, r](const Nonneg &i) {
          return Value::code_eq(Value::code_bool(), l.at(i), r.at(i));
        });
        Value q = Value::path(path_between(g, l.source(), r.source()));
        Json in{{"lhs", show(Value::path(l))}, {"rhs", show(Value::path(r))}, {"q", show(q)}};
        return fail_conversion(equal_at(decode(p.target()), u_transport(p, q), decoded.transp(p, q)),
                               in);
      });
  add_fixed("universe.constructor_change", "a path from #bool to #pi is rejected at 1",
            [](Gen &) {
              auto p = babs<Value>(Nonneg(1), [](const Nonneg &i) {
                if (i == Nonneg(0)) return Value::code_bool();
                return Value::code_pi(Value::code_bool(), [](const Value &) {
                  return Value::code_bool();
                });
              });
              std::string first, second;
              for (std::string *slot : {&first, &second}) {
                try {
                  u_transport(p, boolean(true));
                } catch (const ConstructorChange &e) {
                  *slot = e.what();
                }
              }
              const std::string expected = "path in U changes constructor from #bool to #pi at 1";
              return require(first == expected && second == expected,
                             Json{{"first", first}, {"second", second}},
                             "expected: " + expected);
            });

  // A step path true ~ false of unit shape. It exists in every nontrivial
  // ring; over the integers nothing lies strictly inside it.
  add_fixed("degeneracy.step", "a shape-1 step path true ~ false", [](Gen &g) {
    const RingInstance &ring = g.ring();
    Nonneg one(ring.one());
    auto p = step_path(one, Nonneg(ring.zero()), boolean(true), boolean(false));
    bool ok = p.shape() == Nonneg(1) && as_bool(p.source()) && !as_bool(p.target());
    return require(ok, Json{{"ring", std::string(ring.name())}, {"shape", p.shape().to_string()},
                            {"source", show(p.source())}, {"target", show(p.target())}},
                   "no step path of shape 1 from true to false");
  });

  return laws;
}

}  // namespace

std::size_t Law::instances(std::size_t count) const {
  if (fixed) return *fixed;
  auto n = static_cast<std::size_t>(std::llround(static_cast<double>(count) * scale));
  return std::max<std::size_t>(n, 1);
}

const std::vector<Law> &law_registry() {
  static const std::vector<Law> laws = build_registry();
  return laws;
}

bool law_selected(const std::string &id, const std::string &filter) {
  if (filter.empty()) return true;
  std::size_t start = 0;
  while (start <= filter.size()) {
    std::size_t end = filter.find(',', start);
    if (end == std::string::npos) end = filter.size();
    std::string prefix = filter.substr(start, end - start);
    if (!prefix.empty() && id.compare(0, prefix.size(), prefix) == 0) return true;
    start = end + 1;
  }
  return false;
}

Json LawReport::to_json() const {
  Json j;
  j["law"] = id;
  j["instances"] = instances;
  j["passed"] = passed;
  j["counterexample"] = counterexample;
  j["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
  return j;
}

namespace {

LawReport run_one(const Law &law, std::size_t index, const LawOptions &options) {
  auto start = std::chrono::steady_clock::now();
  Gen gen(options.seed ^ static_cast<std::uint64_t>(index), options.ring);
  LawReport report;
  report.id = law.id;
  std::size_t n = law.instances(options.count);
  for (std::size_t k = 0; k < n; ++k) {
    Outcome bad;
    try {
      bad = law.check(gen);
    } catch (const std::exception &e) {
      bad = Json{{"error", e.what()}};
    }
    if (bad) {
      report.passed = false;
      Json ce;
      ce["instance"] = k;
      for (auto &[key, value] : bad->items()) ce[key] = value;
      report.counterexample = std::move(ce);
      n = k + 1;
      break;
    }
  }
  report.instances = n;
  if (options.timings) {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    report.elapsed_ms = std::round(ms.count() * 1000.0) / 1000.0;
  }
  return report;
}

}  // namespace

std::vector<LawReport> run_laws(const LawOptions &options) {
  const auto &laws = law_registry();
  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < laws.size(); ++k)
    if (law_selected(laws[k].id, options.filter)) selected.push_back(k);

  std::vector<LawReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < selected.size();)
      reports[k] = run_one(laws[selected[k]], selected[k], options);
  };
  unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();
  return reports;
}

Json to_json(const std::vector<LawReport> &reports) {
  Json out = Json::array();
  for (const auto &r : reports) out.push_back(r.to_json());
  return out;
}

}  // namespace mtt
