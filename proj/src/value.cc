#include "mtt/value.h"

#include <sstream>
#include <utility>

namespace mtt {

Value::Value() : node_(std::make_shared<const Node>(Node{UnitV{}})) {}

#define MTT_MAKE(...) Value(std::make_shared<const Node>(Node{__VA_ARGS__}))

Value Value::unit() { return Value(); }
Value Value::boolean(bool b) { return MTT_MAKE(BoolV{b}); }
Value Value::nat(std::uint64_t n) { return MTT_MAKE(NatV{n}); }
Value Value::succ(const Value &n) {
  if (const auto *k = n.as<NatV>()) return nat(k->value + 1);
  return MTT_MAKE(SuccV{n});
}
Value Value::scalar(const Rational &r) { return MTT_MAKE(ScalarV{r}); }
Value Value::pair(Value first, Value second) {
  return MTT_MAKE(PairV{std::move(first), std::move(second)});
}
Value Value::inl(Value v) { return MTT_MAKE(InlV{std::move(v)}); }
Value Value::inr(Value v) { return MTT_MAKE(InrV{std::move(v)}); }
Value Value::lambda(Fn fn) { return MTT_MAKE(LambdaV{std::move(fn)}); }
Value Value::path(ValuePath p) { return MTT_MAKE(PathV{std::move(p)}); }
Value Value::sup(Value label, Fn children) {
  return MTT_MAKE(SupV{std::move(label), std::move(children)});
}
Value Value::code_bool() { return MTT_MAKE(CodeBoolV{}); }
Value Value::code_pi(Value domain, Fn codomain) {
  return MTT_MAKE(CodePiV{std::move(domain), std::move(codomain)});
}
Value Value::code_eq(Value domain, Value lhs, Value rhs) {
  return MTT_MAKE(CodeEqV{std::move(domain), std::move(lhs), std::move(rhs)});
}
Value Value::neutral(Neutral n) {
  return MTT_MAKE(NeutralV{std::make_shared<const Neutral>(std::move(n))});
}
Value Value::var(int level, std::string name) {
  return neutral(Neutral{Neutral::Var{level, std::move(name)}});
}

#undef MTT_MAKE

bool Value::is_neutral() const { return as<NeutralV>() != nullptr; }

std::string Value::kind_name() const {
  static const char *const names[] = {
      "unit",   "bool",        "nat",         "nat",     "scalar",
      "pair",   "inl",         "inr",         "function", "path",
      "tree",   "code",        "code",        "code",    "neutral"};
  return names[node_->v.index()];
}

// Eliminators.

Value apply(const Value &f, const Value &x) {
  if (const auto *lam = f.as<LambdaV>()) return lam->fn(x);
  if (f.is_neutral()) return Value::neutral(Neutral{Neutral::App{f, x}});
  throw SemanticError("cannot apply a " + f.kind_name());
}

Value fst(const Value &p) {
  if (const auto *pair = p.as<PairV>()) return pair->first;
  if (p.is_neutral()) return Value::neutral(Neutral{Neutral::Fst{p}});
  throw SemanticError("fst of a " + p.kind_name());
}

Value snd(const Value &p) {
  if (const auto *pair = p.as<PairV>()) return pair->second;
  if (p.is_neutral()) return Value::neutral(Neutral{Neutral::Snd{p}});
  throw SemanticError("snd of a " + p.kind_name());
}

Value bool_elim(const Value &b, const Value &on_true, const Value &on_false) {
  if (const auto *v = b.as<BoolV>()) return v->value ? on_true : on_false;
  if (b.is_neutral())
    return Value::neutral(Neutral{Neutral::BoolElim{b, on_true, on_false}});
  throw SemanticError("boolean case on a " + b.kind_name());
}

Value nat_elim(const Value &n, const Value &zero, const Fn2 &step) {
  if (const auto *k = n.as<NatV>()) {
    Value acc = zero;
    for (std::uint64_t i = 0; i < k->value; ++i) acc = step(Value::nat(i), acc);
    return acc;
  }
  if (const auto *s = n.as<SuccV>())
    return step(s->pred, nat_elim(s->pred, zero, step));
  if (n.is_neutral())
    return Value::neutral(Neutral{Neutral::NatElim{n, zero, step}});
  throw SemanticError("natrec on a " + n.kind_name());
}

Value sum_elim(const Value &s, const Fn &on_inl, const Fn &on_inr) {
  if (const auto *l = s.as<InlV>()) return on_inl(l->value);
  if (const auto *r = s.as<InrV>()) return on_inr(r->value);
  if (s.is_neutral())
    return Value::neutral(Neutral{Neutral::SumElim{s, on_inl, on_inr}});
  throw SemanticError("case on a " + s.kind_name());
}

Value absurd(const Value &e) {
  if (e.is_neutral()) return Value::neutral(Neutral{Neutral::Absurd{e}});
  throw SemanticError("absurd on a " + e.kind_name());
}

Value w_elim(const Value &w, const Fn3 &step) {
  if (const auto *node = w.as<SupV>()) {
    Fn children = node->children;
    Value ih = Value::lambda(
        [children, step](const Value &b) { return w_elim(children(b), step); });
    return step(node->label, Value::lambda(children), ih);
  }
  if (w.is_neutral()) return Value::neutral(Neutral{Neutral::WElim{w, step}});
  throw SemanticError("wrec on a " + w.kind_name());
}

Value arith(ArithOp op, const Value &a, const Value &b) {
  const auto *x = a.as<ScalarV>();
  const auto *y = b.as<ScalarV>();
  if (x && y) {
    switch (op) {
      case ArithOp::add:
        return Value::scalar(x->value + y->value);
      case ArithOp::mul:
        return Value::scalar(x->value * y->value);
      case ArithOp::sub:
        return Value::scalar(x->value - y->value);
    }
  }
  if ((x || a.is_neutral()) && (y || b.is_neutral()))
    return Value::neutral(Neutral{Neutral::Arith{op, a, b}});
  throw SemanticError("arithmetic on a " + (x ? b : a).kind_name());
}

bool as_bool(const Value &v) {
  if (const auto *b = v.as<BoolV>()) return b->value;
  throw SemanticError("expected a boolean, got a " + v.kind_name());
}

const ValuePath &as_path(const Value &v) {
  if (const auto *p = v.as<PathV>()) return p->path;
  throw SemanticError("expected a path, got a " + v.kind_name());
}

const Rational &as_scalar(const Value &v) {
  if (const auto *s = v.as<ScalarV>()) return s->value;
  throw SemanticError("expected a scalar, got a " + v.kind_name());
}

// Types.

#define MTT_MAKE_T(...) SemType(std::make_shared<const Node>(Node{__VA_ARGS__}))

SemType::SemType() : node_(std::make_shared<const Node>(Node{UnitT{}})) {}
SemType SemType::boolean() { return MTT_MAKE_T(BoolT{}); }
SemType SemType::nat() { return MTT_MAKE_T(NatT{}); }
SemType SemType::empty() { return MTT_MAKE_T(EmptyT{}); }
SemType SemType::unit() { return SemType(); }
SemType SemType::ring() { return MTT_MAKE_T(RingT{}); }
SemType SemType::universe() { return MTT_MAKE_T(UniverseT{}); }
SemType SemType::pi(SemType domain, Family codomain, std::string binder) {
  return MTT_MAKE_T(PiT{std::move(domain), std::move(codomain), std::move(binder)});
}
SemType SemType::sigma(SemType domain, Family codomain, std::string binder) {
  return MTT_MAKE_T(
      SigmaT{std::move(domain), std::move(codomain), std::move(binder)});
}
SemType SemType::arrow(SemType domain, SemType codomain) {
  return pi(std::move(domain),
            [codomain](const Value &) { return codomain; }, "_");
}
SemType SemType::product(SemType first, SemType second) {
  return sigma(std::move(first),
               [second](const Value &) { return second; }, "_");
}
SemType SemType::sum(SemType left, SemType right) {
  return MTT_MAKE_T(SumT{std::move(left), std::move(right)});
}
SemType SemType::w(SemType label, Family branch, std::string binder) {
  return MTT_MAKE_T(WT{std::move(label), std::move(branch), std::move(binder)});
}
SemType SemType::id(SemType carrier, Value lhs, Value rhs) {
  return MTT_MAKE_T(IdT{std::move(carrier), std::move(lhs), std::move(rhs)});
}

#undef MTT_MAKE_T

SemType SemType::el(const Value &code) {
  if (code.as<CodeBoolV>()) return boolean();
  if (const auto *pi_code = code.as<CodePiV>()) {
    Fn cod = pi_code->codomain;
    return pi(el(pi_code->domain), [cod](const Value &x) { return el(cod(x)); });
  }
  if (const auto *eq = code.as<CodeEqV>())
    return id(el(eq->domain), eq->lhs, eq->rhs);
  if (code.is_neutral())
    return SemType(std::make_shared<const Node>(Node{ElT{code}}));
  throw SemanticError("El of a " + code.kind_name());
}

SemType SemType::cases(const Value &cond, SemType on_true, SemType on_false) {
  if (const auto *b = cond.as<BoolV>()) return b->value ? on_true : on_false;
  if (cond.is_neutral())
    return SemType(std::make_shared<const Node>(
        Node{IfT{cond, std::move(on_true), std::move(on_false)}}));
  throw SemanticError("if on a " + cond.kind_name());
}

std::string SemType::kind_name() const {
  static const char *const names[] = {"Bool", "Nat", "Empty", "Unit",
                                      "R",    "U",   "Pi",    "Sigma",
                                      "Sum",  "W",   "Id",    "El",   "If"};
  return names[node_->v.index()];
}

// Equality.

std::optional<std::vector<Value>> enumerate(const SemType &ty,
                                            std::size_t limit) {
  if (ty.as<BoolT>()) return std::vector<Value>{Value::boolean(true), Value::boolean(false)};
  if (ty.as<UnitT>()) return std::vector<Value>{Value::unit()};
  if (ty.as<EmptyT>()) return std::vector<Value>{};
  if (const auto *s = ty.as<SumT>()) {
    auto l = enumerate(s->left, limit);
    auto r = enumerate(s->right, limit);
    if (!l || !r || l->size() + r->size() > limit) return std::nullopt;
    std::vector<Value> out;
    for (auto &v : *l) out.push_back(Value::inl(v));
    for (auto &v : *r) out.push_back(Value::inr(v));
    return out;
  }
  if (const auto *s = ty.as<SigmaT>()) {
    auto firsts = enumerate(s->domain, limit);
    if (!firsts) return std::nullopt;
    std::vector<Value> out;
    for (auto &a : *firsts) {
      auto seconds = enumerate(s->codomain(a), limit);
      if (!seconds || out.size() + seconds->size() > limit) return std::nullopt;
      for (auto &b : *seconds) out.push_back(Value::pair(a, b));
    }
    return out;
  }
  return std::nullopt;
}

std::vector<Value> probe_elements(const SemType &ty, const SampleSpec &spec) {
  if (auto all = enumerate(ty)) return *all;
  if (ty.as<NatT>()) {
    std::vector<Value> out;
    for (std::uint64_t n : {0, 1, 2, 3, 5, 8}) out.push_back(Value::nat(n));
    return out;
  }
  if (ty.as<RingT>()) {
    std::vector<Value> out;
    for (const auto &r : {Rational(0), Rational(1, 2), Rational(1), Rational(-2), Rational(4)})
      out.push_back(Value::scalar(r));
    for (const auto &r : random_points(Nonneg(8), SampleSpec{spec.seed, 4}))
      out.push_back(Value::scalar(r.value() - Rational(4)));
    return out;
  }
  if (const auto *s = ty.as<SumT>()) {
    auto l = probe_elements(s->left, spec);
    auto r = probe_elements(s->right, spec);
    if (l.empty() || r.empty()) return {};
    std::vector<Value> out;
    for (auto &v : l) out.push_back(Value::inl(v));
    for (auto &v : r) out.push_back(Value::inr(v));
    return out;
  }
  if (const auto *s = ty.as<SigmaT>()) {
    auto firsts = probe_elements(s->domain, spec);
    std::vector<Value> out;
    for (std::size_t k = 0; k < firsts.size() && k < 4; ++k) {
      auto seconds = probe_elements(s->codomain(firsts[k]), spec);
      if (seconds.empty()) return {};
      for (std::size_t m = 0; m < seconds.size() && m < 4; ++m)
        out.push_back(Value::pair(firsts[k], seconds[m]));
    }
    return out;
  }
  return {};
}

namespace {

EqualityContext deeper(const EqualityContext &ctx) {
  return EqualityContext{ctx.depth + 1, ctx.spec};
}

Conversion prefix(Conversion c, const std::string &where) {
  if (!c.equal) c.witness = where + (c.witness.empty() ? "" : ", " + c.witness);
  return c;
}

Conversion equal_functions(const SemType &domain, const Family &codomain,
                           const std::string &binder, const Fn &f, const Fn &g,
                           const EqualityContext &ctx) {
  auto args = probe_elements(domain, ctx.spec);
  if (args.empty() && !enumerate(domain)) {
    Value x = Value::var(ctx.depth, binder);
    return prefix(equal_values(codomain(x), f(x), g(x), deeper(ctx)),
                  "at a generic argument");
  }
  for (const auto &x : args) {
    auto c = equal_values(codomain(x), f(x), g(x), ctx);
    if (!c) return prefix(c, "at argument " + show(x));
  }
  return Conversion::yes();
}

Conversion equal_codes(const Value &a, const Value &b,
                       const EqualityContext &ctx);

Conversion equal_neutral(const Neutral &a, const Neutral &b,
                         const EqualityContext &ctx) {
  if (a.v.index() != b.v.index())
    return Conversion::no("different stuck computations");
  auto fresh = [&](int k) { return Value::var(ctx.depth + k, "_"); };
  auto inner = [&](int k) { return EqualityContext{ctx.depth + k, ctx.spec}; };
  return std::visit(
      [&](const auto &x) -> Conversion {
        using T = std::decay_t<decltype(x)>;
        const T &y = std::get<T>(b.v);
        if constexpr (std::is_same_v<T, Neutral::Var>) {
          return x.level == y.level ? Conversion::yes()
                                    : Conversion::no("different variables");
        } else if constexpr (std::is_same_v<T, Neutral::App> ||
                             std::is_same_v<T, Neutral::Happly>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          return c ? equal_untyped(x.arg, y.arg, ctx) : c;
        } else if constexpr (std::is_same_v<T, Neutral::Fst> ||
                             std::is_same_v<T, Neutral::Snd> ||
                             std::is_same_v<T, Neutral::Absurd>) {
          return equal_untyped(x.head, y.head, ctx);
        } else if constexpr (std::is_same_v<T, Neutral::BoolElim>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c) c = equal_untyped(x.on_true, y.on_true, ctx);
          if (c) c = equal_untyped(x.on_false, y.on_false, ctx);
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::NatElim>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c) c = equal_untyped(x.zero, y.zero, ctx);
          if (c)
            c = equal_untyped(x.step(fresh(0), fresh(1)),
                              y.step(fresh(0), fresh(1)), inner(2));
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::SumElim>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c) c = equal_untyped(x.on_inl(fresh(0)), y.on_inl(fresh(0)), inner(1));
          if (c) c = equal_untyped(x.on_inr(fresh(0)), y.on_inr(fresh(0)), inner(1));
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::WElim>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c)
            c = equal_untyped(x.step(fresh(0), fresh(1), fresh(2)),
                              y.step(fresh(0), fresh(1), fresh(2)), inner(3));
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::JElim>) {
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c) c = equal_untyped(x.base(fresh(0)), y.base(fresh(0)), inner(1));
          if (c && x.motive != y.motive) c = Conversion::no("different J motives");
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::PathAt>) {
          if (x.factor != y.factor) return Conversion::no("different path parameters");
          return equal_untyped(x.head, y.head, ctx);
        } else if constexpr (std::is_same_v<T, Neutral::Transport>) {
          if (x.family != y.family) return Conversion::no("different transports");
          auto c = equal_untyped(x.head, y.head, ctx);
          if (c) c = equal_untyped(Value::path(x.along), Value::path(y.along), ctx);
          return c;
        } else if constexpr (std::is_same_v<T, Neutral::Arith>) {
          if (x.op != y.op) return Conversion::no("different arithmetic");
          auto c = equal_untyped(x.lhs, y.lhs, ctx);
          return c ? equal_untyped(x.rhs, y.rhs, ctx) : c;
        }
      },
      a.v);
}

Conversion equal_codes(const Value &a, const Value &b,
                       const EqualityContext &ctx) {
  if (a.is_neutral() || b.is_neutral()) return equal_untyped(a, b, ctx);
  if (a.as<CodeBoolV>() && b.as<CodeBoolV>()) return Conversion::yes();
  const auto *pa = a.as<CodePiV>();
  const auto *pb = b.as<CodePiV>();
  if (pa && pb) {
    auto c = equal_codes(pa->domain, pb->domain, ctx);
    if (!c) return c;
    return equal_functions(
        SemType::el(pa->domain), [](const Value &) { return SemType::universe(); },
        "x", pa->codomain, pb->codomain, ctx);
  }
  const auto *ea = a.as<CodeEqV>();
  const auto *eb = b.as<CodeEqV>();
  if (ea && eb) {
    auto c = equal_codes(ea->domain, eb->domain, ctx);
    SemType carrier = SemType::el(ea->domain);
    if (c) c = equal_values(carrier, ea->lhs, eb->lhs, ctx);
    if (c) c = equal_values(carrier, ea->rhs, eb->rhs, ctx);
    return c;
  }
  return Conversion::no("codes " + show(a) + " and " + show(b) + " differ");
}

}  // namespace

Conversion equal_paths(const SemType &carrier, const ValuePath &p,
                       const ValuePath &q, const EqualityContext &ctx) {
  if (p.shape() != q.shape())
    return Conversion::no("shapes " + p.shape().to_string() + " and " +
                          q.shape().to_string() + " differ");
  for (const auto &i : p.probes(q, ctx.spec)) {
    auto c = equal_values(carrier, p.at(i), q.at(i), ctx);
    if (!c) return prefix(c, "at path parameter " + i.to_string());
  }
  return Conversion::yes();
}

Conversion equal_values(const SemType &ty, const Value &a, const Value &b,
                        const EqualityContext &ctx) {
  if (ty.as<UnitT>() || ty.as<EmptyT>()) return Conversion::yes();
  if (const auto *pi = ty.as<PiT>()) {
    return equal_functions(
        pi->domain, pi->codomain, pi->binder,
        [a](const Value &x) { return apply(a, x); },
        [b](const Value &x) { return apply(b, x); }, ctx);
  }
  if (const auto *sigma = ty.as<SigmaT>()) {
    Value a1 = fst(a);
    auto c = equal_values(sigma->domain, a1, fst(b), ctx);
    if (!c) return prefix(c, "in the first component");
    return prefix(equal_values(sigma->codomain(a1), snd(a), snd(b), ctx),
                  "in the second component");
  }
  if (a.is_neutral() || b.is_neutral()) return equal_untyped(a, b, ctx);
  if (ty.as<BoolT>() || ty.as<NatT>() || ty.as<RingT>())
    return equal_untyped(a, b, ctx);
  if (const auto *sum = ty.as<SumT>()) {
    const auto *la = a.as<InlV>();
    const auto *lb = b.as<InlV>();
    if (la && lb) return prefix(equal_values(sum->left, la->value, lb->value, ctx), "under inl");
    const auto *ra = a.as<InrV>();
    const auto *rb = b.as<InrV>();
    if (ra && rb) return prefix(equal_values(sum->right, ra->value, rb->value, ctx), "under inr");
    return Conversion::no(show(a) + " and " + show(b) + " use different injections");
  }
  if (const auto *w = ty.as<WT>()) {
    const auto *sa = a.as<SupV>();
    const auto *sb = b.as<SupV>();
    if (!sa || !sb) throw SemanticError("expected trees");
    auto c = equal_values(w->label, sa->label, sb->label, ctx);
    if (!c) return prefix(c, "in a tree label");
    return equal_functions(
        w->branch(sa->label), [ty](const Value &) { return ty; }, "b",
        sa->children, sb->children, ctx);
  }
  if (const auto *id = ty.as<IdT>())
    return equal_paths(id->carrier, as_path(a), as_path(b), ctx);
  if (ty.as<UniverseT>()) return equal_codes(a, b, ctx);
  return equal_untyped(a, b, ctx);
}

Conversion equal_untyped(const Value &a, const Value &b,
                         const EqualityContext &ctx) {
  if (a.node().v.index() != b.node().v.index())
    return Conversion::no(show(a) + " and " + show(b) + " differ");
  const auto &va = a.node().v;
  const auto &vb = b.node().v;
  return std::visit(
      [&](const auto &x) -> Conversion {
        using T = std::decay_t<decltype(x)>;
        const T &y = std::get<T>(vb);
        auto differ = [&] {
          return Conversion::no(show(a) + " and " + show(b) + " differ");
        };
        if constexpr (std::is_same_v<T, UnitV> || std::is_same_v<T, CodeBoolV>) {
          return Conversion::yes();
        } else if constexpr (std::is_same_v<T, BoolV> || std::is_same_v<T, NatV> ||
                             std::is_same_v<T, ScalarV>) {
          return x.value == y.value ? Conversion::yes() : differ();
        } else if constexpr (std::is_same_v<T, SuccV>) {
          return equal_untyped(x.pred, y.pred, ctx);
        } else if constexpr (std::is_same_v<T, PairV>) {
          auto c = equal_untyped(x.first, y.first, ctx);
          return c ? equal_untyped(x.second, y.second, ctx) : c;
        } else if constexpr (std::is_same_v<T, InlV> || std::is_same_v<T, InrV>) {
          return equal_untyped(x.value, y.value, ctx);
        } else if constexpr (std::is_same_v<T, LambdaV>) {
          Value v = Value::var(ctx.depth, "_");
          return equal_untyped(x.fn(v), y.fn(v), deeper(ctx));
        } else if constexpr (std::is_same_v<T, PathV>) {
          const auto &p = x.path;
          const auto &q = y.path;
          if (p.shape() != q.shape()) return differ();
          for (const auto &i : p.probes(ctx.spec)) {
            auto c = equal_untyped(p.at(i), q.at(i), ctx);
            if (!c) return prefix(c, "at path parameter " + i.to_string());
          }
          return Conversion::yes();
        } else if constexpr (std::is_same_v<T, SupV>) {
          auto c = equal_untyped(x.label, y.label, ctx);
          Value v = Value::var(ctx.depth, "_");
          return c ? equal_untyped(x.children(v), y.children(v), deeper(ctx)) : c;
        } else if constexpr (std::is_same_v<T, CodePiV>) {
          auto c = equal_untyped(x.domain, y.domain, ctx);
          Value v = Value::var(ctx.depth, "_");
          return c ? equal_untyped(x.codomain(v), y.codomain(v), deeper(ctx)) : c;
        } else if constexpr (std::is_same_v<T, CodeEqV>) {
          auto c = equal_untyped(x.domain, y.domain, ctx);
          if (c) c = equal_untyped(x.lhs, y.lhs, ctx);
          if (c) c = equal_untyped(x.rhs, y.rhs, ctx);
          return c;
        } else if constexpr (std::is_same_v<T, NeutralV>) {
          return equal_neutral(*x.neutral, *y.neutral, ctx);
        }
      },
      va);
}

Conversion equal_types(const SemType &a, const SemType &b,
                       const EqualityContext &ctx) {
  auto mismatch = [&] {
    return Conversion::no("types " + show(a, ctx.depth) + " and " +
                          show(b, ctx.depth) + " differ");
  };
  if (a.node().v.index() != b.node().v.index()) return mismatch();
  auto binders = [&](const SemType &da, const Family &ca, const SemType &db,
                     const Family &cb, const std::string &name) {
    auto c = equal_types(da, db, ctx);
    if (!c) return c;
    Value x = Value::var(ctx.depth, name);
    return equal_types(ca(x), cb(x), deeper(ctx));
  };
  if (const auto *pa = a.as<PiT>()) {
    const auto *pb = b.as<PiT>();
    return binders(pa->domain, pa->codomain, pb->domain, pb->codomain, pa->binder);
  }
  if (const auto *sa = a.as<SigmaT>()) {
    const auto *sb = b.as<SigmaT>();
    return binders(sa->domain, sa->codomain, sb->domain, sb->codomain, sa->binder);
  }
  if (const auto *wa = a.as<WT>()) {
    const auto *wb = b.as<WT>();
    return binders(wa->label, wa->branch, wb->label, wb->branch, wa->binder);
  }
  if (const auto *sa = a.as<SumT>()) {
    const auto *sb = b.as<SumT>();
    auto c = equal_types(sa->left, sb->left, ctx);
    return c ? equal_types(sa->right, sb->right, ctx) : c;
  }
  if (const auto *ia = a.as<IdT>()) {
    const auto *ib = b.as<IdT>();
    auto c = equal_types(ia->carrier, ib->carrier, ctx);
    if (c) c = prefix(equal_values(ia->carrier, ia->lhs, ib->lhs, ctx), "left endpoints differ");
    if (c) c = prefix(equal_values(ia->carrier, ia->rhs, ib->rhs, ctx), "right endpoints differ");
    return c;
  }
  if (const auto *ea = a.as<ElT>()) {
    return equal_untyped(ea->code, b.as<ElT>()->code, ctx);
  }
  if (const auto *ia = a.as<IfT>()) {
    const auto *ib = b.as<IfT>();
    auto c = equal_untyped(ia->cond, ib->cond, ctx);
    if (c) c = equal_types(ia->on_true, ib->on_true, ctx);
    return c ? equal_types(ia->on_false, ib->on_false, ctx) : c;
  }
  return Conversion::yes();
}

// Printing.

namespace {

std::string show_neutral(const Neutral &n) {
  return std::visit(
      [&](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Neutral::Var>) {
          return x.name.empty() ? "#" + std::to_string(x.level) : x.name;
        } else if constexpr (std::is_same_v<T, Neutral::App>) {
          return "(" + show(x.head) + " " + show(x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::Fst>) {
          return "(fst " + show(x.head) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::Snd>) {
          return "(snd " + show(x.head) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::BoolElim>) {
          return "(if " + show(x.head) + " then " + show(x.on_true) + " else " +
                 show(x.on_false) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::NatElim>) {
          return "(natrec " + show(x.head) + " ...)";
        } else if constexpr (std::is_same_v<T, Neutral::SumElim>) {
          return "(case " + show(x.head) + " ...)";
        } else if constexpr (std::is_same_v<T, Neutral::Absurd>) {
          return "(absurd " + show(x.head) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::WElim>) {
          return "(wrec " + show(x.head) + " ...)";
        } else if constexpr (std::is_same_v<T, Neutral::JElim>) {
          return "(J " + show(x.head) + " ...)";
        } else if constexpr (std::is_same_v<T, Neutral::Happly>) {
          return "(happly " + show(x.head) + " " + show(x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::PathAt>) {
          return "(" + show(x.head) + " @ " + x.factor.to_string() + ")";
        } else if constexpr (std::is_same_v<T, Neutral::Transport>) {
          return "(transport " + x.family + " " + show(x.head) + ")";
        } else if constexpr (std::is_same_v<T, Neutral::Arith>) {
          const char *op = x.op == ArithOp::add ? " + " : x.op == ArithOp::mul ? " * " : " - ";
          return "(" + show(x.lhs) + op + show(x.rhs) + ")";
        }
      },
      n.v);
}

}  // namespace

std::string show(const Value &v) {
  return std::visit(
      [&](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnitV>) {
          return "tt";
        } else if constexpr (std::is_same_v<T, BoolV>) {
          return x.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, NatV>) {
          return std::to_string(x.value);
        } else if constexpr (std::is_same_v<T, SuccV>) {
          return "(succ " + show(x.pred) + ")";
        } else if constexpr (std::is_same_v<T, ScalarV>) {
          return x.value.to_string();
        } else if constexpr (std::is_same_v<T, PairV>) {
          return "(" + show(x.first) + ", " + show(x.second) + ")";
        } else if constexpr (std::is_same_v<T, InlV>) {
          return "(inl " + show(x.value) + ")";
        } else if constexpr (std::is_same_v<T, InrV>) {
          return "(inr " + show(x.value) + ")";
        } else if constexpr (std::is_same_v<T, LambdaV>) {
          return "<fun>";
        } else if constexpr (std::is_same_v<T, PathV>) {
          const auto &p = x.path;
          std::string out = "{shape = " + p.shape().to_string() + "; samples = [";
          const int steps = p.shape() == Nonneg(0) ? 0 : 4;
          for (int k = 0; k <= steps; ++k) {
            if (k > 0) out += ", ";
            out += show(p.at(Nonneg(p.shape().value() * Rational(k, steps == 0 ? 1 : steps))));
          }
          return out + "]}";
        } else if constexpr (std::is_same_v<T, SupV>) {
          return "(sup " + show(x.label) + " <fun>)";
        } else if constexpr (std::is_same_v<T, CodeBoolV>) {
          return "#bool";
        } else if constexpr (std::is_same_v<T, CodePiV>) {
          return "(#pi " + show(x.domain) + " <fun>)";
        } else if constexpr (std::is_same_v<T, CodeEqV>) {
          return "(#eq " + show(x.domain) + " " + show(x.lhs) + " " + show(x.rhs) + ")";
        } else if constexpr (std::is_same_v<T, NeutralV>) {
          return show_neutral(*x.neutral);
        }
      },
      v.node().v);
}

namespace {

// 0: anywhere, 1: left of an arrow, 2: argument position.
std::string show_type(const SemType &t, int depth, int prec) {
  auto under = [&](const Family &fam, const std::string &name) {
    return show_type(fam(Value::var(depth, name)), depth + 1, 0);
  };
  auto wrap = [&](int level, std::string s) {
    return prec >= level ? "(" + s + ")" : s;
  };
  return std::visit(
      [&](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BoolT>) {
          return "Bool";
        } else if constexpr (std::is_same_v<T, NatT>) {
          return "Nat";
        } else if constexpr (std::is_same_v<T, EmptyT>) {
          return "Empty";
        } else if constexpr (std::is_same_v<T, UnitT>) {
          return "Unit";
        } else if constexpr (std::is_same_v<T, RingT>) {
          return "R";
        } else if constexpr (std::is_same_v<T, UniverseT>) {
          return "U";
        } else if constexpr (std::is_same_v<T, PiT>) {
          if (x.binder == "_")
            return wrap(1, show_type(x.domain, depth, 1) + " -> " + under(x.codomain, "_"));
          return wrap(1, "(" + x.binder + " : " + show_type(x.domain, depth, 0) + ") -> " +
                             under(x.codomain, x.binder));
        } else if constexpr (std::is_same_v<T, SigmaT>) {
          if (x.binder == "_")
            return wrap(1, show_type(x.domain, depth, 2) + " * " + under(x.codomain, "_"));
          return wrap(1, "(" + x.binder + " : " + show_type(x.domain, depth, 0) + ") * " +
                             under(x.codomain, x.binder));
        } else if constexpr (std::is_same_v<T, SumT>) {
          return wrap(2, show_type(x.left, depth, 2) + " + " + show_type(x.right, depth, 2));
        } else if constexpr (std::is_same_v<T, WT>) {
          return wrap(1, "W (" + x.binder + " : " + show_type(x.label, depth, 0) + "). " +
                             under(x.branch, x.binder));
        } else if constexpr (std::is_same_v<T, IdT>) {
          return wrap(2, "Id " + show_type(x.carrier, depth, 2) + " " + show(x.lhs) + " " +
                             show(x.rhs));
        } else if constexpr (std::is_same_v<T, ElT>) {
          return wrap(2, "El " + show(x.code));
        } else if constexpr (std::is_same_v<T, IfT>) {
          return wrap(1, "if " + show(x.cond) + " then " + show_type(x.on_true, depth, 0) +
                             " else " + show_type(x.on_false, depth, 0));
        }
      },
      t.node().v);
}

}  // namespace

std::string show(const SemType &t, int depth) { return show_type(t, depth, 0); }

}  // namespace mtt
