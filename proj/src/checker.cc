#include "mtt/checker.h"

#include <map>
#include <unordered_map>

#include "mtt/fib.h"
#include "mtt/funext.h"
#include "mtt/parser.h"

namespace mtt {

struct GlobalEntry {
  SemType type;
  Value value;
};

/// Shared between the checker and the closures it evaluates into.
struct ModuleState {
  std::map<std::string, GlobalEntry, std::less<>> globals;
  /// Numerals resolved by the checker: true for Nat, false for R.
  std::unordered_map<const Term *, bool> literal_is_nat;
};

namespace {

/// Persistent evaluation environment; index 0 is the innermost binder.
class Env {
 public:
  Env push(Value v) const {
    Env out;
    out.head_ = std::make_shared<const Node>(Node{std::move(v), head_});
    out.size_ = size_ + 1;
    return out;
  }
  const Value &operator[](int index) const {
    const Node *n = head_.get();
    for (int k = 0; k < index; ++k) n = n->next.get();
    return n->value;
  }
  int size() const { return size_; }

 private:
  struct Node {
    Value value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  int size_ = 0;
};

class Evaluator {
 public:
  explicit Evaluator(std::shared_ptr<const ModuleState> state)
      : state_(std::move(state)) {}

  Value eval(const TermPtr &t, const Env &env) const { return eval(*t, env); }

  /// Evaluates under the binders of `s`, binding `vals` innermost last.
  Value under(const Scoped &s, const Env &env, std::initializer_list<Value> vals) const {
    Env e = env;
    for (const auto &v : vals) e = e.push(v);
    return eval(s.term, e);
  }

  Value eval(const Term &t, const Env &env) const {
    const Evaluator self = *this;
    switch (t.tag) {
      case Tag::Var:
        return env[t.index];
      case Tag::Global:
        return state_->globals.at(t.name).value;
      case Tag::Lam: {
        Scoped body = t.kids[0];
        return Value::lambda([self, body, env](const Value &x) {
          return self.under(body, env, {x});
        });
      }
      case Tag::App:
        return apply(eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::Let:
        return under(t.kids[2], env, {eval(t.kid(1), env)});
      case Tag::Ann:
        return eval(t.kid(0), env);
      case Tag::Pair:
        return Value::pair(eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::Fst:
        return fst(eval(t.kid(0), env));
      case Tag::Snd:
        return snd(eval(t.kid(0), env));
      case Tag::Inl:
        return Value::inl(eval(t.kid(0), env));
      case Tag::Inr:
        return Value::inr(eval(t.kid(0), env));
      case Tag::Case: {
        Scoped l = t.kids[2], r = t.kids[3];
        return sum_elim(
            eval(t.kid(1), env),
            [self, l, env](const Value &a) { return self.under(l, env, {a}); },
            [self, r, env](const Value &b) { return self.under(r, env, {b}); });
      }
      case Tag::True:
        return Value::boolean(true);
      case Tag::False:
        return Value::boolean(false);
      case Tag::If:
        return bool_elim(eval(t.kid(1), env), eval(t.kid(2), env), eval(t.kid(3), env));
      case Tag::Tt:
        return Value::unit();
      case Tag::Zero:
        return Value::nat(0);
      case Tag::Succ:
        return Value::succ(eval(t.kid(0), env));
      case Tag::Num: {
        Rational r = Rational::parse(t.name);
        auto it = state_->literal_is_nat.find(&t);
        if (it != state_->literal_is_nat.end() && it->second)
          return Value::nat(r.numerator().get_ui());
        return Value::scalar(r);
      }
      case Tag::Plus:
        return arith(ArithOp::add, eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::Times:
        return arith(ArithOp::mul, eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::Minus:
        return arith(ArithOp::sub, eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::Natrec: {
        Scoped step = t.kids[3];
        return nat_elim(eval(t.kid(1), env), eval(t.kid(2), env),
                        [self, step, env](const Value &k, const Value &ih) {
                          return self.under(step, env, {k, ih});
                        });
      }
      case Tag::Sup: {
        Value f = eval(t.kid(1), env);
        return Value::sup(eval(t.kid(0), env),
                          [f](const Value &b) { return apply(f, b); });
      }
      case Tag::Wrec: {
        Scoped step = t.kids[2];
        return w_elim(eval(t.kid(1), env),
                      [self, step, env](const Value &a, const Value &f, const Value &ih) {
                        return self.under(step, env, {a, f, ih});
                      });
      }
      case Tag::Absurd:
        return absurd(eval(t.kid(1), env));
      case Tag::Refl:
        return Value::path(idp(eval(t.kid(0), env)));
      case Tag::J:
        return eval_j(t, env);
      case Tag::Funext:
        return funext_value(eval(t.kid(0), env));
      case Tag::Happly:
        return happly_value(eval(t.kid(0), env), eval(t.kid(1), env));
      case Tag::CodeBool:
        return Value::code_bool();
      case Tag::CodePi: {
        Scoped cod = t.kids[1];
        return Value::code_pi(eval(t.kid(0), env), [self, cod, env](const Value &x) {
          return self.under(cod, env, {x});
        });
      }
      case Tag::CodeEq:
        return Value::code_eq(eval(t.kid(0), env), eval(t.kid(1), env),
                              eval(t.kid(2), env));
      default:
        throw SemanticError(print(t) + " is a type, not a term");
    }
  }

  Value eval_j(const Term &t, const Env &env) const {
    const Evaluator self = *this;
    Scoped motive = t.kids[0];
    Scoped base = t.kids[1];
    Value p = eval(t.kid(2), env);
    Fn beta = [self, base, env](const Value &a) { return self.under(base, env, {a}); };
    const auto *path = p.as<PathV>();
    if (!path) {
      if (!p.is_neutral()) throw SemanticError("J on a " + p.kind_name());
      return Value::neutral(Neutral{Neutral::JElim{p, beta, print(*motive.term)}});
    }
    // The motive lives over Γ.A.A.Id with Γ fixed to the closure
    // environment, so context points are (((tt, a1), a2), q).
    Family fam = [self, motive, env](const Value &pt) {
      return self.eval_type_under(motive, env,
                                  {snd(fst(fst(pt))), snd(fst(pt)), snd(pt)});
    };
    Fibration b = type_fibration(fam, "J");
    const ValuePath &q = path->path;
    return j_elim(b, [beta](const Value &, const Value &a) { return beta(a); },
                  Value::unit(), q.source(), q.target(), q);
  }

  SemType eval_type_under(const Scoped &s, const Env &env,
                          std::initializer_list<Value> vals) const {
    Env e = env;
    for (const auto &v : vals) e = e.push(v);
    return eval_type(*s.term, e);
  }

  SemType eval_type(const TermPtr &t, const Env &env) const { return eval_type(*t, env); }

  SemType eval_type(const Term &t, const Env &env) const {
    const Evaluator self = *this;
    auto family = [self, env](const Scoped &s) -> Family {
      return [self, s, env](const Value &x) { return self.eval_type_under(s, env, {x}); };
    };
    switch (t.tag) {
      case Tag::Bool:
        return SemType::boolean();
      case Tag::Nat:
        return SemType::nat();
      case Tag::Empty:
        return SemType::empty();
      case Tag::Unit:
        return SemType::unit();
      case Tag::R:
        return SemType::ring();
      case Tag::U:
        return SemType::universe();
      case Tag::Pi:
        return SemType::pi(eval_type(t.kid(0), env), family(t.kids[1]), t.kids[1].binders[0]);
      case Tag::Sigma:
        return SemType::sigma(eval_type(t.kid(0), env), family(t.kids[1]),
                              t.kids[1].binders[0]);
      case Tag::W:
        return SemType::w(eval_type(t.kid(0), env), family(t.kids[1]), t.kids[1].binders[0]);
      case Tag::Plus:
        return SemType::sum(eval_type(t.kid(0), env), eval_type(t.kid(1), env));
      case Tag::Times:
        return SemType::product(eval_type(t.kid(0), env), eval_type(t.kid(1), env));
      case Tag::Id:
        return SemType::id(eval_type(t.kid(0), env), eval(t.kid(1), env),
                           eval(t.kid(2), env));
      case Tag::El:
        return SemType::el(eval(t.kid(0), env));
      case Tag::If:
        return SemType::cases(eval(t.kid(1), env), eval_type(t.kid(2), env),
                              eval_type(t.kid(3), env));
      default:
        throw SemanticError(print(t) + " is not a type");
    }
  }

 private:
  std::shared_ptr<const ModuleState> state_;
};

/// Typing context: a type and a value per bound variable, by level.
struct Ctx {
  Env env;
  std::vector<SemType> types;
  std::vector<std::string> names;

  int depth() const { return static_cast<int>(types.size()); }

  Ctx bind(const std::string &name, const SemType &ty) const {
    return define(name, ty, Value::var(depth(), name));
  }
  Ctx define(const std::string &name, const SemType &ty, const Value &v) const {
    Ctx out = *this;
    out.env = env.push(v);
    out.types.push_back(ty);
    out.names.push_back(name);
    return out;
  }
  Value var(int index) const { return env[index]; }
};

class Checker {
 public:
  explicit Checker(std::shared_ptr<ModuleState> state)
      : state_(state), ev_(std::move(state)) {}

  const Evaluator &evaluator() const { return ev_; }

  // Types.

  void check_type(const Ctx &ctx, const Term &t) {
    switch (t.tag) {
      case Tag::Bool:
      case Tag::Nat:
      case Tag::Empty:
      case Tag::Unit:
      case Tag::R:
      case Tag::U:
        return;
      case Tag::Pi:
      case Tag::Sigma:
      case Tag::W: {
        check_type(ctx, *t.kid(0));
        SemType dom = ev_.eval_type(t.kid(0), ctx.env);
        check_type(ctx.bind(t.kids[1].binders[0], dom), *t.kid(1));
        return;
      }
      case Tag::Plus:
      case Tag::Times:
        check_type(ctx, *t.kid(0));
        check_type(ctx, *t.kid(1));
        return;
      case Tag::Id: {
        check_type(ctx, *t.kid(0));
        SemType carrier = ev_.eval_type(t.kid(0), ctx.env);
        check(ctx, *t.kid(1), carrier);
        check(ctx, *t.kid(2), carrier);
        return;
      }
      case Tag::El:
        check(ctx, *t.kid(0), SemType::universe());
        return;
      case Tag::If:
        if (t.kids[0].term) throw TypeError(t.span, "a type-level if takes no motive");
        check(ctx, *t.kid(1), SemType::boolean());
        check_type(ctx, *t.kid(2));
        check_type(ctx, *t.kid(3));
        return;
      default:
        throw TypeError(t.span, "expected a type, found " + print(t));
    }
  }

  SemType type_of(const Ctx &ctx, const Term &t) {
    check_type(ctx, t);
    return ev_.eval_type(t, ctx.env);
  }

  // Terms.

  void check(const Ctx &ctx, const Term &t, const SemType &ty) {
    switch (t.tag) {
      case Tag::Lam: {
        const auto *pi = ty.as<PiT>();
        if (!pi) throw mismatch(ctx, t, "a function", ty);
        Ctx inner = ctx.bind(t.kids[0].binders[0], pi->domain);
        check(inner, *t.kid(0), pi->codomain(inner.var(0)));
        return;
      }
      case Tag::Pair: {
        const auto *sigma = ty.as<SigmaT>();
        if (!sigma) throw mismatch(ctx, t, "a pair", ty);
        check(ctx, *t.kid(0), sigma->domain);
        check(ctx, *t.kid(1), sigma->codomain(eval(ctx, t.kid(0))));
        return;
      }
      case Tag::Inl:
      case Tag::Inr: {
        const auto *sum = ty.as<SumT>();
        if (!sum) throw mismatch(ctx, t, "an injection", ty);
        check(ctx, *t.kid(0), t.tag == Tag::Inl ? sum->left : sum->right);
        return;
      }
      case Tag::Sup: {
        const auto *w = ty.as<WT>();
        if (!w) throw mismatch(ctx, t, "a tree", ty);
        check(ctx, *t.kid(0), w->label);
        check(ctx, *t.kid(1), SemType::arrow(w->branch(eval(ctx, t.kid(0))), ty));
        return;
      }
      case Tag::Refl: {
        const auto *id = ty.as<IdT>();
        if (!id) throw mismatch(ctx, t, "refl", ty);
        check(ctx, *t.kid(0), id->carrier);
        Value a = eval(ctx, t.kid(0));
        for (const Value *end : {&id->lhs, &id->rhs}) {
          auto c = equal_values(id->carrier, a, *end, eq_ctx(ctx));
          if (!c)
            throw TypeError(t.span, print(t) + " does not have type " +
                                        show(ty, ctx.depth()) + ": " + show(a) +
                                        " is not " + show(*end) + why(c));
        }
        return;
      }
      case Tag::Funext: {
        const auto *id = ty.as<IdT>();
        const PiT *pi = id ? id->carrier.as<PiT>() : nullptr;
        if (!pi) throw mismatch(ctx, t, "funext", ty);
        Value f = id->lhs, g = id->rhs;
        Family cod = pi->codomain;
        SemType homotopy = SemType::pi(
            pi->domain,
            [cod, f, g](const Value &x) { return SemType::id(cod(x), apply(f, x), apply(g, x)); },
            pi->binder == "_" ? "x" : pi->binder);
        check(ctx, *t.kid(0), homotopy);
        return;
      }
      case Tag::If:
        if (!t.kids[0].term) {
          check(ctx, *t.kid(1), SemType::boolean());
          check(ctx, *t.kid(2), ty);
          check(ctx, *t.kid(3), ty);
          return;
        }
        break;
      case Tag::Case:
        if (!t.kids[0].term) {
          const SumT &sum = infer_sum(ctx, *t.kid(1));
          check(ctx.bind(t.kids[2].binders[0], sum.left), *t.kid(2), ty);
          check(ctx.bind(t.kids[3].binders[0], sum.right), *t.kid(3), ty);
          return;
        }
        break;
      case Tag::Natrec:
        if (!t.kids[0].term) {
          check(ctx, *t.kid(1), SemType::nat());
          check(ctx, *t.kid(2), ty);
          const auto &bs = t.kids[3].binders;
          check(ctx.bind(bs[0], SemType::nat()).bind(bs[1], ty), *t.kid(3), ty);
          return;
        }
        break;
      case Tag::Wrec:
        if (!t.kids[0].term) {
          check_wrec_step(ctx, t, [ty](const Value &) { return ty; });
          return;
        }
        break;
      case Tag::Absurd:
        if (!t.kids[0].term) {
          check(ctx, *t.kid(1), SemType::empty());
          return;
        }
        break;
      case Tag::Num:
        if (ty.as<NatT>()) {
          if (!Rational::parse(t.name).is_integer())
            throw TypeError(t.span, t.name + " is not a natural number");
          state_->literal_is_nat[&t] = true;
          return;
        }
        if (ty.as<RingT>()) {
          state_->literal_is_nat[&t] = false;
          return;
        }
        break;
      case Tag::Let: {
        SemType a = type_of(ctx, *t.kid(0));
        check(ctx, *t.kid(1), a);
        check(ctx.define(t.kids[2].binders[0], a, eval(ctx, t.kid(1))), *t.kid(2), ty);
        return;
      }
      default:
        break;
    }
    SemType got = infer(ctx, t);
    auto c = equal_types(got, ty, eq_ctx(ctx));
    if (!c)
      throw TypeError(t.span, "type mismatch: expected " + show(ty, ctx.depth()) +
                                  ", found " + show(got, ctx.depth()) + why(c));
  }

  SemType infer(const Ctx &ctx, const Term &t) {
    switch (t.tag) {
      case Tag::Var:
        return ctx.types[ctx.depth() - 1 - t.index];
      case Tag::Global: {
        auto it = state_->globals.find(t.name);
        if (it == state_->globals.end())
          throw TypeError(t.span, "unknown name '" + t.name + "'");
        return it->second.type;
      }
      case Tag::App: {
        SemType fty = infer(ctx, *t.kid(0));
        const auto *pi = fty.as<PiT>();
        if (!pi)
          throw TypeError(t.kid(0)->span, print(*t.kid(0)) + " is not a function; it has type " +
                                              show(fty, ctx.depth()));
        check(ctx, *t.kid(1), pi->domain);
        return pi->codomain(eval(ctx, t.kid(1)));
      }
      case Tag::Ann: {
        SemType ty = type_of(ctx, *t.kid(1));
        check(ctx, *t.kid(0), ty);
        return ty;
      }
      case Tag::Let: {
        SemType a = type_of(ctx, *t.kid(0));
        check(ctx, *t.kid(1), a);
        return infer(ctx.define(t.kids[2].binders[0], a, eval(ctx, t.kid(1))), *t.kid(2));
      }
      case Tag::Fst:
      case Tag::Snd: {
        SemType pty = infer(ctx, *t.kid(0));
        const auto *sigma = pty.as<SigmaT>();
        if (!sigma)
          throw TypeError(t.kid(0)->span, print(*t.kid(0)) + " is not a pair; it has type " +
                                              show(pty, ctx.depth()));
        if (t.tag == Tag::Fst) return sigma->domain;
        return sigma->codomain(fst(eval(ctx, t.kid(0))));
      }
      case Tag::Pair: {
        SemType a = infer(ctx, *t.kid(0));
        SemType b = infer(ctx, *t.kid(1));
        return SemType::product(a, b);
      }
      case Tag::True:
      case Tag::False:
        return SemType::boolean();
      case Tag::Tt:
        return SemType::unit();
      case Tag::Zero:
        return SemType::nat();
      case Tag::Succ:
        check(ctx, *t.kid(0), SemType::nat());
        return SemType::nat();
      case Tag::Num: {
        bool nat = Rational::parse(t.name).is_integer();
        state_->literal_is_nat[&t] = nat;
        return nat ? SemType::nat() : SemType::ring();
      }
      case Tag::Plus:
      case Tag::Times:
      case Tag::Minus:
        check(ctx, *t.kid(0), SemType::ring());
        check(ctx, *t.kid(1), SemType::ring());
        return SemType::ring();
      case Tag::If: {
        check(ctx, *t.kid(1), SemType::boolean());
        if (!t.kids[0].term) {
          SemType ty = infer(ctx, *t.kid(2));
          check(ctx, *t.kid(3), ty);
          return ty;
        }
        check_type(ctx.bind(t.kids[0].binders[0], SemType::boolean()), *t.kid(0));
        Family p = motive_family(ctx, t.kids[0]);
        check(ctx, *t.kid(2), p(Value::boolean(true)));
        check(ctx, *t.kid(3), p(Value::boolean(false)));
        return p(eval(ctx, t.kid(1)));
      }
      case Tag::Case:
        return infer_case(ctx, t);
      case Tag::Natrec:
        return infer_natrec(ctx, t);
      case Tag::Wrec:
        return infer_wrec(ctx, t);
      case Tag::Absurd: {
        check(ctx, *t.kid(1), SemType::empty());
        if (!t.kids[0].term) throw cannot_infer(t);
        return motive_at(ctx, t.kids[0], SemType::empty(), eval(ctx, t.kid(1)));
      }
      case Tag::Refl: {
        SemType a = infer(ctx, *t.kid(0));
        Value v = eval(ctx, t.kid(0));
        return SemType::id(a, v, v);
      }
      case Tag::J:
        return infer_j(ctx, t);
      case Tag::Happly: {
        SemType pty = infer(ctx, *t.kid(0));
        const auto *id = pty.as<IdT>();
        const PiT *pi = id ? id->carrier.as<PiT>() : nullptr;
        if (!pi)
          throw TypeError(t.kid(0)->span, print(*t.kid(0)) +
                                              " is not a path between functions; it has type " +
                                              show(pty, ctx.depth()));
        check(ctx, *t.kid(1), pi->domain);
        Value a = eval(ctx, t.kid(1));
        return SemType::id(pi->codomain(a), apply(id->lhs, a), apply(id->rhs, a));
      }
      case Tag::CodeBool:
        return SemType::universe();
      case Tag::CodePi: {
        check(ctx, *t.kid(0), SemType::universe());
        SemType dom = SemType::el(eval(ctx, t.kid(0)));
        check(ctx.bind(t.kids[1].binders[0], dom), *t.kid(1), SemType::universe());
        return SemType::universe();
      }
      case Tag::CodeEq: {
        check(ctx, *t.kid(0), SemType::universe());
        SemType dom = SemType::el(eval(ctx, t.kid(0)));
        check(ctx, *t.kid(1), dom);
        check(ctx, *t.kid(2), dom);
        return SemType::universe();
      }
      case Tag::Lam:
      case Tag::Inl:
      case Tag::Inr:
      case Tag::Sup:
      case Tag::Funext:
        throw cannot_infer(t);
      default:
        throw TypeError(t.span, print(t) + " is a type, not a term");
    }
  }

  Value eval(const Ctx &ctx, const TermPtr &t) const { return ev_.eval(t, ctx.env); }

 private:
  static EqualityContext eq_ctx(const Ctx &ctx) { return EqualityContext{ctx.depth(), {}}; }

  static std::string why(const Conversion &c) {
    return c.witness.empty() ? "" : " (" + c.witness + ")";
  }

  TypeError mismatch(const Ctx &ctx, const Term &t, const std::string &what,
                     const SemType &ty) const {
    return TypeError(t.span, what + " cannot have type " + show(ty, ctx.depth()));
  }

  static TypeError cannot_infer(const Term &t) {
    return TypeError(t.span, "cannot infer the type of " + print(t) +
                                 "; add a type annotation or a motive");
  }

  /// Checks a one-binder motive over `over` and returns it at `at`.
  SemType motive_at(const Ctx &ctx, const Scoped &m, const SemType &over, const Value &at) {
    check_type(ctx.bind(m.binders[0], over), *m.term);
    return ev_.eval_type_under(m, ctx.env, {at});
  }

  Family motive_family(const Ctx &ctx, const Scoped &m) const {
    Evaluator ev = ev_;
    Env env = ctx.env;
    return [ev, m, env](const Value &x) { return ev.eval_type_under(m, env, {x}); };
  }

  const SumT &infer_sum(const Ctx &ctx, const Term &s) {
    scratch_ = infer(ctx, s);
    const auto *sum = scratch_.as<SumT>();
    if (!sum)
      throw TypeError(s.span, print(s) + " is not a sum; it has type " +
                                  show(scratch_, ctx.depth()));
    return *sum;
  }

  SemType infer_case(const Ctx &ctx, const Term &t) {
    SumT sum = infer_sum(ctx, *t.kid(1));
    if (!t.kids[0].term) throw cannot_infer(t);
    SemType whole = SemType::sum(sum.left, sum.right);
    check_type(ctx.bind(t.kids[0].binders[0], whole), *t.kid(0));
    Family p = motive_family(ctx, t.kids[0]);
    Ctx l = ctx.bind(t.kids[2].binders[0], sum.left);
    check(l, *t.kid(2), p(Value::inl(l.var(0))));
    Ctx r = ctx.bind(t.kids[3].binders[0], sum.right);
    check(r, *t.kid(3), p(Value::inr(r.var(0))));
    return p(eval(ctx, t.kid(1)));
  }

  SemType infer_natrec(const Ctx &ctx, const Term &t) {
    check(ctx, *t.kid(1), SemType::nat());
    const auto &bs = t.kids[3].binders;
    if (!t.kids[0].term) {
      SemType ty = infer(ctx, *t.kid(2));
      check(ctx.bind(bs[0], SemType::nat()).bind(bs[1], ty), *t.kid(3), ty);
      return ty;
    }
    check_type(ctx.bind(t.kids[0].binders[0], SemType::nat()), *t.kid(0));
    Family p = motive_family(ctx, t.kids[0]);
    check(ctx, *t.kid(2), p(Value::nat(0)));
    Ctx k = ctx.bind(bs[0], SemType::nat());
    Value kv = k.var(0);
    Ctx ih = k.bind(bs[1], p(kv));
    check(ih, *t.kid(3), p(Value::succ(kv)));
    return p(eval(ctx, t.kid(1)));
  }

  /// Checks the step of wrec against the motive p.
  void check_wrec_step(const Ctx &ctx, const Term &t, const Family &p) {
    SemType wty = infer(ctx, *t.kid(1));
    const auto *w = wty.as<WT>();
    if (!w)
      throw TypeError(t.kid(1)->span, print(*t.kid(1)) + " is not a tree; it has type " +
                                          show(wty, ctx.depth()));
    const auto &bs = t.kids[2].binders;
    Ctx a = ctx.bind(bs[0], w->label);
    Value av = a.var(0);
    SemType branch = w->branch(av);
    Ctx f = a.bind(bs[1], SemType::arrow(branch, wty));
    Value fv = f.var(0);
    Ctx ih = f.bind(bs[2], SemType::pi(branch, [p, fv](const Value &b) {
      return p(apply(fv, b));
    }, "b"));
    check(ih, *t.kid(2), p(Value::sup(av, [fv](const Value &b) { return apply(fv, b); })));
  }

  SemType infer_wrec(const Ctx &ctx, const Term &t) {
    if (!t.kids[0].term) throw cannot_infer(t);
    SemType wty = infer(ctx, *t.kid(1));
    check_type(ctx.bind(t.kids[0].binders[0], wty), *t.kid(0));
    Family p = motive_family(ctx, t.kids[0]);
    check_wrec_step(ctx, t, p);
    return p(eval(ctx, t.kid(1)));
  }

  SemType infer_j(const Ctx &ctx, const Term &t) {
    SemType pty = infer(ctx, *t.kid(2));
    const auto *id = pty.as<IdT>();
    if (!id)
      throw TypeError(t.kid(2)->span, print(*t.kid(2)) + " is not a path; it has type " +
                                          show(pty, ctx.depth()));
    SemType carrier = id->carrier;
    const auto &ms = t.kids[0].binders;
    Ctx m1 = ctx.bind(ms[0], carrier);
    Ctx m2 = m1.bind(ms[1], carrier);
    Ctx m3 = m2.bind(ms[2], SemType::id(carrier, m2.var(1), m2.var(0)));
    check_type(m3, *t.kid(0));
    Ctx base = ctx.bind(t.kids[1].binders[0], carrier);
    Value a = base.var(0);
    check(base, *t.kid(1),
          ev_.eval_type_under(t.kids[0], ctx.env, {a, a, Value::path(idp(a))}));
    return ev_.eval_type_under(t.kids[0], ctx.env, {id->lhs, id->rhs, eval(ctx, t.kid(2))});
  }

  std::shared_ptr<ModuleState> state_;
  Evaluator ev_;
  SemType scratch_;
};

/// Runs `f`, turning semantic failures into diagnostics at `span`.
template <typename F>
auto guarded(Span span, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const SemanticError &e) {
    throw TypeError(span, std::string("evaluation failed: ") + e.what());
  }
}

}  // namespace

CheckedModule::CheckedModule() : state_(std::make_shared<ModuleState>()) {}

const CheckedDefinition *CheckedModule::find(std::string_view name) const {
  for (const auto &d : defs_)
    if (d.name == name) return &d;
  return nullptr;
}

CheckedModule check_program(const std::vector<Definition> &defs) {
  CheckedModule out;
  Checker checker(out.state_);
  for (const auto &d : defs) {
    if (out.state_->globals.contains(d.name))
      throw TypeError(d.span, "'" + d.name + "' is already defined");
    Ctx ctx;
    SemType ty = guarded(d.span, [&] {
      if (d.type) {
        SemType t = checker.type_of(ctx, *d.type);
        checker.check(ctx, *d.body, t);
        return t;
      }
      return checker.infer(ctx, *d.body);
    });
    Value v = guarded(d.span, [&] { return checker.eval(ctx, d.body); });
    out.state_->globals.emplace(d.name, GlobalEntry{ty, v});
    out.defs_.push_back(CheckedDefinition{d.name, ty, v, d});
  }
  return out;
}

CheckedModule check_source(std::string_view source) {
  return check_program(parse_program(source));
}

Evaluated evaluate(const TermPtr &term, const CheckedModule *module) {
  auto state = std::make_shared<ModuleState>();
  if (module) *state = *module->state_;
  Checker checker(state);
  Ctx ctx;
  SemType ty = guarded(term->span, [&] { return checker.infer(ctx, *term); });
  Value v = guarded(term->span, [&] { return checker.eval(ctx, term); });
  return Evaluated{ty, v};
}

Evaluated evaluate(std::string_view source, const CheckedModule *module) {
  return evaluate(parse_term(source), module);
}

}  // namespace mtt
