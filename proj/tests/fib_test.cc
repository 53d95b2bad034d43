#include <doctest.h>

#include "mtt/fib.h"
#include "mtt/gen.h"
#include "mtt/piecewise.h"

using mtt::Fibration;
using mtt::Nonneg;
using mtt::Rational;
using mtt::SemType;
using mtt::Value;
using mtt::ValuePath;

namespace {

Value t() { return Value::boolean(true); }
Value f() { return Value::boolean(false); }
Value r(const Rational &x) { return Value::scalar(x); }

/// Bool fibers whose transport flips exactly when the path has distinct
/// endpoints; a lawful but non-constant tap structure.
Fibration flip_fib() {
  return Fibration{
      [](const Value &) { return SemType::boolean(); },
      [](const ValuePath &p, const Value &b) {
        bool moved = !mtt::equal_untyped(p.source(), p.target());
        return Value::boolean(mtt::as_bool(b) != moved);
      },
      "flip"};
}

/// The step path true ~ false of shape 1.
ValuePath step() {
  return mtt::babs<Value>(Nonneg(1), [](const Nonneg &i) {
    return Value::boolean(i == Nonneg(0));
  });
}

ValuePath scalar_path(const mtt::PiecewisePath &p) {
  return mtt::map([](const Rational &x) { return r(x); }, p.to_path());
}

bool same(const Value &a, const Value &b) {
  return static_cast<bool>(mtt::equal_untyped(a, b));
}

std::vector<Value> bool_functions() {
  std::vector<Value> out;
  for (int k = 0; k < 4; ++k)
    out.push_back(Value::lambda([k](const Value &x) {
      return Value::boolean(mtt::as_bool(x) ? (k & 1) : (k & 2));
    }));
  return out;
}

}  // namespace

TEST_CASE("reindex and constant families") {
  auto bools = mtt::const_fib(SemType::boolean());
  auto moved = mtt::reindex(bools, [](const Value &x) { return Value::pair(x, x); });
  CHECK(same(moved.transp(step(), t()), t()));
  CHECK(same(bools.transp(step(), Value::nat(7)), Value::nat(7)));
  auto flip = flip_fib();
  auto id = mtt::reindex(flip, [](const Value &x) { return x; });
  CHECK(same(id.transp(step(), t()), f()));
  CHECK(mtt::enumerate(mtt::const_fib(SemType::empty()).fam(t()))->empty());
}

TEST_CASE("lift and snd_path") {
  auto flip = flip_fib();
  auto p = step();
  auto lifted = mtt::lift(flip, p, t());
  CHECK(same(lifted.source(), Value::pair(t(), t())));
  CHECK(same(lifted.target(), Value::pair(f(), f())));
  auto l0 = mtt::lift(flip, mtt::idp(t()), f());
  CHECK(l0.shape() == Nonneg(0));
  CHECK(same(l0.at(Nonneg(3)), Value::pair(t(), f())));

  auto s = mtt::snd_path(flip, lifted);
  CHECK(s.shape() == p.shape());
  CHECK(same(s.target(), flip.transp(p, t())));
  CHECK(same(s.source(), f()));
  auto s0 = mtt::snd_path(flip, mtt::idp(Value::pair(t(), t())));
  CHECK(s0.shape() == Nonneg(0));
  CHECK(same(s0.source(), t()));
}

TEST_CASE("sigma transport") {
  auto a = mtt::const_fib(SemType::nat());
  auto b = mtt::const_fib(SemType::boolean());
  auto sig = mtt::sigma_fib(a, b);
  Value pair = Value::pair(Value::nat(2), t());
  CHECK(same(sig.transp(step(), pair), pair));
  auto flipped = mtt::sigma_fib(flip_fib(), flip_fib());
  Value out = flipped.transp(step(), Value::pair(t(), t()));
  CHECK(same(mtt::fst(out), f()));
  // The lift runs from (true, true) to (false, false).
  CHECK(same(mtt::snd(out), f()));
}

TEST_CASE("pi transport against a hand evaluation") {
  auto flip = flip_fib();
  auto pi = mtt::pi_fib(flip, flip);
  for (const auto &g : bool_functions()) {
    Value moved = pi.transp(step(), g);
    for (bool x : {true, false}) {
      // rev p flips x; the reversed lift runs from (true, !x) to
      // (false, x), so the outer transport flips the result once.
      Value expected = Value::boolean(!mtt::as_bool(mtt::apply(g, Value::boolean(!x))));
      CHECK(same(mtt::apply(moved, Value::boolean(x)), expected));
    }
    Value still = pi.transp(mtt::idp(t()), g);
    for (bool x : {true, false})
      CHECK(same(mtt::apply(still, Value::boolean(x)), mtt::apply(g, Value::boolean(x))));
  }
}

TEST_CASE("sum transport keeps injections") {
  auto sum = mtt::sum_fib(flip_fib(), mtt::const_fib(SemType::nat()));
  Value l = sum.transp(step(), Value::inl(t()));
  REQUIRE(l.as<mtt::InlV>());
  CHECK(same(l, Value::inl(f())));
  Value rr = sum.transp(step(), Value::inr(Value::nat(4)));
  CHECK(same(rr, Value::inr(Value::nat(4))));
  Value x = Value::var(0, "x");
  CHECK(sum.transp(step(), x).is_neutral());
  CHECK(same(sum.transp(mtt::idp(t()), x), x));
}

TEST_CASE("W transport") {
  auto labels = mtt::const_fib(SemType::boolean());
  // Branching: true nodes have two children, false nodes are leaves.
  Fibration branch{[](const Value &xa) {
                     return mtt::as_bool(mtt::snd(xa)) ? SemType::boolean()
                                                       : SemType::empty();
                   },
                   [](const ValuePath &, const Value &v) { return v; }, "B"};
  auto w = mtt::w_fib(labels, branch);
  auto leaf = Value::sup(f(), [](const Value &e) { return mtt::absurd(e); });
  auto node = Value::sup(t(), [leaf](const Value &) { return leaf; });
  auto root = Value::sup(t(), [node](const Value &) { return node; });
  SemType ty = w.fam(t());
  CHECK(mtt::equal_values(ty, w.transp(step(), root), root));
  CHECK(mtt::equal_values(ty, w.transp(mtt::idp(t()), root), root));
  CHECK(mtt::equal_values(ty, w.transp(step(), leaf), leaf));
  auto other = Value::sup(t(), [leaf, node](const Value &b) {
    return mtt::as_bool(b) ? leaf : node;
  });
  CHECK_FALSE(mtt::equal_values(ty, other, root));
}

TEST_CASE("Id transport in a constant context") {
  mtt::Gen gen(7);
  auto reals = mtt::const_fib(SemType::ring());
  auto ids = mtt::id_fib(reals);
  for (int n = 0; n < 20; ++n) {
    auto a1 = gen.path_from(gen.nonneg().value() + Rational(30), 2);
    auto a2 = gen.path_from(gen.nonneg().value() + Rational(30), 2);
    auto q = gen.path_from(a1.source(), 2);
    q = mtt::piecewise::compose(mtt::PiecewisePath::polynomial(
                                    Nonneg(1), mtt::Polynomial({q.target(),
                                                                a2.source() - q.target()})),
                                q);
    // Context paths share a shape, so pad the shorter endpoint path.
    Nonneg s = a1.shape() < a2.shape() ? a2.shape() : a1.shape();
    auto pad = [&](const mtt::PiecewisePath &x) {
      if (x.shape() == s) return x;
      return mtt::piecewise::compose(
          mtt::PiecewisePath::polynomial(Nonneg(s.value() - x.shape().value()),
                                         mtt::Polynomial::constant(x.target())),
          x);
    };
    auto b1 = pad(a1);
    auto b2 = pad(a2);
    ValuePath p(s, [b1, b2](const Nonneg &i) {
      return Value::pair(Value::pair(Value::unit(), r(b1.at(i))), r(b2.at(i)));
    });
    Value moved = ids.transp(p, Value::path(scalar_path(q)));
    auto oracle = mtt::piecewise::compose(b2, mtt::piecewise::compose(q, mtt::piecewise::reverse(b1)));
    const auto &got = mtt::as_path(moved);
    REQUIRE(got.shape() == oracle.shape());
    for (const auto &i : got.probes({}))
      CHECK(same(got.at(i), r(oracle.at(i))));
    Value pt = Value::pair(Value::pair(Value::unit(), r(q.source())), r(q.target()));
    Value still = ids.transp(mtt::idp(pt), Value::path(scalar_path(q)));
    CHECK(mtt::equal_paths(SemType::ring(), mtt::as_path(still), scalar_path(q)));
  }
}

TEST_CASE("refl and J") {
  Value x = Value::unit();
  Value a = r(Rational(2));
  Value rf = mtt::refl(x, a);
  CHECK(mtt::as_path(mtt::snd(rf)).shape() == Nonneg(0));
  CHECK(same(mtt::fst(rf), Value::pair(Value::pair(x, a), a)));

  auto reals = mtt::const_fib(SemType::ring());
  auto bools = mtt::const_fib(SemType::boolean());
  auto beta_true = [](const Value &, const Value &) { return Value::boolean(true); };
  auto ramp = mtt::babs<Value>(Nonneg(1), [](const Nonneg &i) {
    return r(i.value() + Rational(2));
  });
  CHECK(same(mtt::j_elim(bools, beta_true, x, a, r(Rational(3)), ramp), t()));
  CHECK(same(mtt::j_elim(bools, beta_true, x, a, a, mtt::idp(a)), t()));

  // B(((x, a1), a2), q) = a1 ~ a2 with base case idp.
  auto b = mtt::reindex(mtt::id_fib(reals), [](const Value &pt) { return mtt::fst(pt); });
  auto beta = [](const Value &, const Value &v) { return Value::path(mtt::idp(v)); };
  CHECK(mtt::equal_paths(SemType::ring(),
                         mtt::as_path(mtt::j_elim(b, beta, x, a, a, mtt::idp(a))),
                         mtt::idp(a)));
  // Hand evaluation: the first snd-path is constant at a1, the second is
  // the path itself and the middle factor is idp, giving p after a constant
  // segment of the same shape.
  auto p = mtt::PiecewisePath::polynomial(Nonneg(1), mtt::Polynomial({Rational(2), Rational(1)}));
  Value got = mtt::j_elim(b, beta, x, a, r(Rational(3)), scalar_path(p));
  auto oracle = mtt::piecewise::compose(p, mtt::PiecewisePath::polynomial(
                                               Nonneg(1), mtt::Polynomial::constant(Rational(2))));
  const auto &gp = mtt::as_path(got);
  CHECK(gp.shape() == Nonneg(2));
  for (const auto &i : gp.probes({})) CHECK(same(gp.at(i), r(oracle.at(i))));
  CHECK(same(gp.at(Nonneg(3, 2)), r(Rational(5, 2))));
}

TEST_CASE("type-directed transport") {
  Value c = Value::code_bool();
  auto fam = [](const Value &x) {
    return mtt::as_bool(x) ? SemType::arrow(SemType::boolean(), SemType::nat())
                           : SemType::arrow(SemType::boolean(), SemType::nat());
  };
  auto tf = mtt::type_fibration(fam);
  Value g = Value::lambda([](const Value &b) { return Value::nat(mtt::as_bool(b) ? 1 : 0); });
  CHECK(mtt::equal_values(fam(f()), tf.transp(step(), g), g));
  auto bad = mtt::type_fibration([](const Value &x) {
    return mtt::as_bool(x) ? SemType::boolean() : SemType::nat();
  });
  CHECK_THROWS_AS(bad.transp(step(), t()), mtt::SemanticError);
  (void)c;
}

TEST_CASE("reindexing commutes with the formers") {
  auto a = flip_fib();
  auto b = flip_fib();
  auto leaves = mtt::const_fib(SemType::empty());
  std::vector<mtt::Fn> gammas = {
      [](const Value &x) { return Value::boolean(!mtt::as_bool(x)); },
      [](const Value &) { return Value::boolean(true); }};
  for (const auto &gamma : gammas) {
    auto ga = mtt::reindex(a, gamma);
    auto gb = mtt::reindex(b, [gamma](const Value &xa) {
      return Value::pair(gamma(mtt::fst(xa)), mtt::snd(xa));
    });
    auto gleaves = mtt::reindex(leaves, [gamma](const Value &xa) {
      return Value::pair(gamma(mtt::fst(xa)), mtt::snd(xa));
    });
    for (const auto &p : {step(), mtt::reverse(step()), mtt::idp(t())}) {
      SemType bools = SemType::boolean();
      for (const auto &v : {t(), f()}) {
        for (const auto &w : {t(), f()}) {
          Value pair = Value::pair(v, w);
          CHECK(same(mtt::reindex(mtt::sigma_fib(a, b), gamma).transp(p, pair),
                     mtt::sigma_fib(ga, gb).transp(p, pair)));
        }
        CHECK(same(mtt::reindex(mtt::sum_fib(a, a), gamma).transp(p, Value::inr(v)),
                   mtt::sum_fib(ga, ga).transp(p, Value::inr(v))));
        Value tree = Value::sup(v, [](const Value &e) -> Value {
          throw mtt::SemanticError("no children: " + mtt::show(e));
        });
        Value moved = mtt::reindex(mtt::w_fib(a, leaves), gamma).transp(p, tree);
        Value formed = mtt::w_fib(ga, gleaves).transp(p, tree);
        CHECK(same(moved.as<mtt::SupV>()->label, formed.as<mtt::SupV>()->label));
      }
      for (const auto &g : bool_functions()) {
        CHECK(mtt::equal_values(SemType::arrow(bools, bools),
                                mtt::reindex(mtt::pi_fib(a, b), gamma).transp(p, g),
                                mtt::pi_fib(ga, gb).transp(p, g)));
      }
      // Id over ((x, a1), a2), reindexed in x.
      auto lift3 = [gamma](const Value &pt) {
        return Value::pair(Value::pair(gamma(mtt::fst(mtt::fst(pt))), mtt::snd(mtt::fst(pt))),
                           mtt::snd(pt));
      };
      ValuePath ctx = mtt::map(
          [](const Value &x) { return Value::pair(Value::pair(x, x), x); }, p);
      Value q = Value::path(mtt::idp(p.source()));
      CHECK(mtt::equal_paths(bools,
                             mtt::as_path(mtt::reindex(mtt::id_fib(a), lift3).transp(ctx, q)),
                             mtt::as_path(mtt::id_fib(ga).transp(ctx, q))));
    }
  }
}

TEST_CASE("transport is associative up to a path built with J") {
  auto a = flip_fib();
  std::vector<ValuePath> ps = {step(), mtt::idp(t()), mtt::compose_unchecked(mtt::reverse(step()), step())};
  for (const auto &p : ps) {
    for (const auto &q : {mtt::idp(p.target()),
                          mtt::babs<Value>(Nonneg(2), [y = p.target()](const Nonneg &i) {
                            return i < Nonneg(1) ? y : Value::boolean(!mtt::as_bool(y));
                          })}) {
      for (const auto &x : {t(), f()}) {
        auto lhs = [a, p, x](const ValuePath &r) { return a.transp(mtt::compose_unchecked(r, p), x); };
        auto rhs = [a, p, x](const ValuePath &r) { return a.transp(r, a.transp(p, x)); };
        auto motive = mtt::type_fibration([a, lhs, rhs](const Value &pt) {
          const ValuePath &r = mtt::as_path(mtt::snd(pt));
          return SemType::id(a.fam(mtt::snd(mtt::fst(pt))), lhs(r), rhs(r));
        });
        auto beta = [lhs, p](const Value &, const Value &y) {
          return Value::path(mtt::idp(lhs(mtt::idp(y))));
        };
        Value h = mtt::j_elim(motive, beta, Value::unit(), p.target(), q.target(), q);
        const auto &path = mtt::as_path(h);
        CHECK(same(path.source(), lhs(q)));
        CHECK(same(path.target(), rhs(q)));
      }
    }
  }
}

TEST_CASE("singletons contract") {
  mtt::Gen gen(11);
  for (int n = 0; n < 20; ++n) {
    ValuePath p = scalar_path(gen.path_from(gen.scalar(), 3));
    ValuePath c = mtt::babs<Value>(p.shape(), [p](const Nonneg &i) {
      return Value::pair(p.at(i), Value::path(mtt::upto(i, p)));
    });
    CHECK(same(mtt::fst(c.source()), p.source()));
    CHECK(mtt::equal_paths(SemType::ring(), mtt::as_path(mtt::snd(c.source())),
                           mtt::idp(p.source())));
    CHECK(same(mtt::fst(c.target()), p.target()));
    CHECK(mtt::equal_paths(SemType::ring(), mtt::as_path(mtt::snd(c.target())), p));
  }
}
