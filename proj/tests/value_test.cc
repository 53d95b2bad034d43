#include <doctest.h>

#include "mtt/value.h"

using mtt::Nonneg;
using mtt::Rational;
using mtt::SemType;
using mtt::Value;

TEST_CASE("eliminators reduce on canonical values") {
  CHECK(mtt::as_bool(mtt::fst(Value::pair(Value::boolean(true), Value::nat(3)))));
  auto plus = [](const Value &, const Value &acc) { return Value::succ(acc); };
  CHECK(mtt::show(mtt::nat_elim(Value::nat(4), Value::nat(3), plus)) == "7");
  auto s = mtt::arith(mtt::ArithOp::sub, Value::scalar(2),
                      Value::scalar(3));
  CHECK(mtt::as_scalar(s) == Rational(-1));
  CHECK_THROWS_AS(mtt::apply(Value::boolean(true), Value::unit()),
                  mtt::SemanticError);
}

TEST_CASE("eliminators block on variables") {
  Value x = Value::var(0, "x");
  Value stuck = mtt::bool_elim(x, Value::nat(1), Value::nat(2));
  CHECK(stuck.is_neutral());
  CHECK(mtt::show(stuck) == "(if x then 1 else 2)");
  CHECK(mtt::show(Value::succ(x)) == "(succ x)");
}

TEST_CASE("functions on a finite domain compare by enumeration") {
  auto bb = SemType::arrow(SemType::boolean(), SemType::boolean());
  Value id = Value::lambda([](const Value &x) { return x; });
  Value via_if = Value::lambda([](const Value &x) {
    return mtt::bool_elim(x, Value::boolean(true), Value::boolean(false));
  });
  Value neg = Value::lambda([](const Value &x) {
    return Value::boolean(!mtt::as_bool(x));
  });
  CHECK(mtt::equal_values(bb, id, via_if));
  auto c = mtt::equal_values(bb, id, neg);
  CHECK_FALSE(c);
  CHECK(c.witness.find("at argument") != std::string::npos);
  CHECK(mtt::enumerate(SemType::sum(SemType::boolean(), SemType::unit()))->size() == 3);
}

TEST_CASE("paths compare shapes exactly") {
  auto carrier = SemType::boolean();
  Value t = Value::boolean(true);
  auto p = mtt::idp(t);
  auto q = mtt::babs<Value>(Nonneg(1), [t](const Nonneg &) { return t; });
  auto c = mtt::equal_paths(carrier, p, q);
  CHECK_FALSE(c);
  CHECK(mtt::equal_paths(carrier, q, q));
  CHECK(mtt::show(Value::path(q)) ==
        "{shape = 1; samples = [true, true, true, true, true]}");
  CHECK(mtt::show(Value::path(p)) == "{shape = 0; samples = [true]}");
}

TEST_CASE("decoding universe codes") {
  Value code = Value::code_pi(Value::code_bool(),
                              [](const Value &) { return Value::code_bool(); });
  auto ty = SemType::el(code);
  CHECK(mtt::equal_types(ty, SemType::arrow(SemType::boolean(), SemType::boolean())));
  auto eq = SemType::el(Value::code_eq(Value::code_bool(), Value::boolean(true),
                                       Value::boolean(false)));
  REQUIRE(eq.as<mtt::IdT>());
  CHECK_FALSE(mtt::equal_types(eq, SemType::id(SemType::boolean(), Value::boolean(true),
                                               Value::boolean(true))));
  CHECK(SemType::el(Value::var(0)).as<mtt::ElT>());
}

TEST_CASE("generic arguments for non-enumerable domains") {
  auto nn = SemType::arrow(SemType::nat(), SemType::nat());
  Value f = Value::lambda([](const Value &x) { return Value::succ(x); });
  Value g = Value::lambda([](const Value &x) {
    return mtt::nat_elim(x, Value::nat(1),
                         [](const Value &, const Value &acc) { return Value::succ(acc); });
  });
  CHECK(mtt::equal_values(nn, f, g));
  auto w = SemType::arrow(SemType::unit(), nn);
  CHECK(mtt::show(w) == "Unit -> Nat -> Nat");
}
