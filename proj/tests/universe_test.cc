#include <doctest.h>

#include "mtt/universe.h"

using mtt::CodeKind;
using mtt::Nonneg;
using mtt::SemType;
using mtt::Value;
using mtt::ValuePath;

namespace {

Value t() { return Value::boolean(true); }
Value f() { return Value::boolean(false); }

Value bool_to_bool() {
  return Value::code_pi(Value::code_bool(), [](const Value &) { return Value::code_bool(); });
}

std::vector<Value> bool_functions() {
  std::vector<Value> out;
  for (int k = 0; k < 4; ++k)
    out.push_back(Value::lambda([k](const Value &x) {
      return Value::boolean(mtt::as_bool(x) ? (k & 1) : (k & 2));
    }));
  return out;
}

ValuePath constant(const Value &code, long shape) {
  return mtt::babs<Value>(Nonneg(shape), [code](const Nonneg &) { return code; });
}

}  // namespace

TEST_CASE("decoding") {
  auto bools = mtt::enumerate(mtt::decode(Value::code_bool()));
  REQUIRE(bools);
  CHECK(bools->size() == 2);
  auto loop = mtt::decode(Value::code_eq(Value::code_bool(), t(), t()));
  REQUIRE(loop.as<mtt::IdT>());
  CHECK(mtt::equal_values(loop, Value::path(mtt::idp(t())), Value::path(mtt::idp(t()))));
  auto fun = mtt::decode(bool_to_bool());
  auto fs = bool_functions();
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = 0; b < fs.size(); ++b)
      CHECK(static_cast<bool>(mtt::equal_values(fun, fs[a], fs[b])) == (a == b));
}

TEST_CASE("transport along degenerate paths") {
  CHECK(mtt::equal_untyped(mtt::u_transport(mtt::idp(Value::code_bool()), f()), f()));
  auto fun = mtt::decode(bool_to_bool());
  for (const auto &g : bool_functions())
    CHECK(mtt::equal_values(fun, mtt::u_transport(mtt::idp(bool_to_bool()), g), g));
  Value eq = Value::code_eq(Value::code_bool(), t(), t());
  // A loop at true that dips to false in the middle.
  Value q = Value::path(mtt::babs<Value>(Nonneg(2), [](const Nonneg &i) {
    return Value::boolean(i == Nonneg(0) || Nonneg(1) < i);
  }));
  CHECK(mtt::equal_values(mtt::decode(eq), mtt::u_transport(mtt::idp(eq), q), q));
}

TEST_CASE("bool and pi cases") {
  CHECK(mtt::equal_untyped(mtt::u_transport(constant(Value::code_bool(), 3), t()), t()));
  auto p = constant(bool_to_bool(), 2);
  auto oracle = mtt::pi_fib(mtt::const_fib(SemType::boolean()),
                            mtt::const_fib(SemType::boolean()));
  auto decoded = mtt::type_fibration([](const Value &c) { return mtt::decode(c); });
  auto fun = mtt::decode(bool_to_bool());
  for (const auto &g : bool_functions()) {
    Value moved = mtt::u_transport(p, g);
    CHECK(mtt::equal_values(fun, moved, oracle.transp(p, g)));
    CHECK(mtt::equal_values(fun, moved, decoded.transp(p, g)));
  }
  for (long k : {2, 3, 7}) {
    CHECK(mtt::equal_untyped(mtt::pi_domain_transport(p, t(), Nonneg(k)), t()));
  }
}

TEST_CASE("eq case against the decoded family") {
  // #eq #bool (step k) true: the left endpoint moves from true to false.
  auto p = mtt::babs<Value>(Nonneg(1), [](const Nonneg &k) {
    return Value::code_eq(Value::code_bool(), Value::boolean(k < Nonneg(1, 2)), t());
  });
  REQUIRE(mtt::constructor_stable(p));
  auto decoded = mtt::type_fibration([](const Value &c) { return mtt::decode(c); });
  Value q = Value::path(mtt::idp(t()));
  Value moved = mtt::u_transport(p, q);
  const auto &path = mtt::as_path(moved);
  CHECK(path.shape() == Nonneg(2));
  CHECK(mtt::equal_untyped(path.source(), f()));
  CHECK(mtt::equal_untyped(path.target(), t()));
  CHECK(mtt::equal_values(mtt::decode(p.target()), moved, decoded.transp(p, q)));
}

TEST_CASE("constructor stability") {
  CHECK(mtt::constructor_stable(mtt::idp(bool_to_bool())));
  CHECK(mtt::constructor_stable(constant(Value::code_bool(), 5)));
  auto change = mtt::babs<Value>(Nonneg(1), [](const Nonneg &i) {
    return i < Nonneg(1, 2) ? Value::code_bool() : bool_to_bool();
  });
  auto result = mtt::constructor_stable(change);
  CHECK_FALSE(result);
  REQUIRE(result.witness);
  CHECK(*result.witness == Nonneg(1));
  CHECK(result.at_witness == CodeKind::pi);
  try {
    mtt::u_transport(change, t());
    FAIL("expected a constructor change");
  } catch (const mtt::ConstructorChange &e) {
    CHECK(e.probe() == Nonneg(1));
    CHECK(e.from() == CodeKind::boolean);
    CHECK(std::string(e.what()) == "path in U changes constructor from #bool to #pi at 1");
  }
}

TEST_CASE("stuck codes") {
  Value c = Value::var(0, "c");
  auto p = mtt::babs<Value>(Nonneg(1), [c](const Nonneg &) { return c; });
  CHECK(mtt::u_transport(p, Value::var(1, "a")).is_neutral());
  CHECK(mtt::decode(c).as<mtt::ElT>());
}
