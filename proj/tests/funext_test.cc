#include <doctest.h>

#include "mtt/funext.h"
#include "mtt/gen.h"

using mtt::Nonneg;
using mtt::PointwiseHomotopy;
using mtt::Rational;
using mtt::SemType;
using mtt::Value;
using mtt::ValuePath;

namespace {

Value r(const Rational &x) { return Value::scalar(x); }

bool same(const Value &a, const Value &b) {
  return static_cast<bool>(mtt::equal_untyped(a, b));
}

/// e x = ⟨j ≤ x⟩ j : K₀ x ~ x on the positive cone.
PointwiseHomotopy k0_to_id() {
  return PointwiseHomotopy{SemType::ring(), [](const Value &x) {
                             Nonneg len(mtt::as_scalar(x));
                             return mtt::babs<Value>(len, [](const Nonneg &j) {
                               return r(j.value());
                             });
                           }};
}

}  // namespace

TEST_CASE("happly") {
  Value succ = Value::lambda([](const Value &x) { return Value::succ(x); });
  auto p = mtt::happly(mtt::idp(succ), Value::nat(2));
  CHECK(p.shape() == Nonneg(0));
  CHECK(same(p.source(), Value::nat(3)));
  auto e = k0_to_id();
  auto q = mtt::funext(e);
  auto hq = mtt::happly(q, r(3));
  CHECK(hq.shape() == q.shape());
  for (const auto &i : hq.probes({}))
    CHECK(same(hq.at(i), e(r(3)).at(min(i, Nonneg(1)) * Nonneg(3))));
}

TEST_CASE("funext of the K0/id homotopy") {
  auto e = k0_to_id();
  auto p = mtt::funext(e);
  CHECK(p.shape() == Nonneg(1));
  CHECK(same(mtt::apply(p.at(Nonneg(1, 2)), r(4)), r(2)));
  for (long x : {0, 1, 4, 7}) {
    CHECK(same(mtt::apply(p.source(), r(x)), r(0)));
    CHECK(same(mtt::apply(p.target(), r(x)), r(x)));
  }
  PointwiseHomotopy constant{SemType::ring(), [](const Value &x) { return mtt::idp(x); }};
  auto c = mtt::funext(constant);
  CHECK(c.shape() == Nonneg(1));
  CHECK(same(mtt::apply(c.at(Nonneg(1, 3)), r(5)), r(5)));
}

TEST_CASE("interpolant identity") {
  mtt::Gen gen(3);
  for (int n = 0; n < 200; ++n) {
    Nonneg j = gen.unit_interval();
    Nonneg s = gen.nonneg();
    auto uv = mtt::interpolants(j, s);
    Rational d = s.value() - Rational(1);
    CHECK(uv.u.value() * uv.v.value() ==
          s.value() + j.value() * (Rational(1) - j.value()) * d * d);
  }
  for (int k = 0; k <= 15; ++k) {
    Nonneg j(k, 15);
    for (long s : {0, 1, 2, 5}) {
      auto uv = mtt::interpolants(j, Nonneg(s));
      CHECK(mtt::leq(Nonneg(s), uv.u * uv.v));
    }
  }
  CHECK(mtt::interpolants(Nonneg(0), Nonneg(3)).u == Nonneg(1));
  CHECK(mtt::interpolants(Nonneg(0), Nonneg(3)).v == Nonneg(3));
  CHECK(mtt::interpolants(Nonneg(1), Nonneg(3)).u == Nonneg(3));
  CHECK(mtt::interpolants(Nonneg(1), Nonneg(3)).v == Nonneg(1));
}

TEST_CASE("epsilon endpoints") {
  auto e = k0_to_id();
  auto eps = mtt::epsilon(e);
  CHECK(eps.shape() == Nonneg(1));
  auto fe = mtt::funext(e);
  for (long x : {0, 2, 5}) {
    auto at0 = eps.source()(r(x));
    CHECK(at0.shape() == Nonneg(1));
    CHECK(mtt::equal_paths(SemType::ring(), at0, mtt::happly(fe, r(x))));
    auto at1 = eps.target()(r(x));
    CHECK(mtt::equal_paths(SemType::ring(), at1, e(r(x))));
    for (int k = 0; k <= 8; ++k) {
      auto mid = eps.at(Nonneg(k, 8))(r(x));
      CHECK(same(mid.source(), r(0)));
      CHECK(same(mid.target(), r(x)));
    }
  }
}

TEST_CASE("eta endpoints") {
  Value zero = Value::lambda([](const Value &) { return r(0); });
  Value id = Value::lambda([](const Value &x) { return x; });
  auto p = mtt::babs<Value>(Nonneg(3), [](const Nonneg &i) {
    Rational t = i.value();
    return Value::lambda([t](const Value &x) {
      return r(mtt::as_scalar(x) * t / Rational(3));
    });
  });
  SemType fun = SemType::arrow(SemType::ring(), SemType::ring());
  auto h = mtt::eta(p);
  CHECK(h.shape() == Nonneg(1));
  CHECK(mtt::equal_paths(fun, h.source(), p));
  PointwiseHomotopy hp{SemType::ring(), [p](const Value &x) { return mtt::happly(p, x); }};
  CHECK(mtt::equal_paths(fun, h.target(), mtt::funext(hp)));
  CHECK(mtt::equal_values(fun, p.source(), zero));
  CHECK(mtt::equal_values(fun, p.target(), id));

  auto flat = mtt::eta(mtt::idp(id));
  for (int k = 0; k <= 4; ++k) {
    auto slice = flat.at(Nonneg(k, 4));
    for (const auto &i : slice.probes({})) CHECK(mtt::equal_values(fun, slice.at(i), id));
  }
}

TEST_CASE("value-level forms block on variables") {
  Value x = Value::var(0, "p");
  CHECK(mtt::path_at_scaled(x, Nonneg(1, 2)).is_neutral());
  CHECK(mtt::happly_value(x, Value::unit()).is_neutral());
  Value e = Value::lambda([](const Value &v) {
    return Value::path(mtt::babs<Value>(Nonneg(mtt::as_scalar(v)),
                                        [](const Nonneg &j) { return r(j.value()); }));
  });
  Value p = mtt::funext_value(e);
  CHECK(same(mtt::apply(mtt::as_path(p).at(Nonneg(1, 2)), r(4)), r(2)));
}
