#include <doctest.h>

#include "mtt/gen.h"
#include "mtt/path.h"

using mtt::Nonneg;
using mtt::Path;
using mtt::Rational;

namespace {

Path<Rational> ramp(long len) {
  return mtt::babs<Rational>(Nonneg(len),
                             [](const Nonneg &i) { return i.value(); });
}

}  // namespace

TEST_CASE("idp") {
  auto p = mtt::idp(Rational(5));
  CHECK(p.at(Nonneg(7)) == Rational(5));
  CHECK(p.shape() == Nonneg(0));
  auto q = ramp(3);
  CHECK(mtt::path_eq(mtt::compose(q, mtt::idp(q.source())), q));
  CHECK(mtt::path_eq(mtt::compose(mtt::idp(q.target()), q), q));
}

TEST_CASE("compose") {
  auto p = ramp(1);
  auto q = mtt::babs<Rational>(Nonneg(2), [](const Nonneg &i) {
    return Rational(1) + i.value() * i.value();
  });
  auto qp = mtt::compose(q, p);
  CHECK(qp.shape() == Nonneg(3));
  CHECK(qp.at(p.shape()) == p.target());
  CHECK(qp.at(Nonneg(2)) == Rational(2));
  CHECK(qp.at(Nonneg(3)) == Rational(5));
  CHECK_THROWS_AS(mtt::compose(ramp(2), ramp(2)), mtt::EndpointMismatch);

  mtt::Gen gen(11);
  for (int n = 0; n < 20; ++n) {
    auto a = gen.path().to_path();
    auto b = gen.path_from(a.target()).to_path();
    auto c = gen.path_from(b.target()).to_path();
    auto left = mtt::compose(mtt::compose(c, b), a);
    auto right = mtt::compose(c, mtt::compose(b, a));
    CHECK(left.shape() == right.shape());
    for (const auto &i : mtt::random_points(left.shape(), {})) {
      CHECK(left.at(i) == right.at(i));
    }
  }
}

TEST_CASE("reverse") {
  auto x = mtt::idp(Rational(3));
  CHECK(mtt::path_eq(mtt::reverse(x), x));
  auto p = ramp(2);
  CHECK(mtt::reverse(p).at(Nonneg(1, 2)) == Rational(3, 2));
  CHECK(mtt::reverse(p).shape() == Nonneg(2));
  CHECK(mtt::path_eq(mtt::reverse(mtt::reverse(p)), p));
}

TEST_CASE("map") {
  auto p = ramp(2);
  auto id = [](const Rational &r) { return r; };
  auto sq = [](const Rational &r) { return r * r; };
  CHECK(mtt::path_eq(mtt::map(id, p), p));
  CHECK(mtt::path_eq(mtt::map(sq, mtt::idp(Rational(3))), mtt::idp(Rational(9))));
  auto q = mtt::babs<Rational>(Nonneg(1), [](const Nonneg &i) {
    return Rational(2) - i.value();
  });
  CHECK(mtt::path_eq(mtt::map(sq, mtt::compose(q, p)),
                     mtt::compose(mtt::map(sq, q), mtt::map(sq, p))));
  auto to_bool = [](const Rational &r) { return r > Rational(1); };
  CHECK(mtt::map(to_bool, p).at(Nonneg(2)));
}

TEST_CASE("babs") {
  auto phi = [](const Nonneg &i) { return i.value() * Rational(3); };
  CHECK(mtt::path_eq(mtt::babs<Rational>(Nonneg(0), phi), mtt::idp(Rational(0))));
  auto p = ramp(4);
  CHECK(mtt::path_eq(
      mtt::babs<Rational>(p.shape(), [p](const Nonneg &i) { return p.at(i); }), p));
  auto g = [](const Rational &r) { return r + Rational(1); };
  auto lhs = mtt::map(g, mtt::babs<Rational>(Nonneg(2), phi));
  auto rhs = mtt::babs<Rational>(Nonneg(2), [&](const Nonneg &i) { return g(phi(i)); });
  CHECK(mtt::path_eq(lhs, rhs));
  CHECK(mtt::babs<Rational>(Nonneg(2), phi).at(Nonneg(5)) == Rational(6));
}

TEST_CASE("upto") {
  auto p = ramp(2);
  CHECK(mtt::path_eq(mtt::upto(Nonneg(0), p), mtt::idp(p.source())));
  CHECK(mtt::path_eq(mtt::upto(Nonneg(3), p), p));
  CHECK(mtt::path_eq(mtt::upto(Nonneg(2), p), p));
  auto u = mtt::upto(Nonneg(1), p);
  CHECK(u.shape() == Nonneg(1));
  CHECK(u.target() == Rational(1));
}

TEST_CASE("from") {
  auto q = ramp(2);
  CHECK(mtt::path_eq(mtt::from(Nonneg(0), q), q));
  CHECK(mtt::path_eq(mtt::from(Nonneg(2), q), mtt::idp(q.target())));
  CHECK(mtt::path_eq(mtt::from(Nonneg(5), q), mtt::idp(q.target())));
  auto f = mtt::from(Nonneg(1), q);
  CHECK(f.at(Nonneg(1, 2)) == Rational(3, 2));
  CHECK(f.source() == Rational(1));
  CHECK(f.target() == Rational(2));
}

TEST_CASE("path_eq") {
  auto p = ramp(2);
  CHECK(mtt::path_eq(p, p));
  auto zero_line = mtt::babs<Rational>(Nonneg(1), [](const Nonneg &) { return Rational(0); });
  auto r = mtt::path_eq(mtt::idp(Rational(0)), zero_line);
  CHECK_FALSE(r.equal);
  CHECK(r.shapes_differ);
  auto bumped = mtt::babs<Rational>(Nonneg(2), [](const Nonneg &i) {
    return Nonneg(3, 2) < i ? Rational(7) : i.value();
  });
  auto r2 = mtt::path_eq(p, bumped);
  CHECK_FALSE(r2.equal);
  REQUIRE(r2.witness.has_value());
  CHECK(*r2.witness == Nonneg(2));
  // Sampling cannot see a single-point difference away from the probes.
  auto spike = mtt::babs<Rational>(Nonneg(2), [](const Nonneg &i) {
    return i == Nonneg(1, 1000003) ? Rational(7) : i.value();
  });
  CHECK(mtt::path_eq(p, spike).equal);
}

TEST_CASE("evaluation is constant beyond the shape") {
  mtt::Gen gen(12);
  for (int n = 0; n < 50; ++n) {
    auto p = gen.path().to_path();
    auto beyond = p.shape() + gen.nonneg();
    CHECK(p.at(beyond) == p.target());
    CHECK(mtt::reverse(p).at(beyond) == p.source());
  }
}

TEST_CASE("probe sets are deterministic per seed") {
  mtt::SampleSpec spec{42, 16};
  auto a = mtt::random_points(Nonneg(3), spec);
  auto b = mtt::random_points(Nonneg(3), spec);
  CHECK(a == b);
  CHECK(a.size() == 16);
  for (const auto &x : a) CHECK(x <= Nonneg(3));
  auto c = mtt::random_points(Nonneg(3), {43, 16});
  CHECK(a != c);
}
