#include <doctest.h>

#include "mtt/gen.h"
#include "mtt/piecewise.h"

using mtt::Gen;
using mtt::Nonneg;
using mtt::PiecewisePath;
using mtt::Polynomial;
using mtt::Rational;
namespace pw = mtt::piecewise;

TEST_CASE("polynomial algebra") {
  Polynomial p{Rational(1), Rational(2), Rational(3)};  // 1 + 2t + 3t^2
  CHECK(p(Rational(2)) == Rational(17));
  CHECK(p.shift(Rational(1))(Rational(1)) == p(Rational(2)));
  Polynomial q{Rational(0), Rational(0)};
  CHECK(q.degree() == -1);
  CHECK(q == Polynomial());
  Polynomial sq = Polynomial::identity() * Polynomial::identity();
  CHECK(sq.compose(Polynomial{Rational(1), Rational(1)})(Rational(2)) == Rational(9));
}

TEST_CASE("representation invariants are enforced") {
  CHECK_THROWS_AS(PiecewisePath({Nonneg(1), Nonneg(1)},
                                {Polynomial{Rational(0)}, Polynomial{Rational(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PiecewisePath({Nonneg(1), Nonneg(2)},
                                {Polynomial{Rational(0), Rational(1)},
                                 Polynomial{Rational(0)}}),
                  std::invalid_argument);
  CHECK_NOTHROW(PiecewisePath({Nonneg(1), Nonneg(2)},
                              {Polynomial{Rational(0), Rational(1)},
                               Polynomial{Rational(1)}}));
}

TEST_CASE("groupoid laws hold exactly") {
  Gen gen(21);
  for (int n = 0; n < 200; ++n) {
    PiecewisePath p = gen.path();
    PiecewisePath q = gen.path_from(p.target());
    PiecewisePath r = gen.path_from(q.target());
    CHECK(pw::path_eq(pw::compose(p, pw::idp(p.source())), p));
    CHECK(pw::path_eq(pw::compose(pw::idp(p.target()), p), p));
    CHECK(pw::path_eq(pw::compose(pw::compose(r, q), p),
                      pw::compose(r, pw::compose(q, p))));
    CHECK(pw::reverse(p).shape() == p.shape());
    CHECK(pw::path_eq(pw::reverse(pw::reverse(p)), p));
    CHECK(pw::path_eq(pw::reverse(pw::compose(q, p)),
                      pw::compose(pw::reverse(p), pw::reverse(q))));
  }
}

TEST_CASE("closure view agrees with the exact view") {
  Gen gen(22);
  for (int n = 0; n < 50; ++n) {
    PiecewisePath p = gen.path();
    auto closure = p.to_path();
    for (const auto &i : mtt::random_points(p.shape() + Nonneg(1), {})) {
      CHECK(closure.at(i) == p.at(i));
    }
    auto rev_closure = mtt::reverse(closure);
    auto rev_exact = pw::reverse(p);
    for (const auto &i : mtt::random_points(p.shape(), {})) {
      CHECK(rev_closure.at(i) == rev_exact.at(i));
    }
  }
}

TEST_CASE("contraction laws") {
  Gen gen(23);
  for (int n = 0; n < 100; ++n) {
    PiecewisePath p = gen.path();
    CHECK(pw::path_eq(pw::upto(Nonneg(0), p), pw::idp(p.source())));
    CHECK(pw::path_eq(pw::upto(p.shape() + gen.nonneg(), p), p));
    CHECK(pw::path_eq(pw::from(Nonneg(0), p), p));
    CHECK(pw::path_eq(pw::from(p.shape() + gen.nonneg(), p), pw::idp(p.target())));
    Nonneg i = gen.nonneg();
    auto u = pw::upto(i, p);
    CHECK(u.target() == p.at(i));
    auto f = pw::from(i, p);
    CHECK(f.source() == p.at(i));
    CHECK(f.target() == p.target());
    // The two halves recompose to p.
    CHECK(pw::path_eq(pw::compose(f, u), p));
  }
}

TEST_CASE("derived evaluations on the shape-2 ramp") {
  auto ramp = pw::babs(Nonneg(2), Polynomial::identity());
  CHECK(pw::reverse(ramp).at(Nonneg(1, 2)) == Rational(3, 2));
  auto u = pw::upto(Nonneg(1), ramp);
  CHECK(u.shape() == Nonneg(1));
  CHECK(u.target() == Rational(1));
  CHECK(pw::from(Nonneg(1), ramp).at(Nonneg(1, 2)) == Rational(3, 2));
}

TEST_CASE("map along polynomials") {
  Gen gen(24);
  Polynomial g{Rational(1), Rational(0), Rational(2)};
  for (int n = 0; n < 50; ++n) {
    PiecewisePath p = gen.path();
    PiecewisePath q = gen.path_from(p.target());
    CHECK(pw::path_eq(pw::map(Polynomial::identity(), p), p));
    CHECK(pw::path_eq(pw::map(g, pw::compose(q, p)),
                      pw::compose(pw::map(g, q), pw::map(g, p))));
    CHECK(pw::path_eq(pw::map(g, pw::reverse(p)), pw::reverse(pw::map(g, p))));
  }
}

TEST_CASE("exact equality reports a witness") {
  auto a = pw::babs(Nonneg(2), Polynomial::identity());
  auto b = pw::compose(pw::babs(Nonneg(1), Polynomial{Rational(1), Rational(1)}),
                       pw::babs(Nonneg(1), Polynomial::identity()));
  CHECK(pw::path_eq(a, b));
  auto c = pw::compose(pw::babs(Nonneg(1), Polynomial{Rational(1), Rational(1)}),
                       pw::babs(Nonneg(1), Polynomial{Rational(0), Rational(0), Rational(1)}));
  auto r = pw::path_eq(a, c);
  CHECK_FALSE(r.equal);
  REQUIRE(r.witness.has_value());
  CHECK(a.at(*r.witness) != c.at(*r.witness));
  auto r2 = pw::path_eq(pw::idp(Rational(0)), pw::babs(Nonneg(1), Polynomial{Rational(0)}));
  CHECK(r2.shapes_differ);
}

TEST_CASE("json form") {
  auto p = pw::compose(pw::babs(Nonneg(3, 2), Polynomial{Rational(1, 2), Rational(-1)}),
                       pw::babs(Nonneg(1), Polynomial{Rational(0), Rational(1, 2)}));
  auto j = p.to_json();
  CHECK(j.dump() ==
        R"({"breakpoints":["1","5/2"],"pieces":[["0","1/2"],["1/2","-1"]],"shape":"5/2"})");
  CHECK(pw::path_eq(PiecewisePath::from_json(j), p));
  Gen gen(25);
  for (int n = 0; n < 30; ++n) {
    auto q = gen.path();
    CHECK(pw::path_eq(PiecewisePath::from_json(q.to_json()), q));
  }
}
