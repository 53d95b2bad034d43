#include <doctest.h>

#include "mtt/gen.h"
#include "mtt/ring.h"

using mtt::Gen;
using mtt::Nonneg;
using mtt::Rational;
using mtt::RingInstance;
using mtt::RingKind;

TEST_CASE("rational literals are canonical") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-6/8").to_string() == "-3/4");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational::parse("0/5").denominator() == 1);
  CHECK(Rational(4, -6).to_string() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("add") {
  CHECK(mtt::add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6));
  Gen gen(1);
  for (int k = 0; k < 200; ++k) {
    Rational a = gen.scalar();
    CHECK(a + Rational(0) == a);
    CHECK(a + (-a) == Rational(0));
  }
}

TEST_CASE("mul") {
  CHECK(mtt::mul(Rational(2, 3), Rational(3, 4)) == Rational(1, 2));
  Gen gen(2);
  for (int k = 0; k < 200; ++k) {
    Rational a = gen.scalar();
    Rational b = gen.scalar();
    CHECK(a * Rational(1) == a);
    CHECK(mtt::leq(Rational(0), (a - b) * (a - b)));
  }
}

TEST_CASE("min") {
  CHECK(mtt::min(Nonneg(2, 3), Nonneg(1, 2)) == Nonneg(1, 2));
  Gen gen(3);
  for (int k = 0; k < 200; ++k) {
    Nonneg a = gen.nonneg();
    Nonneg b = gen.nonneg();
    CHECK(mtt::min(a, a) == a);
    CHECK(mtt::min(Nonneg(0), a) == Nonneg(0));
    CHECK(mtt::min(a, b) == mtt::min(b, a));
  }
}

TEST_CASE("truncated_sub") {
  CHECK(mtt::truncated_sub(Nonneg(2), Nonneg(3)) == Nonneg(0));
  CHECK(mtt::truncated_sub(Nonneg(3), Nonneg(2)) == Nonneg(1));
  Gen gen(4);
  for (int k = 0; k < 200; ++k) {
    Nonneg a = gen.nonneg();
    Nonneg b = gen.nonneg();
    CHECK(mtt::truncated_sub(a, Nonneg(0)) == a);
    CHECK(mtt::truncated_sub(a, b) + mtt::min(a, b) == a);
  }
}

TEST_CASE("leq") {
  CHECK(mtt::leq(Rational(1, 3), Rational(1, 2)));
  CHECK_FALSE(mtt::leq(Rational(1, 2), Rational(1, 3)));
  Gen gen(5);
  for (int k = 0; k < 200; ++k) {
    Rational a = gen.scalar();
    Rational b = gen.scalar();
    CHECK(mtt::leq(a, a));
    CHECK((mtt::leq(a, b) || mtt::leq(b, a)));
    if (mtt::leq(a, b) && mtt::leq(b, a)) CHECK(a == b);
  }
}

TEST_CASE("ordered commutative ring axioms hold on random triples") {
  for (auto kind : {RingKind::rationals, RingKind::integers}) {
    Gen gen(6, RingInstance(kind));
    for (int n = 0; n < 300; ++n) {
      Rational i = gen.scalar(), j = gen.scalar(), k = gen.scalar();
      CHECK(i + (j + k) == (i + j) + k);
      CHECK(Rational(0) + i == i);
      CHECK(i + j == j + i);
      CHECK(i * (j * k) == (i * j) * k);
      CHECK(Rational(1) * i == i);
      CHECK(i * j == j * i);
      CHECK(i * (j + k) == i * j + i * k);
      if (mtt::leq(i, j)) CHECK(mtt::leq(k + i, k + j));
      if (mtt::leq(i, j) && mtt::leq(j, k)) CHECK(mtt::leq(i, k));
      if (mtt::leq(Rational(0), i) && mtt::leq(Rational(0), j))
        CHECK(mtt::leq(Rational(0), i * j));
    }
  }
}

TEST_CASE("negative values are rejected from the cone") {
  CHECK_THROWS_AS(Nonneg(-1), mtt::NegativeConeError);
  CHECK_THROWS_AS(Nonneg(Rational(-1, 3)), mtt::NegativeConeError);
  CHECK_NOTHROW(Nonneg(0));
}

TEST_CASE("ring instances") {
  RingInstance q = RingInstance::parse("rationals");
  RingInstance z = RingInstance::parse("integers");
  RingInstance t = RingInstance::parse("trivial");
  CHECK_FALSE(q.equal(q.zero(), q.one()));
  CHECK_FALSE(z.equal(z.zero(), z.one()));
  CHECK(t.equal(t.zero(), t.one()));
  CHECK(t.equal(Rational(5), Rational(-2, 3)));
  CHECK(z.contains(Rational(3)));
  CHECK_FALSE(z.contains(Rational(1, 2)));
  CHECK_THROWS(z.canon(Rational(1, 2)));
  CHECK_THROWS(RingInstance::parse("reals"));
  Gen gz(7, z);
  for (int k = 0; k < 50; ++k) CHECK(gz.scalar().is_integer());
}
