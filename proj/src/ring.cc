#include "mtt/ring.h"

#include <ostream>
#include <string>
#include <utility>

namespace mtt {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto digits_ok = [](const std::string &part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && part[0] == '-') start = 1;
    if (start >= part.size()) return false;
    for (std::size_t k = start; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true))
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    return Rational(mpq_class(mpz_class(s, 10)));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(mpq_class(mpz_class(num, 10), d));
}

Rational operator+(const Rational &a, const Rational &b) {
  return Rational(mpq_class(a.q_ + b.q_));
}
Rational operator-(const Rational &a, const Rational &b) {
  return Rational(mpq_class(a.q_ - b.q_));
}
Rational operator*(const Rational &a, const Rational &b) {
  return Rational(mpq_class(a.q_ * b.q_));
}
Rational operator/(const Rational &a, const Rational &b) {
  if (b.q_ == 0) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.to_string();
}
std::ostream &operator<<(std::ostream &os, const Nonneg &r) {
  return os << r.to_string();
}

Rational add(const Rational &a, const Rational &b) { return a + b; }
Rational mul(const Rational &a, const Rational &b) { return a * b; }
bool leq(const Rational &a, const Rational &b) { return a <= b; }

NegativeConeError::NegativeConeError(const Rational &value)
    : std::domain_error("value " + value.to_string() +
                        " is not in the positive cone") {}

Nonneg::Nonneg(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw NegativeConeError(value_);
}

// MTT_MUTATION selects a deliberately broken build used by the mutation
// smoke tests: 1 swaps the arguments of truncated_sub, 2 turns min into max.
#ifndef MTT_MUTATION
#define MTT_MUTATION 0
#endif

Nonneg min(const Nonneg &i, const Nonneg &j) {
#if MTT_MUTATION == 2
  return leq(i, j) ? j : i;
#else
  return leq(i, j) ? i : j;
#endif
}

Nonneg truncated_sub(const Nonneg &i, const Nonneg &j) {
#if MTT_MUTATION == 1
  const Nonneg &a = j;
  const Nonneg &b = i;
#else
  const Nonneg &a = i;
  const Nonneg &b = j;
#endif
  if (leq(a, b)) return Nonneg(0);
  return Nonneg(a.value() - b.value());
}

RingInstance RingInstance::parse(std::string_view name) {
  if (name == "rationals") return RingInstance(RingKind::rationals);
  if (name == "integers") return RingInstance(RingKind::integers);
  if (name == "trivial") return RingInstance(RingKind::trivial);
  throw std::invalid_argument("unknown ring instance '" + std::string(name) +
                              "' (expected rationals, integers or trivial)");
}

std::string_view RingInstance::name() const {
  switch (kind_) {
    case RingKind::rationals:
      return "rationals";
    case RingKind::integers:
      return "integers";
    case RingKind::trivial:
      return "trivial";
  }
  return "?";
}

bool RingInstance::contains(const Rational &r) const {
  switch (kind_) {
    case RingKind::rationals:
      return true;
    case RingKind::integers:
      return r.is_integer();
    case RingKind::trivial:
      return r == Rational(0);
  }
  return false;
}

Rational RingInstance::canon(const Rational &r) const {
  if (kind_ == RingKind::trivial) return Rational(0);
  if (!contains(r))
    throw std::invalid_argument(r.to_string() + " is not an element of the " +
                                std::string(name()) + " ring");
  return r;
}

bool RingInstance::equal(const Rational &a, const Rational &b) const {
  if (kind_ == RingKind::trivial) return true;
  return a == b;
}

}  // namespace mtt
