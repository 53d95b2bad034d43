#ifndef MTT_RING_H
#define MTT_RING_H

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtt {

/// Exact rational number in lowest terms with a positive denominator.
///
/// This is the scalar ring used for path shapes and path parameters. All
/// arithmetic is exact; there is no rounding anywhere in the kernel.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class q);

  /// Parses `p/q`, `-p/q` or an integer literal.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class &raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b);

  /// Canonical `p/q` form; integers print without a denominator.
  std::string to_string() const;

 private:
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational add(const Rational &a, const Rational &b);
Rational mul(const Rational &a, const Rational &b);
bool leq(const Rational &a, const Rational &b);

/// Raised when a value outside the positive cone is used where one is needed.
class NegativeConeError : public std::domain_error {
 public:
  explicit NegativeConeError(const Rational &value);
};

/// An element of the positive cone {i | 0 <= i}.
class Nonneg {
 public:
  Nonneg() = default;
  /// Throws NegativeConeError for negative values; never clamps.
  explicit Nonneg(Rational value);
  Nonneg(long value) : Nonneg(Rational(value)) {}  // NOLINT
  Nonneg(long numerator, long denominator)
      : Nonneg(Rational(numerator, denominator)) {}

  static Nonneg parse(std::string_view text) {
    return Nonneg(Rational::parse(text));
  }

  const Rational &value() const { return value_; }
  operator const Rational &() const { return value_; }  // NOLINT

  friend bool operator==(const Nonneg &a, const Nonneg &b) = default;
  friend std::strong_ordering operator<=>(const Nonneg &a, const Nonneg &b) {
    return a.value_ <=> b.value_;
  }

  friend Nonneg operator+(const Nonneg &a, const Nonneg &b) {
    return Nonneg(a.value_ + b.value_);
  }
  friend Nonneg operator*(const Nonneg &a, const Nonneg &b) {
    return Nonneg(a.value_ * b.value_);
  }

  std::string to_string() const { return value_.to_string(); }

 private:
  Rational value_;
};

std::ostream &operator<<(std::ostream &os, const Nonneg &r);

Nonneg min(const Nonneg &i, const Nonneg &j);

/// Truncated subtraction: 0 when i <= j, otherwise i - j.
Nonneg truncated_sub(const Nonneg &i, const Nonneg &j);

/// The three kinds of scalar ring the law suite can run over.
///
/// `integers` and `rationals` are nontrivial with decidable equality;
/// `trivial` is the one-element ring where 0 = 1. All three share the same
/// exact arithmetic; an instance restricts which scalars exist and how they
/// are compared.
enum class RingKind { rationals, integers, trivial };

class RingInstance {
 public:
  explicit RingInstance(RingKind kind = RingKind::rationals) : kind_(kind) {}

  /// Accepts `rationals`, `integers` or `trivial`.
  static RingInstance parse(std::string_view name);

  RingKind kind() const { return kind_; }
  std::string_view name() const;

  bool contains(const Rational &r) const;
  /// Maps a scalar into the instance (everything is 0 in the trivial ring).
  Rational canon(const Rational &r) const;
  bool equal(const Rational &a, const Rational &b) const;

  Rational zero() const { return canon(Rational(0)); }
  Rational one() const { return canon(Rational(1)); }

 private:
  RingKind kind_;
};

}  // namespace mtt

#endif  // MTT_RING_H
