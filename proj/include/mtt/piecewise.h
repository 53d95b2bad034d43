#ifndef MTT_PIECEWISE_H
#define MTT_PIECEWISE_H

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtt/path.h"
#include "mtt/ring.h"

namespace mtt {

/// Polynomial with rational coefficients, lowest degree first. The
/// coefficient vector is kept trimmed, so structural equality is polynomial
/// equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational &c) { return Polynomial({c}); }
  /// t
  static Polynomial identity() { return Polynomial({Rational(0), Rational(1)}); }

  const std::vector<Rational> &coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator()(const Rational &t) const;

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend bool operator==(const Polynomial &a, const Polynomial &b) = default;

  /// this(inner(t))
  Polynomial compose(const Polynomial &inner) const;
  /// this(t + c)
  Polynomial shift(const Rational &c) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// A ring-valued Moore path given exactly by polynomial pieces.
///
/// `breakpoints` is strictly increasing and ends at the shape; piece k covers
/// [b(k-1), b(k)] with b(-1) = 0 and is a polynomial in the local coordinate
/// t = i - b(k-1). A shape-0 path is the single breakpoint 0 with one
/// constant piece. Adjacent pieces agree at shared breakpoints.
class PiecewisePath {
 public:
  /// Validates the representation; throws std::invalid_argument.
  PiecewisePath(std::vector<Nonneg> breakpoints, std::vector<Polynomial> pieces);

  static PiecewisePath constant(const Rational &x);
  /// The bounded abstraction of a polynomial: shape `length`, value phi(i).
  static PiecewisePath polynomial(const Nonneg &length, const Polynomial &phi);

  const Nonneg &shape() const { return breakpoints_.back(); }
  const std::vector<Nonneg> &breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial> &pieces() const { return pieces_; }

  Rational at(const Nonneg &j) const;
  Rational source() const { return at(Nonneg(0)); }
  Rational target() const { return at(shape()); }

  /// Closure view for use with the generic combinators.
  Path<Rational> to_path() const;

  nlohmann::json to_json() const;
  static PiecewisePath from_json(const nlohmann::json &j);

 private:
  std::vector<Nonneg> breakpoints_;
  std::vector<Polynomial> pieces_;
};

namespace piecewise {

PiecewisePath idp(const Rational &x);
/// Throws EndpointMismatch unless target(p) = source(q) exactly.
PiecewisePath compose(const PiecewisePath &q, const PiecewisePath &p);
PiecewisePath reverse(const PiecewisePath &p);
/// Congruence along a polynomial map.
PiecewisePath map(const Polynomial &g, const PiecewisePath &p);
PiecewisePath babs(const Nonneg &j, const Polynomial &phi);
PiecewisePath upto(const Nonneg &i, const PiecewisePath &p);
PiecewisePath from(const Nonneg &i, const PiecewisePath &q);

/// Exact equality: equal shapes and identical polynomials on every interval
/// of the merged breakpoint set. On disagreement the witness is a point
/// where the two paths evaluate differently.
PathEqResult path_eq(const PiecewisePath &p, const PiecewisePath &q);

}  // namespace piecewise

}  // namespace mtt

#endif  // MTT_PIECEWISE_H
