#include "mtt/piecewise.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mtt {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational &t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                            Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] = out[k] + a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] = out[k] + b.coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial &inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + Polynomial::constant(*it);
  return acc;
}

Polynomial Polynomial::shift(const Rational &c) const {
  return compose(Polynomial({c, Rational(1)}));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == Rational(0)) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
  }
  return os.str();
}

PiecewisePath::PiecewisePath(std::vector<Nonneg> breakpoints,
                             std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.empty() || breakpoints_.size() != pieces_.size())
    throw std::invalid_argument(
        "piecewise path needs one piece per breakpoint");
  if (breakpoints_.size() == 1 && breakpoints_[0] == Nonneg(0)) return;
  Nonneg prev(0);
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (!(prev < breakpoints_[k]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
    if (k > 0) {
      Rational len = breakpoints_[k - 1].value() -
                     (k >= 2 ? breakpoints_[k - 2].value() : Rational(0));
      if (pieces_[k - 1](len) != pieces_[k](Rational(0)))
        throw std::invalid_argument("pieces disagree at breakpoint " +
                                    breakpoints_[k - 1].to_string());
    }
    prev = breakpoints_[k];
  }
}

PiecewisePath PiecewisePath::constant(const Rational &x) {
  return PiecewisePath({Nonneg(0)}, {Polynomial::constant(x)});
}

PiecewisePath PiecewisePath::polynomial(const Nonneg &length,
                                        const Polynomial &phi) {
  if (length == Nonneg(0)) return constant(phi(Rational(0)));
  return PiecewisePath({length}, {phi});
}

Rational PiecewisePath::at(const Nonneg &j) const {
  Nonneg i = min(j, shape());
  Rational start(0);
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (leq(i, breakpoints_[k]) || k + 1 == breakpoints_.size())
      return pieces_[k](i.value() - start);
    start = breakpoints_[k].value();
  }
  return pieces_.back()(i.value() - start);
}

Path<Rational> PiecewisePath::to_path() const {
  PiecewisePath self = *this;
  std::vector<Nonneg> bps(breakpoints_.begin(), breakpoints_.end());
  if (!bps.empty()) bps.pop_back();
  return Path<Rational>(
      shape(), [self](const Nonneg &j) { return self.at(j); }, std::move(bps));
}

nlohmann::json PiecewisePath::to_json() const {
  nlohmann::json bps = nlohmann::json::array();
  for (const auto &b : breakpoints_) bps.push_back(b.to_string());
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto &poly : pieces_) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto &c : poly.coeffs()) cs.push_back(c.to_string());
    pieces.push_back(std::move(cs));
  }
  nlohmann::json out;
  out["shape"] = shape().to_string();
  out["breakpoints"] = std::move(bps);
  out["pieces"] = std::move(pieces);
  return out;
}

PiecewisePath PiecewisePath::from_json(const nlohmann::json &j) {
  std::vector<Nonneg> bps;
  for (const auto &b : j.at("breakpoints"))
    bps.push_back(Nonneg::parse(b.get<std::string>()));
  std::vector<Polynomial> pieces;
  for (const auto &piece : j.at("pieces")) {
    std::vector<Rational> cs;
    for (const auto &c : piece) cs.push_back(Rational::parse(c.get<std::string>()));
    pieces.emplace_back(std::move(cs));
  }
  PiecewisePath out(std::move(bps), std::move(pieces));
  if (out.shape() != Nonneg::parse(j.at("shape").get<std::string>()))
    throw std::invalid_argument("shape does not match last breakpoint");
  return out;
}

namespace piecewise {

namespace {

Rational piece_start(const PiecewisePath &p, std::size_t k) {
  return k == 0 ? Rational(0) : p.breakpoints()[k - 1].value();
}

/// The piece covering [a, a + something) re-expressed with local origin a.
Polynomial local_at(const PiecewisePath &p, const Rational &a) {
  const auto &bps = p.breakpoints();
  for (std::size_t k = 0; k < bps.size(); ++k) {
    if (a < bps[k].value() || k + 1 == bps.size())
      return p.pieces()[k].shift(a - piece_start(p, k));
  }
  return p.pieces().back();
}

}  // namespace

PiecewisePath idp(const Rational &x) { return PiecewisePath::constant(x); }

PiecewisePath compose(const PiecewisePath &q, const PiecewisePath &p) {
  if (p.target() != q.source())
    throw EndpointMismatch("cannot compose: target " + p.target().to_string() +
                           " is not source " + q.source().to_string());
  if (q.shape() == Nonneg(0)) return p;
  if (p.shape() == Nonneg(0)) return q;
  std::vector<Nonneg> bps = p.breakpoints();
  std::vector<Polynomial> pieces = p.pieces();
  for (const auto &b : q.breakpoints()) bps.push_back(b + p.shape());
  pieces.insert(pieces.end(), q.pieces().begin(), q.pieces().end());
  return PiecewisePath(std::move(bps), std::move(pieces));
}

PiecewisePath reverse(const PiecewisePath &p) {
  if (p.shape() == Nonneg(0)) return p;
  const Nonneg &s = p.shape();
  std::vector<Nonneg> bps;
  std::vector<Polynomial> pieces;
  for (std::size_t n = p.breakpoints().size(); n-- > 0;) {
    Nonneg start(piece_start(p, n));
    Rational len = p.breakpoints()[n].value() - start.value();
    bps.push_back(truncated_sub(s, start));
    pieces.push_back(p.pieces()[n].compose(Polynomial({len, Rational(-1)})));
  }
  return PiecewisePath(std::move(bps), std::move(pieces));
}

PiecewisePath map(const Polynomial &g, const PiecewisePath &p) {
  std::vector<Polynomial> pieces;
  for (const auto &piece : p.pieces()) pieces.push_back(g.compose(piece));
  return PiecewisePath(p.breakpoints(), std::move(pieces));
}

PiecewisePath babs(const Nonneg &j, const Polynomial &phi) {
  return PiecewisePath::polynomial(j, phi);
}

PiecewisePath upto(const Nonneg &i, const PiecewisePath &p) {
  Nonneg m = min(p.shape(), i);
  if (m == Nonneg(0)) return PiecewisePath::constant(p.source());
  std::vector<Nonneg> bps;
  std::vector<Polynomial> pieces;
  for (std::size_t k = 0; k < p.breakpoints().size(); ++k) {
    if (!(Nonneg(piece_start(p, k)) < m)) break;
    pieces.push_back(p.pieces()[k]);
    bps.push_back(p.breakpoints()[k] < m ? p.breakpoints()[k] : m);
  }
  return PiecewisePath(std::move(bps), std::move(pieces));
}

PiecewisePath from(const Nonneg &i, const PiecewisePath &q) {
  return reverse(upto(truncated_sub(q.shape(), i), reverse(q)));
}

PathEqResult path_eq(const PiecewisePath &p, const PiecewisePath &q) {
  PathEqResult result;
  if (p.shape() != q.shape()) {
    result.equal = false;
    result.shapes_differ = true;
    return result;
  }
  if (p.shape() == Nonneg(0)) {
    if (p.source() != q.source()) {
      result.equal = false;
      result.witness = Nonneg(0);
    }
    return result;
  }
  std::vector<Rational> cuts{Rational(0)};
  for (const auto &b : p.breakpoints()) cuts.push_back(b.value());
  for (const auto &b : q.breakpoints()) cuts.push_back(b.value());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Rational &a = cuts[k];
    const Rational &b = cuts[k + 1];
    Polynomial lp = local_at(p, a);
    Polynomial lq = local_at(q, a);
    if (lp == lq) continue;
    result.equal = false;
    // Two distinct polynomials of degree <= d differ at one of any d + 2
    // distinct points.
    int d = std::max(lp.degree(), lq.degree()) + 1;
    for (int m = 0; m <= d; ++m) {
      Rational t = (b - a) * Rational(m, d);
      if (lp(t) != lq(t)) {
        result.witness = Nonneg(a + t);
        break;
      }
    }
    return result;
  }
  return result;
}

}  // namespace piecewise

}  // namespace mtt
