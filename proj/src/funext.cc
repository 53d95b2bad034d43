#include "mtt/funext.h"

namespace mtt {

ValuePath happly(const ValuePath &p, const Value &x) {
  return map([x](const Value &f) { return apply(f, x); }, p);
}

ValuePath funext(const PointwiseHomotopy &e) {
  auto fam = e.e;
  return babs<Value>(Nonneg(1), [fam](const Nonneg &i) {
    return Value::lambda([fam, i](const Value &x) {
      ValuePath px = fam(x);
      return px.at(i * px.shape());
    });
  });
}

Interpolants interpolants(const Nonneg &j, const Nonneg &s) {
  Nonneg rest = truncated_sub(Nonneg(1), j);
  return Interpolants{rest + j * s, rest * s + j};
}

Path<PointwiseHomotopy> epsilon(const PointwiseHomotopy &e) {
  return babs<PointwiseHomotopy>(Nonneg(1), [e](const Nonneg &j) {
    return PointwiseHomotopy{e.domain, [e, j](const Value &x) {
                               ValuePath px = e(x);
                               Interpolants uv = interpolants(j, px.shape());
                               Nonneg v = uv.v;
                               return babs<Value>(uv.u, [px, v](const Nonneg &i) {
                                 return px.at(i * v);
                               });
                             }};
  });
}

Path<ValuePath> eta(const ValuePath &p) {
  Nonneg s = p.shape();
  return babs<ValuePath>(Nonneg(1), [p, s](const Nonneg &j) {
    Nonneg rest = truncated_sub(Nonneg(1), j);
    Nonneg scale = rest + j * s;
    return babs<Value>(rest * s + j,
                       [p, scale](const Nonneg &i) { return p.at(i * scale); });
  });
}

Value path_at_scaled(const Value &path, const Nonneg &factor) {
  if (const auto *p = path.as<PathV>()) return p->path.at(factor * p->path.shape());
  if (path.is_neutral())
    return Value::neutral(Neutral{Neutral::PathAt{path, factor}});
  throw SemanticError("expected a path, got a " + path.kind_name());
}

Value happly_value(const Value &path, const Value &x) {
  if (const auto *p = path.as<PathV>()) return Value::path(happly(p->path, x));
  if (path.is_neutral())
    return Value::neutral(Neutral{Neutral::Happly{path, x}});
  throw SemanticError("happly of a " + path.kind_name());
}

Value funext_value(const Value &e) {
  return Value::path(babs<Value>(Nonneg(1), [e](const Nonneg &i) {
    return Value::lambda(
        [e, i](const Value &x) { return path_at_scaled(apply(e, x), i); });
  }));
}

}  // namespace mtt
