#include "mtt/universe.h"

#include <map>
#include <mutex>

namespace mtt {

CodeKind code_kind(const Value &code) {
  if (code.as<CodeBoolV>()) return CodeKind::boolean;
  if (code.as<CodePiV>()) return CodeKind::pi;
  if (code.as<CodeEqV>()) return CodeKind::eq;
  if (code.is_neutral()) return CodeKind::stuck;
  throw SemanticError("expected a universe code, got a " + code.kind_name());
}

std::string to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::boolean:
      return "#bool";
    case CodeKind::pi:
      return "#pi";
    case CodeKind::eq:
      return "#eq";
    case CodeKind::stuck:
      break;
  }
  return "stuck code";
}

SemType decode(const Value &code) { return SemType::el(code); }

ConstructorChange::ConstructorChange(Nonneg probe, CodeKind from, CodeKind to)
    : std::runtime_error("path in U changes constructor from " + to_string(from) +
                         " to " + to_string(to) + " at " + probe.to_string()),
      probe_(std::move(probe)),
      from_(from),
      to_(to) {}

StabilityResult constructor_stable(const ValuePath &p, const SampleSpec &spec) {
  StabilityResult out;
  CodeKind start = code_kind(p.source());
  for (const auto &k : p.probes(spec)) {
    CodeKind here = code_kind(p.at(k));
    if (here != start) {
      out.stable = false;
      out.witness = k;
      out.at_witness = here;
      return out;
    }
  }
  return out;
}

namespace {

template <typename T>
const T &expect(const Value &code, CodeKind start, const Nonneg &k) {
  if (const auto *c = code.as<T>()) return *c;
  throw ConstructorChange(k, start, code_kind(code));
}

void guard(int depth) {
  if (depth > kUniverseDepth)
    throw UniverseDepthExceeded("transport in U nested more than " +
                                std::to_string(kUniverseDepth) + " levels");
}

/// Caches evaluations of `f`; transports along derived paths revisit the
/// same parameters many times.
template <typename F>
std::function<Value(const Nonneg &)> memoized(F f) {
  struct Cache {
    std::mutex mutex;
    std::map<Nonneg, Value> values;
  };
  auto cache = std::make_shared<Cache>();
  return [f = std::move(f), cache](const Nonneg &k) {
    {
      std::lock_guard<std::mutex> lock(cache->mutex);
      auto it = cache->values.find(k);
      if (it != cache->values.end()) return it->second;
    }
    Value v = f(k);
    std::lock_guard<std::mutex> lock(cache->mutex);
    return cache->values.emplace(k, std::move(v)).first->second;
  };
}

ValuePath domain_path(const ValuePath &p) {
  return ValuePath(
      p.shape(),
      [p](const Nonneg &k) { return expect<CodePiV>(p.at(k), CodeKind::pi, k).domain; },
      p.breakpoints());
}

}  // namespace

Value pi_domain_transport(const ValuePath &p, const Value &x, const Nonneg &k,
                          const SampleSpec &spec, int depth) {
  ValuePath v = domain_path(p);
  Nonneg i = p.shape();
  auto back = babs<Value>(truncated_sub(i, k), [v, i](const Nonneg &j) {
    return v.at(truncated_sub(i, j));
  });
  return u_transport(back, x, spec, depth + 1);
}

Value u_transport(const ValuePath &p, const Value &a, const SampleSpec &spec,
                  int depth) {
  guard(depth);
  CodeKind start = code_kind(p.source());
  if (start == CodeKind::stuck) {
    if (p.shape() == Nonneg(0)) return a;
    return Value::neutral(Neutral{Neutral::Transport{a, p, "El"}});
  }
  auto stable = constructor_stable(p, spec);
  if (!stable) throw ConstructorChange(*stable.witness, start, stable.at_witness);

  switch (start) {
    case CodeKind::boolean:
      return a;
    case CodeKind::pi: {
      Nonneg i = p.shape();
      return Value::lambda([p, a, i, spec, depth](const Value &x) {
        auto xbar = memoized([p, x, spec, depth](const Nonneg &k) {
          return pi_domain_transport(p, x, k, spec, depth);
        });
        auto gbar = babs<Value>(i, memoized([p, xbar](const Nonneg &k) {
          return expect<CodePiV>(p.at(k), CodeKind::pi, k).codomain(xbar(k));
        }));
        return u_transport(gbar, apply(a, xbar(Nonneg(0))), spec, depth + 1);
      });
    }
    case CodeKind::eq: {
      ValuePath q(
          p.shape(),
          memoized([p](const Nonneg &k) {
            Value code = p.at(k);
            const auto &c = expect<CodeEqV>(code, CodeKind::eq, k);
            return Value::pair(Value::pair(c.domain, c.lhs), c.rhs);
          }),
          p.breakpoints());
      return id_fib(universe_fibration(spec, depth + 1)).transp(q, a);
    }
    case CodeKind::stuck:
      break;
  }
  return a;
}

Fibration universe_fibration(const SampleSpec &spec, int depth) {
  return Fibration{
      [](const Value &code) { return decode(code); },
      [spec, depth](const ValuePath &p, const Value &a) {
        return u_transport(p, a, spec, depth);
      },
      "El"};
}

}  // namespace mtt
