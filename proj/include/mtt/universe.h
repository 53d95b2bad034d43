#ifndef MTT_UNIVERSE_H
#define MTT_UNIVERSE_H

#include <optional>
#include <stdexcept>
#include <string>

#include "mtt/fib.h"
#include "mtt/path.h"
#include "mtt/value.h"

namespace mtt {

/// Codes of the universe are values built with Value::code_bool,
/// Value::code_pi and Value::code_eq; a neutral value is a stuck code.
enum class CodeKind { boolean, pi, eq, stuck };

CodeKind code_kind(const Value &code);
std::string to_string(CodeKind kind);

/// T(u): Bool, a dependent function type, or a path type.
SemType decode(const Value &code);

/// A path in U whose outermost constructor is not the one at its source.
class ConstructorChange : public std::runtime_error {
 public:
  ConstructorChange(Nonneg probe, CodeKind from, CodeKind to);

  const Nonneg &probe() const { return probe_; }
  CodeKind from() const { return from_; }
  CodeKind to() const { return to_; }

 private:
  Nonneg probe_;
  CodeKind from_, to_;
};

/// Raised when code recursion exceeds kUniverseDepth nested transports.
class UniverseDepthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kUniverseDepth = 512;

struct StabilityResult {
  bool stable = true;
  /// First probe whose constructor differs from the source's.
  std::optional<Nonneg> witness;
  CodeKind at_witness = CodeKind::stuck;

  explicit operator bool() const { return stable; }
};

StabilityResult constructor_stable(const ValuePath &p,
                                   const SampleSpec &spec = {});

/// Probe set used by u_transport to check its precondition.
inline constexpr SampleSpec kTransportProbes{SampleSpec::kDefaultSeed, 16};

/// Transport in T along a path of codes, by cases on the constructor at
/// the source. Throws ConstructorChange when a probe leaves that
/// constructor.
Value u_transport(const ValuePath &p, const Value &a,
                  const SampleSpec &spec = kTransportProbes, int depth = 0);

/// For a path p of pi-codes with domain path v and shape i, the element
/// x̄ k of T(v k) obtained by transporting x : T(v i) back along v.
Value pi_domain_transport(const ValuePath &p, const Value &x, const Nonneg &k,
                          const SampleSpec &spec = kTransportProbes,
                          int depth = 0);

/// T as a fibration over U.
Fibration universe_fibration(const SampleSpec &spec = kTransportProbes,
                             int depth = 0);

}  // namespace mtt

#endif  // MTT_UNIVERSE_H
