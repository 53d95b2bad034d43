#ifndef MTT_VALUE_H
#define MTT_VALUE_H

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mtt/path.h"
#include "mtt/ring.h"

namespace mtt {

class Value;
class SemType;
struct Neutral;

using ValuePath = Path<Value>;
using Fn = std::function<Value(const Value &)>;
using Fn2 = std::function<Value(const Value &, const Value &)>;
using Fn3 = std::function<Value(const Value &, const Value &, const Value &)>;
using Family = std::function<SemType(const Value &)>;

/// A semantic value. Immutable and cheap to copy.
///
/// Closed computations produce canonical values; computations blocked on a
/// variable produce a neutral value, which only arises while checking under
/// binders.
class Value {
 public:
  struct Node;

  Value();  // tt

  static Value unit();
  static Value boolean(bool b);
  static Value nat(std::uint64_t n);
  /// succ of a possibly neutral natural number.
  static Value succ(const Value &n);
  static Value scalar(const Rational &r);
  static Value pair(Value first, Value second);
  static Value inl(Value v);
  static Value inr(Value v);
  static Value lambda(Fn fn);
  static Value path(ValuePath p);
  static Value sup(Value label, Fn children);
  static Value code_bool();
  static Value code_pi(Value domain, Fn codomain);
  static Value code_eq(Value domain, Value lhs, Value rhs);
  static Value neutral(Neutral n);
  /// A fresh variable at the given de Bruijn level.
  static Value var(int level, std::string name = {});

  template <typename T>
  const T *as() const;
  const Node &node() const { return *node_; }

  bool is_neutral() const;
  /// Human-readable kind for diagnostics ("bool", "pair", ...).
  std::string kind_name() const;

 private:
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct UnitV {};
struct BoolV {
  bool value;
};
struct NatV {
  std::uint64_t value;
};
/// succ n for neutral n; concrete successors are always NatV.
struct SuccV {
  Value pred;
};
struct ScalarV {
  Rational value;
};
struct PairV {
  Value first, second;
};
struct InlV {
  Value value;
};
struct InrV {
  Value value;
};
struct LambdaV {
  Fn fn;
};
struct PathV {
  ValuePath path;
};
struct SupV {
  Value label;
  Fn children;
};
struct CodeBoolV {};
struct CodePiV {
  Value domain;
  Fn codomain;
};
struct CodeEqV {
  Value domain, lhs, rhs;
};
struct NeutralV {
  std::shared_ptr<const Neutral> neutral;
};

struct Value::Node {
  std::variant<UnitV, BoolV, NatV, SuccV, ScalarV, PairV, InlV, InrV, LambdaV,
               PathV, SupV, CodeBoolV, CodePiV, CodeEqV, NeutralV>
      v;
};

template <typename T>
const T *Value::as() const {
  return std::get_if<T>(&node_->v);
}

/// Ring arithmetic, lifted to neutral operands.
enum class ArithOp { add, mul, sub };

/// A computation blocked on a variable.
struct Neutral {
  struct Var {
    int level;
    std::string name;
  };
  struct App {
    Value head;
    Value arg;
  };
  struct Fst {
    Value head;
  };
  struct Snd {
    Value head;
  };
  struct BoolElim {
    Value head;
    Value on_true, on_false;
  };
  struct NatElim {
    Value head;
    Value zero;
    Fn2 step;
  };
  struct SumElim {
    Value head;
    Fn on_inl, on_inr;
  };
  struct Absurd {
    Value head;
  };
  struct WElim {
    Value head;
    Fn3 step;
  };
  struct JElim {
    Value head;  // the path
    Fn base;
    std::string motive;
  };
  struct Happly {
    Value head;
    Value arg;
  };
  /// The value of a path at factor * shape.
  struct PathAt {
    Value head;
    Nonneg factor;
  };
  /// Transport of a blocked element along a concrete path.
  struct Transport {
    Value head;
    ValuePath along;
    std::string family;
  };
  struct Arith {
    ArithOp op;
    Value lhs, rhs;
  };

  std::variant<Var, App, Fst, Snd, BoolElim, NatElim, SumElim, Absurd, WElim,
               JElim, Happly, PathAt, Transport, Arith>
      v;
};

/// Raised when a semantic operation receives a value of the wrong shape.
/// Well-typed programs never trigger it.
class SemanticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Eliminators. Each reduces on canonical values and blocks on neutral ones.
Value apply(const Value &f, const Value &x);
Value fst(const Value &p);
Value snd(const Value &p);
Value bool_elim(const Value &b, const Value &on_true, const Value &on_false);
/// natrec n z (k, ih. step)
Value nat_elim(const Value &n, const Value &zero, const Fn2 &step);
Value sum_elim(const Value &s, const Fn &on_inl, const Fn &on_inr);
Value absurd(const Value &e);
/// wrec w (a, f, ih. step); ih is the function b |-> wrec (f b).
Value w_elim(const Value &w, const Fn3 &step);
Value arith(ArithOp op, const Value &a, const Value &b);

bool as_bool(const Value &v);
const ValuePath &as_path(const Value &v);
const Rational &as_scalar(const Value &v);

// Semantic types.

struct BoolT {};
struct NatT {};
struct EmptyT {};
struct UnitT {};
/// The positive cone of the scalar ring.
struct RingT {};
struct UniverseT {};

class SemType {
 public:
  struct Node;

  SemType();  // Unit

  static SemType boolean();
  static SemType nat();
  static SemType empty();
  static SemType unit();
  static SemType ring();
  static SemType universe();
  static SemType pi(SemType domain, Family codomain, std::string binder = "x");
  static SemType sigma(SemType domain, Family codomain, std::string binder = "x");
  static SemType arrow(SemType domain, SemType codomain);
  static SemType product(SemType first, SemType second);
  static SemType sum(SemType left, SemType right);
  static SemType w(SemType label, Family branch, std::string binder = "x");
  static SemType id(SemType carrier, Value lhs, Value rhs);
  /// Decoding of a universe code; blocks on neutral codes.
  static SemType el(const Value &code);
  /// Large elimination of Bool; blocks on a neutral condition.
  static SemType cases(const Value &cond, SemType on_true, SemType on_false);

  template <typename T>
  const T *as() const;
  const Node &node() const { return *node_; }
  std::string kind_name() const;

 private:
  explicit SemType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct PiT {
  SemType domain;
  Family codomain;
  std::string binder;
};
struct SigmaT {
  SemType domain;
  Family codomain;
  std::string binder;
};
struct SumT {
  SemType left, right;
};
struct WT {
  SemType label;
  Family branch;
  std::string binder;
};
struct IdT {
  SemType carrier;
  Value lhs, rhs;
};
/// El of a neutral code.
struct ElT {
  Value code;
};
/// A type-level if on a neutral condition.
struct IfT {
  Value cond;
  SemType on_true, on_false;
};

struct SemType::Node {
  std::variant<BoolT, NatT, EmptyT, UnitT, RingT, UniverseT, PiT, SigmaT, SumT,
               WT, IdT, ElT, IfT>
      v;
};

template <typename T>
const T *SemType::as() const {
  return std::get_if<T>(&node_->v);
}

// Extensional equality.

/// Outcome of a semantic comparison with a description of the first
/// distinguishing probe, when there is one.
struct Conversion {
  bool equal = true;
  std::string witness;

  explicit operator bool() const { return equal; }
  static Conversion yes() { return {}; }
  static Conversion no(std::string why) { return {false, std::move(why)}; }
};

struct EqualityContext {
  /// First de Bruijn level not in use; fresh variables start here.
  int depth = 0;
  SampleSpec spec{};
};

/// Exhaustive element list for small finite types (Bool, Unit, Empty, El of
/// finite codes and sums/pairs of these), or nothing.
std::optional<std::vector<Value>> enumerate(const SemType &ty,
                                            std::size_t limit = 64);

/// Closed sample elements for probing functions out of `ty`. Empty when the
/// type has no generator; callers then apply to a fresh variable.
std::vector<Value> probe_elements(const SemType &ty, const SampleSpec &spec);

/// Equality at a type: exact on data, enumerated on finite function domains,
/// probed on other function domains and on paths (shapes compared exactly).
Conversion equal_values(const SemType &ty, const Value &a, const Value &b,
                        const EqualityContext &ctx = {});
/// Type-directed equality is not always available (neutral spines); this
/// compares structurally, applying functions to fresh variables.
Conversion equal_untyped(const Value &a, const Value &b,
                         const EqualityContext &ctx = {});
Conversion equal_types(const SemType &a, const SemType &b,
                       const EqualityContext &ctx = {});

/// Path comparison at a carrier type.
Conversion equal_paths(const SemType &carrier, const ValuePath &p,
                       const ValuePath &q, const EqualityContext &ctx = {});

// Printing.

/// Canonical rendering; paths print as `{shape = s; samples = [...]}`.
std::string show(const Value &v);
std::string show(const SemType &t, int depth = 0);

}  // namespace mtt

#endif  // MTT_VALUE_H
