#ifndef MTT_SYNTAX_H
#define MTT_SYNTAX_H

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtt/ring.h"

namespace mtt {

struct Span {
  int line = 1;
  int col = 1;
};

/// A diagnostic tied to a source position.
class SourceError : public std::runtime_error {
 public:
  SourceError(Span span, const std::string &message)
      : std::runtime_error(message), span_(span) {}
  const Span &span() const { return span_; }

 private:
  Span span_;
};

class ParseError : public SourceError {
 public:
  using SourceError::SourceError;
};

class TypeError : public SourceError {
 public:
  using SourceError::SourceError;
};

/// "file:line:col: message"
std::string format_error(const std::string &file, const SourceError &e);

enum class Tag {
  Var, Global, Lam, App, Let, Ann,
  Pi, Sigma, Plus, Times, Minus,
  Pair, Fst, Snd, Inl, Inr, Case,
  True, False, If, Tt, Zero, Succ, Natrec, Num,
  Sup, Wrec, W,
  Refl, J, Funext, Happly, Absurd,
  Bool, Nat, Empty, Unit, R, U, El, Id,
  CodeBool, CodePi, CodeEq,
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// A subterm together with the names it binds, innermost last.
struct Scoped {
  std::vector<std::string> binders;
  TermPtr term;  // null for an omitted motive
};

/// Surface syntax with de Bruijn indices. Child layout per tag:
///
///   Lam [x. b]          App [f, a]            Let [T, t, x. u]   Ann [t, T]
///   Pi/Sigma/W [A, x. B]                      Plus/Times/Minus [a, b]
///   Pair [a, b]         Fst/Snd/Inl/Inr/Succ/Refl/Funext/El [a]
///   Case [x. P?, s, a. l, b. r]               If [x. P?, c, t, e]
///   Natrec [x. P?, n, z, k ih. s]             Sup [a, f]
///   Wrec [w. P?, t, a f ih. s]                J [a1 a2 q. P, a. d, p]
///   Happly [p, a]       Absurd [x. P?, e]     Id [A, a, b]
///   CodePi [u, x. v]    CodeEq [u, a, b]
struct Term {
  Tag tag = Tag::Var;
  Span span;
  int index = 0;     // Var
  std::string name;  // Var, Global; the literal text of Num
  std::vector<Scoped> kids;

  const TermPtr &kid(std::size_t k) const { return kids[k].term; }
};

std::shared_ptr<Term> make_term(Tag tag, Span span, std::vector<Scoped> kids = {});

struct Definition {
  std::string name;
  Span span;
  TermPtr type;  // null when omitted
  TermPtr body;
};

/// Structural equality ignoring spans.
bool same_syntax(const Term &a, const Term &b);

/// Precedence-aware rendering that parses back to the same syntax.
std::string print(const Term &t);
std::string print(const Definition &d);

}  // namespace mtt

#endif  // MTT_SYNTAX_H
