#ifndef MTT_PARSER_H
#define MTT_PARSER_H

#include <string>
#include <string_view>
#include <vector>

#include "mtt/syntax.h"

namespace mtt {

enum class Tok {
  Ident, Keyword, Number, Symbol, End,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

/// Splits source text into tokens; `--` starts a line comment.
/// Throws ParseError on characters outside the grammar.
std::vector<Token> lex(std::string_view source);

/// A single term, closed except for references to globals.
TermPtr parse_term(std::string_view source);

/// A sequence of `def name : T := t` (or `def name := t`) definitions.
std::vector<Definition> parse_program(std::string_view source);

}  // namespace mtt

#endif  // MTT_PARSER_H
