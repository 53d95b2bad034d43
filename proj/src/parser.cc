#include "mtt/parser.h"

#include <cctype>
#include <set>
#include <utility>

namespace mtt {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "def",    "let",   "in",     "if",    "then",  "else",  "W",     "Id",
    "El",     "U",     "R",      "Bool",  "Nat",   "Empty", "Unit",  "true",
    "false",  "tt",    "zero",   "succ",  "fst",   "snd",   "inl",   "inr",
    "case",   "natrec", "wrec",  "sup",   "refl",  "J",     "funext", "happly",
    "absurd", "#bool", "#pi",    "#eq"};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span span{line, col};
    if (ident_start(c) || c == '#') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string text(src.substr(i, j - i));
      if (c == '#' && !kKeywords.contains(text))
        throw ParseError(span, "unknown code former '" + text + "'");
      out.push_back({kKeywords.contains(text) ? Tok::Keyword : Tok::Ident, text, span});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' &&
          std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    for (std::string_view sym : {":=", "->"}) {
      if (src.substr(i, 2) == sym) {
        out.push_back({Tok::Symbol, std::string(sym), span});
        advance(2);
        goto next;
      }
    }
    if (std::string_view("\\.()[]:*+-,").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), span});
      advance(1);
      continue;
    }
    throw ParseError(span, std::string("unexpected character '") + c + "'");
  next:;
  }
  out.push_back({Tok::End, "", Span{line, col}});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Definition> program() {
    std::vector<Definition> defs;
    while (peek().kind != Tok::End) {
      Span span = peek().span;
      expect_keyword("def");
      Definition d;
      d.span = span;
      d.name = expect_ident();
      if (at_symbol(":")) {
        next();
        d.type = term();
      }
      expect_symbol(":=");
      d.body = term();
      defs.push_back(std::move(d));
    }
    return defs;
  }

  TermPtr whole_term() {
    TermPtr t = term();
    if (peek().kind != Tok::End) fail("end of input");
    return t;
  }

 private:
  const Token &peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token &next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_symbol(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Symbol && peek(k).text == s;
  }
  bool at_keyword(std::string_view s) const {
    return peek().kind == Tok::Keyword && peek().text == s;
  }
  bool at_binder_name(std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident;
  }

  [[noreturn]] void fail(const std::string &expected) const {
    const Token &t = peek();
    if (t.kind == Tok::End && !open_.empty())
      throw ParseError(open_.back(), "unexpected end of input: '" +
                                         std::string(1, closer_.back()) +
                                         "' expected to close this group");
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.span, "expected " + expected + ", found " + found);
  }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("'" + std::string(s) + "'");
    next();
  }
  void expect_keyword(std::string_view s) {
    if (!at_keyword(s)) fail("'" + std::string(s) + "'");
    next();
  }
  std::string expect_ident() {
    if (!at_binder_name()) fail("a name");
    return next().text;
  }

  void open(char closer) {
    open_.push_back(peek().span);
    closer_.push_back(closer);
    next();
  }
  void close() {
    expect_symbol(std::string(1, closer_.back()));
    open_.pop_back();
    closer_.pop_back();
  }

  /// Parses `body` with `names` bound.
  template <typename F>
  Scoped under(std::vector<std::string> names, F body) {
    for (const auto &n : names) scope_.push_back(n);
    TermPtr t = body();
    scope_.resize(scope_.size() - names.size());
    return Scoped{std::move(names), std::move(t)};
  }

  static Scoped plain(TermPtr t) { return Scoped{{}, std::move(t)}; }

  TermPtr term() {
    Span span = peek().span;
    if (at_symbol("\\")) {
      next();
      std::vector<std::string> names;
      do names.push_back(expect_ident());
      while (at_binder_name());
      expect_symbol(".");
      return lambdas(span, names, 0);
    }
    if (at_keyword("let")) {
      next();
      std::string name = expect_ident();
      expect_symbol(":");
      TermPtr ty = term();
      expect_symbol(":=");
      TermPtr val = term();
      expect_keyword("in");
      Scoped body = under({name}, [&] { return term(); });
      return make_term(Tag::Let, span, {plain(ty), plain(val), body});
    }
    if (at_keyword("if")) {
      next();
      Scoped m = motive(1);
      TermPtr c = term();
      expect_keyword("then");
      TermPtr t = term();
      expect_keyword("else");
      TermPtr e = term();
      return make_term(Tag::If, span, {m, plain(c), plain(t), plain(e)});
    }
    if (at_keyword("W")) {
      next();
      if (!at_symbol("(")) fail("'('");
      open(')');
      std::string name = expect_ident();
      expect_symbol(":");
      TermPtr a = term();
      close();
      expect_symbol(".");
      Scoped b = under({name}, [&] { return term(); });
      return make_term(Tag::W, span, {plain(a), b});
    }
    TermPtr t = arrow();
    if (at_symbol(":")) {
      next();
      TermPtr ty = term();
      return make_term(Tag::Ann, span, {plain(t), plain(ty)});
    }
    return t;
  }

  TermPtr lambdas(Span span, const std::vector<std::string> &names, std::size_t k) {
    if (k == names.size()) return term();
    Scoped body = under({names[k]}, [&] { return lambdas(span, names, k + 1); });
    return make_term(Tag::Lam, span, {body});
  }

  /// `(x y : A)` followed by `->` or `*`.
  bool at_telescope() const {
    if (!at_symbol("(")) return false;
    std::size_t k = 1;
    while (peek(k).kind == Tok::Ident) ++k;
    return k > 1 && at_symbol(":", k);
  }

  TermPtr arrow() {
    Span span = peek().span;
    if (at_telescope()) {
      std::size_t saved = pos_;
      open(')');
      std::vector<std::string> names;
      while (at_binder_name()) names.push_back(next().text);
      expect_symbol(":");
      TermPtr dom = term();
      close();
      if (at_telescope()) return telescope(span, true, names, 0, dom);
      if (at_symbol("->") || at_symbol("*")) {
        bool pi = at_symbol("->");
        next();
        return telescope(span, pi, names, 0, dom);
      }
      pos_ = saved;
    }
    TermPtr lhs = additive();
    if (at_symbol("->")) {
      next();
      Scoped b = under({"_"}, [&] { return codomain(); });
      return make_term(Tag::Pi, span, {plain(lhs), b});
    }
    return lhs;
  }

  /// Right of `->`: binding forms extend as far as possible.
  TermPtr codomain() {
    if (at_symbol("\\") || at_keyword("let") || at_keyword("if") || at_keyword("W"))
      return term();
    return arrow();
  }

  TermPtr telescope(Span span, bool pi, const std::vector<std::string> &names,
                    std::size_t k, const TermPtr &dom) {
    // `(x y : A)` binds y under x, so A is lifted past the earlier names.
    TermPtr lifted = k == 0 ? dom : shift(dom, static_cast<int>(k), 0);
    Scoped b = under({names[k]}, [&] {
      if (k + 1 < names.size()) return telescope(span, pi, names, k + 1, dom);
      return pi ? codomain() : product();
    });
    return make_term(pi ? Tag::Pi : Tag::Sigma, span, {plain(lifted), b});
  }

  /// `(x : A) * B`, or a plain factor.
  TermPtr product() {
    Span span = peek().span;
    if (at_telescope()) {
      std::size_t saved = pos_;
      open(')');
      std::vector<std::string> names;
      while (at_binder_name()) names.push_back(next().text);
      expect_symbol(":");
      TermPtr dom = term();
      close();
      if (at_symbol("*")) {
        next();
        return telescope(span, false, names, 0, dom);
      }
      pos_ = saved;
    }
    return multiplicative();
  }

  static TermPtr shift(const TermPtr &t, int by, int cutoff) {
    if (!t) return t;
    auto copy = std::make_shared<Term>(*t);
    if (copy->tag == Tag::Var && copy->index >= cutoff) copy->index += by;
    for (auto &kid : copy->kids)
      kid.term = shift(kid.term, by, cutoff + static_cast<int>(kid.binders.size()));
    return copy;
  }

  TermPtr additive() {
    TermPtr lhs = multiplicative();
    while (at_symbol("+") || at_symbol("-")) {
      Span span = peek().span;
      Tag tag = next().text == "+" ? Tag::Plus : Tag::Minus;
      TermPtr rhs = multiplicative();
      lhs = make_term(tag, span, {plain(lhs), plain(rhs)});
    }
    return lhs;
  }

  TermPtr multiplicative() {
    TermPtr lhs = application();
    if (at_symbol("*")) {
      Span span = peek().span;
      next();
      TermPtr rhs = multiplicative();
      return make_term(Tag::Times, span, {plain(lhs), plain(rhs)});
    }
    return lhs;
  }

  bool starts_atom() const {
    const Token &t = peek();
    if (t.kind == Tok::Ident || t.kind == Tok::Number) return true;
    if (t.kind == Tok::Symbol) return t.text == "(";
    if (t.kind == Tok::Keyword)
      return t.text == "true" || t.text == "false" || t.text == "tt" ||
             t.text == "zero" || t.text == "Bool" || t.text == "Nat" ||
             t.text == "Empty" || t.text == "Unit" || t.text == "R" ||
             t.text == "U" || t.text == "#bool";
    return false;
  }

  /// `[x y. P]` when present.
  Scoped motive(std::size_t n) {
    if (!at_symbol("[")) return Scoped{};
    open(']');
    Scoped s = group_body(n);
    close();
    return s;
  }

  /// `(x y. t)`
  Scoped group(std::size_t n) {
    if (!at_symbol("(")) fail("a binder group '(x. t)'");
    open(')');
    Scoped s = group_body(n);
    close();
    return s;
  }

  Scoped group_body(std::size_t n) {
    std::vector<std::string> names;
    while (at_binder_name()) names.push_back(next().text);
    if (!at_symbol(".")) fail(names.size() < n ? "a binder name" : "'.'");
    if (names.size() != n)
      throw ParseError(peek().span, "expected " + std::to_string(n) +
                                        " binder name" + (n == 1 ? "" : "s") +
                                        ", found " + std::to_string(names.size()));
    next();
    return under(std::move(names), [&] { return term(); });
  }

  TermPtr application() {
    Span span = peek().span;
    TermPtr head;
    auto atoms = [&](Tag tag, std::size_t n) {
      next();
      std::vector<Scoped> kids;
      for (std::size_t k = 0; k < n; ++k) kids.push_back(plain(atom()));
      return make_term(tag, span, std::move(kids));
    };
    const Token &t = peek();
    if (t.kind == Tok::Keyword) {
      const std::string &kw = t.text;
      if (kw == "succ") head = atoms(Tag::Succ, 1);
      else if (kw == "fst") head = atoms(Tag::Fst, 1);
      else if (kw == "snd") head = atoms(Tag::Snd, 1);
      else if (kw == "inl") head = atoms(Tag::Inl, 1);
      else if (kw == "inr") head = atoms(Tag::Inr, 1);
      else if (kw == "refl") head = atoms(Tag::Refl, 1);
      else if (kw == "funext") head = atoms(Tag::Funext, 1);
      else if (kw == "El") head = atoms(Tag::El, 1);
      else if (kw == "sup") head = atoms(Tag::Sup, 2);
      else if (kw == "happly") head = atoms(Tag::Happly, 2);
      else if (kw == "Id") head = atoms(Tag::Id, 3);
      else if (kw == "#eq") head = atoms(Tag::CodeEq, 3);
      else if (kw == "#pi") {
        next();
        TermPtr u = atom();
        head = make_term(Tag::CodePi, span, {plain(u), group(1)});
      } else if (kw == "natrec") {
        next();
        Scoped m = motive(1);
        TermPtr n = atom();
        TermPtr z = atom();
        head = make_term(Tag::Natrec, span, {m, plain(n), plain(z), group(2)});
      } else if (kw == "case") {
        next();
        Scoped m = motive(1);
        TermPtr s = atom();
        Scoped l = group(1);
        head = make_term(Tag::Case, span, {m, plain(s), l, group(1)});
      } else if (kw == "wrec") {
        next();
        Scoped m = motive(1);
        TermPtr w = atom();
        head = make_term(Tag::Wrec, span, {m, plain(w), group(3)});
      } else if (kw == "absurd") {
        next();
        Scoped m = motive(1);
        head = make_term(Tag::Absurd, span, {m, plain(atom())});
      } else if (kw == "J") {
        next();
        Scoped m = group(3);
        Scoped d = group(1);
        head = make_term(Tag::J, span, {m, d, plain(atom())});
      }
    }
    if (!head) head = atom();
    while (starts_atom()) {
      Span s = peek().span;
      TermPtr arg = atom();
      head = make_term(Tag::App, s, {plain(head), plain(arg)});
    }
    return head;
  }

  TermPtr atom() {
    const Token &t = peek();
    Span span = t.span;
    switch (t.kind) {
      case Tok::Ident: {
        std::string name = next().text;
        if (name == "_") throw ParseError(span, "'_' cannot be used as a variable");
        for (std::size_t k = scope_.size(); k-- > 0;) {
          if (scope_[k] == name) {
            auto v = make_term(Tag::Var, span);
            v->index = static_cast<int>(scope_.size() - 1 - k);
            v->name = name;
            return v;
          }
        }
        auto g = make_term(Tag::Global, span);
        g->name = name;
        return g;
      }
      case Tok::Number: {
        auto n = make_term(Tag::Num, span);
        n->name = next().text;
        try {
          Rational::parse(n->name);
        } catch (const std::invalid_argument &e) {
          throw ParseError(span, e.what());
        }
        return n;
      }
      case Tok::Keyword: {
        static const std::pair<const char *, Tag> constants[] = {
            {"true", Tag::True},   {"false", Tag::False}, {"tt", Tag::Tt},
            {"zero", Tag::Zero},   {"Bool", Tag::Bool},   {"Nat", Tag::Nat},
            {"Empty", Tag::Empty}, {"Unit", Tag::Unit},   {"R", Tag::R},
            {"U", Tag::U},         {"#bool", Tag::CodeBool}};
        for (const auto &[kw, tag] : constants) {
          if (t.text == kw) {
            next();
            return make_term(tag, span);
          }
        }
        fail("a term");
      }
      case Tok::Symbol:
        if (t.text == "(") {
          open(')');
          TermPtr e = term();
          if (at_symbol(",")) e = pair_tail(span, e);
          close();
          return e;
        }
        fail("a term");
      case Tok::End:
        fail("a term");
    }
    fail("a term");
  }

  TermPtr pair_tail(Span span, TermPtr first) {
    next();
    TermPtr second = term();
    if (at_symbol(",")) second = pair_tail(peek().span, second);
    return make_term(Tag::Pair, span, {plain(first), plain(second)});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  std::vector<Span> open_;
  std::vector<char> closer_;
};

}  // namespace

TermPtr parse_term(std::string_view source) {
  return Parser(lex(source)).whole_term();
}

std::vector<Definition> parse_program(std::string_view source) {
  return Parser(lex(source)).program();
}

}  // namespace mtt
