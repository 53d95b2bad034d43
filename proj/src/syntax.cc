#include "mtt/syntax.h"

namespace mtt {

std::string format_error(const std::string &file, const SourceError &e) {
  return file + ":" + std::to_string(e.span().line) + ":" +
         std::to_string(e.span().col) + ": " + e.what();
}

std::shared_ptr<Term> make_term(Tag tag, Span span, std::vector<Scoped> kids) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->span = span;
  t->kids = std::move(kids);
  return t;
}

bool same_syntax(const Term &a, const Term &b) {
  if (a.tag != b.tag || a.index != b.index || a.name != b.name ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t k = 0; k < a.kids.size(); ++k) {
    const auto &x = a.kids[k];
    const auto &y = b.kids[k];
    if (x.binders != y.binders || !x.term != !y.term) return false;
    if (x.term && !same_syntax(*x.term, *y.term)) return false;
  }
  return true;
}

namespace {

int level(Tag tag) {
  switch (tag) {
    case Tag::Lam:
    case Tag::Let:
    case Tag::If:
    case Tag::W:
    case Tag::Ann:
      return 0;
    case Tag::Pi:
    case Tag::Sigma:
      return 1;
    case Tag::Plus:
    case Tag::Minus:
      return 2;
    case Tag::Times:
      return 3;
    case Tag::Var:
    case Tag::Global:
    case Tag::Num:
    case Tag::Pair:
    case Tag::True:
    case Tag::False:
    case Tag::Tt:
    case Tag::Zero:
    case Tag::Bool:
    case Tag::Nat:
    case Tag::Empty:
    case Tag::Unit:
    case Tag::R:
    case Tag::U:
    case Tag::CodeBool:
      return 5;
    default:
      return 4;
  }
}

std::string pr(const Term &t, int prec);

std::string pr(const TermPtr &t, int prec) { return pr(*t, prec); }

std::string names(const std::vector<std::string> &ns) {
  std::string out;
  for (const auto &n : ns) out += (out.empty() ? "" : " ") + n;
  return out;
}

std::string group(const Scoped &s) {
  return "(" + names(s.binders) + ". " + pr(s.term, 0) + ")";
}

std::string motive(const Scoped &s) {
  if (!s.term) return "";
  return " [" + names(s.binders) + ". " + pr(s.term, 0) + "]";
}

std::string head(const char *kw, const Term &t) {
  std::string out = kw;
  for (const auto &k : t.kids) out += " " + pr(k.term, 5);
  return out;
}

std::string body(const Term &t) {
  switch (t.tag) {
    case Tag::Var:
    case Tag::Global:
    case Tag::Num:
      return t.name;
    case Tag::Lam: {
      std::vector<std::string> ns;
      const Term *cur = &t;
      while (cur->tag == Tag::Lam) {
        ns.push_back(cur->kids[0].binders[0]);
        cur = cur->kid(0).get();
      }
      return "\\" + names(ns) + ". " + pr(*cur, 0);
    }
    case Tag::App:
      return pr(t.kid(0), 4) + " " + pr(t.kid(1), 5);
    case Tag::Let:
      return "let " + t.kids[2].binders[0] + " : " + pr(t.kid(0), 0) +
             " := " + pr(t.kid(1), 0) + " in " + pr(t.kid(2), 0);
    case Tag::Ann:
      return pr(t.kid(0), 1) + " : " + pr(t.kid(1), 0);
    case Tag::Pi:
      if (t.kids[1].binders[0] == "_")
        return pr(t.kid(0), 2) + " -> " + pr(t.kid(1), 1);
      return "(" + t.kids[1].binders[0] + " : " + pr(t.kid(0), 0) + ") -> " +
             pr(t.kid(1), 1);
    case Tag::Sigma:
      return "(" + t.kids[1].binders[0] + " : " + pr(t.kid(0), 0) + ") * " +
             pr(t.kid(1), 3);
    case Tag::W:
      return "W (" + t.kids[1].binders[0] + " : " + pr(t.kid(0), 0) + "). " +
             pr(t.kid(1), 0);
    case Tag::Plus:
      return pr(t.kid(0), 2) + " + " + pr(t.kid(1), 3);
    case Tag::Minus:
      return pr(t.kid(0), 2) + " - " + pr(t.kid(1), 3);
    case Tag::Times:
      return pr(t.kid(0), 4) + " * " + pr(t.kid(1), 3);
    case Tag::Pair:
      return "(" + pr(t.kid(0), 0) + ", " + pr(t.kid(1), 0) + ")";
    case Tag::Fst:
      return head("fst", t);
    case Tag::Snd:
      return head("snd", t);
    case Tag::Inl:
      return head("inl", t);
    case Tag::Inr:
      return head("inr", t);
    case Tag::Succ:
      return head("succ", t);
    case Tag::Refl:
      return head("refl", t);
    case Tag::Funext:
      return head("funext", t);
    case Tag::El:
      return head("El", t);
    case Tag::Sup:
      return head("sup", t);
    case Tag::Happly:
      return head("happly", t);
    case Tag::Id:
      return head("Id", t);
    case Tag::CodeEq:
      return head("#eq", t);
    case Tag::CodePi:
      return "#pi " + pr(t.kid(0), 5) + " " + group(t.kids[1]);
    case Tag::If:
      return "if" + motive(t.kids[0]) + " " + pr(t.kid(1), 0) + " then " +
             pr(t.kid(2), 0) + " else " + pr(t.kid(3), 0);
    case Tag::Case:
      return "case" + motive(t.kids[0]) + " " + pr(t.kid(1), 5) + " " +
             group(t.kids[2]) + " " + group(t.kids[3]);
    case Tag::Natrec:
      return "natrec" + motive(t.kids[0]) + " " + pr(t.kid(1), 5) + " " +
             pr(t.kid(2), 5) + " " + group(t.kids[3]);
    case Tag::Wrec:
      return "wrec" + motive(t.kids[0]) + " " + pr(t.kid(1), 5) + " " +
             group(t.kids[2]);
    case Tag::Absurd:
      return "absurd" + motive(t.kids[0]) + " " + pr(t.kid(1), 5);
    case Tag::J:
      return "J " + group(t.kids[0]) + " " + group(t.kids[1]) + " " +
             pr(t.kid(2), 5);
    case Tag::True:
      return "true";
    case Tag::False:
      return "false";
    case Tag::Tt:
      return "tt";
    case Tag::Zero:
      return "zero";
    case Tag::Bool:
      return "Bool";
    case Tag::Nat:
      return "Nat";
    case Tag::Empty:
      return "Empty";
    case Tag::Unit:
      return "Unit";
    case Tag::R:
      return "R";
    case Tag::U:
      return "U";
    case Tag::CodeBool:
      return "#bool";
  }
  return "?";
}

std::string pr(const Term &t, int prec) {
  std::string s = body(t);
  return level(t.tag) < prec ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Term &t) { return pr(t, 0); }

std::string print(const Definition &d) {
  std::string out = "def " + d.name;
  if (d.type) out += " : " + print(*d.type);
  return out + " := " + print(*d.body);
}

}  // namespace mtt
