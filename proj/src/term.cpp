#include "ialg/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ialg {

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(Term{Term::Node::Var, std::move(name), nullptr, nullptr});
}
TermPtr mk_param(std::string element) {
  return std::make_shared<Term>(Term{Term::Node::Param, std::move(element), nullptr, nullptr});
}
TermPtr mk_app(TermPtr f, TermPtr a) {
  return std::make_shared<Term>(Term{Term::Node::App, "", std::move(f), std::move(a)});
}
TermPtr mk_abs(std::string binder, TermPtr body) {
  return std::make_shared<Term>(Term{Term::Node::Abs, std::move(binder), std::move(body), nullptr});
}
TermPtr mk_cc() { return std::make_shared<Term>(Term{Term::Node::CC, "", nullptr, nullptr}); }

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Parser {
  const std::string& src;
  size_t pos = 0;
  std::vector<std::string>* warnings;
  std::vector<std::string> bound;

  explicit Parser(const std::string& s, std::vector<std::string>* w) : src(s), warnings(w) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool at_lambda() {
    if (src[pos] == '^') return true;
    // UTF-8 lambda
    return pos + 1 < src.size() && static_cast<unsigned char>(src[pos]) == 0xCE &&
           static_cast<unsigned char>(src[pos + 1]) == 0xBB;
  }

  std::string ident() {
    skip_ws();
    if (pos >= src.size() || !ident_start(src[pos]))
      throw ParseError("expected identifier", pos);
    size_t start = pos;
    while (pos < src.size() && ident_char(src[pos])) ++pos;
    return src.substr(start, pos - start);
  }

  TermPtr atom() {
    skip_ws();
    if (pos >= src.size()) return nullptr;
    char c = src[pos];
    if (c == '(') {
      size_t open = pos;
      ++pos;
      TermPtr t = term();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')')
        throw ParseError("unclosed parenthesis", open);
      ++pos;
      return t;
    }
    if (c == '#') {
      ++pos;
      // element names may start with a digit, unlike variables
      if (pos >= src.size() || !ident_char(src[pos]))
        throw ParseError("expected element name after '#'", pos);
      size_t start = pos;
      while (pos < src.size() && ident_char(src[pos])) ++pos;
      return mk_param(src.substr(start, pos - start));
    }
    if (at_lambda()) {
      pos += (c == '^') ? 1 : 2;
      std::string binder = ident();
      if (binder == "cc") throw ParseError("'cc' is reserved and cannot be bound", pos);
      skip_ws();
      if (pos >= src.size() || src[pos] != '.')
        throw ParseError("expected '.' after binder", pos);
      ++pos;
      if (warnings && std::find(bound.begin(), bound.end(), binder) != bound.end())
        warnings->push_back("binder '" + binder + "' shadows an enclosing binder");
      bound.push_back(binder);
      TermPtr body = term();
      bound.pop_back();
      return mk_abs(binder, body);
    }
    if (ident_start(c)) {
      std::string name = ident();
      if (name == "cc") return mk_cc();
      return mk_var(name);
    }
    return nullptr;  // not an atom; caller decides if that is an error
  }

  TermPtr term() {
    TermPtr acc = atom();
    if (!acc) throw ParseError("expected a term", pos);
    for (;;) {
      skip_ws();
      if (pos >= src.size() || src[pos] == ')') break;
      TermPtr next = atom();
      if (!next) throw ParseError("unexpected character", pos);
      acc = mk_app(std::move(acc), std::move(next));
    }
    return acc;
  }
};

void collect_free(const TermPtr& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t->node) {
    case Term::Node::Var:
      if (std::find(bound.begin(), bound.end(), t->name) == bound.end()) out.insert(t->name);
      break;
    case Term::Node::App:
      collect_free(t->t1, bound, out);
      collect_free(t->t2, bound, out);
      break;
    case Term::Node::Abs:
      bound.push_back(t->name);
      collect_free(t->t1, bound, out);
      bound.pop_back();
      break;
    default:
      break;
  }
}

}  // namespace

TermPtr parse_term(const std::string& text, std::vector<std::string>* warnings) {
  Parser p(text, warnings);
  TermPtr t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return t;
}

std::string print_term(const TermPtr& t) {
  switch (t->node) {
    case Term::Node::Var:
      return t->name;
    case Term::Node::Param:
      return "#" + t->name;
    case Term::Node::CC:
      return "cc";
    case Term::Node::Abs:
      return "^" + t->name + "." + print_term(t->t1);
    case Term::Node::App: {
      std::string f = print_term(t->t1);
      if (t->t1->node == Term::Node::Abs) f = "(" + f + ")";
      std::string a = print_term(t->t2);
      if (t->t2->node == Term::Node::App || t->t2->node == Term::Node::Abs) a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return "";
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return std::vector<std::string>(out.begin(), out.end());
}

int abs_depth(const TermPtr& t) {
  switch (t->node) {
    case Term::Node::Abs:
      return 1 + abs_depth(t->t1);
    case Term::Node::App:
      return std::max(abs_depth(t->t1), abs_depth(t->t2));
    default:
      return 0;
  }
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->node != b->node || a->name != b->name) return false;
  if (a->t1 && !term_equal(a->t1, b->t1)) return false;
  if (a->t2 && !term_equal(a->t2, b->t2)) return false;
  return true;
}

}  // namespace ialg
