#include "ialg/formula.hpp"

#include <cctype>
#include <cstring>

namespace ialg {

FormulaPtr mk_bot() { return std::make_shared<Formula>(Formula{Formula::Node::Bot, "", {}, nullptr, nullptr}); }
FormulaPtr mk_top() { return std::make_shared<Formula>(Formula{Formula::Node::Top, "", {}, nullptr, nullptr}); }
FormulaPtr mk_pred(std::string name, std::vector<FolTerm> args) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Pred, std::move(name), std::move(args), nullptr, nullptr});
}
FormulaPtr mk_eq(FolTerm l, FolTerm r) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Eq, "", {std::move(l), std::move(r)}, nullptr, nullptr});
}
FormulaPtr mk_not(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Formula::Node::Not, "", {}, std::move(f), nullptr});
}
FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Imp, "", {}, std::move(l), std::move(r)});
}
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::And, "", {}, std::move(l), std::move(r)});
}
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Formula::Node::Or, "", {}, std::move(l), std::move(r)});
}
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Iff, "", {}, std::move(l), std::move(r)});
}
FormulaPtr mk_forall(std::string var, FormulaPtr f) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Forall, std::move(var), {}, std::move(f), nullptr});
}
FormulaPtr mk_exists(std::string var, FormulaPtr f) {
  return std::make_shared<Formula>(
      Formula{Formula::Node::Exists, std::move(var), {}, std::move(f), nullptr});
}

namespace {

struct FParser {
  const std::string& src;
  size_t pos = 0;

  explicit FParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(const char* tok) {
    skip_ws();
    size_t len = std::strlen(tok);
    if (src.compare(pos, len, tok) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    if (pos >= src.size() || !ident_char(src[pos]) ||
        std::isdigit(static_cast<unsigned char>(src[pos])))
      throw FormulaParseError("expected identifier", pos);
    size_t start = pos;
    while (pos < src.size() && ident_char(src[pos])) ++pos;
    return src.substr(start, pos - start);
  }

  std::string peek_word() {
    skip_ws();
    size_t p = pos;
    if (p >= src.size() || !ident_char(src[p])) return "";
    size_t start = p;
    while (p < src.size() && ident_char(src[p])) ++p;
    return src.substr(start, p - start);
  }

  FolTerm fol_term() {
    std::string name = ident();
    FolTerm t{name, {}, false};
    skip_ws();
    if (peek('(')) {
      ++pos;
      t.is_app = true;
      t.args.push_back(fol_term());
      while (eat(",")) t.args.push_back(fol_term());
      skip_ws();
      if (!eat(")")) throw FormulaParseError("expected ')' in term", pos);
    }
    return t;
  }

  FormulaPtr atom() {
    skip_ws();
    if (pos >= src.size()) throw FormulaParseError("expected a formula", pos);
    if (peek('(')) {
      ++pos;
      FormulaPtr f = formula();
      if (!eat(")")) throw FormulaParseError("expected ')'", pos);
      return f;
    }
    if (eat("~")) return mk_not(atom());
    std::string word = peek_word();
    if (word == "bot") {
      eat("bot");
      return mk_bot();
    }
    if (word == "top") {
      eat("top");
      return mk_top();
    }
    if (word == "forall" || word == "exists") {
      eat(word.c_str());
      std::string var = ident();
      FormulaPtr body = formula();
      return word == "forall" ? mk_forall(var, body) : mk_exists(var, body);
    }
    // predicate application or the left side of an equation
    size_t start = pos;
    FolTerm t = fol_term();
    if (eat("=")) return mk_eq(std::move(t), fol_term());
    if (t.is_app) return mk_pred(t.name, std::move(t.args));
    throw FormulaParseError("bare term '" + t.name + "' is not a formula (expected '=' or '(')",
                            start);
  }

  FormulaPtr conj() {
    FormulaPtr f = atom();
    while (true) {
      skip_ws();
      if (src.compare(pos, 2, "/\\") == 0) {
        pos += 2;
        f = mk_and(f, atom());
      } else {
        break;
      }
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (true) {
      skip_ws();
      if (src.compare(pos, 2, "\\/") == 0) {
        pos += 2;
        f = mk_or(f, conj());
      } else {
        break;
      }
    }
    return f;
  }

  FormulaPtr impl() {
    FormulaPtr f = disj();
    skip_ws();
    if (src.compare(pos, 2, "->") == 0) {
      pos += 2;
      return mk_imp(f, impl());  // right-associative
    }
    return f;
  }

  FormulaPtr formula() {
    FormulaPtr f = impl();
    while (true) {
      skip_ws();
      if (src.compare(pos, 3, "<->") == 0) {
        pos += 3;
        f = mk_iff(f, impl());
      } else {
        break;
      }
    }
    return f;
  }
};

std::string wrap(const FormulaPtr& f) {
  switch (f->node) {
    case Formula::Node::Bot:
    case Formula::Node::Top:
    case Formula::Node::Pred:
    case Formula::Node::Eq:
    case Formula::Node::Not:
      return print_formula(f);
    default:
      return "(" + print_formula(f) + ")";
  }
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  FParser p(text);
  FormulaPtr f = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) throw FormulaParseError("trailing input", p.pos);
  return f;
}

std::string print_fol_term(const FolTerm& t) {
  if (!t.is_app) return t.name;
  std::string out = t.name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += print_fol_term(t.args[i]);
  }
  return out + ")";
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->node) {
    case Formula::Node::Bot:
      return "bot";
    case Formula::Node::Top:
      return "top";
    case Formula::Node::Pred: {
      std::string out = f->name + "(";
      for (size_t i = 0; i < f->terms.size(); ++i) {
        if (i) out += ",";
        out += print_fol_term(f->terms[i]);
      }
      return out + ")";
    }
    case Formula::Node::Eq:
      return print_fol_term(f->terms[0]) + " = " + print_fol_term(f->terms[1]);
    case Formula::Node::Not:
      return "~" + wrap(f->f1);
    case Formula::Node::Imp:
      return wrap(f->f1) + " -> " + wrap(f->f2);
    case Formula::Node::And:
      return wrap(f->f1) + " /\\ " + wrap(f->f2);
    case Formula::Node::Or:
      return wrap(f->f1) + " \\/ " + wrap(f->f2);
    case Formula::Node::Iff:
      return wrap(f->f1) + " <-> " + wrap(f->f2);
    case Formula::Node::Forall:
      return "forall " + f->name + " " + wrap(f->f1);
    case Formula::Node::Exists:
      return "exists " + f->name + " " + wrap(f->f1);
  }
  return "";
}

}  // namespace ialg
