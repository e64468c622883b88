#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ialg {

// First-order terms: variables/constants (bare idents, resolved against the
// interpretation at evaluation time) and function applications.
struct FolTerm {
  std::string name;
  std::vector<FolTerm> args;
  bool is_app = false;  // true for name(args...), also when 0 args were written

  bool operator==(const FolTerm& o) const {
    return name == o.name && is_app == o.is_app && args == o.args;
  }
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Node { Bot, Top, Pred, Eq, Not, Imp, And, Or, Iff, Forall, Exists };
  Node node;
  std::string name;           // Pred symbol or quantified variable
  std::vector<FolTerm> terms; // Pred arguments; Eq has exactly two
  FormulaPtr f1, f2;
};

FormulaPtr mk_bot();
FormulaPtr mk_top();
FormulaPtr mk_pred(std::string name, std::vector<FolTerm> args);
FormulaPtr mk_eq(FolTerm l, FolTerm r);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_forall(std::string var, FormulaPtr f);
FormulaPtr mk_exists(std::string var, FormulaPtr f);

struct FormulaParseError : std::runtime_error {
  size_t pos;
  FormulaParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

// Grammar (loosest to tightest): <-> | -> (right-assoc) | \/ | /\ | ~ and
// atoms. Atoms: bot, top, p(t,...), t1 = t2, (F), and quantifiers
// 'forall x F' / 'exists x F' whose body extends as far as possible.
FormulaPtr parse_formula(const std::string& text);

std::string print_formula(const FormulaPtr& f);
std::string print_fol_term(const FolTerm& t);

}  // namespace ialg
