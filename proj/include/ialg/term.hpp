#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ialg {

// Lambda terms with parameters: variables, element parameters (#name),
// application, abstraction, and the control operator cc.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Node { Var, Param, App, Abs, CC };
  Node node;
  std::string name;  // Var: variable, Abs: binder, Param: element name
  TermPtr t1, t2;    // App: function/argument, Abs: t1 = body
};

TermPtr mk_var(std::string name);
TermPtr mk_param(std::string element);
TermPtr mk_app(TermPtr f, TermPtr a);
TermPtr mk_abs(std::string binder, TermPtr body);
TermPtr mk_cc();

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

// Grammar: term := atom+ (application, left-associative)
//          atom := ident | '#' ident | 'cc' | '(' term ')'
//                | ('^' | 'λ') ident '.' term
// 'cc' is reserved. An abstraction body extends as far as possible.
// Shadowed binders are legal; a note is appended to `warnings` if given.
TermPtr parse_term(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Prints with '^' for lambda and minimal parentheses; parse_term round-trips.
std::string print_term(const TermPtr& t);

// Free variables, sorted, without duplicates.
std::vector<std::string> free_vars(const TermPtr& t);

// Deepest nesting of abstractions (0 for abstraction-free terms).
int abs_depth(const TermPtr& t);

bool term_equal(const TermPtr& a, const TermPtr& b);

}  // namespace ialg
