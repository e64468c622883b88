#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ialg/structure.hpp"
#include "ialg/term.hpp"

namespace ialg {

struct EvalError : std::runtime_error {
  enum class Kind { UnboundVariable, UnknownElement, DepthExceeded };
  Kind kind;
  EvalError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct EvalOptions {
  // Abstraction cost is |A| per binder, so evaluation is exponential in the
  // nesting depth; terms nesting deeper than this are rejected.
  int max_abs_depth = 6;
};

using Env = std::map<std::string, int>;

// Application ab = least c with a <= (b -> c). Total on full structures;
// nullopt on quasi structures when no such c exists.
std::optional<int> apply(const ImplicativeStructure& s, int a, int b);

// Abstraction over a partial map on elements: meet of a -> f[a] over the
// domain (entries < 0 are outside the domain). Empty domain gives top.
int abstract(const ImplicativeStructure& s, const std::vector<int>& f);

// Evaluates a term under an environment mapping free variables to elements.
// nullopt means a quasi application was undefined somewhere (abstraction
// bodies simply drop undefined entries from the domain). Throws on unbound
// variables, unknown element names, and over-deep terms.
std::optional<int> eval_term(const ImplicativeStructure& s, const TermPtr& t, const Env& env = {},
                             const EvalOptions& = {});

enum class Combinator { I, K, S, B, C, W, CC, Fork, Por };

// Meet formula for the combinator (always defined, also on quasi tables):
//   I    = meet(a -> a)
//   K    = meet(a -> b -> a)
//   S    = meet((a -> b -> c) -> (a -> b) -> a -> c)
//   B    = meet((a -> b) -> (c -> a) -> c -> b)
//   C    = meet((a -> b -> c) -> b -> a -> c)
//   W    = meet((a -> a -> b) -> a -> b)
//   CC   = meet(((a -> b) -> a) -> a)
//   Fork = meet(a -> b -> a /\ b)
//   Por  = (bot -> top -> bot) /\ (top -> bot -> bot)
int combinator(const ImplicativeStructure& s, Combinator c);

const char* combinator_name(Combinator c);
std::optional<Combinator> combinator_from_name(const std::string& name);

// Semantic typing: the free variables of t are all bound by env, evaluation
// is defined, and the value sits below `type`.
bool check_typing(const ImplicativeStructure& s, const Env& env, const TermPtr& t, int type,
                  const EvalOptions& = {});

}  // namespace ialg
