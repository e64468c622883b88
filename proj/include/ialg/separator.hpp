#pragma once

#include <optional>
#include <vector>

#include "ialg/eval.hpp"
#include "ialg/structure.hpp"

namespace ialg {

struct SeparatorFailure {
  enum class Reason { MissingK, MissingS, NotUpwardClosed, NotClosed };
  Reason reason;
  int a = -1, b = -1;  // NotUpwardClosed: a in S, b above a outside S
                       // NotClosed: offending pair (premises)
  std::string describe(const ImplicativeStructure& s) const;
};

struct SeparatorReport {
  bool is_separator = false;
  bool consistent = false;  // bottom not a member
  bool classical = false;   // cc a member
  bool is_filter = false;   // nonempty, upward closed, binary-meet closed
  bool principal = false;   // meet of all members is itself a member
  bool ultra = false;       // consistent and exactly two entailment classes
  std::optional<SeparatorFailure> failure;  // first reason is_separator fails
};

// Flags are computed independently of is_separator where they make sense
// (filter/principal describe the raw subset); ultra requires a separator.
// On full structures closure is checked in application form (a,b in S =>
// ab in S), on quasi structures in modus-ponens form ((a->b) in S and a in
// S => b in S); the two are equivalent for upward-closed sets containing K
// and S on full structures.
SeparatorReport classify_separator(const ImplicativeStructure& s, Mask members);

// Least separator containing X: application closure of X + {K, S} followed
// by one upward closure. Throws UndefinedApplication when a quasi
// application is undefined during closure.
Mask generate_separator(const ImplicativeStructure& s, Mask X);

// Same result via the modus-ponens + upward-closure fixpoint; total on
// quasi structures.
Mask generate_separator_mp(const ImplicativeStructure& s, Mask X);

// Intuitionistic and classical cores: least separator, and least separator
// containing cc.
std::pair<Mask, Mask> cores(const ImplicativeStructure& s);

// (a -> b) in S  iff  b in Sep(S + {a}).
bool deduction_holds(const ImplicativeStructure& s, Mask sep, int a, int b);

// All separators of s, by exhaustive subset enumeration (carrier <= 20).
std::vector<Mask> all_separators(const ImplicativeStructure& s);

}  // namespace ialg
