#pragma once

#include <map>
#include <string>
#include <vector>

#include "ialg/eval.hpp"
#include "ialg/formula.hpp"
#include "ialg/structure.hpp"

namespace ialg {

// Connective encodings inside a structure:
//   a x b   = meet_c ((a -> b -> c) -> c)
//   a + b   = meet_c ((a -> c) -> (b -> c) -> c)
//   ~a      = a -> bot
//   a <-> b = (a -> b) x (b -> a)
//   forall  = meet of the family
//   exists  = meet_c ((meet_i (a_i -> c)) -> c)
//   id      = I for equal points, top -> bot otherwise
int encode_times(const ImplicativeStructure& s, int a, int b);
int encode_plus(const ImplicativeStructure& s, int a, int b);
int encode_not(const ImplicativeStructure& s, int a);
int encode_iff(const ImplicativeStructure& s, int a, int b);
int encode_forall(const ImplicativeStructure& s, const std::vector<int>& family);
int encode_exists(const ImplicativeStructure& s, const std::vector<int>& family);
int encode_id(const ImplicativeStructure& s, bool equal);

struct FolError : std::runtime_error {
  enum class Kind { UnknownSymbol, ArityMismatch, BadDomain, UnboundVariable };
  Kind kind;
  FolError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Tables are flat, row-major over domain indices (last argument varies
// fastest). Function values are domain indices; predicate values are
// lattice element indices.
struct FunTable {
  int arity = 0;
  std::vector<int> table;
};
struct PredTable {
  int arity = 0;
  std::vector<int> table;
};

struct Interpretation {
  std::vector<std::string> domain;  // nonempty, at most 8 points
  std::map<std::string, FunTable> funs;    // 0-ary entries act as constants
  std::map<std::string, PredTable> preds;

  int domain_index(const std::string& name) const;
  void check(int structure_size) const;  // shape/range validation
};

using VarEnv = std::map<std::string, int>;  // variable -> domain index

// Evaluates a first-order term to a domain index. Bare idents resolve as
// bound variables first, then as 0-ary functions.
int interpret_term(const Interpretation& in, const FolTerm& t, const VarEnv& env);

// Computes the element of s denoted by the formula. Bot/Top denote the
// lattice bottom/top; quantifiers range over the whole domain.
int interpret_formula(const ImplicativeStructure& s, const Interpretation& in, const FormulaPtr& f,
                      const VarEnv& env = {});

struct TautologyEntry {
  const char* formula;
  const char* witness;  // closed lambda term, cc allowed only when classical
  bool classical;
};

// Fixed bank of quantified tautologies with realizing terms; formulas use
// unary predicate symbols p, q, r and equality only.
const std::vector<TautologyEntry>& tautology_corpus();

struct SoundnessItem {
  std::string formula;
  bool classical = false;
  int value = -1;    // formula interpretation
  int witness = -1;  // witness term value
  bool realizes = false;     // witness <= value
  bool value_in_core = false;
  bool witness_in_core = false;
  bool ok = false;
};

struct SoundnessReport {
  bool ok = true;
  std::vector<SoundnessItem> items;
};

// Interprets every bank entry under `in` and checks the witness evaluates,
// realizes the formula, and lands in the intuitionistic core (classical
// core for classical entries); core membership of the value follows by
// upward closure and is checked too.
SoundnessReport soundness_audit(const ImplicativeStructure& s, const Interpretation& in,
                                Mask core_j, Mask core_k);

}  // namespace ialg
