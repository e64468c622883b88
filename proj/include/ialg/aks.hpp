#pragma once

#include <string>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

// Abstract Krivine structure on finite carriers: terms, stacks, total
// application and push tables, continuations, distinguished combinators,
// proof-like terms, and a pole closed under anti-evaluation.
struct AKS {
  std::vector<std::string> terms;
  std::vector<std::string> stacks;
  std::vector<std::vector<int>> app;   // terms x terms -> terms
  std::vector<std::vector<int>> push;  // terms x stacks -> stacks
  std::vector<int> kont;               // stacks -> terms
  int K = -1;
  int S = -1;
  int cc = -1;
  Mask pl = 0;             // proof-like subset of terms
  std::vector<Mask> pole;  // pole[t] = stacks t is orthogonal to

  int nt() const { return static_cast<int>(terms.size()); }
  int ns() const { return static_cast<int>(stacks.size()); }
  bool in_pole(int t, int pi) const { return mask_has(pole[t], pi); }
};

// Checks table shapes, the proof-like closure conditions, and the five
// anti-evaluation axioms of the pole; throws InvalidAKS naming the first
// failing axiom together with a witness instance.
void validate_aks(const AKS& k);

// Orthogonal a^pole of a set of stacks: terms orthogonal to every stack
// in a, computed by direct scan against the pole.
Mask orthogonal(const AKS& k, Mask stack_set);

struct InducedAlgebra {
  ImplicativeStructure s;
  Mask separator = 0;
  std::vector<Mask> stack_sets;  // element index -> underlying stack set
};

// Structure induced on the powerset of the stacks under reverse inclusion:
// element index i carries the stack set with bitmask i, bottom is the full
// set, top is empty, and a -> b = {push(t, pi) : t in a^pole, pi in b}.
// The separator collects the truth values realized by a proof-like term.
InducedAlgebra make_from_aks(const AKS& k);

// AKS built from a full structure with a classical separator: terms and
// stacks are the carrier, application and push are the structure's own
// application and implication, kont(a) = a -> bottom, proof-like terms are
// the separator, and the pole is the lattice order.
AKS aks_from_classical(const ImplicativeStructure& s, Mask separator);

}  // namespace ialg
