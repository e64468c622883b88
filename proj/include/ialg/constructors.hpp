#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ialg/kernels.hpp"
#include "ialg/structure.hpp"

namespace ialg {

// Heyting implication: a -> b = max { c : c /\ a <= b }. Throws NotHeyting
// (with a witness pair) when some maximum does not exist.
ImplicativeStructure make_heyting(const FiniteLattice& lat);

enum class DummyMode { Right, Top };

// Degenerate tables on an arbitrary lattice: Right sets a -> b = b, Top sets
// a -> b = top. Both satisfy the axioms of a full structure.
ImplicativeStructure make_dummy(const FiniteLattice& lat, DummyMode mode);

// Partial applicative structure on named atoms; app[x][y] < 0 means x.y is
// undefined.
struct Pas {
  std::vector<std::string> atoms;
  std::vector<std::vector<int>> app;

  bool total() const;
  static Pas make(std::vector<std::string> atoms,
                  std::vector<std::vector<int>> app);  // validates shape
};

// Carrier = all subsets of the atom set ordered by inclusion;
// a -> b = { z : for all x in a, z.x is defined and lands in b }.
// Full when the application is total, quasi otherwise. Needs |P| <= 5.
ImplicativeStructure make_kleene_subsets(const Pas& p);

// Carrier = all partial equivalence relations on the atom set ordered by
// inclusion; a -> b = { (z1,z2) : for all (x1,x2) in a, z1.x1 and z2.x2 are
// defined and (z1.x1, z2.x2) in b }. Needs |P| <= 3.
ImplicativeStructure make_kleene_per(const Pas& p);

// Componentwise product. Result is quasi when any factor is. The combined
// carrier must stay within 64 elements.
ImplicativeStructure make_product(const std::vector<ImplicativeStructure>& factors);

// For a product built by make_product: decompose a combined element index
// into factor indices, and recombine.
std::vector<int> product_split(const std::vector<int>& sizes, int combined);
int product_combine(const std::vector<int>& sizes, const std::vector<int>& parts);

struct Completion {
  ImplicativeStructure s;      // always full
  std::vector<int> embed;      // embed[a] = index of a in s (identity range)
  int new_top = -1;
};

// Adjoins a fresh top element above everything and extends the implication
// so the result is a full structure; the original elements keep their
// indices and their arrows.
Completion complete_quasi(const ImplicativeStructure& s);

// Extends a separator of the original structure along complete_quasi by
// adding the fresh top.
Separator extend_separator(const Completion& c, const Separator& sep);

// Join compatibility: meet over a in A' of (a -> b) equals (join A') -> b
// for every subset A' and every b. Exhaustive up to the option limit; throws
// GuardExceeded beyond it unless sampling is allowed.
JoinCompatReport is_join_compatible(const ImplicativeStructure& s, const ValidateOptions& = {});

}  // namespace ialg
