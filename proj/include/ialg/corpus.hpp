#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

// Small named lattices used by the test corpus and the table search.
FiniteLattice chain_lattice(int n);       // elements "0".."n-1", bottom first
FiniteLattice diamond_lattice();          // 0 < a,b < 1
FiniteLattice m3_lattice();               // 0 < a,b,c < 1
FiniteLattice n5_lattice();               // 0 < a < c < 1 and 0 < b < 1
FiniteLattice diamond_top_lattice();      // diamond with a fresh top above
FiniteLattice diamond_bottom_lattice();   // diamond with a fresh bottom below

struct CorpusEntry {
  std::string name;
  std::string family;  // heyting | dummy | kleene | search
  ImplicativeStructure s;
  std::vector<Mask> separators;  // every separator of s
};

// Fixed catalogue of small structures: Heyting tables on every lattice with
// at most five elements that admits one, the degenerate tables on a few of
// those, every subset structure over a partial applicative structure with at
// most two atoms (deduplicated), and the table-search witness when the
// search finds one. Built once and cached.
const std::vector<CorpusEntry>& corpus();

struct SearchOutcome {
  bool found = false;
  std::string lattice;  // name of the lattice carrying the witness
  std::uint64_t tables_examined = 0;
  std::vector<std::pair<std::string, std::uint64_t>> per_lattice;  // canonical tables each
  std::optional<ImplicativeStructure> witness;
  Mask core = 0;        // least separator of the witness
  int fork_value = -1;  // value of the pairing combinator there
};

// Enumerates every full implication table on every lattice with at most
// five elements (rows are meet-preserving maps fixing top, assigned
// antitonically; automorphic duplicates are skipped) and stops at the first
// table whose least separator fails to contain the pairing combinator, i.e.
// the first separator that is not a filter. Cached after the first run.
const SearchOutcome& find_non_filter_structure();

}  // namespace ialg
