#pragma once

#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

// Scan kernels over implication tables. Each comes as a serial reference
// implementation and an OpenMP version; results are sorted canonically so
// the two are comparable element for element. The *_parallel functions fall
// back to the serial code when built without OpenMP.

std::vector<Violation> variance_violations_serial(const ImplicativeStructure& s);
std::vector<Violation> variance_violations_parallel(const ImplicativeStructure& s);

// Exhaustive meet-commutation scan over all subsets (empty subset included
// only for full structures).
std::vector<Violation> meet_commutation_violations_serial(const ImplicativeStructure& s);
std::vector<Violation> meet_commutation_violations_parallel(const ImplicativeStructure& s);

// Sampled variant: every subset of size <= 2 (empty one on full structures)
// plus `samples` seeded random subsets.
std::vector<Violation> meet_commutation_violations_sampled(const ImplicativeStructure& s,
                                                           std::uint64_t seed, int samples);

struct JoinCompatReport {
  bool compatible = true;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  // witness when incompatible: meet over a in subset of (a -> b) differs
  // from (join subset) -> b
  Mask subset = 0;
  int b = -1;
};

JoinCompatReport join_compat_scan_serial(const ImplicativeStructure& s);
JoinCompatReport join_compat_scan_parallel(const ImplicativeStructure& s);

}  // namespace ialg
