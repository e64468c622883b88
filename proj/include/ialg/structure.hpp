#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ialg/lattice.hpp"

namespace ialg {

// A quasi structure satisfies the meet-commutation law for nonempty meets
// only; application and abstraction become partial operations on it.
enum class Kind { Full, Quasi };

struct StructureError : std::runtime_error {
  enum class Kind {
    NotHeyting,
    CarrierTooLarge,
    GuardExceeded,
    InvalidSeparator,
    UndefinedApplication,
    NotClassical,
    InvalidAKS,
    NotAReduction,
    Mismatch,
  };
  Kind kind;
  StructureError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Complete lattice equipped with an implication table imp[a][b] = (a -> b).
struct ImplicativeStructure {
  FiniteLattice lat;
  std::vector<std::vector<int>> imp;
  Kind kind = Kind::Full;

  int n() const { return lat.size(); }
  bool leq(int a, int b) const { return lat.leq(a, b); }
  int arrow(int a, int b) const { return imp[a][b]; }
  int top() const { return lat.top(); }
  int bottom() const { return lat.bottom(); }
};

struct Separator {
  std::string name;
  Mask members = 0;
};

struct Violation {
  enum class Law { Variance, MeetCommutation };
  Law law;
  // Variance: a2 <= a and b <= b2 yet not (a -> b) <= (a2 -> b2).
  int a = -1, a2 = -1, b = -1, b2 = -1;
  // MeetCommutation: (a -> meet B) != meet of a -> b over b in B.
  Mask subset = 0;

  std::string describe(const ImplicativeStructure& s) const;
  bool operator<(const Violation& o) const;
  bool operator==(const Violation& o) const;
};

struct ValidateOptions {
  int exhaustive_limit = 16;   // carriers above this need allow_sample
  bool allow_sample = false;
  std::uint64_t seed = 0;
  int random_subsets = 1000;
  bool parallel = true;
};

struct ValidationReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t seed = 0;  // set when sampling was used
  std::vector<Violation> violations;
};

// Checks variance and meet-commutation over the whole table. Exhaustive for
// carriers up to exhaustive_limit; beyond that, throws GuardExceeded unless
// allow_sample is set, in which case every empty/singleton/pair subset plus
// random_subsets seeded random subsets are checked.
ValidationReport validate_structure(const ImplicativeStructure& s, const ValidateOptions& = {});

// True when the table also satisfies a -> top = top for every a (the law
// that upgrades a quasi structure to a full one).
bool has_full_top_law(const ImplicativeStructure& s);

}  // namespace ialg
