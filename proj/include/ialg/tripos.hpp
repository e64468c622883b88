#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ialg/structure.hpp"

namespace ialg {

// A predicate over a finite index set is a family of elements, one per
// index point; index maps are target indices per source point.
using Family = std::vector<int>;
using IndexMap = std::vector<int>;

struct UniformWitness {
  bool uniform = false;
  int witness = -1;  // a minimal separator member below every component
};

// Membership in the uniform power separator: some separator member
// lower-bounds every component of the family.
UniformWitness uniform_membership(const ImplicativeStructure& s, Mask sep, const Family& family);

// Entailment between predicates over the same index set: the family of
// componentwise implications is uniformly bounded by a separator member.
bool pred_entails(const ImplicativeStructure& s, Mask sep, const Family& p, const Family& q);

// Precomposition: result_i = q[f[i]].
Family subst(const IndexMap& f, const Family& q);

// Right and left adjoints of subst along f: fiberwise meet (empty fiber
// yields top) and the fiberwise second-order existential encoding.
Family forall_along(const ImplicativeStructure& s, const IndexMap& f, int target_size,
                    const Family& p);
Family exists_along(const ImplicativeStructure& s, const IndexMap& f, int target_size,
                    const Family& p);

struct PullbackSquare {
  IndexMap g1, g2;  // I1 -> J and I2 -> J
  int j = 0;
  std::vector<std::pair<int, int>> apex;  // pairs agreeing under g1/g2
  IndexMap f1, f2;                        // apex projections
  static PullbackSquare make(IndexMap g1_, IndexMap g2_, int j_);
};

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct AuditReport {
  bool ok = true;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::vector<AuditCheck> checks;
  void add(std::string name, bool pass, std::string detail = "");
};

struct AuditOptions {
  int family_limit = 256;  // exhaustive when n^size fits, else sampled
  std::uint64_t seed = 0;
};

// All families over `size` points when n^size <= limit, otherwise `limit`
// seeded samples; sets *exhaustive accordingly.
std::vector<Family> family_sample(int n, int size, const AuditOptions& opt, bool* exhaustive);

// Both adjunction laws for subst along f against every sampled predicate
// pair.
AuditReport adjunction_audit(const ImplicativeStructure& s, Mask sep, const IndexMap& f,
                             int target_size, const AuditOptions& opt = {});

// Beck-Chevalley for the canonical pullback of g1 and g2: substitution
// first then quantification agrees with quantification then substitution,
// up to mutual entailment, for both quantifiers.
AuditReport beck_chevalley_audit(const ImplicativeStructure& s, Mask sep,
                                 const PullbackSquare& sq, const AuditOptions& opt = {});

// The carrier itself serves as the type of propositions with the identity
// family as generic predicate: every sampled predicate is the substitution
// of the generic one along itself.
AuditReport generic_predicate_audit(const ImplicativeStructure& s, Mask sep, int index_size,
                                    const AuditOptions& opt = {});

// The three equivalent faces of the fundamental diagram at one index size,
// each computed independently.
struct RhoReport {
  int index_size = 0;
  bool rho_injective = false;    // componentwise mutual entailment collapses classes
  bool uniform_eq_power = false; // S[I] equals S^I
  bool meet_closed = false;      // meets of |I| separator members stay inside
  bool agree() const {
    return rho_injective == uniform_eq_power && uniform_eq_power == meet_closed;
  }
};
RhoReport rho_audit(const ImplicativeStructure& s, Mask sep, int index_size);

struct CollapseReport {
  bool forcing = false;    // the separator-side criterion: principal
  bool principal = false;
  bool quotient_ok = false;  // quotient laws verified when principal
  std::vector<RhoReport> rho;  // index sizes 0..max_index
  int failing_index = -1;      // least size with a false rho condition
};
CollapseReport forcing_collapse_audit(const ImplicativeStructure& s, Mask sep, int max_index);

// Reduction audit for psi: B -> A. `conditions` carries the three reduction
// conditions plus elementwise surjectivity; `per_index` verifies, for each
// index size, that psi preserves and reflects predicate entailment and that
// lift provides entailment-preimages of every sampled A-family. `lift` maps
// each A element to a chosen B element; when empty it is derived from psi
// by first preimage.
struct ReductionReport {
  AuditReport conditions;
  std::vector<AuditReport> per_index;
  bool is_reduction() const { return conditions.ok; }
  bool iso_ok() const {
    for (const auto& r : per_index)
      if (!r.ok) return false;
    return true;
  }
};
ReductionReport reduction_iso_audit(const ImplicativeStructure& sb, Mask sep_b,
                                    const ImplicativeStructure& sa, Mask sep_a,
                                    const std::vector<int>& psi, std::vector<int> lift,
                                    int max_index, const AuditOptions& opt = {},
                                    bool strict = false);

}  // namespace ialg
