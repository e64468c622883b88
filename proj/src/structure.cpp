#include "ialg/structure.hpp"

#include <sstream>
#include <tuple>

#include "ialg/kernels.hpp"

namespace ialg {

bool Violation::operator<(const Violation& o) const {
  return std::tie(law, a, a2, b, b2, subset) < std::tie(o.law, o.a, o.a2, o.b, o.b2, o.subset);
}

bool Violation::operator==(const Violation& o) const {
  return std::tie(law, a, a2, b, b2, subset) == std::tie(o.law, o.a, o.a2, o.b, o.b2, o.subset);
}

std::string Violation::describe(const ImplicativeStructure& s) const {
  const auto& L = s.lat;
  std::ostringstream os;
  if (law == Law::Variance) {
    os << "variance: " << L.name(a2) << "<=" << L.name(a) << " and " << L.name(b) << "<="
       << L.name(b2) << " but not (" << L.name(a) << "->" << L.name(b) << ")="
       << L.name(s.arrow(a, b)) << " <= (" << L.name(a2) << "->" << L.name(b2) << ")="
       << L.name(s.arrow(a2, b2));
  } else {
    os << "meet-commutation: a=" << L.name(a) << " B={";
    bool first = true;
    for (int x : MaskBits(subset)) {
      if (!first) os << ",";
      os << L.name(x);
      first = false;
    }
    int lhs = s.arrow(a, L.meet(subset));
    int rhs = L.top();
    for (int x : MaskBits(subset)) rhs = L.meet2(rhs, s.arrow(a, x));
    os << "}: a->meet(B)=" << L.name(lhs) << " but meet of pointwise arrows=" << L.name(rhs);
  }
  return os.str();
}

bool has_full_top_law(const ImplicativeStructure& s) {
  for (int a = 0; a < s.n(); ++a)
    if (s.arrow(a, s.top()) != s.top()) return false;
  return true;
}

ValidationReport validate_structure(const ImplicativeStructure& s, const ValidateOptions& opt) {
  const int n = s.n();
  if (static_cast<int>(s.imp.size()) != n)
    throw StructureError(StructureError::Kind::Mismatch, "implication table size mismatch");
  for (const auto& row : s.imp) {
    if (static_cast<int>(row.size()) != n)
      throw StructureError(StructureError::Kind::Mismatch, "implication table row size mismatch");
    for (int v : row)
      if (v < 0 || v >= n)
        throw StructureError(StructureError::Kind::Mismatch, "implication table entry out of range");
  }

  ValidationReport rep;
  auto variance = opt.parallel ? variance_violations_parallel(s) : variance_violations_serial(s);
  rep.violations = std::move(variance);

  std::vector<Violation> mc;
  if (n <= opt.exhaustive_limit) {
    mc = opt.parallel ? meet_commutation_violations_parallel(s)
                      : meet_commutation_violations_serial(s);
  } else if (opt.allow_sample) {
    mc = meet_commutation_violations_sampled(s, opt.seed, opt.random_subsets);
    rep.exhaustive = false;
    rep.seed = opt.seed;
  } else {
    throw StructureError(StructureError::Kind::GuardExceeded,
                         "carrier size " + std::to_string(n) + " exceeds exhaustive limit " +
                             std::to_string(opt.exhaustive_limit) +
                             "; enable sampling to validate");
  }
  rep.violations.insert(rep.violations.end(), mc.begin(), mc.end());
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace ialg
