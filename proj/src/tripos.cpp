#include "ialg/tripos.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ialg/fol.hpp"
#include "ialg/quotient.hpp"
#include "ialg/separator.hpp"

namespace ialg {

namespace {

[[noreturn]] void fail(StructureError::Kind k, const std::string& msg) {
  throw StructureError(k, msg);
}

void check_family_range(const ImplicativeStructure& s, const Family& p) {
  for (int v : p)
    if (v < 0 || v >= s.n()) fail(StructureError::Kind::Mismatch, "family value out of range");
}

std::string render_family(const ImplicativeStructure& s, const Family& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << s.lat.name(p[i]);
  }
  out << ')';
  return out.str();
}

std::uint64_t pow_capped(int base, int exp, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < exp; ++i) {
    total *= static_cast<std::uint64_t>(base);
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace

UniformWitness uniform_membership(const ImplicativeStructure& s, Mask sep,
                                  const Family& family) {
  check_family_range(s, family);
  Mask vals = 0;
  for (int v : family) vals |= mask_bit(v);
  const int m = s.lat.meet(vals);
  Mask cand = 0;
  for (int t : MaskBits(sep))
    if (s.leq(t, m)) cand |= mask_bit(t);
  UniformWitness w;
  if (cand == 0) return w;
  w.uniform = true;
  for (int t : MaskBits(cand)) {
    bool minimal = true;
    for (int u : MaskBits(cand)) {
      if (u != t && s.leq(u, t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      w.witness = t;
      break;
    }
  }
  return w;
}

bool pred_entails(const ImplicativeStructure& s, Mask sep, const Family& p, const Family& q) {
  if (p.size() != q.size())
    fail(StructureError::Kind::Mismatch, "predicate index sets differ");
  check_family_range(s, p);
  check_family_range(s, q);
  Family impl(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) impl[i] = s.arrow(p[i], q[i]);
  return uniform_membership(s, sep, impl).uniform;
}

Family subst(const IndexMap& f, const Family& q) {
  Family r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || static_cast<std::size_t>(f[i]) >= q.size())
      fail(StructureError::Kind::Mismatch, "index map value out of range");
    r[i] = q[f[i]];
  }
  return r;
}

namespace {

std::vector<std::vector<int>> fibers_of(const IndexMap& f, int target_size, const Family& p) {
  if (f.size() != p.size())
    fail(StructureError::Kind::Mismatch, "index map and family sizes differ");
  std::vector<std::vector<int>> fibers(target_size);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= target_size)
      fail(StructureError::Kind::Mismatch, "index map value out of range");
    fibers[f[i]].push_back(p[i]);
  }
  return fibers;
}

}  // namespace

Family forall_along(const ImplicativeStructure& s, const IndexMap& f, int target_size,
                    const Family& p) {
  check_family_range(s, p);
  auto fibers = fibers_of(f, target_size, p);
  Family r(target_size);
  for (int j = 0; j < target_size; ++j) r[j] = encode_forall(s, fibers[j]);
  return r;
}

Family exists_along(const ImplicativeStructure& s, const IndexMap& f, int target_size,
                    const Family& p) {
  check_family_range(s, p);
  auto fibers = fibers_of(f, target_size, p);
  Family r(target_size);
  for (int j = 0; j < target_size; ++j) r[j] = encode_exists(s, fibers[j]);
  return r;
}

PullbackSquare PullbackSquare::make(IndexMap g1_, IndexMap g2_, int j_) {
  PullbackSquare sq;
  sq.g1 = std::move(g1_);
  sq.g2 = std::move(g2_);
  sq.j = j_;
  for (int v : sq.g1)
    if (v < 0 || v >= j_) fail(StructureError::Kind::Mismatch, "index map value out of range");
  for (int v : sq.g2)
    if (v < 0 || v >= j_) fail(StructureError::Kind::Mismatch, "index map value out of range");
  for (std::size_t x1 = 0; x1 < sq.g1.size(); ++x1) {
    for (std::size_t x2 = 0; x2 < sq.g2.size(); ++x2) {
      if (sq.g1[x1] == sq.g2[x2]) {
        sq.apex.emplace_back(static_cast<int>(x1), static_cast<int>(x2));
        sq.f1.push_back(static_cast<int>(x1));
        sq.f2.push_back(static_cast<int>(x2));
      }
    }
  }
  return sq;
}

void AuditReport::add(std::string name, bool pass, std::string detail) {
  ok = ok && pass;
  checks.push_back({std::move(name), pass, std::move(detail)});
}

std::vector<Family> family_sample(int n, int size, const AuditOptions& opt, bool* exhaustive) {
  if (n <= 0) fail(StructureError::Kind::Mismatch, "empty carrier");
  std::vector<Family> out;
  if (size == 0) {
    out.push_back({});
    if (exhaustive) *exhaustive = true;
    return out;
  }
  const std::uint64_t cap = static_cast<std::uint64_t>(opt.family_limit);
  if (pow_capped(n, size, cap) <= cap) {
    Family cur(size, 0);
    while (true) {
      out.push_back(cur);
      int k = size - 1;
      while (k >= 0 && cur[k] == n - 1) {
        cur[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++cur[k];
    }
    if (exhaustive) *exhaustive = true;
    return out;
  }
  for (int c = 0; c < n; ++c) out.push_back(Family(size, c));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> dist(0, n - 1);
  for (int k = 0; k < opt.family_limit; ++k) {
    Family cur(size);
    for (int& v : cur) v = dist(rng);
    out.push_back(cur);
  }
  if (exhaustive) *exhaustive = false;
  return out;
}

AuditReport adjunction_audit(const ImplicativeStructure& s, Mask sep, const IndexMap& f,
                             int target_size, const AuditOptions& opt) {
  AuditReport rep;
  rep.seed = opt.seed;
  const int source_size = static_cast<int>(f.size());
  bool ex_src = true, ex_tgt = true;
  auto ps = family_sample(s.n(), source_size, opt, &ex_src);
  AuditOptions opt_t = opt;
  opt_t.seed = opt.seed + 1;
  auto qs = family_sample(s.n(), target_size, opt_t, &ex_tgt);
  rep.exhaustive = ex_src && ex_tgt;

  std::vector<Family> sub(qs.size());
  for (std::size_t j = 0; j < qs.size(); ++j) sub[j] = subst(f, qs[j]);

  bool forall_ok = true, exists_ok = true;
  std::string forall_detail, exists_detail;
  for (const auto& p : ps) {
    const Family fa = forall_along(s, f, target_size, p);
    const Family ex = exists_along(s, f, target_size, p);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (forall_ok) {
        const bool lhs = pred_entails(s, sep, sub[j], p);
        const bool rhs = pred_entails(s, sep, qs[j], fa);
        if (lhs != rhs) {
          forall_ok = false;
          forall_detail = "p=" + render_family(s, p) + " q=" + render_family(s, qs[j]) +
                          " subst->p=" + (lhs ? "true" : "false") +
                          " q->forall=" + (rhs ? "true" : "false");
        }
      }
      if (exists_ok) {
        const bool lhs = pred_entails(s, sep, ex, qs[j]);
        const bool rhs = pred_entails(s, sep, p, sub[j]);
        if (lhs != rhs) {
          exists_ok = false;
          exists_detail = "p=" + render_family(s, p) + " q=" + render_family(s, qs[j]) +
                          " exists->q=" + (lhs ? "true" : "false") +
                          " p->subst=" + (rhs ? "true" : "false");
        }
      }
    }
  }
  rep.add("forall-adjunction", forall_ok, forall_detail);
  rep.add("exists-adjunction", exists_ok, exists_detail);
  return rep;
}

AuditReport beck_chevalley_audit(const ImplicativeStructure& s, Mask sep,
                                 const PullbackSquare& sq, const AuditOptions& opt) {
  AuditReport rep;
  rep.seed = opt.seed;
  const int i1 = static_cast<int>(sq.g1.size());
  const int i2 = static_cast<int>(sq.g2.size());
  bool ex = true;
  auto ps = family_sample(s.n(), i1, opt, &ex);
  rep.exhaustive = ex;

  bool exists_ok = true, forall_ok = true;
  std::string exists_detail, forall_detail;
  for (const auto& p : ps) {
    const Family pulled = subst(sq.f1, p);
    {
      const Family lhs = exists_along(s, sq.f2, i2, pulled);
      const Family rhs = subst(sq.g2, exists_along(s, sq.g1, sq.j, p));
      if (exists_ok &&
          !(pred_entails(s, sep, lhs, rhs) && pred_entails(s, sep, rhs, lhs))) {
        exists_ok = false;
        exists_detail = "p=" + render_family(s, p) + " lhs=" + render_family(s, lhs) +
                        " rhs=" + render_family(s, rhs);
      }
    }
    {
      const Family lhs = forall_along(s, sq.f2, i2, pulled);
      const Family rhs = subst(sq.g2, forall_along(s, sq.g1, sq.j, p));
      if (forall_ok &&
          !(pred_entails(s, sep, lhs, rhs) && pred_entails(s, sep, rhs, lhs))) {
        forall_ok = false;
        forall_detail = "p=" + render_family(s, p) + " lhs=" + render_family(s, lhs) +
                        " rhs=" + render_family(s, rhs);
      }
    }
  }
  rep.add("exists-beck-chevalley", exists_ok, exists_detail);
  rep.add("forall-beck-chevalley", forall_ok, forall_detail);
  return rep;
}

AuditReport generic_predicate_audit(const ImplicativeStructure& s, Mask sep, int index_size,
                                    const AuditOptions& opt) {
  AuditReport rep;
  rep.seed = opt.seed;
  Family generic(s.n());
  for (int a = 0; a < s.n(); ++a) generic[a] = a;
  bool ex = true;
  auto ps = family_sample(s.n(), index_size, opt, &ex);
  rep.exhaustive = ex;
  bool pass = true;
  std::string detail;
  for (const auto& p : ps) {
    const Family pulled = subst(p, generic);
    if (pulled != p) {
      pass = false;
      detail = "p=" + render_family(s, p) + " pulled=" + render_family(s, pulled);
      break;
    }
    if (!(pred_entails(s, sep, p, pulled) && pred_entails(s, sep, pulled, p))) {
      pass = false;
      detail = "p=" + render_family(s, p) + " not self-equivalent";
      break;
    }
  }
  rep.add("generic-substitution", pass, detail);
  return rep;
}

RhoReport rho_audit(const ImplicativeStructure& s, Mask sep, int index_size) {
  RhoReport r;
  r.index_size = index_size;
  const int n = s.n();

  // Face one: descent to the quotient is injective on predicate classes.
  // Mutual entailment classes componentwise; every family must be uniformly
  // interderivable with its componentwise representative family.
  std::vector<int> rep_of(n);
  for (int a = 0; a < n; ++a) {
    int rep = a;
    for (int b = 0; b < a; ++b) {
      if (entails(s, sep, a, b) && entails(s, sep, b, a)) {
        rep = rep_of[b];
        break;
      }
    }
    rep_of[a] = rep;
  }
  if (pow_capped(n, index_size, 2'000'000) > 2'000'000)
    fail(StructureError::Kind::GuardExceeded, "index power too large for exhaustive descent scan");
  r.rho_injective = true;
  {
    Family cur(index_size, 0);
    while (true) {
      Family rep(index_size);
      for (int i = 0; i < index_size; ++i) rep[i] = rep_of[cur[i]];
      if (!(pred_entails(s, sep, cur, rep) && pred_entails(s, sep, rep, cur))) {
        r.rho_injective = false;
        break;
      }
      int k = index_size - 1;
      while (k >= 0 && cur[k] == n - 1) {
        cur[k] = 0;
        --k;
      }
      if (k < 0) break;
      ++cur[k];
    }
  }

  // Face two: the uniform power separator exhausts the componentwise power.
  r.uniform_eq_power = true;
  {
    std::vector<int> members;
    for (int t : MaskBits(sep)) members.push_back(t);
    const int m = static_cast<int>(members.size());
    if (m > 0 && index_size > 0) {
      std::vector<int> pick(index_size, 0);
      while (true) {
        Family fam(index_size);
        for (int i = 0; i < index_size; ++i) fam[i] = members[pick[i]];
        if (!uniform_membership(s, sep, fam).uniform) {
          r.uniform_eq_power = false;
          break;
        }
        int k = index_size - 1;
        while (k >= 0 && pick[k] == m - 1) {
          pick[k] = 0;
          --k;
        }
        if (k < 0) break;
        ++pick[k];
      }
    }
  }

  // Face three: the separator is closed under meets of that width, checked
  // over subsets directly.
  r.meet_closed = true;
  {
    std::vector<int> members;
    for (int t : MaskBits(sep)) members.push_back(t);
    const int m = static_cast<int>(members.size());
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> bool {
      if (!chosen.empty()) {
        Mask vals = 0;
        for (int t : chosen) vals |= mask_bit(t);
        if (!(sep & mask_bit(s.lat.meet(vals)))) return false;
      }
      if (static_cast<int>(chosen.size()) == index_size) return true;
      for (int i = start; i < m; ++i) {
        chosen.push_back(members[i]);
        const bool ok = self(self, i + 1);
        chosen.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    r.meet_closed = rec(rec, 0);
  }
  return r;
}

CollapseReport forcing_collapse_audit(const ImplicativeStructure& s, Mask sep, int max_index) {
  CollapseReport rep;
  const auto cls = classify_separator(s, sep);
  if (!cls.is_separator)
    fail(StructureError::Kind::InvalidSeparator, "collapse audit needs a separator");
  rep.principal = cls.principal;
  rep.forcing = cls.principal;
  for (int k = 0; k <= max_index; ++k) {
    rep.rho.push_back(rho_audit(s, sep, k));
    const auto& r = rep.rho.back();
    if (rep.failing_index < 0 && !(r.rho_injective && r.uniform_eq_power && r.meet_closed))
      rep.failing_index = k;
  }
  try {
    build_quotient(s, sep);
    rep.quotient_ok = true;
  } catch (const StructureError&) {
    rep.quotient_ok = false;
  }
  return rep;
}

ReductionReport reduction_iso_audit(const ImplicativeStructure& sb, Mask sep_b,
                                    const ImplicativeStructure& sa, Mask sep_a,
                                    const std::vector<int>& psi, std::vector<int> lift,
                                    int max_index, const AuditOptions& opt, bool strict) {
  const int nb = sb.n();
  const int na = sa.n();
  if (static_cast<int>(psi.size()) != nb)
    fail(StructureError::Kind::Mismatch, "psi size must match source carrier");
  for (int v : psi)
    if (v < 0 || v >= na) fail(StructureError::Kind::Mismatch, "psi value out of range");

  ReductionReport out;
  AuditReport& cond = out.conditions;
  cond.seed = opt.seed;

  {
    bool pass = true;
    std::string detail;
    auto check_mask = [&](Mask m) {
      if (!pass) return;
      Mask image = 0;
      for (int b : MaskBits(m)) image |= mask_bit(psi[b]);
      const int lhs = psi[sb.lat.meet(m)];
      const int rhs = sa.lat.meet(image);
      if (lhs != rhs) {
        pass = false;
        std::ostringstream o;
        o << "subset {";
        bool first = true;
        for (int b : MaskBits(m)) {
          if (!first) o << ',';
          first = false;
          o << sb.lat.name(b);
        }
        o << "} psi(meet)=" << sa.lat.name(lhs) << " meet(psi)=" << sa.lat.name(rhs);
        detail = o.str();
      }
    };
    if (nb <= 16) {
      cond.exhaustive = true;
      for (Mask m = 0; m < (Mask{1} << nb); ++m) check_mask(m);
    } else {
      cond.exhaustive = false;
      check_mask(0);
      for (int a = 0; a < nb; ++a)
        for (int b = a; b < nb; ++b) check_mask(mask_bit(a) | mask_bit(b));
      std::mt19937_64 rng(opt.seed);
      for (int k = 0; k < 4096; ++k) {
        Mask m = rng();
        if (nb < 64) m &= (Mask{1} << nb) - 1;
        check_mask(m);
      }
    }
    cond.add("meet-preservation", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int a = 0; a < nb && pass; ++a) {
      for (int b = 0; b < nb && pass; ++b) {
        const int lhs = psi[sb.arrow(a, b)];
        const int rhs = sa.arrow(psi[a], psi[b]);
        if (lhs != rhs) {
          pass = false;
          detail = "a=" + sb.lat.name(a) + " b=" + sb.lat.name(b) +
                   " psi(a->b)=" + sa.lat.name(lhs) + " psi(a)->psi(b)=" + sa.lat.name(rhs);
        }
      }
    }
    cond.add("arrow-preservation", pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    for (int b = 0; b < nb; ++b) {
      const bool inb = (sep_b & mask_bit(b)) != 0;
      const bool ina = (sep_a & mask_bit(psi[b])) != 0;
      if (inb != ina) {
        pass = false;
        detail = "b=" + sb.lat.name(b) + " in source separator: " + (inb ? "yes" : "no") +
                 ", image in target separator: " + (ina ? "yes" : "no");
        break;
      }
    }
    cond.add("separator-reflection", pass, detail);
  }
  {
    Mask image = 0;
    for (int b = 0; b < nb; ++b) image |= mask_bit(psi[b]);
    bool pass = true;
    std::string detail;
    for (int a = 0; a < na; ++a) {
      if (!(image & mask_bit(a))) {
        pass = false;
        detail = "element " + sa.lat.name(a) + " has no preimage";
        break;
      }
    }
    cond.add("elementwise-surjectivity", pass, detail);
  }
  if (strict && !cond.ok) {
    for (const auto& c : cond.checks)
      if (!c.pass)
        fail(StructureError::Kind::NotAReduction, c.name + " fails: " + c.detail);
  }

  if (lift.empty()) {
    lift.assign(na, -1);
    for (int b = 0; b < nb; ++b)
      if (lift[psi[b]] < 0) lift[psi[b]] = b;
    for (int a = 0; a < na; ++a)
      if (lift[a] < 0)
        fail(StructureError::Kind::Mismatch,
             "element " + sa.lat.name(a) + " has no psi preimage; provide a lift");
  }
  if (static_cast<int>(lift.size()) != na)
    fail(StructureError::Kind::Mismatch, "lift size must match target carrier");
  for (int v : lift)
    if (v < 0 || v >= nb) fail(StructureError::Kind::Mismatch, "lift value out of range");

  for (int k = 0; k <= max_index; ++k) {
    AuditReport rep;
    AuditOptions opt_k = opt;
    opt_k.seed = opt.seed + static_cast<std::uint64_t>(k) + 1;
    rep.seed = opt_k.seed;
    bool ex_b = true, ex_a = true;
    auto bs = family_sample(nb, k, opt_k, &ex_b);
    auto as = family_sample(na, k, opt_k, &ex_a);
    rep.exhaustive = ex_b && ex_a;

    std::vector<Family> mapped(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      mapped[i].resize(k);
      for (int j = 0; j < k; ++j) mapped[i][j] = psi[bs[i][j]];
    }

    bool kernel = true;
    std::string kernel_detail;
    for (std::size_t i = 0; i < bs.size() && kernel; ++i) {
      for (std::size_t j = 0; j < bs.size() && kernel; ++j) {
        const bool up = pred_entails(sb, sep_b, bs[i], bs[j]);
        const bool down = pred_entails(sa, sep_a, mapped[i], mapped[j]);
        if (up != down) {
          kernel = false;
          kernel_detail = "p=" + render_family(sb, bs[i]) + " q=" + render_family(sb, bs[j]) +
                          " source=" + (up ? "true" : "false") +
                          " image=" + (down ? "true" : "false");
        }
      }
    }
    rep.add("kernel-equivalence", kernel, kernel_detail);

    bool surj = true;
    std::string surj_detail;
    for (const auto& a : as) {
      Family b(k), back(k);
      for (int j = 0; j < k; ++j) {
        b[j] = lift[a[j]];
        back[j] = psi[b[j]];
      }
      if (!(pred_entails(sa, sep_a, back, a) && pred_entails(sa, sep_a, a, back))) {
        surj = false;
        surj_detail = "a=" + render_family(sa, a) + " image=" + render_family(sa, back);
        break;
      }
    }
    rep.add("class-surjectivity", surj, surj_detail);
    out.per_index.push_back(std::move(rep));
  }
  return out;
}

}  // namespace ialg
