#include "ialg/constructors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace ialg {

namespace {

std::string subset_name(const std::vector<std::string>& atoms, Mask sub) {
  if (sub == 0) return "none";
  std::string out;
  for (int i : MaskBits(sub)) {
    if (!out.empty()) out += "_";
    out += atoms[i];
  }
  return out;
}

}  // namespace

ImplicativeStructure make_heyting(const FiniteLattice& lat) {
  const int n = lat.size();
  ImplicativeStructure s;
  s.lat = lat;
  s.kind = Kind::Full;
  s.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask candidates = 0;
      for (int c = 0; c < n; ++c)
        if (lat.leq(lat.meet2(c, a), b)) candidates |= mask_bit(c);
      int best = -1;
      for (int c : MaskBits(candidates))
        if ((candidates & ~lat.down_set(c)) == 0) best = c;
      if (best < 0)
        throw StructureError(StructureError::Kind::NotHeyting,
                             "no greatest c with c/\\" + lat.name(a) + " <= " + lat.name(b) +
                                 "; lattice is not a Heyting algebra");
      s.imp[a][b] = best;
    }
  return s;
}

ImplicativeStructure make_dummy(const FiniteLattice& lat, DummyMode mode) {
  const int n = lat.size();
  ImplicativeStructure s;
  s.lat = lat;
  s.kind = Kind::Full;
  s.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.imp[a][b] = mode == DummyMode::Right ? b : lat.top();
  return s;
}

bool Pas::total() const {
  for (const auto& row : app)
    for (int v : row)
      if (v < 0) return false;
  return true;
}

Pas Pas::make(std::vector<std::string> atoms, std::vector<std::vector<int>> app) {
  const int p = static_cast<int>(atoms.size());
  if (p == 0)
    throw StructureError(StructureError::Kind::Mismatch, "applicative structure needs atoms");
  std::set<std::string> seen(atoms.begin(), atoms.end());
  if (static_cast<int>(seen.size()) != p)
    throw StructureError(StructureError::Kind::Mismatch, "duplicate atom names");
  if (static_cast<int>(app.size()) != p)
    throw StructureError(StructureError::Kind::Mismatch, "application table must be square");
  for (const auto& row : app) {
    if (static_cast<int>(row.size()) != p)
      throw StructureError(StructureError::Kind::Mismatch, "application table must be square");
    for (int v : row)
      if (v < -1 || v >= p)
        throw StructureError(StructureError::Kind::Mismatch, "application entry out of range");
  }
  return Pas{std::move(atoms), std::move(app)};
}

ImplicativeStructure make_kleene_subsets(const Pas& p) {
  const int np = static_cast<int>(p.atoms.size());
  if (np > 5)
    throw StructureError(StructureError::Kind::CarrierTooLarge,
                         "subset construction limited to 5 atoms (carrier 2^|P|)");
  const int n = 1 << np;
  std::vector<std::string> names(n);
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a) {
    names[a] = subset_name(p.atoms, static_cast<Mask>(a));
    for (int b = 0; b < n; ++b)
      if ((a & ~b) == 0) up[a] |= mask_bit(b);  // a included in b
  }
  ImplicativeStructure s;
  s.lat = FiniteLattice::from_leq(std::move(names), std::move(up));
  s.kind = p.total() ? Kind::Full : Kind::Quasi;
  s.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int result = 0;
      for (int z = 0; z < np; ++z) {
        bool ok = true;
        for (int x = 0; x < np; ++x) {
          if (!((a >> x) & 1)) continue;
          int zx = p.app[z][x];
          if (zx < 0 || !((b >> zx) & 1)) {
            ok = false;
            break;
          }
        }
        if (ok) result |= 1 << z;
      }
      s.imp[a][b] = result;
    }
  return s;
}

ImplicativeStructure make_kleene_per(const Pas& p) {
  const int np = static_cast<int>(p.atoms.size());
  if (np > 3)
    throw StructureError(StructureError::Kind::CarrierTooLarge,
                         "relational construction limited to 3 atoms");
  const int pairs = np * np;
  auto bit = [np](int x, int y) { return x * np + y; };
  auto is_per = [&](unsigned r) {
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y) {
        if (!((r >> bit(x, y)) & 1)) continue;
        if (!((r >> bit(y, x)) & 1)) return false;  // symmetry
        for (int z = 0; z < np; ++z)                // transitivity
          if (((r >> bit(y, z)) & 1) && !((r >> bit(x, z)) & 1)) return false;
      }
    return true;
  };

  std::vector<unsigned> pers;
  for (unsigned r = 0; r < (1u << pairs); ++r)
    if (is_per(r)) pers.push_back(r);
  const int n = static_cast<int>(pers.size());

  std::vector<std::string> names(n);
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a) {
    names[a] = "r" + std::to_string(pers[a]);
    for (int b = 0; b < n; ++b)
      if ((pers[a] & ~pers[b]) == 0) up[a] |= mask_bit(b);
  }

  ImplicativeStructure s;
  s.lat = FiniteLattice::from_leq(std::move(names), std::move(up));
  s.kind = p.total() ? Kind::Full : Kind::Quasi;
  s.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      unsigned result = 0;
      for (int z1 = 0; z1 < np; ++z1)
        for (int z2 = 0; z2 < np; ++z2) {
          bool ok = true;
          for (int x1 = 0; x1 < np && ok; ++x1)
            for (int x2 = 0; x2 < np && ok; ++x2) {
              if (!((pers[a] >> bit(x1, x2)) & 1)) continue;
              int v1 = p.app[z1][x1], v2 = p.app[z2][x2];
              if (v1 < 0 || v2 < 0 || !((pers[b] >> bit(v1, v2)) & 1)) ok = false;
            }
          if (ok) result |= 1u << bit(z1, z2);
        }
      auto it = std::find(pers.begin(), pers.end(), result);
      if (it == pers.end())
        throw StructureError(StructureError::Kind::Mismatch,
                             "relational implication produced a non-PER");
      s.imp[a][b] = static_cast<int>(it - pers.begin());
    }
  return s;
}

std::vector<int> product_split(const std::vector<int>& sizes, int combined) {
  std::vector<int> parts(sizes.size());
  for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
    parts[i] = combined % sizes[i];
    combined /= sizes[i];
  }
  return parts;
}

int product_combine(const std::vector<int>& sizes, const std::vector<int>& parts) {
  int combined = 0;
  for (size_t i = 0; i < sizes.size(); ++i) combined = combined * sizes[i] + parts[i];
  return combined;
}

ImplicativeStructure make_product(const std::vector<ImplicativeStructure>& factors) {
  if (factors.empty())
    throw StructureError(StructureError::Kind::Mismatch, "product needs at least one factor");
  std::vector<int> sizes;
  long long total = 1;
  for (const auto& f : factors) {
    sizes.push_back(f.n());
    total *= f.n();
    if (total > kMaxElements)
      throw StructureError(StructureError::Kind::CarrierTooLarge,
                           "product carrier exceeds 64 elements");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());

  std::vector<std::string> names(n);
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a) {
    auto pa = product_split(sizes, a);
    std::string nm;
    for (int i = 0; i < k; ++i) {
      if (i) nm += "_";
      nm += factors[i].lat.name(pa[i]);
    }
    names[a] = nm;
    for (int b = 0; b < n; ++b) {
      auto pb = product_split(sizes, b);
      bool le = true;
      for (int i = 0; i < k; ++i) le = le && factors[i].leq(pa[i], pb[i]);
      if (le) up[a] |= mask_bit(b);
    }
  }

  ImplicativeStructure s;
  s.lat = FiniteLattice::from_leq(std::move(names), std::move(up));
  s.kind = Kind::Full;
  for (const auto& f : factors)
    if (f.kind == Kind::Quasi) s.kind = Kind::Quasi;
  s.imp.assign(n, std::vector<int>(n, -1));
  std::vector<int> parts(k);
  for (int a = 0; a < n; ++a) {
    auto pa = product_split(sizes, a);
    for (int b = 0; b < n; ++b) {
      auto pb = product_split(sizes, b);
      for (int i = 0; i < k; ++i) parts[i] = factors[i].arrow(pa[i], pb[i]);
      s.imp[a][b] = product_combine(sizes, parts);
    }
  }
  return s;
}

Completion complete_quasi(const ImplicativeStructure& s) {
  const int n = s.n();
  if (n + 1 > kMaxElements)
    throw StructureError(StructureError::Kind::CarrierTooLarge,
                         "completion would exceed 64 elements");
  std::vector<std::string> names(s.lat.names());
  std::string fresh = "TOP";
  while (s.lat.index_of(fresh) >= 0) fresh += "_";
  names.push_back(fresh);

  std::vector<Mask> up(n + 1);
  for (int a = 0; a < n; ++a) up[a] = s.lat.up_set(a) | mask_bit(n);
  up[n] = mask_bit(n);

  Completion c;
  c.new_top = n;
  c.s.lat = FiniteLattice::from_leq(std::move(names), std::move(up));
  c.s.kind = Kind::Full;
  c.s.imp.assign(n + 1, std::vector<int>(n + 1, -1));
  const int old_top = s.top();
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      if (b == n)
        c.s.imp[a][b] = n;
      else if (a == n)
        c.s.imp[a][b] = s.arrow(old_top, b);
      else
        c.s.imp[a][b] = s.arrow(a, b);
    }
  c.embed.resize(n);
  for (int a = 0; a < n; ++a) c.embed[a] = a;
  return c;
}

Separator extend_separator(const Completion& c, const Separator& sep) {
  return Separator{sep.name, sep.members | mask_bit(c.new_top)};
}

JoinCompatReport is_join_compatible(const ImplicativeStructure& s, const ValidateOptions& opt) {
  const int n = s.n();
  if (n <= opt.exhaustive_limit)
    return opt.parallel ? join_compat_scan_parallel(s) : join_compat_scan_serial(s);
  if (!opt.allow_sample)
    throw StructureError(StructureError::Kind::GuardExceeded,
                         "carrier size " + std::to_string(n) + " exceeds exhaustive limit " +
                             std::to_string(opt.exhaustive_limit) +
                             "; enable sampling to check join compatibility");
  std::vector<Mask> subsets;
  subsets.push_back(0);
  for (int i = 0; i < n; ++i) {
    subsets.push_back(mask_bit(i));
    for (int j = i + 1; j < n; ++j) subsets.push_back(mask_bit(i) | mask_bit(j));
  }
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.random_subsets; ++k) subsets.push_back(rng() & full_mask(n));
  for (Mask A : subsets)
    for (int b = 0; b < n; ++b) {
      int lhs = s.top();
      for (int a : MaskBits(A)) lhs = s.lat.meet2(lhs, s.arrow(a, b));
      if (lhs != s.arrow(s.lat.join(A), b))
        return JoinCompatReport{false, false, opt.seed, A, b};
    }
  JoinCompatReport rep;
  rep.exhaustive = false;
  rep.seed = opt.seed;
  return rep;
}

}  // namespace ialg
