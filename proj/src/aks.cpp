#include "ialg/aks.hpp"

#include <algorithm>

#include "ialg/eval.hpp"
#include "ialg/separator.hpp"

namespace ialg {

namespace {

using K = StructureError::Kind;

[[noreturn]] void bad(const std::string& msg) { throw StructureError(K::InvalidAKS, msg); }

void check_shapes(const AKS& k) {
  if (k.terms.empty() || k.stacks.empty()) bad("terms and stacks must be nonempty");
  if (k.nt() > kMaxElements || k.ns() > kMaxElements) bad("carrier exceeds 64 elements");
  const int nt = k.nt();
  const int ns = k.ns();
  auto table = [&](const std::vector<std::vector<int>>& t, int rows, int cols, int range,
                   const char* what) {
    if (static_cast<int>(t.size()) != rows) bad(std::string(what) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != cols)
        bad(std::string(what) + " table has a wrong-length row");
      for (int v : row)
        if (v < 0 || v >= range) bad(std::string(what) + " table value out of range");
    }
  };
  table(k.app, nt, nt, nt, "app");
  table(k.push, nt, ns, ns, "push");
  if (static_cast<int>(k.kont.size()) != ns) bad("kont table has wrong length");
  for (int v : k.kont)
    if (v < 0 || v >= nt) bad("kont value out of range");
  for (int c : {k.K, k.S, k.cc})
    if (c < 0 || c >= nt) bad("distinguished combinator out of range");
  if (k.pl & ~full_mask(nt)) bad("proof-like set mentions unknown terms");
  if (static_cast<int>(k.pole.size()) != nt) bad("pole has wrong row count");
  for (Mask row : k.pole)
    if (row & ~full_mask(ns)) bad("pole row mentions unknown stacks");
}

}  // namespace

void validate_aks(const AKS& k) {
  check_shapes(k);
  for (int c : {k.K, k.S, k.cc})
    if (!mask_has(k.pl, c))
      bad("proof-like terms must contain K, S and cc; missing " + k.terms[c]);
  for (int t : MaskBits(k.pl))
    for (int u : MaskBits(k.pl))
      if (!mask_has(k.pl, k.app[t][u]))
        bad("proof-like terms not closed under application: " + k.terms[t] + " applied to " +
            k.terms[u] + " gives " + k.terms[k.app[t][u]]);
  const int nt = k.nt();
  const int ns = k.ns();
  for (int t = 0; t < nt; ++t)
    for (int u = 0; u < nt; ++u)
      for (int pi = 0; pi < ns; ++pi)
        if (k.in_pole(t, k.push[u][pi]) && !k.in_pole(k.app[t][u], pi))
          bad("pole axiom 1 fails at t=" + k.terms[t] + ", u=" + k.terms[u] +
              ", pi=" + k.stacks[pi]);
  for (int t = 0; t < nt; ++t)
    for (int pi = 0; pi < ns; ++pi) {
      if (!k.in_pole(t, pi)) continue;
      for (int u = 0; u < nt; ++u)
        if (!k.in_pole(k.K, k.push[t][k.push[u][pi]]))
          bad("pole axiom 2 fails at t=" + k.terms[t] + ", u=" + k.terms[u] +
              ", pi=" + k.stacks[pi]);
    }
  for (int t = 0; t < nt; ++t)
    for (int u = 0; u < nt; ++u)
      for (int v = 0; v < nt; ++v)
        for (int pi = 0; pi < ns; ++pi)
          if (k.in_pole(t, k.push[v][k.push[k.app[u][v]][pi]]) &&
              !k.in_pole(k.S, k.push[t][k.push[u][k.push[v][pi]]]))
            bad("pole axiom 3 fails at t=" + k.terms[t] + ", u=" + k.terms[u] +
                ", v=" + k.terms[v] + ", pi=" + k.stacks[pi]);
  for (int t = 0; t < nt; ++t)
    for (int pi = 0; pi < ns; ++pi)
      if (k.in_pole(t, k.push[k.kont[pi]][pi]) && !k.in_pole(k.cc, k.push[t][pi]))
        bad("pole axiom 4 fails at t=" + k.terms[t] + ", pi=" + k.stacks[pi]);
  for (int t = 0; t < nt; ++t)
    for (int pi = 0; pi < ns; ++pi) {
      if (!k.in_pole(t, pi)) continue;
      for (int pi2 = 0; pi2 < ns; ++pi2)
        if (!k.in_pole(k.kont[pi], k.push[t][pi2]))
          bad("pole axiom 5 fails at t=" + k.terms[t] + ", pi=" + k.stacks[pi] +
              ", pi'=" + k.stacks[pi2]);
    }
}

Mask orthogonal(const AKS& k, Mask stack_set) {
  Mask out = 0;
  for (int t = 0; t < k.nt(); ++t)
    if ((k.pole[t] & stack_set) == stack_set) out |= mask_bit(t);
  return out;
}

InducedAlgebra make_from_aks(const AKS& k) {
  validate_aks(k);
  if (k.ns() > 5) throw StructureError(K::CarrierTooLarge, "at most 5 stacks supported");
  const int ns = k.ns();
  const int n = 1 << ns;
  std::vector<std::string> names(n);
  std::vector<Mask> leq(n, 0);
  for (int a = 0; a < n; ++a) {
    if (a == 0) {
      names[a] = "none";
    } else {
      for (int pi : MaskBits(static_cast<Mask>(a))) {
        if (!names[a].empty()) names[a] += "_";
        names[a] += k.stacks[pi];
      }
    }
    for (int b = 0; b < n; ++b)
      if ((a & b) == b) leq[a] |= mask_bit(b);  // reverse inclusion
  }
  InducedAlgebra out;
  out.s.lat = FiniteLattice::from_leq(names, leq);
  out.s.kind = Kind::Full;
  out.s.imp.assign(n, std::vector<int>(n, 0));
  out.stack_sets.resize(n);
  std::vector<Mask> orth(n);
  for (int a = 0; a < n; ++a) {
    out.stack_sets[a] = static_cast<Mask>(a);
    orth[a] = orthogonal(k, static_cast<Mask>(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mask result = 0;
      for (int t : MaskBits(orth[a]))
        for (int pi : MaskBits(static_cast<Mask>(b))) result |= mask_bit(k.push[t][pi]);
      out.s.imp[a][b] = static_cast<int>(result);
    }
  for (int a = 0; a < n; ++a)
    if (orth[a] & k.pl) out.separator |= mask_bit(a);
  return out;
}

AKS aks_from_classical(const ImplicativeStructure& s, Mask separator) {
  if (s.kind != Kind::Full)
    throw StructureError(K::Mismatch, "AKS construction needs a full structure");
  auto rep = classify_separator(s, separator);
  if (!rep.is_separator)
    throw StructureError(K::InvalidSeparator,
                         "not a separator: " + (rep.failure ? rep.failure->describe(s) : ""));
  if (!rep.classical)
    throw StructureError(K::NotClassical, "separator does not contain cc");
  const int n = s.n();
  AKS k;
  k.terms = s.lat.names();
  k.stacks = s.lat.names();
  k.app.assign(n, std::vector<int>(n, 0));
  k.push.assign(n, std::vector<int>(n, 0));
  k.kont.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      k.app[a][b] = *apply(s, a, b);
      k.push[a][b] = s.arrow(a, b);
    }
    k.kont[a] = s.arrow(a, s.bottom());
  }
  k.K = combinator(s, Combinator::K);
  k.S = combinator(s, Combinator::S);
  k.cc = combinator(s, Combinator::CC);
  k.pl = separator;
  k.pole.resize(n);
  for (int a = 0; a < n; ++a) {
    k.pole[a] = 0;
    for (int b = 0; b < n; ++b)
      if (s.leq(a, b)) k.pole[a] |= mask_bit(b);
  }
  validate_aks(k);
  return k;
}

}  // namespace ialg
