#include "ialg/quotient.hpp"

#include "ialg/fol.hpp"

namespace ialg {

bool entails(const ImplicativeStructure& s, Mask sep, int a, int b) {
  return mask_has(sep, s.arrow(a, b));
}

namespace {

void fail(const std::string& msg) {
  throw StructureError(StructureError::Kind::Mismatch, "quotient: " + msg);
}

}  // namespace

QuotientHA build_quotient(const ImplicativeStructure& s, Mask sep) {
  auto cls_rep = classify_separator(s, sep);
  if (!cls_rep.is_separator)
    throw StructureError(StructureError::Kind::InvalidSeparator,
                         "not a separator: " +
                             (cls_rep.failure ? cls_rep.failure->describe(s) : std::string()));
  const int n = s.n();
  QuotientHA q;
  q.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (q.class_of[a] >= 0) continue;
    int id = q.k++;
    q.class_of[a] = id;
    q.rep.push_back(a);
    q.members.push_back(mask_bit(a));
    for (int b = a + 1; b < n; ++b)
      if (q.class_of[b] < 0 && entails(s, sep, a, b) && entails(s, sep, b, a)) {
        q.class_of[b] = id;
        q.members[id] |= mask_bit(b);
      }
  }

  q.leq.assign(q.k, std::vector<bool>(q.k, false));
  for (int i = 0; i < q.k; ++i)
    for (int j = 0; j < q.k; ++j) q.leq[i][j] = entails(s, sep, q.rep[i], q.rep[j]);

  // order sanity: reflexive, transitive, antisymmetric by construction
  for (int i = 0; i < q.k; ++i) {
    if (!q.leq[i][i]) fail("order not reflexive");
    for (int j = 0; j < q.k; ++j) {
      if (i != j && q.leq[i][j] && q.leq[j][i]) fail("distinct classes mutually entail");
      for (int l = 0; l < q.k; ++l)
        if (q.leq[i][j] && q.leq[j][l] && !q.leq[i][l]) fail("order not transitive");
    }
  }
  // entailment must be representative-independent
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (entails(s, sep, a, b) != q.leq[q.class_of[a]][q.class_of[b]])
        fail("entailment depends on representatives");

  q.top = q.class_of[s.top()];
  q.bot = q.class_of[s.bottom()];
  if (q.members[q.top] != sep) fail("top class differs from the separator");
  Mask refuted = 0;
  for (int c = 0; c < n; ++c)
    if (mask_has(sep, encode_not(s, c))) refuted |= mask_bit(c);
  if (q.members[q.bot] != refuted) fail("bottom class differs from the refuted elements");

  auto table = [&](auto&& op) {
    std::vector<std::vector<int>> t(q.k, std::vector<int>(q.k, -1));
    for (int i = 0; i < q.k; ++i)
      for (int j = 0; j < q.k; ++j) {
        t[i][j] = q.class_of[op(q.rep[i], q.rep[j])];
        for (int a : MaskBits(q.members[i]))
          for (int b : MaskBits(q.members[j]))
            if (q.class_of[op(a, b)] != t[i][j]) fail("operation depends on representatives");
      }
    return t;
  };
  q.meet = table([&](int a, int b) { return encode_times(s, a, b); });
  q.join = table([&](int a, int b) { return encode_plus(s, a, b); });
  q.imp = table([&](int a, int b) { return s.arrow(a, b); });

  // lattice laws against the order
  for (int i = 0; i < q.k; ++i)
    for (int j = 0; j < q.k; ++j) {
      int m = q.meet[i][j], jn = q.join[i][j];
      if (!q.leq[m][i] || !q.leq[m][j]) fail("meet is not a lower bound");
      if (!q.leq[i][jn] || !q.leq[j][jn]) fail("join is not an upper bound");
      for (int l = 0; l < q.k; ++l) {
        if (q.leq[l][i] && q.leq[l][j] && !q.leq[l][m]) fail("meet is not greatest");
        if (q.leq[i][l] && q.leq[j][l] && !q.leq[jn][l]) fail("join is not least");
        // residuation: l /\ i <= j iff l <= i -> j
        if ((q.leq[q.meet[l][i]][j]) != (q.leq[l][q.imp[i][j]])) fail("residuation fails");
      }
      if (!q.leq[i][q.top]) fail("top is not greatest");
      if (!q.leq[q.bot][i]) fail("bottom is not least");
    }
  return q;
}

bool is_boolean(const QuotientHA& q) {
  for (int c = 0; c < q.k; ++c)
    if (q.neg(q.neg(c)) != c) return false;
  return true;
}

}  // namespace ialg
