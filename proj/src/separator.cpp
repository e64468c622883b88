#include "ialg/separator.hpp"

#include <sstream>

namespace ialg {

std::string SeparatorFailure::describe(const ImplicativeStructure& s) const {
  const auto& L = s.lat;
  std::ostringstream os;
  switch (reason) {
    case Reason::MissingK:
      os << "K = " << L.name(combinator(s, Combinator::K)) << " is not a member";
      break;
    case Reason::MissingS:
      os << "S = " << L.name(combinator(s, Combinator::S)) << " is not a member";
      break;
    case Reason::NotUpwardClosed:
      os << L.name(a) << " is a member but " << L.name(b) << " above it is not";
      break;
    case Reason::NotClosed:
      os << "not closed at (" << L.name(a) << ", " << L.name(b) << ")";
      break;
  }
  return os.str();
}

namespace {

Mask upward_closure(const ImplicativeStructure& s, Mask m) {
  Mask out = 0;
  for (int a : MaskBits(m)) out |= s.lat.up_set(a);
  return out;
}

bool upward_closed(const ImplicativeStructure& s, Mask m, int* wa, int* wb) {
  for (int a : MaskBits(m))
    for (int b : MaskBits(s.lat.up_set(a) & ~m)) {
      *wa = a;
      *wb = b;
      return false;
    }
  return true;
}

}  // namespace

SeparatorReport classify_separator(const ImplicativeStructure& s, Mask members) {
  SeparatorReport rep;
  const int K = combinator(s, Combinator::K);
  const int S = combinator(s, Combinator::S);
  const int cc = combinator(s, Combinator::CC);

  rep.consistent = !mask_has(members, s.bottom());
  rep.classical = mask_has(members, cc);

  int wa = -1, wb = -1;
  bool up = upward_closed(s, members, &wa, &wb);

  rep.is_separator = true;
  if (!up) {
    rep.is_separator = false;
    rep.failure = SeparatorFailure{SeparatorFailure::Reason::NotUpwardClosed, wa, wb};
  } else if (!mask_has(members, K)) {
    rep.is_separator = false;
    rep.failure = SeparatorFailure{SeparatorFailure::Reason::MissingK, -1, -1};
  } else if (!mask_has(members, S)) {
    rep.is_separator = false;
    rep.failure = SeparatorFailure{SeparatorFailure::Reason::MissingS, -1, -1};
  } else if (s.kind == Kind::Full) {
    for (int a : MaskBits(members)) {
      for (int b : MaskBits(members)) {
        auto ab = apply(s, a, b);
        if (!ab || !mask_has(members, *ab)) {
          rep.is_separator = false;
          rep.failure = SeparatorFailure{SeparatorFailure::Reason::NotClosed, a, b};
          break;
        }
      }
      if (!rep.is_separator) break;
    }
  } else {
    for (int a : MaskBits(members)) {
      for (int b = 0; b < s.n() && rep.is_separator; ++b)
        if (mask_has(members, s.arrow(a, b)) && !mask_has(members, b)) {
          rep.is_separator = false;
          rep.failure = SeparatorFailure{SeparatorFailure::Reason::NotClosed, a, b};
        }
      if (!rep.is_separator) break;
    }
  }

  // filter and principal describe the raw subset
  rep.is_filter = members != 0 && up;
  if (rep.is_filter)
    for (int a : MaskBits(members))
      for (int b : MaskBits(members))
        if (!mask_has(members, s.lat.meet2(a, b))) rep.is_filter = false;
  rep.principal = members != 0 && mask_has(members, s.lat.meet(members));

  rep.ultra = false;
  if (rep.is_separator && rep.consistent) {
    // count mutual-entailment classes
    std::vector<int> cls(s.n(), -1);
    int k = 0;
    for (int a = 0; a < s.n(); ++a) {
      if (cls[a] >= 0) continue;
      cls[a] = k;
      for (int b = a + 1; b < s.n(); ++b)
        if (cls[b] < 0 && mask_has(members, s.arrow(a, b)) && mask_has(members, s.arrow(b, a)))
          cls[b] = k;
      ++k;
    }
    rep.ultra = k == 2;
  }
  return rep;
}

Mask generate_separator(const ImplicativeStructure& s, Mask X) {
  Mask cur = X | mask_bit(combinator(s, Combinator::K)) | mask_bit(combinator(s, Combinator::S));
  for (;;) {
    Mask next = cur;
    for (int a : MaskBits(cur))
      for (int b : MaskBits(cur)) {
        auto ab = apply(s, a, b);
        if (!ab)
          throw StructureError(StructureError::Kind::UndefinedApplication,
                               "application " + s.lat.name(a) + " . " + s.lat.name(b) +
                                   " is undefined; cannot close under application");
        next |= mask_bit(*ab);
      }
    if (next == cur) break;
    cur = next;
  }
  return upward_closure(s, cur);
}

Mask generate_separator_mp(const ImplicativeStructure& s, Mask X) {
  Mask cur = upward_closure(
      s, X | mask_bit(combinator(s, Combinator::K)) | mask_bit(combinator(s, Combinator::S)));
  for (;;) {
    Mask next = cur;
    for (int a : MaskBits(cur))
      for (int b = 0; b < s.n(); ++b)
        if (mask_has(cur, s.arrow(a, b))) next |= mask_bit(b);
    next = upward_closure(s, next);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

std::pair<Mask, Mask> cores(const ImplicativeStructure& s) {
  return {generate_separator_mp(s, 0),
          generate_separator_mp(s, mask_bit(combinator(s, Combinator::CC)))};
}

bool deduction_holds(const ImplicativeStructure& s, Mask sep, int a, int b) {
  Mask extended = s.kind == Kind::Full ? generate_separator(s, sep | mask_bit(a))
                                       : generate_separator_mp(s, sep | mask_bit(a));
  return mask_has(sep, s.arrow(a, b)) == mask_has(extended, b);
}

std::vector<Mask> all_separators(const ImplicativeStructure& s) {
  if (s.n() > 20)
    throw StructureError(StructureError::Kind::GuardExceeded,
                         "separator enumeration limited to carriers of 20 elements");
  std::vector<Mask> out;
  const Mask all = full_mask(s.n());
  for (Mask m = 0; m <= all; ++m)
    if (classify_separator(s, m).is_separator) out.push_back(m);
  return out;
}

}  // namespace ialg
