#pragma once

#include <vector>

#include "ialg/separator.hpp"
#include "ialg/structure.hpp"

namespace ialg {

// a entails b over S when (a -> b) is a member of S.
bool entails(const ImplicativeStructure& s, Mask sep, int a, int b);

// Quotient of the carrier by mutual entailment over a separator; a Heyting
// algebra (Boolean when the separator is classical). Class ids are assigned
// by least representative index; meet/join come from the product/sum
// encodings, implication from the arrow.
struct QuotientHA {
  int k = 0;
  std::vector<int> class_of;       // element -> class
  std::vector<int> rep;            // class -> least element index
  std::vector<Mask> members;       // class -> member set
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> meet, join, imp;
  int top = -1, bot = -1;

  bool degenerate() const { return top == bot; }
  int neg(int c) const { return imp[c][bot]; }
};

// Throws InvalidSeparator when `sep` is not a separator. Verifies on the
// way out that the operations are independent of representatives, that the
// top class is exactly S, that the bottom class is { c : ~c in S }, and
// that the residuation law holds; violations raise Mismatch.
QuotientHA build_quotient(const ImplicativeStructure& s, Mask sep);

// not not x = x everywhere
bool is_boolean(const QuotientHA& q);

}  // namespace ialg
