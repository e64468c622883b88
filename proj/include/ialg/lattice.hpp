#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ialg {

// Subsets of lattice elements are bit masks; element i is bit i.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

inline bool mask_has(Mask m, int i) { return (m >> i) & Mask{1}; }
inline Mask mask_bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int mask_count(Mask m) { return __builtin_popcountll(m); }

// Iterate set bits: for (int i : MaskBits(m)) ...
struct MaskBits {
  Mask m;
  explicit MaskBits(Mask mm) : m(mm) {}
  struct iterator {
    Mask rest;
    bool operator!=(const iterator& o) const { return rest != o.rest; }
    int operator*() const { return __builtin_ctzll(rest); }
    iterator& operator++() {
      rest &= rest - 1;
      return *this;
    }
  };
  iterator begin() const { return {m}; }
  iterator end() const { return {0}; }
};

struct LatticeError : std::runtime_error {
  enum class Kind { EmptyCarrier, TooLarge, NotAntisymmetric, NotALattice, BadName };
  Kind kind;
  LatticeError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Finite complete lattice over named elements. All binary meets/joins are
// precomputed; meets/joins of arbitrary subsets fold over those, with the
// empty meet = top and the empty join = bottom.
class FiniteLattice {
 public:
  FiniteLattice() = default;  // empty placeholder; use build()/from_leq()

  // Builds from a generating set of order pairs (reflexive-transitive
  // closure is taken). Throws LatticeError if the carrier is empty, has
  // more than 64 elements, the closure is not antisymmetric, or some pair
  // lacks a meet or join.
  static FiniteLattice build(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& order_pairs);

  // Builds from an order relation given as row masks (row a = set of b with
  // a <= b); reflexive-transitive closure is taken. Same validation as build().
  static FiniteLattice from_leq(std::vector<std::string> elements, std::vector<Mask> leq_rows);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  // -1 if the name is unknown.
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return mask_has(up_[a], b); }
  Mask up_set(int a) const { return up_[a]; }
  Mask down_set(int a) const { return down_[a]; }

  int meet2(int a, int b) const { return meet_[a][b]; }
  int join2(int a, int b) const { return join_[a][b]; }
  int meet(Mask subset) const;
  int join(Mask subset) const;
  int top() const { return top_; }
  int bottom() const { return bottom_; }

  // True if b covers a (a < b with nothing strictly between).
  bool covers(int a, int b) const;

  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && up_ == o.up_;
  }

 private:
  void finish();  // computes meet/join tables, top, bottom; validates

  std::vector<std::string> names_;
  std::vector<Mask> up_;    // up_[a] = {b : a <= b}
  std::vector<Mask> down_;  // down_[a] = {b : b <= a}
  std::vector<std::vector<int>> meet_, join_;
  int top_ = -1, bottom_ = -1;
};

}  // namespace ialg
