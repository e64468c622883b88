#include "ialg/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace ialg {

namespace {

void check_carrier(const std::vector<std::string>& elements) {
  if (elements.empty())
    throw LatticeError(LatticeError::Kind::EmptyCarrier, "lattice carrier is empty");
  if (static_cast<int>(elements.size()) > kMaxElements)
    throw LatticeError(LatticeError::Kind::TooLarge,
                       "lattice carrier has " + std::to_string(elements.size()) +
                           " elements; at most 64 supported");
  std::unordered_map<std::string, int> seen;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].empty())
      throw LatticeError(LatticeError::Kind::BadName, "empty element name");
    auto [it, fresh] = seen.emplace(elements[i], i);
    if (!fresh)
      throw LatticeError(LatticeError::Kind::BadName,
                         "duplicate element name '" + elements[i] + "'");
  }
}

}  // namespace

int FiniteLattice::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

FiniteLattice FiniteLattice::build(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& order_pairs) {
  check_carrier(elements);
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < n; ++i) idx[elements[i]] = i;

  std::vector<Mask> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = mask_bit(i);
  for (const auto& [lo, hi] : order_pairs) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end())
      throw LatticeError(LatticeError::Kind::BadName, "unknown element '" + lo + "' in order pair");
    if (b == idx.end())
      throw LatticeError(LatticeError::Kind::BadName, "unknown element '" + hi + "' in order pair");
    rows[a->second] |= mask_bit(b->second);
  }
  return from_leq(std::move(elements), std::move(rows));
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> elements,
                                      std::vector<Mask> leq_rows) {
  check_carrier(elements);
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(leq_rows.size()) != n)
    throw LatticeError(LatticeError::Kind::BadName, "order relation size mismatch");
  FiniteLattice L;
  L.names_ = std::move(elements);
  L.up_ = std::move(leq_rows);
  for (int a = 0; a < n; ++a) L.up_[a] = (L.up_[a] & full_mask(n)) | mask_bit(a);
  // Transitive closure: row a absorbs rows of everything above a.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Mask acc = L.up_[a];
      for (int b : MaskBits(L.up_[a])) acc |= L.up_[b];
      if (acc != L.up_[a]) {
        L.up_[a] = acc;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b : MaskBits(L.up_[a]))
      if (a != b && mask_has(L.up_[b], a))
        throw LatticeError(LatticeError::Kind::NotAntisymmetric,
                           "order not antisymmetric: '" + L.names_[a] + "' <= '" + L.names_[b] +
                               "' and '" + L.names_[b] + "' <= '" + L.names_[a] + "'");
  L.finish();
  return L;
}

void FiniteLattice::finish() {
  const int n = size();
  down_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b : MaskBits(up_[a])) down_[b] |= mask_bit(a);

  auto bound = [&](int a, int b, bool want_meet) -> int {
    Mask common = want_meet ? (down_[a] & down_[b]) : (up_[a] & up_[b]);
    for (int c : MaskBits(common)) {
      Mask dominated = want_meet ? down_[c] : up_[c];
      if ((common & ~dominated) == 0) return c;
    }
    return -1;
  };

  meet_.assign(n, std::vector<int>(n, -1));
  join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int m = bound(a, b, true);
      if (m < 0)
        throw LatticeError(LatticeError::Kind::NotALattice,
                           "elements '" + names_[a] + "' and '" + names_[b] +
                               "' have no greatest lower bound");
      int j = bound(a, b, false);
      if (j < 0)
        throw LatticeError(LatticeError::Kind::NotALattice,
                           "elements '" + names_[a] + "' and '" + names_[b] +
                               "' have no least upper bound");
      meet_[a][b] = meet_[b][a] = m;
      join_[a][b] = join_[b][a] = j;
    }

  top_ = 0;
  bottom_ = 0;
  for (int a = 1; a < n; ++a) {
    top_ = join_[top_][a];
    bottom_ = meet_[bottom_][a];
  }
}

int FiniteLattice::meet(Mask subset) const {
  int acc = top_;
  for (int a : MaskBits(subset)) acc = meet_[acc][a];
  return acc;
}

int FiniteLattice::join(Mask subset) const {
  int acc = bottom_;
  for (int a : MaskBits(subset)) acc = join_[acc][a];
  return acc;
}

bool FiniteLattice::covers(int a, int b) const {
  if (a == b || !leq(a, b)) return false;
  Mask strictly_between = up_[a] & down_[b] & ~mask_bit(a) & ~mask_bit(b);
  return strictly_between == 0;
}

}  // namespace ialg
