#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "ialg/lattice.hpp"

using namespace ialg;

namespace {

// Brute-force order oracle, independent of the Mask representation: closure
// by Floyd-Warshall over a bool matrix, bounds by scanning all elements.
struct OrderOracle {
  int n;
  std::vector<std::vector<bool>> le;

  OrderOracle(int n_, const std::vector<std::pair<int, int>>& pairs) : n(n_) {
    le.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : pairs) le[a][b] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
  }

  std::optional<int> glb(const std::vector<int>& xs) const {
    std::optional<int> best;
    for (int c = 0; c < n; ++c) {
      bool lower = true;
      for (int x : xs) lower = lower && le[c][x];
      if (!lower) continue;
      // c must dominate every common lower bound
      bool greatest = true;
      for (int d = 0; d < n; ++d) {
        bool d_lower = true;
        for (int x : xs) d_lower = d_lower && le[d][x];
        if (d_lower && !le[d][c]) greatest = false;
      }
      if (greatest) {
        if (best) return std::nullopt;  // not unique: order broken
        best = c;
      }
    }
    return best;
  }

  std::optional<int> lub(const std::vector<int>& xs) const {
    std::optional<int> best;
    for (int c = 0; c < n; ++c) {
      bool upper = true;
      for (int x : xs) upper = upper && le[x][c];
      if (!upper) continue;
      bool least = true;
      for (int d = 0; d < n; ++d) {
        bool d_upper = true;
        for (int x : xs) d_upper = d_upper && le[x][d];
        if (d_upper && !le[c][d]) least = false;
      }
      if (least) {
        if (best) return std::nullopt;
        best = c;
      }
    }
    return best;
  }
};

std::vector<std::string> nm(std::initializer_list<const char*> xs) {
  return std::vector<std::string>(xs.begin(), xs.end());
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

FiniteLattice diamond() {
  // bot, x, y, top with x,y incomparable
  return FiniteLattice::build(nm({"bot", "x", "y", "top"}),
                              Pairs{{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

void check_against_oracle(const FiniteLattice& L, const std::vector<std::pair<int, int>>& pairs) {
  OrderOracle O(L.size(), pairs);
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) CHECK(L.leq(a, b) == O.le[a][b]);
  // every subset, both bounds
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    std::vector<int> xs;
    for (int i = 0; i < n; ++i)
      if (mask_has(s, i)) xs.push_back(i);
    auto g = O.glb(xs);
    auto l = O.lub(xs);
    REQUIRE(g.has_value());
    REQUIRE(l.has_value());
    CHECK(L.meet(s) == *g);
    CHECK(L.join(s) == *l);
  }
}

}  // namespace

TEST_CASE("singleton lattice") {
  auto L = FiniteLattice::build(nm({"only"}), {});
  CHECK(L.size() == 1);
  CHECK(L.top() == 0);
  CHECK(L.bottom() == 0);
  CHECK(L.meet(0) == 0);  // empty meet = top
  CHECK(L.join(0) == 0);
  check_against_oracle(L, {});
}

TEST_CASE("two-chain") {
  auto L = FiniteLattice::build(nm({"0", "1"}), Pairs{{"0", "1"}});
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  CHECK(L.leq(0, 1));
  CHECK(!L.leq(1, 0));
  CHECK(L.meet2(0, 1) == 0);
  CHECK(L.join2(0, 1) == 1);
  CHECK(L.meet(0) == 1);  // empty subset
  CHECK(L.join(0) == 0);
  check_against_oracle(L, {{0, 1}});
}

TEST_CASE("three-chain with middle") {
  auto L = FiniteLattice::build(nm({"0", "m", "1"}), Pairs{{"0", "m"}, {"m", "1"}});
  CHECK(L.leq(0, 1));  // transitivity from generators
  CHECK(L.join(mask_bit(0) | mask_bit(1)) == 1);  // join {0, m} = m
  CHECK(L.meet(mask_bit(1) | mask_bit(2)) == 1);
  check_against_oracle(L, {{0, 1}, {1, 2}});
}

TEST_CASE("diamond") {
  auto L = diamond();
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 3);
  CHECK(L.meet2(1, 2) == 0);
  CHECK(L.join2(1, 2) == 3);
  CHECK(L.meet(mask_bit(1) | mask_bit(2)) == 0);
  check_against_oracle(L, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("M3 and N5 are lattices") {
  auto M3 = FiniteLattice::build(
      nm({"bot", "a", "b", "c", "top"}),
      Pairs{{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
  check_against_oracle(M3, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto N5 = FiniteLattice::build(
      nm({"bot", "a", "b", "c", "top"}),
      Pairs{{"bot", "a"}, {"a", "top"}, {"bot", "b"}, {"b", "c"}, {"c", "top"}});
  check_against_oracle(N5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("covers") {
  auto L = FiniteLattice::build(nm({"0", "m", "1"}), Pairs{{"0", "m"}, {"m", "1"}});
  CHECK(L.covers(0, 1));
  CHECK(L.covers(1, 2));
  CHECK(!L.covers(0, 2));
  CHECK(!L.covers(0, 0));
  CHECK(!L.covers(2, 0));
}

TEST_CASE("empty carrier rejected") {
  CHECK_THROWS_AS(FiniteLattice::build({}, {}), LatticeError);
  try {
    FiniteLattice::build({}, {});
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::EmptyCarrier);
  }
}

TEST_CASE("antisymmetry violation names both elements") {
  try {
    FiniteLattice::build(nm({"a", "b"}), Pairs{{"a", "b"}, {"b", "a"}});
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::NotAntisymmetric);
    std::string msg = e.what();
    CHECK(msg.find("a") != std::string::npos);
    CHECK(msg.find("b") != std::string::npos);
  }
}

TEST_CASE("two incomparable points have no bounds") {
  try {
    FiniteLattice::build(nm({"a", "b"}), {});
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::NotALattice);
  }
}

TEST_CASE("missing join detected with witness pair") {
  // bot under two incomparable maximal points: meets exist, join of a,b does not
  try {
    FiniteLattice::build(nm({"bot", "a", "b"}), Pairs{{"bot", "a"}, {"bot", "b"}});
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::NotALattice);
    std::string msg = e.what();
    CHECK(msg.find("'a'") != std::string::npos);
    CHECK(msg.find("'b'") != std::string::npos);
  }
}

TEST_CASE("missing meet detected") {
  // dual: two minimal points under a top
  try {
    FiniteLattice::build(nm({"a", "b", "top"}), Pairs{{"a", "top"}, {"b", "top"}});
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::NotALattice);
  }
}

TEST_CASE("unknown element in order pair") {
  CHECK_THROWS_AS(FiniteLattice::build(nm({"a"}), Pairs{{"a", "zz"}}), LatticeError);
}

TEST_CASE("duplicate names rejected") {
  CHECK_THROWS_AS(FiniteLattice::build(nm({"a", "a"}), {}), LatticeError);
}

TEST_CASE("oversized carrier rejected") {
  std::vector<std::string> names;
  Pairs pairs;
  for (int i = 0; i < 65; ++i) {
    names.push_back("e" + std::to_string(i));
    if (i) pairs.push_back({"e" + std::to_string(i - 1), "e" + std::to_string(i)});
  }
  try {
    FiniteLattice::build(names, pairs);
    FAIL("expected LatticeError");
  } catch (const LatticeError& e) {
    CHECK(e.kind == LatticeError::Kind::TooLarge);
  }
  // 64 itself is fine
  names.pop_back();
  pairs.pop_back();
  auto L = FiniteLattice::build(names, pairs);
  CHECK(L.size() == 64);
  CHECK(L.top() == 63);
  CHECK(L.meet(full_mask(64)) == 0);
}

TEST_CASE("index_of") {
  auto L = diamond();
  CHECK(L.index_of("x") == 1);
  CHECK(L.index_of("nope") == -1);
}

TEST_CASE("names preserved in declaration order") {
  auto L = diamond();
  CHECK(L.name(0) == "bot");
  CHECK(L.name(3) == "top");
}
