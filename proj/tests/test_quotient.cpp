#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ialg/constructors.hpp"
#include "ialg/fol.hpp"
#include "ialg/quotient.hpp"

using namespace ialg;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

FiniteLattice b2() { return FiniteLattice::build({"0", "1"}, Pairs{{"0", "1"}}); }

FiniteLattice c3() {
  return FiniteLattice::build({"0", "m", "1"}, Pairs{{"0", "m"}, {"m", "1"}});
}

FiniteLattice diamond() {
  return FiniteLattice::build({"bot", "x", "y", "top"},
                              Pairs{{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

}  // namespace

TEST_CASE("quotient by the top separator reproduces the Heyting algebra") {
  auto s = make_heyting(c3());
  auto q = build_quotient(s, 0b100);
  REQUIRE(q.k == 3);
  CHECK(q.class_of == std::vector<int>{0, 1, 2});
  CHECK(q.top == q.class_of[2]);
  CHECK(q.bot == q.class_of[0]);
  CHECK(!q.degenerate());
  // operations coincide with the lattice ones
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(q.meet[a][b] == s.lat.meet2(a, b));
      CHECK(q.join[a][b] == s.lat.join2(a, b));
      CHECK(q.imp[a][b] == s.arrow(a, b));
      CHECK(q.leq[a][b] == s.leq(a, b));
    }
  CHECK(!is_boolean(q));  // ~~m = top != m
}

TEST_CASE("quotient by an ultraseparator is the two-element Boolean algebra") {
  auto s = make_heyting(c3());
  auto q = build_quotient(s, 0b110);
  REQUIRE(q.k == 2);
  CHECK(q.members[q.top] == 0b110);
  CHECK(q.members[q.bot] == 0b001);
  CHECK(is_boolean(q));
}

TEST_CASE("inconsistent separator degenerates") {
  auto s = make_heyting(c3());
  auto q = build_quotient(s, 0b111);
  CHECK(q.k == 1);
  CHECK(q.degenerate());
  CHECK(is_boolean(q));
}

TEST_CASE("classical separator gives a Boolean quotient") {
  auto s = make_heyting(diamond());  // cc = top: every separator classical
  auto q = build_quotient(s, mask_bit(s.top()));
  CHECK(q.k == 4);
  CHECK(is_boolean(q));
}

TEST_CASE("invalid separator rejected") {
  auto s = make_heyting(c3());
  CHECK_THROWS_AS(build_quotient(s, 0b011), StructureError);
  try {
    build_quotient(s, 0b011);
  } catch (const StructureError& e) {
    CHECK(e.kind == StructureError::Kind::InvalidSeparator);
  }
}

TEST_CASE("meet class equals conjunction class on filter separators") {
  for (const auto& s : {make_heyting(c3()), make_heyting(diamond())}) {
    for (Mask sep : all_separators(s)) {
      auto q = build_quotient(s, sep);
      for (int a = 0; a < s.n(); ++a)
        for (int b = 0; b < s.n(); ++b) {
          CHECK(q.class_of[encode_times(s, a, b)] == q.class_of[s.lat.meet2(a, b)]);
          CHECK(q.class_of[encode_plus(s, a, b)] == q.class_of[s.lat.join2(a, b)]);
        }
    }
  }
}

TEST_CASE("product separator quotient factors componentwise") {
  auto s1 = make_heyting(b2());
  auto s2 = make_heyting(c3());
  auto prod = make_product({s1, s2});
  Mask sep1 = mask_bit(s1.top());
  Mask sep2 = 0b110;  // up(m) in the second factor
  // members of the product separator: both components in their separators
  Mask sep = 0;
  for (int x = 0; x < prod.n(); ++x) {
    auto parts = product_split({s1.n(), s2.n()}, x);
    if (mask_has(sep1, parts[0]) && mask_has(sep2, parts[1])) sep |= mask_bit(x);
  }
  auto q = build_quotient(prod, sep);
  auto q1 = build_quotient(s1, sep1);
  auto q2 = build_quotient(s2, sep2);
  REQUIRE(q.k == q1.k * q2.k);
  // entailment in the product is componentwise entailment
  for (int x = 0; x < prod.n(); ++x)
    for (int y = 0; y < prod.n(); ++y) {
      auto px = product_split({s1.n(), s2.n()}, x);
      auto py = product_split({s1.n(), s2.n()}, y);
      bool comp = entails(s1, sep1, px[0], py[0]) && entails(s2, sep2, px[1], py[1]);
      CHECK(entails(prod, sep, x, y) == comp);
    }
  // the pairing of component classes is a bijection preserving order
  std::map<std::pair<int, int>, int> seen;
  for (int x = 0; x < prod.n(); ++x) {
    auto px = product_split({s1.n(), s2.n()}, x);
    auto key = std::make_pair(q1.class_of[px[0]], q2.class_of[px[1]]);
    auto [it, fresh] = seen.emplace(key, q.class_of[x]);
    if (!fresh) CHECK(it->second == q.class_of[x]);
  }
  CHECK(static_cast<int>(seen.size()) == q.k);
}

TEST_CASE("all corpus quotients satisfy the Heyting laws") {
  // build_quotient runs its internal law checks; surviving them is the test
  for (const auto& s : {make_heyting(b2()), make_heyting(c3()), make_heyting(diamond()),
                        make_dummy(c3(), DummyMode::Right), make_dummy(diamond(), DummyMode::Top),
                        make_kleene_subsets(Pas::make({"e", "f"}, {{0, 1}, {0, 1}}))}) {
    for (Mask sep : all_separators(s)) CHECK(build_quotient(s, sep).k >= 1);
  }
}
