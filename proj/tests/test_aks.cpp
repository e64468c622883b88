#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ialg/aks.hpp"
#include "ialg/constructors.hpp"
#include "ialg/separator.hpp"

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

AKS one_point(Mask pole_row) {
  AKS k;
  k.terms = {"t"};
  k.stacks = {"pi"};
  k.app = {{0}};
  k.push = {{0}};
  k.kont = {0};
  k.K = k.S = k.cc = 0;
  k.pl = 0b1;
  k.pole = {pole_row};
  return k;
}

// checks the three reduction conditions for psi(beta) = meet(beta) from the
// induced algebra on stack sets down to the original structure
void check_reduction(const ImplicativeStructure& a, Mask sep_a, const InducedAlgebra& b) {
  const int n = b.s.n();
  auto psi = [&](int beta) { return a.lat.meet(b.stack_sets[beta]); };
  // surjectivity: singletons map back onto the carrier
  for (int x = 0; x < a.n(); ++x) {
    int beta = b.s.lat.index_of(a.lat.name(x));
    REQUIRE(beta >= 0);
    CHECK(psi(beta) == x);
  }
  // (1) psi turns meets of arbitrary families into meets
  REQUIRE(n <= 16);
  for (Mask family = 0; family < (Mask(1) << n); ++family) {
    Mask unioned = 0;
    Mask imgs = 0;
    for (int beta : MaskBits(family)) {
      unioned |= b.stack_sets[beta];
      imgs |= mask_bit(psi(beta));
    }
    CHECK(psi(static_cast<int>(unioned)) == a.lat.meet(imgs));
  }
  // (2) psi commutes with implication
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) CHECK(psi(b.s.arrow(x, y)) == a.arrow(psi(x), psi(y)));
  // (3) psi reflects and preserves separator membership
  for (int x = 0; x < n; ++x)
    CHECK(mask_has(b.separator, x) == mask_has(sep_a, psi(x)));
}

}  // namespace

TEST_CASE("empty pole on a single point") {
  AKS k = one_point(0);
  CHECK_NOTHROW(validate_aks(k));
  CHECK(orthogonal(k, 0) == 0b1);  // empty stack set: every term orthogonal
  CHECK(orthogonal(k, 0b1) == 0);
  auto alg = make_from_aks(k);
  REQUIRE(alg.s.n() == 2);
  CHECK(alg.s.lat.name(0) == "none");
  CHECK(alg.s.lat.name(1) == "pi");
  CHECK(alg.s.top() == 0);
  CHECK(alg.s.bottom() == 1);
  // induced table: none -> pi = pi, everything else tops out
  CHECK(alg.s.arrow(0, 0) == 0);
  CHECK(alg.s.arrow(0, 1) == 1);
  CHECK(alg.s.arrow(1, 0) == 0);
  CHECK(alg.s.arrow(1, 1) == 0);
  CHECK(validate_structure(alg.s).ok);
  CHECK(alg.separator == 0b01);  // only the top realized
  auto rep = classify_separator(alg.s, alg.separator);
  CHECK(rep.is_separator);
  CHECK(rep.consistent);
  CHECK(rep.classical);
}

TEST_CASE("full pole realizes everything") {
  AKS k = one_point(0b1);
  CHECK_NOTHROW(validate_aks(k));
  CHECK(orthogonal(k, 0b1) == 0b1);
  auto alg = make_from_aks(k);
  CHECK(alg.separator == 0b11);
  CHECK(!classify_separator(alg.s, alg.separator).consistent);
}

TEST_CASE("continuation applied to a pole pair realizes every truth value") {
  auto s = make_heyting(diamond());
  AKS k = aks_from_classical(s, mask_bit(s.top()));
  for (int t0 = 0; t0 < k.nt(); ++t0)
    for (int pi0 : MaskBits(k.pole[t0]))
      for (Mask a = 0; a < (Mask(1) << k.ns()); ++a) {
        int w = k.app[k.kont[pi0]][t0];
        CHECK(mask_has(orthogonal(k, a), w));
      }
}

TEST_CASE("classical algebra to AKS on the two-element algebra") {
  auto s = make_heyting(b2());
  AKS k = aks_from_classical(s, 0b10);
  CHECK(k.nt() == 2);
  CHECK(k.ns() == 2);
  int pairs = 0;
  for (Mask row : k.pole) pairs += mask_count(row);
  CHECK(pairs == 3);
  CHECK(k.K == 1);
  CHECK(k.S == 1);
  CHECK(k.cc == 1);
  CHECK(k.kont[0] == 1);  // 0 -> bottom = top
  CHECK(k.kont[1] == 0);
  // orthogonal of a stack set is the down-set of its meet
  for (Mask beta = 0; beta < 4; ++beta) {
    Mask expect = 0;
    int m = s.lat.meet(beta);
    for (int a = 0; a < s.n(); ++a)
      if (s.leq(a, m)) expect |= mask_bit(a);
    CHECK(orthogonal(k, beta) == expect);
  }
  auto alg = make_from_aks(k);
  REQUIRE(alg.s.n() == 4);
  CHECK(validate_structure(alg.s).ok);
  CHECK(alg.separator == 0b0101);  // "none" and "1": stack sets with meet = top
  auto rep = classify_separator(alg.s, alg.separator);
  CHECK(rep.is_separator);
  CHECK(rep.classical);
  CHECK(rep.consistent);
  check_reduction(s, 0b10, alg);
}

TEST_CASE("classical algebra to AKS on the Boolean diamond") {
  auto s = make_heyting(diamond());
  AKS k = aks_from_classical(s, mask_bit(s.top()));
  CHECK(k.nt() == 4);
  int pairs = 0;
  for (Mask row : k.pole) pairs += mask_count(row);
  CHECK(pairs == 9);
  auto alg = make_from_aks(k);
  REQUIRE(alg.s.n() == 16);
  CHECK(validate_structure(alg.s).ok);
  auto rep = classify_separator(alg.s, alg.separator);
  CHECK(rep.is_separator);
  CHECK(rep.classical);
  CHECK(rep.consistent);
  CHECK(alg.separator == (mask_bit(0) | mask_bit(8)));  // "none" and "top"
  check_reduction(s, mask_bit(s.top()), alg);
}

TEST_CASE("three-chain with its classical core reduces as well") {
  auto s = make_heyting(c3());
  Mask sep = 0b110;  // up(m), classical since cc = m
  AKS k = aks_from_classical(s, sep);
  auto alg = make_from_aks(k);
  REQUIRE(alg.s.n() == 8);
  CHECK(validate_structure(alg.s).ok);
  auto rep = classify_separator(alg.s, alg.separator);
  CHECK(rep.is_separator);
  CHECK(rep.classical);
  CHECK(rep.consistent);
  check_reduction(s, sep, alg);
}

TEST_CASE("non-classical input rejected") {
  auto s = make_heyting(c3());
  try {
    aks_from_classical(s, 0b100);  // cc = m not a member
    FAIL("expected NotClassical");
  } catch (const StructureError& e) {
    CHECK(e.kind == StructureError::Kind::NotClassical);
  }
  try {
    aks_from_classical(s, 0b010);
    FAIL("expected InvalidSeparator");
  } catch (const StructureError& e) {
    CHECK(e.kind == StructureError::Kind::InvalidSeparator);
  }
}

TEST_CASE("pole axiom violations are reported with witnesses") {
  auto s = make_heyting(b2());
  AKS good = aks_from_classical(s, 0b10);

  AKS bad1 = good;
  bad1.app[0][0] = 1;  // application result no longer below the stack
  try {
    validate_aks(bad1);
    FAIL("expected axiom 1 failure");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("axiom 1") != std::string::npos);
    CHECK(std::string(e.what()).find("t=0") != std::string::npos);
  }

  AKS bad5 = good;
  bad5.kont[1] = 1;  // continuation of top must be bottom
  try {
    validate_aks(bad5);
    FAIL("expected axiom 5 failure");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("axiom 5") != std::string::npos);
  }

  auto c = make_heyting(c3());
  AKS bad4 = aks_from_classical(c, 0b110);
  bad4.cc = 2;  // pretend cc is top although only m is guaranteed
  try {
    validate_aks(bad4);
    FAIL("expected axiom 4 failure");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("axiom 4") != std::string::npos);
  }

  AKS badpl = good;
  badpl.pl = 0b01;  // drops K, S, cc
  try {
    validate_aks(badpl);
    FAIL("expected proof-like failure");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("proof-like") != std::string::npos);
  }

  AKS badclosed = good;
  badclosed.app[1][1] = 0;
  badclosed.pole.assign(2, 0);  // silence the pole axioms
  try {
    validate_aks(badclosed);
    FAIL("expected closure failure");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("closed under application") != std::string::npos);
  }
}

TEST_CASE("stack carrier guard") {
  AKS k;
  k.terms = {"t"};
  k.stacks = {"p0", "p1", "p2", "p3", "p4", "p5"};
  k.app = {{0}};
  k.push = {std::vector<int>(6, 0)};
  k.kont = std::vector<int>(6, 0);
  k.K = k.S = k.cc = 0;
  k.pl = 0b1;
  k.pole = {0};
  CHECK_NOTHROW(validate_aks(k));
  try {
    make_from_aks(k);
    FAIL("expected carrier guard");
  } catch (const StructureError& e) {
    CHECK(e.kind == StructureError::Kind::CarrierTooLarge);
  }
}

TEST_CASE("quasi structures cannot seed the AKS construction") {
  auto q = make_kleene_subsets(Pas::make({"e"}, {{-1}}));
  REQUIRE(q.kind == Kind::Quasi);
  try {
    aks_from_classical(q, full_mask(q.n()));
    FAIL("expected rejection");
  } catch (const StructureError& e) {
    CHECK(e.kind == StructureError::Kind::Mismatch);
  }
}
