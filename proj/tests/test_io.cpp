#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ialg/constructors.hpp"
#include "ialg/corpus.hpp"
#include "ialg/eval.hpp"
#include "ialg/ialg_io.hpp"
#include "ialg/separator.hpp"

using namespace ialg;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IoError capture(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const IoError& e) {
    return e;
  }
  FAIL("expected IoError");
  return IoError(IoError::Kind::Parse, 0, "unreachable");
}

}  // namespace

TEST_CASE("a heyting chain file parses into the expected structure") {
  auto f = parse_structure(slurp(std::filesystem::path(IALG_DATA_DIR) / "c3.ialg"));
  CHECK(f.name == "c3");
  CHECK(f.imp_mode == ImpMode::Heyting);
  CHECK(f.s.kind == Kind::Full);
  REQUIRE(f.s.n() == 3);
  CHECK(f.s.lat.name(0) == "0");
  CHECK(f.s.lat.name(1) == "m");
  CHECK(f.s.lat.name(2) == "1");
  CHECK(f.s.leq(0, 1));
  CHECK(f.s.leq(1, 2));
  CHECK_FALSE(f.s.leq(2, 0));

  auto ref = make_heyting(f.s.lat);
  CHECK(f.s.imp == ref.imp);

  REQUIRE(f.separators.size() == 2);
  CHECK(f.separators[0].name == "TOP");
  CHECK(f.separators[0].members == mask_bit(2));
  CHECK(f.separators[1].name == "UPM");
  CHECK(f.separators[1].members == (mask_bit(1) | mask_bit(2)));
  CHECK(f.find_separator("UPM") == &f.separators[1]);
  CHECK(f.find_separator("nope") == nullptr);
}

TEST_CASE("table mode reads explicit rows and respects the declared kind") {
  auto f = parse_structure(slurp(std::filesystem::path(IALG_DATA_DIR) / "quasi2.ialg"));
  CHECK(f.imp_mode == ImpMode::Table);
  CHECK(f.s.kind == Kind::Quasi);
  CHECK(f.s.arrow(0, 0) == 1);
  CHECK(f.s.arrow(0, 1) == 1);
  CHECK(f.s.arrow(1, 0) == 0);
  CHECK(f.s.arrow(1, 1) == 0);
  CHECK_FALSE(has_full_top_law(f.s));
}

TEST_CASE("comments and blank lines are ignored") {
  auto f = parse_structure(
      "# a comment\n"
      "structure t  # trailing comment\n"
      "\n"
      "kind full\n"
      "elements 0 1\n"
      "order 0<=1\n"
      "imp heyting\n");
  CHECK(f.name == "t");
  CHECK(f.separators.empty());
  CHECK_FALSE(f.interp.has_value());
}

TEST_CASE("order lines may be split and repeated") {
  auto f = parse_structure(
      "structure d\n"
      "kind full\n"
      "elements 0 a b 1\n"
      "order 0<=a\n"
      "order 0<=b a<=1\n"
      "order b<=1\n"
      "imp heyting\n");
  CHECK(f.s.lat.meet2(1, 2) == 0);
  CHECK(f.s.lat.join2(1, 2) == 3);
}

TEST_CASE("the shipped corpus files are canonical") {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(IALG_DATA_DIR)) {
    auto path = entry.path();
    if (path.extension() != ".ialg") continue;
    if (path.filename().string().rfind("bad-", 0) == 0) continue;
    CAPTURE(path.string());
    std::string bytes = slurp(path);
    StructureFile f = load_structure(path.string());
    CHECK(emit_structure(f) == bytes);
    ++checked;
  }
  CHECK(checked == 8);
}

TEST_CASE("the bad files fail with the advertised error kinds") {
  auto bad = [&](const char* name) {
    try {
      load_structure((std::filesystem::path(IALG_DATA_DIR) / name).string());
    } catch (const IoError& e) {
      return e;
    }
    FAIL("expected IoError");
    return IoError(IoError::Kind::Parse, 0, "unreachable");
  };
  auto parse_err = bad("bad-parse.ialg");
  CHECK(parse_err.kind == IoError::Kind::Parse);
  CHECK(parse_err.line == 4);
  CHECK(std::string(parse_err.what()).find("orderr") != std::string::npos);

  auto valid_err = bad("bad-variance.ialg");
  CHECK(valid_err.kind == IoError::Kind::Validation);
  CHECK(valid_err.line == 5);
  CHECK(std::string(valid_err.what()).find("axioms") != std::string::npos);
}

TEST_CASE("missing files raise a file error") {
  try {
    load_structure("/nonexistent/nope.ialg");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.kind == IoError::Kind::File);
    CHECK(e.line == 0);
  }
}

TEST_CASE("parse errors carry the offending line") {
  struct Case {
    const char* text;
    int line;
    const char* needle;
  };
  const Case cases[] = {
      {"structure a\nstructure b\n", 2, "duplicate structure"},
      {"structure a\nkind full\nkind quasi\n", 3, "duplicate kind"},
      {"structure a\nkind maybe\n", 2, "kind must be"},
      {"structure a\nkind full\nelements 0 1\norder 0<1\nimp heyting\n", 4, "a<=b"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp magic\n", 5, "imp mode"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\nrow 0: 1 1\n", 6,
       "imp table"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp table\nrow 0: 1 1\n", 5,
       "one row per element"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp table\nrow 1: 1 1\nrow 0: 1 1\n",
       6, "declaration order"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp table\nrow 0: 1\nrow 1: 1 1\n", 6,
       "2 values"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp table\nrow 0: 1 x\nrow 1: 1 1\n",
       6, "unknown element 'x'"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\nseparator S 1\n"
       "separator S 1\n",
       7, "duplicate separator"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\npred p: x=1\n", 6,
       "need a domain"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p x=1\n",
       7, "expected 'NAME:'"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1 x,y=0\n",
       7, "mixed arity"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1 x=0\n",
       7, "repeats a tuple"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1\n",
       7, "missing a tuple"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1 z=0\n",
       7, "unknown domain point 'z'"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1 y=q\n",
       7, "unknown element 'q'"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "fun f: x=y y=0\n",
       7, "unknown domain point '0'"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\ndomain x y\n"
       "pred p: x=1 y=0\npred p: x=0 y=0\n",
       8, "duplicate table"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    auto e = capture(c.text);
    CHECK(e.kind == IoError::Kind::Parse);
    CHECK(e.line == c.line);
    CHECK(std::string(e.what()).find(c.needle) != std::string::npos);
  }
}

TEST_CASE("missing directives are reported without a line") {
  struct Case {
    const char* text;
    const char* needle;
  };
  const Case cases[] = {
      {"kind full\nelements 0 1\nimp heyting\n", "missing structure"},
      {"structure a\nelements 0 1\nimp heyting\n", "missing kind"},
      {"structure a\nkind full\nimp heyting\n", "missing elements"},
      {"structure a\nkind full\nelements 0 1\norder 0<=1\n", "missing imp"},
  };
  for (const auto& c : cases) {
    auto e = capture(c.text);
    CHECK(e.kind == IoError::Kind::Parse);
    CHECK(e.line == 0);
    CHECK(std::string(e.what()).find(c.needle) != std::string::npos);
  }
}

TEST_CASE("validation errors carry the responsible directive line") {
  SUBCASE("order names an undeclared element") {
    auto e = capture("structure a\nkind full\nelements 0 1\norder 0<=z\nimp heyting\n");
    CHECK(e.kind == IoError::Kind::Validation);
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("'z'") != std::string::npos);
  }
  SUBCASE("the order is not a lattice") {
    auto e = capture(
        "structure a\nkind full\nelements 0 a b 1\norder 0<=a 0<=b a<=1 b<=1 1<=0\n"
        "imp heyting\n");
    CHECK(e.kind == IoError::Kind::Validation);
    CHECK(e.line == 4);
  }
  SUBCASE("a quasi table declared full fails the empty-meet law") {
    auto e = capture(
        "structure a\nkind full\nelements 0 1\norder 0<=1\nimp table\n"
        "row 0: 1 1\nrow 1: 0 0\n");
    CHECK(e.kind == IoError::Kind::Validation);
    CHECK(e.line == 5);
    CHECK(std::string(e.what()).find("axioms") != std::string::npos);
  }
  SUBCASE("a non-separator subset is rejected") {
    auto e = capture(
        "structure a\nkind full\nelements 0 m 1\norder 0<=m m<=1\nimp dummy-top\n"
        "separator TOP 1\n");
    CHECK(e.kind == IoError::Kind::Validation);
    CHECK(e.line == 6);
    CHECK(std::string(e.what()).find("'TOP'") != std::string::npos);
  }
  SUBCASE("an oversized domain is rejected") {
    auto e = capture(
        "structure a\nkind full\nelements 0 1\norder 0<=1\nimp heyting\n"
        "domain d1 d2 d3 d4 d5 d6 d7 d8 d9\npred p: d1=1 d2=1 d3=1 d4=1 d5=1 d6=1 d7=1 "
        "d8=1 d9=1\n");
    CHECK(e.kind == IoError::Kind::Validation);
    CHECK(e.line == 6);
  }
}

TEST_CASE("the first-order sidecar is loaded faithfully") {
  auto f = load_structure((std::filesystem::path(IALG_DATA_DIR) / "fol-b2.ialg").string());
  REQUIRE(f.interp.has_value());
  const auto& in = *f.interp;
  REQUIRE(in.domain == std::vector<std::string>{"a", "b"});
  REQUIRE(in.preds.count("p") == 1);
  REQUIRE(in.preds.count("q") == 1);
  REQUIRE(in.preds.count("r") == 1);
  CHECK(in.preds.at("p").arity == 1);
  CHECK(in.preds.at("p").table == std::vector<int>{0, 1});
  CHECK(in.preds.at("e").arity == 2);
  CHECK(in.preds.at("e").table == std::vector<int>{1, 0, 0, 1});
  REQUIRE(in.funs.count("c") == 1);
  CHECK(in.funs.at("c").arity == 0);
  CHECK(in.funs.at("c").table == std::vector<int>{0});
  REQUIRE(in.funs.count("f") == 1);
  CHECK(in.funs.at("f").table == std::vector<int>{1, 0});

  auto phi = parse_formula("forall x p(f(x)) \\/ p(x)");
  CHECK(interpret_formula(f.s, in, phi) == f.s.top());
  auto psi = parse_formula("p(c)");
  CHECK(interpret_formula(f.s, in, psi) == f.s.bottom());
}

TEST_CASE("every corpus structure survives an emit and reload round trip") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    std::vector<Separator> seps;
    for (std::size_t i = 0; i < entry.separators.size(); ++i)
      seps.push_back({"S" + std::to_string(i), entry.separators[i]});
    auto f = wrap_structure(entry.name, entry.s, seps);
    std::string text = emit_structure(f);
    auto g = parse_structure(text);
    CHECK(g.name == entry.name);
    CHECK(g.s.kind == entry.s.kind);
    CHECK(g.s.imp == entry.s.imp);
    REQUIRE(g.s.n() == entry.s.n());
    for (int a = 0; a < g.s.n(); ++a) {
      CHECK(g.s.lat.name(a) == entry.s.lat.name(a));
      for (int b = 0; b < g.s.n(); ++b) CHECK(g.s.leq(a, b) == entry.s.leq(a, b));
    }
    REQUIRE(g.separators.size() == entry.separators.size());
    for (std::size_t i = 0; i < seps.size(); ++i)
      CHECK(g.separators[i].members == entry.separators[i]);
    CHECK(emit_structure(g) == text);
  }
}

TEST_CASE("emitted heyting mode is preserved rather than expanded to a table") {
  auto f = load_structure((std::filesystem::path(IALG_DATA_DIR) / "d4.ialg").string());
  std::string text = emit_structure(f);
  CHECK(text.find("imp heyting") != std::string::npos);
  CHECK(text.find("row") == std::string::npos);
}
