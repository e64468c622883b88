#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ialg/constructors.hpp"
#include "ialg/aks.hpp"
#include "ialg/eval.hpp"
#include "ialg/fol.hpp"
#include "ialg/ialg_io.hpp"
#include "ialg/quotient.hpp"
#include "ialg/separator.hpp"
#include "ialg/tripos.hpp"

using namespace ialg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string mask_names(const FiniteLattice& lat, Mask m) {
  std::string out;
  for (int a : MaskBits(m)) {
    if (!out.empty()) out += ' ';
    out += lat.name(a);
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Mask parse_members(const ImplicativeStructure& s, const std::string& list) {
  Mask m = 0;
  for (const auto& name : split_commas(list)) {
    int i = s.lat.index_of(name);
    if (i < 0) throw UsageError("unknown element '" + name + "'");
    m |= mask_bit(i);
  }
  return m;
}

Mask named_separator(const StructureFile& f, const std::string& name) {
  const Separator* sep = f.find_separator(name);
  if (!sep) throw UsageError("no separator named '" + name + "' in '" + f.name + "'");
  return sep->members;
}

void print_yesno(const char* label, bool v) {
  std::cout << label << ' ' << (v ? "yes" : "no") << "\n";
}

void print_classification(const ImplicativeStructure& s, Mask m) {
  auto rep = classify_separator(s, m);
  print_yesno("separator", rep.is_separator);
  if (!rep.is_separator && rep.failure)
    std::cout << "reason " << rep.failure->describe(s) << "\n";
  print_yesno("consistent", rep.consistent);
  print_yesno("classical", rep.classical);
  print_yesno("filter", rep.is_filter);
  print_yesno("principal", rep.principal);
  print_yesno("ultra", rep.ultra);
}

int cmd_validate(const std::string& path) {
  StructureFile f = load_structure(path);
  std::cout << "structure " << f.name << "\n";
  std::cout << "kind " << (f.s.kind == Kind::Full ? "full" : "quasi") << "\n";
  std::cout << "elements";
  for (int a = 0; a < f.s.n(); ++a) std::cout << ' ' << f.s.lat.name(a);
  std::cout << "\n";
  std::cout << "axioms PASS\n";
  for (const auto& sep : f.separators) {
    auto rep = classify_separator(f.s, sep.members);
    std::cout << "separator " << sep.name << ":";
    if (rep.consistent) std::cout << " consistent";
    if (rep.classical) std::cout << " classical";
    if (rep.is_filter) std::cout << " filter";
    if (rep.principal) std::cout << " principal";
    if (rep.ultra) std::cout << " ultra";
    std::cout << "\n";
  }
  if (f.interp) {
    std::cout << "interpretation domain";
    for (const auto& d : f.interp->domain) std::cout << ' ' << d;
    std::cout << " preds " << f.interp->preds.size() << " funs " << f.interp->funs.size()
              << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& path, const std::string& term_text,
             const std::vector<std::string>& env_items) {
  StructureFile f = load_structure(path);
  Env env;
  for (const auto& item : env_items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--env entries look like var=element");
    int v = f.s.lat.index_of(item.substr(eq + 1));
    if (v < 0) throw UsageError("unknown element '" + item.substr(eq + 1) + "'");
    env[item.substr(0, eq)] = v;
  }
  auto t = parse_term(term_text);
  auto v = eval_term(f.s, t, env);
  if (!v) {
    std::cout << "undefined\n";
    return 1;
  }
  std::cout << f.s.lat.name(*v) << "\n";
  return 0;
}

int cmd_combinator(const std::string& path, const std::string& name) {
  StructureFile f = load_structure(path);
  auto show = [&](Combinator c) {
    std::cout << combinator_name(c) << ' ' << f.s.lat.name(combinator(f.s, c)) << "\n";
  };
  if (name.empty()) {
    for (Combinator c : {Combinator::I, Combinator::K, Combinator::S, Combinator::B,
                         Combinator::C, Combinator::W, Combinator::CC, Combinator::Fork,
                         Combinator::Por})
      show(c);
    return 0;
  }
  auto c = combinator_from_name(name);
  if (!c) throw UsageError("unknown combinator '" + name + "'");
  show(*c);
  return 0;
}

int cmd_sep_gen(const std::string& path, const std::string& members) {
  StructureFile f = load_structure(path);
  Mask input = parse_members(f.s, members);
  Mask gen = f.s.kind == Kind::Full ? generate_separator(f.s, input)
                                    : generate_separator_mp(f.s, input);
  std::cout << "input " << mask_names(f.s.lat, input) << "\n";
  std::cout << "generated " << mask_names(f.s.lat, gen) << "\n";
  print_classification(f.s, gen);
  return 0;
}

int cmd_sep_classify(const std::string& path, const std::string& sep_name,
                     const std::string& members) {
  StructureFile f = load_structure(path);
  if (sep_name.empty() == members.empty())
    throw UsageError("classify needs exactly one of --sep and --members");
  Mask m = sep_name.empty() ? parse_members(f.s, members) : named_separator(f, sep_name);
  std::cout << "members " << mask_names(f.s.lat, m) << "\n";
  print_classification(f.s, m);
  return classify_separator(f.s, m).is_separator ? 0 : 1;
}

int cmd_quotient(const std::string& path, const std::string& sep_name, bool dot) {
  StructureFile f = load_structure(path);
  QuotientHA q = build_quotient(f.s, named_separator(f, sep_name));
  std::cout << "quotient " << f.name << " sep " << sep_name << "\n";
  std::cout << "classes " << q.k << "\n";
  for (int c = 0; c < q.k; ++c)
    std::cout << "class c" << c << ": " << mask_names(f.s.lat, q.members[c]) << "\n";
  std::cout << "top c" << q.top << "\n";
  std::cout << "bottom c" << q.bot << "\n";
  print_yesno("boolean", is_boolean(q));
  print_yesno("degenerate", q.degenerate());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < q.k; ++i)
    for (int j = 0; j < q.k; ++j) {
      if (i == j || !q.leq[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < q.k && direct; ++k)
        if (k != i && k != j && q.leq[i][k] && q.leq[k][j]) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  if (!covers.empty()) {
    std::cout << "order";
    for (auto [i, j] : covers) std::cout << " c" << i << "<=c" << j;
    std::cout << "\n";
  }
  auto table = [&](const char* label, const std::vector<std::vector<int>>& t) {
    for (int i = 0; i < q.k; ++i) {
      std::cout << label << " c" << i << ":";
      for (int j = 0; j < q.k; ++j) std::cout << " c" << t[i][j];
      std::cout << "\n";
    }
  };
  table("meet", q.meet);
  table("join", q.join);
  table("imp", q.imp);
  if (dot) {
    std::cout << "digraph quotient {\n";
    for (int c = 0; c < q.k; ++c)
      std::cout << "  c" << c << " [label=\"" << mask_names(f.s.lat, q.members[c]) << "\"]\n";
    for (auto [i, j] : covers) std::cout << "  c" << i << " -> c" << j << "\n";
    std::cout << "}\n";
  }
  return 0;
}

int cmd_fol(const std::string& path, const std::string& formula, const std::string& witness,
            bool audit) {
  StructureFile f = load_structure(path);
  if (!f.interp) throw UsageError("'" + f.name + "' has no interpretation sidecar");
  if (audit == !formula.empty())
    throw UsageError("fol needs exactly one of --formula and --audit");
  if (audit) {
    auto [core_j, core_k] = cores(f.s);
    auto rep = soundness_audit(f.s, *f.interp, core_j, core_k);
    std::cout << "fol audit " << f.name << "\n";
    int n = 0, passed = 0;
    for (const auto& item : rep.items) {
      ++n;
      passed += item.ok;
      std::cout << "TAUT " << n << ' ' << (item.ok ? "PASS" : "FAIL") << ' ' << item.formula
                << "\n";
    }
    std::cout << "summary " << (rep.ok ? "PASS" : "FAIL") << ' ' << passed << " of " << n
              << "\n";
    return rep.ok ? 0 : 1;
  }
  auto phi = parse_formula(formula);
  int value = interpret_formula(f.s, *f.interp, phi);
  std::cout << "formula " << print_formula(phi) << "\n";
  std::cout << "value " << f.s.lat.name(value) << "\n";
  if (witness.empty()) return 0;
  auto t = parse_term(witness);
  auto w = eval_term(f.s, t);
  if (!w) {
    std::cout << "witness undefined\n";
    return 1;
  }
  std::cout << "witness " << f.s.lat.name(*w) << "\n";
  bool realizes = f.s.leq(*w, value);
  print_yesno("realizes", realizes);
  return realizes ? 0 : 1;
}

std::vector<IndexMap> all_maps(int from, int to) {
  std::vector<IndexMap> out;
  if (from == 0) {
    out.emplace_back();
    return out;
  }
  if (to == 0) return out;
  IndexMap f(from, 0);
  while (true) {
    out.push_back(f);
    int k = from - 1;
    while (k >= 0 && f[k] == to - 1) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

std::string map_text(const IndexMap& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i]);
  }
  return out + "]";
}

int cmd_tripos(const std::string& path, const std::string& sep_name, int max_index,
               const std::string& audit_list, std::uint64_t seed) {
  StructureFile f = load_structure(path);
  Mask sep = named_separator(f, sep_name);
  auto audits = split_commas(audit_list);
  if (audits.empty()) throw UsageError("--audit needs at least one audit name");
  for (const auto& which : audits)
    if (which != "adjunction" && which != "bc" && which != "generic" && which != "rho" &&
        which != "collapse")
      throw UsageError("unknown audit '" + which + "'");
  if (max_index < 0) throw UsageError("--max-index must be nonnegative");
  std::cout << "tripos " << f.name << " sep " << sep_name << " max-index " << max_index
            << " seed " << seed << "\n";
  AuditOptions opt;
  opt.seed = seed;
  bool all_pass = true;
  for (const auto& which : audits) {
    bool pass = true;
    std::string witness;
    if (which == "adjunction") {
      for (int n1 = 0; n1 <= max_index && pass; ++n1)
        for (int n2 = 0; n2 <= max_index && pass; ++n2)
          for (const auto& m : all_maps(n1, n2)) {
            auto rep = adjunction_audit(f.s, sep, m, n2, opt);
            if (!rep.ok) {
              pass = false;
              witness = "map " + map_text(m) + " into " + std::to_string(n2);
              break;
            }
          }
    } else if (which == "bc") {
      for (int j = 0; j <= max_index && pass; ++j)
        for (int n1 = 0; n1 <= max_index && pass; ++n1)
          for (int n2 = 0; n2 <= max_index && pass; ++n2)
            for (const auto& g1 : all_maps(n1, j)) {
              for (const auto& g2 : all_maps(n2, j)) {
                auto sq = PullbackSquare::make(g1, g2, j);
                auto rep = beck_chevalley_audit(f.s, sep, sq, opt);
                if (!rep.ok) {
                  pass = false;
                  witness = "square " + map_text(g1) + " " + map_text(g2) + " over " +
                            std::to_string(j);
                  break;
                }
              }
              if (!pass) break;
            }
    } else if (which == "generic") {
      for (int k = 0; k <= max_index && pass; ++k) {
        auto rep = generic_predicate_audit(f.s, sep, k, opt);
        if (!rep.ok) {
          pass = false;
          witness = "index " + std::to_string(k);
        }
      }
    } else if (which == "rho") {
      for (int k = 0; k <= max_index && pass; ++k) {
        auto rep = rho_audit(f.s, sep, k);
        if (!rep.agree()) {
          pass = false;
          witness = "index " + std::to_string(k);
        }
      }
    } else {
      auto rep = forcing_collapse_audit(f.s, sep, max_index);
      bool rho_ok = true;
      for (const auto& r : rep.rho)
        rho_ok &= rep.forcing ? (r.rho_injective && r.uniform_eq_power && r.meet_closed)
                              : r.agree();
      pass = rho_ok && rep.quotient_ok;
      if (pass && rep.forcing) witness = "forcing";
      if (!pass && rep.failing_index >= 0)
        witness = "index " + std::to_string(rep.failing_index);
    }
    std::cout << "CHECK " << which << ' ' << (pass ? "PASS" : "FAIL");
    if (!witness.empty()) std::cout << ' ' << witness;
    std::cout << "\n";
    all_pass &= pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_complete(const std::string& path) {
  StructureFile f = load_structure(path);
  Completion c = complete_quasi(f.s);
  std::vector<Separator> seps;
  for (const auto& sep : f.separators) seps.push_back(extend_separator(c, sep));
  std::cout << emit_structure(wrap_structure(f.name + "-completed", c.s, seps));
  return 0;
}

int cmd_aks_emit(const std::string& path, const std::string& sep_name) {
  StructureFile f = load_structure(path);
  AKS k = aks_from_classical(f.s, named_separator(f, sep_name));
  InducedAlgebra ind = make_from_aks(k);
  int pole_pairs = 0;
  for (Mask m : k.pole) pole_pairs += mask_count(m);
  std::cout << "# aks from structure " << f.name << " separator " << sep_name << "\n";
  std::cout << "# terms " << k.nt() << " stacks " << k.ns() << " prooflike "
            << mask_count(k.pl) << " pole " << pole_pairs << "\n";
  std::cout << "# combinators K " << k.terms[k.K] << " S " << k.terms[k.S] << " cc "
            << k.terms[k.cc] << "\n";
  std::cout << emit_structure(
      wrap_structure(f.name + "-aks", ind.s, {{"PL", ind.separator}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for implicative structures on finite lattices"};
  app.require_subcommand(1);

  std::string file, term, name, members, sep_name, formula, witness, audit_list;
  std::vector<std::string> env_items;
  int max_index = 2;
  std::uint64_t seed = 0;
  bool dot = false, fol_audit = false;
  int code = 0;

  auto* validate = app.add_subcommand("validate", "load a structure file and report on it");
  validate->add_option("file", file)->required();
  validate->callback([&] { code = cmd_validate(file); });

  auto* eval = app.add_subcommand("eval", "evaluate a lambda term in a structure");
  eval->add_option("file", file)->required();
  eval->add_option("--term", term, "term, e.g. \"(^x.x)(^x.x)\"")->required();
  eval->add_option("--env", env_items, "free-variable binding var=element");
  eval->callback([&] { code = cmd_eval(file, term, env_items); });

  auto* comb = app.add_subcommand("combinator", "print combinator values");
  comb->add_option("file", file)->required();
  comb->add_option("--name", name, "one of I K S B C W cc fork por");
  comb->callback([&] { code = cmd_combinator(file, name); });

  auto* sep = app.add_subcommand("sep", "separator operations");
  sep->require_subcommand(1);
  auto* gen = sep->add_subcommand("gen", "least separator containing the given elements");
  gen->add_option("file", file)->required();
  gen->add_option("--members", members, "comma-separated element names")->required();
  gen->callback([&] { code = cmd_sep_gen(file, members); });
  auto* classify = sep->add_subcommand("classify", "classify a subset of the carrier");
  classify->add_option("file", file)->required();
  classify->add_option("--sep", sep_name, "named separator from the file");
  classify->add_option("--members", members, "comma-separated element names");
  classify->callback([&] { code = cmd_sep_classify(file, sep_name, members); });

  auto* quot = app.add_subcommand("quotient", "Heyting algebra induced by a separator");
  quot->add_option("file", file)->required();
  quot->add_option("--sep", sep_name)->required();
  quot->add_flag("--dot", dot, "append a digraph of the class order");
  quot->callback([&] { code = cmd_quotient(file, sep_name, dot); });

  auto* fol = app.add_subcommand("fol", "first-order interpretation");
  fol->add_option("file", file)->required();
  fol->add_option("--formula", formula);
  fol->add_option("--witness", witness, "closed lambda term to check against the formula");
  fol->add_flag("--audit", fol_audit, "run the tautology bank");
  fol->callback([&] { code = cmd_fol(file, formula, witness, fol_audit); });

  auto* tripos = app.add_subcommand("tripos", "audit the indexed structure of families");
  tripos->add_option("file", file)->required();
  tripos->add_option("--sep", sep_name)->required();
  tripos->add_option("--max-index", max_index, "largest index-set size")->required();
  tripos->add_option("--audit", audit_list, "comma list from adjunction,bc,generic,rho,collapse")
      ->required();
  tripos->add_option("--seed", seed, "seed echoed in the header");
  tripos->callback([&] { code = cmd_tripos(file, sep_name, max_index, audit_list, seed); });

  auto* complete = app.add_subcommand("complete", "adjoin a fresh top and emit the result");
  complete->add_option("file", file)->required();
  complete->callback([&] { code = cmd_complete(file); });

  auto* aks = app.add_subcommand("aks", "abstract Krivine structure operations");
  aks->require_subcommand(1);
  auto* emit = aks->add_subcommand("emit", "build the AKS of a classical separator and emit "
                                           "the induced structure");
  emit->add_option("file", file)->required();
  emit->add_option("--sep", sep_name)->required();
  emit->callback([&] { code = cmd_aks_emit(file, sep_name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == IoError::Kind::Validation ? 1 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: term: " << e.what() << "\n";
    return 2;
  } catch (const FormulaParseError& e) {
    std::cerr << "error: formula: " << e.what() << "\n";
    return 2;
  } catch (const FolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
