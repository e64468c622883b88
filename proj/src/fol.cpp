#include "ialg/fol.hpp"

namespace ialg {

int encode_times(const ImplicativeStructure& s, int a, int b) {
  int acc = s.top();
  for (int c = 0; c < s.n(); ++c)
    acc = s.lat.meet2(acc, s.arrow(s.arrow(a, s.arrow(b, c)), c));
  return acc;
}

int encode_plus(const ImplicativeStructure& s, int a, int b) {
  int acc = s.top();
  for (int c = 0; c < s.n(); ++c)
    acc = s.lat.meet2(acc, s.arrow(s.arrow(a, c), s.arrow(s.arrow(b, c), c)));
  return acc;
}

int encode_not(const ImplicativeStructure& s, int a) { return s.arrow(a, s.bottom()); }

int encode_iff(const ImplicativeStructure& s, int a, int b) {
  return encode_times(s, s.arrow(a, b), s.arrow(b, a));
}

int encode_forall(const ImplicativeStructure& s, const std::vector<int>& family) {
  int acc = s.top();
  for (int a : family) acc = s.lat.meet2(acc, a);
  return acc;
}

int encode_exists(const ImplicativeStructure& s, const std::vector<int>& family) {
  int acc = s.top();
  for (int c = 0; c < s.n(); ++c) {
    int inner = s.top();
    for (int a : family) inner = s.lat.meet2(inner, s.arrow(a, c));
    acc = s.lat.meet2(acc, s.arrow(inner, c));
  }
  return acc;
}

int encode_id(const ImplicativeStructure& s, bool equal) {
  if (equal) return combinator(s, Combinator::I);
  return s.arrow(s.top(), s.bottom());
}

int Interpretation::domain_index(const std::string& name) const {
  for (size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == name) return static_cast<int>(i);
  return -1;
}

void Interpretation::check(int structure_size) const {
  if (domain.empty() || domain.size() > 8)
    throw FolError(FolError::Kind::BadDomain, "domain must have between 1 and 8 points");
  size_t need;
  auto power = [&](int arity) {
    size_t p = 1;
    for (int i = 0; i < arity; ++i) p *= domain.size();
    return p;
  };
  for (const auto& [name, f] : funs) {
    if (f.arity < 0) throw FolError(FolError::Kind::ArityMismatch, "negative arity for " + name);
    need = power(f.arity);
    if (f.table.size() != need)
      throw FolError(FolError::Kind::ArityMismatch, "function table size mismatch for " + name);
    for (int v : f.table)
      if (v < 0 || v >= static_cast<int>(domain.size()))
        throw FolError(FolError::Kind::BadDomain, "function value out of domain for " + name);
  }
  for (const auto& [name, p] : preds) {
    if (p.arity < 1)
      throw FolError(FolError::Kind::ArityMismatch, "predicate " + name + " needs arity >= 1");
    need = power(p.arity);
    if (p.table.size() != need)
      throw FolError(FolError::Kind::ArityMismatch, "predicate table size mismatch for " + name);
    for (int v : p.table)
      if (v < 0 || v >= structure_size)
        throw FolError(FolError::Kind::BadDomain, "predicate value out of range for " + name);
  }
}

namespace {

size_t flat_index(const Interpretation& in, const std::vector<int>& args) {
  size_t idx = 0;
  for (int a : args) idx = idx * in.domain.size() + static_cast<size_t>(a);
  return idx;
}

}  // namespace

int interpret_term(const Interpretation& in, const FolTerm& t, const VarEnv& env) {
  if (!t.is_app) {
    auto it = env.find(t.name);
    if (it != env.end()) return it->second;
    auto fit = in.funs.find(t.name);
    if (fit != in.funs.end() && fit->second.arity == 0) return fit->second.table[0];
    int d = in.domain_index(t.name);  // domain points name themselves
    if (d >= 0) return d;
    throw FolError(FolError::Kind::UnboundVariable,
                   "'" + t.name + "' is neither a bound variable nor a constant");
  }
  auto fit = in.funs.find(t.name);
  if (fit == in.funs.end())
    throw FolError(FolError::Kind::UnknownSymbol, "unknown function '" + t.name + "'");
  if (fit->second.arity != static_cast<int>(t.args.size()))
    throw FolError(FolError::Kind::ArityMismatch,
                   "function '" + t.name + "' expects " + std::to_string(fit->second.arity) +
                       " arguments");
  std::vector<int> vals;
  for (const auto& a : t.args) vals.push_back(interpret_term(in, a, env));
  return fit->second.table[flat_index(in, vals)];
}

int interpret_formula(const ImplicativeStructure& s, const Interpretation& in, const FormulaPtr& f,
                      const VarEnv& env) {
  switch (f->node) {
    case Formula::Node::Bot:
      return s.bottom();
    case Formula::Node::Top:
      return s.top();
    case Formula::Node::Pred: {
      auto pit = in.preds.find(f->name);
      if (pit == in.preds.end())
        throw FolError(FolError::Kind::UnknownSymbol, "unknown predicate '" + f->name + "'");
      if (pit->second.arity != static_cast<int>(f->terms.size()))
        throw FolError(FolError::Kind::ArityMismatch,
                       "predicate '" + f->name + "' expects " +
                           std::to_string(pit->second.arity) + " arguments");
      std::vector<int> vals;
      for (const auto& t : f->terms) vals.push_back(interpret_term(in, t, env));
      return pit->second.table[flat_index(in, vals)];
    }
    case Formula::Node::Eq: {
      int l = interpret_term(in, f->terms[0], env);
      int r = interpret_term(in, f->terms[1], env);
      return encode_id(s, l == r);
    }
    case Formula::Node::Not:
      return encode_not(s, interpret_formula(s, in, f->f1, env));
    case Formula::Node::Imp:
      return s.arrow(interpret_formula(s, in, f->f1, env), interpret_formula(s, in, f->f2, env));
    case Formula::Node::And:
      return encode_times(s, interpret_formula(s, in, f->f1, env),
                          interpret_formula(s, in, f->f2, env));
    case Formula::Node::Or:
      return encode_plus(s, interpret_formula(s, in, f->f1, env),
                         interpret_formula(s, in, f->f2, env));
    case Formula::Node::Iff:
      return encode_iff(s, interpret_formula(s, in, f->f1, env),
                        interpret_formula(s, in, f->f2, env));
    case Formula::Node::Forall:
    case Formula::Node::Exists: {
      std::vector<int> family;
      VarEnv child = env;
      for (size_t d = 0; d < in.domain.size(); ++d) {
        child[f->name] = static_cast<int>(d);
        family.push_back(interpret_formula(s, in, f->f1, child));
      }
      return f->node == Formula::Node::Forall ? encode_forall(s, family)
                                              : encode_exists(s, family);
    }
  }
  throw FolError(FolError::Kind::UnknownSymbol, "unhandled formula node");
}

const std::vector<TautologyEntry>& tautology_corpus() {
  static const std::vector<TautologyEntry> bank = {
      {"forall x (p(x) -> p(x))", "^x.x", false},
      {"forall x forall y (p(x) -> (q(y) -> p(x)))", "^x.^y.x", false},
      {"forall x ((p(x) -> q(x) -> r(x)) -> (p(x) -> q(x)) -> p(x) -> r(x))",
       "^x.^y.^z.x z (y z)", false},
      {"forall x ((p(x) -> q(x)) -> (q(x) -> r(x)) -> p(x) -> r(x))", "^f.^g.^x.g (f x)", false},
      {"forall x (p(x) -> q(x) -> p(x) /\\ q(x))", "^x.^y.^z.z x y", false},
      {"forall x (p(x) /\\ q(x) -> p(x))", "^z.z (^x.^y.x)", false},
      {"forall x (p(x) /\\ q(x) -> q(x))", "^z.z (^x.^y.y)", false},
      {"forall x (p(x) -> p(x) \\/ q(x))", "^x.^z.^w.z x", false},
      {"forall x (q(x) -> p(x) \\/ q(x))", "^y.^z.^w.w y", false},
      {"forall x (p(x) \\/ q(x) -> (p(x) -> r(x)) -> (q(x) -> r(x)) -> r(x))", "^t.^f.^g.t f g",
       false},
      {"forall x (bot -> p(x))", "^x.x", false},
      {"(forall x (p(x) /\\ q(x))) -> forall x p(x)", "^z.z (^x.^y.x)", false},
      {"forall x (p(x) -> exists y p(y))", "^x.^z.z x", false},
      {"(exists x p(x)) -> (forall x (p(x) -> q(x))) -> exists x q(x)",
       "^e.^f.^z.e (^x.z (f x))", false},
      {"forall x (x = x)", "^x.x", false},
      {"forall x forall y (x = y -> p(x) -> p(y))", "^e.^u.e u", false},
      {"forall x (p(x) /\\ q(x) -> q(x) /\\ p(x))",
       "^z.^w.w (z (^x.^y.y)) (z (^x.^y.x))", false},
      {"forall x (p(x) \\/ q(x) -> q(x) \\/ p(x))", "^t.^z.^w.t w z", false},
      {"forall x (p(x) <-> p(x))", "^z.z (^x.x) (^x.x)", false},
      {"forall x (p(x) -> ~~p(x))", "^x.^k.k x", false},
      {"forall x (((p(x) -> q(x)) -> p(x)) -> p(x))", "cc", true},
      {"forall x (~~p(x) -> p(x))", "^z.cc (^k.z k)", true},
      {"forall x (p(x) \\/ ~p(x))", "^z.^w.cc (^k.w (^x.k (z x)))", true},
  };
  return bank;
}

SoundnessReport soundness_audit(const ImplicativeStructure& s, const Interpretation& in,
                                Mask core_j, Mask core_k) {
  in.check(s.n());
  SoundnessReport rep;
  for (const auto& entry : tautology_corpus()) {
    SoundnessItem item;
    item.formula = entry.formula;
    item.classical = entry.classical;
    item.value = interpret_formula(s, in, parse_formula(entry.formula));
    auto w = eval_term(s, parse_term(entry.witness));
    Mask core = entry.classical ? core_k : core_j;
    if (w) {
      item.witness = *w;
      item.realizes = s.leq(*w, item.value);
      item.witness_in_core = mask_has(core, *w);
    }
    item.value_in_core = mask_has(core, item.value);
    item.ok = w.has_value() && item.realizes && item.witness_in_core && item.value_in_core;
    rep.ok = rep.ok && item.ok;
    rep.items.push_back(item);
  }
  return rep;
}

}  // namespace ialg
