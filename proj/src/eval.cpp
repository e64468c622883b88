#include "ialg/eval.hpp"

#include <algorithm>

namespace ialg {

std::optional<int> apply(const ImplicativeStructure& s, int a, int b) {
  Mask candidates = 0;
  for (int c = 0; c < s.n(); ++c)
    if (s.leq(a, s.arrow(b, c))) candidates |= mask_bit(c);
  if (candidates == 0) return std::nullopt;
  int m = s.lat.meet(candidates);
  if (!mask_has(candidates, m))
    throw StructureError(StructureError::Kind::Mismatch,
                         "application candidates have no least element; table is not a valid "
                         "(quasi) implicative structure");
  return m;
}

int abstract(const ImplicativeStructure& s, const std::vector<int>& f) {
  int acc = s.top();
  for (int a = 0; a < s.n() && a < static_cast<int>(f.size()); ++a)
    if (f[a] >= 0) acc = s.lat.meet2(acc, s.arrow(a, f[a]));
  return acc;
}

namespace {

std::optional<int> eval_rec(const ImplicativeStructure& s, const TermPtr& t, Env& env) {
  switch (t->node) {
    case Term::Node::Var: {
      auto it = env.find(t->name);
      if (it == env.end())
        throw EvalError(EvalError::Kind::UnboundVariable, "unbound variable '" + t->name + "'");
      return it->second;
    }
    case Term::Node::Param: {
      int idx = s.lat.index_of(t->name);
      if (idx < 0)
        throw EvalError(EvalError::Kind::UnknownElement, "unknown element '" + t->name + "'");
      return idx;
    }
    case Term::Node::CC:
      return combinator(s, Combinator::CC);
    case Term::Node::App: {
      auto f = eval_rec(s, t->t1, env);
      if (!f) return std::nullopt;
      auto a = eval_rec(s, t->t2, env);
      if (!a) return std::nullopt;
      return apply(s, *f, *a);
    }
    case Term::Node::Abs: {
      std::vector<int> f(s.n(), -1);
      auto saved = env.find(t->name);
      int saved_val = saved == env.end() ? -1 : saved->second;
      for (int a = 0; a < s.n(); ++a) {
        env[t->name] = a;
        auto v = eval_rec(s, t->t1, env);
        if (v) f[a] = *v;
      }
      if (saved_val >= 0)
        env[t->name] = saved_val;
      else
        env.erase(t->name);
      return abstract(s, f);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> eval_term(const ImplicativeStructure& s, const TermPtr& t, const Env& env,
                             const EvalOptions& opts) {
  if (abs_depth(t) > opts.max_abs_depth)
    throw EvalError(EvalError::Kind::DepthExceeded,
                    "term nests " + std::to_string(abs_depth(t)) +
                        " abstractions; limit is " + std::to_string(opts.max_abs_depth));
  Env scratch = env;
  return eval_rec(s, t, scratch);
}

int combinator(const ImplicativeStructure& s, Combinator c) {
  const int n = s.n();
  const auto& L = s.lat;
  auto arr = [&](int a, int b) { return s.arrow(a, b); };
  int acc = L.top();
  switch (c) {
    case Combinator::I:
      for (int a = 0; a < n; ++a) acc = L.meet2(acc, arr(a, a));
      return acc;
    case Combinator::K:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc = L.meet2(acc, arr(a, arr(b, a)));
      return acc;
    case Combinator::S:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc)
            acc = L.meet2(acc, arr(arr(a, arr(b, cc)), arr(arr(a, b), arr(a, cc))));
      return acc;
    case Combinator::B:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc)
            acc = L.meet2(acc, arr(arr(a, b), arr(arr(cc, a), arr(cc, b))));
      return acc;
    case Combinator::C:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc)
            acc = L.meet2(acc, arr(arr(a, arr(b, cc)), arr(b, arr(a, cc))));
      return acc;
    case Combinator::W:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc = L.meet2(acc, arr(arr(a, arr(a, b)), arr(a, b)));
      return acc;
    case Combinator::CC:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc = L.meet2(acc, arr(arr(arr(a, b), a), a));
      return acc;
    case Combinator::Fork:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc = L.meet2(acc, arr(a, arr(b, L.meet2(a, b))));
      return acc;
    case Combinator::Por:
      return L.meet2(arr(L.bottom(), arr(L.top(), L.bottom())),
                     arr(L.top(), arr(L.bottom(), L.bottom())));
  }
  return acc;
}

const char* combinator_name(Combinator c) {
  switch (c) {
    case Combinator::I: return "I";
    case Combinator::K: return "K";
    case Combinator::S: return "S";
    case Combinator::B: return "B";
    case Combinator::C: return "C";
    case Combinator::W: return "W";
    case Combinator::CC: return "cc";
    case Combinator::Fork: return "fork";
    case Combinator::Por: return "por";
  }
  return "?";
}

std::optional<Combinator> combinator_from_name(const std::string& name) {
  for (Combinator c : {Combinator::I, Combinator::K, Combinator::S, Combinator::B, Combinator::C,
                       Combinator::W, Combinator::CC, Combinator::Fork, Combinator::Por})
    if (name == combinator_name(c)) return c;
  return std::nullopt;
}

bool check_typing(const ImplicativeStructure& s, const Env& env, const TermPtr& t, int type,
                  const EvalOptions& opts) {
  for (const auto& v : free_vars(t))
    if (env.find(v) == env.end()) return false;
  auto val = eval_term(s, t, env, opts);
  return val.has_value() && s.leq(*val, type);
}

}  // namespace ialg
