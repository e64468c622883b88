#include "ialg/ialg_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ialg/constructors.hpp"
#include "ialg/separator.hpp"

namespace ialg {

namespace {

using Kind_ = StructureError::Kind;

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw IoError(IoError::Kind::Parse, line, msg);
}

[[noreturn]] void valid_fail(int line, const std::string& msg) {
  throw IoError(IoError::Kind::Validation, line, msg);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

void check_element_name(const std::string& name, int line) {
  if (name.find("<=") != std::string::npos || name.front() == '#' || name.back() == ':')
    parse_fail(line, "element name '" + name + "' clashes with the file syntax");
}

// A 'row'/'pred'/'fun' header is the keyword plus a name ending in ':'.
std::string strip_colon(const std::string& tok, int line) {
  if (tok.size() < 2 || tok.back() != ':')
    parse_fail(line, "expected 'NAME:' but got '" + tok + "'");
  return tok.substr(0, tok.size() - 1);
}

struct RawFile {
  std::string name;
  int structure_line = 0;
  std::optional<Kind> kind;
  int kind_line = 0;
  std::vector<std::string> elements;
  int elements_line = 0;
  std::vector<std::pair<std::string, std::string>> order;
  int first_order_line = 0;
  std::optional<ImpMode> mode;
  int imp_line = 0;
  std::vector<std::pair<std::vector<std::string>, int>> rows;  // values + line
  std::vector<std::string> row_names;
  std::vector<std::pair<std::vector<std::string>, int>> separators;  // tokens + line
  std::vector<std::string> domain;
  int domain_line = 0;
  // name -> (items, line); item = "t1,..,tk=v"
  std::vector<std::tuple<std::string, std::vector<std::string>, int, bool>> tables;  // pred? last
};

RawFile scan(const std::string& text) {
  RawFile raw;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "structure") {
      if (!raw.name.empty()) parse_fail(lineno, "duplicate structure directive");
      if (toks.size() != 2) parse_fail(lineno, "structure needs exactly one name");
      raw.name = toks[1];
      raw.structure_line = lineno;
    } else if (kw == "kind") {
      if (raw.kind) parse_fail(lineno, "duplicate kind directive");
      if (toks.size() != 2 || (toks[1] != "full" && toks[1] != "quasi"))
        parse_fail(lineno, "kind must be 'full' or 'quasi'");
      raw.kind = toks[1] == "full" ? Kind::Full : Kind::Quasi;
      raw.kind_line = lineno;
    } else if (kw == "elements") {
      if (!raw.elements.empty()) parse_fail(lineno, "duplicate elements directive");
      if (toks.size() < 2) parse_fail(lineno, "elements needs at least one name");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        check_element_name(toks[i], lineno);
        raw.elements.push_back(toks[i]);
      }
      raw.elements_line = lineno;
    } else if (kw == "order") {
      if (raw.first_order_line == 0) raw.first_order_line = lineno;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto pos = toks[i].find("<=");
        if (pos == std::string::npos)
          parse_fail(lineno, "order item '" + toks[i] + "' is not of the form a<=b");
        raw.order.emplace_back(toks[i].substr(0, pos), toks[i].substr(pos + 2));
      }
    } else if (kw == "imp") {
      if (raw.mode) parse_fail(lineno, "duplicate imp directive");
      if (toks.size() != 2) parse_fail(lineno, "imp needs exactly one mode");
      if (toks[1] == "heyting")
        raw.mode = ImpMode::Heyting;
      else if (toks[1] == "dummy-right")
        raw.mode = ImpMode::DummyRight;
      else if (toks[1] == "dummy-top")
        raw.mode = ImpMode::DummyTop;
      else if (toks[1] == "table")
        raw.mode = ImpMode::Table;
      else
        parse_fail(lineno, "imp mode must be heyting, dummy-right, dummy-top or table");
      raw.imp_line = lineno;
    } else if (kw == "row") {
      if (raw.mode != ImpMode::Table) parse_fail(lineno, "row outside an 'imp table' block");
      if (toks.size() < 2) parse_fail(lineno, "row needs a name and values");
      raw.row_names.push_back(strip_colon(toks[1], lineno));
      raw.rows.emplace_back(std::vector<std::string>(toks.begin() + 2, toks.end()), lineno);
    } else if (kw == "separator") {
      if (toks.size() < 2) parse_fail(lineno, "separator needs a name");
      raw.separators.emplace_back(std::vector<std::string>(toks.begin() + 1, toks.end()),
                                  lineno);
    } else if (kw == "domain") {
      if (!raw.domain.empty()) parse_fail(lineno, "duplicate domain directive");
      if (toks.size() < 2) parse_fail(lineno, "domain needs at least one point");
      raw.domain.assign(toks.begin() + 1, toks.end());
      raw.domain_line = lineno;
    } else if (kw == "pred" || kw == "fun") {
      if (toks.size() < 3) parse_fail(lineno, kw + " needs a name and at least one entry");
      raw.tables.emplace_back(strip_colon(toks[1], lineno),
                              std::vector<std::string>(toks.begin() + 2, toks.end()), lineno,
                              kw == "pred");
    } else {
      parse_fail(lineno, "unknown directive '" + kw + "'");
    }
  }
  return raw;
}

int element_index(const FiniteLattice& lat, const std::string& name, int line) {
  int i = lat.index_of(name);
  if (i < 0) parse_fail(line, "unknown element '" + name + "'");
  return i;
}

// Fills a flat row-major table from "t1,..,tk=v" items.
template <typename ValueFn>
std::pair<int, std::vector<int>> fill_table(const std::vector<std::string>& domain,
                                            const std::vector<std::string>& items, int line,
                                            ValueFn&& value_of) {
  auto domain_index = [&](const std::string& d) {
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == d) return static_cast<int>(i);
    parse_fail(line, "unknown domain point '" + d + "'");
  };
  int arity = -1;
  std::vector<int> table;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) parse_fail(line, "entry '" + item + "' lacks '='");
    std::vector<int> args;
    std::string argpart = item.substr(0, eq);
    if (!argpart.empty()) {
      std::size_t start = 0;
      while (true) {
        auto comma = argpart.find(',', start);
        args.push_back(domain_index(argpart.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (arity < 0) {
      arity = static_cast<int>(args.size());
      std::size_t cells = 1;
      for (int i = 0; i < arity; ++i) cells *= domain.size();
      table.assign(cells, -1);
    } else if (static_cast<int>(args.size()) != arity) {
      parse_fail(line, "entry '" + item + "' has mixed arity");
    }
    std::size_t idx = 0;
    for (int a : args) idx = idx * domain.size() + static_cast<std::size_t>(a);
    if (table[idx] != -1) parse_fail(line, "entry '" + item + "' repeats a tuple");
    table[idx] = value_of(item.substr(eq + 1));
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == -1) parse_fail(line, "table is missing a tuple");
  return {arity, std::move(table)};
}

}  // namespace

const Separator* StructureFile::find_separator(const std::string& sep_name) const {
  for (const auto& sep : separators)
    if (sep.name == sep_name) return &sep;
  return nullptr;
}

StructureFile parse_structure(const std::string& text) {
  RawFile raw = scan(text);
  if (raw.name.empty()) parse_fail(0, "missing structure directive");
  if (!raw.kind) parse_fail(0, "missing kind directive");
  if (raw.elements.empty()) parse_fail(0, "missing elements directive");
  if (!raw.mode) parse_fail(0, "missing imp directive");

  StructureFile out;
  out.name = raw.name;
  out.imp_mode = *raw.mode;

  FiniteLattice lat;
  try {
    lat = FiniteLattice::build(raw.elements, raw.order);
  } catch (const LatticeError& e) {
    valid_fail(raw.first_order_line ? raw.first_order_line : raw.elements_line, e.what());
  }
  const int n = lat.size();

  switch (*raw.mode) {
    case ImpMode::Heyting:
      try {
        out.s = make_heyting(lat);
      } catch (const StructureError& e) {
        valid_fail(raw.imp_line, e.what());
      }
      break;
    case ImpMode::DummyRight:
      out.s = make_dummy(lat, DummyMode::Right);
      break;
    case ImpMode::DummyTop:
      out.s = make_dummy(lat, DummyMode::Top);
      break;
    case ImpMode::Table: {
      if (static_cast<int>(raw.rows.size()) != n)
        parse_fail(raw.imp_line, "imp table needs exactly one row per element");
      std::vector<std::vector<int>> imp(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a) {
        const auto& [values, line] = raw.rows[a];
        if (raw.row_names[a] != lat.name(a))
          parse_fail(line, "row '" + raw.row_names[a] + "' out of declaration order (expected '" +
                               lat.name(a) + "')");
        if (static_cast<int>(values.size()) != n)
          parse_fail(line, "row '" + raw.row_names[a] + "' needs " + std::to_string(n) +
                               " values");
        for (int b = 0; b < n; ++b) imp[a][b] = element_index(lat, values[b], line);
      }
      out.s = ImplicativeStructure{std::move(lat), std::move(imp), Kind::Full};
      break;
    }
  }
  out.s.kind = *raw.kind;

  {
    ValidateOptions opt;
    opt.allow_sample = true;
    auto rep = validate_structure(out.s, opt);
    if (!rep.ok)
      valid_fail(raw.imp_line, "structure axioms fail: " + rep.violations.front().describe(out.s));
  }

  for (const auto& [toks, line] : raw.separators) {
    Separator sep;
    sep.name = toks[0];
    if (out.find_separator(sep.name)) parse_fail(line, "duplicate separator '" + sep.name + "'");
    for (std::size_t i = 1; i < toks.size(); ++i)
      sep.members |= mask_bit(element_index(out.s.lat, toks[i], line));
    auto rep = classify_separator(out.s, sep.members);
    if (!rep.is_separator) {
      std::string why = rep.failure ? rep.failure->describe(out.s) : "not a separator";
      valid_fail(line, "separator '" + sep.name + "' is invalid: " + why);
    }
    out.separators.push_back(std::move(sep));
  }

  if (!raw.domain.empty()) {
    Interpretation in;
    in.domain = raw.domain;
    for (const auto& [name, items, line, is_pred] : raw.tables) {
      if (in.preds.count(name) || in.funs.count(name))
        parse_fail(line, "duplicate table '" + name + "'");
      if (is_pred) {
        auto [arity, table] = fill_table(raw.domain, items, line, [&](const std::string& v) {
          return element_index(out.s.lat, v, line);
        });
        in.preds[name] = PredTable{arity, std::move(table)};
      } else {
        auto [arity, table] = fill_table(raw.domain, items, line, [&](const std::string& v) {
          for (std::size_t i = 0; i < raw.domain.size(); ++i)
            if (raw.domain[i] == v) return static_cast<int>(i);
          parse_fail(line, "unknown domain point '" + v + "'");
        });
        in.funs[name] = FunTable{arity, std::move(table)};
      }
    }
    try {
      in.check(out.s.n());
    } catch (const FolError& e) {
      valid_fail(raw.domain_line, e.what());
    }
    out.interp = std::move(in);
  } else if (!raw.tables.empty()) {
    parse_fail(std::get<2>(raw.tables.front()), "pred/fun tables need a domain directive");
  }
  return out;
}

StructureFile load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::File, 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string emit_structure(const StructureFile& f) {
  const auto& lat = f.s.lat;
  const int n = f.s.n();
  std::ostringstream os;
  os << "structure " << f.name << "\n";
  os << "kind " << (f.s.kind == Kind::Full ? "full" : "quasi") << "\n";
  os << "elements";
  for (int a = 0; a < n; ++a) os << ' ' << lat.name(a);
  os << "\n";
  bool any_cover = false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lat.covers(a, b)) {
        if (!any_cover) os << "order";
        any_cover = true;
        os << ' ' << lat.name(a) << "<=" << lat.name(b);
      }
  if (any_cover) os << "\n";
  switch (f.imp_mode) {
    case ImpMode::Heyting: os << "imp heyting\n"; break;
    case ImpMode::DummyRight: os << "imp dummy-right\n"; break;
    case ImpMode::DummyTop: os << "imp dummy-top\n"; break;
    case ImpMode::Table:
      os << "imp table\n";
      for (int a = 0; a < n; ++a) {
        os << "row " << lat.name(a) << ':';
        for (int b = 0; b < n; ++b) os << ' ' << lat.name(f.s.arrow(a, b));
        os << "\n";
      }
      break;
  }
  for (const auto& sep : f.separators) {
    os << "separator " << sep.name;
    for (int a : MaskBits(sep.members)) os << ' ' << lat.name(a);
    os << "\n";
  }
  if (f.interp) {
    const auto& in = *f.interp;
    os << "domain";
    for (const auto& d : in.domain) os << ' ' << d;
    os << "\n";
    auto emit_table = [&](const std::string& kw, const std::string& name, int arity,
                          const std::vector<int>& table, bool pred) {
      os << kw << ' ' << name << ':';
      const int m = static_cast<int>(in.domain.size());
      std::vector<int> args(arity, 0);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        os << ' ';
        std::size_t rest = idx;
        for (int k = arity - 1; k >= 0; --k) {
          args[k] = static_cast<int>(rest % m);
          rest /= m;
        }
        for (int k = 0; k < arity; ++k) {
          if (k) os << ',';
          os << in.domain[args[k]];
        }
        os << '=' << (pred ? lat.name(table[idx]) : in.domain[table[idx]]);
      }
      os << "\n";
    };
    for (const auto& [name, tab] : in.preds) emit_table("pred", name, tab.arity, tab.table, true);
    for (const auto& [name, tab] : in.funs) emit_table("fun", name, tab.arity, tab.table, false);
  }
  return os.str();
}

StructureFile wrap_structure(std::string name, ImplicativeStructure s,
                             std::vector<Separator> separators) {
  StructureFile f;
  f.name = std::move(name);
  f.imp_mode = ImpMode::Table;
  f.s = std::move(s);
  f.separators = std::move(separators);
  return f;
}

}  // namespace ialg
