#include "ialg/corpus.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ialg/constructors.hpp"
#include "ialg/separator.hpp"

namespace ialg {

FiniteLattice chain_lattice(int n) {
  if (n < 1 || n > kMaxElements)
    throw LatticeError(LatticeError::Kind::TooLarge, "chain size out of range");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(names[i], names[i + 1]);
  return FiniteLattice::build(std::move(names), pairs);
}

FiniteLattice diamond_lattice() {
  return FiniteLattice::build({"0", "a", "b", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FiniteLattice m3_lattice() {
  return FiniteLattice::build(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice n5_lattice() {
  return FiniteLattice::build({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

FiniteLattice diamond_top_lattice() {
  return FiniteLattice::build(
      {"0", "a", "b", "m", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "m"}, {"b", "m"}, {"m", "1"}});
}

FiniteLattice diamond_bottom_lattice() {
  return FiniteLattice::build(
      {"0", "e", "a", "b", "1"},
      {{"0", "e"}, {"e", "a"}, {"e", "b"}, {"a", "1"}, {"b", "1"}});
}

namespace {

struct SearchLattice {
  std::string name;
  FiniteLattice lat;
};

std::vector<SearchLattice> search_lattices() {
  return {
      {"c1", chain_lattice(1)},
      {"c2", chain_lattice(2)},
      {"c3", chain_lattice(3)},
      {"c4", chain_lattice(4)},
      {"d4", diamond_lattice()},
      {"m3", m3_lattice()},
      {"n5", n5_lattice()},
      {"d4-top", diamond_top_lattice()},
      {"d4-bottom", diamond_bottom_lattice()},
      {"c5", chain_lattice(5)},
  };
}

// Rows of a full table: maps fixing top and preserving binary meets.
std::vector<std::vector<int>> table_rows(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<std::vector<int>> rows;
  std::vector<int> g(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (g[lat.meet2(x, y)] != lat.meet2(g[x], g[y])) return;
      rows.push_back(g);
      return;
    }
    if (pos == lat.top()) {
      g[pos] = lat.top();
      self(self, pos + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      g[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return rows;
}

std::vector<std::vector<int>> lattice_automorphisms(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (lat.leq(a, b) != lat.leq(perm[a], perm[b])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct LeafJudge {
  const FiniteLattice& lat;
  std::vector<std::vector<int>> imp;  // filled per leaf

  int meet_k() const {
    Mask m = 0;
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b) m |= mask_bit(imp[a][imp[b][a]]);
    return lat.meet(m);
  }
  int meet_s() const {
    Mask m = 0;
    const int n = lat.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const int x = imp[a][imp[b][c]];
          const int y = imp[imp[a][b]][imp[a][c]];
          m |= mask_bit(imp[x][y]);
        }
    return lat.meet(m);
  }
  int meet_fork() const {
    Mask m = 0;
    for (int a = 0; a < lat.size(); ++a)
      for (int b = 0; b < lat.size(); ++b)
        m |= mask_bit(imp[a][imp[b][lat.meet2(a, b)]]);
    return lat.meet(m);
  }
  int app(int a, int b) const {
    Mask cs = 0;
    for (int c = 0; c < lat.size(); ++c)
      if (lat.leq(a, imp[b][c])) cs |= mask_bit(c);
    return lat.meet(cs);
  }
  Mask least_separator() const {
    Mask core = lat.up_set(meet_k()) | lat.up_set(meet_s());
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a : MaskBits(core)) {
        for (int b : MaskBits(core)) {
          const int v = app(a, b);
          if (!(core & mask_bit(v))) {
            core |= lat.up_set(v);
            changed = true;
          }
        }
      }
    }
    return core;
  }
};

SearchOutcome run_table_search() {
  SearchOutcome out;
  for (const auto& sl : search_lattices()) {
    const FiniteLattice& lat = sl.lat;
    const int n = lat.size();
    out.per_lattice.emplace_back(sl.name, 0);
    std::uint64_t& lattice_count = out.per_lattice.back().second;
    const auto rows = table_rows(lat);
    const auto autos = lattice_automorphisms(lat);

    // Assign rows top-down so every strict upper bound is fixed before its
    // lower neighbours; antitone assignments need the new row to dominate
    // the pointwise join of the rows above.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return mask_count(lat.down_set(x)) > mask_count(lat.down_set(y));
    });

    LeafJudge judge{lat, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
    std::vector<int> permuted(n);
    std::vector<int> flat(n * n), flat2(n * n);

    auto canonical = [&](const std::vector<std::vector<int>>& imp) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[a * n + b] = imp[a][b];
      for (const auto& pi : autos) {
        bool identity = true;
        for (int i = 0; i < n; ++i)
          if (pi[i] != i) {
            identity = false;
            break;
          }
        if (identity) continue;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) flat2[pi[a] * n + pi[b]] = pi[imp[a][b]];
        if (std::lexicographical_compare(flat2.begin(), flat2.end(), flat.begin(), flat.end()))
          return false;
      }
      return true;
    };

    std::vector<int> row_of(n, -1);
    bool stop = false;
    auto dfs = [&](auto&& self, int pos) -> void {
      if (stop) return;
      if (pos == n) {
        for (int a = 0; a < n; ++a) judge.imp[a] = rows[row_of[a]];
        if (!canonical(judge.imp)) return;
        ++out.tables_examined;
        ++lattice_count;
        const Mask core = judge.least_separator();
        const int fork = judge.meet_fork();
        if (!(core & mask_bit(fork))) {
          out.found = true;
          out.lattice = sl.name;
          out.witness = ImplicativeStructure{lat, judge.imp, Kind::Full};
          out.core = core;
          out.fork_value = fork;
          stop = true;
        }
        return;
      }
      const int e = order[pos];
      std::vector<int> floor(n, lat.bottom());
      for (int u : MaskBits(lat.up_set(e))) {
        if (u == e) continue;
        const auto& ru = rows[row_of[u]];
        for (int b = 0; b < n; ++b) floor[b] = lat.join2(floor[b], ru[b]);
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        bool fits = true;
        for (int b = 0; b < n && fits; ++b)
          if (!lat.leq(floor[b], rows[r][b])) fits = false;
        if (!fits) continue;
        row_of[e] = static_cast<int>(r);
        self(self, pos + 1);
        if (stop) return;
      }
      row_of[e] = -1;
    };
    dfs(dfs, 0);
    if (out.found) break;
  }
  return out;
}

void add_entry(std::vector<CorpusEntry>& out, std::string name, std::string family,
               ImplicativeStructure s) {
  CorpusEntry e;
  e.name = std::move(name);
  e.family = std::move(family);
  e.separators = all_separators(s);
  e.s = std::move(s);
  out.push_back(std::move(e));
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;

  add_entry(out, "c1", "heyting", make_heyting(chain_lattice(1)));
  add_entry(out, "b2", "heyting", make_heyting(chain_lattice(2)));
  add_entry(out, "c3", "heyting", make_heyting(chain_lattice(3)));
  add_entry(out, "c4", "heyting", make_heyting(chain_lattice(4)));
  add_entry(out, "d4", "heyting", make_heyting(diamond_lattice()));
  add_entry(out, "c5", "heyting", make_heyting(chain_lattice(5)));
  add_entry(out, "d4-top", "heyting", make_heyting(diamond_top_lattice()));
  add_entry(out, "d4-bottom", "heyting", make_heyting(diamond_bottom_lattice()));

  for (DummyMode mode : {DummyMode::Right, DummyMode::Top}) {
    const char* tag = mode == DummyMode::Right ? "dummy-right" : "dummy-top";
    add_entry(out, std::string(tag) + "-b2", "dummy", make_dummy(chain_lattice(2), mode));
    add_entry(out, std::string(tag) + "-c3", "dummy", make_dummy(chain_lattice(3), mode));
    add_entry(out, std::string(tag) + "-d4", "dummy", make_dummy(diamond_lattice(), mode));
  }

  // Subset structures over all partial applicative structures with at most
  // two atoms, deduplicated by resulting table.
  std::map<std::tuple<int, Kind, std::vector<std::vector<int>>>, bool> seen;
  auto letter = [](int v) { return v < 0 ? 'u' : static_cast<char>('e' + v); };
  for (int ee = -1; ee <= 0; ++ee) {
    Pas p = Pas::make({"e"}, {{ee}});
    auto s = make_kleene_subsets(p);
    auto key = std::make_tuple(s.n(), s.kind, s.imp);
    if (seen.emplace(key, true).second)
      add_entry(out, std::string("kleene1-") + letter(ee), "kleene", std::move(s));
  }
  for (int ee = -1; ee <= 1; ++ee)
    for (int ef = -1; ef <= 1; ++ef)
      for (int fe = -1; fe <= 1; ++fe)
        for (int ff = -1; ff <= 1; ++ff) {
          Pas p = Pas::make({"e", "f"}, {{ee, ef}, {fe, ff}});
          auto s = make_kleene_subsets(p);
          auto key = std::make_tuple(s.n(), s.kind, s.imp);
          if (!seen.emplace(key, true).second) continue;
          std::string name = "kleene2-";
          name += letter(ee);
          name += letter(ef);
          name += letter(fe);
          name += letter(ff);
          add_entry(out, name, "kleene", std::move(s));
        }

  const SearchOutcome& search = find_non_filter_structure();
  if (search.found)
    add_entry(out, "search-" + search.lattice, "search", *search.witness);
  return out;
}

}  // namespace

const SearchOutcome& find_non_filter_structure() {
  static const SearchOutcome outcome = run_table_search();
  return outcome;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build_corpus();
  return entries;
}

}  // namespace ialg
