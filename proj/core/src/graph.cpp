#include "flagcert/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace flagcert {

namespace {

void check_vertex_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) throw std::invalid_argument(std::string(what) + ": vertex count out of range");
}

// Pair-index remapping tables for one (n, k): permuted bit i lands at
// remap[i]. Precomputed once per (n, k) and shared.
struct PermTable {
  std::vector<Permutation> perms;
  std::vector<std::array<uint8_t, 28>> remap;  // 28 = pair_count(8)
};

const PermTable& perm_table(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PermTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  PermTable t;
  std::array<uint8_t, kMaxVertices> p{};
  std::iota(p.begin(), p.begin() + n, 0);
  do {
    Permutation perm;
    perm.n = n;
    perm.map = p;
    t.perms.push_back(perm);
  } while (std::next_permutation(p.begin() + k, p.begin() + n));
  // next_permutation on the tail visits exactly the label-fixing subgroup in
  // lexicographic order, starting with the identity.
  t.remap.resize(t.perms.size());
  int np = pair_count(n);
  for (size_t pi = 0; pi < t.perms.size(); ++pi) {
    const auto& m = t.perms[pi].map;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx) {
        int a = m[u], b = m[v];
        if (a > b) std::swap(a, b);
        t.remap[pi][idx] = static_cast<uint8_t>(pair_index(a, b, n));
      }
    (void)np;
  }
  return cache.emplace(std::make_pair(n, k), std::move(t)).first->second;
}

uint64_t apply_remap(uint64_t bits, const std::array<uint8_t, 28>& remap) {
  uint64_t out = 0;
  while (bits) {
    int i = __builtin_ctzll(bits);
    bits &= bits - 1;
    out |= uint64_t{1} << remap[i];
  }
  return out;
}

uint64_t lex_key_of(uint64_t bits, int npairs) {
  uint64_t key = 0;
  for (int i = 0; i < npairs; ++i)
    if ((bits >> i) & 1u) key |= uint64_t{1} << (npairs - 1 - i);
  return key;
}

uint64_t memo_key(const Graph& g) {
  return (uint64_t(g.n) << 52) | (uint64_t(g.k) << 48) | g.bits;
}

}  // namespace

Permutation Permutation::identity(int n) {
  Permutation p;
  p.n = n;
  std::iota(p.map.begin(), p.map.begin() + n, 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.n = n;
  for (int i = 0; i < n; ++i) inv.map[map[i]] = static_cast<uint8_t>(i);
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (map[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& b, const Permutation& a) {
  if (a.n != b.n) throw std::invalid_argument("compose: size mismatch");
  Permutation c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i) c.map[i] = b.map[a.map[i]];
  return c;
}

int Graph::edge_count() const { return __builtin_popcountll(bits); }

uint64_t Graph::lex_key() const { return lex_key_of(bits, pair_count(n)); }

std::strong_ordering Graph::operator<=>(const Graph& o) const {
  if (auto c = n <=> o.n; c != 0) return c;
  if (auto c = k <=> o.k; c != 0) return c;
  return lex_key() <=> o.lex_key();
}

Graph permuted(const Graph& g, const Permutation& p) {
  if (p.n != g.n) throw std::invalid_argument("permuted: size mismatch");
  Graph out = g;
  out.bits = 0;
  uint64_t bits = g.bits;
  while (bits) {
    int i = __builtin_ctzll(bits);
    bits &= bits - 1;
    // Recover (u, v) from the pair index.
    int u = 0, idx = i;
    while (idx >= g.n - 1 - u) {
      idx -= g.n - 1 - u;
      ++u;
    }
    int v = u + 1 + idx;
    out.set_edge(p.map[u], p.map[v]);
  }
  return out;
}

const std::vector<Permutation>& permutations_fixing(int n, int k) {
  if (n < 1 || n > kMaxCanonicalVertices) throw std::invalid_argument("permutations_fixing: n out of range");
  if (k < 0 || k > n) throw std::invalid_argument("permutations_fixing: k out of range");
  return perm_table(n, k).perms;
}

std::pair<Graph, Permutation> canonical_form(const Graph& g) {
  check_vertex_range(g.n, 1, kMaxCanonicalVertices, "canonical_form");
  if (g.k < 0 || g.k > g.n) throw std::invalid_argument("canonical_form: bad label count");

  static std::mutex mu;
  static std::unordered_map<uint64_t, std::pair<uint64_t, uint32_t>> memo;
  uint64_t key = memo_key(g);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) {
      Graph out = g;
      out.bits = it->second.first;
      Permutation p;
      p.n = g.n;
      uint32_t packed = it->second.second;
      for (int i = 0; i < g.n; ++i) p.map[i] = (packed >> (3 * i)) & 7u;
      return {out, p};
    }
  }

  const PermTable& table = perm_table(g.n, g.k);
  int npairs = pair_count(g.n);
  uint64_t best_bits = g.bits;
  uint64_t best_key = lex_key_of(g.bits, npairs);
  size_t best_perm = 0;
  for (size_t pi = 1; pi < table.perms.size(); ++pi) {
    uint64_t b = apply_remap(g.bits, table.remap[pi]);
    uint64_t lk = lex_key_of(b, npairs);
    if (lk < best_key) {
      best_key = lk;
      best_bits = b;
      best_perm = pi;
    }
  }
  Graph out = g;
  out.bits = best_bits;
  Permutation witness = table.perms[best_perm];

  uint32_t packed = 0;
  for (int i = 0; i < g.n; ++i) packed |= uint32_t(witness.map[i]) << (3 * i);
  {
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, std::make_pair(best_bits, packed));
  }
  return {out, witness};
}

Graph canonical(const Graph& g) { return canonical_form(g).first; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.k != b.k) return false;
  return canonical(a).bits == canonical(b).bits;
}

long automorphism_count(const Graph& g) {
  check_vertex_range(g.n, 1, kMaxCanonicalVertices, "automorphism_count");
  const PermTable& table = perm_table(g.n, g.k);
  long count = 0;
  for (size_t pi = 0; pi < table.perms.size(); ++pi)
    if (apply_remap(g.bits, table.remap[pi]) == g.bits) ++count;
  return count;
}

std::vector<Graph> enumerate_graphs(int n) {
  check_vertex_range(n, 1, 7, "enumerate_graphs");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache[1] = {Graph{1, 0, 0}};
  // Extend each smaller class by one vertex with every attachment pattern.
  for (int size = 2; size <= n; ++size) {
    if (cache.count(size)) continue;
    std::set<Graph> classes;
    for (const Graph& h : cache[size - 1]) {
      for (uint32_t pattern = 0; pattern < (1u << (size - 1)); ++pattern) {
        Graph g{size, 0, 0};
        for (int u = 0; u < size - 1; ++u)
          for (int v = u + 1; v < size - 1; ++v)
            if (h.edge(u, v)) g.set_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if ((pattern >> u) & 1u) g.set_edge(u, size - 1);
        classes.insert(canonical(g));
      }
    }
    cache[size].assign(classes.begin(), classes.end());
  }
  return cache[n];
}

std::vector<Graph> enumerate_flags(const TypeSigma& sigma, int m) {
  if (sigma.k != sigma.n) throw std::invalid_argument("enumerate_flags: sigma must be fully labeled");
  if (m < sigma.n) throw std::invalid_argument("enumerate_flags: m smaller than the type");
  if (m > 7) throw std::invalid_argument("enumerate_flags: m out of range");

  int k = sigma.n;
  // Seed: the type itself, then grow one unlabeled vertex at a time.
  Graph seed{k, k, sigma.bits};
  std::vector<Graph> cur{seed};
  for (int size = k + 1; size <= m; ++size) {
    std::set<Graph> next;
    for (const Graph& h : cur) {
      for (uint32_t pattern = 0; pattern < (1u << (size - 1)); ++pattern) {
        Graph g{size, k, 0};
        for (int u = 0; u < size - 1; ++u)
          for (int v = u + 1; v < size - 1; ++v)
            if (h.edge(u, v)) g.set_edge(u, v);
        for (int u = 0; u < size - 1; ++u)
          if ((pattern >> u) & 1u) g.set_edge(u, size - 1);
        next.insert(canonical(g));
      }
    }
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

std::vector<TypeSigma> enumerate_types(int k, bool dedup) {
  if (k < 1 || k > 4) throw std::invalid_argument("enumerate_types: k out of range");
  std::vector<TypeSigma> out;
  if (dedup) {
    for (const Graph& g : enumerate_graphs(k)) out.push_back(TypeSigma{k, k, g.bits});
    return out;
  }
  int np = pair_count(k);
  std::set<Graph> all;
  for (uint64_t bits = 0; bits < (uint64_t{1} << np); ++bits) all.insert(Graph{k, k, bits});
  out.assign(all.begin(), all.end());
  return out;
}

Graph make_graph(int n, int k, const std::vector<std::pair<int, int>>& edges) {
  check_vertex_range(n, 1, kMaxVertices, "make_graph");
  if (k < 0 || k > n) throw std::invalid_argument("make_graph: bad label count");
  Graph g{n, k, 0};
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("make_graph: loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("make_graph: vertex out of range");
    g.set_edge(u, v);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g{n, 0, 0};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph{n, 0, 0}; }

Graph path_graph(int n) {
  Graph g{n, 0, 0};
  for (int u = 0; u + 1 < n; ++u) g.set_edge(u, u + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.set_edge(n - 1, 0);
  return g;
}

Graph paw_graph() { return make_graph(4, 0, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph k112_graph() { return make_graph(4, 0, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph two_k2_graph() { return make_graph(4, 0, {{0, 1}, {2, 3}}); }

}  // namespace flagcert
