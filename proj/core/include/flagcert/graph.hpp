#ifndef FLAGCERT_GRAPH_HPP
#define FLAGCERT_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace flagcert {

// Storage limit; the subset-counting oracle accepts graphs this large.
inline constexpr int kMaxVertices = 10;
// Exhaustive canonicalization works up to 8! permutations.
inline constexpr int kMaxCanonicalVertices = 8;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Index of the unordered pair {u, v}, u < v, in row-major upper-triangle
// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
constexpr int pair_index(int u, int v, int n) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct Graph;

struct Permutation {
  int n = 0;
  std::array<uint8_t, kMaxVertices> map{};  // vertex i goes to position map[i]

  static Permutation identity(int n);
  Permutation inverse() const;
  bool is_identity() const;
};

// (a then b): vertex i goes to b.map[a.map[i]].
Permutation compose(const Permutation& b, const Permutation& a);

// A finite simple graph on n vertices, the first k of which carry labels
// 1..k. k == 0 is a plain graph; k == n is a type. Adjacency is a symmetric
// irreflexive relation packed as upper-triangle bits in row-major pair order.
struct Graph {
  int n = 1;
  int k = 0;
  uint64_t bits = 0;

  bool edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return (bits >> pair_index(u, v, n)) & 1u;
  }
  void set_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    bits |= uint64_t{1} << pair_index(u, v, n);
  }
  int edge_count() const;

  // Key whose numeric order equals lexicographic order of the bit sequence
  // (pair 0 most significant). Total order on graphs: (n, k, lex_key).
  uint64_t lex_key() const;

  bool operator==(const Graph&) const = default;
  std::strong_ordering operator<=>(const Graph& o) const;
};

using TypeSigma = Graph;  // fully labeled: k == n

Graph permuted(const Graph& g, const Permutation& p);

// All permutations of {0..n-1} fixing 0..k-1 pointwise, identity first,
// in lexicographic order. Shared read-only table.
const std::vector<Permutation>& permutations_fixing(int n, int k);

// Lexicographically smallest bit sequence over all label-preserving vertex
// permutations, plus a permutation carrying g onto it. Idempotent; memoized.
std::pair<Graph, Permutation> canonical_form(const Graph& g);
Graph canonical(const Graph& g);

// Equal n, k and label-preserving canonical forms.
bool is_isomorphic(const Graph& a, const Graph& b);

// Order of the (label-preserving, when k > 0) automorphism group.
long automorphism_count(const Graph& g);

// All isomorphism classes on n vertices, canonical, sorted by canonical key.
std::vector<Graph> enumerate_graphs(int n);  // n <= 7

// All label-preserving isomorphism classes of m-vertex graphs whose labeled
// part equals sigma exactly. sigma must be fully labeled.
std::vector<Graph> enumerate_flags(const TypeSigma& sigma, int m);  // m <= 7

// Types on k vertices: all 2^C(k,2) labelings, or one representative per
// underlying unlabeled class when dedup is set.
std::vector<TypeSigma> enumerate_types(int k, bool dedup);  // k <= 4

// Convenience constructor from a 0-based edge list.
Graph make_graph(int n, int k, const std::vector<std::pair<int, int>>& edges);

// Small named graphs (all unlabeled).
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph paw_graph();    // triangle with a pendant edge
Graph k112_graph();   // complete tripartite K_{1,1,2}
Graph two_k2_graph(); // K_2 disjoint union K_2

}  // namespace flagcert

#endif
