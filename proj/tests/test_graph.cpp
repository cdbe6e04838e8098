#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "flagcert/graph.hpp"

using namespace flagcert;

namespace {

// Independent automorphism counter: plain next_permutation over an adjacency
// matrix, no shared machinery.
long brute_aut(const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if (g.edge(u, v) != g.edge(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Graph random_graph(std::mt19937& rng, int n, int k = 0) {
  Graph g{n, k, 0};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.set_edge(u, v);
  return g;
}

Permutation random_label_fixing_perm(std::mt19937& rng, int n, int k) {
  std::vector<int> tail(n - k);
  std::iota(tail.begin(), tail.end(), k);
  std::shuffle(tail.begin(), tail.end(), rng);
  Permutation p = Permutation::identity(n);
  for (int i = k; i < n; ++i) p.map[i] = static_cast<uint8_t>(tail[i - k]);
  return p;
}

}  // namespace

TEST_CASE("canonical form basics") {
  Graph edgeless{3, 0, 0};
  auto [canon, witness] = canonical_form(edgeless);
  CHECK(canon == edgeless);
  CHECK(witness.is_identity());

  // Idempotence.
  Graph c5 = cycle_graph(5);
  Graph c = canonical(c5);
  CHECK(canonical(c) == c);

  // Witness really carries the input onto the canonical form.
  CHECK(permuted(c5, canonical_form(c5).second) == canonical(c5));

  CHECK_THROWS_AS(canonical_form(Graph{9, 0, 0}), std::invalid_argument);
}

TEST_CASE("relabelings of the 5-cycle share one canonical key") {
  Graph c5 = cycle_graph(5);
  std::mt19937 rng(42);
  Graph key = canonical(c5);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p = random_label_fixing_perm(rng, 5, 0);
    CHECK(canonical(permuted(c5, p)) == key);
  }
}

TEST_CASE("canonical form is constant on orbits (random property)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + rng() % 7;
    int k = static_cast<int>(rng() % (n + 1));
    Graph g = random_graph(rng, n, k);
    Permutation p = random_label_fixing_perm(rng, n, k);
    CHECK(canonical(g) == canonical(permuted(g, p)));
  }
}

TEST_CASE("labeled canonicalization permutes only unlabeled vertices") {
  // Edge 1-a with an extra isolated unlabeled vertex: the label must stay.
  Graph g = make_graph(3, 1, {{0, 2}});
  Graph c = canonical(g);
  CHECK(c.k == 1);
  // The labeled vertex keeps its adjacency degree.
  int deg = 0;
  for (int v = 1; v < 3; ++v)
    if (c.edge(0, v)) ++deg;
  CHECK(deg == 1);
}

TEST_CASE("all 64 labelings on 4 vertices collapse to 11 classes") {
  std::set<Graph> classes;
  for (uint64_t bits = 0; bits < 64; ++bits) classes.insert(canonical(Graph{4, 0, bits}));
  CHECK(classes.size() == 11);
}

TEST_CASE("is_isomorphic") {
  Graph p3 = path_graph(3);
  Permutation rot = Permutation::identity(3);
  rot.map = {2, 0, 1, 0, 0, 0, 0, 0, 0, 0};
  CHECK(is_isomorphic(p3, permuted(p3, rot)));
  CHECK_FALSE(is_isomorphic(paw_graph(), make_graph(4, 0, {{0, 1}, {0, 2}, {0, 3}})));  // paw vs star
  CHECK_FALSE(is_isomorphic(p3, path_graph(4)));
  // Same class, different labelings of the unlabeled part.
  Graph a = make_graph(2, 1, {{0, 1}});
  CHECK(is_isomorphic(a, canonical(a)));
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(complete_graph(4)) == 24);
  CHECK(automorphism_count(paw_graph()) == 2);
  CHECK(automorphism_count(k112_graph()) == 4);
  CHECK(automorphism_count(cycle_graph(5)) == 10);
  // Cross-check against the independent brute-force counter.
  CHECK(brute_aut(paw_graph()) == 2);
  CHECK(brute_aut(k112_graph()) == 4);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 6);
    CHECK(automorphism_count(g) == brute_aut(g));
  }
}

TEST_CASE("labeled automorphisms fix the labels") {
  // Star with the center labeled: leaves permute freely.
  Graph star = make_graph(4, 1, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(automorphism_count(star) == 6);
  // Same star fully unlabeled has the center exchangeable only with itself.
  Graph star_plain = make_graph(4, 0, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(automorphism_count(star_plain) == 6);
}

TEST_CASE("enumerate_graphs counts") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
  CHECK(enumerate_graphs(5).size() == 34);
  CHECK(enumerate_graphs(6).size() == 156);
}

TEST_CASE("enumerate_graphs agrees with direct canonicalization up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    std::set<uint64_t> keys;
    for (uint64_t bits = 0; bits < (uint64_t{1} << pair_count(n)); ++bits)
      keys.insert(canonical(Graph{n, 0, bits}).bits);
    CHECK(keys.size() == enumerate_graphs(n).size());
  }
}

TEST_CASE("enumeration is canonical, sorted, deterministic") {
  auto graphs = enumerate_graphs(5);
  for (size_t i = 0; i < graphs.size(); ++i) {
    CHECK(canonical(graphs[i]) == graphs[i]);
    if (i > 0) CHECK(graphs[i - 1] < graphs[i]);
  }
  CHECK(graphs == enumerate_graphs(5));
}

TEST_CASE("orbit-counting consistency: sum n!/|Aut| = 2^C(n,2)") {
  for (int n = 2; n <= 6; ++n) {
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long long total = 0;
    for (const Graph& g : enumerate_graphs(n)) total += fact / automorphism_count(g);
    CHECK(total == (1LL << pair_count(n)));
  }
}

TEST_CASE("enumerate_flags") {
  TypeSigma point{1, 1, 0};
  CHECK(enumerate_flags(point, 2).size() == 2);
  CHECK(enumerate_flags(point, 3).size() == 6);
  TypeSigma edge2 = make_graph(2, 2, {{0, 1}});
  CHECK(enumerate_flags(edge2, 3).size() == 4);
  for (const Graph& f : enumerate_flags(edge2, 3)) {
    CHECK(f.k == 2);
    CHECK(f.edge(0, 1));
    CHECK(canonical(f) == f);
  }
  CHECK_THROWS_AS(enumerate_flags(make_graph(3, 3, {}), 2), std::invalid_argument);
}

TEST_CASE("enumerate_types") {
  CHECK(enumerate_types(2, false).size() == 2);
  CHECK(enumerate_types(3, false).size() == 8);
  CHECK(enumerate_types(3, true).size() == 4);
  CHECK(enumerate_types(4, true).size() == 11);
  for (const TypeSigma& t : enumerate_types(3, true)) CHECK(t.k == t.n);
}

TEST_CASE("shared tables are safe under concurrent callers") {
  std::vector<Graph> expect = enumerate_graphs(6);
  std::vector<std::vector<Graph>> results(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([t, &results] {
      std::mt19937 rng(1000 + t);
      for (int i = 0; i < 2000; ++i) {
        Graph g = random_graph(rng, 1 + rng() % 7, 0);
        Graph c = canonical(g);
        if (canonical(c) != c) return;  // leaves results[t] empty on failure
      }
      results[t] = enumerate_graphs(6);
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == expect);
}

TEST_CASE("permutation algebra") {
  Permutation a = Permutation::identity(4);
  a.map = {1, 2, 3, 0, 0, 0, 0, 0, 0, 0};
  Permutation b = a.inverse();
  CHECK(compose(b, a).is_identity());
  Graph g = paw_graph();
  CHECK(permuted(permuted(g, a), b) == g);
}
