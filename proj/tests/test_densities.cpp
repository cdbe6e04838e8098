#include <doctest.h>

#include <random>
#include <sstream>

#include "flagcert/graphon.hpp"
#include "flagcert/notation.hpp"
#include "flagcert/quantum.hpp"
#include "helpers.hpp"

using namespace flagcert;
using namespace flagcert::testing;

namespace {

// The Goodman combination K_3 - 2(K_2 u K_2) + K_2 over the plain basis.
QuantumGraph goodman_quantum() {
  QuantumGraph q = QuantumGraph::single(complete_graph(3), Basis::plain);
  q += QuantumGraph::single(two_k2_graph(), Basis::plain, Rat(-2));
  q += QuantumGraph::single(complete_graph(2), Basis::plain);
  return q;
}

StepGraphon const_graphon(const Rat& p) {
  RatMatrix v(1, 1);
  v.at(0, 0) = p;
  return StepGraphon({Rat(1)}, std::move(v));
}

// Direct homomorphism count, independent of the density code path.
long long hom_count(const Graph& h, const Graph& g) {
  long long count = 0;
  std::vector<int> img(h.n, 0);
  while (true) {
    bool ok = true;
    for (int u = 0; u < h.n && ok; ++u)
      for (int v = u + 1; v < h.n && ok; ++v)
        if (h.edge(u, v) && !g.edge(img[u], img[v])) ok = false;
    if (ok) ++count;
    int i = h.n - 1;
    while (i >= 0 && img[i] == g.n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return count;
}

}  // namespace

TEST_CASE("step graphon construction") {
  StepGraphon k2 = step_graphon_of(complete_graph(2));
  CHECK(k2.parts() == 2);
  CHECK(k2.values.at(0, 1) == 1);
  CHECK(k2.values.at(0, 0) == 0);

  StepGraphon k5 = step_graphon_of(complete_graph(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(k5.values.at(i, j) == (i == j ? 0 : 1));

  StepGraphon two = step_graphon_of(two_k2_graph());
  CHECK(two.parts() == 4);
  CHECK(two.values.at(0, 1) == 1);
  CHECK(two.values.at(2, 3) == 1);
  CHECK(two.values.at(0, 2) == 0);

  CHECK_THROWS_AS(StepGraphon({rat(1, 2)}, RatMatrix(1, 1)), std::invalid_argument);
  RatMatrix bad(1, 1);
  bad.at(0, 0) = Rat(2);
  CHECK_THROWS_AS(StepGraphon({Rat(1)}, std::move(bad)), std::invalid_argument);
}

TEST_CASE("complement") {
  StepGraphon w0 = complement(step_graphon_of(two_k2_graph()));
  CHECK(w0.values.at(0, 0) == 1);  // diagonal flips to 1
  CHECK(w0.values.at(0, 1) == 0);
  CHECK(w0.values.at(0, 2) == 1);

  // Double complement is the identity.
  StepGraphon back = complement(w0);
  CHECK(back.values.a == step_graphon_of(two_k2_graph()).values.a);

  StepGraphon half = const_graphon(rat(1, 2));
  CHECK(complement(half).values.at(0, 0) == rat(1, 2));
}

TEST_CASE("t_hom examples") {
  CHECK(t_hom(complete_graph(2), const_graphon(rat(3, 7))) == rat(3, 7));
  CHECK(t_hom(complete_graph(3), step_graphon_of(complete_graph(5))) == rat(60, 125));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    StepGraphon w = random_step_graphon(rng, 3, false);
    CHECK(sgn(eval_quantum(goodman_quantum(), w)) >= 0);
  }
}

TEST_CASE("t_hom agrees with raw homomorphism counting") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    Graph h = random_graph(rng, 2 + rng() % 3);
    Graph g = random_graph(rng, 2 + rng() % 4);
    long long denom = 1;
    for (int i = 0; i < h.n; ++i) denom *= g.n;
    CHECK(t_hom(h, step_graphon_of(g)) == Rat(static_cast<long>(hom_count(h, g))) / static_cast<long>(denom));
  }
}

TEST_CASE("t_ind headline values") {
  StepGraphon w0 = complement(step_graphon_of(two_k2_graph()));
  CHECK(t_ind_graph(paw_graph(), w0) == rat(1, 32));
  CHECK(t_ind_graph(k112_graph(), step_graphon_of(complete_graph(5))) == rat(12, 125));
  CHECK(t_ind_graph(complete_graph(2), step_graphon_of(complete_graph(5))) == rat(4, 5));
}

TEST_CASE("t_ind_rooted") {
  std::mt19937 rng(13);
  SUBCASE("no labels reduces to the plain density") {
    for (int trial = 0; trial < 10; ++trial) {
      Graph h = random_graph(rng, 2 + rng() % 3);
      StepGraphon w = random_step_graphon(rng, 3, false);
      CHECK(t_ind_rooted(h, {}, w) == t_ind_graph(h, w));
    }
  }
  SUBCASE("fully labeled graphs evaluate to a pure product") {
    Graph sigma = make_graph(3, 3, {{0, 1}});
    StepGraphon w = random_step_graphon(rng, 3, false);
    std::vector<int> psi = {0, std::min(1, w.parts() - 1), 0};
    Rat expect = w.values.at(psi[0], psi[1]) * (1 - w.values.at(psi[0], psi[2])) *
                 (1 - w.values.at(psi[1], psi[2]));
    CHECK(t_ind_rooted(sigma, psi, w) == expect);
  }
  SUBCASE("weighted average over assignments recovers the unlabeled density") {
    for (int trial = 0; trial < 15; ++trial) {
      int k = 1 + static_cast<int>(rng() % 2);
      Graph f = random_graph(rng, k + 1 + rng() % 2, k);
      StepGraphon w = random_step_graphon(rng, 3, true);
      Graph plain = f;
      plain.k = 0;
      Rat avg(0);
      std::vector<int> psi(k, 0);
      while (true) {
        Rat mass(1);
        for (int i = 0; i < k; ++i) mass *= w.weights[psi[i]];
        avg += mass * t_ind_rooted(f, psi, w);
        int i = k - 1;
        while (i >= 0 && psi[i] == w.parts() - 1) psi[i--] = 0;
        if (i < 0) break;
        ++psi[i];
      }
      CHECK(avg == t_ind_graph(plain, w));
    }
  }
  SUBCASE("part index out of range") {
    CHECK_THROWS_AS(t_ind_rooted(make_graph(2, 1, {}), {5}, const_graphon(rat(1, 2))),
                    std::invalid_argument);
  }
}

TEST_CASE("eval_quantum") {
  QuantumGraph one = QuantumGraph::single(Graph{1, 0, 0}, Basis::ind);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(eval_quantum(one, random_step_graphon(rng, 3, false)) == 1);

  // Goodman at constant p equals p(1-p)^2, exactly.
  for (long num = 0; num <= 6; ++num) {
    Rat p = rat(num, 6);
    Rat expect = p * (1 - p) * (1 - p);
    CHECK(eval_quantum(goodman_quantum(), const_graphon(p)) == expect);
  }

  // Evaluation after padding matches the headline paw density.
  StepGraphon w0 = complement(step_graphon_of(two_k2_graph()));
  QuantumGraph paw5 = lift(QuantumGraph::single(paw_graph(), Basis::ind), 5);
  CHECK(eval_quantum(paw5, w0) == rat(1, 32));
}

TEST_CASE("density reports carry kind and value") {
  StepGraphon w0 = complement(step_graphon_of(two_k2_graph()));
  DensityReport r = density_report(paw_graph(), w0, DensityKind::induced);
  CHECK(r.kind == DensityKind::induced);
  CHECK(r.value == rat(1, 32));
  CHECK(r.graph == paw_graph());

  DensityReport h = density_report(complete_graph(3), step_graphon_of(complete_graph(5)),
                                   DensityKind::hom);
  CHECK(h.value == rat(12, 25));

  DensityReport inj = density_report_injective(complete_graph(2), complete_graph(3));
  CHECK(inj.kind == DensityKind::injective);
  CHECK(inj.value == 1);

  DensityReport rooted = density_report_rooted(make_graph(2, 1, {{0, 1}}), {0},
                                               step_graphon_of(complete_graph(5)));
  CHECK(rooted.kind == DensityKind::rooted);
  CHECK(rooted.value == rat(4, 5));

  CHECK_THROWS_AS(density_report(paw_graph(), w0, DensityKind::injective), std::invalid_argument);
}

TEST_CASE("count_induced") {
  auto [c1, i1] = count_induced(complete_graph(2), complete_graph(3));
  CHECK(c1 == 3);
  CHECK(i1 == 1);

  auto [c2, i2] = count_induced(path_graph(3), cycle_graph(5));
  CHECK(c2 == 5);
  CHECK(i2 == rat(5, 10));

  auto [c3, i3] = count_induced(paw_graph(), paw_graph());
  CHECK(c3 == 1);
  CHECK(i3 == 1);

  // Hosts beyond the canonicalization limit use the backtracking matcher.
  auto [c4, i4] = count_induced(path_graph(3), cycle_graph(9));
  CHECK(c4 == 9);
  auto [c5, i5] = count_induced(cycle_graph(9), cycle_graph(9));
  CHECK(c5 == 1);
  CHECK(i5 == 1);
}

TEST_CASE("t_inj") {
  CHECK(t_inj(complete_graph(2), complete_graph(3)) == 1);
  CHECK(t_inj(complete_graph(3), cycle_graph(5)) == 0);

  // Injective and uniform densities are close (200 random pairs).
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    Graph h = random_graph(rng, 2 + rng() % 3);
    Graph g = random_graph(rng, h.n + static_cast<int>(rng() % (7 - h.n)), 0);
    Rat gap = abs(t_hom(h, step_graphon_of(g)) - t_inj(h, g));
    Rat limit = rat(static_cast<long>(h.n) * (h.n - 1) / 2, g.n);
    CHECK(gap <= limit);
  }
}

TEST_CASE("inducibility conversion") {
  CHECK(inducibility_from_tind(complete_graph(4), Rat(1)) == 1);
  CHECK(inducibility_from_tind(path_graph(3), rat(1, 4)) == rat(3, 4));
  CHECK(inducibility_from_tind(k112_graph(), rat(12, 125)) == rat(72, 125));
  CHECK(inducibility_from_tind(paw_graph(), rat(1, 32)) == rat(12, 32));
  CHECK_THROWS_AS(inducibility_from_tind(path_graph(3), Rat(2)), std::invalid_argument);
}

TEST_CASE("zeta and Moebius relations hold for densities") {
  std::mt19937 rng(888);
  for (int trial = 0; trial < 25; ++trial) {
    Graph h = random_graph(rng, 2 + rng() % 3);
    StepGraphon w = random_step_graphon(rng, 3, false);

    // t(h) = sum over supergraphs of t_ind.
    Rat via_ind(0);
    for (const auto& [f, c] : zeta_expand(h).terms) via_ind += c * t_ind_graph(f, w);
    CHECK(t_hom(h, w) == via_ind);

    // t_ind(h) = alternating sum over supergraphs of t.
    Rat via_hom(0);
    for (const auto& [f, c] : ind_expand(h).terms) via_hom += c * t_hom(f, w);
    CHECK(t_ind_graph(h, w) == via_hom);
  }
}

TEST_CASE("partition of unity") {
  std::mt19937 rng(999);
  for (int n = 2; n <= 5; ++n) {
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int trial = 0; trial < 5; ++trial) {
      StepGraphon w = random_step_graphon(rng, 3, trial % 2 == 0);
      Rat total(0);
      for (const Graph& h : enumerate_graphs(n))
        total += rat(fact, automorphism_count(h)) * t_ind_graph(h, w);
      CHECK(total == 1);
    }
  }
}

TEST_CASE("densities stay in [0,1]") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 40; ++trial) {
    Graph h = random_graph(rng, 1 + rng() % 5);
    StepGraphon w = random_step_graphon(rng, 4, trial % 2 == 0);
    for (const Rat& v : {t_hom(h, w), t_ind_graph(h, w)}) {
      CHECK(sgn(v) >= 0);
      CHECK(v <= 1);
    }
  }
}

TEST_CASE("step graphon file round trip") {
  StepGraphon w0 = complement(step_graphon_of(two_k2_graph()));
  std::string text = save_step_graphon(w0);
  std::istringstream in(text);
  StepGraphon back = load_step_graphon(in);
  CHECK(back.weights == w0.weights);
  CHECK(back.values.a == w0.values.a);

  std::istringstream bad1("parts: 1/2 1/2\n0 1\n");
  CHECK_THROWS_AS(load_step_graphon(bad1), ParseError);
  std::istringstream bad2("weights: 1\n0\n");
  CHECK_THROWS_AS(load_step_graphon(bad2), ParseError);
  std::istringstream bad3("parts: 1/2 1/3\n0 1\n1 0\n");
  CHECK_THROWS_AS(load_step_graphon(bad3), ParseError);
}

TEST_CASE("builtin graphons") {
  CHECK(is_builtin_graphon("k5"));
  CHECK(is_builtin_graphon("complement(k2uk2)"));
  CHECK(is_builtin_graphon("paley13"));
  CHECK(is_builtin_graphon("const 1/2"));
  CHECK_FALSE(is_builtin_graphon("w.graphon"));

  CHECK(t_ind_graph(paw_graph(), builtin_graphon("complement(k2uk2)")) == rat(1, 32));
  CHECK(builtin_graphon("const 1/3").values.at(0, 0) == rat(1, 3));
  CHECK(builtin_graphon("paley5").parts() == 5);
  CHECK_THROWS_AS(builtin_graphon("paley9"), std::invalid_argument);   // prime power
  CHECK_THROWS_AS(builtin_graphon("paley7"), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(builtin_graphon("nope"), ParseError);
}

TEST_CASE("quadratic residue graphs") {
  // QR(5) is the 5-cycle.
  auto adj5 = quadratic_residue_adjacency(5);
  Graph c5{5, 0, 0};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (adj5[i][j]) c5.set_edge(i, j);
  CHECK(is_isomorphic(c5, cycle_graph(5)));

  // Paley graphs are self-complementary and regular of degree (q-1)/2.
  for (int q : {5, 13, 17}) {
    auto adj = quadratic_residue_adjacency(q);
    for (int i = 0; i < q; ++i) {
      int deg = 0;
      for (int j = 0; j < q; ++j) deg += adj[i][j];
      CHECK(deg == (q - 1) / 2);
    }
  }

  // t_ind(P4; QR(5)) against a direct 5^4 map count.
  StepGraphon w = step_graphon_of(adj5);
  long long hits = 0;
  Graph p4 = path_graph(4);
  int idx[4];
  for (idx[0] = 0; idx[0] < 5; ++idx[0])
    for (idx[1] = 0; idx[1] < 5; ++idx[1])
      for (idx[2] = 0; idx[2] < 5; ++idx[2])
        for (idx[3] = 0; idx[3] < 5; ++idx[3]) {
          bool ok = true;
          for (int u = 0; u < 4 && ok; ++u)
            for (int v = u + 1; v < 4 && ok; ++v) {
              bool adj_uv = idx[u] != idx[v] && adj5[idx[u]][idx[v]];
              if (p4.edge(u, v) != adj_uv) ok = false;
            }
          if (ok) ++hits;
        }
  CHECK(t_ind_graph(p4, w) == Rat(static_cast<long>(hits)) / 625);
}
