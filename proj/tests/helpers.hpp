#ifndef FLAGCERT_TESTS_HELPERS_HPP
#define FLAGCERT_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "flagcert/graph.hpp"
#include "flagcert/graphon.hpp"
#include "flagcert/rational.hpp"

namespace flagcert::testing {

inline Graph random_graph(std::mt19937& rng, int n, int k = 0) {
  Graph g{n, k, 0};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.set_edge(u, v);
  return g;
}

// Step graphon with random rational weights and values; 0/1 values when
// zero_one is set (diagonal included), otherwise arbitrary rationals in [0,1].
inline StepGraphon random_step_graphon(std::mt19937& rng, int max_parts, bool zero_one) {
  int p = 1 + static_cast<int>(rng() % max_parts);
  std::vector<long> raw(p);
  long total = 0;
  for (long& r : raw) {
    r = 1 + static_cast<long>(rng() % 8);
    total += r;
  }
  std::vector<Rat> weights;
  for (long r : raw) weights.push_back(rat(r, total));
  RatMatrix values(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      Rat v;
      if (zero_one) {
        v = Rat(static_cast<long>(rng() % 2));
      } else {
        long den = 1 + static_cast<long>(rng() % 9);
        long num = static_cast<long>(rng() % (den + 1));
        v = rat(num, den);
      }
      values.at(i, j) = v;
      values.at(j, i) = v;
    }
  return StepGraphon(std::move(weights), std::move(values));
}

inline std::vector<int> random_assignment(std::mt19937& rng, int k, int parts) {
  std::vector<int> psi(k);
  for (int& x : psi) x = static_cast<int>(rng() % parts);
  return psi;
}

inline Rat random_small_rat(std::mt19937& rng) {
  long num = static_cast<long>(rng() % 11) - 5;
  long den = 1 + static_cast<long>(rng() % 6);
  return rat(num, den);
}

}  // namespace flagcert::testing

#endif
