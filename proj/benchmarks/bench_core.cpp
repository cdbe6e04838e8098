#include <benchmark/benchmark.h>

#include "flagcert/certificate.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/graphon.hpp"
#include "flagcert/quantum.hpp"
#include "flagcert/sdp.hpp"

using namespace flagcert;

namespace {

void BM_CanonicalForm7(benchmark::State& state) {
  // A fresh bit pattern every iteration keeps the memo cold.
  uint64_t bits = 0x155555;
  for (auto _ : state) {
    bits = (bits * 6364136223846793005ULL + 1442695040888963407ULL) & ((1u << 21) - 1);
    Graph g{7, 0, bits};
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm7);

void BM_EnumerateGraphs6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(6));
}
BENCHMARK(BM_EnumerateGraphs6);

void BM_ProductExpansion(benchmark::State& state) {
  // k = 1 flags on 4 vertices: 512 cross patterns per pair at 7 vertices.
  Graph f = make_graph(4, 1, {{0, 1}, {1, 2}, {2, 3}});
  Graph g = make_graph(4, 1, {{0, 1}, {0, 2}, {0, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(product_ind(f, g));
}
BENCHMARK(BM_ProductExpansion);

void BM_DensityK112(benchmark::State& state) {
  StepGraphon w = step_graphon_of(complete_graph(5));
  Graph h = k112_graph();
  for (auto _ : state) benchmark::DoNotOptimize(t_ind_graph(h, w));
}
BENCHMARK(BM_DensityK112);

void BM_VerifyPaw(benchmark::State& state) {
  Certificate cert = load_certificate_file(std::string(FLAGCERT_SOURCE_DIR) + "/certs/paw.cert");
  for (auto _ : state) benchmark::DoNotOptimize(verify(cert));
}
BENCHMARK(BM_VerifyPaw);

void BM_AssemblePawL1(benchmark::State& state) {
  for (auto _ : state) {
    SdpProblem p = assemble(objective_for_inducibility(paw_graph(), 5),
                            build_bases(5, 1, false, false, {}), 5);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_AssemblePawL1);

}  // namespace

BENCHMARK_MAIN();
