#ifndef FLAGCERT_GRAPHON_HPP
#define FLAGCERT_GRAPHON_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "flagcert/graph.hpp"
#include "flagcert/quantum.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// Step function on [0,1]^2: finitely many parts with positive rational
// weights summing to 1 and a symmetric rational value matrix in [0,1].
// Diagonal values are meaningful (complements set them to 1).
struct StepGraphon {
  std::vector<Rat> weights;
  RatMatrix values;

  StepGraphon(std::vector<Rat> w, RatMatrix v);  // validates
  int parts() const { return static_cast<int>(weights.size()); }
  bool zero_one() const;
};

enum class DensityKind { hom, induced, injective, rooted };

// One evaluated density, tagged with how it was computed.
struct DensityReport {
  Graph graph;
  DensityKind kind = DensityKind::induced;
  Rat value;
};

// Graphon densities (hom or induced kinds).
DensityReport density_report(const Graph& h, const StepGraphon& w, DensityKind kind);
// Injective density against a finite host.
DensityReport density_report_injective(const Graph& h, const Graph& host);
// Rooted density at a fixed label assignment.
DensityReport density_report_rooted(const Graph& f, const std::vector<int>& psi,
                                    const StepGraphon& w);

// n equal parts carrying the 0/1 adjacency of g, zero diagonal.
StepGraphon step_graphon_of(const Graph& g);
// Same, from a raw symmetric 0/1 adjacency matrix (sizes beyond the Graph
// limit, e.g. quadratic-residue graphs).
StepGraphon step_graphon_of(const std::vector<std::vector<int>>& adjacency);

// 1 - w, including the diagonal.
StepGraphon complement(const StepGraphon& w);

// Homomorphism density: expectation of the edge-value product over
// independent uniform part assignments. Exact.
Rat t_hom(const Graph& h, const StepGraphon& w);

// Induced density: edges contribute w, non-edges 1-w. Exact.
Rat t_ind_graph(const Graph& h, const StepGraphon& w);

// Induced density with the k labeled vertices pinned to parts psi[0..k-1]
// (their weight factors omitted). Exact.
Rat t_ind_rooted(const Graph& f, const std::vector<int>& psi, const StepGraphon& w);

// Rooted evaluation of an Ind-basis combination.
Rat eval_rooted(const QuantumGraph& q, const std::vector<int>& psi, const StepGraphon& w);

// Evaluation of an unlabeled quantum graph: t_hom per-term for the plain
// basis, t_ind for the Ind basis.
Rat eval_quantum(const QuantumGraph& q, const StepGraphon& w);

// Number of induced copies of h in g by subset enumeration, and the
// binomially normalized share i(h; g).
std::pair<long long, Rat> count_induced(const Graph& h, const Graph& g);

// Fraction of injective vertex maps that are homomorphisms.
Rat t_inj(const Graph& h, const Graph& g);

// i(h) from t_ind(h): factor |V(h)|! / |Aut(h)|.
Rat inducibility_from_tind(const Graph& h, const Rat& tind);

// File format: one "parts: w_1 ... w_p" header line, then p rows of p
// rationals.
StepGraphon load_step_graphon(std::istream& in);
StepGraphon load_step_graphon_file(const std::string& path);
std::string save_step_graphon(const StepGraphon& w);

// Quadratic-residue (Paley) graph on Z_q; q must be a prime = 1 mod 4.
std::vector<std::vector<int>> quadratic_residue_adjacency(int q);

// Builtins: "k5", "k2uk2", "complement(<builtin>)", "paley<q>", "const p/q".
StepGraphon builtin_graphon(const std::string& spec);
bool is_builtin_graphon(const std::string& spec);

}  // namespace flagcert

#endif
