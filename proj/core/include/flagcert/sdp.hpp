#ifndef FLAGCERT_SDP_HPP
#define FLAGCERT_SDP_HPP

#include <map>
#include <string>
#include <vector>

#include "flagcert/basis.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/quantum.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// One PSD block: a flag basis together with, per unordered basis pair
// (u <= v), the coefficient of each n-vertex class in [[ f_u f_v ]].
struct SdpBlock {
  FlagBasis basis;
  std::vector<std::vector<std::map<int, Rat>>> coeffs;  // coeffs[u][v-u]

  int dim() const { return static_cast<int>(basis.elements.size()); }
};

// minimize objective . x  subject to  sum_i F_i x_i - F_0 >= 0, one variable
// per n-vertex class, one block per flag basis plus a diagonal block pinning
// the normalization sum_i (n!/|Aut(H_i)|) x_i = 1.
struct SdpProblem {
  int n = 0;
  std::vector<Graph> classes;
  std::vector<Rat> objective;
  std::vector<Rat> norm_coeffs;
  std::vector<SdpBlock> blocks;
};

// Coefficients of -Ind(h) padded to n vertices: minimizing this maximizes
// the induced density, so reported bounds are negated.
std::vector<Rat> objective_for_inducibility(const Graph& h, int n);

// The triangle/edge density combination whose minimum is 0; representable
// from n = 4 on (its 4-vertex term cannot live on fewer vertices).
std::vector<Rat> objective_goodman(int n);

// Flag bases for every k <= l and every type on k vertices (deduplicated
// across relabelings when dedup_types), flags on floor((n+k)/2) vertices,
// optionally symmetry-split and restricted against extremal graphons.
// Empty bases are dropped.
std::vector<FlagBasis> build_bases(int n, int l, bool dedup_types, bool split,
                                   const std::vector<StepGraphon>& w0s);

SdpProblem assemble(std::vector<Rat> objective, std::vector<FlagBasis> bases, int n);

// Sparse SDPA emission: variable count, block count, block sizes (the
// normalization block is diagonal, written negative), the objective row,
// then one "matno blkno i j value" line per upper-triangle nonzero, with
// matno 0 holding the constant matrix.
std::string emit_sdpa(const SdpProblem& p);

// Token-level SDPA reader for round trips and golden checks.
struct SdpaFile {
  long variables = 0;
  std::vector<long> block_sizes;
  std::vector<std::string> objective;
  struct Entry {
    long mat, blk, i, j;
    std::string value;
  };
  std::vector<Entry> entries;
};
SdpaFile parse_sdpa(const std::string& text);
std::string render_sdpa(const SdpaFile& f);

// CSDP-style solution file: dual vector on the first line, then
// "matno blkno i j value" entries; matno 2 carries the PSD matrix blocks.
struct SolverSolution {
  std::vector<double> x;                         // one value per class
  std::vector<std::vector<double>> y_blocks;     // flag blocks then the normalization block, row-major
  double objective = 0.0;                        // objective . x
};
SolverSolution parse_solution(const std::string& text, const SdpProblem& p);

// Pairs the solver's PSD blocks with the flag vectors they were built
// against. negate_bound flips the sign for maximization targets.
FloatCertificate extract_certificate(const SolverSolution& s, const SdpProblem& p,
                                     const std::string& name, const Graph& target,
                                     bool negate_bound);

// Sidecar emitted next to a problem so solutions can be ingested later
// without the reduction inputs.
struct SdpManifest {
  std::string objective_kind;  // "inducibility" or "goodman"
  std::string target;          // graph string when inducibility
  std::string name;
  int n = 0;
  int l = 0;
  bool negate_bound = true;
  struct Block {
    int k = 0;
    int m = 0;
    std::string sigma;
    std::string parity;
    std::vector<std::string> flags;
  };
  std::vector<Block> blocks;
};

SdpManifest make_manifest(const SdpProblem& p, const std::string& objective_kind,
                          const std::string& target, const std::string& name, int l);
std::string manifest_to_json(const SdpManifest& m);
SdpManifest manifest_from_json(const std::string& text);

// Rebuilds the problem skeleton (classes, objective, bases; no pair
// coefficients) that a manifest describes.
SdpProblem problem_from_manifest(const SdpManifest& m);

}  // namespace flagcert

#endif
