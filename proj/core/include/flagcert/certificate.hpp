#ifndef FLAGCERT_CERTIFICATE_HPP
#define FLAGCERT_CERTIFICATE_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "flagcert/graph.hpp"
#include "flagcert/quantum.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// Exact positive-semidefiniteness decision. When the matrix passes, l and d
// hold a unit-lower-triangular L and pivots with M = L diag(d) L^T; when it
// fails, witness is a rational vector with v^T M v < 0.
struct PsdResult {
  bool psd = false;
  std::vector<Rat> witness;
  std::vector<std::vector<Rat>> l;
  std::vector<Rat> d;
};

PsdResult psd_check_exact(const RatMatrix& m);

struct CertBlock {
  int k = 0;
  std::vector<QuantumGraph> z;  // Ind-basis combinations, one type per block
  RatMatrix y;                  // symmetric rational, dim == |z|
};

// A claimed bound together with the sum-of-squares data that proves it:
// bound - Ind(target), expanded over the n-vertex classes, must dominate
// sum_blocks [[ z^T Y z ]] coefficientwise with every Y positive
// semidefinite.
struct Certificate {
  std::string name;
  Graph target;  // unlabeled
  int n = 0;
  Rat bound;
  std::vector<CertBlock> blocks;
};

Certificate load_certificate(const std::string& text);
Certificate load_certificate_file(const std::string& path);
std::string save_certificate(const Certificate& c);

struct VerificationReport {
  bool accepted = false;
  std::vector<PsdResult> block_psd;
  std::vector<Graph> classes;  // enumerate_graphs(n) order
  std::vector<Rat> slack;      // alpha_i - beta_i, exact, one per class
  int worst_index = -1;
  std::string failure;  // empty when accepted
};

// All-exact check: PSD of every block, then coefficientwise dominance of the
// quadratic-form expansion by bound - Ind(target) over the n-vertex classes.
VerificationReport verify(const Certificate& c);

// Solver output paired with the flag vectors it was built against; Y entries
// still floating point.
struct FloatCertBlock {
  int k = 0;
  std::vector<QuantumGraph> z;
  int dim = 0;
  std::vector<double> y;  // row-major dim x dim
};

struct FloatCertificate {
  std::string name;
  Graph target;
  int n = 0;
  double bound = 0.0;
  std::vector<FloatCertBlock> blocks;
};

// Entries pinned to exact values during rounding; keys are
// (block, row, col), 0-based, row <= col.
struct Pins {
  std::map<std::tuple<int, int, int>, Rat> entries;
  std::optional<Rat> bound;
};

// Pin file: lines "bound p/q" or "<block> <row> <col> <p/q>", 1-based.
Pins parse_pins(const std::string& text);

// Continued-fraction rounding of every free Y entry (denominators capped),
// pinned entries forced, symmetry enforced. The result is judged solely by
// verify; nothing is repaired here.
Certificate round_to_rational(const FloatCertificate& fc, long long den_cap, const Pins& pins);

}  // namespace flagcert

#endif
