#ifndef FLAGCERT_QUANTUM_HPP
#define FLAGCERT_QUANTUM_HPP

#include <map>
#include <string>
#include <vector>

#include "flagcert/graph.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// Coordinate semantics of a quantum graph: coefficients over plain graphs
// (evaluated by homomorphism density) or over Ind(...) terms (evaluated by
// induced density).
enum class Basis { plain, ind };

// Finite rational linear combination of canonical labeled graphs sharing one
// label count. Zero coefficients are never stored.
struct QuantumGraph {
  int k = 0;
  Basis basis = Basis::ind;
  std::map<Graph, Rat> terms;

  static QuantumGraph zero(int k, Basis basis) { return QuantumGraph{k, basis, {}}; }
  // Single term; canonicalizes g.
  static QuantumGraph single(const Graph& g, Basis basis, const Rat& coeff = Rat(1));

  // Merges a canonical term, dropping the entry if it cancels.
  void add(const Graph& canonical_g, const Rat& coeff);

  QuantumGraph& operator+=(const QuantumGraph& o);
  QuantumGraph& operator-=(const QuantumGraph& o);
  QuantumGraph& operator*=(const Rat& c);

  bool is_zero() const { return terms.empty(); }
  int max_vertices() const;
  Rat coeff(const Graph& canonical_g) const;
};

QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b);
QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b);
QuantumGraph operator*(const Rat& c, QuantumGraph a);

// Ind(h) written out over plain graphs: sum over supergraphs F of h on the
// same vertex set of (-1)^{|E(F)\E(h)|} F.
QuantumGraph ind_expand(const Graph& h);

// The plain graph h written in the Ind basis: sum of Ind(F) over supergraphs
// F of h on the same vertex set. Inverse of ind_expand.
QuantumGraph zeta_expand(const Graph& h);

// Gluing along the labels, unlabeled parts disjoint, multiple edges reduced.
Graph product_plain(const Graph& f, const Graph& g);

// Ind(f) * Ind(g) in the Ind basis: zero when the labeled parts differ,
// otherwise the sum over all edge patterns between the two unlabeled parts.
QuantumGraph product_ind(const Graph& f, const Graph& g);
QuantumGraph product_ind(const QuantumGraph& f, const QuantumGraph& g);

// Pads every term up to n_target vertices, one unlabeled vertex at a time,
// splitting over attachment patterns. Preserves evaluation against 0/1 step
// graphons.
QuantumGraph lift(const QuantumGraph& q, int n_target);

// Drops labels and merges classes; coefficients carry over unchanged.
QuantumGraph unlabel(const QuantumGraph& q);

// sum_{u,v} y(u,v) * unlabel(lift(z_u * z_v, n_target)), exact.
QuantumGraph quadratic_form(const std::vector<QuantumGraph>& z, const RatMatrix& y, int n_target);

// Linear-combination notation "c*{..}_{n,k} + c*{..}_{n,k} - ...": used by
// certificate files and SDP manifests. Terms are canonicalized.
std::string combo_str(const QuantumGraph& q);
QuantumGraph parse_combo(const std::string& text, Basis basis);

}  // namespace flagcert

#endif
