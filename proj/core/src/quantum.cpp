#include "flagcert/quantum.hpp"

#include <stdexcept>

#include "flagcert/notation.hpp"

namespace flagcert {

QuantumGraph QuantumGraph::single(const Graph& g, Basis basis, const Rat& coeff) {
  QuantumGraph q{g.k, basis, {}};
  q.add(canonical(g), coeff);
  return q;
}

void QuantumGraph::add(const Graph& canonical_g, const Rat& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms.emplace(canonical_g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && terms.empty()) {
    k = o.k;
    basis = o.basis;
  }
  if (k != o.k || basis != o.basis)
    throw std::invalid_argument("QuantumGraph: mixing label counts or bases");
  for (const auto& [g, c] : o.terms) add(g, c);
  return *this;
}

QuantumGraph& QuantumGraph::operator-=(const QuantumGraph& o) {
  QuantumGraph neg = o;
  neg *= Rat(-1);
  return *this += neg;
}

QuantumGraph& QuantumGraph::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms) coeff *= c;
  return *this;
}

int QuantumGraph::max_vertices() const {
  int m = 0;
  for (const auto& [g, c] : terms) m = std::max(m, g.n);
  return m;
}

Rat QuantumGraph::coeff(const Graph& canonical_g) const {
  auto it = terms.find(canonical_g);
  return it == terms.end() ? Rat(0) : it->second;
}

QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) { return a += b; }
QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b) { return a -= b; }
QuantumGraph operator*(const Rat& c, QuantumGraph a) { return a *= c; }

namespace {

// Pair indices where h has no edge.
std::vector<int> missing_pairs(const Graph& h) {
  std::vector<int> out;
  for (int i = 0; i < pair_count(h.n); ++i)
    if (!((h.bits >> i) & 1u)) out.push_back(i);
  return out;
}

QuantumGraph supergraph_sum(const Graph& h, Basis basis, bool alternate) {
  std::vector<int> missing = missing_pairs(h);
  if (missing.size() > 22) throw std::invalid_argument("supergraph expansion too large");
  QuantumGraph out = QuantumGraph::zero(h.k, basis);
  for (uint32_t mask = 0; mask < (1u << missing.size()); ++mask) {
    Graph f = h;
    for (size_t i = 0; i < missing.size(); ++i)
      if ((mask >> i) & 1u) f.bits |= uint64_t{1} << missing[i];
    int sign = alternate && (__builtin_popcount(mask) & 1) ? -1 : 1;
    out.add(canonical(f), Rat(sign));
  }
  return out;
}

}  // namespace

QuantumGraph ind_expand(const Graph& h) { return supergraph_sum(h, Basis::plain, true); }

QuantumGraph zeta_expand(const Graph& h) { return supergraph_sum(h, Basis::ind, false); }

namespace {

uint64_t label_part_bits(const Graph& g) {
  uint64_t out = 0;
  for (int u = 0; u < g.k; ++u)
    for (int v = u + 1; v < g.k; ++v)
      if (g.edge(u, v)) out |= uint64_t{1} << pair_index(u, v, g.k);
  return out;
}

// Common skeleton of the glued graph: f's vertices keep their positions,
// g's unlabeled part lands after f's.
Graph glue_base(const Graph& f, const Graph& g) {
  int k = f.k, a = f.n - f.k, b = g.n - g.k;
  Graph out{k + a + b, k, 0};
  for (int u = 0; u < f.n; ++u)
    for (int v = u + 1; v < f.n; ++v)
      if (f.edge(u, v)) out.set_edge(u, v);
  auto map_g = [&](int v) { return v < k ? v : v + a; };
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) out.set_edge(map_g(u), map_g(v));
  return out;
}

}  // namespace

Graph product_plain(const Graph& f, const Graph& g) {
  if (f.k != g.k) throw std::invalid_argument("product_plain: label count mismatch");
  return canonical(glue_base(f, g));
}

QuantumGraph product_ind(const Graph& f, const Graph& g) {
  if (f.k != g.k) throw std::invalid_argument("product_ind: label count mismatch");
  int k = f.k;
  if (label_part_bits(f) != label_part_bits(g)) return QuantumGraph::zero(k, Basis::ind);

  int a = f.n - k, b = g.n - k;
  Graph base = glue_base(f, g);
  // Cross pairs between the two unlabeled parts.
  std::vector<int> cross;
  cross.reserve(static_cast<size_t>(a) * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) cross.push_back(pair_index(k + i, k + a + j, base.n));

  QuantumGraph out = QuantumGraph::zero(k, Basis::ind);
  for (uint32_t mask = 0; mask < (1u << cross.size()); ++mask) {
    Graph h = base;
    for (size_t i = 0; i < cross.size(); ++i)
      if ((mask >> i) & 1u) h.bits |= uint64_t{1} << cross[i];
    out.add(canonical(h), Rat(1));
  }
  return out;
}

QuantumGraph product_ind(const QuantumGraph& f, const QuantumGraph& g) {
  if (f.k != g.k) throw std::invalid_argument("product_ind: label count mismatch");
  if (f.basis != Basis::ind || g.basis != Basis::ind)
    throw std::invalid_argument("product_ind: arguments must be in the Ind basis");
  QuantumGraph out = QuantumGraph::zero(f.k, Basis::ind);
  for (const auto& [gf, cf] : f.terms)
    for (const auto& [gg, cg] : g.terms) {
      QuantumGraph p = product_ind(gf, gg);
      Rat scale = cf * cg;
      for (const auto& [h, c] : p.terms) out.add(h, c * scale);
    }
  return out;
}

QuantumGraph lift(const QuantumGraph& q, int n_target) {
  if (q.basis != Basis::ind) throw std::invalid_argument("lift: Ind basis required");
  if (n_target > kMaxCanonicalVertices) throw std::invalid_argument("lift: target too large");
  QuantumGraph out = QuantumGraph::zero(q.k, Basis::ind);
  std::map<Graph, Rat> work = q.terms;
  while (!work.empty()) {
    // Map order puts the smallest vertex count first.
    auto it = work.begin();
    Graph h = it->first;
    Rat c = it->second;
    work.erase(it);
    if (sgn(c) == 0) continue;
    if (h.n > n_target) throw std::invalid_argument("lift: term larger than target");
    if (h.n == n_target) {
      out.add(h, c);
      continue;
    }
    for (uint32_t pattern = 0; pattern < (1u << h.n); ++pattern) {
      Graph g{h.n + 1, h.k, 0};
      for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
          if (h.edge(u, v)) g.set_edge(u, v);
      for (int u = 0; u < h.n; ++u)
        if ((pattern >> u) & 1u) g.set_edge(u, h.n);
      work[canonical(g)] += c;
    }
  }
  return out;
}

QuantumGraph unlabel(const QuantumGraph& q) {
  QuantumGraph out = QuantumGraph::zero(0, q.basis);
  for (const auto& [g, c] : q.terms) {
    Graph plain = g;
    plain.k = 0;
    out.add(canonical(plain), c);
  }
  return out;
}

QuantumGraph quadratic_form(const std::vector<QuantumGraph>& z, const RatMatrix& y, int n_target) {
  if (static_cast<int>(z.size()) != y.rows || y.rows != y.cols)
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  if (!y.is_symmetric()) throw std::invalid_argument("quadratic_form: matrix not symmetric");
  QuantumGraph out = QuantumGraph::zero(0, Basis::ind);
  for (size_t u = 0; u < z.size(); ++u)
    for (size_t v = u; v < z.size(); ++v) {
      Rat weight = y.at(static_cast<int>(u), static_cast<int>(v));
      if (u != v) weight *= 2;
      if (sgn(weight) == 0) continue;
      QuantumGraph p = product_ind(z[u], z[v]);
      if (p.is_zero()) continue;
      QuantumGraph contrib = unlabel(lift(p, n_target));
      for (const auto& [g, c] : contrib.terms) out.add(g, c * weight);
    }
  return out;
}

std::string combo_str(const QuantumGraph& q) {
  if (q.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : q.terms) {
    Rat ac = abs(c);
    if (first) {
      out += (sgn(c) < 0 ? "-" : "");
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += rat_str(ac) + "*" + format_graph(g);
    first = false;
  }
  return out;
}

QuantumGraph parse_combo(const std::string& text, Basis basis) {
  // Split into signed terms at depth-zero +/- signs.
  struct Term {
    int sign;
    std::string body;
  };
  std::vector<Term> parts;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&](int next_sign) {
    bool blank = true;
    for (char ch : cur)
      if (!isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) parts.push_back({sign, cur});
    else if (!parts.empty())
      throw ParseError("combination: empty term");
    cur.clear();
    sign = next_sign;
  };
  for (char ch : text) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      flush(ch == '-' ? -1 : 1);
      continue;
    }
    cur += ch;
  }
  flush(1);
  if (parts.empty()) throw ParseError("combination: no terms");

  QuantumGraph q;
  bool started = false;
  for (const Term& t : parts) {
    size_t star = std::string::npos;
    int d = 0;
    for (size_t i = 0; i < t.body.size(); ++i) {
      if (t.body[i] == '{') ++d;
      if (t.body[i] == '}') --d;
      if (d == 0 && t.body[i] == '*') {
        star = i;
        break;
      }
    }
    Rat coeff(1);
    std::string gtext = t.body;
    if (star != std::string::npos) {
      coeff = parse_rat(t.body.substr(0, star));
      gtext = t.body.substr(star + 1);
    }
    Graph g = parse_graph(gtext);
    if (!started) {
      q = QuantumGraph::zero(g.k, basis);
      started = true;
    } else if (g.k != q.k) {
      throw ParseError("combination: mixed label counts");
    }
    q.add(canonical(g), Rat(t.sign) * coeff);
  }
  return q;
}

}  // namespace flagcert
