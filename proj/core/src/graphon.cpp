#include "flagcert/graphon.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flagcert/notation.hpp"

namespace flagcert {

StepGraphon::StepGraphon(std::vector<Rat> w, RatMatrix v) : weights(std::move(w)), values(std::move(v)) {
  if (weights.empty()) throw std::invalid_argument("StepGraphon: no parts");
  Rat total(0);
  for (const Rat& wt : weights) {
    if (sgn(wt) <= 0) throw std::invalid_argument("StepGraphon: part weights must be positive");
    total += wt;
  }
  if (total != 1) throw std::invalid_argument("StepGraphon: part weights must sum to 1");
  int p = parts();
  if (values.rows != p || values.cols != p) throw std::invalid_argument("StepGraphon: value matrix size mismatch");
  if (!values.is_symmetric()) throw std::invalid_argument("StepGraphon: value matrix not symmetric");
  for (const Rat& x : values.a)
    if (sgn(x) < 0 || x > 1) throw std::invalid_argument("StepGraphon: values must lie in [0,1]");
}

bool StepGraphon::zero_one() const {
  for (const Rat& x : values.a)
    if (sgn(x) != 0 && x != 1) return false;
  return true;
}

namespace {

DensityReport checked_report(const Graph& g, DensityKind kind, Rat value) {
  if (sgn(value) < 0 || value > 1) throw std::logic_error("density outside [0,1]");
  return DensityReport{g, kind, std::move(value)};
}

}  // namespace

DensityReport density_report(const Graph& h, const StepGraphon& w, DensityKind kind) {
  switch (kind) {
    case DensityKind::hom:
      return checked_report(h, kind, t_hom(h, w));
    case DensityKind::induced:
      return checked_report(h, kind, t_ind_graph(h, w));
    default:
      throw std::invalid_argument("density_report: kind needs a host graph or an assignment");
  }
}

DensityReport density_report_injective(const Graph& h, const Graph& host) {
  return checked_report(h, DensityKind::injective, t_inj(h, host));
}

DensityReport density_report_rooted(const Graph& f, const std::vector<int>& psi,
                                    const StepGraphon& w) {
  return checked_report(f, DensityKind::rooted, t_ind_rooted(f, psi, w));
}

StepGraphon step_graphon_of(const Graph& g) {
  int n = g.n;
  std::vector<Rat> w(n, rat(1, n));
  RatMatrix v(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.at(i, j) = Rat(g.edge(i, j) ? 1 : 0);
  return StepGraphon(std::move(w), std::move(v));
}

StepGraphon step_graphon_of(const std::vector<std::vector<int>>& adjacency) {
  int n = static_cast<int>(adjacency.size());
  if (n < 1) throw std::invalid_argument("step_graphon_of: empty adjacency");
  std::vector<Rat> w(n, rat(1, n));
  RatMatrix v(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adjacency[i].size()) != n)
      throw std::invalid_argument("step_graphon_of: ragged adjacency");
    for (int j = 0; j < n; ++j) v.at(i, j) = Rat(adjacency[i][j] ? 1 : 0);
  }
  return StepGraphon(std::move(w), std::move(v));
}

StepGraphon complement(const StepGraphon& w) {
  RatMatrix v = w.values;
  for (Rat& x : v.a) x = 1 - x;
  return StepGraphon(w.weights, std::move(v));
}

namespace {

// Shared enumeration core: sums the product of edge factors (and non-edge
// factors when `induced`) over all assignments of parts to the free
// vertices, pruning branches whose partial product is already zero.
Rat density_sum(const Graph& h, const StepGraphon& w, bool induced, const std::vector<int>& pinned) {
  int n = h.n, p = w.parts();
  int first_free = static_cast<int>(pinned.size());
  std::vector<int> part(n, 0);
  for (int i = 0; i < first_free; ++i) {
    if (pinned[i] < 0 || pinned[i] >= p) throw std::invalid_argument("density: part index out of range");
    part[i] = pinned[i];
  }

  // Factor contributed by assigning vertex v while u < v are set.
  auto pair_factor = [&](int u, int v) -> Rat {
    const Rat& val = w.values.at(part[u], part[v]);
    if (h.edge(u, v)) return val;
    return induced ? Rat(1 - val) : Rat(1);
  };

  Rat base(1);
  for (int v = 1; v < first_free; ++v)
    for (int u = 0; u < v; ++u) {
      base *= pair_factor(u, v);
      if (sgn(base) == 0) return Rat(0);
    }

  Rat total(0);
  std::vector<Rat> partial(n + 1, Rat(0));
  partial[first_free] = base;
  int v = first_free;
  if (v == n) return base;
  std::vector<int> choice(n, -1);
  while (v >= first_free) {
    if (++choice[v] == p) {
      choice[v] = -1;
      --v;
      continue;
    }
    part[v] = choice[v];
    Rat f = partial[v] * w.weights[part[v]];
    for (int u = 0; u < v && sgn(f) != 0; ++u) f *= pair_factor(u, v);
    if (sgn(f) == 0) continue;
    if (v == n - 1) {
      total += f;
    } else {
      partial[v + 1] = f;
      ++v;
    }
  }
  return total;
}

}  // namespace

Rat t_hom(const Graph& h, const StepGraphon& w) { return density_sum(h, w, false, {}); }

Rat t_ind_graph(const Graph& h, const StepGraphon& w) { return density_sum(h, w, true, {}); }

Rat t_ind_rooted(const Graph& f, const std::vector<int>& psi, const StepGraphon& w) {
  if (static_cast<int>(psi.size()) != f.k)
    throw std::invalid_argument("t_ind_rooted: assignment size must equal the label count");
  return density_sum(f, w, true, psi);
}

Rat eval_rooted(const QuantumGraph& q, const std::vector<int>& psi, const StepGraphon& w) {
  Rat total(0);
  for (const auto& [g, c] : q.terms) total += c * t_ind_rooted(g, psi, w);
  return total;
}

Rat eval_quantum(const QuantumGraph& q, const StepGraphon& w) {
  if (q.k != 0) throw std::invalid_argument("eval_quantum: labeled quantum graph");
  Rat total(0);
  for (const auto& [g, c] : q.terms)
    total += c * (q.basis == Basis::plain ? t_hom(g, w) : t_ind_graph(g, w));
  return total;
}

namespace {

// Label-free isomorphism for graphs beyond the canonicalization limit:
// backtracking assignment with degree compatibility.
bool isomorphic_backtrack(const Graph& a, const Graph& b) {
  int n = a.n;
  std::vector<int> deg_a(n, 0), deg_b(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) {
        if (a.edge(u, v)) ++deg_a[u];
        if (b.edge(u, v)) ++deg_b[u];
      }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int u = order[depth];
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || deg_a[u] != deg_b[cand]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d)
        if (a.edge(u, order[d]) != b.edge(cand, img[order[d]])) ok = false;
      if (!ok) continue;
      img[u] = cand;
      used[cand] = true;
      if (self(self, depth + 1)) return true;
      used[cand] = false;
      img[u] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::pair<long long, Rat> count_induced(const Graph& h, const Graph& g) {
  if (h.n > g.n) throw std::invalid_argument("count_induced: pattern larger than host");
  if (g.n > kMaxVertices) throw std::invalid_argument("count_induced: host too large");
  int nh = h.n, ng = g.n;

  uint64_t h_key = 0;
  bool use_canonical = nh <= kMaxCanonicalVertices;
  Graph h_plain = h;
  h_plain.k = 0;
  if (use_canonical) h_key = canonical(h_plain).bits;

  long long count = 0;
  std::vector<int> subset(nh);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    Graph induced{nh, 0, 0};
    for (int i = 0; i < nh; ++i)
      for (int j = i + 1; j < nh; ++j)
        if (g.edge(subset[i], subset[j])) induced.set_edge(i, j);
    bool match = use_canonical ? canonical(induced).bits == h_key : isomorphic_backtrack(h_plain, induced);
    if (match) ++count;

    int i = nh - 1;
    while (i >= 0 && subset[i] == ng - nh + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < nh; ++j) subset[j] = subset[j - 1] + 1;
  }

  // count / C(ng, nh)
  Rat binom(1);
  for (int i = 0; i < nh; ++i) binom *= rat(ng - i, i + 1);
  Rat share = Rat(static_cast<long>(count)) / binom;
  return {count, share};
}

Rat t_inj(const Graph& h, const Graph& g) {
  if (h.n > g.n) throw std::invalid_argument("t_inj: pattern larger than host");
  int nh = h.n, ng = g.n;
  long long hits = 0;
  std::vector<int> img(nh, -1);
  std::vector<bool> used(ng, false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == nh) {
      ++hits;
      return;
    }
    for (int cand = 0; cand < ng; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (h.edge(u, v) && !g.edge(img[u], cand)) ok = false;
      if (!ok) continue;
      img[v] = cand;
      used[cand] = true;
      self(self, v + 1);
      used[cand] = false;
    }
  };
  rec(rec, 0);
  long long maps = 1;
  for (int i = 0; i < nh; ++i) maps *= ng - i;
  Rat r(static_cast<long>(hits));
  r /= static_cast<long>(maps);
  return r;
}

Rat inducibility_from_tind(const Graph& h, const Rat& tind) {
  if (sgn(tind) < 0 || tind > 1) throw std::invalid_argument("inducibility_from_tind: t_ind outside [0,1]");
  Graph plain = h;
  plain.k = 0;
  long aut = automorphism_count(plain);
  long fact = 1;
  for (int i = 2; i <= h.n; ++i) fact *= i;
  return tind * rat(fact, aut);
}

StepGraphon load_step_graphon(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("step graphon: empty input");
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "parts:") throw ParseError("step graphon: missing 'parts:' header");
  std::vector<Rat> weights;
  std::string tok;
  while (hs >> tok) weights.push_back(parse_rat(tok));
  if (weights.empty()) throw ParseError("step graphon: no part weights");
  int p = static_cast<int>(weights.size());
  RatMatrix v(p, p);
  for (int i = 0; i < p; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("step graphon: missing value row " + std::to_string(i + 1));
    std::istringstream ls(line);
    for (int j = 0; j < p; ++j) {
      if (!(ls >> tok)) throw ParseError("step graphon: short value row " + std::to_string(i + 1));
      v.at(i, j) = parse_rat(tok);
    }
  }
  try {
    return StepGraphon(std::move(weights), std::move(v));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("step graphon: ") + e.what());
  }
}

StepGraphon load_step_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("step graphon: cannot open '" + path + "'");
  return load_step_graphon(in);
}

std::string save_step_graphon(const StepGraphon& w) {
  std::string out = "parts:";
  for (const Rat& x : w.weights) out += " " + rat_str(x);
  out += "\n";
  for (int i = 0; i < w.parts(); ++i) {
    for (int j = 0; j < w.parts(); ++j) {
      if (j) out += " ";
      out += rat_str(w.values.at(i, j));
    }
    out += "\n";
  }
  return out;
}

std::vector<std::vector<int>> quadratic_residue_adjacency(int q) {
  if (q < 5 || q > 17) throw std::invalid_argument("paley: q must be between 5 and 17");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("paley: q must be prime");
  if (q % 4 != 1) throw std::invalid_argument("paley: q must be congruent to 1 mod 4");
  std::vector<bool> residue(q, false);
  for (int x = 1; x < q; ++x) residue[(x * x) % q] = true;
  std::vector<std::vector<int>> adj(q, std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j && residue[((i - j) % q + q) % q]) adj[i][j] = 1;
  return adj;
}

bool is_builtin_graphon(const std::string& spec) {
  if (spec == "k5" || spec == "k2uk2") return true;
  if (spec.rfind("paley", 0) == 0) return true;
  if (spec.rfind("const", 0) == 0) return true;
  if (spec.rfind("complement(", 0) == 0 && spec.back() == ')') return true;
  return false;
}

StepGraphon builtin_graphon(const std::string& spec) {
  if (spec == "k5") return step_graphon_of(complete_graph(5));
  if (spec == "k2uk2") return step_graphon_of(two_k2_graph());
  if (spec.rfind("complement(", 0) == 0 && spec.back() == ')')
    return complement(builtin_graphon(spec.substr(11, spec.size() - 12)));
  if (spec.rfind("paley", 0) == 0) {
    int q;
    try {
      q = std::stoi(spec.substr(5));
    } catch (...) {
      throw ParseError("builtin graphon: bad paley parameter in '" + spec + "'");
    }
    return step_graphon_of(quadratic_residue_adjacency(q));
  }
  if (spec.rfind("const", 0) == 0) {
    Rat p = parse_rat(spec.substr(5));
    if (sgn(p) < 0 || p > 1) throw ParseError("builtin graphon: constant outside [0,1]");
    RatMatrix v(1, 1);
    v.at(0, 0) = p;
    return StepGraphon({Rat(1)}, std::move(v));
  }
  throw ParseError("builtin graphon: unknown spec '" + spec + "'");
}

}  // namespace flagcert
