#include "flagcert/sdp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flagcert/notation.hpp"

namespace flagcert {

std::vector<Rat> objective_for_inducibility(const Graph& h, int n) {
  if (h.k != 0) throw std::invalid_argument("objective: target must be unlabeled");
  if (h.n > n || n > 7) throw std::invalid_argument("objective: target does not fit the expansion size");
  QuantumGraph q = lift(QuantumGraph::single(h, Basis::ind), n);
  std::vector<Graph> classes = enumerate_graphs(n);
  std::vector<Rat> alpha(classes.size(), Rat(0));
  for (size_t i = 0; i < classes.size(); ++i) alpha[i] = -q.coeff(classes[i]);
  return alpha;
}

std::vector<Rat> objective_goodman(int n) {
  if (n < 4 || n > 7)
    throw std::invalid_argument("objective: the Goodman combination needs 4 <= n <= 7");
  QuantumGraph q = lift(zeta_expand(complete_graph(3)), n);
  q -= Rat(2) * lift(zeta_expand(two_k2_graph()), n);
  q += lift(zeta_expand(complete_graph(2)), n);
  std::vector<Graph> classes = enumerate_graphs(n);
  std::vector<Rat> alpha(classes.size(), Rat(0));
  for (size_t i = 0; i < classes.size(); ++i) alpha[i] = q.coeff(classes[i]);
  return alpha;
}

std::vector<FlagBasis> build_bases(int n, int l, bool dedup_types, bool split,
                                   const std::vector<StepGraphon>& w0s) {
  if (l < 1 || l > n || n > 7) throw std::invalid_argument("build_bases: need 1 <= l <= n <= 7");
  if (l > 4) throw std::invalid_argument("build_bases: types beyond 4 vertices are not supported");
  std::vector<FlagBasis> out;
  for (int k = 1; k <= l; ++k) {
    int m = (n + k) / 2;
    for (const TypeSigma& sigma : enumerate_types(k, dedup_types)) {
      FlagBasis full = full_flag_basis(sigma, m);
      std::vector<FlagBasis> parts;
      if (split) {
        auto [plus, minus] = symmetry_split(full);
        parts.push_back(std::move(plus));
        parts.push_back(std::move(minus));
      } else {
        parts.push_back(std::move(full));
      }
      for (FlagBasis& part : parts) {
        if (!w0s.empty()) part = delta_restrict(part, w0s);
        if (!part.elements.empty()) out.push_back(std::move(part));
      }
    }
  }
  return out;
}

SdpProblem assemble(std::vector<Rat> objective, std::vector<FlagBasis> bases, int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("assemble: expansion size out of range");
  SdpProblem p;
  p.n = n;
  p.classes = enumerate_graphs(n);
  if (objective.size() != p.classes.size())
    throw std::invalid_argument("assemble: objective length does not match the class count");
  p.objective = std::move(objective);

  size_t total_elements = 0;
  for (const FlagBasis& b : bases) total_elements += b.elements.size();
  if (total_elements == 0) throw std::invalid_argument("assemble: at least one flag block required");

  std::map<Graph, int> index;
  for (size_t i = 0; i < p.classes.size(); ++i) index[p.classes[i]] = static_cast<int>(i);

  for (FlagBasis& b : bases) {
    int k = b.sigma.n;
    int prod = 2 * b.m - k;
    if (prod != n && prod != n - 1)
      throw std::invalid_argument("assemble: basis flag size is incompatible with the expansion size");
    SdpBlock block;
    block.basis = std::move(b);
    int dim = block.dim();
    block.coeffs.resize(dim);
    for (int u = 0; u < dim; ++u) {
      block.coeffs[u].resize(dim - u);
      for (int v = u; v < dim; ++v) {
        QuantumGraph q = unlabel(
            lift(product_ind(block.basis.elements[u], block.basis.elements[v]), n));
        for (const auto& [g, coeff] : q.terms) block.coeffs[u][v - u][index.at(g)] = coeff;
      }
    }
    p.blocks.push_back(std::move(block));
  }

  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  p.norm_coeffs.reserve(p.classes.size());
  for (const Graph& g : p.classes) p.norm_coeffs.push_back(rat(fact, automorphism_count(g)));
  return p;
}

namespace {

SdpaFile build_sdpa_file(const SdpProblem& p) {
  SdpaFile f;
  f.variables = static_cast<long>(p.classes.size());
  for (const SdpBlock& b : p.blocks) f.block_sizes.push_back(b.dim());
  f.block_sizes.push_back(-2);  // normalization block, diagonal
  for (const Rat& c : p.objective) f.objective.push_back(decimal_string(c));

  long norm_blk = static_cast<long>(p.blocks.size()) + 1;
  // Constant matrix: x_{K_1} - 1 >= 0 and 1 - x_{K_1} >= 0.
  f.entries.push_back({0, norm_blk, 1, 1, "1"});
  f.entries.push_back({0, norm_blk, 2, 2, "-1"});
  for (size_t i = 0; i < p.classes.size(); ++i) {
    long mat = static_cast<long>(i) + 1;
    for (size_t bi = 0; bi < p.blocks.size(); ++bi) {
      const SdpBlock& b = p.blocks[bi];
      for (int u = 0; u < b.dim(); ++u)
        for (int v = u; v < b.dim(); ++v) {
          auto it = b.coeffs[u][v - u].find(static_cast<int>(i));
          if (it == b.coeffs[u][v - u].end() || sgn(it->second) == 0) continue;
          f.entries.push_back({mat, static_cast<long>(bi) + 1, u + 1, v + 1, decimal_string(it->second)});
        }
    }
    f.entries.push_back({mat, norm_blk, 1, 1, decimal_string(p.norm_coeffs[i])});
    f.entries.push_back({mat, norm_blk, 2, 2, decimal_string(-p.norm_coeffs[i])});
  }
  return f;
}

}  // namespace

std::string render_sdpa(const SdpaFile& f) {
  std::string out = std::to_string(f.variables) + "\n";
  out += std::to_string(f.block_sizes.size()) + "\n";
  for (size_t i = 0; i < f.block_sizes.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(f.block_sizes[i]);
  }
  out += "\n";
  for (size_t i = 0; i < f.objective.size(); ++i) {
    if (i) out += " ";
    out += f.objective[i];
  }
  out += "\n";
  for (const SdpaFile::Entry& e : f.entries)
    out += std::to_string(e.mat) + " " + std::to_string(e.blk) + " " + std::to_string(e.i) + " " +
           std::to_string(e.j) + " " + e.value + "\n";
  return out;
}

std::string emit_sdpa(const SdpProblem& p) { return render_sdpa(build_sdpa_file(p)); }

SdpaFile parse_sdpa(const std::string& text) {
  std::istringstream in(text);
  SdpaFile f;
  long nblocks = 0;
  if (!(in >> f.variables)) throw ParseError("sdpa: missing variable count");
  if (!(in >> nblocks)) throw ParseError("sdpa: missing block count");
  for (long i = 0; i < nblocks; ++i) {
    long s;
    if (!(in >> s)) throw ParseError("sdpa: short block size list");
    f.block_sizes.push_back(s);
  }
  for (long i = 0; i < f.variables; ++i) {
    std::string v;
    if (!(in >> v)) throw ParseError("sdpa: short objective row");
    f.objective.push_back(v);
  }
  SdpaFile::Entry e;
  while (in >> e.mat) {
    if (!(in >> e.blk >> e.i >> e.j >> e.value)) throw ParseError("sdpa: truncated entry line");
    f.entries.push_back(e);
  }
  return f;
}

SolverSolution parse_solution(const std::string& text, const SdpProblem& p) {
  std::istringstream in(text);
  std::string first_line;
  if (!std::getline(in, first_line)) throw ParseError("solution: empty file");
  SolverSolution sol;
  {
    std::istringstream fs(first_line);
    double v;
    while (fs >> v) sol.x.push_back(v);
  }
  if (sol.x.size() != p.classes.size())
    throw ParseError("solution: dual vector length " + std::to_string(sol.x.size()) +
                     ", expected " + std::to_string(p.classes.size()));

  std::vector<int> dims;
  for (const SdpBlock& b : p.blocks) dims.push_back(b.dim());
  dims.push_back(2);  // normalization block
  sol.y_blocks.resize(dims.size());
  for (size_t i = 0; i < dims.size(); ++i)
    sol.y_blocks[i].assign(static_cast<size_t>(dims[i]) * dims[i], 0.0);

  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long mat, blk, i, j;
    double v;
    if (!(ls >> mat >> blk >> i >> j >> v))
      throw ParseError("solution: malformed line " + std::to_string(lineno));
    if (mat != 1 && mat != 2)
      throw ParseError("solution: unknown matrix id on line " + std::to_string(lineno));
    if (mat != 2) continue;  // the slack matrix is not needed
    if (blk < 1 || blk > static_cast<long>(dims.size()))
      throw ParseError("solution: block index out of range on line " + std::to_string(lineno));
    int d = dims[blk - 1];
    if (i < 1 || j < 1 || i > d || j > d)
      throw ParseError("solution: entry index out of range on line " + std::to_string(lineno));
    std::vector<double>& y = sol.y_blocks[blk - 1];
    y[static_cast<size_t>(i - 1) * d + (j - 1)] = v;
    y[static_cast<size_t>(j - 1) * d + (i - 1)] = v;
  }

  double reported = 0.0;
  for (size_t i = 0; i < sol.x.size(); ++i) reported += p.objective[i].get_d() * sol.x[i];
  const std::vector<double>& norm = sol.y_blocks.back();
  double dual = norm[0] - norm[3];  // F_0 has +1 and -1 on the diagonal
  if (std::abs(reported - dual) > 1e-6)
    throw ParseError("solution: objective mismatch: primal " + std::to_string(reported) +
                     " vs dual " + std::to_string(dual));
  sol.objective = reported;
  return sol;
}

FloatCertificate extract_certificate(const SolverSolution& s, const SdpProblem& p,
                                     const std::string& name, const Graph& target,
                                     bool negate_bound) {
  FloatCertificate fc;
  fc.name = name;
  fc.target = target;
  fc.n = p.n;
  fc.bound = negate_bound ? -s.objective : s.objective;
  for (size_t bi = 0; bi < p.blocks.size(); ++bi) {
    FloatCertBlock b;
    b.k = p.blocks[bi].basis.sigma.n;
    b.z = p.blocks[bi].basis.elements;
    b.dim = p.blocks[bi].dim();
    b.y = s.y_blocks[bi];
    fc.blocks.push_back(std::move(b));
  }
  return fc;
}

namespace {

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::full: return "full";
    case Parity::plus: return "plus";
    case Parity::minus: return "minus";
  }
  return "full";
}

Parity parity_from(const std::string& s) {
  if (s == "full") return Parity::full;
  if (s == "plus") return Parity::plus;
  if (s == "minus") return Parity::minus;
  throw ParseError("manifest: unknown parity '" + s + "'");
}

}  // namespace

SdpManifest make_manifest(const SdpProblem& p, const std::string& objective_kind,
                          const std::string& target, const std::string& name, int l) {
  SdpManifest m;
  m.objective_kind = objective_kind;
  m.target = target;
  m.name = name;
  m.n = p.n;
  m.l = l;
  m.negate_bound = objective_kind == "inducibility";
  for (const SdpBlock& b : p.blocks) {
    SdpManifest::Block mb;
    mb.k = b.basis.sigma.n;
    mb.m = b.basis.m;
    mb.sigma = format_graph(b.basis.sigma);
    mb.parity = parity_name(b.basis.parity);
    for (const QuantumGraph& z : b.basis.elements) mb.flags.push_back(combo_str(z));
    m.blocks.push_back(std::move(mb));
  }
  return m;
}

std::string manifest_to_json(const SdpManifest& m) {
  nlohmann::json j;
  j["format"] = "flagcert-manifest-1";
  j["objective"] = m.objective_kind;
  j["target"] = m.target;
  j["name"] = m.name;
  j["n"] = m.n;
  j["l"] = m.l;
  j["negate_bound"] = m.negate_bound;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : m.blocks) {
    nlohmann::json jb;
    jb["k"] = b.k;
    jb["m"] = b.m;
    jb["sigma"] = b.sigma;
    jb["parity"] = b.parity;
    jb["flags"] = b.flags;
    j["blocks"].push_back(jb);
  }
  return j.dump(2) + "\n";
}

SdpManifest manifest_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  try {
    SdpManifest m;
    if (j.at("format") != "flagcert-manifest-1") throw ParseError("manifest: unknown format tag");
    m.objective_kind = j.at("objective");
    m.target = j.at("target");
    m.name = j.at("name");
    m.n = j.at("n");
    m.l = j.at("l");
    m.negate_bound = j.at("negate_bound");
    for (const auto& jb : j.at("blocks")) {
      SdpManifest::Block b;
      b.k = jb.at("k");
      b.m = jb.at("m");
      b.sigma = jb.at("sigma");
      b.parity = jb.at("parity");
      for (const auto& fs : jb.at("flags")) b.flags.push_back(fs);
      m.blocks.push_back(std::move(b));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
}

SdpProblem problem_from_manifest(const SdpManifest& m) {
  SdpProblem p;
  p.n = m.n;
  p.classes = enumerate_graphs(m.n);
  if (m.objective_kind == "inducibility") {
    p.objective = objective_for_inducibility(canonical(parse_graph(m.target)), m.n);
  } else if (m.objective_kind == "goodman") {
    p.objective = objective_goodman(m.n);
  } else {
    throw ParseError("manifest: unknown objective kind '" + m.objective_kind + "'");
  }
  long fact = 1;
  for (int i = 2; i <= m.n; ++i) fact *= i;
  for (const Graph& g : p.classes) p.norm_coeffs.push_back(rat(fact, automorphism_count(g)));
  for (const auto& mb : m.blocks) {
    SdpBlock b;
    b.basis.sigma = parse_graph(mb.sigma);
    if (b.basis.sigma.k != b.basis.sigma.n) throw ParseError("manifest: sigma must be fully labeled");
    b.basis.m = mb.m;
    b.basis.parity = parity_from(mb.parity);
    for (const std::string& fs : mb.flags) {
      QuantumGraph z = parse_combo(fs, Basis::ind);
      if (z.k != mb.k) throw ParseError("manifest: flag label count differs from block k");
      b.basis.elements.push_back(std::move(z));
    }
    p.blocks.push_back(std::move(b));
  }
  return p;
}

}  // namespace flagcert
