#include "flagcert/certificate.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "flagcert/notation.hpp"

namespace flagcert {

PsdResult psd_check_exact(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("psd_check_exact: matrix not symmetric");
  int n = m.rows;
  RatMatrix w = m;
  PsdResult res;
  res.l.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) res.l[i][i] = 1;

  auto lift_witness = [&](std::vector<Rat> v, int from_step) {
    // Undo the elimination steps: each step's column is stored in l.
    for (int r = from_step - 1; r >= 0; --r) {
      Rat t(0);
      for (int i = r + 1; i < n; ++i)
        if (sgn(v[i]) != 0) t -= res.l[i][r] * v[i];
      v[r] = t;
    }
    res.psd = false;
    res.witness = std::move(v);
    res.l.clear();
    res.d.clear();
  };

  for (int s = 0; s < n; ++s) {
    const Rat& pivot = w.at(s, s);
    if (sgn(pivot) < 0) {
      std::vector<Rat> v(n, Rat(0));
      v[s] = 1;
      lift_witness(std::move(v), s);
      return res;
    }
    if (sgn(pivot) == 0) {
      int bad = -1;
      for (int j = s + 1; j < n; ++j)
        if (sgn(w.at(s, j)) != 0) {
          bad = j;
          break;
        }
      if (bad >= 0) {
        // v = t e_s + e_bad with 2 t w(s,bad) + w(bad,bad) = -1.
        std::vector<Rat> v(n, Rat(0));
        v[s] = -(w.at(bad, bad) + 1) / (2 * w.at(s, bad));
        v[bad] = 1;
        lift_witness(std::move(v), s);
        return res;
      }
      res.d.push_back(Rat(0));
      continue;
    }
    res.d.push_back(pivot);
    for (int i = s + 1; i < n; ++i) res.l[i][s] = w.at(i, s) / pivot;
    for (int i = s + 1; i < n; ++i) {
      if (sgn(w.at(i, s)) == 0) continue;
      for (int j = i; j < n; ++j) w.at(i, j) -= res.l[i][s] * w.at(s, j);
    }
    // Keep the working matrix symmetric for the pivot scans above.
    for (int i = s + 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) w.at(j, i) = w.at(i, j);
  }
  res.psd = true;
  return res;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("certificate: malformed ") + what + " '" + s + "'");
  }
}

bool take_key(const std::string& line, const std::string& key, std::string& value) {
  if (line.rfind(key, 0) != 0) return false;
  value = strip(line.substr(key.size()));
  return true;
}

}  // namespace

Certificate load_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Certificate cert;
  bool have_name = false, have_target = false, have_n = false, have_bound = false;
  int lineno = 0;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      out = strip(line);
      if (!out.empty()) return true;
    }
    return false;
  };

  std::string cur;
  // Header.
  while (next_content_line(cur)) {
    std::string value;
    if (take_key(cur, "name:", value)) {
      cert.name = value;
      have_name = true;
    } else if (take_key(cur, "target:", value)) {
      cert.target = canonical(parse_graph(value));
      if (cert.target.k != 0) throw ParseError("certificate: target must be unlabeled");
      have_target = true;
    } else if (take_key(cur, "n:", value)) {
      cert.n = parse_int(value, "n");
      have_n = true;
    } else if (take_key(cur, "bound:", value)) {
      cert.bound = parse_rat(value);
      have_bound = true;
    } else if (cur == "block") {
      break;
    } else {
      throw ParseError("certificate: unexpected line " + std::to_string(lineno) + ": '" + cur + "'");
    }
  }
  if (!have_name || !have_target || !have_n || !have_bound)
    throw ParseError("certificate: missing header field (name/target/n/bound)");

  // Blocks; `cur` holds "block" on entry when a block is present.
  while (cur == "block") {
    CertBlock block;
    std::string value;
    if (!next_content_line(cur) || !take_key(cur, "k:", value))
      throw ParseError("certificate: block missing 'k:' near line " + std::to_string(lineno));
    block.k = parse_int(value, "block k");
    if (!next_content_line(cur) || cur != "flags:")
      throw ParseError("certificate: block missing 'flags:' near line " + std::to_string(lineno));
    while (next_content_line(cur) && cur != "Y:") {
      QuantumGraph z = parse_combo(cur, Basis::ind);
      if (z.k != block.k)
        throw ParseError("certificate: flag label count differs from block k near line " +
                         std::to_string(lineno));
      block.z.push_back(std::move(z));
    }
    if (cur != "Y:") throw ParseError("certificate: block missing 'Y:' section");
    int dim = static_cast<int>(block.z.size());
    block.y = RatMatrix(dim, dim);
    for (int r = 0; r < dim; ++r) {
      if (!next_content_line(cur))
        throw ParseError("certificate: matrix row " + std::to_string(r + 1) + " missing");
      std::istringstream row(cur);
      std::string tok;
      for (int c = 0; c < dim; ++c) {
        if (!(row >> tok))
          throw ParseError("certificate: matrix row " + std::to_string(r + 1) + " too short");
        block.y.at(r, c) = parse_rat(tok);
      }
      if (row >> tok) throw ParseError("certificate: matrix row " + std::to_string(r + 1) + " too long");
    }
    if (!block.y.is_symmetric()) throw ParseError("certificate: matrix not symmetric");
    cert.blocks.push_back(std::move(block));
    if (!next_content_line(cur)) break;
    if (cur != "block")
      throw ParseError("certificate: unexpected line " + std::to_string(lineno) + ": '" + cur + "'");
  }
  return cert;
}

Certificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("certificate: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_certificate(buf.str());
}

std::string save_certificate(const Certificate& c) {
  std::string out;
  out += "name: " + c.name + "\n";
  out += "target: " + format_graph(c.target) + "\n";
  out += "n: " + std::to_string(c.n) + "\n";
  out += "bound: " + rat_str(c.bound) + "\n";
  for (const CertBlock& b : c.blocks) {
    out += "block\n";
    out += "k: " + std::to_string(b.k) + "\n";
    out += "flags:\n";
    for (const QuantumGraph& z : b.z) out += combo_str(z) + "\n";
    out += "Y:\n";
    for (int r = 0; r < b.y.rows; ++r) {
      for (int col = 0; col < b.y.cols; ++col) {
        if (col) out += " ";
        out += rat_str(b.y.at(r, col));
      }
      out += "\n";
    }
  }
  return out;
}

namespace {

uint64_t type_bits(const Graph& g) {
  uint64_t out = 0;
  for (int u = 0; u < g.k; ++u)
    for (int v = u + 1; v < g.k; ++v)
      if (g.edge(u, v)) out |= uint64_t{1} << pair_index(u, v, g.k);
  return out;
}

}  // namespace

VerificationReport verify(const Certificate& c) {
  if (c.n < 1 || c.n > 7) throw std::invalid_argument("verify: expansion size out of range");
  if (c.target.k != 0) throw std::invalid_argument("verify: target must be unlabeled");
  if (c.target.n > c.n) throw std::invalid_argument("verify: target larger than expansion size");

  VerificationReport report;
  report.classes = enumerate_graphs(c.n);

  // Structural checks per block: one label count, one type, size cap.
  for (const CertBlock& b : c.blocks) {
    if (static_cast<int>(b.z.size()) != b.y.rows || b.y.rows != b.y.cols)
      throw std::invalid_argument("verify: flag vector and matrix dimensions differ");
    int max_vertices = (c.n + b.k) / 2;
    bool have_type = false;
    uint64_t expect_type = 0;
    for (const QuantumGraph& z : b.z) {
      if (z.k != b.k) throw std::invalid_argument("verify: flag label count differs from block k");
      for (const auto& [g, coeff] : z.terms) {
        if (g.n > max_vertices) throw std::invalid_argument("verify: block flag too large for n");
        if (!have_type) {
          expect_type = type_bits(g);
          have_type = true;
        } else if (type_bits(g) != expect_type) {
          throw std::invalid_argument("verify: mixed types within a block");
        }
      }
    }
  }

  bool psd_ok = true;
  for (const CertBlock& b : c.blocks) {
    report.block_psd.push_back(psd_check_exact(b.y));
    if (!report.block_psd.back().psd) psd_ok = false;
  }

  // beta: the expansion of the sum-of-squares side.
  QuantumGraph total = QuantumGraph::zero(0, Basis::ind);
  for (const CertBlock& b : c.blocks) total += quadratic_form(b.z, b.y, c.n);

  // alpha: bound - Ind(target), padded to n vertices.
  QuantumGraph one = QuantumGraph::single(Graph{1, 0, 0}, Basis::ind);
  QuantumGraph alpha = lift(one, c.n);
  alpha *= c.bound;
  alpha -= lift(QuantumGraph::single(c.target, Basis::ind), c.n);

  bool dominated = true;
  report.slack.reserve(report.classes.size());
  for (size_t i = 0; i < report.classes.size(); ++i) {
    Rat s = alpha.coeff(report.classes[i]) - total.coeff(report.classes[i]);
    if (sgn(s) < 0) dominated = false;
    if (report.worst_index < 0 || s < report.slack[report.worst_index])
      report.worst_index = static_cast<int>(i);
    report.slack.push_back(std::move(s));
  }

  report.accepted = psd_ok && dominated;
  if (!psd_ok)
    report.failure = "a matrix block is not positive semidefinite";
  else if (!dominated)
    report.failure = "negative slack at class " + format_graph(report.classes[report.worst_index]);
  return report;
}

Pins parse_pins(const std::string& text) {
  Pins pins;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ls(s);
    std::string first;
    ls >> first;
    if (first == "bound") {
      std::string v;
      if (!(ls >> v)) throw ParseError("pins: missing bound value on line " + std::to_string(lineno));
      pins.bound = parse_rat(v);
      continue;
    }
    int block, row, col;
    std::string v;
    try {
      block = std::stoi(first);
    } catch (...) {
      throw ParseError("pins: bad line " + std::to_string(lineno));
    }
    if (!(ls >> row >> col >> v)) throw ParseError("pins: bad line " + std::to_string(lineno));
    if (block < 1 || row < 1 || col < 1) throw ParseError("pins: indices are 1-based, line " + std::to_string(lineno));
    int r = row - 1, cc = col - 1;
    if (r > cc) std::swap(r, cc);
    pins.entries[{block - 1, r, cc}] = parse_rat(v);
  }
  return pins;
}

Certificate round_to_rational(const FloatCertificate& fc, long long den_cap, const Pins& pins) {
  if (den_cap < 1) throw std::invalid_argument("round_to_rational: denominator cap must be >= 1");
  Certificate out;
  out.name = fc.name;
  out.target = fc.target;
  out.n = fc.n;
  out.bound = pins.bound ? *pins.bound : best_rational(fc.bound, den_cap);
  for (size_t bi = 0; bi < fc.blocks.size(); ++bi) {
    const FloatCertBlock& fb = fc.blocks[bi];
    CertBlock b;
    b.k = fb.k;
    b.z = fb.z;
    b.y = RatMatrix(fb.dim, fb.dim);
    for (int r = 0; r < fb.dim; ++r)
      for (int cc = r; cc < fb.dim; ++cc) {
        auto pin = pins.entries.find({static_cast<int>(bi), r, cc});
        Rat v = pin != pins.entries.end()
                    ? pin->second
                    : best_rational(fb.y[static_cast<size_t>(r) * fb.dim + cc], den_cap);
        b.y.at(r, cc) = v;
        b.y.at(cc, r) = v;
      }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

}  // namespace flagcert
