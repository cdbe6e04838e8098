// Command-line front end: enumeration, density evaluation, SDP emission and
// ingestion, certificate rounding and verification.
//
// Exit codes: 0 success (or certificate accepted), 1 certificate rejected,
// 2 usage error, 3 I/O or parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagcert/basis.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/graphon.hpp"
#include "flagcert/notation.hpp"
#include "flagcert/quantum.hpp"
#include "flagcert/sdp.hpp"

namespace {

using namespace flagcert;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

StepGraphon resolve_graphon(const std::string& arg) {
  if (is_builtin_graphon(arg)) return builtin_graphon(arg);
  return load_step_graphon_file(arg);
}

std::string rat_line(const Rat& value) { return rat_str(value) + " = " + decimal_string(value); }

int cmd_enumerate(int n, const std::string& sigma_text, int m) {
  if (!sigma_text.empty()) {
    TypeSigma sigma = parse_graph(sigma_text);
    if (sigma.k != sigma.n) throw std::invalid_argument("enumerate: --sigma must be fully labeled");
    for (const Graph& f : enumerate_flags(sigma, m))
      std::cout << format_graph(f) << " aut=" << automorphism_count(f) << "\n";
    return 0;
  }
  for (const Graph& g : enumerate_graphs(n))
    std::cout << format_graph(g) << " aut=" << automorphism_count(g) << "\n";
  return 0;
}

int cmd_density(const std::string& h_text, const std::string& w_text, const std::string& kind) {
  Graph h = parse_graph(h_text);
  StepGraphon w = resolve_graphon(w_text);
  DensityKind dk;
  if (kind == "hom")
    dk = DensityKind::hom;
  else if (kind == "ind")
    dk = DensityKind::induced;
  else
    throw std::invalid_argument("density: --kind must be 'ind' or 'hom'");
  DensityReport report = density_report(h, w, dk);
  std::cout << rat_line(report.value) << "\n";
  return 0;
}

int cmd_build_sdp(const std::string& target, int n, int l, bool dedup, bool split,
                  const std::vector<std::string>& delta_args, const std::string& out_path,
                  const std::string& solver_cmd, std::string solution_path, std::string name) {
  // Check the destinations before spending minutes on assembly.
  for (const std::string& path : {out_path, out_path + ".manifest.json"}) {
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw ParseError("cannot write '" + path + "'");
  }
  std::vector<StepGraphon> w0s;
  for (const std::string& d : delta_args) w0s.push_back(resolve_graphon(d));

  std::vector<Rat> objective;
  std::string kind;
  if (target == "goodman") {
    kind = "goodman";
    objective = objective_goodman(n);
  } else {
    kind = "inducibility";
    Graph h = canonical(parse_graph(target));
    if (h.k != 0) throw std::invalid_argument("build-sdp: target must be unlabeled");
    objective = objective_for_inducibility(h, n);
  }
  if (name.empty()) name = target;

  std::vector<FlagBasis> bases = build_bases(n, l, dedup, split, w0s);
  SdpProblem problem = assemble(std::move(objective), std::move(bases), n);

  write_file(out_path, emit_sdpa(problem));
  SdpManifest manifest = make_manifest(problem, kind, kind == "goodman" ? "" : target, name, l);
  std::string manifest_path = out_path + ".manifest.json";
  write_file(manifest_path, manifest_to_json(manifest));

  std::cout << "variables: " << problem.classes.size() << "\n";
  std::cout << "blocks:";
  for (const SdpBlock& b : problem.blocks) std::cout << " " << b.dim();
  std::cout << " (+ normalization)\n";
  std::cout << "problem: " << out_path << "\n";
  std::cout << "manifest: " << manifest_path << "\n";

  if (!solver_cmd.empty()) {
    if (solution_path.empty()) solution_path = out_path + ".sol";
    std::string cmd = solver_cmd;
    auto substitute = [&](const std::string& key, const std::string& value) {
      size_t pos;
      while ((pos = cmd.find(key)) != std::string::npos) cmd.replace(pos, key.size(), value);
    };
    substitute("{in}", out_path);
    substitute("{out}", solution_path);
    std::cout << "running solver: " << cmd << "\n";
    int rc = std::system(cmd.c_str());
    if (rc != 0) {
      std::cerr << "solver exited with status " << rc << "\n";
      return 3;
    }
    std::cout << "solution: " << solution_path << "\n";
  }
  return 0;
}

FloatCertificate ingest_common(const std::string& solution_path, const std::string& manifest_path) {
  SdpManifest manifest = manifest_from_json(read_file(manifest_path));
  if (manifest.objective_kind != "inducibility")
    throw std::invalid_argument("only inducibility problems produce certificates");
  SdpProblem problem = problem_from_manifest(manifest);
  SolverSolution sol = parse_solution(read_file(solution_path), problem);
  Graph target = canonical(parse_graph(manifest.target));
  return extract_certificate(sol, problem, manifest.name, target, manifest.negate_bound);
}

int cmd_ingest(const std::string& solution_path, const std::string& manifest_path,
               const std::string& out_path) {
  FloatCertificate fc = ingest_common(solution_path, manifest_path);
  std::printf("floating bound: %.9g\n", fc.bound);
  if (!out_path.empty()) {
    // Snapshot the floating data as exact decimals so the file stays in the
    // certificate grammar.
    Certificate snap;
    snap.name = fc.name;
    snap.target = fc.target;
    snap.n = fc.n;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", fc.bound);
    snap.bound = rat_from_decimal(buf);
    for (const FloatCertBlock& fb : fc.blocks) {
      CertBlock b;
      b.k = fb.k;
      b.z = fb.z;
      b.y = RatMatrix(fb.dim, fb.dim);
      for (int r = 0; r < fb.dim; ++r)
        for (int c = 0; c < fb.dim; ++c) {
          std::snprintf(buf, sizeof buf, "%.17g", fb.y[static_cast<size_t>(r) * fb.dim + c]);
          b.y.at(r, c) = rat_from_decimal(buf);
        }
      // Average out asymmetries left by the decimal snapshot.
      for (int r = 0; r < fb.dim; ++r)
        for (int c = r + 1; c < fb.dim; ++c) {
          Rat avg = (b.y.at(r, c) + b.y.at(c, r)) / 2;
          b.y.at(r, c) = avg;
          b.y.at(c, r) = avg;
        }
      snap.blocks.push_back(std::move(b));
    }
    write_file(out_path, save_certificate(snap));
    std::cout << "floating certificate: " << out_path << "\n";
  }
  return 0;
}

int cmd_round(const std::string& solution_path, const std::string& manifest_path, long long den_cap,
              const std::string& pin_path, const std::string& out_path) {
  FloatCertificate fc = ingest_common(solution_path, manifest_path);
  Pins pins;
  if (!pin_path.empty()) pins = parse_pins(read_file(pin_path));
  Certificate cert = round_to_rational(fc, den_cap, pins);
  write_file(out_path, save_certificate(cert));
  std::cout << "rounded bound: " << rat_line(cert.bound) << "\n";
  std::cout << "certificate: " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& cert_path) {
  Certificate cert = load_certificate_file(cert_path);
  VerificationReport report = verify(cert);
  for (size_t i = 0; i < report.block_psd.size(); ++i)
    std::cout << "block " << i + 1 << ": " << (report.block_psd[i].psd ? "PSD" : "NOT PSD") << "\n";
  if (report.worst_index >= 0)
    std::cout << "worst slack: " << rat_str(report.slack[report.worst_index]) << " at "
              << format_graph(report.classes[report.worst_index]) << "\n";
  if (report.accepted) {
    std::cout << "accepted: t_ind(" << format_graph(cert.target) << ") <= " << rat_str(cert.bound)
              << "\n";
    return 0;
  }
  std::cout << "rejected: " << report.failure << "\n";
  return 1;
}

int cmd_paley(int q) {
  auto adj = quadratic_residue_adjacency(q);
  int edges = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) edges += adj[i][j];
  StepGraphon w = step_graphon_of(adj);
  Rat t = t_ind_graph(path_graph(4), w);
  std::cout << "QR(" << q << "): " << q << " vertices, " << edges << " edges\n";
  std::cout << "t_ind(P4; w_QR(" << q << ")) = " << rat_line(t) << "\n";
  std::cout << "reference: the best known P4 construction (a blow-up of QR(17)) gives 80/4877 = "
            << decimal_string(rat(80, 4877)) << "; the plain step graphon above does not reproduce it\n";
  return 0;
}

int cmd_oracle(const std::string& h_text, const std::string& g_text) {
  Graph h = parse_graph(h_text);
  Graph g = parse_graph(g_text);
  if (h.k != 0 || g.k != 0) throw std::invalid_argument("oracle: graphs must be unlabeled");
  auto [count, share] = count_induced(h, g);
  std::cout << "I(H;G) = " << count << "\n";
  std::cout << "i(H;G) = " << rat_line(share) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag-algebra toolkit: exact induced-density certificates and their SDPs"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list graph classes or flags of a type");
  int en_n = 0, en_m = 0;
  std::string en_sigma;
  enumerate->add_option("--n", en_n, "vertex count for plain graph classes");
  enumerate->add_option("--sigma", en_sigma, "fully labeled type (flag enumeration)");
  enumerate->add_option("--m", en_m, "flag vertex count (with --sigma)");

  auto* density = app.add_subcommand("density", "evaluate a density against a step graphon");
  std::string de_h, de_w, de_kind = "ind";
  density->add_option("graph", de_h, "graph in adjacency-list notation")->required();
  density->add_option("graphon", de_w, "graphon file or builtin (k5, k2uk2, complement(...), paley<q>, const p/q)")->required();
  density->add_option("--kind", de_kind, "ind (default) or hom");

  auto* build = app.add_subcommand("build-sdp", "assemble and emit the density SDP");
  std::string bu_target, bu_out, bu_solver, bu_solution, bu_name;
  int bu_n = 0, bu_l = 0;
  bool bu_dedup = false, bu_split = false;
  std::vector<std::string> bu_delta;
  build->add_option("--target", bu_target, "target graph, or 'goodman'")->required();
  build->add_option("--n", bu_n, "expansion size")->required();
  build->add_option("--l", bu_l, "largest label count")->required();
  build->add_flag("--dedup-types", bu_dedup, "one block per type up to relabeling");
  build->add_flag("--split", bu_split, "split blocks into symmetry parts");
  build->add_option("--delta", bu_delta, "extremal graphon files or builtins");
  build->add_option("--out", bu_out, "output problem path")->required();
  build->add_option("--solver-cmd", bu_solver, "solver template with {in} and {out}");
  build->add_option("--solution", bu_solution, "solution path for --solver-cmd");
  build->add_option("--name", bu_name, "certificate name for the manifest");

  auto* ingest = app.add_subcommand("ingest", "read a solver solution and report the floating bound");
  std::string in_sol, in_manifest, in_out;
  ingest->add_option("--solution", in_sol, "solver solution file")->required();
  ingest->add_option("--manifest", in_manifest, "manifest written by build-sdp")->required();
  ingest->add_option("--out", in_out, "write a floating certificate here");

  auto* round_cmd = app.add_subcommand("round", "round a solver solution to an exact certificate");
  std::string ro_sol, ro_manifest, ro_pin, ro_out;
  long long ro_cap = 0;
  round_cmd->add_option("--solution", ro_sol, "solver solution file")->required();
  round_cmd->add_option("--manifest", ro_manifest, "manifest written by build-sdp")->required();
  round_cmd->add_option("--den-cap", ro_cap, "denominator cap")->required();
  round_cmd->add_option("--pin", ro_pin, "pinned entries file");
  round_cmd->add_option("--out", ro_out, "certificate output path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate in exact arithmetic");
  std::string ve_cert;
  verify_cmd->add_option("certificate", ve_cert, "certificate file")->required();

  auto* paley = app.add_subcommand("paley", "quadratic-residue graph densities");
  int pa_q = 0;
  paley->add_option("--q", pa_q, "prime congruent to 1 mod 4, at most 17")->required();

  auto* oracle = app.add_subcommand("oracle", "count induced copies by subset enumeration");
  std::string or_h, or_g;
  oracle->add_option("pattern", or_h, "pattern graph")->required();
  oracle->add_option("host", or_g, "host graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      if (en_sigma.empty() && en_n == 0)
        throw std::invalid_argument("enumerate: need --n or --sigma/--m");
      if (!en_sigma.empty() && en_m == 0)
        throw std::invalid_argument("enumerate: --sigma needs --m");
      return cmd_enumerate(en_n, en_sigma, en_m);
    }
    if (density->parsed()) return cmd_density(de_h, de_w, de_kind);
    if (build->parsed())
      return cmd_build_sdp(bu_target, bu_n, bu_l, bu_dedup, bu_split, bu_delta, bu_out, bu_solver,
                           bu_solution, bu_name);
    if (ingest->parsed()) return cmd_ingest(in_sol, in_manifest, in_out);
    if (round_cmd->parsed()) return cmd_round(ro_sol, ro_manifest, ro_cap, ro_pin, ro_out);
    if (verify_cmd->parsed()) return cmd_verify(ve_cert);
    if (paley->parsed()) return cmd_paley(pa_q);
    if (oracle->parsed()) return cmd_oracle(or_h, or_g);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
