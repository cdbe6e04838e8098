#include "flagcert/basis.hpp"

#include <map>
#include <stdexcept>

namespace flagcert {

FlagBasis full_flag_basis(const TypeSigma& sigma, int m) {
  FlagBasis b;
  b.sigma = sigma;
  b.m = m;
  b.parity = Parity::full;
  for (const Graph& f : enumerate_flags(sigma, m))
    b.elements.push_back(QuantumGraph::single(f, Basis::ind));
  return b;
}

namespace {

std::map<Graph, int> flag_index(const std::vector<Graph>& flags) {
  std::map<Graph, int> idx;
  for (size_t i = 0; i < flags.size(); ++i) idx[flags[i]] = static_cast<int>(i);
  return idx;
}

RatMatrix coords_over(const std::vector<Graph>& flags, const std::map<Graph, int>& idx,
                      const std::vector<QuantumGraph>& elements) {
  RatMatrix m(static_cast<int>(elements.size()), static_cast<int>(flags.size()));
  for (size_t r = 0; r < elements.size(); ++r)
    for (const auto& [g, c] : elements[r].terms) {
      auto it = idx.find(g);
      if (it == idx.end())
        throw std::invalid_argument("flag basis: element term is not a flag of the basis type");
      m.at(static_cast<int>(r), it->second) = c;
    }
  return m;
}

QuantumGraph from_coords(const std::vector<Graph>& flags, const std::vector<Rat>& row, int k) {
  QuantumGraph q = QuantumGraph::zero(k, Basis::ind);
  for (size_t j = 0; j < flags.size(); ++j) q.add(flags[j], row[j]);
  return q;
}

std::vector<QuantumGraph> rows_to_elements(const RatMatrix& m, const std::vector<Graph>& flags, int k) {
  std::vector<QuantumGraph> out;
  for (int r = 0; r < m.rows; ++r) {
    std::vector<Rat> row(m.cols);
    for (int c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
    QuantumGraph q = from_coords(flags, row, k);
    if (!q.is_zero()) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

RatMatrix element_coordinates(const FlagBasis& b) {
  std::vector<Graph> flags = enumerate_flags(b.sigma, b.m);
  return coords_over(flags, flag_index(flags), b.elements);
}

bool is_independent(const FlagBasis& b) {
  if (b.elements.empty()) return true;
  RatMatrix m = element_coordinates(b);
  return rank(m) == static_cast<int>(b.elements.size());
}

std::pair<FlagBasis, FlagBasis> symmetry_split(const FlagBasis& b) {
  if (b.parity != Parity::full) throw std::invalid_argument("symmetry_split: input must be a full basis");
  std::vector<Graph> flags = enumerate_flags(b.sigma, b.m);
  std::map<Graph, int> idx = flag_index(flags);
  int d = static_cast<int>(flags.size());
  int k = b.sigma.n;

  // Automorphisms of the underlying unlabeled type graph act by permuting
  // the labels; each one permutes the flag set.
  std::vector<std::vector<int>> actions;
  for (const Permutation& p : permutations_fixing(k, 0)) {
    if (permuted(b.sigma, p).bits != b.sigma.bits) continue;
    Permutation ext = Permutation::identity(b.m);
    for (int i = 0; i < k; ++i) ext.map[i] = p.map[i];
    std::vector<int> act(d);
    for (int i = 0; i < d; ++i) act[i] = idx.at(canonical(permuted(flags[i], ext)));
    actions.push_back(std::move(act));
  }
  Rat inv_order = rat(1, static_cast<long>(actions.size()));

  RatMatrix coords = coords_over(flags, idx, b.elements);
  int ne = coords.rows;

  // Group-averaged image of each element.
  RatMatrix averaged(ne, d);
  for (int r = 0; r < ne; ++r)
    for (const auto& act : actions)
      for (int c = 0; c < d; ++c)
        if (sgn(coords.at(r, c)) != 0) averaged.at(r, act[c]) += coords.at(r, c) * inv_order;

  FlagBasis plus{b.sigma, b.m, Parity::plus, {}};
  {
    RatMatrix image = averaged;
    rref(image);
    plus.elements = rows_to_elements(image, flags, k);
  }

  FlagBasis minus{b.sigma, b.m, Parity::minus, {}};
  {
    // Kernel of the averaging map on the element span: combinations c with
    // sum_i c_i * averaged_i = 0.
    RatMatrix at(d, ne);
    for (int r = 0; r < ne; ++r)
      for (int c = 0; c < d; ++c) at.at(c, r) = averaged.at(r, c);
    std::vector<std::vector<Rat>> kernel = nullspace(at);
    RatMatrix rows(static_cast<int>(kernel.size()), d);
    for (size_t kv = 0; kv < kernel.size(); ++kv)
      for (int c = 0; c < d; ++c) {
        Rat sum(0);
        for (int r = 0; r < ne; ++r)
          if (sgn(kernel[kv][r]) != 0) sum += kernel[kv][r] * coords.at(r, c);
        rows.at(static_cast<int>(kv), c) = sum;
      }
    rref(rows);
    minus.elements = rows_to_elements(rows, flags, k);
  }
  return {std::move(plus), std::move(minus)};
}

FlagBasis delta_restrict(const FlagBasis& b, const std::vector<StepGraphon>& w0s) {
  for (const StepGraphon& w : w0s)
    if (!w.zero_one())
      throw std::invalid_argument("delta_restrict: extremal graphons must be 0/1-valued");
  if (w0s.empty() || b.elements.empty()) return b;

  int k = b.sigma.n;
  int ne = static_cast<int>(b.elements.size());

  // One row per (graphon, label assignment into its parts).
  std::vector<std::vector<Rat>> rows;
  for (const StepGraphon& w : w0s) {
    int p = w.parts();
    std::vector<int> psi(k, 0);
    while (true) {
      std::vector<Rat> row(ne);
      for (int e = 0; e < ne; ++e) row[e] = eval_rooted(b.elements[e], psi, w);
      rows.push_back(std::move(row));
      int i = k - 1;
      while (i >= 0 && psi[i] == p - 1) {
        psi[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++psi[i];
    }
  }

  RatMatrix m(static_cast<int>(rows.size()), ne);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < ne; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  std::vector<std::vector<Rat>> kernel = nullspace(m);

  std::vector<Graph> flags = enumerate_flags(b.sigma, b.m);
  std::map<Graph, int> idx = flag_index(flags);
  RatMatrix coords = coords_over(flags, idx, b.elements);
  RatMatrix out(static_cast<int>(kernel.size()), coords.cols);
  for (size_t kv = 0; kv < kernel.size(); ++kv)
    for (int c = 0; c < coords.cols; ++c) {
      Rat sum(0);
      for (int r = 0; r < ne; ++r)
        if (sgn(kernel[kv][r]) != 0) sum += kernel[kv][r] * coords.at(r, c);
      out.at(static_cast<int>(kv), c) = sum;
    }
  rref(out);

  FlagBasis restricted{b.sigma, b.m, b.parity, {}};
  restricted.elements = rows_to_elements(out, flags, k);
  return restricted;
}

}  // namespace flagcert
