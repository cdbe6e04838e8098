#ifndef FLAGCERT_BASIS_HPP
#define FLAGCERT_BASIS_HPP

#include <utility>
#include <vector>

#include "flagcert/graph.hpp"
#include "flagcert/graphon.hpp"
#include "flagcert/quantum.hpp"

namespace flagcert {

enum class Parity { full, plus, minus };

// An independent set of Ind-basis combinations of the flags of one type on m
// vertices, optionally restricted to one symmetry part.
struct FlagBasis {
  TypeSigma sigma;
  int m = 0;
  Parity parity = Parity::full;
  std::vector<QuantumGraph> elements;
};

// All Ind flags of the type, one element per flag, enumeration order.
FlagBasis full_flag_basis(const TypeSigma& sigma, int m);

// Coordinate matrix of the elements over enumerate_flags(sigma, m).
RatMatrix element_coordinates(const FlagBasis& b);

// Rational rank check of the coordinate matrix.
bool is_independent(const FlagBasis& b);

// Splits a full basis into the invariant and anti-invariant parts under the
// label action of the automorphisms of the underlying type graph. Each part
// comes back as a reduced echelon spanning set.
std::pair<FlagBasis, FlagBasis> symmetry_split(const FlagBasis& b);

// Subspace of combinations whose rooted evaluation vanishes for every
// assignment of labels to parts of every w0. The graphons must be 0/1-valued.
FlagBasis delta_restrict(const FlagBasis& b, const std::vector<StepGraphon>& w0s);

}  // namespace flagcert

#endif
