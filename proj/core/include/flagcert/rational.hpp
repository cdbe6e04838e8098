#ifndef FLAGCERT_RATIONAL_HPP
#define FLAGCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagcert {

// Exact rational scalar. All certificate arithmetic runs on these; doubles
// appear only at the solver boundary.
using Rat = mpq_class;

// Canonicalized num/den constructor (mpq_class(p, q) alone does not reduce).
Rat rat(long num, long den = 1);

// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument.
Rat parse_rat(const std::string& s);

// "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& r);

// Decimal rendering: the exact expansion without trailing zeros when the
// reduced denominator is of the form 2^a 5^b, otherwise rounded to 17
// significant digits.
std::string decimal_string(const Rat& r);

// Best rational approximation of x with denominator <= den_cap, by the
// continued-fraction convergent/semiconvergent rule. Comparisons are exact
// (x is treated as the exact binary rational it encodes). Ties prefer the
// smaller denominator.
Rat best_rational(double x, long long den_cap);

// Exact value of a decimal literal, e-notation allowed: "-0.125e2" -> -25/2.
Rat rat_from_decimal(const std::string& s);

// Dense rational matrix, row-major.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool is_symmetric() const;
};

// In-place reduced row echelon form with first-nonzero pivoting.
// Returns the pivot column of each pivot row.
std::vector<int> rref(RatMatrix& m);

// Rank after elimination.
int rank(const RatMatrix& m);

// Basis of the right kernel {v : m v = 0}, one vector per row of the result,
// in deterministic (free-column) order.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

// Determinant of a square matrix by fraction Gaussian elimination.
Rat determinant(const RatMatrix& m);

}  // namespace flagcert

#endif
