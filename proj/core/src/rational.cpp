#include "flagcert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace flagcert {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
  size_t pos = 0;
  bool ok = t[pos] == '+' || t[pos] == '-' || isdigit(static_cast<unsigned char>(t[pos]));
  size_t slash = t.find('/');
  if (slash == 0 || slash == t.size() - 1) ok = false;
  for (size_t i = 1; ok && i < t.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(t[i])) && i != slash) ok = false;
  if (!ok) throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  Rat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string decimal_string(const Rat& r) {
  if (sgn(r) == 0) return "0";
  mpz_class num = abs(r.get_num());
  mpz_class den = r.get_den();
  bool neg = sgn(r) < 0;

  // Strip factors of 2 and 5; what remains decides if the expansion ends.
  mpz_class rest = den;
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    rest /= 5;
    ++fives;
  }

  mpz_class scaled;
  int frac_digits;
  if (rest == 1) {
    frac_digits = std::max(twos, fives);
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac_digits);
    scaled = num * pow10 / den;  // exact by construction
  } else {
    // Round to 17 significant digits.
    const int sig = 17;
    // e = number of digits in the integer part (0 if the value is < 1).
    mpz_class ip = num / den;
    size_t int_digits = ip == 0 ? 0 : mpz_sizeinbase(ip.get_mpz_t(), 10);
    if (int_digits > 0) {
      // sizeinbase may overestimate by one.
      mpz_class p10;
      mpz_ui_pow_ui(p10.get_mpz_t(), 10, int_digits - 1);
      if (ip < p10) --int_digits;
    }
    int lead_zeros = 0;
    if (int_digits == 0) {
      // Count zeros after the decimal point before the first digit.
      mpz_class n10 = num * 10;
      while (n10 / den == 0) {
        n10 *= 10;
        ++lead_zeros;
      }
    }
    frac_digits = int_digits > 0 ? sig - static_cast<int>(int_digits) : sig + lead_zeros;
    if (frac_digits < 0) frac_digits = 0;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac_digits);
    mpz_class prod = num * pow10;
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), prod.get_mpz_t(), den.get_mpz_t());
    if (rem * 2 >= den) q += 1;
    scaled = q;
  }

  std::string digits = scaled.get_str();
  std::string out;
  if (frac_digits == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= frac_digits)
      digits.insert(0, frac_digits - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - frac_digits) + "." +
          digits.substr(digits.size() - frac_digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

Rat best_rational(double x, long long den_cap) {
  if (den_cap < 1) throw std::invalid_argument("best_rational: cap must be >= 1");
  if (!std::isfinite(x)) throw std::invalid_argument("best_rational: non-finite input");
  Rat target(x);  // exact binary value
  bool neg = sgn(target) < 0;
  if (neg) target = -target;

  // Continued-fraction convergents p/q of target until q exceeds the cap.
  mpz_class p_prev = 1, q_prev = 0;  // h_{-1}
  mpz_class p_cur, q_cur = 1;        // h_0 = floor(target)
  mpz_class num = target.get_num(), den = target.get_den();
  mpz_class a = num / den;
  p_cur = a;
  mpz_class rem = num - a * den;
  while (rem != 0) {
    num = den;
    den = rem;
    a = num / den;
    rem = num - a * den;
    mpz_class p_next = a * p_cur + p_prev;
    mpz_class q_next = a * q_cur + q_prev;
    if (q_next > mpz_class(static_cast<long>(den_cap))) {
      // Best semiconvergent with denominator within the cap.
      mpz_class t = (mpz_class(static_cast<long>(den_cap)) - q_prev) / q_cur;
      Rat conv(p_cur, q_cur);
      conv.canonicalize();
      Rat best = conv;
      if (t > 0) {
        Rat semi(t * p_cur + p_prev, t * q_cur + q_prev);
        semi.canonicalize();
        Rat d_semi = abs(semi - target), d_conv = abs(conv - target);
        if (d_semi < d_conv) best = semi;
      }
      return neg ? Rat(-best) : best;
    }
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  Rat exact(p_cur, q_cur);
  exact.canonicalize();
  return neg ? Rat(-exact) : exact;
}

Rat rat_from_decimal(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("rat_from_decimal: empty string");
  size_t pos = 0;
  bool neg = false;
  if (t[pos] == '+' || t[pos] == '-') neg = t[pos++] == '-';
  std::string digits;
  long frac = 0, exp = 0;
  bool any = false;
  while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
    digits += t[pos++];
    any = true;
  }
  if (pos < t.size() && t[pos] == '.') {
    ++pos;
    while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) {
      digits += t[pos++];
      ++frac;
      any = true;
    }
  }
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) eneg = t[pos++] == '-';
    std::string ed;
    while (pos < t.size() && isdigit(static_cast<unsigned char>(t[pos]))) ed += t[pos++];
    if (ed.empty()) throw std::invalid_argument("rat_from_decimal: malformed exponent in '" + s + "'");
    exp = std::stol(ed) * (eneg ? -1 : 1);
  }
  if (!any || pos != t.size())
    throw std::invalid_argument("rat_from_decimal: malformed decimal '" + s + "'");

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  long shift = exp - frac;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rat out;
  if (shift >= 0)
    out = Rat(mantissa * pow10);
  else
    out = Rat(mantissa, pow10);
  out.canonicalize();
  return neg ? Rat(-out) : out;
}

bool RatMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (sgn(m.at(r, col)) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rat inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return static_cast<int>(rref(copy).size());
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols);
    v[free] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(const RatMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: non-square matrix");
  RatMatrix w = m;
  int n = m.rows;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = col; r < n; ++r)
      if (sgn(w.at(r, col)) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != col) {
      for (int c = 0; c < n; ++c) std::swap(w.at(sel, c), w.at(col, c));
      det = -det;
    }
    det *= w.at(col, col);
    Rat inv = 1 / w.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(w.at(r, col)) == 0) continue;
      Rat f = w.at(r, col) * inv;
      for (int c = col; c < n; ++c) w.at(r, c) -= f * w.at(col, c);
    }
  }
  return det;
}

}  // namespace flagcert
