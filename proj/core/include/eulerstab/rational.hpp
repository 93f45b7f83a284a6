#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulerstab {

// Exact arbitrary-precision arithmetic. All polynomial coefficients in this
// library are BigRat; intermediate counters that can exceed 64 bits use BigInt.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Renders "p" when the denominator is 1, otherwise "p/q" (canonical form).
inline std::string rat_to_string(const BigRat& r) {
  BigRat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p" or "p/q" with an optional leading sign.
inline BigRat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  BigRat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline BigRat rat_pow(const BigRat& base, std::uint32_t e) {
  BigRat out = 1;
  BigRat b = base;
  while (e != 0) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

inline int rat_sign(const BigRat& r) { return sgn(r); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline BigInt catalan(unsigned n) {
  return binomial(2 * n, n) / BigInt(n + 1);
}

// |W| for the wreath product Z_r wr Sym(n): r^n * n!.
inline BigInt colored_group_order(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("bad group parameters");
  BigInt o = factorial(static_cast<unsigned>(n));
  for (int i = 0; i < n; ++i) o *= r;
  return o;
}

}  // namespace eulerstab
