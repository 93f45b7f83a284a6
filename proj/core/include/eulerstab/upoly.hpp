#pragma once

#include <string>
#include <vector>

#include "eulerstab/rational.hpp"

namespace eulerstab {

// Dense univariate polynomial with exact rational coefficients, ascending
// powers, no trailing zeros. The zero polynomial has an empty vector and
// degree() == -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRat> coeffs);
  static UPoly zero() { return UPoly(); }
  static UPoly constant(const BigRat& c);
  static UPoly monomial(const BigRat& c, std::size_t k);  // c * x^k

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(0); }
  const BigRat& lead() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const BigRat& c, const UPoly& p);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const;
  BigRat eval(const BigRat& x) const;
  std::string to_text(const std::string& var = "x") const;

 private:
  std::vector<BigRat> c_;
  void trim();
};

// Euclidean division a = q*b + r with deg r < deg b; throws on b == 0.
struct UDivMod {
  UPoly quot, rem;
};
UDivMod divmod(const UPoly& a, const UPoly& b);

// Monic greatest common divisor (1 for coprime, 0 only if both are 0).
UPoly upoly_gcd(UPoly a, UPoly b);

// p / gcd(p, p'): same roots, all simple.
UPoly squarefree_part(const UPoly& p);

}  // namespace eulerstab
