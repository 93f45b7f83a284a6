#include "eulerstab/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerstab {

UPoly::UPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const BigRat& c) {
  UPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

UPoly UPoly::monomial(const BigRat& c, std::size_t k) {
  UPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, BigRat(0));
    p.c_[k] = c;
  }
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& UPoly::lead() const {
  if (c_.empty()) throw std::logic_error("lead of zero polynomial");
  return c_.back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
  out.trim();
  return out;
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  UPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

UPoly operator*(const BigRat& c, const UPoly& p) {
  if (c == 0) return UPoly();
  UPoly out = p;
  for (auto& k : out.c_) k *= c;
  return out;
}

UPoly UPoly::derivative() const {
  UPoly out;
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out.c_[i - 1] = BigRat(static_cast<unsigned long>(i)) * c_[i];
  out.trim();
  return out;
}

BigRat UPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_text(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    BigRat a = c_[k];
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string body;
    if (k == 0) {
      body = rat_to_string(a);
    } else {
      std::string xs = var + (k > 1 ? "^" + std::to_string(k) : "");
      body = (a == 1) ? xs : rat_to_string(a) + "*" + xs;
    }
    out += body;
  }
  return out;
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UDivMod out;
  out.rem = a;
  if (a.degree() < b.degree()) return out;
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                        BigRat(0));
  std::vector<BigRat> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigRat& bl = b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigRat f = r[static_cast<std::size_t>(k + b.degree())] / bl;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i)
      r[static_cast<std::size_t>(k) + i] -= f * bc[i];
  }
  out.quot = UPoly(std::move(q));
  out.rem = UPoly(std::move(r));
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (BigRat(1) / a.lead()) * a;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return UPoly::constant(1);
  UPoly g = upoly_gcd(p, p.derivative());
  return divmod(p, g).quot;
}

}  // namespace eulerstab
