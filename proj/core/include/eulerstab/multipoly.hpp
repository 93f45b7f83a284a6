#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerstab/rational.hpp"

namespace eulerstab {

// Variable universe: three disjoint axes of 1-indexed variables.
// Ordering is (axis, index) with X < Y < Q.
enum class Axis : std::uint8_t { X = 0, Y = 1, Q = 2 };

struct VarId {
  Axis axis = Axis::X;
  std::uint32_t index = 1;

  std::uint64_t packed() const {
    return (static_cast<std::uint64_t>(axis) << 32) | index;
  }
  friend bool operator==(const VarId& a, const VarId& b) {
    return a.packed() == b.packed();
  }
  friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
  friend bool operator<(const VarId& a, const VarId& b) {
    return a.packed() < b.packed();
  }
  std::string name() const;                       // "x3", "y1", "q2"
  static VarId parse(const std::string& name);    // inverse of name()
};

inline VarId xvar(std::uint32_t i) { return {Axis::X, i}; }
inline VarId yvar(std::uint32_t i) { return {Axis::Y, i}; }
inline VarId qvar(std::uint32_t i) { return {Axis::Q, i}; }

// Product of variables with positive exponents, kept sorted by VarId.
// The empty monomial is 1.
class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exp = 1;
    friend bool operator==(const Factor& a, const Factor& b) {
      return a.var == b.var && a.exp == b.exp;
    }
  };

  Monomial() = default;
  // Normalizes: sorts by VarId, merges repeats, drops zero exponents.
  static Monomial make(std::vector<Factor> factors);
  static Monomial var(VarId v, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;

  Monomial times(const Monomial& o) const;
  // Componentwise division; nullopt when some exponent would go negative.
  std::optional<Monomial> divided_by(const Monomial& o) const;
  // Decrements the exponent of v (dropping it at zero); v must divide *this.
  Monomial dec(VarId v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.f_ == b.f_;
  }

 private:
  std::vector<Factor> f_;
};

// Canonical order: graded, then within one degree the monomial with the
// smaller exponent on the largest differing variable comes first. This is the
// order used for term output everywhere (text and JSON).
int cmp_monomial(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_monomial(a, b) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& f : m.factors()) {
      h = (h ^ f.var.packed()) * 1099511628211ull;
      h = (h ^ f.exp) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Sparse exact polynomial: terms sorted canonically, coefficients nonzero.
class MPoly {
 public:
  using Term = std::pair<Monomial, BigRat>;

  MPoly() = default;
  static MPoly zero() { return MPoly(); }
  static MPoly constant(const BigRat& c);
  static MPoly var(VarId v);
  static MPoly term(const Monomial& m, const BigRat& c);
  // Normalizes arbitrary term lists (sorts, merges, prunes zeros).
  static MPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  std::uint32_t total_degree() const;
  BigRat coefficient(const Monomial& m) const;
  BigRat coefficient_sum() const;
  std::vector<VarId> variables() const;
  std::uint32_t max_xy_index() const;
  bool is_multiaffine() const;  // degree <= 1 in every variable, all axes

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const BigRat& c, const MPoly& p);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.t_ == b.t_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string to_text() const;
  std::string to_json_string() const;
  static MPoly from_json_string(const std::string& json);
  // Parses the to_text() dialect: terms joined by +/-, factors by '*',
  // exponents by '^', coefficients as integers or p/q rationals.
  static MPoly from_text(const std::string& text);

 private:
  std::vector<Term> t_;  // canonical order, no zero coefficients
};

// Formal partial derivative with respect to v.
MPoly partial(const MPoly& p, VarId v);

// Sum over i = 1..maxIndex of d/dx_i + d/dy_i. Indices beyond the variables
// actually present contribute zero, so callers may pass any superset range.
MPoly del(const MPoly& p, std::uint32_t maxIndex);

// Substitutes the exact rational a for v.
MPoly specialize(const MPoly& p, VarId v, const BigRat& a);

// Substitutes a for every variable on the given axis.
MPoly specialize_axis(const MPoly& p, Axis axis, const BigRat& a);

// Renames every variable on the given axis to index 1 (exponents add).
MPoly diagonalize(const MPoly& p, Axis axis);

// Adds delta to every variable index on all axes; throws std::domain_error
// if any present variable would get index < 1.
MPoly shift_indices(const MPoly& p, int delta);

// Exact quotient p / d, or nullopt when d does not divide p exactly.
// Throws std::invalid_argument when d is zero.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d);

// Evaluation over an arbitrary commutative ring R. `lift` injects rational
// coefficients into R; every variable of p must be assigned or
// std::invalid_argument is thrown.
template <class R, class Lift>
R eval_generic(const MPoly& p, const std::map<VarId, R>& assign, R zero,
               Lift lift) {
  R acc = zero;
  for (const auto& [m, c] : p.terms()) {
    R tv = lift(c);
    for (const auto& f : m.factors()) {
      auto it = assign.find(f.var);
      if (it == assign.end())
        throw std::invalid_argument("eval: missing assignment for " +
                                    f.var.name());
      for (std::uint32_t e = 0; e < f.exp; ++e) tv = tv * it->second;
    }
    acc = acc + tv;
  }
  return acc;
}

std::complex<double> eval_complex(
    const MPoly& p, const std::map<VarId, std::complex<double>>& assign);

BigRat eval_rational(const MPoly& p, const std::map<VarId, BigRat>& assign);

}  // namespace eulerstab
