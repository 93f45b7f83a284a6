#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerstab/families.hpp"
#include "eulerstab/multipoly.hpp"
#include "eulerstab/report.hpp"
#include "eulerstab/upoly.hpp"

namespace eulerstab {

// Exact count of distinct real roots via a Sturm chain on the squarefree part.
struct SturmReport {
  int degree = -1;
  int squarefreeDegree = -1;
  int distinctRealRoots = 0;
  bool isRealRooted = false;
};

// Throws std::invalid_argument for the zero polynomial.
SturmReport sturm(const UPoly& p);

// Elements of Q(sqrt(3)), kept exact: a + b*sqrt(3).
struct QRad3 {
  BigRat a;
  BigRat b;

  QRad3() : a(0), b(0) {}
  QRad3(BigRat av, BigRat bv) : a(std::move(av)), b(std::move(bv)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  double to_double() const;
};

QRad3 operator+(const QRad3& l, const QRad3& r);
QRad3 operator-(const QRad3& l, const QRad3& r);
QRad3 operator*(const QRad3& l, const QRad3& r);
bool operator==(const QRad3& l, const QRad3& r);

// Complexification of Q(sqrt(3)): re + im*i with re, im in Q(sqrt(3)).
struct QRad3C {
  QRad3 re;
  QRad3 im;

  QRad3C() = default;
  QRad3C(QRad3 r, QRad3 i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const;
};

QRad3C operator+(const QRad3C& l, const QRad3C& r);
QRad3C operator-(const QRad3C& l, const QRad3C& r);
QRad3C operator*(const QRad3C& l, const QRad3C& r);
bool operator==(const QRad3C& l, const QRad3C& r);

// Evaluates p exactly over Q(sqrt(3))[i] at the given full assignment.
QRad3C eval_qrad3c(const MPoly& p,
                   const std::vector<std::pair<VarId, QRad3C>>& point);

// Rayleigh difference (d_i f)(d_j f) - f (d_i d_j f) for multiaffine f.
// Throws std::invalid_argument if f is not multiaffine or i == j.
MPoly rayleigh_delta(const MPoly& f, VarId i, VarId j);

struct StabilityWitness {
  std::string kind;  // "halfPlaneZero" or "rayleighNegative"
  // halfPlaneZero: complex point with all imaginary parts positive.
  std::vector<std::pair<VarId, std::complex<double>>> point;
  std::complex<double> value{0.0, 0.0};
  bool exact = false;  // true when the zero was certified in exact arithmetic
  // rayleighNegative: exact rational point and the exact negative value.
  VarId i{Axis::X, 0};
  VarId j{Axis::X, 0};
  std::vector<std::pair<VarId, BigRat>> realPoint;
  BigRat delta{0};
  std::string to_json_string() const;
};

struct FalsifyOptions {
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-6;      // |f| below this at an interior point counts as a hit
  double refineTol = 1e-9;
  double imFloor = 0.05;  // random search keeps Im(z) above this
};

// Random search for a zero of p with all variables in the open upper half
// plane. Returns a witness if |p| drops below opts.tol, nullopt otherwise.
std::optional<StabilityWitness> falsify_halfplane(const MPoly& p,
                                                  const FalsifyOptions& opts = {});

// Grid plus random search for an exact rational point with negative Rayleigh
// difference for some variable pair. Exact arithmetic throughout.
std::optional<StabilityWitness> falsify_rayleigh(const MPoly& p,
                                                 const FalsifyOptions& opts = {});

// The known interior zero of the type D descent-top generating polynomial at
// n = 3: certified exactly over Q(sqrt(3))[i], reported with a double
// approximation alongside.
struct DStar3Witness {
  bool exactZero = false;
  std::complex<double> approxValue{0.0, 0.0};
  StabilityWitness witness;
};

DStar3Witness dstar3_halfplane_witness();

enum class OperatorKind { TypeA, TypeB, TypeG };

// Checks the defining identity of the recurrence operator on its test symbol
// P = prod_i (x_i + u_i)(y_i + v_i): the derivative expansion must match the
// sum of exact quotients P / (x_i + u_i), P / (y_i + v_i). Exact equality.
bool verify_operator_symbol(OperatorKind kind, int n, int r = 2,
                            QMode qmode = QMode::SingleSymbolic,
                            const BigRat& qvalue = BigRat(0));

struct RealRootBounds {
  int aMaxN = 10;
  int bMaxN = 8;
  int gMaxN = 6;
  int gMaxR = 4;
  int affMaxN = 8;
  int chowMaxN = 10;
  int affBMaxN = 8;
  int affDMaxN = 8;
  int maxNCap = 0;  // 0 = no cap; otherwise clamps every bound above
};

std::vector<CheckResult> realrooted_suite(const RealRootBounds& bounds = {});

struct StabilityBounds {
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  int opMaxN = 5;
  int maxNCap = 0;
};

// Witness checks, Rayleigh identities and operator-symbol checks.
std::vector<CheckResult> stability_suite(const StabilityBounds& bounds = {});

// Search for stability counterexamples of the affine type B family. Finding
// nothing is the expected outcome; rows are informational either way.
std::vector<CheckResult> affine_b_probe_suite(int maxN = 4,
                                              std::uint64_t budget = 100000,
                                              std::uint64_t seed = 0);

}  // namespace eulerstab
