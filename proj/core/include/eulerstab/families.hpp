#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerstab/multipoly.hpp"
#include "eulerstab/perms.hpp"
#include "eulerstab/report.hpp"
#include "eulerstab/upoly.hpp"

namespace eulerstab {

// Polynomial families. D is the descent-top polynomial of the B statistics
// restricted to D_n (brute force only); DStar uses the sigma_0 = -sigma_2
// statistics (brute force only, generally non-multiaffine); DStem is the
// multivariate combination B_n(x,y;1) - n 2^{n-1} x_n y_n A_{n-2}
// (construction only).
enum class Family { A, B, D, G, AffA, AffC, AffB, DStar, DStem };

enum class QMode { None, SingleSymbolic, MultiSymbolic, Value };

struct FamilySpec {
  Family family = Family::A;
  int n = 1;
  int r = 2;  // only consulted for Family::G
  QMode qmode = QMode::None;
  BigRat qvalue = 0;  // only consulted for QMode::Value
};

std::string family_code(Family f);
Family family_from_code(const std::string& code);
std::string qmode_code(const FamilySpec& spec);

// Sum of x^{DT} y^{AT} (q-weighted per qmode) over the group named by spec,
// enumerated by statistics. Deterministic for any jobs value. Throws
// std::invalid_argument for AffB and DStem, which have no statistic model.
MPoly brute_force(const FamilySpec& spec, int jobs = 1);

// A_n via A_0 = 1, A_n = (x_{n+1}+y_{n+1}) A_{n-1} + x_{n+1} y_{n+1} del A_{n-1}.
MPoly rec_a(int n);

// G_n^r via G_1 = (q_1+...+q_1^{r-1}) x_1 + y_1 and the one-step operator
// with multiplier 1 + q_n + ... + q_n^{r-1} on the derivative term. qmode
// selects a shared symbolic q, per-position symbolic q_i, or a rational
// value (QMode::None evaluates at q = 1). Family B is r = 2.
MPoly rec_g(int n, int r, QMode qmode = QMode::None, const BigRat& qvalue = 0);

// (n+1) x_{n+1} y_{n+1} A_{n-1}.
MPoly affine_a(int n);

// C~_1 = 2 x_1 y_1, C~_n = 2 x_n y_n del C~_{n-1}. Also checks the closed
// form 2^n x_n y_n A_{n-1}(indices shifted down by one) and throws
// std::logic_error on mismatch.
MPoly rec_affine_c(int n);
MPoly affine_c_closed(int n);

// D_n(x,y) = B_n(x,y;1) - n 2^{n-1} x_n y_n A_{n-2}(x,y), n >= 2.
MPoly d_multivariate(int n);

// B~_n = 2 C~_n - 2n x_n y_n B_{n-1}(x,y;1), n >= 2.
MPoly affine_b(int n);

// Chow's univariate type D recurrence with D_{-1} = D_0 = D_1 = 1, n >= -1.
UPoly chow_d(int n);

// Dispatches spec to its recurrence (A, B, G, AffA, AffC, AffB, DStem).
// Throws std::invalid_argument for D and DStar, which are enumeration-only.
MPoly build_recurrence(const FamilySpec& spec);

// Specializes every y to 1 and diagonalizes the x axis. The input must not
// contain q variables (specialize them first).
UPoly univariate(const MPoly& p);

// Brute-force univariate descent generating polynomials.
UPoly brute_desc_sym(int m);                      // over Sym(m)
UPoly brute_desc_b(int n);                        // type B descents over B_n
UPoly brute_desc_b_q(int n, const BigRat& q);     // sum q^{N} x^{desB}
UPoly brute_desc_d(int n);                        // sigma_0 = -sigma_2 over D_n
UPoly brute_desc_g(int n, int r);                 // colored descents over G_n^r

struct IdentityBounds {
  int qMinusOneMaxN = 7;
  int rootUnityMaxN = 5;
  int rootUnityMaxR = 5;
  int stembridgeMaxN = 8;
  int prop61MaxN = 8;
  int prop62MaxN = 8;
  int reinerMaxN = 6;
  std::uint64_t seed = 0;
  int maxNCap = 0;  // 0 = no extra cap
};

// The six identity checks: q = -1 product formula, root-of-unity product
// formula, the univariate type D decomposition, the two affine univariate
// decompositions, and the signed descent-position product formula.
std::vector<CheckResult> identity_suite(const IdentityBounds& bounds = {});

struct OracleBounds {
  int appendix = 1;           // 0 disables the golden comparisons
  int aMaxN = 7;
  int bMaxN = 6;
  int gMaxR = 4;
  int gMaxN = 6;
  std::uint64_t gBudget = 1000000;  // skip (n, r) with r^n n! above this
  int affMaxN = 6;
  int chowMaxN = 8;
  int qZeroMaxN = 5;
  int jobs = 1;
  int maxNCap = 0;
};

// Brute force vs recurrence equivalences, the frozen reference polynomials,
// the closed-form affine C check, Chow vs brute force, and the q = 0
// reduction.
std::vector<CheckResult> oracle_suite(const OracleBounds& bounds = {});

// Positivity of d_multivariate coefficients for 2 <= n <= maxN (exact).
std::vector<CheckResult> positivity_suite(int maxN = 11,
                                          bool asserted = false);

// Frozen reference polynomials (window-notation families at small rank).
struct ReferencePoly {
  std::string name;
  FamilySpec spec;
  std::string text;  // parseable by MPoly::from_text
};
const std::vector<ReferencePoly>& appendix_reference();

// The 10-term reference for DStar at n = 3.
const std::string& dstar3_reference_text();

}  // namespace eulerstab
