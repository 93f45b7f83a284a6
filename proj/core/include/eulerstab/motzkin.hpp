#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "eulerstab/families.hpp"
#include "eulerstab/multipoly.hpp"
#include "eulerstab/report.hpp"
#include "eulerstab/upoly.hpp"

namespace eulerstab {

// Steps of a 2-colored Motzkin path: up, down, and two colors of level step.
enum class Step : std::uint8_t { NE, SE, EBar, EUnder };

struct MotzkinPath {
  std::vector<Step> steps;
};

// Heights stay nonnegative and the path returns to level 0.
bool path_valid(const MotzkinPath& path);
// Space-joined tokens: NE SE E+ E- (E+ is the bar color, E- the under color).
std::string path_to_string(const MotzkinPath& path);

// The x/y support of one monomial: which letters carry x (descent tops) and
// which carry y (ascent tops). Letters are values in [n].
struct SupportPattern {
  int n = 0;
  std::set<int> dt;
  std::set<int> at;
};

// Letter classes: a letter is a valley (neither top), a peak (both), or a
// one-sided top.
enum class LetterClass { Valley, Peak, DescentOnly, AscentOnly };
LetterClass letter_class(const SupportPattern& sp, int j);

// Reads x_i / y_i exponents off a monomial (q factors are ignored). Requires
// exponents <= 1 and indices <= n.
SupportPattern support_of_monomial(int n, const Monomial& m);

// Letters 2..n map to a path of length n-1: valley -> NE, peak -> SE,
// descent-only -> E+, ascent-only -> E-. Letter 1 must be a valley.
bool support_valid_a(const SupportPattern& sp);
MotzkinPath path_from_support_a(const SupportPattern& sp);
SupportPattern support_from_path_a(const MotzkinPath& path);

// Letters 1..n map to a path of length n with the level colors swapped:
// descent-only -> E-, ascent-only -> E+.
bool support_valid_b(const SupportPattern& sp);
MotzkinPath path_from_support_b(const SupportPattern& sp);
SupportPattern support_from_path_b(const MotzkinPath& path);

enum class WeightScheme { TypeA, TypeBq, TypeGr };

// Multiplicative step weights, polynomials in q (constants for TypeA), with
// k the height before the step:
//   TypeA:  every step weighs k + 1.
//   TypeGr: with s0 = 1 + q + ... + q^(r-1) and s1 = s0 - 1,
//           NE: (k+1) s0,  SE: k s0,  E+: 1 + k s0,  E-: s1 + k s0.
//   TypeBq is TypeGr at r = 2.
UPoly path_weight(const MotzkinPath& path, WeightScheme scheme, int r = 2);

// Visits every 2-colored Motzkin path of the given length, in lexicographic
// step order NE < SE < E+ < E-.
void for_each_path(int length, const std::function<void(const MotzkinPath&)>& fn);

std::uint64_t count_paths(int length);

// Support census of one family against the Catalan numbers.
struct CensusRow {
  int n = 0;
  std::string family;
  std::uint64_t supportCount = 0;
  BigInt catalanN;
  BigInt catalanN1;
  BigRat weightedTotal;
  bool indexShifted = false;  // count matches C_{n+1} instead of C_n
};

CensusRow catalan_census(Family family, int n);  // Family::A or Family::B

struct MotzkinBounds {
  int charAMaxN = 8;
  int charBMaxN = 6;
  int coeffAMaxN = 7;
  int coeffBMaxN = 6;
  int massMaxN = 9;
  int pathCountMaxLen = 11;
  int censusAMaxN = 10;
  int censusBMaxN = 8;
  int gMaxN = 3;
  int gMaxR = 4;
  int maxNCap = 0;
};

std::vector<CheckResult> motzkin_suite(const MotzkinBounds& bounds = {});

}  // namespace eulerstab
