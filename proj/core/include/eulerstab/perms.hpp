#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eulerstab/rational.hpp"

namespace eulerstab {

// Element of Z_r wr Sym(n) in window notation: values is a permutation of
// 1..n and colors[i] in [0, r) is the color of values[i]. r = 1 gives the
// symmetric group, r = 2 signed permutations (color 1 = negative).
struct ColoredPerm {
  int n = 0;
  int r = 1;
  std::vector<int> values;
  std::vector<int> colors;
};

// Descent-top / ascent-top record. dt and at hold letter values (tops),
// negExp maps a letter value to its color exponent (value-indexed), and
// nCount is the total color weight (for r = 2, the number of negative
// entries).
struct StatRecord {
  std::set<int> dt, at;
  std::map<int, int> negExp;
  int nCount = 0;
};

// Total order on colored letters: all colored letters are below 0 and all
// plain letters above, colored letters sort by value descending then color
// descending, plain letters by value. The padded zero is (value 0, color 0).
// Returns a key that orders exactly this way under integer comparison.
long long colored_key(int value, int color, int r);

bool colored_less(int va, int ca, int vb, int cb, int r);

std::uint64_t group_size_u64(int n, int r);

// k-th element (0-based) in lexicographic (values, colors) order.
ColoredPerm unrank_element(int n, int r, std::uint64_t k);

// All r^n * n! elements in lexicographic (values, colors) order.
std::vector<ColoredPerm> enumerate(int n, int r);

// Elements of D_n: signed permutations with an even number of negatives,
// in the induced lexicographic order.
std::vector<ColoredPerm> enumerate_d(int n);

// Streams elements with ranks in [lo, hi) in lexicographic order without
// materializing the whole group. f receives a const ColoredPerm&.
template <class F>
void for_each_element(int n, int r, std::uint64_t lo, std::uint64_t hi, F&& f) {
  if (lo >= hi) return;
  ColoredPerm cp = unrank_element(n, r, lo);
  for (std::uint64_t k = lo; k < hi; ++k) {
    f(static_cast<const ColoredPerm&>(cp));
    if (k + 1 == hi) break;
    int i = n - 1;
    while (i >= 0 && cp.colors[i] == r - 1) cp.colors[i--] = 0;
    if (i >= 0) {
      ++cp.colors[i];
    } else {
      std::next_permutation(cp.values.begin(), cp.values.end());
    }
  }
}

// Type A statistics over a window that is a permutation of 1..m: slot i
// (1-based) compares w[i-1] and w[i]; the larger letter is the top.
StatRecord stats_a(const std::vector<int>& window);

// Colored statistics with a padded zero: slots 0..n-1, slot 0 compares 0
// with the first entry under the colored order; tops are letter values.
StatRecord stats_colored(const ColoredPerm& cp);

// Number of colored descents (positions i in 0..n-1 with sigma_i > sigma_{i+1}
// in the colored order, sigma_0 = 0).
int descent_count_colored(const ColoredPerm& cp);

// Type B descents of a signed permutation (r = 2), sigma_0 = 0.
int descent_count_b(const ColoredPerm& cp);

// Positions i in 1..n with sigma_{i-1} > sigma_i (sigma_0 = 0), ascending.
std::vector<int> descent_positions_b(const ColoredPerm& cp);

// Type D descents: as type B but with sigma_0 = -sigma_2. Requires n >= 2.
int descent_count_d(const ColoredPerm& cp);

// Affine type A statistics on a window permutation of 1..m (m >= 2): the
// ordinary record plus the wrap slot comparing w[m-1] with w[0]; a wrap
// descent contributes the last entry to dt, a wrap ascent the first entry
// to at.
StatRecord affine_stats_a(const std::vector<int>& window);

// Affine type C statistics on a signed permutation: the type B record plus
// the wrap contribution of |sigma_n| to dt when sigma_n > 0, else to at.
StatRecord affine_stats_c(const ColoredPerm& cp);

// Type D descent-top/ascent-top multisets with sigma_0 = -sigma_2 (r = 2,
// n >= 2). Tops can repeat, so multiplicities are kept.
struct DStarRecord {
  std::map<int, int> dt, at;
};
DStarRecord stats_dstar(const ColoredPerm& cp);

// Window rendering: "3,1,-4" for r <= 2, "z<v>^<e>" entries for r >= 3.
std::string to_window_string(const ColoredPerm& cp);

// CSV rows (element, dt, at, negExp) for the whole group; list cells use
// ';' separators so the element cell is the only quoted one.
std::string stats_csv(int n, int r);

}  // namespace eulerstab
