#include "eulerstab/perms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eulerstab {

long long colored_key(int value, int color, int r) {
  if (value == 0) return 0;
  if (color == 0) return value;
  return -static_cast<long long>(value - 1) * (r - 1) - color;
}

bool colored_less(int va, int ca, int vb, int cb, int r) {
  return colored_key(va, ca, r) < colored_key(vb, cb, r);
}

std::uint64_t group_size_u64(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("bad group parameters");
  std::uint64_t s = 1;
  for (int i = 2; i <= n; ++i) s *= static_cast<std::uint64_t>(i);
  for (int i = 0; i < n; ++i) {
    if (s > (~0ull) / static_cast<std::uint64_t>(r))
      throw std::invalid_argument("group too large to rank in 64 bits");
    s *= static_cast<std::uint64_t>(r);
  }
  return s;
}

ColoredPerm unrank_element(int n, int r, std::uint64_t k) {
  std::uint64_t colorSpan = 1;
  for (int i = 0; i < n; ++i) colorSpan *= static_cast<std::uint64_t>(r);
  std::uint64_t permRank = k / colorSpan;
  std::uint64_t colorRank = k % colorSpan;

  ColoredPerm cp;
  cp.n = n;
  cp.r = r;
  cp.values.resize(n);
  cp.colors.assign(n, 0);

  // Factorial number system for the value permutation.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  if (n > 0 && permRank >= fact[n])
    throw std::invalid_argument("rank out of range");
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = fact[n - 1 - i];
    std::size_t d = static_cast<std::size_t>(permRank / f);
    permRank %= f;
    cp.values[i] = pool[d];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  for (int i = n - 1; i >= 0; --i) {
    cp.colors[i] = static_cast<int>(colorRank % static_cast<std::uint64_t>(r));
    colorRank /= static_cast<std::uint64_t>(r);
  }
  return cp;
}

std::vector<ColoredPerm> enumerate(int n, int r) {
  std::uint64_t total = group_size_u64(n, r);
  std::vector<ColoredPerm> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_element(n, r, 0, total,
                   [&](const ColoredPerm& cp) { out.push_back(cp); });
  return out;
}

std::vector<ColoredPerm> enumerate_d(int n) {
  std::uint64_t total = group_size_u64(n, 2);
  std::vector<ColoredPerm> out;
  out.reserve(static_cast<std::size_t>(total / 2));
  for_each_element(n, 2, 0, total, [&](const ColoredPerm& cp) {
    int neg = 0;
    for (int c : cp.colors) neg += c;
    if (neg % 2 == 0) out.push_back(cp);
  });
  return out;
}

StatRecord stats_a(const std::vector<int>& window) {
  StatRecord rec;
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    int top = std::max(window[i], window[i + 1]);
    if (window[i] > window[i + 1])
      rec.dt.insert(top);
    else
      rec.at.insert(top);
  }
  return rec;
}

StatRecord stats_colored(const ColoredPerm& cp) {
  StatRecord rec;
  long long prevKey = 0;  // sigma_0 = 0
  int prevVal = 0;
  for (int i = 0; i < cp.n; ++i) {
    long long key = colored_key(cp.values[i], cp.colors[i], cp.r);
    int top = std::max(prevVal, cp.values[i]);
    if (prevKey > key)
      rec.dt.insert(top);
    else
      rec.at.insert(top);
    prevKey = key;
    prevVal = cp.values[i];
    if (cp.colors[i] > 0) rec.negExp[cp.values[i]] = cp.colors[i];
    rec.nCount += cp.colors[i];
  }
  return rec;
}

int descent_count_colored(const ColoredPerm& cp) {
  int d = 0;
  long long prevKey = 0;
  for (int i = 0; i < cp.n; ++i) {
    long long key = colored_key(cp.values[i], cp.colors[i], cp.r);
    if (prevKey > key) ++d;
    prevKey = key;
  }
  return d;
}

int descent_count_b(const ColoredPerm& cp) {
  int d = 0;
  int prev = 0;
  for (int i = 0; i < cp.n; ++i) {
    int cur = cp.colors[i] ? -cp.values[i] : cp.values[i];
    if (prev > cur) ++d;
    prev = cur;
  }
  return d;
}

std::vector<int> descent_positions_b(const ColoredPerm& cp) {
  std::vector<int> pos;
  int prev = 0;
  for (int i = 0; i < cp.n; ++i) {
    int cur = cp.colors[i] ? -cp.values[i] : cp.values[i];
    if (prev > cur) pos.push_back(i + 1);
    prev = cur;
  }
  return pos;
}

int descent_count_d(const ColoredPerm& cp) {
  if (cp.n < 2) throw std::invalid_argument("type D needs n >= 2");
  int d = 0;
  int second = cp.colors[1] ? -cp.values[1] : cp.values[1];
  int prev = -second;
  for (int i = 0; i < cp.n; ++i) {
    int cur = cp.colors[i] ? -cp.values[i] : cp.values[i];
    if (prev > cur) ++d;
    prev = cur;
  }
  return d;
}

StatRecord affine_stats_a(const std::vector<int>& window) {
  if (window.size() < 2)
    throw std::invalid_argument("affine type A needs at least two entries");
  StatRecord rec = stats_a(window);
  int first = window.front(), last = window.back();
  if (last > first)
    rec.dt.insert(last);
  else
    rec.at.insert(first);
  return rec;
}

StatRecord affine_stats_c(const ColoredPerm& cp) {
  if (cp.n < 1) throw std::invalid_argument("affine type C needs n >= 1");
  StatRecord rec = stats_colored(cp);
  int lastVal = cp.values[cp.n - 1];
  bool lastNeg = cp.colors[cp.n - 1] != 0;
  if (!lastNeg)
    rec.dt.insert(lastVal);
  else
    rec.at.insert(lastVal);
  return rec;
}

DStarRecord stats_dstar(const ColoredPerm& cp) {
  if (cp.n < 2) throw std::invalid_argument("type D needs n >= 2");
  if (cp.r != 2) throw std::invalid_argument("type D statistics need r = 2");
  DStarRecord rec;
  int second = cp.colors[1] ? -cp.values[1] : cp.values[1];
  int prev = -second;
  for (int i = 0; i < cp.n; ++i) {
    int cur = cp.colors[i] ? -cp.values[i] : cp.values[i];
    int top = std::max(std::abs(prev), std::abs(cur));
    if (prev > cur)
      ++rec.dt[top];
    else
      ++rec.at[top];
    prev = cur;
  }
  return rec;
}

std::string to_window_string(const ColoredPerm& cp) {
  std::ostringstream os;
  for (int i = 0; i < cp.n; ++i) {
    if (i) os << ",";
    if (cp.colors[i] == 0)
      os << cp.values[i];
    else if (cp.r == 2)
      os << -cp.values[i];
    else
      os << "z" << cp.values[i] << "^" << cp.colors[i];
  }
  return os.str();
}

namespace {

std::string join_ints(const std::set<int>& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ";";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::string stats_csv(int n, int r) {
  std::ostringstream os;
  os << "element,dt,at,negExp\n";
  for_each_element(n, r, 0, group_size_u64(n, r), [&](const ColoredPerm& cp) {
    StatRecord rec = stats_colored(cp);
    std::string neg;
    for (const auto& [v, e] : rec.negExp) {
      if (!neg.empty()) neg += ";";
      neg += std::to_string(v) + ":" + std::to_string(e);
    }
    os << "\"" << to_window_string(cp) << "\"," << join_ints(rec.dt) << ","
       << join_ints(rec.at) << "," << neg << "\n";
  });
  return os.str();
}

}  // namespace eulerstab
