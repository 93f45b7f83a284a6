#include "eulerstab/motzkin.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace eulerstab {

namespace {

int step_rise(Step s) {
  switch (s) {
    case Step::NE: return 1;
    case Step::SE: return -1;
    default: return 0;
  }
}

const char* step_token(Step s) {
  switch (s) {
    case Step::NE: return "NE";
    case Step::SE: return "SE";
    case Step::EBar: return "E+";
    default: return "E-";
  }
}

}  // namespace

bool path_valid(const MotzkinPath& path) {
  int h = 0;
  for (Step s : path.steps) {
    h += step_rise(s);
    if (h < 0) return false;
  }
  return h == 0;
}

std::string path_to_string(const MotzkinPath& path) {
  std::ostringstream os;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (i) os << ' ';
    os << step_token(path.steps[i]);
  }
  return os.str();
}

LetterClass letter_class(const SupportPattern& sp, int j) {
  bool d = sp.dt.count(j) > 0;
  bool a = sp.at.count(j) > 0;
  if (d && a) return LetterClass::Peak;
  if (d) return LetterClass::DescentOnly;
  if (a) return LetterClass::AscentOnly;
  return LetterClass::Valley;
}

SupportPattern support_of_monomial(int n, const Monomial& m) {
  SupportPattern sp;
  sp.n = n;
  for (const auto& f : m.factors()) {
    if (f.var.axis == Axis::Q) continue;
    if (f.exp != 1)
      throw std::invalid_argument("support_of_monomial: exponent above 1");
    int idx = static_cast<int>(f.var.index);
    if (idx < 1 || idx > n)
      throw std::invalid_argument("support_of_monomial: index out of range");
    if (f.var.axis == Axis::X)
      sp.dt.insert(idx);
    else
      sp.at.insert(idx);
  }
  return sp;
}

namespace {

bool letters_in_range(const SupportPattern& sp) {
  for (int j : sp.dt)
    if (j < 1 || j > sp.n) return false;
  for (int j : sp.at)
    if (j < 1 || j > sp.n) return false;
  return true;
}

Step step_of_class_a(LetterClass c) {
  switch (c) {
    case LetterClass::Valley: return Step::NE;
    case LetterClass::Peak: return Step::SE;
    case LetterClass::DescentOnly: return Step::EBar;
    default: return Step::EUnder;
  }
}

Step step_of_class_b(LetterClass c) {
  switch (c) {
    case LetterClass::Valley: return Step::NE;
    case LetterClass::Peak: return Step::SE;
    case LetterClass::DescentOnly: return Step::EUnder;
    default: return Step::EBar;
  }
}

}  // namespace

bool support_valid_a(const SupportPattern& sp) {
  if (sp.n < 1 || !letters_in_range(sp)) return false;
  if (letter_class(sp, 1) != LetterClass::Valley) return false;
  MotzkinPath p;
  for (int j = 2; j <= sp.n; ++j)
    p.steps.push_back(step_of_class_a(letter_class(sp, j)));
  return path_valid(p);
}

MotzkinPath path_from_support_a(const SupportPattern& sp) {
  if (!support_valid_a(sp))
    throw std::invalid_argument("path_from_support_a: invalid support");
  MotzkinPath p;
  for (int j = 2; j <= sp.n; ++j)
    p.steps.push_back(step_of_class_a(letter_class(sp, j)));
  return p;
}

SupportPattern support_from_path_a(const MotzkinPath& path) {
  if (!path_valid(path))
    throw std::invalid_argument("support_from_path_a: invalid path");
  SupportPattern sp;
  sp.n = static_cast<int>(path.steps.size()) + 1;
  for (int j = 2; j <= sp.n; ++j) {
    Step s = path.steps[static_cast<std::size_t>(j - 2)];
    if (s == Step::SE) {
      sp.dt.insert(j);
      sp.at.insert(j);
    } else if (s == Step::EBar) {
      sp.dt.insert(j);
    } else if (s == Step::EUnder) {
      sp.at.insert(j);
    }
  }
  return sp;
}

bool support_valid_b(const SupportPattern& sp) {
  if (sp.n < 1 || !letters_in_range(sp)) return false;
  MotzkinPath p;
  for (int j = 1; j <= sp.n; ++j)
    p.steps.push_back(step_of_class_b(letter_class(sp, j)));
  return path_valid(p);
}

MotzkinPath path_from_support_b(const SupportPattern& sp) {
  if (!support_valid_b(sp))
    throw std::invalid_argument("path_from_support_b: invalid support");
  MotzkinPath p;
  for (int j = 1; j <= sp.n; ++j)
    p.steps.push_back(step_of_class_b(letter_class(sp, j)));
  return p;
}

SupportPattern support_from_path_b(const MotzkinPath& path) {
  if (!path_valid(path))
    throw std::invalid_argument("support_from_path_b: invalid path");
  SupportPattern sp;
  sp.n = static_cast<int>(path.steps.size());
  for (int j = 1; j <= sp.n; ++j) {
    Step s = path.steps[static_cast<std::size_t>(j - 1)];
    if (s == Step::SE) {
      sp.dt.insert(j);
      sp.at.insert(j);
    } else if (s == Step::EUnder) {
      sp.dt.insert(j);
    } else if (s == Step::EBar) {
      sp.at.insert(j);
    }
  }
  return sp;
}

UPoly path_weight(const MotzkinPath& path, WeightScheme scheme, int r) {
  if (!path_valid(path))
    throw std::invalid_argument("path_weight: invalid path");
  if (scheme == WeightScheme::TypeBq) r = 2;
  if (scheme != WeightScheme::TypeA && r < 1)
    throw std::invalid_argument("path_weight: r must be >= 1");

  UPoly s0, s1;
  if (scheme != WeightScheme::TypeA) {
    std::vector<BigRat> ones(static_cast<std::size_t>(r), BigRat(1));
    s0 = UPoly(ones);                       // 1 + q + ... + q^(r-1)
    s1 = s0 - UPoly::constant(BigRat(1));   // q + ... + q^(r-1)
  }

  UPoly w = UPoly::constant(BigRat(1));
  int h = 0;
  for (Step s : path.steps) {
    BigRat k(h);
    if (scheme == WeightScheme::TypeA) {
      w = (k + 1) * w;
    } else {
      switch (s) {
        case Step::NE: w = w * ((k + 1) * s0); break;
        case Step::SE: w = w * (k * s0); break;
        case Step::EBar: w = w * (UPoly::constant(BigRat(1)) + k * s0); break;
        case Step::EUnder: w = w * (s1 + k * s0); break;
      }
    }
    h += step_rise(s);
  }
  return w;
}

void for_each_path(int length,
                   const std::function<void(const MotzkinPath&)>& fn) {
  if (length < 0) throw std::invalid_argument("for_each_path: negative length");
  MotzkinPath p;
  p.steps.reserve(static_cast<std::size_t>(length));
  const Step order[] = {Step::NE, Step::SE, Step::EBar, Step::EUnder};
  std::function<void(int)> rec = [&](int h) {
    int pos = static_cast<int>(p.steps.size());
    if (pos == length) {
      if (h == 0) fn(p);
      return;
    }
    if (h > length - pos) return;  // cannot come back down in time
    for (Step s : order) {
      int nh = h + step_rise(s);
      if (nh < 0) continue;
      p.steps.push_back(s);
      rec(nh);
      p.steps.pop_back();
    }
  };
  rec(0);
}

std::uint64_t count_paths(int length) {
  std::uint64_t c = 0;
  for_each_path(length, [&](const MotzkinPath&) { ++c; });
  return c;
}

CensusRow catalan_census(Family family, int n) {
  if (n < 1) throw std::invalid_argument("catalan_census: n >= 1");
  CensusRow row;
  row.n = n;
  MPoly p;
  if (family == Family::A) {
    row.family = "A";
    p = rec_a(n - 1);
  } else if (family == Family::B) {
    row.family = "B";
    p = rec_g(n, 2, QMode::None);
  } else {
    throw std::invalid_argument("catalan_census: family must be A or B");
  }
  row.supportCount = p.size();
  row.catalanN = catalan(n);
  row.catalanN1 = catalan(n + 1);
  row.weightedTotal = p.coefficient_sum();
  row.indexShifted = BigInt(row.supportCount) == row.catalanN1 &&
                     row.catalanN1 != row.catalanN;
  return row;
}

namespace {

int capped(int v, int cap) { return cap > 0 ? std::min(v, cap) : v; }

CheckResult make_row(std::string check,
                     std::map<std::string, std::string> params, bool ok,
                     std::string detail, std::string severity = "asserted") {
  CheckResult r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.ok = ok;
  r.status = ok ? "pass" : "fail";
  r.severity = std::move(severity);
  r.detail = std::move(detail);
  return r;
}

std::uint64_t support_key(const SupportPattern& sp) {
  std::uint64_t dtMask = 0, atMask = 0;
  for (int j : sp.dt) dtMask |= 1ull << (j - 1);
  for (int j : sp.at) atMask |= 1ull << (j - 1);
  return (dtMask << 32) | atMask;
}

// All (dt, at) patterns over letters lo..n, as 4 choices per letter.
template <class F>
void for_each_pattern(int lo, int n, F&& fn) {
  int letters = n - lo + 1;
  std::uint64_t total = 1ull << (2 * letters);
  for (std::uint64_t code = 0; code < total; ++code) {
    SupportPattern sp;
    sp.n = n;
    std::uint64_t c = code;
    for (int j = lo; j <= n; ++j, c >>= 2) {
      if (c & 1) sp.dt.insert(j);
      if (c & 2) sp.at.insert(j);
    }
    fn(sp);
  }
}

}  // namespace

std::vector<CheckResult> motzkin_suite(const MotzkinBounds& bounds) {
  std::vector<CheckResult> out;

  {
    int maxN = capped(bounds.charAMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      MPoly p = rec_a(n - 1);
      std::unordered_set<std::uint64_t> present;
      for (const auto& [m, c] : p.terms())
        present.insert(support_key(support_of_monomial(n, m)));
      std::size_t validCount = 0;
      for_each_pattern(1, n, [&](const SupportPattern& sp) {
        bool valid = support_valid_a(sp);
        if (valid) ++validCount;
        bool inPoly = present.count(support_key(sp)) > 0;
        if (valid != inPoly && ok) {
          ok = false;
          bad = "n=" + std::to_string(n) + " pattern mismatch";
        }
      });
      if (ok && validCount != present.size()) {
        ok = false;
        bad = "n=" + std::to_string(n) + " count mismatch";
      }
    }
    out.push_back(make_row(
        "motzkin.support_characterization_a",
        {{"maxN", std::to_string(maxN)}}, ok,
        ok ? "valid patterns coincide with polynomial supports" : bad));
  }

  {
    int maxN = capped(bounds.charBMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      MPoly p = rec_g(n, 2, QMode::None);
      std::unordered_set<std::uint64_t> present;
      for (const auto& [m, c] : p.terms())
        present.insert(support_key(support_of_monomial(n, m)));
      for_each_pattern(1, n, [&](const SupportPattern& sp) {
        bool valid = support_valid_b(sp);
        bool inPoly = present.count(support_key(sp)) > 0;
        if (valid != inPoly && ok) {
          ok = false;
          bad = "n=" + std::to_string(n) + " pattern mismatch";
        }
      });
    }
    out.push_back(make_row(
        "motzkin.support_characterization_b",
        {{"maxN", std::to_string(maxN)}}, ok,
        ok ? "valid patterns coincide with polynomial supports" : bad));
  }

  {
    int maxN = capped(bounds.coeffAMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 2; n <= maxN && ok; ++n) {
      MPoly p = rec_a(n - 1);
      for (const auto& [m, c] : p.terms()) {
        MotzkinPath path = path_from_support_a(support_of_monomial(n, m));
        if (path_weight(path, WeightScheme::TypeA) != UPoly::constant(c)) {
          ok = false;
          bad = "n=" + std::to_string(n) + " at " + MPoly::term(m, c).to_text();
          break;
        }
      }
    }
    out.push_back(make_row("motzkin.coefficient_recovery_a",
                           {{"maxN", std::to_string(maxN)}}, ok,
                           ok ? "path weights reproduce all coefficients" : bad));
  }

  {
    int maxN = capped(bounds.coeffBMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      MPoly p = rec_g(n, 2, QMode::SingleSymbolic);
      std::map<Monomial, UPoly, MonomialLess> grouped;
      for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> xy;
        std::size_t qexp = 0;
        for (const auto& f : m.factors()) {
          if (f.var.axis == Axis::Q)
            qexp = f.exp;
          else
            xy.push_back(f);
        }
        Monomial key = Monomial::make(std::move(xy));
        grouped[key] = grouped[key] + UPoly::monomial(c, qexp);
      }
      for (const auto& [m, qpoly] : grouped) {
        MotzkinPath path = path_from_support_b(support_of_monomial(n, m));
        if (path_weight(path, WeightScheme::TypeBq) != qpoly) {
          ok = false;
          bad = "n=" + std::to_string(n) + " at " + m.factors().front().var.name();
          break;
        }
      }
    }
    out.push_back(make_row("motzkin.coefficient_recovery_b",
                           {{"maxN", std::to_string(maxN)}}, ok,
                           ok ? "path weights reproduce all q-coefficients" : bad));
  }

  {
    int maxN = capped(bounds.massMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      BigRat total(0);
      for_each_path(n - 1, [&](const MotzkinPath& p) {
        total += path_weight(p, WeightScheme::TypeA).coeff(0);
      });
      if (total != BigRat(factorial(n))) {
        ok = false;
        bad = "n=" + std::to_string(n);
      }
    }
    out.push_back(make_row("motzkin.mass_a", {{"maxN", std::to_string(maxN)}},
                           ok,
                           ok ? "total path weight equals n!" : bad));
  }

  {
    int maxN = capped(bounds.massMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      BigRat total(0);
      for_each_path(n, [&](const MotzkinPath& p) {
        total += path_weight(p, WeightScheme::TypeBq).eval(BigRat(1));
      });
      BigRat expect = BigRat(factorial(n)) * rat_pow(BigRat(2), n);
      if (total != expect) {
        ok = false;
        bad = "n=" + std::to_string(n);
      }
    }
    out.push_back(make_row("motzkin.mass_b", {{"maxN", std::to_string(maxN)}},
                           ok,
                           ok ? "total path weight at q=1 equals 2^n n!" : bad));
  }

  {
    int maxLen = capped(bounds.pathCountMaxLen, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int len = 0; len <= maxLen && ok; ++len) {
      if (BigInt(count_paths(len)) != catalan(len + 1)) {
        ok = false;
        bad = "length " + std::to_string(len);
      }
    }
    out.push_back(make_row("motzkin.path_count",
                           {{"maxLen", std::to_string(maxLen)}}, ok,
                           ok ? "2-colored path count is Catalan(len+1)" : bad));
  }

  {
    int maxN = capped(bounds.censusAMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      CensusRow row = catalan_census(Family::A, n);
      if (BigInt(row.supportCount) != row.catalanN ||
          row.weightedTotal != BigRat(factorial(n))) {
        ok = false;
        bad = "n=" + std::to_string(n);
      }
    }
    out.push_back(make_row("motzkin.census_a",
                           {{"maxN", std::to_string(maxN)}}, ok,
                           ok ? "support count is Catalan(n), mass n!" : bad));
  }

  {
    int maxN = capped(bounds.censusBMaxN, bounds.maxNCap);
    bool ok = true;
    bool shifted = true;
    std::string bad;
    for (int n = 1; n <= maxN && ok; ++n) {
      CensusRow row = catalan_census(Family::B, n);
      BigRat expect = BigRat(factorial(n)) * rat_pow(BigRat(2), n);
      if (BigInt(row.supportCount) != row.catalanN1 ||
          row.weightedTotal != expect) {
        ok = false;
        bad = "n=" + std::to_string(n);
      }
      if (n >= 2 && !row.indexShifted) shifted = false;
    }
    std::string detail =
        ok ? std::string("support count is Catalan(n+1), one index above "
                         "Catalan(n); mass 2^n n!")
           : bad;
    if (ok && !shifted) detail += "; shift flag unexpectedly clear";
    out.push_back(make_row("motzkin.census_b",
                           {{"maxN", std::to_string(maxN)}}, ok && shifted,
                           detail));
  }

  {
    int maxN = capped(bounds.gMaxN, bounds.maxNCap);
    bool ok = true;
    std::string bad;
    for (int r = 3; r <= bounds.gMaxR && ok; ++r) {
      for (int n = 1; n <= maxN && ok; ++n) {
        MPoly p = rec_g(n, r, QMode::SingleSymbolic);
        std::map<Monomial, UPoly, MonomialLess> grouped;
        for (const auto& [m, c] : p.terms()) {
          std::vector<Monomial::Factor> xy;
          std::size_t qexp = 0;
          for (const auto& f : m.factors()) {
            if (f.var.axis == Axis::Q)
              qexp = f.exp;
            else
              xy.push_back(f);
          }
          Monomial key = Monomial::make(std::move(xy));
          grouped[key] = grouped[key] + UPoly::monomial(c, qexp);
        }
        for (const auto& [m, qpoly] : grouped) {
          MotzkinPath path = path_from_support_b(support_of_monomial(n, m));
          if (path_weight(path, WeightScheme::TypeGr, r) != qpoly) {
            ok = false;
            bad = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            break;
          }
        }
      }
    }
    out.push_back(make_row(
        "motzkin.coefficient_recovery_g",
        {{"maxR", std::to_string(bounds.gMaxR)},
         {"maxN", std::to_string(maxN)}},
        ok,
        ok ? "colored-weight scheme reproduces all q-coefficients"
           : "colored-weight scheme fails at " + bad,
        "informational"));
  }

  return out;
}

}  // namespace eulerstab
