#include "eulerstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eulerstab {

namespace {

int sign_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmReport sturm(const UPoly& p) {
  if (p.degree() < 0) throw std::invalid_argument("sturm: zero polynomial");
  SturmReport rep;
  rep.degree = p.degree();
  UPoly f = squarefree_part(p);
  rep.squarefreeDegree = f.degree();
  if (f.degree() == 0) {
    rep.distinctRealRoots = 0;
    rep.isRealRooted = true;
    return rep;
  }
  std::vector<UPoly> chain;
  chain.push_back(f);
  chain.push_back(f.derivative());
  while (chain.back().degree() > 0) {
    UPoly rem = divmod(chain[chain.size() - 2], chain.back()).rem;
    if (rem.degree() < 0) break;
    chain.push_back(-rem);
  }
  std::vector<int> atPlus, atMinus;
  for (const UPoly& s : chain) {
    int lc = rat_sign(s.coeffs().back());
    atPlus.push_back(lc);
    atMinus.push_back(s.degree() % 2 == 0 ? lc : -lc);
  }
  rep.distinctRealRoots = sign_variations(atMinus) - sign_variations(atPlus);
  rep.isRealRooted = rep.distinctRealRoots == rep.squarefreeDegree;
  return rep;
}

double QRad3::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(3.0);
}

QRad3 operator+(const QRad3& l, const QRad3& r) {
  return {l.a + r.a, l.b + r.b};
}

QRad3 operator-(const QRad3& l, const QRad3& r) {
  return {l.a - r.a, l.b - r.b};
}

QRad3 operator*(const QRad3& l, const QRad3& r) {
  return {l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a};
}

bool operator==(const QRad3& l, const QRad3& r) {
  return l.a == r.a && l.b == r.b;
}

std::complex<double> QRad3C::to_complex() const {
  return {re.to_double(), im.to_double()};
}

QRad3C operator+(const QRad3C& l, const QRad3C& r) {
  return {l.re + r.re, l.im + r.im};
}

QRad3C operator-(const QRad3C& l, const QRad3C& r) {
  return {l.re - r.re, l.im - r.im};
}

QRad3C operator*(const QRad3C& l, const QRad3C& r) {
  return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
}

bool operator==(const QRad3C& l, const QRad3C& r) {
  return l.re == r.re && l.im == r.im;
}

QRad3C eval_qrad3c(const MPoly& p,
                   const std::vector<std::pair<VarId, QRad3C>>& point) {
  std::map<VarId, QRad3C> assign(point.begin(), point.end());
  return eval_generic<QRad3C>(p, assign, QRad3C(),
                              [](const BigRat& c) {
                                return QRad3C(QRad3(c, 0), QRad3(0, 0));
                              });
}

MPoly rayleigh_delta(const MPoly& f, VarId i, VarId j) {
  if (i == j)
    throw std::invalid_argument("rayleigh_delta: variables must differ");
  if (!f.is_multiaffine())
    throw std::invalid_argument("rayleigh_delta: polynomial must be multiaffine");
  MPoly fi = partial(f, i);
  MPoly fj = partial(f, j);
  return fi * fj - f * partial(fi, j);
}

std::string StabilityWitness::to_json_string() const {
  nlohmann::ordered_json w;
  w["kind"] = kind;
  if (kind == "halfPlaneZero") {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& [v, z] : point) {
      nlohmann::ordered_json e;
      e["var"] = v.name();
      e["re"] = z.real();
      e["im"] = z.imag();
      pts.push_back(e);
    }
    w["point"] = pts;
    w["value"] = {{"re", value.real()}, {"im", value.imag()}};
    w["abs"] = std::abs(value);
    w["exact"] = exact;
  } else {
    w["i"] = i.name();
    w["j"] = j.name();
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& [v, a] : realPoint) {
      nlohmann::ordered_json e;
      e["var"] = v.name();
      e["value"] = rat_to_string(a);
      pts.push_back(e);
    }
    w["point"] = pts;
    w["delta"] = rat_to_string(delta);
  }
  return w.dump();
}

namespace {

using CPoint = std::map<VarId, std::complex<double>>;

// Coordinatewise Newton descent toward a zero, keeping every imaginary part
// at or above imFloor so that real-axis zeros of stable polynomials cannot
// masquerade as interior ones. Each polynomial evaluation eats budget.
void newton_descend(const MPoly& p, const std::vector<MPoly>& partials,
                    const std::vector<VarId>& vars, CPoint& point,
                    std::complex<double>& value, double imFloor,
                    double refineTol, std::uint64_t& budget) {
  for (int round = 0; round < 12 && std::abs(value) > refineTol; ++round) {
    bool improved = false;
    for (std::size_t k = 0; k < vars.size() && budget > 0; ++k) {
      if (budget == 0) return;
      --budget;
      std::complex<double> d = eval_complex(partials[k], point);
      if (std::abs(d) < 1e-12) continue;
      CPoint cand = point;
      std::complex<double> z = cand[vars[k]] - value / d;
      if (z.imag() < imFloor) z = {z.real(), imFloor};
      cand[vars[k]] = z;
      if (budget == 0) return;
      --budget;
      std::complex<double> cv = eval_complex(p, cand);
      if (std::abs(cv) < std::abs(value)) {
        point = std::move(cand);
        value = cv;
        improved = true;
      }
      if (std::abs(value) <= refineTol) return;
    }
    if (!improved) return;
  }
}

}  // namespace

std::optional<StabilityWitness> falsify_halfplane(const MPoly& p,
                                                  const FalsifyOptions& opts) {
  std::vector<VarId> vars = p.variables();
  if (vars.empty() || p.is_zero()) return std::nullopt;
  std::vector<MPoly> partials;
  partials.reserve(vars.size());
  for (VarId v : vars) partials.push_back(partial(p, v));
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> reDist(-10.0, 10.0);
  std::uniform_real_distribution<double> imDist(opts.imFloor, 10.0);
  std::uint64_t budget = opts.budget;
  while (budget > 0) {
    CPoint point;
    for (VarId v : vars) point[v] = {reDist(rng), imDist(rng)};
    --budget;
    std::complex<double> value = eval_complex(p, point);
    newton_descend(p, partials, vars, point, value, opts.imFloor,
                   opts.refineTol, budget);
    if (std::abs(value) >= opts.tol) continue;
    bool interior = true;
    for (VarId v : vars)
      if (point[v].imag() < opts.imFloor - 1e-12) interior = false;
    if (!interior) continue;
    StabilityWitness w;
    w.kind = "halfPlaneZero";
    for (VarId v : vars) w.point.push_back({v, point[v]});
    w.value = value;
    return w;
  }
  return std::nullopt;
}

std::optional<StabilityWitness> falsify_rayleigh(const MPoly& p,
                                                 const FalsifyOptions& opts) {
  if (!p.is_multiaffine())
    throw std::invalid_argument("falsify_rayleigh: polynomial must be multiaffine");
  std::vector<VarId> vars = p.variables();
  if (vars.size() < 2) return std::nullopt;
  std::vector<std::pair<VarId, VarId>> pairs;
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      pairs.push_back({vars[a], vars[b]});
  std::uint64_t perPair =
      std::max<std::uint64_t>(1, opts.budget / pairs.size());
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> numDist(-80, 80);
  const BigRat gridVals[] = {BigRat(1), BigRat(2), BigRat(1, 2), BigRat(-1),
                             BigRat(3), BigRat(1, 4), BigRat(-2), BigRat(5)};
  for (const auto& [vi, vj] : pairs) {
    MPoly fi = partial(p, vi);
    MPoly fj = partial(p, vj);
    MPoly fij = partial(fi, vj);
    auto probe = [&](const std::map<VarId, BigRat>& assign)
        -> std::optional<StabilityWitness> {
      BigRat d = eval_rational(fi, assign) * eval_rational(fj, assign) -
                 eval_rational(p, assign) * eval_rational(fij, assign);
      if (d >= 0) return std::nullopt;
      StabilityWitness w;
      w.kind = "rayleighNegative";
      w.i = vi;
      w.j = vj;
      for (VarId v : vars) w.realPoint.push_back({v, assign.at(v)});
      w.delta = d;
      return w;
    };
    std::uint64_t used = 0;
    for (const BigRat& g : gridVals) {
      if (used >= perPair) break;
      std::map<VarId, BigRat> assign;
      for (VarId v : vars) assign[v] = g;
      ++used;
      if (auto w = probe(assign)) return w;
    }
    for (; used < perPair; ++used) {
      std::map<VarId, BigRat> assign;
      for (VarId v : vars) {
        BigRat r(numDist(rng), 8);
        r.canonicalize();
        assign[v] = r;
      }
      if (auto w = probe(assign)) return w;
    }
  }
  return std::nullopt;
}

DStar3Witness dstar3_halfplane_witness() {
  MPoly p = brute_force({Family::DStar, 3});
  // x2 = (-1 + 2i)(2i + sqrt(3)) = (-4 - sqrt(3)) + (-2 + 2*sqrt(3)) i,
  // the other three coordinates are 2 + i.
  QRad3C x2c{QRad3(-4, -1), QRad3(-2, 2)};
  QRad3C other{QRad3(2, 0), QRad3(1, 0)};
  std::vector<std::pair<VarId, QRad3C>> point = {
      {xvar(2), x2c}, {xvar(3), other}, {yvar(2), other}, {yvar(3), other}};
  QRad3C exactValue = eval_qrad3c(p, point);

  DStar3Witness out;
  out.exactZero = exactValue.is_zero();
  std::map<VarId, std::complex<double>> dpoint;
  for (const auto& [v, z] : point) dpoint[v] = z.to_complex();
  out.approxValue = eval_complex(p, dpoint);
  out.witness.kind = "halfPlaneZero";
  for (const auto& [v, z] : point)
    out.witness.point.push_back({v, z.to_complex()});
  out.witness.value = out.approxValue;
  out.witness.exact = out.exactZero;
  return out;
}

namespace {

// Coefficient sum q + ... + q^(r-1) in the requested q mode.
MPoly upper_color_sum(int r, QMode qmode, const BigRat& qvalue) {
  MPoly s = MPoly::zero();
  switch (qmode) {
    case QMode::None:
      s = MPoly::constant(BigRat(r - 1));
      break;
    case QMode::Value: {
      BigRat acc(0);
      for (int j = 1; j <= r - 1; ++j) acc += rat_pow(qvalue, j);
      s = MPoly::constant(acc);
      break;
    }
    case QMode::SingleSymbolic:
      for (int j = 1; j <= r - 1; ++j)
        s = s + MPoly::term(Monomial::var(qvar(1), j), 1);
      break;
    case QMode::MultiSymbolic:
      throw std::invalid_argument(
          "operator symbol: multi-symbolic q is not supported");
  }
  return s;
}

}  // namespace

bool verify_operator_symbol(OperatorKind kind, int n, int r, QMode qmode,
                            const BigRat& qvalue) {
  if (n < 1) throw std::invalid_argument("verify_operator_symbol: n >= 1");
  if (kind == OperatorKind::TypeB) r = 2;
  if (kind == OperatorKind::TypeA) {
    r = 2;
    qmode = QMode::None;
  }

  // Test symbol: P = prod_i (x_i + u_i)(y_i + v_i) with fresh parameters on
  // the q axis, u_i = q_{1+i}, v_i = q_{n+1+i}; q_1 stays the color marker.
  MPoly P = MPoly::constant(1);
  std::vector<MPoly> linearFactors;
  for (int i = 1; i <= n; ++i) {
    MPoly fx = MPoly::var(xvar(i)) + MPoly::var(qvar(1 + i));
    MPoly fy = MPoly::var(yvar(i)) + MPoly::var(qvar(n + 1 + i));
    linearFactors.push_back(fx);
    linearFactors.push_back(fy);
    P = P * fx * fy;
  }

  MPoly alpha, beta, gamma;
  if (kind == OperatorKind::TypeA) {
    alpha = MPoly::constant(1);
    beta = MPoly::constant(1);
    gamma = MPoly::constant(1);
  } else {
    MPoly s1 = upper_color_sum(r, qmode, qvalue);
    alpha = s1;
    beta = MPoly::constant(1);
    gamma = MPoly::constant(1) + s1;
  }

  MPoly xn1 = MPoly::var(xvar(n + 1));
  MPoly yn1 = MPoly::var(yvar(n + 1));
  MPoly lhs = alpha * xn1 * P + beta * yn1 * P +
              gamma * xn1 * yn1 * del(P, static_cast<std::uint32_t>(n));

  MPoly quotientSum = MPoly::zero();
  for (const MPoly& f : linearFactors) {
    std::optional<MPoly> q = divide_exact(P, f);
    if (!q) return false;
    quotientSum = quotientSum + *q;
  }
  MPoly rhs = alpha * xn1 * P + beta * yn1 * P + gamma * xn1 * yn1 * quotientSum;
  return lhs == rhs;
}

namespace {

int capped(int v, int maxNCap) { return maxNCap > 0 ? std::min(v, maxNCap) : v; }

CheckResult realroot_row(const std::string& check,
                         std::map<std::string, std::string> params,
                         bool asserted, const std::vector<UPoly>& polys,
                         const std::vector<std::string>& labels) {
  CheckResult res;
  res.check = check;
  res.params = std::move(params);
  res.severity = asserted ? "asserted" : "informational";
  bool allReal = true;
  int maxDeg = -1;
  std::string firstBad;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    SturmReport rep = sturm(polys[k]);
    maxDeg = std::max(maxDeg, rep.degree);
    if (!rep.isRealRooted) {
      allReal = false;
      if (firstBad.empty()) {
        std::ostringstream os;
        os << labels[k] << ": " << rep.distinctRealRoots << " distinct real of "
           << rep.squarefreeDegree << " squarefree degree";
        firstBad = os.str();
      }
    }
  }
  res.ok = allReal;
  res.status = allReal ? "pass" : "fail";
  std::ostringstream os;
  if (allReal) {
    os << polys.size() << " polynomials real-rooted, max degree " << maxDeg;
  } else {
    os << "not real-rooted: " << firstBad;
  }
  res.detail = os.str();
  return res;
}

}  // namespace

std::vector<CheckResult> realrooted_suite(const RealRootBounds& bounds) {
  std::vector<CheckResult> out;

  {
    int maxN = capped(bounds.aMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 1; n <= maxN; ++n) {
      ps.push_back(univariate(rec_a(n)));
      labels.push_back("n=" + std::to_string(n));
    }
    out.push_back(realroot_row("realroots.a", {{"maxN", std::to_string(maxN)}},
                               true, ps, labels));
  }

  {
    int maxN = capped(bounds.bMaxN, bounds.maxNCap);
    const std::pair<const char*, BigRat> qs[] = {
        {"0", BigRat(0)}, {"1/2", BigRat(1, 2)}, {"1", BigRat(1)},
        {"2", BigRat(2)}};
    for (const auto& [qname, qval] : qs) {
      std::vector<UPoly> ps;
      std::vector<std::string> labels;
      for (int n = 1; n <= maxN; ++n) {
        ps.push_back(univariate(rec_g(n, 2, QMode::Value, qval)));
        labels.push_back("n=" + std::to_string(n));
      }
      out.push_back(realroot_row(
          "realroots.b_q",
          {{"q", qname}, {"maxN", std::to_string(maxN)}}, true, ps, labels));
    }
  }

  {
    int maxN = capped(bounds.gMaxN, bounds.maxNCap);
    for (int r = 1; r <= bounds.gMaxR; ++r) {
      std::vector<UPoly> ps;
      std::vector<std::string> labels;
      for (int n = 1; n <= maxN; ++n) {
        ps.push_back(univariate(rec_g(n, r, QMode::None)));
        labels.push_back("n=" + std::to_string(n));
      }
      out.push_back(realroot_row(
          "realroots.g",
          {{"r", std::to_string(r)}, {"maxN", std::to_string(maxN)}}, true, ps,
          labels));
    }
  }

  {
    int maxN = capped(bounds.affMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 2; n <= maxN; ++n) {
      ps.push_back(univariate(affine_a(n)));
      labels.push_back("n=" + std::to_string(n));
    }
    out.push_back(realroot_row("realroots.affine_a",
                               {{"maxN", std::to_string(maxN)}}, true, ps,
                               labels));
  }

  {
    int maxN = capped(bounds.affMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 1; n <= maxN; ++n) {
      ps.push_back(univariate(rec_affine_c(n)));
      labels.push_back("n=" + std::to_string(n));
    }
    out.push_back(realroot_row("realroots.affine_c",
                               {{"maxN", std::to_string(maxN)}}, true, ps,
                               labels));
  }

  {
    int maxN = capped(bounds.chowMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 2; n <= maxN; ++n) {
      ps.push_back(chow_d(n));
      labels.push_back("n=" + std::to_string(n));
    }
    out.push_back(realroot_row(
        "realroots.d", {{"maxN", std::to_string(maxN)}}, true, ps, labels));
  }

  {
    int maxN = capped(bounds.affBMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 2; n <= maxN; ++n) {
      ps.push_back(univariate(affine_b(n)));
      labels.push_back("n=" + std::to_string(n));
    }
    out.push_back(realroot_row("realroots.affine_b",
                               {{"maxN", std::to_string(maxN)}}, true, ps,
                               labels));
  }

  {
    // Open question: derived affine type D univariates, probed but not
    // asserted.
    int maxN = capped(bounds.affDMaxN, bounds.maxNCap);
    std::vector<UPoly> ps;
    std::vector<std::string> labels;
    for (int n = 2; n <= maxN; ++n) {
      UPoly shiftTerm = UPoly::monomial(BigRat(2 * n), 1) * chow_d(n - 1);
      ps.push_back(univariate(affine_b(n)) - shiftTerm);
      labels.push_back("n=" + std::to_string(n));
    }
    CheckResult row = realroot_row(
        "realroots.affine_d", {{"maxN", std::to_string(maxN)}}, false, ps,
        labels);
    row.status = row.ok ? "pass" : "witness";
    out.push_back(row);
  }

  return out;
}

std::vector<CheckResult> stability_suite(const StabilityBounds& bounds) {
  std::vector<CheckResult> out;

  {
    CheckResult res;
    res.check = "stability.dstar3_halfplane_zero";
    res.severity = "asserted";
    DStar3Witness w = dstar3_halfplane_witness();
    res.ok = w.exactZero && std::abs(w.approxValue) < 1e-6;
    res.status = res.ok ? "witness" : "fail";
    std::ostringstream os;
    os << "exact zero over Q(sqrt(3))[i]: " << (w.exactZero ? "yes" : "no")
       << ", double residual " << std::abs(w.approxValue);
    res.detail = os.str();
    res.witnessJson = w.witness.to_json_string();
    out.push_back(res);
  }

  {
    CheckResult res;
    res.check = "stability.rayleigh_d3";
    res.severity = "asserted";
    MPoly d3x = specialize_axis(d_multivariate(3), Axis::Y, 1);
    MPoly delta = rayleigh_delta(d3x, xvar(1), xvar(3));
    MPoly expected = MPoly::term(Monomial::var(xvar(2)), BigRat(-16));
    res.ok = delta == expected;
    res.status = res.ok ? "pass" : "fail";
    res.detail = "Delta(D3(x); x1, x3) = " + delta.to_text() +
                 ", negative on the positive orthant";
    out.push_back(res);
  }

  {
    int maxN = capped(bounds.opMaxN, bounds.maxNCap);
    CheckResult res;
    res.check = "stability.operator_symbol_a";
    res.params = {{"maxN", std::to_string(maxN)}};
    res.severity = "asserted";
    res.ok = true;
    for (int n = 1; n <= maxN; ++n)
      res.ok = res.ok && verify_operator_symbol(OperatorKind::TypeA, n);
    res.status = res.ok ? "pass" : "fail";
    res.detail = "derivative expansion matches exact quotients";
    out.push_back(res);
  }

  {
    int maxN = capped(bounds.opMaxN, bounds.maxNCap);
    const std::pair<const char*, BigRat> qs[] = {
        {"0", BigRat(0)}, {"1", BigRat(1)}, {"2", BigRat(2)}};
    for (const auto& [qname, qval] : qs) {
      CheckResult res;
      res.check = "stability.operator_symbol_b";
      res.params = {{"q", qname}, {"maxN", std::to_string(maxN)}};
      res.severity = "asserted";
      res.ok = true;
      for (int n = 1; n <= maxN; ++n)
        res.ok = res.ok && verify_operator_symbol(OperatorKind::TypeB, n, 2,
                                                  QMode::Value, qval);
      res.status = res.ok ? "pass" : "fail";
      res.detail = "derivative expansion matches exact quotients";
      out.push_back(res);
    }
  }

  {
    int maxN = std::min(3, capped(bounds.opMaxN, bounds.maxNCap));
    CheckResult res;
    res.check = "stability.operator_symbol_g";
    res.params = {{"r", "3,4"}, {"maxN", std::to_string(maxN)},
                  {"q", "symbolic"}};
    res.severity = "asserted";
    res.ok = true;
    for (int r = 3; r <= 4; ++r)
      for (int n = 1; n <= maxN; ++n)
        res.ok = res.ok && verify_operator_symbol(OperatorKind::TypeG, n, r,
                                                  QMode::SingleSymbolic);
    res.status = res.ok ? "pass" : "fail";
    res.detail = "derivative expansion matches exact quotients";
    out.push_back(res);
  }

  {
    FalsifyOptions opts;
    opts.budget = std::min<std::uint64_t>(bounds.budget, 20000);
    opts.seed = bounds.seed;
    CheckResult res;
    res.check = "stability.halfplane_probe_a";
    res.params = {{"n", "4"}, {"budget", std::to_string(opts.budget)}};
    res.severity = "informational";
    auto w = falsify_halfplane(rec_a(4), opts);
    res.ok = !w.has_value();
    res.status = w ? "witness" : "none-found";
    res.detail = w ? "unexpected half-plane zero"
                   : "no upper half-plane zero found (expected: stable)";
    if (w) res.witnessJson = w->to_json_string();
    out.push_back(res);
  }

  {
    FalsifyOptions opts;
    opts.budget = std::min<std::uint64_t>(bounds.budget, 20000);
    opts.seed = bounds.seed;
    CheckResult res;
    res.check = "stability.rayleigh_probe_a";
    res.params = {{"n", "4"}, {"budget", std::to_string(opts.budget)}};
    res.severity = "informational";
    auto w = falsify_rayleigh(rec_a(4), opts);
    res.ok = !w.has_value();
    res.status = w ? "witness" : "none-found";
    res.detail = w ? "unexpected negative Rayleigh difference"
                   : "no negative Rayleigh difference found (expected: stable)";
    if (w) res.witnessJson = w->to_json_string();
    out.push_back(res);
  }

  return out;
}

std::vector<CheckResult> affine_b_probe_suite(int maxN, std::uint64_t budget,
                                              std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (int n = 2; n <= maxN; ++n) {
    MPoly p = affine_b(n);
    FalsifyOptions opts;
    opts.budget = budget;
    opts.seed = seed;

    {
      CheckResult res;
      res.check = "conjecture.affine_b_halfplane";
      res.params = {{"n", std::to_string(n)},
                    {"budget", std::to_string(budget)},
                    {"seed", std::to_string(seed)}};
      res.severity = "informational";
      auto w = falsify_halfplane(p, opts);
      res.ok = !w.has_value();
      res.status = w ? "witness" : "none-found";
      res.detail = w ? "upper half-plane zero found"
                     : "no upper half-plane zero found within budget";
      if (w) res.witnessJson = w->to_json_string();
      out.push_back(res);
    }

    {
      CheckResult res;
      res.check = "conjecture.affine_b_rayleigh";
      res.params = {{"n", std::to_string(n)},
                    {"budget", std::to_string(budget)},
                    {"seed", std::to_string(seed)}};
      res.severity = "informational";
      auto w = falsify_rayleigh(p, opts);
      res.ok = !w.has_value();
      res.status = w ? "witness" : "none-found";
      res.detail = w ? "negative Rayleigh difference found"
                     : "no negative Rayleigh difference found within budget";
      if (w) res.witnessJson = w->to_json_string();
      out.push_back(res);
    }
  }
  return out;
}

}  // namespace eulerstab
