#include <doctest.h>

#include <complex>
#include <map>
#include <random>
#include <vector>

#include <eulerstab/multipoly.hpp>

using namespace eulerstab;

namespace {

// Small random polynomial over x/y/q variables with rational coefficients.
MPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 6);
  std::uniform_int_distribution<int> nfactors(0, 3);
  std::uniform_int_distribution<int> axis(0, 2);
  std::uniform_int_distribution<int> idx(1, 3);
  std::uniform_int_distribution<int> expo(1, 2);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  MPoly p = MPoly::zero();
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    Monomial m;
    int f = nfactors(rng);
    for (int j = 0; j < f; ++j) {
      Axis a = axis(rng) == 0 ? Axis::X : (axis(rng) == 0 ? Axis::Q : Axis::Y);
      m = m.times(Monomial::var(VarId{a, static_cast<std::uint32_t>(idx(rng))},
                                static_cast<std::uint32_t>(expo(rng))));
    }
    BigRat c(num(rng), den(rng));
    c.canonicalize();
    p = p + MPoly::term(m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("monomial algebra") {
  Monomial m = Monomial::var(xvar(2)).times(Monomial::var(yvar(1), 3));
  CHECK(m.degree() == 4);
  CHECK(m.exponent(xvar(2)) == 1);
  CHECK(m.exponent(yvar(1)) == 3);
  CHECK(m.exponent(qvar(1)) == 0);
  CHECK_FALSE(m.is_one());
  CHECK(Monomial().is_one());

  auto quot = m.divided_by(Monomial::var(yvar(1)));
  REQUIRE(quot.has_value());
  CHECK(quot->exponent(yvar(1)) == 2);
  CHECK_FALSE(m.divided_by(Monomial::var(qvar(1))).has_value());

  Monomial d = m.dec(yvar(1));
  CHECK(d.exponent(yvar(1)) == 2);
  CHECK(d.exponent(xvar(2)) == 1);
}

TEST_CASE("variable names round trip") {
  for (VarId v : {xvar(1), yvar(7), qvar(3), xvar(12)}) {
    CHECK(VarId::parse(v.name()) == v);
  }
  CHECK(xvar(3).name() == "x3");
  CHECK(yvar(1).name() == "y1");
  CHECK(qvar(2).name() == "q2");
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937_64 rng(12345);
  const MPoly one = MPoly::constant(1);
  for (int round = 0; round < 40; ++round) {
    MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == MPoly::zero());
    CHECK(a - b == a + (-b));
    CHECK(one * a == a);
    CHECK(MPoly::zero() * a == MPoly::zero());
    CHECK(BigRat(3) * a == a + a + a);
  }
}

TEST_CASE("partial derivative is linear and satisfies Leibniz") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 30; ++round) {
    MPoly a = random_poly(rng), b = random_poly(rng);
    VarId v = (round % 2) ? xvar(1 + round % 3) : yvar(1 + round % 3);
    CHECK(partial(a + b, v) == partial(a, v) + partial(b, v));
    CHECK(partial(a * b, v) == partial(a, v) * b + a * partial(b, v));
  }
  // d/dx1 (x1^2 y1) = 2 x1 y1
  MPoly p = MPoly::term(Monomial::var(xvar(1), 2).times(Monomial::var(yvar(1))), 1);
  MPoly expect =
      MPoly::term(Monomial::var(xvar(1)).times(Monomial::var(yvar(1))), 2);
  CHECK(partial(p, xvar(1)) == expect);
  CHECK(partial(p, xvar(2)) == MPoly::zero());
}

TEST_CASE("del sums x and y partials over an index range") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    MPoly a = random_poly(rng);
    MPoly expect = MPoly::zero();
    for (std::uint32_t i = 1; i <= 4; ++i)
      expect = expect + partial(a, xvar(i)) + partial(a, yvar(i));
    CHECK(del(a, 4) == expect);
    // Indices past the present variables contribute nothing.
    CHECK(del(a, 9) == del(a, 4));
  }
}

TEST_CASE("specialization commutes and respects axes") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 20; ++round) {
    MPoly a = random_poly(rng);
    BigRat u(3, 2), w(-1, 4);
    u.canonicalize();
    w.canonicalize();
    CHECK(specialize(specialize(a, xvar(1), u), yvar(2), w) ==
          specialize(specialize(a, yvar(2), w), xvar(1), u));
    MPoly folded = a;
    for (std::uint32_t i = 1; i <= 3; ++i) folded = specialize(folded, yvar(i), 1);
    CHECK(specialize_axis(a, Axis::Y, 1) == folded);
  }
  // Specializing an absent variable is the identity.
  MPoly x1 = MPoly::var(xvar(1));
  CHECK(specialize(x1, yvar(5), 7) == x1);
}

TEST_CASE("diagonalize folds an axis onto index 1") {
  // x1 * x2^2 * y3 -> x1^3 * y3 under X-diagonalization.
  Monomial m = Monomial::var(xvar(1))
                   .times(Monomial::var(xvar(2), 2))
                   .times(Monomial::var(yvar(3)));
  MPoly p = MPoly::term(m, 5);
  Monomial expect = Monomial::var(xvar(1), 3).times(Monomial::var(yvar(3)));
  CHECK(diagonalize(p, Axis::X) == MPoly::term(expect, 5));
  // Terms that merge after folding add their coefficients.
  MPoly q = MPoly::var(xvar(1)) + MPoly::var(xvar(2));
  CHECK(diagonalize(q, Axis::X) == BigRat(2) * MPoly::var(xvar(1)));
}

TEST_CASE("shift_indices round trips and guards index 1") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    MPoly a = random_poly(rng);
    CHECK(shift_indices(shift_indices(a, 2), -2) == a);
  }
  CHECK_THROWS_AS(shift_indices(MPoly::var(xvar(1)), -1), std::domain_error);
}

TEST_CASE("text and json serialization round trip") {
  std::mt19937_64 rng(333);
  for (int round = 0; round < 30; ++round) {
    MPoly a = random_poly(rng);
    CHECK(MPoly::from_text(a.to_text()) == a);
    CHECK(MPoly::from_json_string(a.to_json_string()) == a);
  }
  CHECK(MPoly::from_text("0") == MPoly::zero());
  CHECK(MPoly::from_text("x2*x3 + 2*x3*y3 + y2*y3") ==
        MPoly::var(xvar(2)) * MPoly::var(xvar(3)) +
            BigRat(2) * (MPoly::var(xvar(3)) * MPoly::var(yvar(3))) +
            MPoly::var(yvar(2)) * MPoly::var(yvar(3)));
}

TEST_CASE("divide_exact inverts multiplication") {
  std::mt19937_64 rng(77);
  int nontrivial = 0;
  for (int round = 0; round < 40; ++round) {
    MPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    ++nontrivial;
  }
  CHECK(nontrivial > 10);
  // x1 + 1 does not divide x1*y1.
  MPoly d = MPoly::var(xvar(1)) + MPoly::constant(1);
  CHECK_FALSE(divide_exact(MPoly::var(xvar(1)) * MPoly::var(yvar(1)), d)
                  .has_value());
  CHECK_THROWS_AS(divide_exact(d, MPoly::zero()), std::invalid_argument);
}

TEST_CASE("evaluation agrees across rational and complex backends") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    MPoly a = random_poly(rng);
    std::map<VarId, BigRat> ratPt;
    std::map<VarId, std::complex<double>> cxPt;
    std::uniform_int_distribution<int> num(-5, 5);
    for (VarId v : a.variables()) {
      BigRat r(num(rng), 3);
      r.canonicalize();
      ratPt[v] = r;
      cxPt[v] = {r.get_d(), 0.0};
    }
    BigRat exact = eval_rational(a, ratPt);
    std::complex<double> approx = eval_complex(a, cxPt);
    double scale = std::max(1.0, std::abs(exact.get_d()));
    CHECK(std::abs(approx - std::complex<double>(exact.get_d(), 0.0)) <=
          1e-10 * scale);
  }
  CHECK_THROWS_AS(eval_rational(MPoly::var(xvar(1)), {}), std::invalid_argument);
}

TEST_CASE("coefficient bookkeeping") {
  MPoly p = MPoly::from_text("x1*x2 + 4*x2*y2 + y1*y2 + x2*y1 + x1*y2");
  CHECK(p.size() == 5);
  CHECK(p.total_degree() == 2);
  CHECK(p.coefficient(Monomial::var(xvar(2)).times(Monomial::var(yvar(2)))) ==
        BigRat(4));
  CHECK(p.coefficient(Monomial::var(qvar(1))) == BigRat(0));
  CHECK(p.coefficient_sum() == BigRat(8));
  CHECK(p.is_multiaffine());
  CHECK(p.max_xy_index() == 2);
  MPoly sq = MPoly::term(Monomial::var(xvar(1), 2), 1);
  CHECK_FALSE(sq.is_multiaffine());
  // Variables come back sorted and without duplicates.
  auto vars = p.variables();
  CHECK(vars.size() == 4);
  CHECK(std::is_sorted(vars.begin(), vars.end()));
}
