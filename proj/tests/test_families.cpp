#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include <eulerstab/families.hpp>
#include <eulerstab/perms.hpp>
#include <eulerstab/report.hpp>

using namespace eulerstab;

namespace {

// Degree in the x/y variables only (q markers do not count).
std::uint32_t xy_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& f : m.factors())
    if (f.var.axis != Axis::Q) d += f.exp;
  return d;
}

}  // namespace

TEST_CASE("family codes round trip") {
  for (Family f : {Family::A, Family::B, Family::D, Family::G, Family::AffA,
                   Family::AffC, Family::AffB, Family::DStar}) {
    CHECK(family_from_code(family_code(f)) == f);
  }
  CHECK_THROWS_AS(family_from_code("nope"), std::invalid_argument);
}

TEST_CASE("recurrences match enumeration at small rank") {
  for (int n = 0; n <= 4; ++n)
    CHECK(rec_a(n) == brute_force({Family::A, n, 2, QMode::None, 0}));
  for (int n = 1; n <= 3; ++n) {
    CHECK(rec_g(n, 2, QMode::SingleSymbolic) ==
          brute_force({Family::B, n, 2, QMode::SingleSymbolic, 0}));
    CHECK(rec_g(n, 3, QMode::SingleSymbolic) ==
          brute_force({Family::G, n, 3, QMode::SingleSymbolic, 0}));
    CHECK(affine_c_closed(n) == rec_affine_c(n));
  }
  for (int n = 1; n <= 4; ++n)
    CHECK(affine_a(n) == brute_force({Family::AffA, n, 2, QMode::None, 0}));
}

TEST_CASE("appendix references are reproduced") {
  const auto& refs = appendix_reference();
  CHECK(refs.size() == 13);
  std::set<std::string> names;
  for (const auto& ref : refs) {
    names.insert(ref.name);
    MPoly expected = MPoly::from_text(ref.text);
    CHECK(brute_force(ref.spec) == expected);
    bool hasRec = ref.spec.family != Family::D && ref.spec.family != Family::DStar;
    if (hasRec) CHECK(build_recurrence(ref.spec) == expected);
  }
  CHECK(names.size() == refs.size());
  CHECK(MPoly::from_text(dstar3_reference_text()) ==
        brute_force({Family::DStar, 3, 2, QMode::None, 0}));
}

TEST_CASE("enumeration-only families refuse the recurrence path") {
  CHECK_THROWS_AS(build_recurrence({Family::D, 3, 2, QMode::None, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_recurrence({Family::DStar, 3, 2, QMode::None, 0}),
                  std::invalid_argument);
}

TEST_CASE("polynomials are homogeneous multiaffine with the right mass") {
  // Type A over n+1 letters: n slots, mass (n+1)!.
  for (int n = 0; n <= 5; ++n) {
    MPoly p = rec_a(n);
    CHECK(p.coefficient_sum() == BigRat(factorial(n + 1)));
    for (const auto& [m, c] : p.terms()) {
      CHECK(xy_degree(m) == static_cast<std::uint32_t>(n));
      CHECK(c > 0);
    }
    CHECK(p.is_multiaffine());
  }
  // Colored groups: n slots, mass r^n n!.
  for (int r : {1, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      MPoly p = rec_g(n, r, QMode::None);
      CHECK(p.coefficient_sum() == BigRat(colored_group_order(n, r)));
      for (const auto& [m, c] : p.terms())
        CHECK(xy_degree(m) == static_cast<std::uint32_t>(n));
    }
  }
  // D_n: mass 2^{n-1} n!.
  for (int n = 2; n <= 5; ++n) {
    MPoly p = d_multivariate(n);
    BigRat mass = BigRat(factorial(n)) * rat_pow(2, n - 1);
    CHECK(p.coefficient_sum() == mass);
  }
}

TEST_CASE("univariate specialization recovers Eulerian polynomials") {
  CHECK(univariate(rec_a(2)).coeffs() == std::vector<BigRat>{1, 4, 1});
  CHECK(univariate(rec_a(3)).coeffs() == std::vector<BigRat>{1, 11, 11, 1});
  CHECK(univariate(rec_g(2, 2, QMode::None)).coeffs() ==
        std::vector<BigRat>{1, 6, 1});
  CHECK(univariate(rec_g(3, 2, QMode::None)).coeffs() ==
        std::vector<BigRat>{1, 23, 23, 1});
}

TEST_CASE("chow recurrence matches descent enumeration over D_n") {
  CHECK(chow_d(2).coeffs() == std::vector<BigRat>{1, 2, 1});
  // D_3 is isomorphic to Sym(4), so its Eulerian polynomial is 1,11,11,1.
  CHECK(chow_d(3).coeffs() == std::vector<BigRat>{1, 11, 11, 1});
  for (int n = 2; n <= 5; ++n) {
    std::map<int, int> hist;
    for (const auto& cp : enumerate_d(n)) hist[descent_count_d(cp)]++;
    UPoly p = chow_d(n);
    for (int k = 0; k <= p.degree(); ++k)
      CHECK(p.coeff(static_cast<std::size_t>(k)) == BigRat(hist[k]));
    CHECK(univariate(d_multivariate(n)) == p);
  }
}

TEST_CASE("affine families agree with their decompositions") {
  // 2 C~_n = B~_n + 2n x B_{n-1}(x) at the univariate level.
  for (int n = 2; n <= 4; ++n) {
    UPoly lhs = BigRat(2) * univariate(rec_affine_c(n));
    UPoly rhs = univariate(affine_b(n)) +
                BigRat(2 * n) * (UPoly::monomial(1, 1) *
                                 univariate(rec_g(n - 1, 2, QMode::None)));
    CHECK(lhs == rhs);
  }
  // B~_n mass: affine B has 2^n n! elements counted with the wrap statistic.
  CHECK(affine_b(2) == MPoly::from_text("4*x1*x2*y2 + 4*x2*y1*y2"));
}

TEST_CASE("suites report cleanly at reduced bounds") {
  OracleBounds ob;
  ob.maxNCap = 3;
  auto oracle = oracle_suite(ob);
  CHECK(!oracle.empty());
  CHECK(all_asserted_ok(oracle));

  IdentityBounds ib;
  ib.maxNCap = 3;
  auto ident = identity_suite(ib);
  CHECK(!ident.empty());
  CHECK(all_asserted_ok(ident));
  bool sawInformational = false;
  for (const auto& r : ident)
    if (r.severity == "informational") sawInformational = true;
  CHECK(sawInformational);

  auto pos = positivity_suite(4, true);
  CHECK(all_asserted_ok(pos));
  for (const auto& r : pos) CHECK(r.severity == "asserted");
}
