#include <doctest.h>

#include <set>
#include <vector>

#include <eulerstab/families.hpp>
#include <eulerstab/motzkin.hpp>
#include <eulerstab/rational.hpp>
#include <eulerstab/report.hpp>

using namespace eulerstab;

TEST_CASE("path validity and rendering") {
  MotzkinPath ok{{Step::NE, Step::EBar, Step::SE}};
  CHECK(path_valid(ok));
  CHECK(path_to_string(ok) == "NE E+ SE");
  CHECK(path_valid(MotzkinPath{}));
  CHECK_FALSE(path_valid(MotzkinPath{{Step::SE}}));        // dips below 0
  CHECK_FALSE(path_valid(MotzkinPath{{Step::NE}}));        // ends above 0
  CHECK_FALSE(path_valid(MotzkinPath{{Step::NE, Step::SE, Step::SE, Step::NE}}));
}

TEST_CASE("path counts follow the Catalan numbers") {
  for (int len = 0; len <= 8; ++len) {
    CHECK(BigInt(static_cast<unsigned long>(count_paths(len))) ==
          catalan(static_cast<unsigned>(len) + 1));
  }
  // for_each_path visits exactly that many, each valid and of the right length.
  int seen = 0;
  for_each_path(4, [&](const MotzkinPath& p) {
    CHECK(path_valid(p));
    CHECK(p.steps.size() == 4);
    ++seen;
  });
  CHECK(seen == 42);
}

TEST_CASE("supports classify letters and map to paths") {
  // From the window 3 1 4 5 2: dt = {3,5}, at = {4,5}.
  SupportPattern sp{5, {3, 5}, {4, 5}};
  CHECK(letter_class(sp, 1) == LetterClass::Valley);
  CHECK(letter_class(sp, 3) == LetterClass::DescentOnly);
  CHECK(letter_class(sp, 4) == LetterClass::AscentOnly);
  CHECK(letter_class(sp, 5) == LetterClass::Peak);
  REQUIRE(support_valid_a(sp));
  MotzkinPath p = path_from_support_a(sp);
  // Letters 2,3,4,5 -> NE, E+, E-, SE.
  CHECK(path_to_string(p) == "NE E+ E- SE");
  SupportPattern back = support_from_path_a(p);
  CHECK(back.dt == sp.dt);
  CHECK(back.at == sp.at);
  CHECK(back.n == sp.n);
}

TEST_CASE("type A supports round trip through paths") {
  // Supports of the rank seven type A polynomial are exactly the valid
  // patterns; check the bijection is involutive on all of them.
  MPoly a = rec_a(4);  // letters 2..5, paths of length 4
  int count = 0;
  for (const auto& [m, c] : a.terms()) {
    SupportPattern sp = support_of_monomial(5, m);
    REQUIRE(support_valid_a(sp));
    MotzkinPath p = path_from_support_a(sp);
    CHECK(path_valid(p));
    SupportPattern back = support_from_path_a(p);
    CHECK(back.dt == sp.dt);
    CHECK(back.at == sp.at);
    ++count;
  }
  CHECK(BigInt(count) == catalan(5));
}

TEST_CASE("type B supports round trip with swapped level colors") {
  MPoly b = rec_g(3, 2, QMode::None);
  std::set<std::string> paths;
  for (const auto& [m, c] : b.terms()) {
    SupportPattern sp = support_of_monomial(3, m);
    REQUIRE(support_valid_b(sp));
    MotzkinPath p = path_from_support_b(sp);
    CHECK(path_valid(p));
    SupportPattern back = support_from_path_b(p);
    CHECK(back.dt == sp.dt);
    CHECK(back.at == sp.at);
    paths.insert(path_to_string(p));
  }
  // Distinct supports, C_4 = 14 of them for n = 3.
  CHECK(BigInt(static_cast<unsigned long>(paths.size())) == catalan(4));
  // A descent-only letter takes the under color in type B.
  SupportPattern lone{1, {1}, {}};
  CHECK(path_to_string(path_from_support_b(lone)) == "E-");
}

TEST_CASE("path weights recover coefficients") {
  // Type A, n = 2: supports x2 (descent-only) and y2 (ascent-only), both
  // weight 1 at height 0.
  CHECK(path_weight(MotzkinPath{{Step::EBar}}, WeightScheme::TypeA) ==
        UPoly::constant(1));
  CHECK(path_weight(MotzkinPath{{Step::EUnder}}, WeightScheme::TypeA) ==
        UPoly::constant(1));
  // NE at height 0 then SE from height 1: (0+1+1) * (1+1) ... weights are
  // (k+1) with k the height before the step: 1 * 2 = 2. That is the
  // coefficient of x3*y3 in the rank two polynomial.
  CHECK(path_weight(MotzkinPath{{Step::NE, Step::SE}}, WeightScheme::TypeA) ==
        UPoly::constant(2));
  MPoly a2 = rec_a(2);
  CHECK(a2.coefficient(
            Monomial::var(xvar(3)).times(Monomial::var(yvar(3)))) ==
        BigRat(2));

  // Type B at q: E- at height 0 weighs q, E+ weighs 1.
  UPoly q = UPoly::monomial(1, 1);
  CHECK(path_weight(MotzkinPath{{Step::EUnder}}, WeightScheme::TypeBq) == q);
  CHECK(path_weight(MotzkinPath{{Step::EBar}}, WeightScheme::TypeBq) ==
        UPoly::constant(1));
  // NE then SE: (0+1)(1+q) * (1)(1+q) = (1+q)^2.
  UPoly oneq = UPoly::constant(1) + q;
  CHECK(path_weight(MotzkinPath{{Step::NE, Step::SE}}, WeightScheme::TypeBq) ==
        oneq * oneq);
  // TypeGr at r = 3: E- at height 0 weighs q + q^2.
  CHECK(path_weight(MotzkinPath{{Step::EUnder}}, WeightScheme::TypeGr, 3) ==
        q + UPoly::monomial(1, 2));
  CHECK_THROWS_AS(path_weight(MotzkinPath{{Step::SE}}, WeightScheme::TypeA),
                  std::invalid_argument);
}

TEST_CASE("census rows match the Catalan structure") {
  CensusRow a = catalan_census(Family::A, 6);
  CHECK(a.supportCount == 132);  // C_6
  CHECK(a.catalanN == catalan(6));
  CHECK_FALSE(a.indexShifted);
  CHECK(a.weightedTotal == BigRat(factorial(6)));

  CensusRow b = catalan_census(Family::B, 4);
  CHECK(b.supportCount == 42);  // C_5, shifted index
  CHECK(b.indexShifted);
  CHECK(b.weightedTotal == BigRat(factorial(4)) * rat_pow(2, 4));
}

TEST_CASE("motzkin suite is green at reduced bounds") {
  MotzkinBounds mb;
  mb.maxNCap = 4;
  auto rows = motzkin_suite(mb);
  CHECK(!rows.empty());
  CHECK(all_asserted_ok(rows));
  std::set<std::string> names;
  for (const auto& r : rows) names.insert(r.check);
  for (const char* want :
       {"motzkin.support_characterization_a", "motzkin.support_characterization_b",
        "motzkin.coefficient_recovery_a", "motzkin.coefficient_recovery_b",
        "motzkin.mass_a", "motzkin.mass_b", "motzkin.path_count",
        "motzkin.census_a", "motzkin.census_b"}) {
    CHECK(names.count(want) == 1);
  }
}
