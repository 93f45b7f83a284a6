#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include <eulerstab/perms.hpp>

using namespace eulerstab;

TEST_CASE("group sizes") {
  CHECK(group_size_u64(0, 1) == 1);
  CHECK(group_size_u64(3, 1) == 6);
  CHECK(group_size_u64(3, 2) == 48);
  CHECK(group_size_u64(2, 3) == 18);
  CHECK(group_size_u64(4, 2) == 384);
}

TEST_CASE("colored order puts colored letters below zero") {
  // r = 2: -1 < -2 is false, -2 < -1 is true, negatives below 0 below positives.
  CHECK(colored_less(2, 1, 1, 1, 2));   // -2 < -1
  CHECK_FALSE(colored_less(1, 1, 2, 1, 2));
  CHECK(colored_less(5, 1, 0, 0, 2));   // -5 < 0
  CHECK(colored_less(0, 0, 1, 0, 2));   // 0 < 1
  CHECK(colored_less(3, 1, 2, 0, 2));   // -3 < 2
  CHECK(colored_less(1, 0, 2, 0, 2));   // 1 < 2
  // r = 3: higher color sorts lower at equal value.
  CHECK(colored_less(2, 2, 2, 1, 3));
  CHECK(colored_key(2, 2, 3) < colored_key(2, 1, 3));
  CHECK(colored_key(0, 0, 3) < colored_key(1, 0, 3));
}

TEST_CASE("enumerate matches unrank and streaming") {
  for (auto [n, r] : std::vector<std::pair<int, int>>{{3, 1}, {2, 3}, {3, 2}}) {
    auto all = enumerate(n, r);
    REQUIRE(all.size() == group_size_u64(n, r));
    // No duplicates.
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& cp : all) seen.insert({cp.values, cp.colors});
    CHECK(seen.size() == all.size());
    for (std::uint64_t k = 0; k < all.size(); ++k) {
      ColoredPerm cp = unrank_element(n, r, k);
      CHECK(cp.values == all[k].values);
      CHECK(cp.colors == all[k].colors);
    }
    // Streaming a split range reproduces the same order.
    std::vector<ColoredPerm> streamed;
    std::uint64_t mid = all.size() / 3;
    for_each_element(n, r, 0, mid,
                     [&](const ColoredPerm& cp) { streamed.push_back(cp); });
    for_each_element(n, r, mid, all.size(),
                     [&](const ColoredPerm& cp) { streamed.push_back(cp); });
    REQUIRE(streamed.size() == all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(streamed[k].values == all[k].values);
      CHECK(streamed[k].colors == all[k].colors);
    }
  }
}

TEST_CASE("enumerate_d keeps even sign counts only") {
  auto d3 = enumerate_d(3);
  REQUIRE(d3.size() == 24);
  for (const auto& cp : d3) {
    int neg = 0;
    for (int c : cp.colors) neg += c;
    CHECK(neg % 2 == 0);
  }
}

TEST_CASE("type A statistics on a worked window") {
  // 3 1 4 5 2: descents at 3>1 and 5>2, ascents at 1<4, 4<5.
  StatRecord rec = stats_a({3, 1, 4, 5, 2});
  CHECK(rec.dt == std::set<int>{3, 5});
  CHECK(rec.at == std::set<int>{4, 5});
  CHECK(rec.negExp.empty());
  CHECK(rec.nCount == 0);
  // The identity window has ascent tops 2..m and no descent tops.
  StatRecord id = stats_a({1, 2, 3, 4});
  CHECK(id.dt.empty());
  CHECK(id.at == std::set<int>{2, 3, 4});
}

TEST_CASE("signed statistics on a worked window") {
  // (3, 1, -4, -5, 2), sigma_0 = 0: tops are letter values.
  ColoredPerm cp{5, 2, {3, 1, 4, 5, 2}, {0, 0, 1, 1, 0}};
  StatRecord rec = stats_colored(cp);
  CHECK(rec.dt == std::set<int>{3, 4, 5});
  CHECK(rec.at == std::set<int>{3, 5});
  CHECK(rec.negExp == std::map<int, int>{{4, 1}, {5, 1}});
  CHECK(rec.nCount == 2);
  CHECK(descent_count_colored(cp) == 3);
  CHECK(descent_count_b(cp) == 3);
  CHECK(descent_positions_b(cp) == std::vector<int>{2, 3, 4});
  CHECK(to_window_string(cp) == "3,1,-4,-5,2");
}

TEST_CASE("every slot contributes exactly one top") {
  for (int r : {2, 3}) {
    for (const auto& cp : enumerate(3, r)) {
      StatRecord rec = stats_colored(cp);
      CHECK(static_cast<int>(rec.dt.size()) == descent_count_colored(cp));
      CHECK(static_cast<int>(rec.dt.size() + rec.at.size()) == cp.n);
    }
  }
  for (const auto& cp : enumerate_d(3)) {
    DStarRecord rec = stats_dstar(cp);
    int total = 0;
    for (const auto& [v, m] : rec.dt) total += m;
    for (const auto& [v, m] : rec.at) total += m;
    CHECK(total == cp.n);
  }
}

TEST_CASE("type D descents on the rank two group") {
  // sigma_0 = -sigma_2 gives descent counts 0,1,2,1 over D_2.
  auto mk = [](std::vector<int> v, std::vector<int> c) {
    return ColoredPerm{2, 2, std::move(v), std::move(c)};
  };
  CHECK(descent_count_d(mk({1, 2}, {0, 0})) == 0);
  CHECK(descent_count_d(mk({2, 1}, {0, 0})) == 1);
  CHECK(descent_count_d(mk({1, 2}, {1, 1})) == 2);
  CHECK(descent_count_d(mk({2, 1}, {1, 1})) == 1);
}

TEST_CASE("affine statistics add the wrap slot") {
  // Window 2 1 3: ordinary descent 2>1, ascent 1<3; wrap 3>2 adds last
  // entry 3 to dt.
  StatRecord rec = affine_stats_a({2, 1, 3});
  CHECK(rec.dt == std::set<int>{2, 3});
  CHECK(rec.at == std::set<int>{3});
  // Signed window (2, -1): type B slots plus wrap on |sigma_n|.
  ColoredPerm cp{2, 2, {2, 1}, {0, 1}};
  StatRecord c = affine_stats_c(cp);
  // slots: 0<2 ascent top 2; 2>-1 descent top 2; wrap sigma_2=-1<0 puts 1 in at.
  CHECK(c.dt == std::set<int>{2});
  CHECK(c.at == std::set<int>{1, 2});
}

TEST_CASE("window strings and csv export") {
  ColoredPerm colored{3, 3, {2, 1, 3}, {0, 2, 1}};
  CHECK(to_window_string(colored) == "2,z1^2,z3^1");
  std::string csv = stats_csv(1, 2);
  CHECK(csv == "element,dt,at,negExp\n\"1\",,1,\n\"-1\",1,,1:1\n");
}
