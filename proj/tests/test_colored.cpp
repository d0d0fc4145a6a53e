#include "doctest.h"

#include "oracles.hpp"
#include "siladic/colored.hpp"
#include "siladic/dilation.hpp"

#include <random>

using namespace siladic;

TEST_CASE("rank follows the block chain") {
  const std::vector<ColoredInt> chain = {{1, Color::ab}, {1, Color::a}, {1, Color::b2}, {1, Color::b},
                                         {2, Color::ab}, {2, Color::a}, {3, Color::a2}, {2, Color::b},
                                         {3, Color::ab}, {3, Color::a}, {3, Color::b2}, {3, Color::b}};
  for (std::size_t i = 0; i < chain.size(); ++i) CHECK(rank(chain[i]) == static_cast<std::int64_t>(i));
}

TEST_CASE("rank examples") {
  CHECK(rank({1, Color::ab}) == 0);
  CHECK(rank({3, Color::a2}) == 6);
  CHECK(rank({3, Color::b}) == 11);
  // One more period of the block pattern puts 5_b at 19; the oracle sorts by the (4,3,1) image.
  CHECK(rank({5, Color::b}) == 19);
  CHECK(oracle::image431({5, 1}) == 19);
}

TEST_CASE("from_rank inverts rank and pred steps down by one") {
  for (std::int64_t r = 0; r < 400; ++r) {
    const auto x = from_rank(r);
    CHECK(rank(x) == r);
    if (r > 0) CHECK(rank(pred(x)) == r - 1);
  }
  CHECK_THROWS(pred(ColoredInt(1, Color::ab)));
}

TEST_CASE("invalid coloured integers are rejected") {
  CHECK_THROWS_AS(ColoredInt(2, Color::a2), invalid_colored_int);
  CHECK_THROWS_AS(ColoredInt(4, Color::b2), invalid_colored_int);
  CHECK_THROWS_AS(ColoredInt(1, Color::a2), invalid_colored_int);
  CHECK_THROWS_AS(ColoredInt(0, Color::a), invalid_colored_int);
  CHECK(is_valid_colored(1, Color::b2));
  CHECK_FALSE(is_valid_colored(6, Color::a2));
}

TEST_CASE("min_gap examples") {
  CHECK(min_gap(Color::a, Parity::odd, Color::ab) == 1);
  CHECK(min_gap(Color::a2, Parity::odd, Color::b2) == 4);
  CHECK(min_gap(Color::b, Parity::even, Color::a2) == 1);
  CHECK_THROWS(min_gap(Color::a2, Parity::even, Color::a));
  CHECK_THROWS(min_gap(Color::b2, Parity::even, Color::a));
}

TEST_CASE("all forty matrix entries match the table and are positive") {
  const Color cols[5] = {Color::a, Color::b, Color::ab, Color::a2, Color::b2};
  for (int v = 1; v <= 4; ++v) {
    for (int lc = 0; lc < 5; ++lc) {
      if (!is_valid_colored(v, cols[lc])) continue;
      for (int sc = 0; sc < 5; ++sc) {
        const int g = min_gap(cols[lc], parity_of(v), cols[sc]);
        CHECK(g >= 1);
        CHECK(g == oracle::gap({v, lc}, {1, sc}));
      }
    }
  }
}

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible(ColoredPartition{}));
  CHECK(is_admissible(ColoredPartition{{3, Color::a}, {2, Color::ab}}));
  CHECK_FALSE(is_admissible(ColoredPartition{{1, Color::b2}}));
  CHECK_FALSE(is_admissible(ColoredPartition{{1, Color::ab}}));
  // 2_a then 1_a needs a gap of 2.
  CHECK_FALSE(is_admissible(ColoredPartition{{2, Color::a}, {1, Color::a}}));
  // Rank must decrease even when the gap is met numerically.
  CHECK_FALSE(is_admissible(ColoredPartition{{2, Color::ab}, {5, Color::a}}));
}

TEST_CASE("is_admissible agrees with the brute-force predicate on small sets") {
  std::size_t checked = 0;
  oracle::for_each_subset(11, [&](const std::vector<oracle::CInt>& ps, int) {
    std::vector<oracle::CInt> sorted = ps;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return oracle::image431(x) > oracle::image431(y); });
    ColoredPartition p;
    for (const auto& x : sorted) p.emplace_back(x.value, static_cast<Color>(x.color));
    CHECK(is_admissible(p) == oracle::admissible(ps));
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("weights examples") {
  CHECK(weights(ColoredPartition{}) == Weights{0, 0});
  CHECK(weights(ColoredPartition{{3, Color::a2}}) == Weights{2, 0});
  CHECK(weights(ColoredPartition{{2, Color::ab}, {1, Color::a}}) == Weights{2, 1});
  CHECK(weights(ColoredPartition{{5, Color::b2}, {3, Color::b}}) == Weights{0, 3});
}

TEST_CASE("weights are additive over concatenation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 6), value(1, 20), color(0, 4);
  auto random_parts = [&] {
    ColoredPartition p;
    const int n = len(rng);
    while (static_cast<int>(p.size()) < n) {
      const int v = value(rng);
      const auto c = static_cast<Color>(color(rng));
      if (is_valid_colored(v, c)) p.emplace_back(v, c);
    }
    return p;
  };
  for (int i = 0; i < 200; ++i) {
    const auto x = random_parts();
    const auto y = random_parts();
    ColoredPartition xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const auto wx = weights(x), wy = weights(y), wxy = weights(xy);
    CHECK(wxy.u == wx.u + wy.u);
    CHECK(wxy.v == wx.v + wy.v);
  }
}

TEST_CASE("rank order matches the (4,3,1) image order for values up to 50") {
  std::vector<ColoredInt> all;
  for (int v = 1; v <= 50; ++v) {
    for (Color c : kAllColors) {
      if (is_valid_colored(v, c)) all.emplace_back(v, c);
    }
  }
  for (const auto& x : all) {
    CHECK(rank(x) == dilated_value(x, dilations::kSiladic));
    for (const auto& y : all) {
      CHECK((rank(x) < rank(y)) == (dilated_value(x, dilations::kSiladic) < dilated_value(y, dilations::kSiladic)));
    }
  }
}

TEST_CASE("text form round-trips") {
  for (std::int64_t r = 0; r < 100; ++r) {
    const auto x = from_rank(r);
    CHECK(parse_colored_int(to_string(x)) == x);
  }
  CHECK(to_string(ColoredInt(3, Color::a2)) == "3_a2");
  CHECK_THROWS(parse_colored_int("3_c"));
  CHECK_THROWS(parse_colored_int("2_b2"));
  CHECK_THROWS(parse_colored_int("x_a"));
}
