#include "doctest.h"

#include "oracles.hpp"
#include "siladic/qseries.hpp"

#include <random>
#include <sstream>

using namespace siladic;

namespace {

TriSeries poly(Caps caps, std::initializer_list<std::tuple<int, int, int, int>> terms) {
  TriSeries s(caps);
  for (const auto& [u, v, n, c] : terms) s.accumulate(u, v, n, c);
  return s;
}

TriSeries random_series(std::mt19937& rng, Caps caps, bool support_n_ge_uv = false) {
  std::uniform_int_distribution<int> count(0, 8), coeff(-3, 3);
  std::uniform_int_distribution<int> du(0, caps.U), dv(0, caps.V), dn(0, caps.N);
  TriSeries s(caps);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const int u = du(rng), v = dv(rng);
    int n = dn(rng);
    if (support_n_ge_uv) n = std::max(n, u + v);
    if (n <= caps.N) s.accumulate(u, v, n, coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("add and mul examples") {
  const Caps c{3, 3, 6};
  const auto one_aq = poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}});
  const auto one_bq = poly(c, {{0, 0, 0, 1}, {0, 1, 1, 1}});
  CHECK(mul(one_aq, one_bq) == poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 2, 1}}));
  CHECK(add(one_aq, TriSeries(c)) == one_aq);
  const Caps c1{1, 3, 6};
  const auto s = poly(c1, {{0, 0, 0, 1}, {1, 0, 1, 1}});
  CHECK(mul(s, s) == poly(c1, {{0, 0, 0, 1}, {1, 0, 1, 2}}));
}

TEST_CASE("operations reject mismatched caps") {
  CHECK_THROWS_AS(add(TriSeries({1, 1, 1}), TriSeries({1, 1, 2})), caps_mismatch);
  CHECK_THROWS_AS(mul(TriSeries({1, 1, 1}), TriSeries({2, 1, 1})), caps_mismatch);
}

TEST_CASE("no zero coefficient is stored") {
  TriSeries s({2, 2, 2});
  s.accumulate(1, 0, 1, 3);
  s.accumulate(1, 0, 1, -3);
  CHECK(s.is_zero());
  const auto t = poly({2, 2, 2}, {{1, 1, 2, 5}});
  CHECK((t - t).is_zero());
}

TEST_CASE("swap_sub examples") {
  const Caps c{3, 3, 8};
  CHECK(swap_sub(poly(c, {{1, 2, 3, 1}})) == poly(c, {{2, 1, 5, 1}}));
  CHECK(swap_sub(TriSeries::one(c)) == TriSeries::one(c));
  CHECK(swap_sub(poly(c, {{1, 0, 1, 1}})) == poly(c, {{0, 1, 1, 1}}));
  // b -> aq raises the q-degree; a term pushed past N is dropped.
  CHECK(swap_sub(poly(c, {{0, 1, 8, 1}})).is_zero());
  const auto asym = swap_sub(TriSeries({1, 2, 4}));
  CHECK(asym.caps() == Caps{2, 1, 4});
}

TEST_CASE("dilate examples") {
  const Caps c{2, 2, 4};
  const DilationSpec d{4, 3, 1};
  CHECK(dilate(poly(c, {{1, 0, 1, 1}}), d).coeff(1, 0, 1) == 1);
  CHECK(dilate(poly(c, {{0, 2, 3, 1}}), d).coeff(0, 2, 10) == 1);
  CHECK(dilate(poly(c, {{1, 1, 1, 1}}), d).coeff(1, 1, 0) == 1);
  CHECK(dilate(poly(c, {{1, 0, 1, 1}}), d).caps() == Caps{2, 2, 16});
  CHECK_THROWS_AS(dilate(poly(c, {{2, 0, 1, 1}}), d), negative_exponent);
}

TEST_CASE("dilate horizon") {
  const Caps c{2, 2, 4};
  const DilationSpec d{4, 3, 1};
  // M(N+1) - m_a U - m_b V - 1 = 20 - 6 - 2 - 1.
  CHECK(dilate(TriSeries(c), d).horizon() == 11);
  CHECK(dilate(TriSeries(c), d, DilationHorizon::nondecreasing_support).horizon() == 4);
  CHECK_THROWS(dilate(poly(c, {{1, 1, 1, 1}}), d, DilationHorizon::nondecreasing_support));
}

TEST_CASE("coeff and eq_up_to") {
  const Caps c{2, 2, 5};
  const auto s = poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}});
  CHECK(s.coeff(1, 0, 1) == 1);
  CHECK(s.coeff(2, 2, 5) == 0);
  CHECK_THROWS(s.coeff(3, 0, 0));
  CHECK(eq_up_to(s, s, 5));
  CHECK_THROWS_AS(eq_up_to(s, s, 6), horizon_exceeded);
  // A term beyond the caps is simply not there.
  auto t = s;
  t.accumulate(1, 0, 6, 1);
  CHECK(eq_up_to(s, t, 5));
  const TriSeries low(c, 2);
  CHECK_THROWS_AS(eq_up_to(s, low, 3), horizon_exceeded);
  CHECK(first_difference(s, TriSeries::one(c), 5) == Exponent{1, 0, 1});
}

TEST_CASE("shift lowers nothing below the caps and tracks the horizon") {
  const Caps c{3, 3, 10};
  const TriSeries s(c, 4);
  CHECK(shift(s, 0, 0, 3).horizon() == 7);
  CHECK(shift(s, 0, 0, 30).horizon() == 10);
  CHECK(shift(poly(c, {{0, 0, 0, 2}}), 1, 2, 3, 5) == poly(c, {{1, 2, 3, 10}}));
}

TEST_CASE("two_color_product examples") {
  const auto p = two_color_product({3, 3, 6});
  CHECK(p.coeff(1, 0, 1) == 1);
  CHECK(p.coeff(1, 1, 3) == 2);
  CHECK(p.coeff(2, 0, 2) == 0);
}

TEST_CASE("two_color_product counts pairs of distinct-part partitions") {
  const int N = 14;
  const auto p = two_color_product({N, N, N});
  const auto ref = oracle::two_distinct_sets(N);
  for (int u = 0; u <= N; ++u) {
    for (int v = 0; v <= N; ++v) {
      for (int n = 0; n <= N; ++n) CHECK(p.coeff(u, v, n) == oracle::table_at(ref, u, v, n));
    }
  }
}

TEST_CASE("progression_product") {
  const auto s = progression_product(3, 1, 2, {2, 2, 9});
  CHECK(s.coeff(1, 1, 3) == 1);
  CHECK(s.coeff(1, 0, 4) == 1);
  CHECK(s.coeff(2, 0, 5) == 1);
  CHECK(s.coeff(1, 0, 2) == 0);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240611);
  const Caps c{3, 3, 7};
  for (int i = 0; i < 60; ++i) {
    const auto x = random_series(rng, c), y = random_series(rng, c), z = random_series(rng, c);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(TriSeries::one(c) * x == x);
  }
}

TEST_CASE("swap_sub is multiplicative") {
  std::mt19937 rng(99);
  const Caps c{3, 3, 8};
  for (int i = 0; i < 60; ++i) {
    const auto x = random_series(rng, c), y = random_series(rng, c);
    CHECK(eq_up_to(swap_sub(x * y), swap_sub(x) * swap_sub(y), c.N));
  }
}

TEST_CASE("dilate is multiplicative below its horizon") {
  std::mt19937 rng(5);
  const Caps c{2, 2, 8};
  for (const DilationSpec d : {DilationSpec{4, 3, 1}, DilationSpec{4, 1, 3}, DilationSpec{3, 2, 1}}) {
    for (int i = 0; i < 30; ++i) {
      const auto x = random_series(rng, c, true), y = random_series(rng, c, true);
      const auto lhs = dilate(x * y, d);
      const auto rhs = dilate(x, d) * dilate(y, d);
      CHECK(eq_up_to(lhs, rhs, std::min(lhs.horizon(), rhs.horizon())));
    }
  }
}

TEST_CASE("count tables") {
  CountTable t({2, 2, 4});
  t.add(1, 0, 1, 2);
  t.add(1, 0, 1, 1);
  t.add(0, 1, 3, 1);
  CHECK(t.at(1, 0, 1) == 3);
  CHECK(t.at(-1, 0, 1) == 0);
  CHECK(t.at(5, 0, 1) == 0);
  CHECK(t.total(1) == 3);
  CHECK_THROWS(t.add(1, 0, 1, -1));
  CHECK_THROWS(t.add(3, 0, 1, 1));
  CHECK(CountTable::from_series(t.to_series()) == t);
  const auto agg = aggregate_uv(t);
  CHECK(agg.caps() == Caps{4, 0, 4});
  CHECK(agg.at(1, 0, 3) == 1);
}

TEST_CASE("text, csv and json round-trips") {
  std::mt19937 rng(3);
  const Caps c{3, 3, 7};
  for (int i = 0; i < 20; ++i) {
    auto s = random_series(rng, c);
    s.accumulate(1, 1, 2, BigInt("123456789012345678901234567890"));
    std::ostringstream text, json;
    write_text(text, s);
    write_json(json, s);
    std::istringstream in(text.str());
    CHECK(read_series_text(in) == s);
    CHECK(read_series_json(json.str()) == s);
  }
  CountTable t({2, 2, 3});
  t.add(1, 1, 2, 4);
  std::ostringstream text, json, csv;
  write_text(text, t);
  write_json(json, t);
  write_csv(csv, t);
  std::istringstream in(text.str());
  CHECK(read_counts_text(in) == t);
  CHECK(read_counts_json(json.str()) == t);
  CHECK(csv.str().rfind("u,v,n,count\n", 0) == 0);
  CHECK(csv.str().find("1,1,2,4") != std::string::npos);
}

TEST_CASE("polynomial rendering") {
  const Caps c{3, 3, 4};
  CHECK(to_polynomial_string(TriSeries(c)) == "0");
  CHECK(to_polynomial_string(poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}, {2, 1, 3, -2}})) == "1 + a*q - 2*a^2*b*q^3");
}

TEST_CASE("dilation spec parsing") {
  CHECK(parse_dilation_spec("4,3,1") == DilationSpec{4, 3, 1});
  CHECK(to_string(DilationSpec{3, 2, 1}) == "3,2,1");
  CHECK_THROWS(parse_dilation_spec("4,3"));
  CHECK_THROWS(parse_dilation_spec("0,1,1"));
}
