#include "doctest.h"

#include "oracles.hpp"
#include "siladic/dilation.hpp"
#include "siladic/enumerator.hpp"
#include "siladic/recurrence.hpp"

#include <sstream>

using namespace siladic;

namespace {

TriSeries poly(Caps caps, std::initializer_list<std::tuple<int, int, int, int>> terms) {
  TriSeries s(caps);
  for (const auto& [u, v, n, c] : terms) s.accumulate(u, v, n, c);
  return s;
}

TriSeries from_oracle(const oracle::Table& t, Caps caps) {
  TriSeries s(caps);
  for (const auto& [key, c] : t) {
    const auto& [u, v, n] = key;
    s.accumulate(u, v, n, c);
  }
  return s;
}

int image(const ColoredInt& k) { return dilated_value(k, dilations::kSiladic); }

const ReplayReport& find(const std::vector<ReplayReport>& rs, const std::string& id) {
  for (const auto& r : rs) {
    if (r.id == id) return r;
  }
  FAIL("no report " << id);
  return rs.front();
}

}  // namespace

TEST_CASE("initial series as explicit polynomials") {
  const Caps c{4, 4, 6};
  CHECK(initial_series({1, Color::ab}, c) == TriSeries::one(c));
  CHECK(initial_series({1, Color::a}, c) == poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}}));
  CHECK(initial_series({1, Color::b2}, c) == poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}}));
  CHECK(initial_series({3, Color::a2}, c) ==
        poly(c, {{0, 0, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 2, 1}, {1, 0, 2, 1}, {2, 0, 3, 1}}));
  CHECK(initial_series({2, Color::b}, c).coeff(2, 0, 3) == 1);
  CHECK(initial_series({2, Color::b}, c).coeff(1, 1, 3) == 1);
  CHECK_THROWS(initial_series({3, Color::ab}, c));
}

TEST_CASE("initial series match brute-force counts") {
  const int N = 12;
  const Caps c{N, N, N};
  for (std::int64_t r = 0; r < 8; ++r) {
    const auto k = from_rank(r);
    INFO(to_string(k));
    CHECK(initial_series(k, c) == from_oracle(oracle::colored_counts(N, image(k)), c));
  }
  Census census(c);
  for (const auto& r : verify_initials(census)) CHECK(r.status == Status::pass);
}

TEST_CASE("the first ladder step gives G at 3_ab") {
  const int N = 12;
  const Caps c{N, N, N};
  const auto ladder = GLadder::build({3, Color::ab}, c);
  const auto expected = initial_series({2, Color::b}, c) + shift(initial_series({1, Color::a}, c), 1, 1, 3);
  CHECK(ladder.at({3, Color::ab}) == expected);
  CHECK(ladder.at({3, Color::ab}) == from_oracle(oracle::colored_counts(N, image({3, Color::ab})), c));
  CHECK(ladder.size() == 9);
  CHECK(ladder.top() == ColoredInt(3, Color::ab));
  CHECK_FALSE(ladder.contains({3, Color::a}));
  CHECK_THROWS_AS(ladder.at({3, Color::a}), std::out_of_range);
}

TEST_CASE("ladder agrees with brute force and with the census") {
  const int N = 12;
  const Caps c{N, N, N};
  auto ladder = GLadder::build({6, Color::b}, c);
  for (std::int64_t r = 0; r <= rank(ColoredInt(6, Color::b)); ++r) {
    const auto k = from_rank(r);
    INFO(to_string(k));
    CHECK(ladder.at(k) == from_oracle(oracle::colored_counts(N, image(k)), c));
  }
  Census census(c);
  ladder.extend_to({12, Color::b});
  for (const auto& r : verify_ladder(ladder, census)) {
    INFO(r.k);
    CHECK(r.status == Status::pass);
  }
}

TEST_CASE("G_k is coefficientwise nondecreasing in k") {
  const Caps c{20, 20, 20};
  const auto ladder = GLadder::build({10, Color::b}, c);
  for (std::int64_t r = 1; r <= rank(ColoredInt(10, Color::b)); ++r) {
    const auto diff = ladder.at(from_rank(r)) - ladder.at(from_rank(r - 1));
    for (const auto& [e, x] : diff.terms()) CHECK(x > 0);
  }
}

TEST_CASE("q-difference equations at small k") {
  Census census({20, 20, 20});
  const auto k1 = verify_qdiff(1, census);
  CHECK(find(k1, "eq1").status == Status::pass);
  CHECK(find(k1, "eq8").status == Status::pass);
  CHECK(find(verify_qdiff(2, census), "eq5").status == Status::pass);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& r : verify_qdiff(k, census)) {
      INFO(r.id << " k=" << k);
      CHECK(r.status == Status::pass);
    }
  }
}

TEST_CASE("identities with an index below 1_ab are skipped") {
  for (const auto& id : proof_step_series_identities(1)) {
    if (id.id == "plic-expanded" || id.id == "ploc") CHECK_FALSE(is_instantiable(id));
  }
  CHECK(is_instantiable(keyprop_identities(1)[0]));
  CHECK(highest_index(keyprop_identities(2)) == ColoredInt(6, Color::ab));
}

TEST_CASE("key identities") {
  const Caps c{16, 16, 16};
  auto ladder = GLadder::build({3, Color::a2}, c);
  const auto k1 = verify_keyprop(1, ladder);
  for (const auto& r : k1) CHECK(r.status == Status::pass);
  // Hand expansion of (1 + aq)(1 + bq + aq^2).
  const auto hand = poly(c, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 2, 1}, {1, 0, 1, 1}, {1, 1, 2, 1}, {2, 0, 3, 1}});
  CHECK(ladder.at({3, Color::a2}) == hand);
  CHECK(find(verify_keyprop(4, ladder), "key2").status == Status::pass);
  CHECK(ladder.contains({10, Color::ab}));
}

TEST_CASE("proof steps at k = 1 and 2") {
  Census census({22, 22, 22});
  const auto k1 = verify_proof_steps(1, census);
  CHECK(find(k1, "goal").status == Status::pass);
  const auto k2 = verify_proof_steps(2, census);
  CHECK(find(k2, "pif3").status == Status::pass);
  CHECK(find(k2, "e-eq3").status == Status::pass);
  const auto& offset = find(k2, "e-eq5");
  CHECK(offset.status == Status::pass);
  CHECK(offset.note.find("n-7 holds") != std::string::npos);
  for (const auto* reports : {&k1, &k2}) {
    for (const auto& r : *reports) {
      INFO(r.id << " k=" << r.k);
      CHECK(r.status == Status::pass);
    }
  }
}

TEST_CASE("an e-equality at k = 2 against brute-force counts") {
  const int N = 16;
  const auto lhs = oracle::colored_counts(N, image({5, Color::ab}), true);
  const auto rhs = oracle::colored_counts(N, image({4, Color::b}), true);
  std::size_t nonzero = 0;
  for (int u = 0; u <= N; ++u) {
    for (int v = 0; v <= N; ++v) {
      for (int n = 0; n <= N; ++n) {
        const auto x = oracle::table_at(lhs, u - 1, v, n - 6);
        CHECK(x == oracle::table_at(rhs, u - 2, v, n - 7));
        if (x) ++nonzero;
      }
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("a mutated identity fails with a witness") {
  const Caps c{14, 14, 14};
  Census census(c);
  auto id = qdiff_identities(1).front();
  id.rhs.back().coeff = 2;
  const auto r = check_identity(id, lookup(census), c);
  REQUIRE(r);
  CHECK(r->status == Status::fail);
  REQUIRE(r->witness);
  CHECK(r->witness->lhs != r->witness->rhs);
  CHECK(exit_status({*r}) == 1);
}

TEST_CASE("an empty horizon is inconclusive, never a pass") {
  const Caps c{2, 2, 4};
  const auto r = compare_series("x", "", TriSeries(c, -1), TriSeries(c), 4);
  CHECK(r.status == Status::inconclusive);
  CHECK(exit_status({r}) == 2);
  CHECK(exit_status({make_pass("y", "", c, 4)}) == 0);
}

TEST_CASE("product limit") {
  const auto r = verify_product_limit({10, 10, 10});
  CHECK(r.status == Status::pass);
  CHECK(r.checked_to == 10);
  const auto D = enumerate_D({3, 3, 3});
  CHECK(D.at(1, 0, 1) == 1);
  CHECK(D.at(1, 1, 3) == 2);
}

TEST_CASE("report serialisation") {
  Census census({10, 10, 10});
  const auto rs = verify_qdiff(1, census);
  std::ostringstream json, csv, text;
  write_json_lines(json, rs);
  write_csv(csv, rs);
  write_summary(text, rs);
  CHECK(json.str().find("\"k\":1,") != std::string::npos);
  CHECK(json.str().find("\"schema\":1") != std::string::npos);
  CHECK(csv.str().rfind("id,k,U,V,N,status,checked_to,witness_u,witness_v,witness_n,lhs,rhs\n", 0) == 0);
  CHECK(text.str().find("total") != std::string::npos);
}
