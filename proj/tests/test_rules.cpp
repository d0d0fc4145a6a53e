#include "doctest.h"

#include "siladic/rules.hpp"

#include <fstream>
#include <sstream>

using namespace siladic;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(SILADIC_DATA_DIR) + "/rules/" + name + ".json");
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Part> plain(std::initializer_list<int> xs) {
  std::vector<Part> out;
  for (int x : xs) out.push_back({x, false});
  return out;
}

}  // namespace

TEST_CASE("shipped fixtures equal the built-in rule sets") {
  const std::pair<const char*, ResidueRuleSet> all[] = {
      {"refdilat", rules::refdilat()},     {"comp", rules::comp()},       {"newschur", rules::newschur()},
      {"refinement", rules::refinement()}, {"siladic", rules::siladic()}, {"distinct-odd", rules::distinct_odd()},
  };
  for (const auto& [name, built_in] : all) {
    INFO(name);
    CHECK(rules_from_json(read_fixture(name)) == built_in);
    CHECK(rules_from_json(to_json(built_in)) == built_in);
  }
}

TEST_CASE("gap predicates") {
  const GapPredicate p{{2, 4}, 7};
  CHECK(p.admits(2));
  CHECK_FALSE(p.admits(3));
  CHECK(p.admits(4));
  CHECK(p.admits(7));
  CHECK(p.admits(100));
  CHECK(p.minimum() == 2);
  CHECK(GapPredicate{{}, 7}.minimum() == 7);
}

TEST_CASE("descriptions that are not total are rejected") {
  auto d = rules::distinct_odd().description();
  d.gaps.clear();
  CHECK_THROWS_AS(ResidueRuleSet{d}, rule_set_error);

  auto missing_weight = rules::refdilat().description();
  missing_weight.weights.entries.pop_back();
  CHECK_THROWS_AS(ResidueRuleSet{missing_weight}, rule_set_error);

  auto bad_residue = rules::refdilat().description();
  bad_residue.residues.push_back(9);
  CHECK_THROWS_AS(ResidueRuleSet{bad_residue}, rule_set_error);

  auto overlapping = rules::refdilat().description();
  overlapping.gaps.push_back(overlapping.gaps.front());
  CHECK_THROWS_AS(ResidueRuleSet{overlapping}, rule_set_error);

  CHECK_THROWS(rules_from_json("{"));
  CHECK_THROWS(rules_from_json("{\"name\": \"x\"}"));
}

TEST_CASE("a residue-3 part in comp needs a gap of at least 7") {
  const auto comp = rules::comp();
  for (int g = 1; g < 7; ++g) CHECK_FALSE(comp.allows_step({11, false}, {11 - g, false}));
  CHECK(comp.allows_step({11, false}, {4, false}));
  CHECK(comp.allows_step({11, false}, {1, false}));
}

TEST_CASE("siladic and refdilat admit the same partitions") {
  const auto sil = rules::siladic();
  const auto ref = rules::refdilat();
  for (int x = 1; x <= 60; ++x) {
    CHECK(sil.allows_part({x, false}) == ref.allows_part({x, false}));
    for (int y = 1; y < x; ++y) {
      INFO(x << " > " << y);
      CHECK(sil.allows_step({x, false}, {y, false}) == ref.allows_step({x, false}, {y, false}));
    }
  }
}

TEST_CASE("siladic examples") {
  const auto sil = rules::siladic();
  CHECK_FALSE(sil.allows_part({2, false}));
  CHECK(sil.admits(plain({3})));
  // Gap 5 with sum 11 = -5 mod 16.
  CHECK_FALSE(sil.admits(plain({8, 3})));
  // Gap 5 with sum 13 = -3 mod 16 is fine.
  CHECK(sil.admits(plain({9, 4})));
  CHECK_FALSE(sil.admits(plain({7, 3})));
  CHECK(sil.admits(plain({20, 11})));
}

TEST_CASE("newschur overlines only parts = 1, 5 mod 6") {
  const auto ns = rules::newschur();
  CHECK(ns.allows_part({1, false}));
  CHECK_FALSE(ns.allows_part({1, true}));
  CHECK(ns.allows_part({5, true}));
  CHECK(ns.allows_part({7, true}));
  CHECK_FALSE(ns.allows_part({3, true}));
  CHECK(ns.weight({1, false}) == Weights{1, 0});
  CHECK(ns.weight({5, true}) == Weights{2, 0});
  CHECK(ns.weight({7, true}) == Weights{0, 2});
  // An overlined part followed by an overlined part needs a gap of 7.
  CHECK_FALSE(ns.admits(std::vector<Part>{{11, true}, {5, true}}));
  CHECK(ns.admits(std::vector<Part>{{13, true}, {5, false}}));
}

TEST_CASE("distinct odd parts") {
  const auto odd = rules::distinct_odd();
  CHECK(odd.admits(plain({7, 5, 1})));
  CHECK_FALSE(odd.admits(plain({5, 5})));
  CHECK_FALSE(odd.admits(plain({4})));
  CHECK(odd.weight({9, false}) == Weights{1, 0});
}
