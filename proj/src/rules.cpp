#include "siladic/rules.hpp"

#include "json.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace siladic {

namespace {

int mod(int x, int m) noexcept { return ((x % m) + m) % m; }

bool contains(const std::vector<int>& xs, int x) noexcept { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

constexpr const char* kSchema = "siladic.rules/1";

}  // namespace

bool GapPredicate::admits(int gap) const noexcept {
  if (at_least && gap >= *at_least) return true;
  return contains(values, gap);
}

int GapPredicate::minimum() const {
  int m = at_least.value_or(std::numeric_limits<int>::max());
  for (int g : values) m = std::min(m, g);
  if (m == std::numeric_limits<int>::max()) throw rule_set_error("gap predicate admits nothing");
  return m;
}

ResidueRuleSet::ResidueRuleSet(Description d) : desc_(std::move(d)) {
  const int m = desc_.modulus;
  if (m < 1) throw rule_set_error(desc_.name + ": modulus must be positive");
  if (desc_.weights.modulus < 1) throw rule_set_error(desc_.name + ": weight modulus must be positive");
  auto check_residues = [&](const std::vector<int>& rs, const char* what) {
    for (int r : rs) {
      if (r < 0 || r >= m) throw rule_set_error(desc_.name + ": " + what + " residue out of range");
    }
  };
  check_residues(desc_.residues, "part");
  check_residues(desc_.overlinable, "overlinable");

  gap_index_.assign(static_cast<std::size_t>(m) * 4, -1);
  for (std::size_t i = 0; i < desc_.gaps.size(); ++i) {
    const auto& g = desc_.gaps[i];
    if (g.residue < 0 || g.residue >= m) throw rule_set_error(desc_.name + ": gap rule residue out of range");
    if (g.gaps.at_least && *g.gaps.at_least < 1) throw rule_set_error(desc_.name + ": gaps must be positive");
    for (int x : g.gaps.values) {
      if (x < 1) throw rule_set_error(desc_.name + ": gaps must be positive");
    }
    for (int next = 0; next < 2; ++next) {
      if (g.next_overlined && *g.next_overlined != static_cast<bool>(next)) continue;
      auto& slot = gap_index_[(static_cast<std::size_t>(g.residue) * 2 + g.overlined) * 2 + next];
      if (slot != -1) throw rule_set_error(desc_.name + ": overlapping gap rules for residue " + std::to_string(g.residue));
      slot = static_cast<int>(i);
    }
  }

  // Totality: every (residue, flag) that can carry a part has a rule for every possible successor.
  const bool any_overline = !desc_.overlinable.empty();
  for (int r = 0; r < m; ++r) {
    for (int over = 0; over < 2; ++over) {
      const bool exists = over ? contains(desc_.overlinable, r) : contains(desc_.residues, r);
      if (!exists) continue;
      for (int next = 0; next < (any_overline ? 2 : 1); ++next) {
        if (!rule_for(r, over, next)) {
          throw rule_set_error(desc_.name + ": no gap rule for residue " + std::to_string(r) +
                               (over ? " (overlined)" : "") + (next ? " before an overlined part" : ""));
        }
      }
    }
  }
  const int wm = desc_.weights.modulus;
  const int period = std::lcm(m, wm);
  for (int x = 0; x < period; ++x) {
    for (int over = 0; over < 2; ++over) {
      const bool exists = over ? contains(desc_.overlinable, x % m) : contains(desc_.residues, x % m);
      if (exists && !weight_for(x, over)) {
        throw rule_set_error(desc_.name + ": no weight for parts congruent to " + std::to_string(x) + " mod " +
                             std::to_string(period) + (over ? " (overlined)" : ""));
      }
    }
  }
}

const GapPredicate* ResidueRuleSet::rule_for(int residue, bool overlined, bool next_overlined) const noexcept {
  const int idx = gap_index_[(static_cast<std::size_t>(residue) * 2 + overlined) * 2 + next_overlined];
  return idx < 0 ? nullptr : &desc_.gaps[static_cast<std::size_t>(idx)].gaps;
}

const WeightEntry* ResidueRuleSet::weight_for(int value, bool overlined) const noexcept {
  const int r = mod(value, desc_.weights.modulus);
  for (const auto& e : desc_.weights.entries) {
    if (e.residue == r && e.overlined == overlined) return &e;
  }
  return nullptr;
}

bool ResidueRuleSet::allows_part(Part p) const noexcept {
  if (p.value < 1) return false;
  const int r = mod(p.value, desc_.modulus);
  if (!(p.overlined ? contains(desc_.overlinable, r) : contains(desc_.residues, r))) return false;
  return std::find(desc_.forbidden.begin(), desc_.forbidden.end(), p) == desc_.forbidden.end();
}

bool ResidueRuleSet::allows_step(Part larger, Part smaller) const noexcept {
  const auto* rule = rule_for(mod(larger.value, desc_.modulus), larger.overlined, smaller.overlined);
  return rule && rule->admits(larger.value - smaller.value);
}

Weights ResidueRuleSet::weight(Part p) const {
  const auto* e = weight_for(p.value, p.overlined);
  if (!e) throw rule_set_error(desc_.name + ": no weight for part " + std::to_string(p.value));
  return {e->u, e->v};
}

bool ResidueRuleSet::admits(std::span<const Part> parts) const noexcept {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!allows_part(parts[i])) return false;
    if (i + 1 < parts.size() && !allows_step(parts[i], parts[i + 1])) return false;
  }
  return true;
}

std::string to_json(const ResidueRuleSet& rules) {
  const auto& d = rules.description();
  nlohmann::json j;
  j["schema"] = kSchema;
  j["name"] = d.name;
  j["modulus"] = d.modulus;
  j["residues"] = d.residues;
  j["overlinable"] = d.overlinable;
  j["forbidden"] = nlohmann::json::array();
  for (const auto& p : d.forbidden) j["forbidden"].push_back({{"value", p.value}, {"overlined", p.overlined}});
  j["gaps"] = nlohmann::json::array();
  for (const auto& g : d.gaps) {
    nlohmann::json r{{"residue", g.residue}, {"overlined", g.overlined}, {"values", g.gaps.values}};
    if (g.next_overlined) r["next_overlined"] = *g.next_overlined;
    if (g.gaps.at_least) r["at_least"] = *g.gaps.at_least;
    j["gaps"].push_back(r);
  }
  nlohmann::json w{{"modulus", d.weights.modulus}, {"entries", nlohmann::json::array()}};
  for (const auto& e : d.weights.entries) {
    w["entries"].push_back({{"residue", e.residue}, {"overlined", e.overlined}, {"u", e.u}, {"v", e.v}});
  }
  j["weights"] = w;
  return j.dump(2);
}

ResidueRuleSet rules_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw rule_set_error(std::string("rule set is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("schema", std::string{}) != kSchema) {
      throw rule_set_error(std::string("rule set schema must be \"") + kSchema + "\"");
    }
    ResidueRuleSet::Description d;
    d.name = j.at("name").get<std::string>();
    d.modulus = j.at("modulus").get<int>();
    d.residues = j.at("residues").get<std::vector<int>>();
    d.overlinable = j.value("overlinable", std::vector<int>{});
    for (const auto& p : j.value("forbidden", nlohmann::json::array())) {
      d.forbidden.push_back({p.at("value").get<int>(), p.value("overlined", false)});
    }
    for (const auto& g : j.at("gaps")) {
      GapRule r;
      r.residue = g.at("residue").get<int>();
      r.overlined = g.value("overlined", false);
      if (g.contains("next_overlined")) r.next_overlined = g.at("next_overlined").get<bool>();
      r.gaps.values = g.value("values", std::vector<int>{});
      if (g.contains("at_least")) r.gaps.at_least = g.at("at_least").get<int>();
      d.gaps.push_back(std::move(r));
    }
    const auto& w = j.at("weights");
    d.weights.modulus = w.at("modulus").get<int>();
    for (const auto& e : w.at("entries")) {
      d.weights.entries.push_back(
          {e.at("residue").get<int>(), e.value("overlined", false), e.at("u").get<int>(), e.at("v").get<int>()});
    }
    return ResidueRuleSet(std::move(d));
  } catch (const nlohmann::json::exception& e) {
    throw rule_set_error(std::string("malformed rule set: ") + e.what());
  }
}

namespace rules {

namespace {

std::vector<int> all_residues(int m) {
  std::vector<int> rs(static_cast<std::size_t>(m));
  std::iota(rs.begin(), rs.end(), 0);
  return rs;
}

// Gaps >= 5; a gap of 5..8 is allowed only for the listed residues of the larger part mod 8.
std::vector<GapRule> siladic_mod8_gaps() {
  const std::vector<std::vector<int>> allowed_for_gap = {
      {1, 4},                    // 5
      {1, 3, 5, 7},              // 6
      {0, 1, 3, 4, 6, 7},        // 7
      {0, 1, 3, 4, 5, 7},        // 8
  };
  std::vector<GapRule> gaps;
  for (int r = 0; r < 8; ++r) {
    GapRule g;
    g.residue = r;
    for (int i = 0; i < 4; ++i) {
      if (contains(allowed_for_gap[static_cast<std::size_t>(i)], r)) g.gaps.values.push_back(5 + i);
    }
    g.gaps.at_least = 9;
    gaps.push_back(g);
  }
  return gaps;
}

WeightSpec weights_mod(int m, std::vector<std::pair<int, int>> uv) {
  WeightSpec w{m, {}};
  for (int r = 0; r < m; ++r) w.entries.push_back({r, false, uv[static_cast<std::size_t>(r)].first, uv[static_cast<std::size_t>(r)].second});
  return w;
}

GapRule tail_rule(int residue, bool overlined, std::optional<bool> next, int at_least,
                  std::vector<int> values = {}) {
  return GapRule{residue, overlined, next, GapPredicate{std::move(values), at_least}};
}

}  // namespace

ResidueRuleSet refdilat() {
  ResidueRuleSet::Description d;
  d.name = "refdilat";
  d.modulus = 8;
  d.residues = all_residues(8);
  d.forbidden = {{2, false}};
  d.gaps = siladic_mod8_gaps();
  // u: parts = 0,1 mod 4, twice parts = 6 mod 8.  v: parts = 0,3 mod 4, twice parts = 2 mod 8.
  d.weights = weights_mod(8, {{1, 1}, {1, 0}, {0, 2}, {0, 1}, {1, 1}, {1, 0}, {2, 0}, {0, 1}});
  return ResidueRuleSet(std::move(d));
}

ResidueRuleSet refinement() {
  ResidueRuleSet::Description d;
  d.name = "refinement";
  d.modulus = 8;
  d.residues = all_residues(8);
  d.forbidden = {{2, false}};
  d.gaps = siladic_mod8_gaps();
  d.weights = weights_mod(2, {{2, 0}, {1, 0}});
  return ResidueRuleSet(std::move(d));
}

ResidueRuleSet siladic() {
  // lambda_i - lambda_{i+1} = g excludes these residues of lambda_i + lambda_{i+1} mod 16.
  const std::vector<std::vector<int>> excluded_sums = {
      {1, 15, 5, 11, 7, 9},  // g = 5
      {2, 14, 6, 10},        // g = 6
      {3, 13},               // g = 7
      {4, 12},               // g = 8
  };
  ResidueRuleSet::Description d;
  d.name = "siladic";
  d.modulus = 8;
  d.residues = all_residues(8);
  d.forbidden = {{2, false}};
  for (int r = 0; r < 8; ++r) {
    GapRule g;
    g.residue = r;
    for (int i = 0; i < 4; ++i) {
      const int gap = 5 + i;
      // lambda_i + lambda_{i+1} = 2 lambda_i - g, and 2 lambda_i mod 16 depends on lambda_i mod 8 only.
      const int sum = mod(2 * r - gap, 16);
      if (!contains(excluded_sums[static_cast<std::size_t>(i)], sum)) g.gaps.values.push_back(gap);
    }
    g.gaps.at_least = 9;
    d.gaps.push_back(g);
  }
  d.weights = weights_mod(1, {{0, 0}});
  return ResidueRuleSet(std::move(d));
}

ResidueRuleSet comp() {
  ResidueRuleSet::Description d;
  d.name = "comp";
  d.modulus = 8;
  d.residues = all_residues(8);
  d.forbidden = {{2, false}};
  d.gaps = {
      tail_rule(0, false, {}, 11, {5, 6, 8, 9}),
      tail_rule(1, false, {}, 5, {2}),
      tail_rule(2, false, {}, 13, {11}),
      tail_rule(3, false, {}, 7),
      tail_rule(4, false, {}, 7, {5}),
      tail_rule(5, false, {}, 8, {2, 3, 5, 6}),
      tail_rule(6, false, {}, 9, {3, 4, 6, 7}),
      tail_rule(7, false, {}, 10, {8}),
  };
  // u: parts = 0,3 mod 4, twice parts = 2 mod 8.  v: parts = 0,1 mod 4, twice parts = 6 mod 8.
  d.weights = weights_mod(8, {{1, 1}, {0, 1}, {2, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2}, {1, 0}});
  return ResidueRuleSet(std::move(d));
}

ResidueRuleSet newschur() {
  ResidueRuleSet::Description d;
  d.name = "newschur";
  d.modulus = 6;
  d.residues = all_residues(6);
  d.overlinable = {1, 5};
  d.forbidden = {{1, true}};
  for (int r : {1, 2, 3, 5}) {
    d.gaps.push_back(tail_rule(r, false, false, 4));
    d.gaps.push_back(tail_rule(r, false, true, 5));
  }
  for (int r : {0, 4}) {
    d.gaps.push_back(tail_rule(r, false, false, 5));
    d.gaps.push_back(tail_rule(r, false, true, 6));
  }
  for (int r : {1, 5}) {
    d.gaps.push_back(tail_rule(r, true, false, 6));
    d.gaps.push_back(tail_rule(r, true, true, 7));
  }
  // Non-overlined: u counts parts = 0,1 mod 3, v counts parts = 0,2 mod 3.
  // Overlined: 5 mod 6 counts twice toward u, 1 mod 6 twice toward v.
  d.weights = weights_mod(6, {{1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}});
  d.weights.entries.push_back({1, true, 0, 2});
  d.weights.entries.push_back({5, true, 2, 0});
  return ResidueRuleSet(std::move(d));
}

ResidueRuleSet distinct_odd() {
  ResidueRuleSet::Description d;
  d.name = "distinct-odd";
  d.modulus = 2;
  d.residues = {1};
  d.gaps = {tail_rule(1, false, {}, 1)};
  d.weights = WeightSpec{2, {{1, false, 1, 0}}};
  return ResidueRuleSet(std::move(d));
}

}  // namespace rules

}  // namespace siladic
