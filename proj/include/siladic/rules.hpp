#pragma once

#include "siladic/colored.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siladic {

class rule_set_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Allowed differences: a finite set plus an optional tail "g >= at_least".
struct GapPredicate {
  std::vector<int> values;
  std::optional<int> at_least;

  bool admits(int gap) const noexcept;
  /// Smallest admitted gap.
  int minimum() const;

  friend bool operator==(const GapPredicate&, const GapPredicate&) = default;
};

struct GapRule {
  int residue = 0;
  bool overlined = false;
  /// Empty: applies whatever the successor's overline flag.
  std::optional<bool> next_overlined;
  GapPredicate gaps;

  friend bool operator==(const GapRule&, const GapRule&) = default;
};

struct Part {
  int value = 0;
  bool overlined = false;

  friend bool operator==(const Part&, const Part&) = default;
  friend auto operator<=>(const Part&, const Part&) = default;
};

struct WeightEntry {
  int residue = 0;
  bool overlined = false;
  int u = 0;
  int v = 0;

  friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

/// Contribution of each part to (u, v), keyed by the part's residue and overline flag.
struct WeightSpec {
  int modulus = 1;
  std::vector<WeightEntry> entries;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

/// Description of a family of (over)partitions: which parts exist, the allowed difference between
/// consecutive parts as a function of the larger part's residue and of both overline flags, and
/// how each part contributes to the weights (u, v).
///
/// Construction rejects descriptions that are not total: every residue that can carry a part
/// needs a gap rule for every possible successor flag, and a weight entry.
class ResidueRuleSet {
 public:
  struct Description {
    std::string name;
    int modulus = 1;
    std::vector<int> residues;     // residues of non-overlined parts
    std::vector<int> overlinable;  // residues of parts that may be overlined
    std::vector<Part> forbidden;
    std::vector<GapRule> gaps;
    WeightSpec weights;

    friend bool operator==(const Description&, const Description&) = default;
  };

  explicit ResidueRuleSet(Description d);

  const Description& description() const noexcept { return desc_; }
  const std::string& name() const noexcept { return desc_.name; }
  int modulus() const noexcept { return desc_.modulus; }

  bool allows_part(Part p) const noexcept;
  bool allows_step(Part larger, Part smaller) const noexcept;
  Weights weight(Part p) const;

  bool admits(std::span<const Part> parts) const noexcept;

  friend bool operator==(const ResidueRuleSet& x, const ResidueRuleSet& y) { return x.desc_ == y.desc_; }

 private:
  const GapPredicate* rule_for(int residue, bool overlined, bool next_overlined) const noexcept;
  const WeightEntry* weight_for(int value, bool overlined) const noexcept;

  Description desc_;
  // Index (residue * 2 + overlined) * 2 + next_overlined into desc_.gaps, -1 when absent.
  std::vector<int> gap_index_;
};

std::string to_json(const ResidueRuleSet& rules);
ResidueRuleSet rules_from_json(std::string_view text);

namespace rules {

/// Parts != 2, gaps >= 5, residue mod 8 conditions; weights of the (4,3,1) dilation.
ResidueRuleSet refdilat();
/// Residue mod 8 gap table of the (4,1,3) companion.
ResidueRuleSet comp();
/// Overpartition rules mod 6 of the (3,2,1) Schur companion.
ResidueRuleSet newschur();
/// Same conditions as refdilat; k = #odd parts + 2 #even parts, carried in u.
ResidueRuleSet refinement();
/// Unweighted; conditions built from the sum-mod-16 exclusions.
ResidueRuleSet siladic();
/// Distinct odd parts, u = number of parts.
ResidueRuleSet distinct_odd();

}  // namespace rules

}  // namespace siladic
