#pragma once

#include "siladic/colored.hpp"
#include "siladic/qseries.hpp"
#include "siladic/report.hpp"
#include "siladic/rules.hpp"

#include <span>
#include <string>
#include <vector>

namespace siladic {

namespace dilations {
inline constexpr DilationSpec kSiladic{4, 3, 1};
inline constexpr DilationSpec kCompanion{4, 1, 3};
inline constexpr DilationSpec kSchur{3, 2, 1};
}  // namespace dilations

/// Amount subtracted from M * value for a colour: m_a, m_b, m_a + m_b, 2 m_a, 2 m_b.
int color_offset(Color c, const DilationSpec& d) noexcept;

/// M * value - offset(colour).
int dilated_value(const ColoredInt& x, const DilationSpec& d) noexcept;

/// Whether squared colours land on integers that another colour also reaches, so that they must be
/// marked (overlined) to keep the map injective.
bool overlines_squared(const DilationSpec& d) noexcept;

struct DilatedPart {
  int value = 0;
  bool overlined = false;
  Color color = Color::a;

  friend bool operator==(const DilatedPart&, const DilatedPart&) = default;
};

/// Image of an admissible coloured partition, sorted by decreasing value. Throws
/// std::invalid_argument for inadmissible input or a non-positive image.
std::vector<DilatedPart> dilate_partition(std::span<const ColoredInt> parts, const DilationSpec& d);

std::vector<Part> plain_parts(std::span<const DilatedPart> parts);

/// How the (u, v) of a coloured partition is read off on the dilated side.
enum class WeightReading {
  same,     // (u, v)
  sum,      // (u + v, 0)
  ignored,  // (0, 0)
};

/// A dilated theorem: a residue rule set (the difference side), the dilation carrying coloured
/// partitions onto it, and the product side as distinct parts in two residue classes mod m.
struct DilatedTheorem {
  std::string name;
  DilationSpec spec;
  ResidueRuleSet rules;
  int modulus = 1;
  int residue_a = 0;
  int residue_b = 0;
  WeightReading reading = WeightReading::same;
};

/// Known names: refdilat, comp, newschur, refinement, siladic.
DilatedTheorem dilated_theorem(const std::string& name);
/// The same theorem checked against another rule set, e.g. one loaded from a fixture.
DilatedTheorem with_rules(DilatedTheorem t, ResidueRuleSet rules);
const std::vector<std::string>& dilated_theorem_names();

/// Product side, difference side, and coloured partitions carried over by dilate_partition, all for n <= N.
/// Reports: C-vs-D, D-vs-image, weights (rule weights vs coloured weights on every image),
/// injective, and for refinement and siladic a second product-side oracle.
std::vector<ReplayReport> verify_dilated_theorem(const DilatedTheorem& t, int N);

/// rr0, rr1, schur, schur-product.
ReplayReport verify_classical(const std::string& which, int N);
const std::vector<std::string>& classical_names();

/// Image >= preimage for every allowed coloured part of value <= max_value.
ReplayReport verify_horizon_soundness(const DilationSpec& d, int max_value);

}  // namespace siladic
