#pragma once

#include "siladic/colored.hpp"
#include "siladic/qseries.hpp"
#include "siladic/rules.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace siladic {

/// Called once per admissible coloured partition, parts largest first, with its size.
using ColoredVisitor = std::function<void(std::span<const ColoredInt> parts, int size)>;

/// Depth-first generation of admissible coloured partitions in decreasing rank.
///
/// The size of a part is its value under `size_map` (the identity is {1, 0, 0}); partitions with
/// total size <= max_size are visited. Every allowed part must have positive size under the map.
/// With `top`, only partitions whose largest part has rank <= rank(*top) are visited, or with
/// `exact_top` only those whose largest part is *top.
void for_each_colored_partition(int max_size, const ColoredVisitor& visit,
                                const DilationSpec& size_map = {1, 0, 0},
                                std::optional<ColoredInt> top = std::nullopt, bool exact_top = false);

/// D(u, v, n) for n <= N.
CountTable enumerate_D(Caps caps);

/// d_k: largest part at most k in the coloured order.
CountTable enumerate_dk(const ColoredInt& k, Caps caps);

/// e_k: largest part exactly k.
CountTable enumerate_ek(const ColoredInt& k, Caps caps);

/// Partitions of n into u distinct parts = r_a and v distinct parts = r_b (mod m).
CountTable enumerate_two_residue_distinct(int m, int r_a, int r_b, Caps caps);

/// (Over)partitions satisfying a residue rule set, weighted by its weight spec.
CountTable enumerate_residue_rule(const ResidueRuleSet& rules, Caps caps);

/// Both sides of a classical identity as count sequences indexed by n = 0..N.
struct ClassicalCounts {
  std::vector<BigInt> difference_side;
  std::vector<BigInt> congruence_side;
};

/// a = 0 or 1: gaps >= 2 with part 1 at most 1 - a times, against parts = +-(1 + a) mod 5.
ClassicalCounts enumerate_rr(int a, int N);

/// Gaps >= 3 with no two consecutive multiples of 3, against distinct parts = 1, 2 mod 3.
ClassicalCounts enumerate_schur(int N);

}  // namespace siladic
