#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siladic {

/// The five colours. a2 and b2 exist only on odd integers.
enum class Color : std::uint8_t { a, b, ab, a2, b2 };

inline constexpr std::array<Color, 5> kAllColors{Color::a, Color::b, Color::ab, Color::a2, Color::b2};

enum class Parity : std::uint8_t { even, odd };

constexpr Parity parity_of(int value) noexcept { return (value % 2 != 0) ? Parity::odd : Parity::even; }

constexpr bool is_squared(Color c) noexcept { return c == Color::a2 || c == Color::b2; }

std::string_view color_name(Color c) noexcept;
Color parse_color(std::string_view s);

class invalid_colored_int : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An integer with a colour. Construction validates: value >= 1, squared colours on odd values,
/// and 1_a2 does not exist (the first a2 integer is 3).
class ColoredInt {
 public:
  ColoredInt(int value, Color color);

  int value() const noexcept { return value_; }
  Color color() const noexcept { return color_; }

  friend bool operator==(const ColoredInt&, const ColoredInt&) = default;

 private:
  int value_;
  Color color_;
};

bool is_valid_colored(int value, Color color) noexcept;

/// Position in the total order 1_ab < 1_a < 1_b2 < 1_b < 2_ab < 2_a < 3_a2 < 2_b < 3_ab < ...
///
/// The chain is periodic in blocks of eight: block j >= 1 holds
/// (2j-1)_ab, (2j-1)_a, (2j-1)_b2, (2j-1)_b, (2j)_ab, (2j)_a, (2j+1)_a2, (2j)_b.
std::int64_t rank(const ColoredInt& x) noexcept;

/// Inverse of rank().
ColoredInt from_rank(std::int64_t r);

/// Rank predecessor. Throws for 1_ab.
ColoredInt pred(const ColoredInt& x);

inline bool rank_less(const ColoredInt& x, const ColoredInt& y) noexcept { return rank(x) < rank(y); }

/// Minimal difference lambda_i - lambda_{i+1} when lambda_i has (larger_color, larger_parity) and
/// lambda_{i+1} has smaller_color. Rows (a2, even) and (b2, even) do not exist and throw.
int min_gap(Color larger_color, Parity larger_parity, Color smaller_color);

inline int min_gap(const ColoredInt& larger, const ColoredInt& smaller) {
  return min_gap(larger.color(), parity_of(larger.value()), smaller.color());
}

/// Parts 1_ab and 1_b2 never occur in counted partitions.
bool is_forbidden_part(const ColoredInt& x) noexcept;

using ColoredPartition = std::vector<ColoredInt>;

/// Gap conditions of the matrix, forbidden parts and strictly decreasing rank, parts largest first.
bool is_admissible(std::span<const ColoredInt> parts) noexcept;

struct Weights {
  int u = 0;
  int v = 0;
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Contribution of one part: a and ab count toward u, b and ab toward v, squared colours count twice.
Weights part_weights(Color c) noexcept;

Weights weights(std::span<const ColoredInt> parts) noexcept;

int total_value(std::span<const ColoredInt> parts) noexcept;

/// "<value>_<color>", e.g. "3_a2".
std::string to_string(const ColoredInt& x);
ColoredInt parse_colored_int(std::string_view s);

}  // namespace siladic
