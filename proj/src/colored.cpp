#include "siladic/colored.hpp"

#include <charconv>

namespace siladic {

namespace {

// Row order: a_odd, b2, b_odd, ab_even, a_even, a2, b_even, ab_odd.
// Column order: a, b, ab, a2, b2.
constexpr int kGap[8][5] = {
    {2, 2, 1, 2, 2},  // a odd
    {2, 3, 2, 2, 4},  // b2
    {1, 2, 1, 2, 2},  // b odd
    {2, 2, 2, 3, 3},  // ab even
    {2, 2, 2, 3, 3},  // a even
    {3, 3, 3, 4, 4},  // a2
    {1, 2, 1, 1, 3},  // b even
    {2, 3, 2, 2, 3},  // ab odd
};

int gap_row(Color c, Parity p) {
  const bool odd = p == Parity::odd;
  switch (c) {
    case Color::a:
      return odd ? 0 : 4;
    case Color::b:
      return odd ? 2 : 6;
    case Color::ab:
      return odd ? 7 : 3;
    case Color::a2:
      if (!odd) throw std::invalid_argument("min_gap: no row for even a2");
      return 5;
    case Color::b2:
      if (!odd) throw std::invalid_argument("min_gap: no row for even b2");
      return 1;
  }
  throw std::invalid_argument("min_gap: bad colour");
}

int gap_col(Color c) noexcept {
  switch (c) {
    case Color::a:
      return 0;
    case Color::b:
      return 1;
    case Color::ab:
      return 2;
    case Color::a2:
      return 3;
    case Color::b2:
      return 4;
  }
  return 0;
}

}  // namespace

std::string_view color_name(Color c) noexcept {
  switch (c) {
    case Color::a:
      return "a";
    case Color::b:
      return "b";
    case Color::ab:
      return "ab";
    case Color::a2:
      return "a2";
    case Color::b2:
      return "b2";
  }
  return "?";
}

Color parse_color(std::string_view s) {
  for (Color c : kAllColors) {
    if (color_name(c) == s) return c;
  }
  throw invalid_colored_int("unknown colour '" + std::string(s) + "'");
}

bool is_valid_colored(int value, Color color) noexcept {
  if (value < 1) return false;
  if (is_squared(color) && value % 2 == 0) return false;
  if (color == Color::a2 && value == 1) return false;
  return true;
}

ColoredInt::ColoredInt(int value, Color color) : value_(value), color_(color) {
  if (!is_valid_colored(value, color)) {
    throw invalid_colored_int("invalid coloured integer " + std::to_string(value) + "_" +
                              std::string(color_name(color)));
  }
}

std::int64_t rank(const ColoredInt& x) noexcept {
  const std::int64_t v = x.value();
  if (x.color() == Color::a2) {
    // (2j+1)_a2 sits at position 6 of block j.
    const std::int64_t j = (v - 1) / 2;
    return 8 * (j - 1) + 6;
  }
  if (v % 2 != 0) {
    const std::int64_t j = (v + 1) / 2;
    const std::int64_t base = 8 * (j - 1);
    switch (x.color()) {
      case Color::ab:
        return base;
      case Color::a:
        return base + 1;
      case Color::b2:
        return base + 2;
      default:
        return base + 3;
    }
  }
  const std::int64_t j = v / 2;
  const std::int64_t base = 8 * (j - 1);
  switch (x.color()) {
    case Color::ab:
      return base + 4;
    case Color::a:
      return base + 5;
    default:
      return base + 7;
  }
}

ColoredInt from_rank(std::int64_t r) {
  if (r < 0) throw std::out_of_range("from_rank: negative rank");
  const int j = static_cast<int>(r / 8) + 1;
  switch (r % 8) {
    case 0:
      return {2 * j - 1, Color::ab};
    case 1:
      return {2 * j - 1, Color::a};
    case 2:
      return {2 * j - 1, Color::b2};
    case 3:
      return {2 * j - 1, Color::b};
    case 4:
      return {2 * j, Color::ab};
    case 5:
      return {2 * j, Color::a};
    case 6:
      return {2 * j + 1, Color::a2};
    default:
      return {2 * j, Color::b};
  }
}

ColoredInt pred(const ColoredInt& x) {
  const auto r = rank(x);
  if (r == 0) throw std::out_of_range("pred: 1_ab has no predecessor");
  return from_rank(r - 1);
}

int min_gap(Color larger_color, Parity larger_parity, Color smaller_color) {
  return kGap[gap_row(larger_color, larger_parity)][gap_col(smaller_color)];
}

bool is_forbidden_part(const ColoredInt& x) noexcept {
  return x.value() == 1 && (x.color() == Color::ab || x.color() == Color::b2);
}

bool is_admissible(std::span<const ColoredInt> parts) noexcept {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (!is_valid_colored(p.value(), p.color()) || is_forbidden_part(p)) return false;
    if (i + 1 < parts.size()) {
      const auto& next = parts[i + 1];
      if (!is_valid_colored(next.value(), next.color())) return false;
      if (rank(next) >= rank(p)) return false;
      if (p.value() - next.value() < min_gap(p, next)) return false;
    }
  }
  return true;
}

Weights part_weights(Color c) noexcept {
  switch (c) {
    case Color::a:
      return {1, 0};
    case Color::b:
      return {0, 1};
    case Color::ab:
      return {1, 1};
    case Color::a2:
      return {2, 0};
    case Color::b2:
      return {0, 2};
  }
  return {};
}

Weights weights(std::span<const ColoredInt> parts) noexcept {
  Weights w;
  for (const auto& p : parts) {
    const auto d = part_weights(p.color());
    w.u += d.u;
    w.v += d.v;
  }
  return w;
}

int total_value(std::span<const ColoredInt> parts) noexcept {
  int n = 0;
  for (const auto& p : parts) n += p.value();
  return n;
}

std::string to_string(const ColoredInt& x) {
  return std::to_string(x.value()) + "_" + std::string(color_name(x.color()));
}

ColoredInt parse_colored_int(std::string_view s) {
  const auto us = s.find('_');
  if (us == std::string_view::npos || us == 0) {
    throw invalid_colored_int("expected <value>_<colour>, got '" + std::string(s) + "'");
  }
  int value = 0;
  const auto digits = s.substr(0, us);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw invalid_colored_int("bad value in '" + std::string(s) + "'");
  }
  return {value, parse_color(s.substr(us + 1))};
}

}  // namespace siladic
