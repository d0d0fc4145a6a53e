#include "siladic/enumerator.hpp"

#include "siladic/dilation.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace siladic {

namespace {

// Counts accumulate as machine integers during the search: each visited partition adds one, so a
// count can never exceed the number of search steps taken.
class DenseCounts {
 public:
  explicit DenseCounts(Caps caps)
      : caps_(caps), cells_(static_cast<std::size_t>(caps.U + 1) * (caps.V + 1) * (caps.N + 1), 0) {}

  void add(int u, int v, int n) {
    if (u > caps_.U || v > caps_.V || n > caps_.N) return;
    ++cells_[(static_cast<std::size_t>(u) * (caps_.V + 1) + v) * (caps_.N + 1) + n];
  }

  CountTable table() const {
    CountTable t(caps_);
    std::size_t i = 0;
    for (int u = 0; u <= caps_.U; ++u) {
      for (int v = 0; v <= caps_.V; ++v) {
        for (int n = 0; n <= caps_.N; ++n, ++i) {
          if (cells_[i]) t.add(u, v, n, BigInt(cells_[i]));
        }
      }
    }
    return t;
  }

 private:
  Caps caps_;
  std::vector<std::uint64_t> cells_;
};

class ColoredSearch {
 public:
  ColoredSearch(int max_size, const DilationSpec& size_map) : max_size_(max_size) {
    if (size_map.M < 1) throw std::invalid_argument("size map needs M >= 1");
    for (int v = 1;; ++v) {
      bool any_small = false;
      for (Color c : kAllColors) {
        if (!is_valid_colored(v, c)) continue;
        const ColoredInt x(v, c);
        const int s = dilated_value(x, size_map);
        if (s <= max_size) any_small = true;
        if (is_forbidden_part(x)) continue;
        if (s < 1) {
          throw std::invalid_argument("part " + to_string(x) + " has non-positive size under " + to_string(size_map));
        }
        if (s <= max_size) parts_.push_back({x, s});
      }
      // Sizes grow by M >= 1 per unit of value, so nothing further can fit.
      if (!any_small && v > 2) break;
    }
    std::sort(parts_.begin(), parts_.end(), [](const Entry& x, const Entry& y) { return rank(x.part) < rank(y.part); });
    top_by_size_.assign(static_cast<std::size_t>(std::max(max_size, 0)) + 1, -1);
    for (int r = 0; r <= max_size; ++r) {
      for (int j = static_cast<int>(parts_.size()) - 1; j >= 0; --j) {
        if (parts_[static_cast<std::size_t>(j)].size <= r) {
          top_by_size_[static_cast<std::size_t>(r)] = j;
          break;
        }
      }
    }
  }

  /// Highest candidate index whose rank is <= rank(bound).
  int index_at_most(const ColoredInt& bound) const {
    int best = -1;
    for (int j = 0; j < static_cast<int>(parts_.size()); ++j) {
      if (rank(parts_[static_cast<std::size_t>(j)].part) <= rank(bound)) best = j;
    }
    return best;
  }

  std::optional<int> index_of(const ColoredInt& x) const {
    for (int j = 0; j < static_cast<int>(parts_.size()); ++j) {
      if (parts_[static_cast<std::size_t>(j)].part == x) return j;
    }
    return std::nullopt;
  }

  template <class F>
  void run_below(int start_index, F&& visit) {
    stack_.clear();
    visit(std::span<const ColoredInt>(stack_), 0);
    children(start_index + 1, std::nullopt, max_size_, 0, visit);
  }

  template <class F>
  void run_exact(int index, F&& visit) {
    stack_.clear();
    const auto& e = parts_[static_cast<std::size_t>(index)];
    stack_.push_back(e.part);
    visit(std::span<const ColoredInt>(stack_), e.size);
    children(index, e.part, max_size_ - e.size, e.size, visit);
    stack_.pop_back();
  }

 private:
  struct Entry {
    ColoredInt part;
    int size;
  };

  // Extends the stack with parts of index < limit_index.
  template <class F>
  void children(int limit_index, std::optional<ColoredInt> prev, int remaining, int used, F& visit) {
    if (remaining <= 0) return;
    const int start = std::min(limit_index - 1, top_by_size_[static_cast<std::size_t>(remaining)]);
    for (int j = start; j >= 0; --j) {
      const auto& e = parts_[static_cast<std::size_t>(j)];
      if (e.size > remaining) continue;
      if (prev && prev->value() - e.part.value() < min_gap(*prev, e.part)) continue;
      stack_.push_back(e.part);
      visit(std::span<const ColoredInt>(stack_), used + e.size);
      children(j, e.part, remaining - e.size, used + e.size, visit);
      stack_.pop_back();
    }
  }

  int max_size_;
  std::vector<Entry> parts_;
  std::vector<int> top_by_size_;
  std::vector<ColoredInt> stack_;
};

template <class F>
void colored_search(int max_size, const DilationSpec& size_map, std::optional<ColoredInt> top, bool exact_top,
                    F&& visit) {
  if (max_size < 0) return;
  ColoredSearch search(max_size, size_map);
  if (!top) {
    search.run_below(std::numeric_limits<int>::max() - 1, visit);
    return;
  }
  if (exact_top) {
    // e_k is zero throughout when k is forbidden or too large to fit.
    if (const auto idx = search.index_of(*top)) search.run_exact(*idx, visit);
    return;
  }
  search.run_below(search.index_at_most(*top), visit);
}

CountTable count_colored(Caps caps, std::optional<ColoredInt> top, bool exact_top) {
  DenseCounts counts(caps);
  colored_search(caps.N, DilationSpec{1, 0, 0}, top, exact_top, [&](std::span<const ColoredInt> parts, int n) {
    const auto w = weights(parts);
    counts.add(w.u, w.v, n);
  });
  return counts.table();
}

// Parts sorted by increasing value; a search extends a partition with strictly smaller parts.
template <class Step, class F>
void distinct_search(const std::vector<Part>& parts, int N, Step&& step_ok, F&& visit) {
  std::vector<int> top(static_cast<std::size_t>(N) + 1, -1);
  for (int r = 0; r <= N; ++r) {
    for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j) {
      if (parts[static_cast<std::size_t>(j)].value <= r) {
        top[static_cast<std::size_t>(r)] = j;
        break;
      }
    }
  }
  std::vector<Part> stack;
  visit(std::span<const Part>(stack), 0);
  auto rec = [&](auto&& self, int limit, int remaining, int used) -> void {
    if (remaining <= 0) return;
    const int start = std::min(limit - 1, top[static_cast<std::size_t>(remaining)]);
    for (int j = start; j >= 0; --j) {
      const Part& p = parts[static_cast<std::size_t>(j)];
      if (!stack.empty() && (p.value >= stack.back().value || !step_ok(stack.back(), p))) continue;
      stack.push_back(p);
      visit(std::span<const Part>(stack), used + p.value);
      self(self, j, remaining - p.value, used + p.value);
      stack.pop_back();
    }
  };
  rec(rec, static_cast<int>(parts.size()), N, 0);
}

std::vector<BigInt> partitions_into(const std::vector<int>& allowed, int N) {
  std::vector<BigInt> ways(static_cast<std::size_t>(N) + 1, 0);
  ways[0] = 1;
  for (int p : allowed) {
    for (int n = p; n <= N; ++n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - p)];
  }
  return ways;
}

std::vector<BigInt> distinct_partitions_into(const std::vector<int>& allowed, int N) {
  std::vector<BigInt> ways(static_cast<std::size_t>(N) + 1, 0);
  ways[0] = 1;
  for (int p : allowed) {
    for (int n = N; n >= p; --n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - p)];
  }
  return ways;
}

}  // namespace

void for_each_colored_partition(int max_size, const ColoredVisitor& visit, const DilationSpec& size_map,
                                std::optional<ColoredInt> top, bool exact_top) {
  colored_search(max_size, size_map, top, exact_top, visit);
}

CountTable enumerate_D(Caps caps) { return count_colored(caps, std::nullopt, false); }

CountTable enumerate_dk(const ColoredInt& k, Caps caps) { return count_colored(caps, k, false); }

CountTable enumerate_ek(const ColoredInt& k, Caps caps) { return count_colored(caps, k, true); }

CountTable enumerate_two_residue_distinct(int m, int r_a, int r_b, Caps caps) {
  if (m < 1 || r_a < 0 || r_b < 0 || r_a >= m || r_b >= m) throw std::invalid_argument("residues must lie in [0, m)");
  if (r_a == r_b) throw std::invalid_argument("the two residue classes must differ");
  std::vector<Part> parts;
  for (int x = 1; x <= caps.N; ++x) {
    if (x % m == r_a || x % m == r_b) parts.push_back({x, false});
  }
  DenseCounts counts(caps);
  distinct_search(parts, caps.N, [](Part, Part) { return true; }, [&](std::span<const Part> ps, int n) {
    int u = 0, v = 0;
    for (const auto& p : ps) (p.value % m == r_a ? u : v) += 1;
    counts.add(u, v, n);
  });
  return counts.table();
}

CountTable enumerate_residue_rule(const ResidueRuleSet& rules, Caps caps) {
  std::vector<Part> parts;
  for (int x = 1; x <= caps.N; ++x) {
    for (bool over : {false, true}) {
      if (rules.allows_part({x, over})) parts.push_back({x, over});
    }
  }
  DenseCounts counts(caps);
  distinct_search(
      parts, caps.N, [&](Part larger, Part smaller) { return rules.allows_step(larger, smaller); },
      [&](std::span<const Part> ps, int n) {
        Weights w;
        for (const auto& p : ps) {
          const auto d = rules.weight(p);
          w.u += d.u;
          w.v += d.v;
        }
        counts.add(w.u, w.v, n);
      });
  return counts.table();
}

ClassicalCounts enumerate_rr(int a, int N) {
  if (a != 0 && a != 1) throw std::invalid_argument("enumerate_rr: a must be 0 or 1");
  ClassicalCounts out;
  out.difference_side.assign(static_cast<std::size_t>(N) + 1, 0);
  std::vector<Part> parts;
  for (int x = (a == 1 ? 2 : 1); x <= N; ++x) parts.push_back({x, false});
  distinct_search(parts, N, [](Part l, Part s) { return l.value - s.value >= 2; },
                  [&](std::span<const Part>, int n) { out.difference_side[static_cast<std::size_t>(n)] += 1; });
  std::vector<int> allowed;
  for (int x = 1; x <= N; ++x) {
    const int r = x % 5;
    if (r == 1 + a || r == 4 - a) allowed.push_back(x);
  }
  out.congruence_side = partitions_into(allowed, N);
  return out;
}

ClassicalCounts enumerate_schur(int N) {
  ClassicalCounts out;
  out.difference_side.assign(static_cast<std::size_t>(N) + 1, 0);
  std::vector<Part> parts;
  for (int x = 1; x <= N; ++x) parts.push_back({x, false});
  distinct_search(
      parts, N,
      [](Part l, Part s) {
        const int g = l.value - s.value;
        if (g < 3) return false;
        return !(g == 3 && l.value % 3 == 0);
      },
      [&](std::span<const Part>, int n) { out.difference_side[static_cast<std::size_t>(n)] += 1; });
  std::vector<int> allowed;
  for (int x = 1; x <= N; ++x) {
    if (x % 3 != 0) allowed.push_back(x);
  }
  out.congruence_side = distinct_partitions_into(allowed, N);
  return out;
}

}  // namespace siladic
