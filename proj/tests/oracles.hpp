#pragma once

// Brute-force references for the tests. They share no code with the library's search: the gap
// matrix is typed in again here and the colour order is taken from the (4,3,1) images, which form
// the natural order of the integers.

#include "siladic/colored.hpp"
#include "siladic/qseries.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

struct CInt {
  int value;
  int color;  // 0 a, 1 b, 2 ab, 3 a2, 4 b2
};

inline int image431(const CInt& x) {
  static const int offset[5] = {3, 1, 4, 6, 2};
  return 4 * x.value - offset[x.color];
}

// Rows: a_odd, b2, b_odd, ab_even, a_even, a2, b_even, ab_odd. Columns: a, b, ab, a2, b2.
inline int gap(const CInt& larger, const CInt& smaller) {
  static const int A[8][5] = {
      {2, 2, 1, 2, 2}, {2, 3, 2, 2, 4}, {1, 2, 1, 2, 2}, {2, 2, 2, 3, 3},
      {2, 2, 2, 3, 3}, {3, 3, 3, 4, 4}, {1, 2, 1, 1, 3}, {2, 3, 2, 2, 3},
  };
  const bool odd = larger.value % 2 != 0;
  int row = 0;
  switch (larger.color) {
    case 0:
      row = odd ? 0 : 4;
      break;
    case 1:
      row = odd ? 2 : 6;
      break;
    case 2:
      row = odd ? 7 : 3;
      break;
    case 3:
      row = 5;
      break;
    case 4:
      row = 1;
      break;
  }
  return A[row][smaller.color];
}

inline std::vector<CInt> allowed_parts(int max_value) {
  std::vector<CInt> out;
  for (int v = 1; v <= max_value; ++v) {
    for (int c = 0; c < 5; ++c) {
      if ((c == 3 || c == 4) && v % 2 == 0) continue;
      if (c == 3 && v == 1) continue;
      if (v == 1 && (c == 2 || c == 4)) continue;  // forbidden parts
      out.push_back({v, c});
    }
  }
  return out;
}

inline bool admissible(std::vector<CInt> parts) {
  std::sort(parts.begin(), parts.end(), [](const CInt& x, const CInt& y) { return image431(x) > image431(y); });
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i].value - parts[i + 1].value < gap(parts[i], parts[i + 1])) return false;
  }
  return true;
}

/// Visits every set of allowed coloured integers with total value <= N, admissible or not.
inline void for_each_subset(int N, const std::function<void(const std::vector<CInt>&, int)>& visit) {
  const auto parts = allowed_parts(N);
  std::vector<CInt> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i == parts.size()) {
      visit(chosen, sum);
      return;
    }
    rec(i + 1, sum);
    if (sum + parts[i].value <= N) {
      chosen.push_back(parts[i]);
      rec(i + 1, sum + parts[i].value);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

using Table = std::map<std::tuple<int, int, int>, long long>;

/// Admissible coloured partitions with largest part of (4,3,1) image <= top_image (or any), by (u, v, n).
inline Table colored_counts(int N, int top_image = 1 << 30, bool exact = false) {
  Table t;
  for_each_subset(N, [&](const std::vector<CInt>& ps, int n) {
    if (!admissible(ps)) return;
    int top = -1;
    int u = 0, v = 0;
    for (const auto& p : ps) {
      top = std::max(top, image431(p));
      if (p.color == 0 || p.color == 2) ++u;
      if (p.color == 1 || p.color == 2) ++v;
      if (p.color == 3) u += 2;
      if (p.color == 4) v += 2;
    }
    if (exact ? top != top_image : top > top_image) return;
    ++t[{u, v, n}];
  });
  return t;
}

/// Pairs (A, B) of sets of positive integers with u = |A|, v = |B|, n = sum.
inline Table two_distinct_sets(int N) {
  Table t;
  std::function<void(int, int, int, int)> rec = [&](int next, int u, int v, int n) {
    if (next > N) {
      ++t[{u, v, n}];
      return;
    }
    rec(next + 1, u, v, n);
    if (n + next <= N) rec(next + 1, u + 1, v, n + next);
    if (n + next <= N) rec(next + 1, u, v + 1, n + next);
    if (n + 2 * next <= N) rec(next + 1, u + 1, v + 1, n + 2 * next);
  };
  rec(1, 0, 0, 0);
  return t;
}

/// All partitions of n as non-increasing sequences.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      visit(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

inline long long count_partitions(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  long long c = 0;
  for_each_partition(n, [&](const std::vector<int>& p) {
    if (keep(p)) ++c;
  });
  return c;
}

inline long long table_at(const Table& t, int u, int v, int n) {
  const auto it = t.find({u, v, n});
  return it == t.end() ? 0 : it->second;
}

}  // namespace oracle
