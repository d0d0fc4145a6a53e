#include "siladic/dilation.hpp"

#include "siladic/enumerator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace siladic {

int color_offset(Color c, const DilationSpec& d) noexcept {
  switch (c) {
    case Color::a:
      return d.m_a;
    case Color::b:
      return d.m_b;
    case Color::ab:
      return d.m_a + d.m_b;
    case Color::a2:
      return 2 * d.m_a;
    case Color::b2:
      return 2 * d.m_b;
  }
  return 0;
}

int dilated_value(const ColoredInt& x, const DilationSpec& d) noexcept {
  return d.M * x.value() - color_offset(x.color(), d);
}

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

bool overlines_squared(const DilationSpec& d) noexcept {
  if (d.M < 1) return false;
  // A squared colour reaches M(2j+1) - 2m, i.e. the class M - 2m mod 2M; a plain colour reaches the
  // whole class -offset mod M.
  for (Color sq : {Color::a2, Color::b2}) {
    for (Color c : {Color::a, Color::b, Color::ab}) {
      if (mod(color_offset(sq, d) - color_offset(c, d), d.M) == 0) return true;
    }
  }
  return mod(color_offset(Color::a2, d) - color_offset(Color::b2, d), 2 * d.M) == 0;
}

std::vector<DilatedPart> dilate_partition(std::span<const ColoredInt> parts, const DilationSpec& d) {
  if (!is_admissible(parts)) throw std::invalid_argument("dilate_partition: inadmissible coloured partition");
  const bool overline = overlines_squared(d);
  std::vector<DilatedPart> out;
  out.reserve(parts.size());
  for (const auto& x : parts) {
    const int v = dilated_value(x, d);
    if (v < 1) {
      throw std::invalid_argument("dilate_partition: " + to_string(x) + " maps to " + std::to_string(v) + " under " +
                                  to_string(d));
    }
    out.push_back({v, overline && is_squared(x.color()), x.color()});
  }
  std::sort(out.begin(), out.end(), [](const DilatedPart& x, const DilatedPart& y) {
    return std::tie(x.value, x.overlined) > std::tie(y.value, y.overlined);
  });
  return out;
}

std::vector<Part> plain_parts(std::span<const DilatedPart> parts) {
  std::vector<Part> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back({p.value, p.overlined});
  return out;
}

DilatedTheorem dilated_theorem(const std::string& name) {
  if (name == "refdilat") return {name, dilations::kSiladic, rules::refdilat(), 4, 1, 3, WeightReading::same};
  if (name == "comp") return {name, dilations::kCompanion, rules::comp(), 4, 3, 1, WeightReading::same};
  if (name == "newschur") return {name, dilations::kSchur, rules::newschur(), 3, 1, 2, WeightReading::same};
  if (name == "refinement") return {name, dilations::kSiladic, rules::refinement(), 4, 1, 3, WeightReading::sum};
  if (name == "siladic") return {name, dilations::kSiladic, rules::siladic(), 4, 1, 3, WeightReading::ignored};
  throw std::invalid_argument("unknown dilated theorem: " + name);
}

DilatedTheorem with_rules(DilatedTheorem t, ResidueRuleSet rules) {
  t.rules = std::move(rules);
  return t;
}

const std::vector<std::string>& dilated_theorem_names() {
  static const std::vector<std::string> names = {"refdilat", "comp", "newschur", "refinement", "siladic"};
  return names;
}

namespace {

Weights read_weights(Weights w, WeightReading r) {
  switch (r) {
    case WeightReading::same:
      return w;
    case WeightReading::sum:
      return {w.u + w.v, 0};
    case WeightReading::ignored:
      return {0, 0};
  }
  return w;
}

Caps read_caps(Caps c, WeightReading r) {
  switch (r) {
    case WeightReading::same:
      return c;
    case WeightReading::sum:
      return {c.U + c.V, 0, c.N};
    case WeightReading::ignored:
      return {0, 0, c.N};
  }
  return c;
}

CountTable reweigh(const CountTable& t, WeightReading r) {
  CountTable out(read_caps(t.caps(), r));
  for (const auto& [e, c] : t.entries()) {
    const auto w = read_weights({e.u, e.v}, r);
    out.add(w.u, w.v, e.n, c);
  }
  return out;
}

}  // namespace

std::vector<ReplayReport> verify_dilated_theorem(const DilatedTheorem& t, int N) {
  const Caps base{N, N, N};
  const Caps caps = read_caps(base, t.reading);
  std::vector<ReplayReport> out;

  const CountTable c_side =
      reweigh(enumerate_two_residue_distinct(t.modulus, t.residue_a, t.residue_b, base), t.reading);
  const CountTable d_side = enumerate_residue_rule(t.rules, caps);
  out.push_back(compare_counts(t.name + "/C-vs-D", "", c_side, d_side));

  if (t.reading != WeightReading::same) {
    // Distinct odd parts counted by number of parts: the classical product side.
    const CountTable odd = reweigh(enumerate_residue_rule(rules::distinct_odd(), {N, 0, N}),
                                   t.reading == WeightReading::sum ? WeightReading::same : WeightReading::ignored);
    CountTable odd_in_caps(caps);
    for (const auto& [e, c] : odd.entries()) odd_in_caps.add(e.u, e.v, e.n, c);
    out.push_back(compare_counts(t.name + "/C-vs-distinct-odd", "", c_side, odd_in_caps));
  }

  CountTable image_by_rules(caps);
  CountTable image_by_colors(caps);
  std::map<std::vector<Part>, int> seen;
  std::optional<Witness> duplicate;
  std::optional<Witness> rejected;
  for_each_colored_partition(
      N,
      [&](std::span<const ColoredInt> parts, int size) {
        const auto image = plain_parts(dilate_partition(parts, t.spec));
        const auto cw = read_weights(weights(parts), t.reading);
        image_by_colors.add(cw.u, cw.v, size, 1);
        if (!t.rules.admits(image)) {
          if (!rejected) rejected = Witness{cw.u, cw.v, size, 0, 1};
          return;
        }
        Weights rw;
        for (const auto& p : image) {
          const auto w = t.rules.weight(p);
          rw.u += w.u;
          rw.v += w.v;
        }
        image_by_rules.add(rw.u, rw.v, size, 1);
        if (++seen[image] == 2 && !duplicate) duplicate = Witness{rw.u, rw.v, size, 2, 1};
      },
      t.spec);

  auto d_vs_image = compare_counts(t.name + "/D-vs-image", "", d_side, image_by_rules);
  if (rejected) {
    d_vs_image.note = "some image fails the rule set, first at (" + std::to_string(rejected->u) + "," +
                      std::to_string(rejected->v) + "," + std::to_string(rejected->n) + ")";
  }
  out.push_back(std::move(d_vs_image));
  out.push_back(compare_counts(t.name + "/weights", "", image_by_rules, image_by_colors));
  if (duplicate) {
    out.push_back(make_fail(t.name + "/injective", "", caps, N, *duplicate, "two partitions share an image"));
  } else {
    out.push_back(make_pass(t.name + "/injective", "", caps, N));
  }
  return out;
}

namespace {

ReplayReport compare_sequences(const std::string& id, const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  const int N = static_cast<int>(lhs.size()) - 1;
  CountTable l({0, 0, N});
  CountTable r({0, 0, N});
  for (int n = 0; n <= N; ++n) {
    l.add(0, 0, n, lhs[static_cast<std::size_t>(n)]);
    r.add(0, 0, n, rhs[static_cast<std::size_t>(n)]);
  }
  return compare_counts(id, "", l, r);
}

}  // namespace

ReplayReport verify_classical(const std::string& which, int N) {
  if (which == "rr0" || which == "rr1") {
    const auto c = enumerate_rr(which == "rr0" ? 0 : 1, N);
    return compare_sequences(which, c.difference_side, c.congruence_side);
  }
  if (which == "schur") {
    const auto c = enumerate_schur(N);
    return compare_sequences(which, c.difference_side, c.congruence_side);
  }
  if (which == "schur-product") {
    // Every dilated part is at least its preimage, so nothing beyond q^N lands at or below q^N.
    const auto dilated =
        dilate(enumerate_D({N, N, N}).to_series(), dilations::kSchur, DilationHorizon::nondecreasing_support);
    const auto product = progression_product(3, 1, 2, dilated.caps());
    return compare_series(which, "", dilated, product, N);
  }
  throw std::invalid_argument("unknown classical identity: " + which);
}

const std::vector<std::string>& classical_names() {
  static const std::vector<std::string> names = {"rr0", "rr1", "schur", "schur-product"};
  return names;
}

ReplayReport verify_horizon_soundness(const DilationSpec& d, int max_value) {
  const std::string id = "horizon/" + to_string(d);
  const Caps caps{0, 0, max_value};
  for (int v = 1; v <= max_value; ++v) {
    for (Color c : kAllColors) {
      if (!is_valid_colored(v, c)) continue;
      const ColoredInt x(v, c);
      if (is_forbidden_part(x)) continue;
      const int image = dilated_value(x, d);
      if (image < v) return make_fail(id, "", caps, max_value, Witness{0, 0, v, image, v}, to_string(x));
    }
  }
  return make_pass(id, "", caps, max_value);
}

}  // namespace siladic
