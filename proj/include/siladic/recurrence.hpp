#pragma once

#include "siladic/colored.hpp"
#include "siladic/qseries.hpp"
#include "siladic/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace siladic {

/// Enumerated d_k and e_k tables, computed on first use and cached. This is the oracle side of
/// every replay: nothing here depends on the recurrences.
class Census {
 public:
  explicit Census(Caps caps);

  const Caps& caps() const noexcept { return caps_; }

  const CountTable& at_most_table(const ColoredInt& k);
  const CountTable& exactly_table(const ColoredInt& k);
  const TriSeries& at_most(const ColoredInt& k);
  const TriSeries& exactly(const ColoredInt& k);

 private:
  struct Entry {
    CountTable table;
    TriSeries series;
  };
  Caps caps_;
  std::map<std::int64_t, Entry> at_most_;
  std::map<std::int64_t, Entry> exactly_;
};

/// One of the eight hand-entered base series, for rank(k) < 8.
TriSeries initial_series(const ColoredInt& k, Caps caps);

/// G_k for every rank from 0 up to the top, the first eight entered by hand and every later one
/// produced by the q-difference equation matching its position in the block.
class GLadder {
 public:
  static GLadder build(const ColoredInt& k_max, Caps caps);

  const Caps& caps() const noexcept { return caps_; }
  bool contains(const ColoredInt& k) const noexcept;
  /// Throws std::out_of_range when k lies above the top.
  const TriSeries& at(const ColoredInt& k) const;
  ColoredInt top() const;
  std::size_t size() const noexcept { return series_.size(); }

  /// Builds further entries until k is contained.
  void extend_to(const ColoredInt& k);

 private:
  explicit GLadder(Caps caps) : caps_(caps) {}

  Caps caps_;
  std::vector<TriSeries> series_;
};

// Identities are written once as data and replayed against any source of series.

enum class Family { at_most, exactly };

/// coeff * a^du b^dv q^dn * [(1 + aq) *] F_index, F is G (at_most) or the e-series (exactly), optionally
/// after the substitution (a, b) -> (b, aq). The monomial is applied after the substitution.
struct Term {
  int value = 1;
  Color color = Color::ab;
  Family family = Family::at_most;
  BigInt coeff = 1;
  int du = 0;
  int dv = 0;
  int dn = 0;
  bool swapped = false;
  bool times_one_plus_aq = false;
};

struct Identity {
  std::string id;
  int k = 0;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
};

/// Resolves a (valid) index to a series. Families a source cannot supply may throw.
using SeriesLookup = std::function<const TriSeries&(const ColoredInt&, Family)>;

SeriesLookup lookup(Census& census);
SeriesLookup lookup(const GLadder& ladder);

/// True when every index referenced by the identity is a valid coloured integer.
bool is_instantiable(const Identity& identity) noexcept;

/// Sum of the terms. Swapped terms need U == V. Throws std::invalid_argument on an invalid index.
TriSeries evaluate(const std::vector<Term>& side, const SeriesLookup& source, Caps caps);

/// nullopt when an index is invalid at this k (the identity only applies from some k on).
std::optional<ReplayReport> check_identity(const Identity& identity, const SeriesLookup& source, Caps caps);

/// The eight q-difference equations at k, ordered by the block position of their left side.
std::vector<Identity> qdiff_identities(int k);
/// Count recurrences for d_k, the split d_k = d_pred(k) + e_k and the largest-part removals.
std::vector<Identity> eqd_identities(int k);
std::vector<Identity> keyprop_identities(int k);
/// Series identities used in the induction step.
std::vector<Identity> proof_step_series_identities(int k);
/// Count identities on d and e tables used for the last case of the induction step, excluding the two
/// whose q-offset is ambiguous (see offset_candidates).
std::vector<Identity> proof_step_count_identities(int k);

/// The two identities involving e_{2k_a}(u-2, v, n-X), instantiated with offset X.
std::vector<Identity> offset_candidates(int k, int offset);

std::vector<ReplayReport> verify_initials(Census& census);
/// Ladder entry vs enumerated d_k for every rank in the ladder.
std::vector<ReplayReport> verify_ladder(const GLadder& ladder, Census& census);
std::vector<ReplayReport> verify_qdiff(int k, Census& census);
std::vector<ReplayReport> verify_eqd(int k, Census& census);
/// Both sides from the ladder, which is extended as needed.
std::vector<ReplayReport> verify_keyprop(int k, GLadder& ladder);
/// Series identities on enumerated G's and count identities on enumerated tables. The two
/// ambiguous-offset identities are checked at X = 2k+3 and X = 2k+2; each passes if one of the two
/// holds and its note names which.
std::vector<ReplayReport> verify_proof_steps(int k, Census& census);
/// Enumerated D against the two-colour distinct-parts product.
ReplayReport verify_product_limit(Caps caps);

/// Highest index referenced by the identities at k, for sizing a ladder or census.
ColoredInt highest_index(const std::vector<Identity>& identities);

}  // namespace siladic
