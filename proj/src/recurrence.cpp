#include "siladic/recurrence.hpp"

#include "siladic/enumerator.hpp"

#include <algorithm>
#include <stdexcept>

namespace siladic {

Census::Census(Caps caps) : caps_(caps) {}

const CountTable& Census::at_most_table(const ColoredInt& k) {
  auto it = at_most_.find(rank(k));
  if (it == at_most_.end()) {
    auto table = enumerate_dk(k, caps_);
    auto series = table.to_series();
    it = at_most_.emplace(rank(k), Entry{std::move(table), std::move(series)}).first;
  }
  return it->second.table;
}

const CountTable& Census::exactly_table(const ColoredInt& k) {
  auto it = exactly_.find(rank(k));
  if (it == exactly_.end()) {
    auto table = enumerate_ek(k, caps_);
    auto series = table.to_series();
    it = exactly_.emplace(rank(k), Entry{std::move(table), std::move(series)}).first;
  }
  return it->second.table;
}

const TriSeries& Census::at_most(const ColoredInt& k) {
  at_most_table(k);
  return at_most_.at(rank(k)).series;
}

const TriSeries& Census::exactly(const ColoredInt& k) {
  exactly_table(k);
  return exactly_.at(rank(k)).series;
}

namespace {

struct Mono {
  int u, v, n;
};

// Each base series extends the previous one by the partitions whose largest part is the new bound.
const std::vector<std::vector<Mono>> kInitialIncrements = {
    {{0, 0, 0}},             // 1_ab: only the empty partition
    {{1, 0, 1}},             // 1_a
    {},                      // 1_b2
    {{0, 1, 1}},             // 1_b
    {{1, 1, 2}},             // 2_ab
    {{1, 0, 2}},             // 2_a
    {{2, 0, 3}},             // 3_a2
    {{0, 1, 2}, {1, 1, 3}},  // 2_b
};

Term G(int value, Color c) { return Term{value, c, Family::at_most}; }
Term E(int value, Color c) { return Term{value, c, Family::exactly}; }

Term SG(int value, Color c) {
  Term t = G(value, c);
  t.swapped = true;
  return t;
}

Term times(Term t, BigInt coeff, int du, int dv, int dn) {
  t.coeff *= coeff;
  t.du += du;
  t.dv += dv;
  t.dn += dn;
  return t;
}

Term times(Term t, int du, int dv, int dn) { return times(std::move(t), 1, du, dv, dn); }

Term with_one_plus_aq(Term t) {
  t.times_one_plus_aq = true;
  return t;
}

std::vector<Term> with_one_plus_aq(std::vector<Term> side) {
  for (auto& t : side) t.times_one_plus_aq = true;
  return side;
}

constexpr Color A = Color::a;
constexpr Color B = Color::b;
constexpr Color AB = Color::ab;
constexpr Color A2 = Color::a2;
constexpr Color B2 = Color::b2;

}  // namespace

TriSeries initial_series(const ColoredInt& k, Caps caps) {
  const auto r = rank(k);
  if (r < 0 || r >= static_cast<std::int64_t>(kInitialIncrements.size())) {
    throw std::out_of_range("no base series for " + to_string(k));
  }
  TriSeries s(caps);
  for (std::int64_t i = 0; i <= r; ++i) {
    for (const auto& m : kInitialIncrements[static_cast<std::size_t>(i)]) s.accumulate(m.u, m.v, m.n, 1);
  }
  return s;
}

GLadder GLadder::build(const ColoredInt& k_max, Caps caps) {
  GLadder ladder(caps);
  ladder.extend_to(k_max);
  return ladder;
}

bool GLadder::contains(const ColoredInt& k) const noexcept {
  return rank(k) < static_cast<std::int64_t>(series_.size());
}

const TriSeries& GLadder::at(const ColoredInt& k) const {
  if (!contains(k)) throw std::out_of_range("ladder does not reach " + to_string(k));
  return series_[static_cast<std::size_t>(rank(k))];
}

ColoredInt GLadder::top() const {
  if (series_.empty()) throw std::out_of_range("empty ladder");
  return from_rank(static_cast<std::int64_t>(series_.size()) - 1);
}

void GLadder::extend_to(const ColoredInt& k) {
  const auto target = rank(k);
  while (static_cast<std::int64_t>(series_.size()) <= target) {
    const auto r = static_cast<std::int64_t>(series_.size());
    if (r < 8) {
      series_.push_back(initial_series(from_rank(r), caps_));
      continue;
    }
    const int block_k = static_cast<int>(r / 8);
    const auto eqs = qdiff_identities(block_k);
    const Identity& eq = eqs[static_cast<std::size_t>(r % 8)];
    const ColoredInt produced(eq.lhs.front().value, eq.lhs.front().color);
    if (rank(produced) != r) throw std::logic_error("ladder: " + eq.id + " does not produce rank " + std::to_string(r));
    for (const auto& t : eq.rhs) {
      if (rank(ColoredInt(t.value, t.color)) >= r) {
        throw std::logic_error("ladder: " + eq.id + " refers to an entry not yet built");
      }
    }
    series_.push_back(evaluate(eq.rhs, lookup(*this), caps_));
  }
}

SeriesLookup lookup(Census& census) {
  return [&census](const ColoredInt& k, Family f) -> const TriSeries& {
    return f == Family::at_most ? census.at_most(k) : census.exactly(k);
  };
}

SeriesLookup lookup(const GLadder& ladder) {
  return [&ladder](const ColoredInt& k, Family f) -> const TriSeries& {
    if (f != Family::at_most) throw std::invalid_argument("the ladder holds only G series");
    return ladder.at(k);
  };
}

bool is_instantiable(const Identity& identity) noexcept {
  auto ok = [](const Term& t) { return is_valid_colored(t.value, t.color); };
  return std::all_of(identity.lhs.begin(), identity.lhs.end(), ok) &&
         std::all_of(identity.rhs.begin(), identity.rhs.end(), ok);
}

TriSeries evaluate(const std::vector<Term>& side, const SeriesLookup& source, Caps caps) {
  TriSeries acc(caps);
  for (const auto& t : side) {
    const ColoredInt index(t.value, t.color);
    TriSeries s = source(index, t.family);
    if (t.swapped) s = swap_sub(s);
    if (t.times_one_plus_aq) s = mul(TriSeries::one(s.caps()) + TriSeries::monomial(s.caps(), 1, 0, 1), s);
    acc += shift(s, t.du, t.dv, t.dn, t.coeff);
  }
  return acc;
}

std::optional<ReplayReport> check_identity(const Identity& identity, const SeriesLookup& source, Caps caps) {
  if (!is_instantiable(identity)) return std::nullopt;
  const auto lhs = evaluate(identity.lhs, source, caps);
  const auto rhs = evaluate(identity.rhs, source, caps);
  return compare_series(identity.id, std::to_string(identity.k), lhs, rhs, caps.N);
}

std::vector<Identity> qdiff_identities(int k) {
  return {
      {"eq1", k, {G(2 * k + 1, AB)}, {G(2 * k, B), times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}},
      {"eq2", k, {G(2 * k + 1, A)}, {G(2 * k + 1, AB), times(G(2 * k, AB), 1, 0, 2 * k + 1)}},
      {"eq3", k, {G(2 * k + 1, B2)}, {G(2 * k + 1, A), times(G(2 * k - 1, A), 0, 2, 2 * k + 1)}},
      {"eq4", k, {G(2 * k + 1, B)}, {G(2 * k + 1, B2), times(G(2 * k, A), 0, 1, 2 * k + 1)}},
      {"eq5",
       k,
       {G(2 * k + 2, AB)},
       {G(2 * k + 1, B), times(G(2 * k, A), 1, 1, 2 * k + 2), times(G(2 * k - 1, A), 1, 2, 4 * k + 2)}},
      {"eq6",
       k,
       {G(2 * k + 2, A)},
       {G(2 * k + 2, AB), times(G(2 * k, A), 1, 0, 2 * k + 2), times(G(2 * k - 1, A), 1, 1, 4 * k + 2)}},
      {"eq7",
       k,
       {G(2 * k + 3, A2)},
       {G(2 * k + 2, A), times(G(2 * k, A), 2, 0, 2 * k + 3), times(G(2 * k - 1, A), 2, 1, 4 * k + 3)}},
      {"eq8", k, {G(2 * k + 2, B)}, {G(2 * k + 3, A2), times(G(2 * k + 1, A), 0, 1, 2 * k + 2)}},
  };
}

std::vector<Identity> eqd_identities(int k) {
  std::vector<Identity> out = {
      {"eqd1", k, {G(2 * k + 1, AB)}, {G(2 * k, B), times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}},
      {"eqd2", k, {G(2 * k + 1, A)}, {G(2 * k + 1, AB), times(G(2 * k, AB), 1, 0, 2 * k + 1)}},
      {"eqd3", k, {G(2 * k + 1, B2)}, {G(2 * k + 1, A), times(G(2 * k - 1, A), 0, 2, 2 * k + 1)}},
      {"eqd4", k, {G(2 * k + 1, B)}, {G(2 * k + 1, B2), times(G(2 * k, A), 0, 1, 2 * k + 1)}},
      {"eqd5",
       k,
       {G(2 * k + 2, AB)},
       {G(2 * k + 1, B), times(G(2 * k, A), 1, 1, 2 * k + 2), times(G(2 * k - 1, A), 1, 2, 4 * k + 2)}},
      {"eqd6",
       k,
       {G(2 * k + 2, A)},
       {G(2 * k + 2, AB), times(G(2 * k, A), 1, 0, 2 * k + 2), times(G(2 * k - 1, A), 1, 1, 4 * k + 2)}},
      {"eqd7",
       k,
       {G(2 * k + 3, A2)},
       {G(2 * k + 2, A), times(G(2 * k, A), 2, 0, 2 * k + 3), times(G(2 * k - 1, A), 2, 1, 4 * k + 3)}},
      {"eqd8", k, {G(2 * k + 2, B)}, {G(2 * k + 3, A2), times(G(2 * k + 1, A), 0, 1, 2 * k + 2)}},
  };
  // d_x = d_pred(x) + e_x over the block whose left sides the eqd lines produce.
  for (std::int64_t r = 8 * static_cast<std::int64_t>(k); r < 8 * static_cast<std::int64_t>(k) + 8; ++r) {
    const ColoredInt x = from_rank(r);
    const ColoredInt p = pred(x);
    out.push_back({"split", k, {G(x.value(), x.color())}, {G(p.value(), p.color()), E(x.value(), x.color())}});
  }
  out.push_back({"remove-top-odd-ab", k, {E(2 * k + 1, AB)}, {times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}});
  out.push_back({"remove-top-even-ab",
                 k,
                 {E(2 * k + 2, AB)},
                 {times(E(2 * k, B), 1, 1, 2 * k + 2), times(G(2 * k, A), 1, 1, 2 * k + 2)}});
  out.push_back(
      {"remove-top-even-b", k, {times(E(2 * k, B), 1, 1, 2 * k + 2)}, {times(G(2 * k - 1, A), 1, 2, 4 * k + 2)}});
  return out;
}

std::vector<Identity> keyprop_identities(int k) {
  return {
      {"key1", k, {G(2 * k + 1, AB)}, {with_one_plus_aq(SG(2 * k, A))}},
      {"key2", k, {G(2 * k + 1, B2)}, {with_one_plus_aq(SG(2 * k, B))}},
      {"key3", k, {G(2 * k + 2, AB)}, {with_one_plus_aq(SG(2 * k + 1, A))}},
      {"key4", k, {G(2 * k + 1, A2)}, {with_one_plus_aq(SG(2 * k - 1, B))}},
  };
}

std::vector<Identity> proof_step_series_identities(int k) {
  const std::vector<Term> sum_swapped = {
      SG(2 * k - 1, B),
      times(SG(2 * k - 2, A), 0, 1, 2 * k),
      times(SG(2 * k - 2, A), 1, 1, 2 * k + 1),
      times(SG(2 * k - 3, A), 1, 1, 4 * k - 1),
      times(SG(2 * k - 3, A), 2, 1, 4 * k),
  };
  const std::vector<Term> bracket = {
      SG(2 * k, A),
      times(SG(2 * k - 1, A), 1, 0, 2 * k + 1),
      times(SG(2 * k - 2, A), 0, 2, 2 * k + 1),
      times(SG(2 * k - 3, A), 1, 2, 4 * k),
  };
  return {
      {"plic",
       k,
       {G(2 * k + 1, AB)},
       {G(2 * k + 1, A2), times(G(2 * k - 1, A), 0, 1, 2 * k), times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}},
      {"plic-expanded",
       k,
       {G(2 * k + 1, AB)},
       {G(2 * k + 1, A2), times(G(2 * k - 1, AB), 0, 1, 2 * k), times(G(2 * k - 1, AB), 1, 1, 2 * k + 1),
        times(G(2 * k - 2, AB), 1, 1, 4 * k - 1), times(G(2 * k - 2, AB), 2, 1, 4 * k)}},
      {"ploc", k, {G(2 * k + 1, AB)}, with_one_plus_aq(sum_swapped)},
      {"eq1*",
       k,
       {G(2 * k, AB)},
       {G(2 * k - 1, B), times(G(2 * k - 2, A), 1, 1, 2 * k), times(G(2 * k - 3, A), 1, 2, 4 * k - 2)}},
      {"eq2*",
       k,
       {G(2 * k, A)},
       {G(2 * k, AB), times(G(2 * k - 2, A), 1, 0, 2 * k), times(G(2 * k - 3, A), 1, 1, 4 * k - 2)}},
      {"eq1*+eq2*-swapped", k, {SG(2 * k, A)}, sum_swapped},
      {"cas2eq1",
       k,
       {G(2 * k + 1, B2)},
       {G(2 * k + 1, AB), times(G(2 * k, AB), 1, 0, 2 * k + 1), times(G(2 * k - 1, A), 0, 2, 2 * k + 1)}},
      {"cas2eq2",
       k,
       {G(2 * k + 1, B2)},
       {G(2 * k + 1, AB), times(G(2 * k, AB), 1, 0, 2 * k + 1), times(G(2 * k - 1, AB), 0, 2, 2 * k + 1),
        times(G(2 * k - 2, AB), 1, 2, 4 * k)}},
      {"cas2eq3", k, {G(2 * k + 1, B2)}, with_one_plus_aq(bracket)},
      {"eq7+eq8",
       k,
       {G(2 * k, B)},
       {G(2 * k, A), times(G(2 * k - 1, A), 0, 1, 2 * k), times(G(2 * k - 2, A), 2, 0, 2 * k + 1),
        times(G(2 * k - 3, A), 2, 1, 4 * k - 1)}},
      {"eq7+eq8-swapped", k, {SG(2 * k, B)}, bracket},
      {"plouf",
       k,
       {G(2 * k + 1, A)},
       {G(2 * k, B), times(G(2 * k, AB), 1, 0, 2 * k + 1), times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}},
      {"plouf3",
       k,
       {G(2 * k + 1, A)},
       {G(2 * k, B), times(G(2 * k - 1, B), 1, 0, 2 * k + 1), times(G(2 * k - 2, A), 2, 1, 4 * k + 1),
        times(G(2 * k - 3, A), 2, 2, 6 * k - 1), times(G(2 * k - 1, A), 1, 1, 2 * k + 1)}},
      {"etoile",
       k,
       {SG(2 * k + 1, A)},
       {SG(2 * k, B), times(SG(2 * k - 1, B), 0, 1, 2 * k + 1), times(SG(2 * k - 2, A), 1, 2, 4 * k + 2),
        times(SG(2 * k - 3, A), 2, 2, 6 * k + 1), times(SG(2 * k - 1, A), 1, 1, 2 * k + 2)}},
      {"paf",
       k,
       {G(2 * k + 2, AB)},
       {G(2 * k + 1, B2), times(G(2 * k + 1, A2), 0, 1, 2 * k + 1), times(G(2 * k - 1, AB), 1, 2, 4 * k + 2),
        times(G(2 * k - 2, AB), 2, 2, 6 * k + 1), times(G(2 * k, AB), 1, 1, 2 * k + 2)}},
      {"star",
       k,
       {G(2 * k + 2, AB)},
       {G(2 * k + 1, B2), times(G(2 * k, A), 0, 1, 2 * k + 1), times(G(2 * k - 1, A), 1, 2, 4 * k + 2),
        times(G(2 * k, A), 1, 1, 2 * k + 2)}},
      {"star-expanded",
       k,
       {G(2 * k + 2, AB)},
       {G(2 * k + 1, B2), times(G(2 * k + 1, A2), 0, 1, 2 * k + 1), times(G(2 * k - 2, A), -1, 2, 1, 4 * k + 2),
        times(G(2 * k - 3, A), -1, 2, 2, 6 * k), times(G(2 * k - 1, AB), 1, 2, 4 * k + 2),
        times(G(2 * k - 2, AB), 2, 2, 6 * k + 1), times(G(2 * k, AB), 1, 1, 2 * k + 2),
        times(G(2 * k - 2, A), 2, 1, 4 * k + 2), times(G(2 * k - 3, A), 2, 2, 6 * k)}},
      {"eq34",
       k,
       {SG(2 * k + 1, B)},
       {SG(2 * k + 1, A), times(SG(2 * k, A), 1, 0, 2 * k + 2), times(SG(2 * k - 1, A), 2, 0, 2 * k + 3)}},
      {"goal",
       k,
       {G(2 * k + 3, A2)},
       {G(2 * k + 2, AB), times(G(2 * k + 1, AB), 1, 0, 2 * k + 2), times(G(2 * k, AB), 2, 0, 2 * k + 3)}},
  };
}

std::vector<Identity> proof_step_count_identities(int k) {
  const int s1 = 2 * k + 2;
  const int s2 = 2 * k + 3;
  const int s3 = 4 * k + 3;
  return {
      {"pif3", k, {G(2 * k + 3, A2)}, {G(2 * k + 2, AB), E(2 * k + 2, A), E(2 * k + 3, A2)}},
      {"pif1",
       k,
       {E(2 * k + 2, A)},
       {times(G(2 * k + 1, AB), 1, 0, s1), times(E(2 * k + 1, A2), -1, 1, 0, s1),
        times(E(2 * k + 1, AB), -1, 1, 0, s1)}},
      {"pif2",
       k,
       {E(2 * k + 3, A2)},
       {times(G(2 * k, AB), 2, 0, s2), times(E(2 * k, A), 2, 0, s2), times(E(2 * k, B), 2, 0, s2)}},
      {"e-eq1", k, {times(E(2 * k + 1, AB), 1, 0, s1)}, {times(G(2 * k - 1, A), 2, 1, s3)}},
      {"e-eq2", k, {times(E(2 * k, B), 2, 0, s2)}, {times(G(2 * k - 1, A), 2, 1, s3)}},
      {"e-eq3", k, {times(E(2 * k + 1, AB), 1, 0, s1)}, {times(E(2 * k, B), 2, 0, s2)}},
      {"e-eq4",
       k,
       {times(E(2 * k + 1, A2), 1, 0, s1)},
       {times(E(2 * k - 2, B), 3, 0, s3), times(G(2 * k - 2, A), 3, 0, s3)}},
      {"goal-counts",
       k,
       {G(2 * k + 3, A2)},
       {G(2 * k + 2, AB), times(G(2 * k + 1, AB), 1, 0, s1), times(G(2 * k, AB), 2, 0, s2)}},
  };
}

std::vector<Identity> offset_candidates(int k, int offset) {
  const int s3 = 4 * k + 3;
  return {
      {"e-eq5",
       k,
       {times(E(2 * k, A), 2, 0, offset)},
       {times(E(2 * k - 2, B), 3, 0, s3), times(G(2 * k - 2, A), 3, 0, s3)}},
      {"e-eq6", k, {times(E(2 * k + 1, A2), 1, 0, 2 * k + 2)}, {times(E(2 * k, A), 2, 0, offset)}},
  };
}

namespace {

std::vector<ReplayReport> check_all(const std::vector<Identity>& ids, const SeriesLookup& source, Caps caps) {
  std::vector<ReplayReport> out;
  for (const auto& id : ids) {
    if (auto r = check_identity(id, source, caps)) out.push_back(std::move(*r));
  }
  return out;
}

std::string witness_phrase(const ReplayReport& r) {
  if (!r.witness) return "fails";
  return "fails at (" + std::to_string(r.witness->u) + "," + std::to_string(r.witness->v) + "," +
         std::to_string(r.witness->n) + ")";
}

}  // namespace

std::vector<ReplayReport> verify_initials(Census& census) {
  std::vector<ReplayReport> out;
  for (std::int64_t r = 0; r < 8; ++r) {
    const ColoredInt k = from_rank(r);
    out.push_back(compare_series("initial", to_string(k), initial_series(k, census.caps()), census.at_most(k),
                                 census.caps().N));
  }
  return out;
}

std::vector<ReplayReport> verify_ladder(const GLadder& ladder, Census& census) {
  std::vector<ReplayReport> out;
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(ladder.size()); ++r) {
    const ColoredInt k = from_rank(r);
    out.push_back(compare_series("ladder", to_string(k), ladder.at(k), census.at_most(k), census.caps().N));
  }
  return out;
}

std::vector<ReplayReport> verify_qdiff(int k, Census& census) {
  return check_all(qdiff_identities(k), lookup(census), census.caps());
}

std::vector<ReplayReport> verify_eqd(int k, Census& census) {
  return check_all(eqd_identities(k), lookup(census), census.caps());
}

std::vector<ReplayReport> verify_keyprop(int k, GLadder& ladder) {
  const auto ids = keyprop_identities(k);
  ladder.extend_to(highest_index(ids));
  return check_all(ids, lookup(ladder), ladder.caps());
}

std::vector<ReplayReport> verify_proof_steps(int k, Census& census) {
  const auto source = lookup(census);
  auto out = check_all(proof_step_series_identities(k), source, census.caps());
  auto counts = check_all(proof_step_count_identities(k), source, census.caps());
  out.insert(out.end(), std::make_move_iterator(counts.begin()), std::make_move_iterator(counts.end()));

  const int preferred = 2 * k + 3;
  const int alternative = 2 * k + 2;
  const auto first = offset_candidates(k, preferred);
  const auto second = offset_candidates(k, alternative);
  for (std::size_t i = 0; i < first.size(); ++i) {
    auto a = check_identity(first[i], source, census.caps());
    auto b = check_identity(second[i], source, census.caps());
    if (!a || !b) continue;
    const std::string pa = "n-" + std::to_string(preferred);
    const std::string pb = "n-" + std::to_string(alternative);
    if (a->status == Status::pass && b->status == Status::pass) {
      a->note = "offsets " + pa + " and " + pb + " both hold at these caps";
      out.push_back(std::move(*a));
    } else if (a->status == Status::pass) {
      a->note = "offset " + pa + " holds; " + pb + " " + witness_phrase(*b);
      out.push_back(std::move(*a));
    } else if (b->status == Status::pass) {
      b->note = "offset " + pb + " holds; " + pa + " " + witness_phrase(*a);
      out.push_back(std::move(*b));
    } else {
      a->note = "neither offset holds; " + pb + " " + witness_phrase(*b);
      out.push_back(std::move(*a));
    }
  }
  return out;
}

ReplayReport verify_product_limit(Caps caps) {
  return compare_series("product-limit", "", enumerate_D(caps).to_series(), two_color_product(caps), caps.N);
}

ColoredInt highest_index(const std::vector<Identity>& identities) {
  std::optional<ColoredInt> best;
  auto consider = [&](const Term& t) {
    if (!is_valid_colored(t.value, t.color)) return;
    const ColoredInt x(t.value, t.color);
    if (!best || rank(x) > rank(*best)) best = x;
  };
  for (const auto& id : identities) {
    for (const auto& t : id.lhs) consider(t);
    for (const auto& t : id.rhs) consider(t);
  }
  if (!best) throw std::invalid_argument("highest_index: no valid index");
  return *best;
}

}  // namespace siladic
