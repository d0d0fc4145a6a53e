#include "siladic/qseries.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace siladic {

namespace {

void check_caps(const Caps& caps) {
  if (caps.U < 0 || caps.V < 0 || caps.N < 0) throw std::invalid_argument("negative caps");
}

std::string monomial_string(const Exponent& e) {
  std::ostringstream os;
  os << "a^" << e.u << " b^" << e.v << " q^" << e.n;
  return os.str();
}

bool diff_order(const Exponent& x, const Exponent& y) {
  return std::tie(x.n, x.u, x.v) < std::tie(y.n, y.u, y.v);
}

nlohmann::json coefficient_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

BigInt coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

Caps caps_from_json(const nlohmann::json& j) {
  Caps c{j.at("U").get<int>(), j.at("V").get<int>(), j.at("N").get<int>()};
  check_caps(c);
  return c;
}

nlohmann::json caps_to_json(const Caps& c) { return {{"U", c.U}, {"V", c.V}, {"N", c.N}}; }

template <class Map>
nlohmann::json terms_to_json(const Map& m) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : m) arr.push_back({e.u, e.v, e.n, coefficient_to_json(c)});
  return arr;
}

struct ParsedText {
  Caps caps;
  std::optional<int> horizon;
  std::vector<std::pair<Exponent, BigInt>> terms;
};

ParsedText parse_text(std::istream& is) {
  ParsedText out;
  std::string line;
  bool have_caps = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, word;
      ls >> hash >> word;
      if (word != "caps") continue;
      ls >> out.caps.U >> out.caps.V >> out.caps.N;
      if (!ls) throw std::invalid_argument("malformed caps header: " + line);
      check_caps(out.caps);
      std::string key;
      if (ls >> key && key == "horizon") {
        int h = 0;
        if (!(ls >> h)) throw std::invalid_argument("malformed horizon: " + line);
        out.horizon = h;
      }
      have_caps = true;
      continue;
    }
    Exponent e;
    std::string coeff;
    if (!(ls >> e.u >> e.v >> e.n >> coeff)) throw std::invalid_argument("malformed term line: " + line);
    out.terms.emplace_back(e, BigInt(coeff));
  }
  if (!have_caps) throw std::invalid_argument("missing '# caps U V N' header");
  return out;
}

}  // namespace

TriSeries::TriSeries(Caps caps) : TriSeries(caps, caps.N) {}

TriSeries::TriSeries(Caps caps, int horizon) : caps_(caps), horizon_(std::min(horizon, caps.N)) {
  check_caps(caps_);
  if (horizon_ < -1) horizon_ = -1;
}

TriSeries TriSeries::one(Caps caps) { return monomial(caps, 0, 0, 0); }

TriSeries TriSeries::monomial(Caps caps, int u, int v, int n, BigInt coefficient) {
  TriSeries s(caps);
  s.accumulate(u, v, n, coefficient);
  return s;
}

BigInt TriSeries::coeff(int u, int v, int n) const {
  if (!caps_.contains(u, v, n)) {
    throw std::out_of_range("coeff: exponent " + monomial_string({u, v, n}) + " outside caps");
  }
  const auto it = terms_.find({u, v, n});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TriSeries::accumulate(int u, int v, int n, const BigInt& c) {
  if (c == 0 || !caps_.contains(u, v, n)) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{u, v, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TriSeries::lower_horizon(int h) noexcept { horizon_ = std::max(-1, std::min(horizon_, h)); }

void TriSeries::check_same_caps(const TriSeries& other, const char* op) const {
  if (!(caps_ == other.caps_)) throw caps_mismatch(std::string(op) + ": caps differ");
}

TriSeries& TriSeries::operator+=(const TriSeries& other) {
  check_same_caps(other, "add");
  for (const auto& [e, c] : other.terms_) accumulate(e.u, e.v, e.n, c);
  lower_horizon(other.horizon_);
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& other) {
  check_same_caps(other, "sub");
  for (const auto& [e, c] : other.terms_) accumulate(e.u, e.v, e.n, -c);
  lower_horizon(other.horizon_);
  return *this;
}

TriSeries operator*(const TriSeries& s, const TriSeries& t) {
  s.check_same_caps(t, "mul");
  TriSeries out(s.caps_, std::min(s.horizon_, t.horizon_));
  const Caps& cp = s.caps_;
  for (const auto& [es, cs] : s.terms_) {
    for (const auto& [et, ct] : t.terms_) {
      const int u = es.u + et.u;
      const int v = es.v + et.v;
      const int n = es.n + et.n;
      if (u <= cp.U && v <= cp.V && n <= cp.N) out.accumulate(u, v, n, cs * ct);
    }
  }
  return out;
}

TriSeries add(const TriSeries& s, const TriSeries& t) { return s + t; }
TriSeries mul(const TriSeries& s, const TriSeries& t) { return s * t; }

TriSeries shift(const TriSeries& s, int du, int dv, int dn, const BigInt& c) {
  if (du < 0 || dv < 0 || dn < 0) throw std::invalid_argument("shift: negative exponent");
  const auto& caps = s.caps();
  TriSeries out(caps, s.horizon() + dn);
  if (c == 0) return out;
  for (const auto& [e, coef] : s.terms()) out.accumulate(e.u + du, e.v + dv, e.n + dn, coef * c);
  return out;
}

TriSeries swap_sub(const TriSeries& s) {
  const auto& caps = s.caps();
  // Each output monomial in the swapped caps has a unique preimage inside the input caps, at a
  // q-exponent no larger than its own, so completeness carries over unchanged.
  TriSeries out(Caps{caps.V, caps.U, caps.N}, s.horizon());
  for (const auto& [e, c] : s.terms()) out.accumulate(e.v, e.u, e.n + e.v, c);
  return out;
}

DilationSpec parse_dilation_spec(std::string_view s) {
  DilationSpec d;
  int* fields[3] = {&d.M, &d.m_a, &d.m_b};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto end = (i < 2) ? s.find(',', pos) : s.size();
    if (end == std::string_view::npos) throw std::invalid_argument("dilation spec must be M,m_a,m_b");
    const auto tok = s.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), *fields[i]);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw std::invalid_argument("bad integer in dilation spec '" + std::string(s) + "'");
    }
    pos = end + 1;
  }
  if (d.M < 1 || d.m_a < 0 || d.m_b < 0) throw std::invalid_argument("dilation spec needs M >= 1, m_a, m_b >= 0");
  return d;
}

std::string to_string(const DilationSpec& d) {
  return std::to_string(d.M) + "," + std::to_string(d.m_a) + "," + std::to_string(d.m_b);
}

TriSeries dilate(const TriSeries& s, const DilationSpec& d, DilationHorizon mode) {
  if (d.M < 1 || d.m_a < 0 || d.m_b < 0) throw std::invalid_argument("dilate: invalid spec");
  const auto& caps = s.caps();
  const int out_n = d.M * caps.N;
  int horizon = 0;
  if (mode == DilationHorizon::conservative) {
    // Unknown input terms have n > horizon, so their images are at least this.
    horizon = d.M * (s.horizon() + 1) - d.m_a * caps.U - d.m_b * caps.V - 1;
  } else {
    horizon = s.horizon();
  }
  TriSeries out(Caps{caps.U, caps.V, out_n}, horizon);
  for (const auto& [e, c] : s.terms()) {
    const int n = d.M * e.n - d.m_a * e.u - d.m_b * e.v;
    if (n < 0) {
      throw negative_exponent("dilate: monomial " + monomial_string(e) + " maps to negative q-exponent " +
                              std::to_string(n));
    }
    if (mode == DilationHorizon::nondecreasing_support && n < e.n) {
      throw std::domain_error("dilate: monomial " + monomial_string(e) +
                              " violates the nondecreasing-support guarantee");
    }
    out.accumulate(e.u, e.v, n, c);
  }
  return out;
}

TriSeries progression_product(int step, int a_start, int b_start, Caps caps) {
  if (step < 1 || a_start < 0 || b_start < 0) throw std::invalid_argument("progression_product: bad progression");
  TriSeries out = TriSeries::one(caps);
  // Factors with exponent beyond N only contribute their constant term.
  for (int e = a_start; e <= caps.N; e += step) out += shift(out, 1, 0, e);
  for (int e = b_start; e <= caps.N; e += step) out += shift(out, 0, 1, e);
  return out;
}

TriSeries two_color_product(Caps caps) { return progression_product(1, 1, 1, caps); }

bool eq_up_to(const TriSeries& s, const TriSeries& t, int upto) {
  return !first_difference(s, t, upto).has_value();
}

std::optional<Exponent> first_difference(const TriSeries& s, const TriSeries& t, int upto) {
  if (!(s.caps() == t.caps())) throw caps_mismatch("compare: caps differ");
  if (upto > s.horizon() || upto > t.horizon()) {
    throw horizon_exceeded("compare up to q^" + std::to_string(upto) + " beyond completeness horizon (" +
                           std::to_string(std::min(s.horizon(), t.horizon())) + ")");
  }
  std::optional<Exponent> best;
  auto consider = [&](const Exponent& e) {
    if (e.n > upto) return;
    if (!best || diff_order(e, *best)) best = e;
  };
  for (const auto& [e, c] : s.terms()) {
    const auto it = t.terms().find(e);
    if (it == t.terms().end() || it->second != c) consider(e);
  }
  for (const auto& [e, c] : t.terms()) {
    if (!s.terms().contains(e)) consider(e);
  }
  return best;
}

CountTable::CountTable(Caps caps) : caps_(caps) { check_caps(caps_); }

BigInt CountTable::at(int u, int v, int n) const {
  if (!caps_.contains(u, v, n)) return 0;
  const auto it = entries_.find({u, v, n});
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CountTable::add(int u, int v, int n, const BigInt& count) {
  if (count < 0) throw std::invalid_argument("CountTable: negative count");
  if (!caps_.contains(u, v, n)) {
    throw std::out_of_range("CountTable: index " + monomial_string({u, v, n}) + " outside caps");
  }
  if (count == 0) return;
  entries_[Exponent{u, v, n}] += count;
}

BigInt CountTable::total(int n) const {
  BigInt sum = 0;
  for (const auto& [e, c] : entries_) {
    if (e.n == n) sum += c;
  }
  return sum;
}

TriSeries CountTable::to_series() const {
  TriSeries s(caps_);
  for (const auto& [e, c] : entries_) s.accumulate(e.u, e.v, e.n, c);
  return s;
}

CountTable CountTable::from_series(const TriSeries& s) {
  CountTable t(s.caps());
  for (const auto& [e, c] : s.terms()) {
    if (c < 0) throw std::invalid_argument("from_series: negative coefficient at " + monomial_string(e));
    t.add(e.u, e.v, e.n, c);
  }
  return t;
}

CountTable aggregate_uv(const CountTable& t) {
  const auto& c = t.caps();
  CountTable out(Caps{c.U + c.V, 0, c.N});
  for (const auto& [e, count] : t.entries()) out.add(e.u + e.v, 0, e.n, count);
  return out;
}

void write_text(std::ostream& os, const TriSeries& s) {
  const auto& c = s.caps();
  os << "# caps " << c.U << ' ' << c.V << ' ' << c.N << " horizon " << s.horizon() << '\n';
  for (const auto& [e, coef] : s.terms()) os << e.u << ' ' << e.v << ' ' << e.n << ' ' << coef << '\n';
}

void write_text(std::ostream& os, const CountTable& t) {
  const auto& c = t.caps();
  os << "# caps " << c.U << ' ' << c.V << ' ' << c.N << '\n';
  for (const auto& [e, count] : t.entries()) os << e.u << ' ' << e.v << ' ' << e.n << ' ' << count << '\n';
}

void write_csv(std::ostream& os, const TriSeries& s) {
  os << "u,v,n,coefficient\n";
  for (const auto& [e, coef] : s.terms()) os << e.u << ',' << e.v << ',' << e.n << ',' << coef << '\n';
}

void write_csv(std::ostream& os, const CountTable& t) {
  os << "u,v,n,count\n";
  for (const auto& [e, count] : t.entries()) os << e.u << ',' << e.v << ',' << e.n << ',' << count << '\n';
}

void write_json(std::ostream& os, const TriSeries& s) {
  nlohmann::json j{{"caps", caps_to_json(s.caps())}, {"horizon", s.horizon()}, {"terms", terms_to_json(s.terms())}};
  os << j.dump() << '\n';
}

void write_json(std::ostream& os, const CountTable& t) {
  nlohmann::json j{{"caps", caps_to_json(t.caps())}, {"terms", terms_to_json(t.entries())}};
  os << j.dump() << '\n';
}

TriSeries read_series_text(std::istream& is) {
  auto parsed = parse_text(is);
  TriSeries s(parsed.caps, parsed.horizon.value_or(parsed.caps.N));
  for (const auto& [e, c] : parsed.terms) {
    if (!parsed.caps.contains(e.u, e.v, e.n)) throw std::out_of_range("term outside caps: " + monomial_string(e));
    s.accumulate(e.u, e.v, e.n, c);
  }
  return s;
}

CountTable read_counts_text(std::istream& is) {
  auto parsed = parse_text(is);
  CountTable t(parsed.caps);
  for (const auto& [e, c] : parsed.terms) t.add(e.u, e.v, e.n, c);
  return t;
}

TriSeries read_series_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  const auto caps = caps_from_json(j.at("caps"));
  TriSeries s(caps, j.contains("horizon") ? j.at("horizon").get<int>() : caps.N);
  for (const auto& term : j.at("terms")) {
    const int u = term.at(0).get<int>(), v = term.at(1).get<int>(), n = term.at(2).get<int>();
    if (!caps.contains(u, v, n)) throw std::out_of_range("term outside caps: " + monomial_string({u, v, n}));
    s.accumulate(u, v, n, coefficient_from_json(term.at(3)));
  }
  return s;
}

CountTable read_counts_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  CountTable t(caps_from_json(j.at("caps")));
  for (const auto& term : j.at("terms")) {
    t.add(term.at(0).get<int>(), term.at(1).get<int>(), term.at(2).get<int>(), coefficient_from_json(term.at(3)));
  }
  return t;
}

std::string to_polynomial_string(const TriSeries& s) {
  std::vector<std::pair<Exponent, BigInt>> ordered(s.terms().begin(), s.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.n, y.first.u, y.first.v) < std::tie(y.first.n, x.first.u, x.first.v);
  });
  if (ordered.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    auto power = [](const char* var, int p) {
      return p == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(p);
    };
    if (e.u > 0) factors.push_back(power("a", e.u));
    if (e.v > 0) factors.push_back(power("b", e.v));
    if (e.n > 0) factors.push_back(power("q", e.n));
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace siladic
