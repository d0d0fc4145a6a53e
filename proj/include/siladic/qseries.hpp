#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace siladic {

using BigInt = boost::multiprecision::cpp_int;

/// Largest retained exponents of a, b and q.
struct Caps {
  int U = 0;
  int V = 0;
  int N = 0;

  friend bool operator==(const Caps&, const Caps&) = default;

  bool contains(int u, int v, int n) const noexcept {
    return u >= 0 && v >= 0 && n >= 0 && u <= U && v <= V && n <= N;
  }
};

/// Exponent triple of a^u b^v q^n. Ordered lexicographically.
struct Exponent {
  int u = 0;
  int v = 0;
  int n = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class caps_mismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class horizon_exceeded : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Truncated formal series in a, b, q with exact integer coefficients.
///
/// Every retained coefficient is exact. The horizon is the largest q-exponent up to which the
/// series is also complete: for n <= horizon every monomial within the caps carries its true
/// coefficient. Substitutions that move terms around lower it; comparisons must stay below it.
/// A horizon of -1 means nothing is known to be complete.
class TriSeries {
 public:
  using Terms = std::map<Exponent, BigInt>;

  explicit TriSeries(Caps caps);
  TriSeries(Caps caps, int horizon);

  static TriSeries one(Caps caps);
  static TriSeries monomial(Caps caps, int u, int v, int n, BigInt coefficient = 1);

  const Caps& caps() const noexcept { return caps_; }
  int horizon() const noexcept { return horizon_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Exact coefficient, zero when absent. Exponents outside the caps throw.
  BigInt coeff(int u, int v, int n) const;

  /// Adds c to the coefficient of a^u b^v q^n; monomials outside the caps are dropped.
  void accumulate(int u, int v, int n, const BigInt& c);

  void lower_horizon(int h) noexcept;

  TriSeries& operator+=(const TriSeries& other);
  TriSeries& operator-=(const TriSeries& other);

  friend TriSeries operator+(TriSeries s, const TriSeries& t) { return s += t; }
  friend TriSeries operator-(TriSeries s, const TriSeries& t) { return s -= t; }
  friend TriSeries operator*(const TriSeries& s, const TriSeries& t);

  /// Structural equality: caps, horizon and every stored term.
  friend bool operator==(const TriSeries&, const TriSeries&) = default;

 private:
  void check_same_caps(const TriSeries& other, const char* op) const;

  Caps caps_;
  int horizon_;
  Terms terms_;
};

TriSeries add(const TriSeries& s, const TriSeries& t);
TriSeries mul(const TriSeries& s, const TriSeries& t);

/// Multiplication by the monomial c * a^du b^dv q^dn.
TriSeries shift(const TriSeries& s, int du, int dv, int dn, const BigInt& c = 1);

/// The substitution (a, b) -> (b, aq): a^u b^v q^n becomes a^v b^u q^(n+v).
/// The result has caps (V, U, N); its horizon equals the input's.
TriSeries swap_sub(const TriSeries& s);

/// q -> q^M, a -> a q^-m_a, b -> b q^-m_b.
struct DilationSpec {
  int M = 1;
  int m_a = 0;
  int m_b = 0;

  friend bool operator==(const DilationSpec&, const DilationSpec&) = default;
};

/// Parses "M,m_a,m_b".
DilationSpec parse_dilation_spec(std::string_view s);
std::string to_string(const DilationSpec& d);

enum class DilationHorizon {
  /// Only what follows from the caps alone.
  conservative,
  /// The caller guarantees that every monomial of the underlying untruncated series satisfies
  /// M*n - m_a*u - m_b*v >= n, so no term beyond the input horizon can land at or below it.
  nondecreasing_support,
};

class negative_exponent : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Monomial (u, v, n) goes to (u, v, M*n - m_a*u - m_b*v). Output caps are (U, V, M*N).
TriSeries dilate(const TriSeries& s, const DilationSpec& d,
                 DilationHorizon mode = DilationHorizon::conservative);

/// prod_{k>=0} (1 + a q^(a_start + k*step)) (1 + b q^(b_start + k*step)), truncated.
TriSeries progression_product(int step, int a_start, int b_start, Caps caps);

/// prod_{k>=1} (1 + a q^k)(1 + b q^k), truncated.
TriSeries two_color_product(Caps caps);

/// Equality of all coefficients with n <= upto. Throws horizon_exceeded if upto lies beyond
/// either horizon.
bool eq_up_to(const TriSeries& s, const TriSeries& t, int upto);

/// First exponent (lexicographic in (n, u, v)) with n <= upto where the series differ.
std::optional<Exponent> first_difference(const TriSeries& s, const TriSeries& t, int upto);

/// Exact non-negative counts indexed by (u, v, n).
class CountTable {
 public:
  explicit CountTable(Caps caps);

  const Caps& caps() const noexcept { return caps_; }
  const std::map<Exponent, BigInt>& entries() const noexcept { return entries_; }

  /// Zero for absent entries and for any index outside the caps, including negative ones.
  BigInt at(int u, int v, int n) const;

  void add(int u, int v, int n, const BigInt& count);

  /// Sum over all (u, v) for a fixed n.
  BigInt total(int n) const;

  TriSeries to_series() const;
  static CountTable from_series(const TriSeries& s);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  Caps caps_;
  std::map<Exponent, BigInt> entries_;
};

/// Entry (u, v, n) goes to (u + v, 0, n); caps become (U + V, 0, N).
CountTable aggregate_uv(const CountTable& t);

// Line format "u v n coefficient", lexicographic order. The header line "# caps U V N [horizon H]"
// carries the caps.
void write_text(std::ostream& os, const TriSeries& s);
void write_text(std::ostream& os, const CountTable& t);
void write_csv(std::ostream& os, const TriSeries& s);
void write_csv(std::ostream& os, const CountTable& t);
void write_json(std::ostream& os, const TriSeries& s);
void write_json(std::ostream& os, const CountTable& t);

TriSeries read_series_text(std::istream& is);
CountTable read_counts_text(std::istream& is);
TriSeries read_series_json(std::string_view text);
CountTable read_counts_json(std::string_view text);

/// Human readable rendering such as "1 + a*q + a^2*b*q^3".
std::string to_polynomial_string(const TriSeries& s);

}  // namespace siladic
