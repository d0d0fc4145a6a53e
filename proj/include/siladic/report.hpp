#pragma once

#include "siladic/qseries.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace siladic {

enum class Status { pass, fail, inconclusive };

std::string_view status_name(Status s) noexcept;

/// Smallest discrepant index of a failed check, with both sides' values there.
struct Witness {
  int u = 0;
  int v = 0;
  int n = 0;
  BigInt lhs;
  BigInt rhs;
};

/// Outcome of one identity at one parameter value. A fail always carries a witness.
struct ReplayReport {
  std::string id;
  /// Parameter of the identity: an integer k, a coloured integer, or empty.
  std::string k;
  Caps caps;
  Status status = Status::inconclusive;
  /// Largest q-exponent actually compared; -1 when nothing could be compared.
  int checked_to = -1;
  std::optional<Witness> witness;
  std::string note;
};

ReplayReport make_pass(std::string id, std::string k, Caps caps, int checked_to, std::string note = {});
ReplayReport make_fail(std::string id, std::string k, Caps caps, int checked_to, Witness w, std::string note = {});
ReplayReport make_inconclusive(std::string id, std::string k, Caps caps, std::string note);

/// Compares two series up to min(upto, joint horizon). An empty joint horizon is inconclusive.
ReplayReport compare_series(std::string id, std::string k, const TriSeries& lhs, const TriSeries& rhs, int upto);

/// Entrywise comparison of two count tables over the whole box of `caps`.
ReplayReport compare_counts(std::string id, std::string k, const CountTable& lhs, const CountTable& rhs);

/// 2 when anything is inconclusive and nothing failed, 1 on any fail, otherwise 0.
int exit_status(const std::vector<ReplayReport>& reports) noexcept;

/// Schema version of the JSON-lines report format.
inline constexpr int kReportSchemaVersion = 1;

void write_json_lines(std::ostream& os, const std::vector<ReplayReport>& reports);
void write_summary(std::ostream& os, const std::vector<ReplayReport>& reports);
void write_csv(std::ostream& os, const std::vector<ReplayReport>& reports);

}  // namespace siladic
