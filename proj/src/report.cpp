#include "siladic/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>

namespace siladic {

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ReplayReport make_pass(std::string id, std::string k, Caps caps, int checked_to, std::string note) {
  return ReplayReport{std::move(id), std::move(k), caps, Status::pass, checked_to, std::nullopt, std::move(note)};
}

ReplayReport make_fail(std::string id, std::string k, Caps caps, int checked_to, Witness w, std::string note) {
  return ReplayReport{std::move(id), std::move(k), caps, Status::fail, checked_to, std::move(w), std::move(note)};
}

ReplayReport make_inconclusive(std::string id, std::string k, Caps caps, std::string note) {
  return ReplayReport{std::move(id), std::move(k), caps, Status::inconclusive, -1, std::nullopt, std::move(note)};
}

ReplayReport compare_series(std::string id, std::string k, const TriSeries& lhs, const TriSeries& rhs, int upto) {
  const int h = std::min({upto, lhs.horizon(), rhs.horizon()});
  if (h < 0) {
    return make_inconclusive(std::move(id), std::move(k), lhs.caps(), "empty completeness horizon");
  }
  const auto diff = first_difference(lhs, rhs, h);
  if (!diff) return make_pass(std::move(id), std::move(k), lhs.caps(), h);
  Witness w{diff->u, diff->v, diff->n, lhs.coeff(diff->u, diff->v, diff->n), rhs.coeff(diff->u, diff->v, diff->n)};
  return make_fail(std::move(id), std::move(k), lhs.caps(), h, std::move(w));
}

ReplayReport compare_counts(std::string id, std::string k, const CountTable& lhs, const CountTable& rhs) {
  if (!(lhs.caps() == rhs.caps())) throw caps_mismatch("compare_counts: caps differ");
  const auto& c = lhs.caps();
  std::optional<Exponent> best;
  auto consider = [&](const Exponent& e) {
    if (!best || std::tie(e.n, e.u, e.v) < std::tie(best->n, best->u, best->v)) best = e;
  };
  for (const auto& [e, x] : lhs.entries()) {
    if (rhs.at(e.u, e.v, e.n) != x) consider(e);
  }
  for (const auto& [e, x] : rhs.entries()) {
    if (lhs.at(e.u, e.v, e.n) != x) consider(e);
  }
  if (!best) return make_pass(std::move(id), std::move(k), c, c.N);
  Witness w{best->u, best->v, best->n, lhs.at(best->u, best->v, best->n), rhs.at(best->u, best->v, best->n)};
  return make_fail(std::move(id), std::move(k), c, c.N, std::move(w));
}

int exit_status(const std::vector<ReplayReport>& reports) noexcept {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail) return 1;
    if (r.status == Status::inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

namespace {

nlohmann::json k_to_json(const std::string& k) {
  if (k.empty()) return nullptr;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), value);
  if (ec == std::errc{} && ptr == k.data() + k.size()) return value;
  return k;
}

std::string big_to_string(const BigInt& x) { return x.str(); }

std::string witness_text(const ReplayReport& r) {
  if (!r.witness) return "-";
  const auto& w = *r.witness;
  return "(" + std::to_string(w.u) + "," + std::to_string(w.v) + "," + std::to_string(w.n) + ") " +
         big_to_string(w.lhs) + "!=" + big_to_string(w.rhs);
}

}  // namespace

void write_json_lines(std::ostream& os, const std::vector<ReplayReport>& reports) {
  for (const auto& r : reports) {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["id"] = r.id;
    j["k"] = k_to_json(r.k);
    j["caps"] = {{"U", r.caps.U}, {"V", r.caps.V}, {"N", r.caps.N}};
    j["status"] = std::string(status_name(r.status));
    j["checked_to"] = r.checked_to;
    if (r.witness) {
      j["witness"] = {{"u", r.witness->u},
                      {"v", r.witness->v},
                      {"n", r.witness->n},
                      {"lhs", big_to_string(r.witness->lhs)},
                      {"rhs", big_to_string(r.witness->rhs)}};
    } else {
      j["witness"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    os << j.dump() << '\n';
  }
}

void write_summary(std::ostream& os, const std::vector<ReplayReport>& reports) {
  std::size_t id_w = 8, k_w = 3;
  for (const auto& r : reports) {
    id_w = std::max(id_w, r.id.size());
    k_w = std::max(k_w, r.k.size());
  }
  os << std::left << std::setw(static_cast<int>(id_w)) << "identity" << "  " << std::setw(static_cast<int>(k_w)) << "k"
     << "  " << std::setw(12) << "status" << "  " << std::setw(6) << "to_n" << "  witness\n";
  int pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(id_w)) << r.id << "  " << std::setw(static_cast<int>(k_w))
       << (r.k.empty() ? "-" : r.k) << "  " << std::setw(12) << status_name(r.status) << "  " << std::setw(6)
       << r.checked_to << "  " << witness_text(r);
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
    switch (r.status) {
      case Status::pass:
        ++pass;
        break;
      case Status::fail:
        ++fail;
        break;
      case Status::inconclusive:
        ++inconclusive;
        break;
    }
  }
  os << "total " << reports.size() << ": " << pass << " pass, " << fail << " fail, " << inconclusive
     << " inconclusive\n";
}

void write_csv(std::ostream& os, const std::vector<ReplayReport>& reports) {
  os << "id,k,U,V,N,status,checked_to,witness_u,witness_v,witness_n,lhs,rhs\n";
  for (const auto& r : reports) {
    os << r.id << ',' << r.k << ',' << r.caps.U << ',' << r.caps.V << ',' << r.caps.N << ',' << status_name(r.status)
       << ',' << r.checked_to;
    if (r.witness) {
      os << ',' << r.witness->u << ',' << r.witness->v << ',' << r.witness->n << ',' << r.witness->lhs << ','
         << r.witness->rhs;
    } else {
      os << ",,,,,";
    }
    os << '\n';
  }
}

}  // namespace siladic
