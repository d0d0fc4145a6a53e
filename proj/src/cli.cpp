#include "siladic/cli.hpp"

#include "siladic/dilation.hpp"
#include "siladic/enumerator.hpp"
#include "siladic/recurrence.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace siladic {

namespace {

constexpr double kDefaultBudgetMb = 1024;

struct RunConfig {
  std::string command;
  std::string target;
  int N = 20;
  std::optional<int> U;
  std::optional<int> V;
  std::string k;
  std::string format = "text";
  std::string out_path;
  std::optional<double> budget_mb;
  std::string rules_path;
  std::string dilation;

  Caps caps() const { return {U.value_or(N), V.value_or(N), N}; }
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kVerifyTargets = {
    "initials", "ladder",   "qdiff",      "eqd",     "keyprop", "proof-steps",   "product-limit", "refdilat",
    "comp",     "newschur", "refinement", "siladic", "schur",   "schur-product", "rr",            "horizon"};

const std::vector<std::string> kCountTargets = {"D",          "d",          "e",        "distinct-odd", "refdilat-C",
                                                "comp-C",     "newschur-C", "refdilat", "comp",         "newschur",
                                                "refinement", "siladic",    "rules"};

const std::vector<std::string> kSeriesTargets = {"G", "product", "schur-product", "D", "dilated-D"};

std::pair<int, int> parse_k_range(const std::string& s, std::pair<int, int> fallback) {
  if (s.empty()) return fallback;
  try {
    const auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int k = std::stoi(s, &used);
      if (used != s.size() || k < 1) throw usage_error("");
      return {k, k};
    }
    const std::string lo_s = s.substr(0, dots);
    const std::string hi_s = s.substr(dots + 2);
    const int lo = std::stoi(lo_s, &used);
    if (used != lo_s.size()) throw usage_error("");
    const int hi = std::stoi(hi_s, &used);
    if (used != hi_s.size() || lo < 1 || hi < lo) throw usage_error("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw usage_error("--k expects a positive integer or a range such as 1..4, got '" + s + "'");
  }
}

ColoredInt parse_k_colored(const std::string& s, const char* what) {
  if (s.empty()) throw usage_error(std::string(what) + " needs --k with a coloured integer such as 2_b");
  try {
    return parse_colored_int(s);
  } catch (const std::exception& e) {
    throw usage_error(std::string("--k: ") + e.what());
  }
}

// Rough upper bound on memory: stored series and count tables hold at most about a third of the cap
// box as terms, each a map node with a small big integer; enumeration adds one dense counter array.
double estimate_mb(Caps c, double series) {
  const double box = (c.U + 1.0) * (c.V + 1.0) * (c.N + 1.0);
  return (series * box / 3.0 * 96.0 + box * 8.0) / (1024.0 * 1024.0);
}

double budget_mb(const RunConfig& cfg) {
  if (cfg.budget_mb) return *cfg.budget_mb;
  if (const char* env = std::getenv("SILADIC_BUDGET_MB")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw usage_error(std::string("SILADIC_BUDGET_MB is not a number: ") + env);
    }
  }
  return kDefaultBudgetMb;
}

void guard(const RunConfig& cfg, Caps caps, double series) {
  const double budget = budget_mb(cfg);
  const double need = estimate_mb(caps, series);
  if (need <= budget) return;
  int fit = caps.N;
  while (fit > 0 && estimate_mb({std::min(caps.U, fit), std::min(caps.V, fit), fit}, series) > budget) fit /= 2;
  while (estimate_mb({std::min(caps.U, fit + 1), std::min(caps.V, fit + 1), fit + 1}, series) <= budget) ++fit;
  std::ostringstream msg;
  msg << cfg.command << ' ' << cfg.target << " at caps U=" << caps.U << " V=" << caps.V << " N=" << caps.N
      << " needs about " << static_cast<long long>(need) << " MB, budget is " << budget
      << " MB; rerun with --N " << fit << " or raise --budget-mb / SILADIC_BUDGET_MB";
  throw budget_refused(msg.str());
}

void check_caps(Caps c) {
  if (c.N < 0 || c.U < 0 || c.V < 0) throw usage_error("caps must be non-negative");
}

ResidueRuleSet load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read rule file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return rules_from_json(buf.str());
  } catch (const std::exception& e) {
    throw usage_error("rule file " + path + ": " + e.what());
  }
}

void emit_reports(const RunConfig& cfg, const std::vector<ReplayReport>& reports, std::ostream& os) {
  if (cfg.format == "json") {
    write_json_lines(os, reports);
  } else if (cfg.format == "csv") {
    write_csv(os, reports);
  } else {
    write_summary(os, reports);
  }
}

void emit(const RunConfig& cfg, const CountTable& t, std::ostream& os) {
  if (cfg.format == "json") {
    write_json(os, t);
  } else if (cfg.format == "csv") {
    write_csv(os, t);
  } else {
    write_text(os, t);
  }
}

void emit(const RunConfig& cfg, const TriSeries& s, std::ostream& os) {
  if (cfg.format == "json") {
    write_json(os, s);
  } else if (cfg.format == "csv") {
    write_csv(os, s);
  } else {
    os << to_polynomial_string(s) << '\n';
  }
}

void require_symmetric(Caps c) {
  if (c.U != c.V) throw usage_error("identities with the (a, b) -> (b, aq) substitution need --U equal to --V");
}

int verify(const RunConfig& cfg, std::ostream& os) {
  const Caps caps = cfg.caps();
  check_caps(caps);
  std::vector<ReplayReport> reports;
  auto append = [&](std::vector<ReplayReport> rs) {
    reports.insert(reports.end(), std::make_move_iterator(rs.begin()), std::make_move_iterator(rs.end()));
  };
  const auto& t = cfg.target;

  if (t == "initials") {
    guard(cfg, caps, 16);
    Census census(caps);
    append(verify_initials(census));
  } else if (t == "ladder") {
    ColoredInt top(12, Color::b);
    if (!cfg.k.empty()) {
      if (cfg.k.find('_') != std::string::npos) {
        top = parse_k_colored(cfg.k, "verify ladder");
      } else {
        top = ColoredInt(2 * parse_k_range(cfg.k, {1, 1}).second + 2, Color::b);
      }
    }
    guard(cfg, caps, 2.0 * static_cast<double>(rank(top) + 1));
    Census census(caps);
    append(verify_ladder(GLadder::build(top, caps), census));
  } else if (t == "keyprop") {
    require_symmetric(caps);
    const auto [lo, hi] = parse_k_range(cfg.k, {1, 4});
    guard(cfg, caps, 8.0 * hi + 16);
    GLadder ladder = GLadder::build(ColoredInt(1, Color::ab), caps);
    for (int k = lo; k <= hi; ++k) append(verify_keyprop(k, ladder));
  } else if (t == "qdiff" || t == "eqd" || t == "proof-steps") {
    if (t == "proof-steps") require_symmetric(caps);
    const auto [lo, hi] = parse_k_range(cfg.k, {1, 4});
    guard(cfg, caps, 2.0 * (8.0 * hi + 24));
    Census census(caps);
    for (int k = lo; k <= hi; ++k) {
      if (t == "qdiff") append(verify_qdiff(k, census));
      if (t == "eqd") append(verify_eqd(k, census));
      if (t == "proof-steps") append(verify_proof_steps(k, census));
    }
  } else if (t == "product-limit") {
    guard(cfg, caps, 3);
    reports.push_back(verify_product_limit(caps));
  } else if (t == "refdilat" || t == "comp" || t == "newschur" || t == "refinement" || t == "siladic") {
    guard(cfg, {cfg.N, cfg.N, cfg.N}, 6);
    auto theorem = dilated_theorem(t);
    if (!cfg.rules_path.empty()) theorem = with_rules(std::move(theorem), load_rules(cfg.rules_path));
    append(verify_dilated_theorem(theorem, cfg.N));
  } else if (t == "schur" || t == "schur-product") {
    guard(cfg, {cfg.N, cfg.N, 3 * cfg.N}, 3);
    reports.push_back(verify_classical(t, cfg.N));
  } else if (t == "rr") {
    reports.push_back(verify_classical("rr0", cfg.N));
    reports.push_back(verify_classical("rr1", cfg.N));
  } else if (t == "horizon") {
    std::vector<DilationSpec> specs = {dilations::kSiladic, dilations::kCompanion, dilations::kSchur};
    if (!cfg.dilation.empty()) specs = {parse_dilation_spec(cfg.dilation)};
    for (const auto& d : specs) reports.push_back(verify_horizon_soundness(d, cfg.N));
  }
  emit_reports(cfg, reports, os);
  return exit_status(reports);
}

int counts(const RunConfig& cfg, std::ostream& os) {
  const Caps caps = cfg.caps();
  check_caps(caps);
  guard(cfg, caps, 2);
  const auto& t = cfg.target;
  std::optional<CountTable> table;
  if (t == "D") {
    table = enumerate_D(caps);
  } else if (t == "d") {
    table = enumerate_dk(parse_k_colored(cfg.k, "counts d"), caps);
  } else if (t == "e") {
    table = enumerate_ek(parse_k_colored(cfg.k, "counts e"), caps);
  } else if (t == "distinct-odd") {
    table = enumerate_residue_rule(rules::distinct_odd(), caps);
  } else if (t == "refdilat-C" || t == "comp-C" || t == "newschur-C") {
    const auto theorem = dilated_theorem(t.substr(0, t.size() - 2));
    table = enumerate_two_residue_distinct(theorem.modulus, theorem.residue_a, theorem.residue_b, caps);
  } else if (t == "rules") {
    if (cfg.rules_path.empty()) throw usage_error("counts rules needs --rules FILE");
    table = enumerate_residue_rule(load_rules(cfg.rules_path), caps);
  } else {
    const auto rules = cfg.rules_path.empty() ? dilated_theorem(t).rules : load_rules(cfg.rules_path);
    table = enumerate_residue_rule(rules, caps);
  }
  emit(cfg, *table, os);
  return exit_code::ok;
}

int series(const RunConfig& cfg, std::ostream& os) {
  const Caps caps = cfg.caps();
  check_caps(caps);
  const auto& t = cfg.target;
  if (t == "G") {
    const ColoredInt k = parse_k_colored(cfg.k, "series G");
    guard(cfg, caps, static_cast<double>(rank(k) + 1));
    emit(cfg, GLadder::build(k, caps).at(k), os);
  } else if (t == "product") {
    guard(cfg, caps, 2);
    emit(cfg, two_color_product(caps), os);
  } else if (t == "schur-product") {
    guard(cfg, caps, 2);
    emit(cfg, progression_product(3, 1, 2, caps), os);
  } else if (t == "D") {
    guard(cfg, caps, 2);
    emit(cfg, enumerate_D(caps).to_series(), os);
  } else if (t == "dilated-D") {
    const DilationSpec d = cfg.dilation.empty() ? dilations::kSiladic : parse_dilation_spec(cfg.dilation);
    guard(cfg, {caps.U, caps.V, std::max(1, d.M) * caps.N}, 3);
    // The support condition of the sharper horizon holds when every part grows or stays put.
    const bool grows = verify_horizon_soundness(d, std::max(caps.N, 1)).status == Status::pass;
    emit(cfg, dilate(enumerate_D(caps).to_series(), d, grows ? DilationHorizon::nondecreasing_support
                                                               : DilationHorizon::conservative),
         os);
  }
  return exit_code::ok;
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--N", cfg.N, "largest q-exponent")->check(CLI::NonNegativeNumber);
  sub->add_option("--U", cfg.U, "largest a-exponent (default N)")->check(CLI::NonNegativeNumber);
  sub->add_option("--V", cfg.V, "largest b-exponent (default N)")->check(CLI::NonNegativeNumber);
  sub->add_option("--k", cfg.k, "k, a range lo..hi, or a coloured integer such as 2_b");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  sub->add_option("--budget-mb", cfg.budget_mb, "memory budget in MB (default $SILADIC_BUDGET_MB or 1024)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--rules", cfg.rules_path, "rule set JSON file");
  sub->add_option("--dilation", cfg.dilation, "dilation M,m_a,m_b");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Coloured partition identities: enumeration, q-series replay and dilated theorem checks", "siladic"};
  app.require_subcommand(1, 1);
  struct Command {
    const char* name;
    const char* help;
    const std::vector<std::string>* targets;
  };
  const Command commands[] = {
      {"verify", "replay identities and theorems; exit 0 pass, 1 fail, 2 inconclusive", &kVerifyTargets},
      {"counts", "dump a count table", &kCountTargets},
      {"series", "dump a truncated series", &kSeriesTargets},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("target", cfg.target, "what to run")->required()->check(CLI::IsMember(*c.targets));
    add_common_options(sub, cfg);
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  std::ostringstream buffer;
  int status = exit_code::ok;
  try {
    if (cfg.command == "verify") {
      status = verify(cfg, buffer);
    } else if (cfg.command == "counts") {
      status = counts(cfg, buffer);
    } else {
      status = series(cfg, buffer);
    }
  } catch (const budget_refused& e) {
    err << "refused: " << e.what() << '\n';
    return exit_code::inconclusive;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const usage_error& e) {
    err << "usage: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const horizon_exceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return exit_code::inconclusive;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return exit_code::usage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
    out.flush();
    if (!out) return exit_code::io;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return exit_code::io;
    }
    file << buffer.str();
    file.close();
    if (!file) {
      err << "error: write to " << cfg.out_path << " failed\n";
      return exit_code::io;
    }
  }
  return status;
}

}  // namespace siladic
