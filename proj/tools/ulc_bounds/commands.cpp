#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "json_io.hpp"
#include "ulc/ulc.hpp"

namespace ulc::cli {

using nlohmann::json;

namespace {

constexpr double kBoundSlack = 1e-12;

/// Minimal CSV table; every cell is already formatted.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  [[nodiscard]] std::string str() const {
    std::ostringstream out;
    write_line(out, header_);
    for (const auto& row : rows_) {
      write_line(out, row);
    }
    return out.str();
  }

 private:
  static void write_line(std::ostringstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << cells[i];
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string format_bool(bool value) { return value ? "true" : "false"; }

std::string format_int(std::int64_t value) { return std::to_string(value); }

json optional_to_json(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }

std::string render(const RunConfig& config, const json& report, const CsvTable& table) {
  return config.format == OutputFormat::json ? report.dump(2) + "\n" : table.str();
}

std::vector<double> grid_or(const std::vector<double>& grid, std::vector<double> fallback) {
  return grid.empty() ? fallback : grid;
}

void require_nonnegative_grid(const std::vector<double>& grid) {
  if (grid.empty()) {
    throw InputError("--t-grid must not be empty");
  }
  for (double t : grid) {
    if (!std::isfinite(t) || t < 0.0) {
      throw InputError("--t-grid entries must be finite and nonnegative, got " + format_double(t));
    }
  }
}

DiscretePmf load_pmf(const RunConfig& config) {
  if (!config.input) {
    throw InputError("--input PATH with a pmf is required");
  }
  return pmf_from_json(read_json_file(*config.input));
}

/// The mean driving mean-only commands: --mean, or the mean of --input.
double resolve_mean(const RunConfig& config, const std::optional<DiscretePmf>& pmf) {
  const double mu = pmf ? mean(*pmf) : *config.mean;
  if (!std::isfinite(mu) || mu <= 0.0) {
    throw InputError("the mean must be positive, got " + format_double(mu));
  }
  return mu;
}

// --- check -----------------------------------------------------------------

CommandResult run_check(const RunConfig& config) {
  const DiscretePmf pmf = load_pmf(config);
  const auto lc_violation = first_log_concavity_violation(pmf);
  const auto ulc_violation = first_ulc_violation(pmf);
  const double mu = mean(pmf);
  const double var = variance(pmf);

  json report{{"config", config_to_json(config)},
              {"pmf", pmf_to_json(pmf)},
              {"log_concave", !lc_violation},
              {"ulc", !ulc_violation},
              {"first_log_concavity_violation", lc_violation ? json(*lc_violation) : json(nullptr)},
              {"first_ulc_violation", ulc_violation ? json(*ulc_violation) : json(nullptr)},
              {"mean", mu},
              {"variance", var}};
  CsvTable table({"log_concave", "ulc", "first_log_concavity_violation", "first_ulc_violation", "mean", "variance"});
  table.add_row({format_bool(!lc_violation), format_bool(!ulc_violation),
                 lc_violation ? format_int(*lc_violation) : "", ulc_violation ? format_int(*ulc_violation) : "",
                 format_double(mu), format_double(var)});

  CommandResult result{ulc_violation ? kExitCheckFailed : kExitOk, render(config, report, table), ""};
  result.summary = ulc_violation ? "ulc: false, first_violation: n=" + format_int(*ulc_violation) : "ulc: true";
  if (!ulc_violation && lc_violation) {
    spdlog::warn("ulc but not log-concave at n={}; tolerance mismatch", *lc_violation);
  }
  return result;
}

// --- bound -----------------------------------------------------------------

CommandResult run_bound(const RunConfig& config) {
  if (config.input && config.mean) {
    throw InputError("give either --input or --mean, not both");
  }
  if (!config.input && !config.mean) {
    throw InputError("bound needs --input PATH or --mean FLOAT");
  }
  if (config.c_values.size() > 1) {
    throw InputError("bound accepts at most one --c value");
  }
  const std::optional<double> c =
      config.c_values.empty() ? std::nullopt : std::optional<double>(config.c_values.front());
  if (c && !(*c > 0.0 && std::isfinite(*c))) {
    throw InputError("--c must be positive");
  }
  const auto grid = grid_or(config.t_grid, {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0});
  require_nonnegative_grid(grid);

  std::optional<DiscretePmf> pmf;
  if (config.input) {
    pmf = load_pmf(config);
    if (!is_ultra_log_concave(*pmf)) {
      spdlog::warn("input pmf is not ultra log-concave; the bounds need not hold");
    }
  }
  const double mu = resolve_mean(config, pmf);

  json rows = json::array();
  CsvTable table({"t", "side", "exact", "theorem1", "corollary2", "johnson_c", "johnson"});
  bool holds = true;
  for (double t : grid) {
    for (TailSide side : {TailSide::upper, TailSide::lower}) {
      const TailBoundReport r = pmf ? tail_bound_report(*pmf, t, side, c) : tail_bound_report(mu, t, side, c);
      const char* side_name = side == TailSide::upper ? "upper" : "lower";
      if (r.exact && *r.exact > r.bennett + kBoundSlack) {
        holds = false;
        spdlog::error("{} tail at t={} is {} above the bound {}", side_name, t, *r.exact, r.bennett);
      }
      rows.push_back({{"t", r.t},
                      {"side", side_name},
                      {"exact", optional_to_json(r.exact)},
                      {"theorem1", r.bennett},
                      {"corollary2", r.relaxed},
                      {"johnson", r.c_log_concave
                                      ? json{{"c", r.c_log_concave->c}, {"value", r.c_log_concave->value}}
                                      : json(nullptr)}});
      table.add_row({format_double(r.t), side_name, format_optional(r.exact), format_double(r.bennett),
                     format_double(r.relaxed), r.c_log_concave ? format_double(r.c_log_concave->c) : "",
                     r.c_log_concave ? format_double(r.c_log_concave->value) : ""});
    }
  }
  json report{{"config", config_to_json(config)}, {"mean", mu}, {"holds", holds}, {"rows", rows}};
  return {holds ? kExitOk : kExitCheckFailed, render(config, report, table),
          "bound: " + std::to_string(rows.size()) + " rows, " + (holds ? "all bounds hold" : "BOUND VIOLATED")};
}

// --- verify-lemma ----------------------------------------------------------

struct FamilyResult {
  MgfDominationReport mgf;
  double f_at_one;
  double f_prime_at_one;
  double min_f_second;
  bool psi_log_concave;
  bool holds;
};

FamilyResult verify_family(const ExtremizerParams& params, const std::vector<double>& t_grid) {
  constexpr int kYPoints = 200;
  FamilyResult r{verify_mgf_domination(params, t_grid, 1e-9), ulc::f_value(params, 1.0), ulc::f_prime(params, 1.0),
                 std::numeric_limits<double>::infinity(), true, true};
  for (int i = 0; i < kYPoints; ++i) {
    const double y = 0.01 * std::pow(2000.0, static_cast<double>(i) / (kYPoints - 1));
    r.min_f_second = std::min(r.min_f_second, f_second(params, y));
  }
  for (double x : {0.1, 1.0, 10.0, params.tilt}) {
    r.psi_log_concave = r.psi_log_concave && psi_log_concavity_check(params.k, params.l, x);
  }
  r.holds = r.mgf.holds && std::abs(r.f_at_one) <= 1e-10 && std::abs(r.f_prime_at_one) <= 1e-10 &&
            r.min_f_second >= -1e-10 && r.psi_log_concave;
  return r;
}

CommandResult run_verify_lemma(const RunConfig& config) {
  const std::vector<double> tilts =
      config.tilts.empty() ? std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0, 10.0} : config.tilts;
  const std::vector<double> t_grid = grid_or(config.t_grid, default_t_grid());
  for (double t : t_grid) {
    if (!std::isfinite(t)) {
      throw InputError("--t-grid entries must be finite");
    }
  }
  std::vector<ExtremizerParams> families;
  const std::int64_t k_lo = config.k.value_or(0);
  const std::int64_t k_hi = config.k.value_or(10);
  for (double p : tilts) {
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
      std::int64_t l_lo = config.l.value_or(k);
      std::int64_t l_hi = config.l.value_or(30);
      if (config.diagonal) {
        l_lo = l_hi = k;
      }
      for (std::int64_t l = std::max(l_lo, k); l <= l_hi; ++l) {
        ExtremizerParams params{p, k, l};
        try {
          params.validate();
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
        families.push_back(params);
      }
    }
  }
  if (families.empty()) {
    throw InputError("the (p, k, l) ranges select no families; need 0 <= k <= l");
  }

  json reports = json::array();
  CsvTable table({"p", "k", "l", "worst_gap", "worst_t", "mgf_holds", "f_at_one", "f_prime_at_one", "min_f_second",
                  "psi_log_concave", "holds"});
  bool holds = true;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (const auto& params : families) {
    const FamilyResult r = verify_family(params, t_grid);
    holds = holds && r.holds;
    worst_gap = std::max(worst_gap, r.mgf.worst_gap);
    if (!r.holds) {
      spdlog::error("check failed for p={} k={} l={}", params.tilt, params.k, params.l);
    }
    reports.push_back({{"params", {{"p", params.tilt}, {"k", params.k}, {"l", params.l}}},
                       {"worst_gap", r.mgf.worst_gap},
                       {"worst_t", r.mgf.worst_t},
                       {"mgf_holds", r.mgf.holds},
                       {"f_at_one", r.f_at_one},
                       {"f_prime_at_one", r.f_prime_at_one},
                       {"min_f_second", r.min_f_second},
                       {"psi_log_concave", r.psi_log_concave},
                       {"holds", r.holds}});
    table.add_row({format_double(params.tilt), format_int(params.k), format_int(params.l),
                   format_double(r.mgf.worst_gap), format_double(r.mgf.worst_t), format_bool(r.mgf.holds),
                   format_double(r.f_at_one), format_double(r.f_prime_at_one), format_double(r.min_f_second),
                   format_bool(r.psi_log_concave), format_bool(r.holds)});
  }
  spdlog::info("verify-lemma: {} families, {} t-points", families.size(), t_grid.size());
  json report{{"config", config_to_json(config)},
              {"grid", t_grid},
              {"families", families.size()},
              {"worst_gap", worst_gap},
              {"holds", holds},
              {"reports", reports}};
  return {holds ? kExitOk : kExitCheckFailed, render(config, report, table),
          "verify-lemma: " + std::to_string(families.size()) + " families, worst gap " + format_double(worst_gap) +
              (holds ? ", all checks hold" : ", CHECK FAILED")};
}

// --- intrinsic -------------------------------------------------------------

CommandResult run_intrinsic(const RunConfig& config) {
  if (!config.input) {
    throw InputError("--input PATH with a body is required");
  }
  const ConvexBody body = body_from_json(read_json_file(*config.input));
  const IntrinsicVolumeProfile profile = intrinsic_volumes(body);
  const double root_n = std::sqrt(static_cast<double>(profile.dim));
  std::vector<double> grid = config.t_grid;
  if (grid.empty()) {
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
      if (t <= root_n) {
        grid.push_back(t);
      }
    }
  }
  require_nonnegative_grid(grid);
  for (double t : grid) {
    if (t > root_n) {
      throw InputError("t=" + format_double(t) + " exceeds sqrt(n)=" + format_double(root_n));
    }
  }
  const DiscretePmf z = zk_pmf(profile);

  json rows = json::array();
  CsvTable table({"t", "deviation", "mean", "upper_exact", "lower_exact", "exact", "bound", "upper_trivial",
                  "upper_bound", "lower_bound", "small_mean_bound", "holds"});
  bool holds = true;
  for (double t : grid) {
    const TwoSidedTailCheck c = two_sided_tail_check(profile, t);
    holds = holds && c.holds;
    rows.push_back({{"t", c.t},
                    {"deviation", c.deviation},
                    {"mean", c.mean},
                    {"upper_exact", c.upper_exact},
                    {"lower_exact", c.lower_exact},
                    {"exact", c.exact},
                    {"bound", c.bound},
                    {"upper_trivial", c.upper_trivial},
                    {"upper_bound", c.upper_bound},
                    {"lower_bound", c.lower_bound},
                    {"small_mean_bound", optional_to_json(c.small_mean_bound)},
                    {"holds", c.holds}});
    table.add_row({format_double(c.t), format_double(c.deviation), format_double(c.mean),
                   format_double(c.upper_exact), format_double(c.lower_exact), format_double(c.exact),
                   format_double(c.bound), format_bool(c.upper_trivial), format_double(c.upper_bound),
                   format_double(c.lower_bound), format_optional(c.small_mean_bound), format_bool(c.holds)});
  }
  json report{{"config", config_to_json(config)},
              {"body", body_to_json(body)},
              {"dim", profile.dim},
              {"volumes", profile.volumes},
              {"wills", profile.wills},
              {"normalized", profile.normalized},
              {"zk", pmf_to_json(z)},
              {"mean", mean(z)},
              {"variance", variance(z)},
              {"holds", holds},
              {"rows", rows}};
  return {holds ? kExitOk : kExitCheckFailed, render(config, report, table),
          "intrinsic: n=" + format_int(profile.dim) + ", " + std::to_string(rows.size()) + " rows, " +
              (holds ? "all bounds hold" : "BOUND VIOLATED")};
}

// --- compare ---------------------------------------------------------------

CommandResult run_compare(const RunConfig& config) {
  if (config.input && config.mean) {
    throw InputError("give either --input or --mean, not both");
  }
  if (!config.input && !config.mean) {
    throw InputError("compare needs --mean FLOAT or --input PATH");
  }
  std::optional<DiscretePmf> pmf;
  if (config.input) {
    pmf = load_pmf(config);
  }
  const double mu = resolve_mean(config, pmf);
  for (double c : config.c_values) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw InputError("--c values must be positive, got " + format_double(c));
    }
    if (c > (1.0 / mu) * (1.0 + 1e-12)) {
      throw InputError("c=" + format_double(c) + " exceeds 1/mean=" + format_double(1.0 / mu));
    }
  }
  std::vector<double> grid = config.t_grid;
  if (grid.empty()) {
    for (int i = 1; i <= 20; ++i) {
      grid.push_back(5.0 * mu * i / 20.0);
    }
  }
  require_nonnegative_grid(grid);

  std::vector<std::string> header{"t", "theorem1"};
  for (double c : config.c_values) {
    header.push_back("johnson_c=" + format_double(c));
  }
  CsvTable table(std::move(header));
  json rows = json::array();
  bool holds = true;
  for (double t : grid) {
    const double ours = bennett_upper_bound(mu, t);
    json johnson = json::array();
    std::vector<std::string> cells{format_double(t), format_double(ours)};
    for (double c : config.c_values) {
      const double theirs = c_log_concave_bound(c, t);
      if (ours > theirs + kBoundSlack) {
        holds = false;
        spdlog::error("at t={} the bound {} exceeds the c={} bound {}", t, ours, c, theirs);
      }
      johnson.push_back({{"c", c}, {"value", theirs}});
      cells.push_back(format_double(theirs));
    }
    rows.push_back({{"t", t}, {"theorem1", ours}, {"johnson", johnson}});
    table.add_row(std::move(cells));
  }
  json report{{"config", config_to_json(config)}, {"mean", mu}, {"c", config.c_values}, {"holds", holds},
              {"rows", rows}};
  return {holds ? kExitOk : kExitCheckFailed, render(config, report, table),
          "compare: " + std::to_string(rows.size()) + " rows, " +
              (holds ? "Poisson-type bound never above the c-bounds" : "ORDERING VIOLATED")};
}

// --- sweep -----------------------------------------------------------------

CommandResult run_sweep(const RunConfig& config) {
  if (config.samples < 1) {
    throw InputError("--samples must be at least 1");
  }
  if (config.max_support < 0) {
    throw InputError("--max-support must be nonnegative");
  }
  json rows = json::array();
  CsvTable table({"seed", "offset", "last", "mean", "variance", "ulc", "worst_tail_gap", "variance_holds", "holds"});
  std::int64_t failures = 0;
  double worst_overall = -std::numeric_limits<double>::infinity();
  for (std::int64_t i = 0; i < config.samples; ++i) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
    const DiscretePmf pmf = random_ulc(seed, config.max_support);
    const double mu = mean(pmf);
    const double var = variance(pmf);
    const bool ulc = is_ultra_log_concave(pmf);
    std::optional<double> worst_gap;
    if (mu > 0.0) {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::int64_t n = 0; n <= pmf.last() + 1; ++n) {
        const auto x = static_cast<double>(n);
        if (x >= mu) {
          worst = std::max(worst, upper_tail(pmf, x - mu) - bennett_upper_bound(mu, x - mu));
        }
        if (x <= mu) {
          worst = std::max(worst, lower_tail(pmf, mu - x) - bennett_lower_bound(mu, mu - x));
        }
      }
      worst_gap = worst;
      worst_overall = std::max(worst_overall, worst);
    }
    const bool variance_holds = var <= mu + 1e-12;
    const bool holds = ulc && variance_holds && (!worst_gap || *worst_gap <= 1e-10);
    failures += !holds;
    spdlog::debug("seed {}: support [{}, {}], mean {}, holds {}", seed, pmf.offset(), pmf.last(), mu, holds);
    rows.push_back({{"seed", seed},
                    {"offset", pmf.offset()},
                    {"last", pmf.last()},
                    {"mean", mu},
                    {"variance", var},
                    {"ulc", ulc},
                    {"worst_tail_gap", optional_to_json(worst_gap)},
                    {"variance_holds", variance_holds},
                    {"holds", holds}});
    table.add_row({std::to_string(seed), format_int(pmf.offset()), format_int(pmf.last()), format_double(mu),
                   format_double(var), format_bool(ulc), format_optional(worst_gap), format_bool(variance_holds),
                   format_bool(holds)});
  }
  json report{{"config", config_to_json(config)},
              {"failures", failures},
              {"worst_tail_gap",
               std::isfinite(worst_overall) ? json(worst_overall) : json(nullptr)},
              {"holds", failures == 0},
              {"rows", rows}};
  return {failures == 0 ? kExitOk : kExitCheckFailed, render(config, report, table),
          "sweep: " + std::to_string(config.samples) + " samples, " + std::to_string(failures) + " failures"};
}

}  // namespace

const char* command_name(Command command) {
  switch (command) {
    case Command::check: return "check";
    case Command::bound: return "bound";
    case Command::verify_lemma: return "verify-lemma";
    case Command::intrinsic: return "intrinsic";
    case Command::compare: return "compare";
    case Command::sweep: return "sweep";
  }
  return "unknown";
}

json config_to_json(const RunConfig& config) {
  auto opt = [](const auto& value) { return value ? json(*value) : json(nullptr); };
  return {{"command", command_name(config.command)},
          {"input", opt(config.input)},
          {"mean", opt(config.mean)},
          {"t_grid", config.t_grid},
          {"c", config.c_values},
          {"seed", config.seed},
          {"samples", config.samples},
          {"format", config.format == OutputFormat::json ? "json" : "csv"},
          {"output", opt(config.output)},
          {"p", config.tilts},
          {"k", opt(config.k)},
          {"l", opt(config.l)},
          {"diagonal", config.diagonal},
          {"max_support", config.max_support}};
}

CommandResult run_command(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::check: return run_check(config);
      case Command::bound: return run_bound(config);
      case Command::verify_lemma: return run_verify_lemma(config);
      case Command::intrinsic: return run_intrinsic(config);
      case Command::compare: return run_compare(config);
      case Command::sweep: return run_sweep(config);
    }
    throw InputError("unknown command");
  } catch (const InputError& e) {
    return {kExitInputError, "", std::string("error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    return {kExitInputError, "", std::string("error: ") + e.what()};
  } catch (const std::domain_error& e) {
    return {kExitInputError, "", std::string("error: ") + e.what()};
  }
}

namespace {

void configure_logging() {
  auto logger = std::make_shared<spdlog::logger>("ulc-bounds", std::make_shared<spdlog::sinks::stderr_sink_mt>());
  logger->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("ULC_BOUNDS_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  spdlog::set_default_logger(std::move(logger));
}

void add_common_options(CLI::App& sub, RunConfig& config, std::string& format) {
  sub.add_option("--input", config.input, "PMF or body JSON file");
  sub.add_option("--mean", config.mean, "Mean, for mean-only bounds");
  sub.add_option("--t-grid", config.t_grid, "Comma-separated deviations t")->delimiter(',');
  sub.add_option("--c", config.c_values, "Comma-separated c values for the c-log-concave bound")->delimiter(',');
  sub.add_option("--seed", config.seed, "Base seed for sampled pmfs");
  sub.add_option("--samples", config.samples, "Number of sampled pmfs")->check(CLI::PositiveNumber);
  sub.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--output", config.output, "Write the report here (atomically) instead of stdout");
}

}  // namespace

int run_main(int argc, const char* const* argv) {
  configure_logging();

  CLI::App app{"Concentration bounds for ultra log-concave distributions", "ulc-bounds"};
  app.require_subcommand(1, 1);
  RunConfig config;
  std::string format = "json";

  struct Entry {
    Command command;
    const char* description;
  };
  const Entry entries[] = {
      {Command::check, "Test a pmf for log-concavity and ultra log-concavity"},
      {Command::bound, "Tabulate exact tails and tail bounds over a t-grid"},
      {Command::verify_lemma, "Verify MGF domination on the extremizer family"},
      {Command::intrinsic, "Intrinsic volumes of a convex body and two-sided tail checks"},
      {Command::compare, "Compare the Poisson-type bound with c-log-concave bounds"},
      {Command::sweep, "Check tails and variance over seeded random ULC pmfs"},
  };
  std::vector<std::pair<CLI::App*, Command>> subcommands;
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(command_name(entry.command), entry.description);
    add_common_options(*sub, config, format);
    subcommands.emplace_back(sub, entry.command);
  }
  CLI::App* verify = subcommands[2].first;
  verify->add_option("--p", config.tilts, "Comma-separated tilt parameters")->delimiter(',');
  verify->add_option("--k", config.k, "Lower support end (default: sweep 0..10)");
  verify->add_option("--l", config.l, "Upper support end (default: sweep k..30)");
  verify->add_flag("--diagonal", config.diagonal, "Only k = l (point masses)");
  subcommands[5].first->add_option("--max-support", config.max_support, "Largest support point of sampled pmfs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }
  for (const auto& [sub, command] : subcommands) {
    if (sub->parsed()) {
      config.command = command;
    }
  }
  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  const CommandResult result = run_command(config);
  if (!result.summary.empty()) {
    std::cerr << result.summary << '\n';
  }
  if (result.exit_code == kExitInputError) {
    return result.exit_code;
  }
  try {
    if (config.output) {
      write_file_atomically(*config.output, result.report);
    } else {
      std::cout << result.report << std::flush;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return result.exit_code;
}

}  // namespace ulc::cli
