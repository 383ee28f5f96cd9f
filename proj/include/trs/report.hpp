#pragma once
// Batch verification runner: key=value run configuration, dispatch of the
// named checks over parameter grids, and deterministic JSON/CSV reports.

#include "trs/deephole.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trs {

using Json = nlohmann::json;

inline constexpr const char* tool_version = "trstool 1.0.0";

// Configuration or usage problems; the CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::vector<std::string> checks;

  // Parameter grid selectors.  Absent k/l mean "all valid values"; eta is
  // "all", "first2", or a decimal canonical element index.
  std::string eval_set = "units";  // units | full | both
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> l;
  std::string eta = "all";

  std::uint64_t budget = 10'000'000;         // subset evaluations per scan
  std::uint64_t coset_budget = 200'000'000;  // syndrome-space size cap
  std::uint64_t time_budget_ms = 0;          // wall clock, 0 = unlimited
  std::string mode = "exhaustive";           // exhaustive | sampled
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0xC0FFEE;

  std::string output;        // JSON file path, empty = stdout only
  std::string csv;           // CSV file path, empty = no CSV
  std::uint32_t workers = 0; // 0 = available parallelism
  bool timings = false;      // include runtime_ms in rows

  bool operator==(const RunConfig&) const = default;
};

// Factors q into (p, m); throws ConfigError unless q is a prime power.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

// The theorem ids `verify` accepts, in canonical dispatch order.
const std::vector<std::string>& known_checks();

// key = value file with # comments and blank lines; unknown keys and bad
// values raise ConfigError naming the line.  Defaults as in RunConfig.
RunConfig load_config(const std::string& path);
// Canonical serialization; load_config(save_config(c)) == c.
std::string save_config(const RunConfig& cfg);
// Grid/budget/mode sanity; throws ConfigError.
void validate_config(const RunConfig& cfg);

struct CheckRow {
  std::string theorem;
  Json params = Json::object();
  std::string status;  // pass | fail | vacuous | sampled-consistent
  Json witnesses = Json::array();
  Json counts = Json::object();
  double runtime_ms = 0.0;
};

struct Report {
  std::string version = tool_version;
  RunConfig config;
  std::vector<CheckRow> rows;
  std::uint64_t pass = 0, fail = 0, vacuous = 0, sampled_consistent = 0;
};

// Runs every requested check over the configured grid.  Throws ConfigError
// for invalid configs and runtime_error when a budget is exceeded.
Report run(const RunConfig& cfg);

// Sorted-key JSON; runtime_ms appears only when cfg.timings is set, so
// reports are byte-identical across runs and worker counts.
Json report_json(const Report& rep);
// Flat projection: theorem,q,k,l,eta,status per row.
std::string report_csv(const Report& rep);

// 0 when every row passed or was vacuous, 1 otherwise.
int report_exit_code(const Report& rep);

// TRS_WORKERS overrides cfg.workers; applies the count to OpenMP and
// returns it (0 means "leave the runtime default").
std::uint32_t apply_workers(const RunConfig& cfg);

}  // namespace trs
