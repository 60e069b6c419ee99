#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dunkl/constants.hpp"
#include "dunkl/fields.hpp"
#include "dunkl/root_system.hpp"

namespace dunkl {

enum class CheckStatus { Pass, Fail, SkippedUnsupported };

struct CheckRow {
  std::string field;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = true;
};

struct CheckResult {
  std::string name;
  std::string statement;  // one-line description of the inequality/identity
  CheckStatus status = CheckStatus::Pass;
  double lhs = 0.0;        // worst observed left-hand side
  double rhs = 0.0;        // bound it is compared against
  double ratio = 0.0;      // lhs / rhs (worst case)
  double tolerance = 0.0;
  double error_margin = 0.0;  // 2x accumulated quadrature error estimate
  std::string witness;        // field / point achieving the worst case
  std::string note;
  std::vector<CheckRow> rows;  // per-field detail (CSV table)
};

struct SuiteConfig {
  unsigned long seed = 42;
  double tol_scale = 1.0;
  int threads = 1;
  int mixture_fields = 3;   // seeded mixtures in the default family
  int probe_fields = 200;   // fields in the radial-supremum probe
  int t_points = 5;         // heat-semigroup time-grid points
  int level_points = 40;    // weak-norm level-grid points
  int refine_factor = 1;    // multiplies grid densities (stability probes)
  bool include_timing = false;
};

struct Report {
  std::string root_system;
  ConstantsReport constants;
  std::vector<CheckResult> results;
  unsigned long seed = 42;
  double wall_time_seconds = 0.0;  // serialized only when requested
  bool include_timing = false;
  bool all_passed() const;
};

/// Names of every registered check, in fixed registry order.
std::vector<std::string> check_registry();

CheckResult run_check(const std::string& check_name, const RootSystem& rs,
                      const SuiteConfig& config);

/// Runs the named checks (all of them when `names` is empty), in parallel when
/// config.threads > 1; results are assembled in registry order and are
/// numerically independent of the thread count.
Report run_suite(const RootSystem& rs, const SuiteConfig& config,
                 const std::vector<std::string>& names = {});

const char* check_status_name(CheckStatus s);

nlohmann::json report_to_json(const Report& report);
nlohmann::json constants_to_json(const ConstantsReport& constants);

/// One CSV table per check: columns field, lhs, rhs, ratio, status.
std::string check_result_csv(const CheckResult& result);

}  // namespace dunkl
