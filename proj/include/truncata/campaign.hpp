#pragma once

#include <string>
#include <vector>

#include "truncata/ratfunc.hpp"
#include "truncata/rational.hpp"
#include "truncata/report.hpp"

namespace truncata {

inline constexpr const char* kToolName = "truncata";
inline constexpr const char* kVersion = "1.0.0";

/// One verification campaign: which algebra, which checks, over which module
/// parameters, at which window order.
struct CampaignConfig {
  std::string algebra;  // "yangian" | "qaffine"
  std::vector<std::string> checks;
  bool run_all = false;

  // Yangian-side module parameters (zipped pairwise; alphas2/betas2 give the
  // second tensor factor where a check needs one).
  std::vector<Rational> alphas, betas, alphas2, betas2;
  // Quantum-side module parameters.
  std::vector<long> ns, ms;
  std::vector<RatFuncQ> as, bs;

  long order = 12;
  bool order_explicit = false;  // set by --order or a config-file "order" key
  std::string convention = "auto";  // auto | paper | twisted
  std::string emit = "text";        // text | json
  std::string out_path;
  bool include_timings = false;
};

struct CampaignReport {
  std::string version;
  CampaignConfig config;
  std::vector<Report> reports;
  std::vector<double> wall_ms;  // parallel to reports

  long passed() const;
  long failed() const;
  bool all_pass() const { return failed() == 0; }
};

/// Check names registered for an algebra.
const std::vector<std::string>& known_checks(const std::string& algebra);

/// Flat key = value file; '#' starts a comment.
CampaignConfig load_config_file(const std::string& path);

/// Runs every requested check over the parameter grid. Throws ConfigError on
/// invalid configuration; check failures are recorded in the reports.
CampaignReport run_campaign(const CampaignConfig& config);

/// Canonical machine-readable form (stable key order; timings only when the
/// config opts in, so identical configs give byte-identical output).
std::string emit_json(const CampaignReport& report);

/// Human summary table.
std::string emit_text(const CampaignReport& report);

/// 0 when every check passed, 1 otherwise.
int campaign_exit_code(const CampaignReport& report);

}  // namespace truncata
