#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hhbounds/builtins.hpp"

namespace hh {

/// Parsed verification campaign: the cartesian grid of functions,
/// intervals, m values, exponents and bound families to check.
struct CampaignConfig {
  std::vector<BuiltinSpec> functions;
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> m_values;
  std::vector<double> exponents;  // q values; conjugate p derived per point
  std::vector<std::string> families;
  double quad_tol = 1e-10;
  double slack_tol = 1e-8;
  double cert_tol = 1e-9;
  int cert_grid = 33;
  std::string out_path = "report.csv";
  std::string format = "csv";  // csv | json
};

/// Loads and validates a JSON campaign document. Messages name the
/// offending field. Throws ConfigError.
CampaignConfig parse_config_text(const std::string& text);
CampaignConfig load_config_file(const std::string& path);

enum class RecordStatus { pass, fail, skipped, errored };

const char* to_string(RecordStatus s);

/// One verified (or skipped/errored) grid point. For the four-variant
/// families the variants are the bound values with their prefactors, lhs
/// is the gap being bounded and slack = minimum - lhs. The sandwich,
/// product, lemma1 and baselines families document their column mapping
/// in the README.
struct VerificationRecord {
  std::string function;
  double a = 0.0;
  double b = 0.0;
  double m = 1.0;
  double q = 1.0;
  std::optional<double> p;
  std::string family;
  std::array<std::optional<double>, 4> variants;
  std::optional<double> minimum;
  std::optional<int> argmin;
  std::optional<double> lhs;
  std::optional<double> slack;
  RecordStatus status = RecordStatus::errored;
  std::string reason;               // skip/error slug, empty otherwise
  std::string certificates;         // summary of hypothesis checks
  std::string derivative_mode;      // analytic | finite_difference
};

struct CampaignSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t errored = 0;
};

/// Runs the full grid. Certification failures become skipped records with
/// a reason; per-point evaluation failures become errored records; the
/// rest carry holds = (slack >= -slack_tol). Records come back sorted by
/// (function, a, b, m, q, family).
std::vector<VerificationRecord> run_campaign(const CampaignConfig& config);

CampaignSummary summarize(const std::vector<VerificationRecord>& records);

}  // namespace hh
