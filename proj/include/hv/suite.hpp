#pragma once

#include "hv/config.hpp"
#include "hv/probes.hpp"

#include <cstdint>
#include <random>

namespace hv {

inline constexpr const char* kToolVersion = "0.1.0";

struct GlobalConfig {
  ModeRange modes{-4, 4};
  long degree_cap = 4;
  long samples = 25;
  std::uint64_t seed = 0;
  std::size_t rewrite_budget = default_rewrite_budget();
};

/// Seeded sampler of small rationals; the reduction to ranges is done here
/// so that streams are identical across standard libraries.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi);
  /// numerator in [-9, 9], denominator in [1, 5]
  Rational rational();
  Rational nonzero_rational();
  Polynomial polynomial(long degree);

private:
  std::mt19937_64 gen_;
};

struct CheckSpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct SuiteSpec {
  std::vector<CheckSpec> checks;
  GlobalConfig global;
};

/// Catalog of check names accepted in suites and by `hv identity`.
const std::vector<std::string>& check_catalog();

SuiteSpec load_spec(const nlohmann::json& doc);
SuiteSpec load_spec_text(const std::string& text);
SuiteSpec load_spec_file(const std::string& path);

/// Runs one catalog check. `index` selects an independent sampler stream.
/// Throws ConfigError on bad parameters; resource errors propagate.
CheckReport run_check(const CheckSpec& check, const GlobalConfig& global, std::size_t index = 0,
                      const std::string& path = "params");

struct CheckResult {
  std::string name;
  std::optional<CheckReport> report;
  std::optional<std::string> error;
  double seconds = 0;
};

struct ReportDocument {
  SuiteSpec spec;
  std::vector<CheckResult> results;
  std::size_t pass = 0, fail = 0, inconclusive = 0, errors = 0;
};

ReportDocument run_suite(const SuiteSpec& spec);

enum class ReportFormat { Json, Text };

/// JSON output has sorted keys and omits wall-clock times unless
/// `with_timings` is set, so identical inputs give identical bytes.
std::string emit_report(const ReportDocument& doc, ReportFormat format, bool with_timings = false);

/// 0 iff there are no failures and no check-level errors.
int exit_code(const ReportDocument& doc);

nlohmann::json suite_echo(const SuiteSpec& spec);

} // namespace hv
