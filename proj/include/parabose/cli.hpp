#pragma once

// Front end: sweeps over (p, alpha) grids written as CSV/JSON data files, and
// the self-verification suites. The executable is a thin wrapper over run().

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabose/report.hpp"
#include "parabose/types.hpp"

namespace parabose::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2, kNumericFailure = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Settings a key=value config file may carry; command-line flags win.
struct Config {
  double tolerance = 1e-10;
  std::optional<int> truncation;  ///< fixed Fock dimension instead of the rule
  unsigned threads = 0;           ///< 0: hardware concurrency
};

/// Parses `key = value` lines; '#' starts a comment. Unknown keys and bad
/// values raise UsageError naming `source` and the line.
Config parse_config(std::istream& in, const std::string& source, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// "1,2,5-7" -> {1, 2, 5, 6, 7}.
std::vector<int> parse_orders(const std::string& text);
/// Comma list of reals; an entry may be written sqrt(x).
std::vector<double> parse_reals(const std::string& text);

struct SweepSpec {
  std::vector<ParaBoseOrder> orders;
  std::vector<Complex> alphas;
  std::vector<Method> methods;
};

/// Grid points in (p, alpha) order; the moduli x phases product, or the
/// re/im pairs (a length-1 list broadcasts).
std::vector<Complex> alphas_from_polar(const std::vector<double>& moduli, const std::vector<double>& phases);
std::vector<Complex> alphas_from_cartesian(const std::vector<double>& re, const std::vector<double>& im);

/// Runs job(i) for i < count on up to `threads` workers; results keep index
/// order and the first failure (by index) is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job);

/// 17 significant digits, round-trip exact.
std::string format_double(double x);

void write_distribution(const SweepSpec& spec, const Config& cfg, std::ostream& csv);
void write_moments(const SweepSpec& spec, const Config& cfg, std::ostream& json);
/// Returns false when some row has margin < -1e-10.
bool write_uncertainty(const SweepSpec& spec, const Config& cfg, std::ostream& csv);
void write_critical_alpha(const SweepSpec& spec, const Config& cfg, std::ostream& csv);

/// Largest |a - b| / max(|b|, 1e-2) over the fields of two reports; infinite
/// when only one of them defines Q.
double max_discrepancy(const MomentReport& a, const MomentReport& b);

enum class VerifyLevel { quick, full };

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SuiteResult> run_verify(VerifyLevel level, const Config& cfg, std::ostream& log);

/// Whole command line; returns the process exit code.
int run(int argc, char** argv);

}  // namespace parabose::cli
