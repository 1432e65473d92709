#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bdop/piecewise.hpp"

namespace bdop {

enum class ExperimentKind { kernel_normality, bv_limit, lupas_limit, beta_pdf, nu_table };

std::string experiment_name(ExperimentKind k);
std::optional<ExperimentKind> experiment_from_name(const std::string& name);

/// Uniform evaluation grid: points values from lo to hi inclusive.
struct GridSpec {
  double lo = -6.0;
  double hi = 6.0;
  int points = 4001;
};
std::vector<double> make_grid(const GridSpec& g);

/// Config file problem, carrying the 1-based line number (0 when the problem
/// is not tied to a line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed experiment configuration. Flat `key = value` text file; functions
/// use the mini-grammar
///   f = piece(0, 0.5): 0 ; piece(0.5, 1): 1 ; at(0.5): 1
/// where `piece(lo, hi): c0 c1 ...` gives polynomial coefficients on the
/// subinterval and `at(x): v` pins the value at a breakpoint.
///
/// For the beta-pdf experiment, x is the target ratio gamma and n_values are
/// the scales s.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kernel_normality;
  double x = 0.5;
  std::vector<int> n_values;
  std::optional<PiecewiseFunction> f;
  std::optional<PiecewiseFunction> w;
  GridSpec grid;
  std::uint64_t seed = 0;
  std::string output_path;  // empty: stdout
  long mc_samples = 0;
  double tolerance = 0.02;        // bv-limit final-error gate
  std::vector<double> r_values;   // nu-table jump ratios
};

/// Parses the mini-grammar for one function. Pieces must tile [0, 1].
PiecewiseFunction parse_function_spec(const std::string& spec, int line = 0);

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

/// Tabular result plus the per-criterion verdicts the subcommand reports.
struct ExperimentReport {
  std::string experiment;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  struct Check {
    std::string name;
    bool passed;
  };
  std::vector<Check> checks;
  double wall_seconds = 0.0;

  bool all_passed() const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_kernel_normality(const ExperimentConfig& cfg);
ExperimentReport run_bv_limit(const ExperimentConfig& cfg);
ExperimentReport run_lupas_limit(const ExperimentConfig& cfg);
ExperimentReport run_beta_pdf(const ExperimentConfig& cfg);
ExperimentReport run_nu_table(const ExperimentConfig& cfg);

/// CSV with a fixed header row and 17-significant-digit values, so doubles
/// round-trip exactly and identical runs produce identical bytes.
void write_csv(const ExperimentReport& report, std::ostream& out);

/// One line: experiment id, PASS/FAIL per check, wall time.
std::string summary_line(const ExperimentReport& report);

/// Row-level parallelism, from the BDOP_THREADS environment variable
/// (default 1). Results do not depend on the thread count.
int thread_count_from_env();

}  // namespace bdop
