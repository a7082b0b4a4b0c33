#pragma once

#include <string>
#include <vector>

#include "cfs/error_metrics.hpp"
#include "cfs/quadrature.hpp"
#include "cfs/samples.hpp"

namespace cfs {

enum class Method { Composite, Direct };

const char* to_string(Method method);

/// Configuration of one CLI study.
struct StudyConfig {
  enum class MethodSel { Composite, Direct, Both };
  enum class Format { Csv, Json, Both };

  std::vector<int> samples = {1};
  MethodSel method = MethodSel::Composite;
  int r = 3;
  std::vector<int> terms = {2, 3, 5, 10, 20, 30, 40};
  int grid = 0; // 0 = auto: 101 per axis (2D), 10001 points (1D)
  std::string out_dir = ".";
  Format format = Format::Csv;

  void validate() const; // throws ConfigError
  int effective_grid(bool two_dim) const { return grid > 0 ? grid : (two_dim ? 101 : 10001); }
};

/// One emitted table row.
struct ErrorRecord {
  int sample = 0;
  std::string method;
  int M = 0;
  int N = 0; // 0 for 1D
  std::string index_name;
  std::string subset;
  double value = 0.0; // NaN marks a degenerate normalizer
};

/// Scientific notation with 6 significant digits ("%.5E").
std::string format_sci(double v);

/// Builds the expansion for one (sample, method, truncation) and evaluates
/// the full error-index grid on an n x n sampling grid (M = N = truncation
/// for 2D samples). Components whose normalizer vanishes are stored as NaN.
ErrorReport compute_error_report(const SampleCase& sample, Method method, int truncation,
                                 int grid_n, SmoothnessOrder r, const QuadratureRule& rule = {});

/// All records of one report: singles, order-p aggregates (2D), up-to-p
/// aggregates, for every subset.
std::vector<ErrorRecord> records_from_report(const ErrorReport& report);

/// The Table-shaped comparison rows: up-to-4th aggregates, then order-5 and
/// order-6 components, per subset.
std::vector<ErrorRecord> comparison_records(const ErrorReport& report);

/// CLI commands (library level). Each returns the list of files written.
std::vector<std::string> run_approximate(const StudyConfig& config);
std::vector<std::string> run_convergence(const StudyConfig& config);
std::vector<std::string> run_compare(const StudyConfig& config);

/// Thread count: CFS_THREADS environment variable, default 1.
int thread_count_from_env();

/// Full command-line entry point; returns the process exit code
/// (0 success, 2 configuration error, 3 numerical failure).
int run_cli(int argc, const char* const* argv);

} // namespace cfs
