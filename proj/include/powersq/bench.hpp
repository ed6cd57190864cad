#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powersq/dense.hpp"
#include "powersq/solvers.hpp"

namespace powersq::bench {

/// One (matrix, algorithm) solve.
struct BenchRecord {
  std::size_t n = 0;
  Field mode = Field::real;
  Algorithm algorithm = Algorithm::power;
  std::size_t matrix_index = 0;
  /// Seed the matrix was generated from.
  std::uint64_t seed = 0;
  /// Seconds on a monotonic clock around the solve call only.
  double wall_time = 0.0;
  std::uint64_t iterations = 0;
  bool converged = false;
  double eigenvalue = 0.0;
  double residual = 0.0;
  /// |lambda - lambda_ref| / |lambda_ref| against the Jacobi reference; only
  /// present for n <= SuiteOptions::oracle_cutoff.
  std::optional<double> oracle_error;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct SuiteSize {
  std::size_t n = 0;
  std::size_t count = 0;
};

struct SuiteOptions {
  std::vector<SuiteSize> sizes;
  Field mode = Field::real;
  std::vector<Algorithm> algorithms{Algorithm::power, Algorithm::squared};
  /// tol and max_iter are used as given; seed is replaced per matrix.
  SolverConfig cfg;
  std::uint64_t base_seed = 0;
  unsigned workers = 1;
  std::size_t oracle_cutoff = 200;
};

/// n in {50, 100, 200} with {100, 50, 10} matrices.
std::vector<SuiteSize> desk_scale_sizes();
/// n = 100 x 300, 1000 x 5, 3000 x 1, 5000 x 1. Long-running.
std::vector<SuiteSize> full_scale_sizes();
/// Parses "n:count,n:count,...". Throws RejectedInput on malformed input.
std::vector<SuiteSize> parse_sizes(std::string_view text);

std::string_view mode_name(Field mode);
Field parse_mode(std::string_view name);

/// Seed of matrix `index` at dimension n.
std::uint64_t matrix_seed(std::uint64_t base_seed, std::size_t n, std::size_t index);

/// Generates every matrix from (base_seed, n, index), solves it with each
/// algorithm (same starting vector for all), and returns the records sorted
/// by (n, mode, algorithm, matrix_index). Solves run on `workers` threads;
/// everything except wall_time is independent of the worker count.
///
/// A solve that throws is recorded with converged == false and NaN value
/// columns. Throws RejectedInput for n < 2 or count < 1.
std::vector<BenchRecord> run_suite(const SuiteOptions& options);

struct SummaryRow {
  std::size_t n = 0;
  Field mode = Field::real;
  Algorithm algorithm = Algorithm::power;
  std::size_t matrices = 0;
  std::size_t converged = 0;
  double total_time = 0.0;
  double time_per_matrix = 0.0;
  double mean_iterations = 0.0;
  double median_iterations = 0.0;
  /// Squared rows only: total power time / total squared time for the same
  /// (n, mode), rounded to two significant figures.
  std::optional<double> speedup;
};

/// One row per (n, mode, algorithm) present. Cells whose counterpart
/// algorithm is missing get no speedup and a warning on `diag`; an empty
/// input yields no rows and a warning.
std::vector<SummaryRow> summarize(std::span<const BenchRecord> records, std::ostream& diag);

/// Speedups from the published real/complex timing tables, when one exists
/// for this (n, mode).
std::optional<double> published_speedup(std::size_t n, Field mode);

double round_significant(double x, int digits);

enum class HistogramScale { linear, log2 };

std::string_view scale_name(HistogramScale scale);
HistogramScale parse_scale(std::string_view name);

struct HistogramData {
  /// Linear: unit-width integer bins over iteration counts. Log2: bins over
  /// the exponent floor(log2(iterations)).
  std::vector<double> bin_edges;
  std::vector<std::size_t> counts;
  HistogramScale scale = HistogramScale::linear;
};

/// Histogram of iteration counts of the converged records of `algorithm`.
/// Throws EmptyData if there are none.
HistogramData histogram(std::span<const BenchRecord> records, Algorithm algorithm,
                        HistogramScale scale);

// CSV: header row, comma separated, doubles in shortest round-trip form,
// booleans as true/false, absent oracle_error as an empty field.

inline constexpr std::string_view kRecordHeader =
    "n,mode,algorithm,matrix_index,seed,wall_time,iterations,converged,eigenvalue,residual,"
    "oracle_error";

std::string format_double(double x);
void write_records_csv(std::ostream& out, std::span<const BenchRecord> records);
/// Throws RejectedInput on a bad header or malformed row.
std::vector<BenchRecord> read_records_csv(std::istream& in);
void write_histogram_csv(std::ostream& out, const HistogramData& hist);

/// JSON summary document (rows plus run metadata and published speedups).
std::string summary_json(std::span<const SummaryRow> rows, const SuiteOptions& options);

}  // namespace powersq::bench
