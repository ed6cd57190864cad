// powersq: dominant-eigenpair solves, top-k extraction, and the benchmark
// suite on seeded random self-adjoint matrices.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "powersq/bench.hpp"
#include "powersq/deflation.hpp"
#include "powersq/errors.hpp"
#include "powersq/randgen.hpp"
#include "powersq/solvers.hpp"

namespace {

using namespace powersq;
using bench::format_double;

enum ExitCode : int { kOk = 0, kFailure = 1, kRejected = 2, kDegenerate = 3, kEmpty = 4 };

struct CommonArgs {
  std::size_t n = 100;
  std::string mode = "real";
  std::string alg = "squared";
  double tol = 1e-10;
  std::optional<std::uint64_t> max_iter;
  std::uint64_t seed = 0;
};

SolverConfig make_config(const CommonArgs& args) {
  SolverConfig cfg;
  cfg.tol = args.tol;
  cfg.max_iter = args.max_iter;
  cfg.seed = args.seed;
  return cfg;
}

int run_solve(const CommonArgs& args) {
  const DenseMatrix a = random_matrix({args.n, bench::parse_mode(args.mode), args.seed});
  const EigenEstimate est = solve_dominant(a, make_config(args), parse_algorithm(args.alg));
  std::cout << "eigenvalue: " << format_double(est.value.real()) << '\n'
            << "eigenvalue_imag: " << format_double(est.value.imag()) << '\n'
            << "iterations: " << est.iterations << '\n'
            << "residual: " << format_double(est.residual) << '\n'
            << "converged: " << (est.converged ? "true" : "false") << '\n';
  return kOk;
}

int run_topk(const CommonArgs& args, std::size_t k, bool reorthogonalize) {
  const DenseMatrix a = random_matrix({args.n, bench::parse_mode(args.mode), args.seed});
  TopKOptions opts;
  opts.method = parse_algorithm(args.alg);
  opts.reorthogonalize = reorthogonalize;
  const Spectrum s = top_k_eigenpairs(a, k, make_config(args), opts);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::cout << "lambda[" << i << "]: " << format_double(s.pairs[i].value)
              << "  iterations: " << s.pairs[i].iterations << '\n';
  }
  std::cout << "max_pairwise_overlap: " << format_double(max_pairwise_overlap(s)) << '\n';
  if (!s.complete()) {
    std::cout << "incomplete: round " << *s.failed_round << " did not converge\n";
    return kFailure;
  }
  return kOk;
}

void print_summary(std::ostream& out, const std::vector<bench::SummaryRow>& rows) {
  out << std::left << std::setw(7) << "n" << std::setw(9) << "mode" << std::setw(9) << "alg"
      << std::setw(10) << "matrices" << std::setw(11) << "converged" << std::setw(14) << "total_s"
      << std::setw(14) << "per_matrix_s" << std::setw(12) << "mean_iter" << std::setw(12)
      << "median_iter" << std::setw(9) << "speedup" << "published\n";
  for (const auto& r : rows) {
    out << std::setw(7) << r.n << std::setw(9) << bench::mode_name(r.mode) << std::setw(9)
        << to_string(r.algorithm) << std::setw(10) << r.matrices << std::setw(11) << r.converged
        << std::setw(14) << std::setprecision(4) << r.total_time << std::setw(14) << r.time_per_matrix
        << std::setw(12) << std::setprecision(6) << r.mean_iterations << std::setw(12)
        << r.median_iterations << std::setw(9) << (r.speedup ? format_double(*r.speedup) : "-");
    const auto ref = r.speedup ? bench::published_speedup(r.n, r.mode) : std::nullopt;
    out << (ref ? format_double(*ref) : "-") << '\n';
  }
}

struct BenchArgs {
  std::string sizes;
  std::string mode = "real";
  std::vector<std::string> algs;
  double tol = 1e-10;
  std::optional<std::uint64_t> max_iter;
  std::uint64_t seed = 0;
  std::string out;
  std::string summary;
  bool full_scale = false;
  unsigned workers = 1;
  std::size_t oracle_cutoff = 200;
};

int run_bench(const BenchArgs& args) {
  bench::SuiteOptions opts;
  opts.sizes = args.sizes.empty() ? bench::desk_scale_sizes() : bench::parse_sizes(args.sizes);
  if (args.full_scale) {
    const auto extra = bench::full_scale_sizes();
    opts.sizes.insert(opts.sizes.end(), extra.begin(), extra.end());
  }
  opts.mode = bench::parse_mode(args.mode);
  if (!args.algs.empty()) {
    opts.algorithms.clear();
    for (const auto& a : args.algs) opts.algorithms.push_back(parse_algorithm(a));
  }
  opts.cfg.tol = args.tol;
  opts.cfg.max_iter = args.max_iter;
  opts.base_seed = args.seed;
  opts.workers = args.workers;
  opts.oracle_cutoff = args.oracle_cutoff;

  const auto records = bench::run_suite(opts);

  std::ostream* table_out = &std::cout;
  if (args.out.empty()) {
    bench::write_records_csv(std::cout, records);
    table_out = &std::cerr;
  } else {
    std::ofstream file(args.out);
    if (!file) throw RejectedInput("cannot open " + args.out + " for writing");
    bench::write_records_csv(file, records);
  }

  const auto rows = bench::summarize(records, std::cerr);
  print_summary(*table_out, rows);
  *table_out << "workers: " << opts.workers << " (wall_time is per solve; generation excluded)\n";
  if (!args.summary.empty()) {
    std::ofstream file(args.summary);
    if (!file) throw RejectedInput("cannot open " + args.summary + " for writing");
    file << bench::summary_json(rows, opts) << '\n';
  }
  return kOk;
}

int run_hist(const std::string& in, const std::string& alg, const std::string& scale,
             const std::string& out) {
  std::ifstream file(in);
  if (!file) throw RejectedInput("cannot open " + in);
  const auto records = bench::read_records_csv(file);
  const auto hist = bench::histogram(records, parse_algorithm(alg), bench::parse_scale(scale));
  if (out.empty()) {
    bench::write_histogram_csv(std::cout, hist);
  } else {
    std::ofstream dest(out);
    if (!dest) throw RejectedInput("cannot open " + out + " for writing");
    bench::write_histogram_csv(dest, hist);
  }
  return kOk;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--n", args.n, "Matrix dimension")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--mode", args.mode, "real | complex")->check(CLI::IsMember({"real", "complex"}));
  cmd->add_option("--alg", args.alg, "power | squared")->check(CLI::IsMember({"power", "squared"}));
  cmd->add_option("--seed", args.seed, "Matrix and starting-vector seed");
  cmd->add_option("--tol", args.tol, "Convergence tolerance");
  cmd->add_option("--max-iter", args.max_iter, "Iteration cap (default: per algorithm)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominant eigenpairs by power iteration and by repeated squaring"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Dominant eigenpair of one random matrix");
  add_common(solve, solve_args);

  CommonArgs topk_args;
  std::size_t k = 1;
  bool reorth = false;
  auto* topk = app.add_subcommand("topk", "Top-k eigenpairs by repeated deflation");
  add_common(topk, topk_args);
  topk->add_option("--k", k, "Number of eigenpairs")->required();
  topk->add_flag("--reorthogonalize", reorth, "Re-orthogonalize extracted vectors");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Timing and iteration benchmark suite");
  bench_cmd->add_option("--sizes", bench_args.sizes, "n:count,... (default 50:100,100:50,200:10)");
  bench_cmd->add_option("--mode", bench_args.mode, "real | complex")
      ->check(CLI::IsMember({"real", "complex"}));
  bench_cmd->add_option("--alg", bench_args.algs, "Algorithms to run (default: power and squared)")
      ->check(CLI::IsMember({"power", "squared"}));
  bench_cmd->add_option("--tol", bench_args.tol, "Convergence tolerance");
  bench_cmd->add_option("--max-iter", bench_args.max_iter, "Iteration cap (default: per algorithm)");
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed");
  bench_cmd->add_option("--out", bench_args.out, "Records CSV path (default: stdout)");
  bench_cmd->add_option("--summary", bench_args.summary, "Summary JSON path");
  bench_cmd->add_flag("--full-scale", bench_args.full_scale,
                      "Append n=100x300, 1000x5, 3000x1, 5000x1 (slow)");
  bench_cmd->add_option("--workers", bench_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--oracle-cutoff", bench_args.oracle_cutoff,
                        "Largest n that gets a reference-solver error column");

  std::string hist_in;
  std::string hist_alg = "squared";
  std::string hist_scale = "linear";
  std::string hist_out;
  auto* hist = app.add_subcommand("hist", "Histogram of iteration counts from a records CSV");
  hist->add_option("--in", hist_in, "Records CSV")->required();
  hist->add_option("--alg", hist_alg, "power | squared")->check(CLI::IsMember({"power", "squared"}));
  hist->add_option("--scale", hist_scale, "linear | log2")->check(CLI::IsMember({"linear", "log2"}));
  hist->add_option("--out", hist_out, "Histogram CSV path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(solve_args);
    if (*topk) return run_topk(topk_args, k, reorth);
    if (*bench_cmd) return run_bench(bench_args);
    if (*hist) return run_hist(hist_in, hist_alg, hist_scale, hist_out);
  } catch (const RejectedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRejected;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const EmptyData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmpty;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
