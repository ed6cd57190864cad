#include "powersq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "powersq/errors.hpp"
#include "powersq/oracle.hpp"
#include "powersq/randgen.hpp"

namespace powersq::bench {

std::vector<SuiteSize> desk_scale_sizes() { return {{50, 100}, {100, 50}, {200, 10}}; }

std::vector<SuiteSize> full_scale_sizes() { return {{100, 300}, {1000, 5}, {3000, 1}, {5000, 1}}; }

namespace {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw RejectedInput(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<SuiteSize> parse_sizes(std::string_view text) {
  std::vector<SuiteSize> sizes;
  if (text.empty()) return sizes;
  for (std::string_view item : split(text, ',')) {
    const auto fields = split(item, ':');
    if (fields.size() != 2) throw RejectedInput("size entries must look like n:count, got '" + std::string(item) + "'");
    sizes.push_back({parse_number<std::size_t>(fields[0], "dimension"),
                     parse_number<std::size_t>(fields[1], "matrix count")});
  }
  return sizes;
}

std::string_view mode_name(Field mode) { return mode == Field::real ? "real" : "complex"; }

Field parse_mode(std::string_view name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw RejectedInput("unknown mode '" + std::string(name) + "' (expected real|complex)");
}

std::uint64_t matrix_seed(std::uint64_t base_seed, std::size_t n, std::size_t index) {
  return derive_seed(base_seed, n, index);
}

// ---------------------------------------------------------------------------
// Suite

namespace {

struct Task {
  std::size_t n;
  std::size_t index;
};

std::vector<BenchRecord> run_task(const Task& task, const SuiteOptions& options) {
  const std::uint64_t seed = matrix_seed(options.base_seed, task.n, task.index);
  const DenseMatrix a = random_matrix({task.n, options.mode, seed});

  std::optional<double> reference;
  if (task.n <= options.oracle_cutoff) reference = oracle::jacobi_eigen(a).values.front();

  SolverConfig cfg = options.cfg;
  cfg.seed = derive_seed(seed, 0x73746172);  // starting vector, shared by all algorithms

  std::vector<BenchRecord> out;
  for (Algorithm alg : options.algorithms) {
    BenchRecord rec;
    rec.n = task.n;
    rec.mode = options.mode;
    rec.algorithm = alg;
    rec.matrix_index = task.index;
    rec.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      const EigenEstimate est = solve_dominant(a, cfg, alg);
      rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rec.iterations = est.iterations;
      rec.converged = est.converged;
      rec.eigenvalue = est.value.real();
      rec.residual = est.residual;
      if (reference) rec.oracle_error = std::abs(rec.eigenvalue - *reference) / std::abs(*reference);
    } catch (const std::runtime_error&) {
      rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rec.iterations = 1;
      rec.converged = false;
      rec.eigenvalue = std::numeric_limits<double>::quiet_NaN();
      rec.residual = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(rec);
  }
  return out;
}

auto sort_key(const BenchRecord& r) {
  return std::make_tuple(r.n, r.mode, r.algorithm, r.matrix_index);
}

}  // namespace

std::vector<BenchRecord> run_suite(const SuiteOptions& options) {
  options.cfg.validate();
  std::vector<Task> tasks;
  for (const SuiteSize& s : options.sizes) {
    if (s.n < 2) throw RejectedInput("run_suite: dimensions must be at least 2");
    if (s.count < 1) throw RejectedInput("run_suite: matrix counts must be at least 1");
    for (std::size_t i = 0; i < s.count; ++i) tasks.push_back({s.n, i});
  }

  std::vector<std::vector<BenchRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) slots[t] = run_task(tasks[t], options);
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::vector<BenchRecord> records;
  for (auto& slot : slots) records.insert(records.end(), slot.begin(), slot.end());
  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& x, const BenchRecord& y) { return sort_key(x) < sort_key(y); });
  return records;
}

// ---------------------------------------------------------------------------
// Summary

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

std::optional<double> published_speedup(std::size_t n, Field mode) {
  static const std::map<std::size_t, double> real{{100, 65.0}, {1000, 36.0}, {3000, 21.0}, {5000, 11.0}};
  static const std::map<std::size_t, double> complex{{100, 49.0}, {1000, 9.5}, {3000, 7.0}, {5000, 3.8}};
  const auto& table = mode == Field::real ? real : complex;
  if (auto it = table.find(n); it != table.end()) return it->second;
  return std::nullopt;
}

std::vector<SummaryRow> summarize(std::span<const BenchRecord> records, std::ostream& diag) {
  if (records.empty()) {
    diag << "warning: no benchmark records to summarize\n";
    return {};
  }
  std::map<std::tuple<std::size_t, Field, Algorithm>, std::vector<const BenchRecord*>> cells;
  for (const BenchRecord& r : records) cells[{r.n, r.mode, r.algorithm}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, cell] : cells) {
    SummaryRow row;
    std::tie(row.n, row.mode, row.algorithm) = key;
    row.matrices = cell.size();
    std::vector<double> iters;
    for (const BenchRecord* r : cell) {
      row.total_time += r->wall_time;
      row.converged += r->converged ? 1 : 0;
      iters.push_back(static_cast<double>(r->iterations));
    }
    row.time_per_matrix = row.total_time / static_cast<double>(row.matrices);
    double sum = 0.0;
    for (double it : iters) sum += it;
    row.mean_iterations = sum / static_cast<double>(iters.size());
    std::sort(iters.begin(), iters.end());
    const std::size_t mid = iters.size() / 2;
    row.median_iterations = iters.size() % 2 == 1 ? iters[mid] : 0.5 * (iters[mid - 1] + iters[mid]);
    rows.push_back(row);
  }

  for (SummaryRow& row : rows) {
    const Algorithm other = row.algorithm == Algorithm::power ? Algorithm::squared : Algorithm::power;
    const auto counterpart = cells.find({row.n, row.mode, other});
    if (counterpart == cells.end()) {
      diag << "warning: n=" << row.n << " mode=" << mode_name(row.mode) << ": no "
           << to_string(other) << " records, speedup omitted\n";
      continue;
    }
    if (row.algorithm != Algorithm::squared) continue;
    double power_time = 0.0;
    for (const BenchRecord* r : counterpart->second) power_time += r->wall_time;
    if (row.total_time > 0.0) row.speedup = round_significant(power_time / row.total_time, 2);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Histogram

std::string_view scale_name(HistogramScale scale) {
  return scale == HistogramScale::linear ? "linear" : "log2";
}

HistogramScale parse_scale(std::string_view name) {
  if (name == "linear") return HistogramScale::linear;
  if (name == "log2") return HistogramScale::log2;
  throw RejectedInput("unknown histogram scale '" + std::string(name) + "' (expected linear|log2)");
}

HistogramData histogram(std::span<const BenchRecord> records, Algorithm algorithm,
                        HistogramScale scale) {
  std::vector<std::uint64_t> keys;
  for (const BenchRecord& r : records) {
    if (r.algorithm != algorithm || !r.converged || r.iterations == 0) continue;
    keys.push_back(scale == HistogramScale::log2 ? std::bit_width(r.iterations) - 1 : r.iterations);
  }
  if (keys.empty()) {
    throw EmptyData("histogram: no converged " + std::string(to_string(algorithm)) + " records");
  }
  const auto [lo, hi] = std::minmax_element(keys.begin(), keys.end());
  HistogramData hist;
  hist.scale = scale;
  for (std::uint64_t e = *lo; e <= *hi + 1; ++e) hist.bin_edges.push_back(static_cast<double>(e));
  hist.counts.assign(*hi - *lo + 1, 0);
  for (std::uint64_t k : keys) ++hist.counts[k - *lo];
  return hist;
}

// ---------------------------------------------------------------------------
// CSV / JSON

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_records_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kRecordHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.n << ',' << mode_name(r.mode) << ',' << to_string(r.algorithm) << ',' << r.matrix_index
        << ',' << r.seed << ',' << format_double(r.wall_time) << ',' << r.iterations << ','
        << (r.converged ? "true" : "false") << ',' << format_double(r.eigenvalue) << ','
        << format_double(r.residual) << ',';
    if (r.oracle_error) out << format_double(*r.oracle_error);
    out << '\n';
  }
}

namespace {

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw RejectedInput("invalid boolean '" + std::string(text) + "'");
}

}  // namespace

std::vector<BenchRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw RejectedInput("records CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRecordHeader) throw RejectedInput("records CSV has an unexpected header");

  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 11) {
      throw RejectedInput("records CSV line " + std::to_string(line_no) + ": expected 11 fields");
    }
    try {
      BenchRecord r;
      r.n = parse_number<std::size_t>(f[0], "n");
      r.mode = parse_mode(f[1]);
      r.algorithm = parse_algorithm(f[2]);
      r.matrix_index = parse_number<std::size_t>(f[3], "matrix_index");
      r.seed = parse_number<std::uint64_t>(f[4], "seed");
      r.wall_time = parse_number<double>(f[5], "wall_time");
      r.iterations = parse_number<std::uint64_t>(f[6], "iterations");
      r.converged = parse_bool(f[7]);
      r.eigenvalue = parse_number<double>(f[8], "eigenvalue");
      r.residual = parse_number<double>(f[9], "residual");
      if (!f[10].empty()) r.oracle_error = parse_number<double>(f[10], "oracle_error");
      records.push_back(r);
    } catch (const RejectedInput& e) {
      throw RejectedInput("records CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

void write_histogram_csv(std::ostream& out, const HistogramData& hist) {
  out << "scale,bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    out << scale_name(hist.scale) << ',' << format_double(hist.bin_edges[i]) << ','
        << format_double(hist.bin_edges[i + 1]) << ',' << hist.counts[i] << '\n';
  }
}

std::string summary_json(std::span<const SummaryRow> rows, const SuiteOptions& options) {
  nlohmann::json doc;
  doc["workers"] = std::max(1u, options.workers);
  doc["base_seed"] = options.base_seed;
  doc["tol"] = options.cfg.tol;
  doc["timing"] = "per-solve monotonic clock; matrix generation and reference solve excluded";
  auto& out = doc["rows"] = nlohmann::json::array();
  for (const SummaryRow& r : rows) {
    nlohmann::json row{{"n", r.n},
                       {"mode", mode_name(r.mode)},
                       {"algorithm", to_string(r.algorithm)},
                       {"matrices", r.matrices},
                       {"converged", r.converged},
                       {"total_time_s", r.total_time},
                       {"time_per_matrix_s", r.time_per_matrix},
                       {"mean_iterations", r.mean_iterations},
                       {"median_iterations", r.median_iterations}};
    if (r.speedup) {
      row["speedup"] = *r.speedup;
      if (auto ref = published_speedup(r.n, r.mode)) row["published_speedup"] = *ref;
    }
    out.push_back(std::move(row));
  }
  return doc.dump(2);
}

}  // namespace powersq::bench
