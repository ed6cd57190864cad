#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

#include "powersq/bench.hpp"
#include "powersq/errors.hpp"
#include "powersq/oracle.hpp"
#include "powersq/randgen.hpp"

using namespace powersq;
using namespace powersq::bench;

namespace {

BenchRecord record(Algorithm alg, std::uint64_t iterations, bool converged = true, double time = 1.0) {
  BenchRecord r;
  r.n = 10;
  r.algorithm = alg;
  r.iterations = iterations;
  r.converged = converged;
  r.wall_time = time;
  return r;
}

// Everything except wall_time.
bool same_results(const BenchRecord& a, const BenchRecord& b) {
  BenchRecord x = a;
  x.wall_time = b.wall_time;
  return x == b;
}

}  // namespace

TEST_CASE("run_suite on a 2x2 matrix matches the closed form") {
  SuiteOptions opts;
  opts.sizes = {{2, 1}};
  opts.base_seed = 17;
  const auto recs = run_suite(opts);
  REQUIRE(recs.size() == 2);

  const DenseMatrix a = random_matrix({2, Field::real, matrix_seed(17, 2, 0)});
  const auto [hi, lo] = oracle::char_poly_eigs_2x2(a);
  const double dominant = std::abs(hi) >= std::abs(lo) ? hi : lo;
  for (const BenchRecord& r : recs) {
    CAPTURE(to_string(r.algorithm));
    CHECK(r.converged);
    CHECK(std::abs(r.eigenvalue - dominant) <= 1e-10);
    CHECK(r.iterations >= 1);
    CHECK(r.wall_time >= 0.0);
    REQUIRE(r.oracle_error.has_value());
    CHECK(*r.oracle_error <= 1e-12);
  }
}

TEST_CASE("run_suite edge cases") {
  SuiteOptions opts;
  CHECK(run_suite(opts).empty());
  opts.sizes = {{1, 3}};
  CHECK_THROWS_AS(run_suite(opts), RejectedInput);
  opts.sizes = {{4, 0}};
  CHECK_THROWS_AS(run_suite(opts), RejectedInput);
}

TEST_CASE("run_suite is deterministic and ordered") {
  SuiteOptions opts;
  opts.sizes = {{12, 4}, {6, 3}};
  opts.mode = Field::complex;
  opts.base_seed = 99;
  opts.oracle_cutoff = 8;
  const auto first = run_suite(opts);
  opts.workers = 3;
  const auto second = run_suite(opts);
  REQUIRE(first.size() == 14);
  REQUIRE(second.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(same_results(first[i], second[i]));

  // sorted by (n, mode, algorithm, matrix_index)
  CHECK(first.front().n == 6);
  CHECK(first.front().algorithm == Algorithm::power);
  CHECK(first[3].algorithm == Algorithm::squared);
  CHECK(first[3].matrix_index == 0);
  for (const BenchRecord& r : first) {
    CHECK(r.mode == Field::complex);
    CHECK(r.oracle_error.has_value() == (r.n <= 8));
  }
}

TEST_CASE("summarize") {
  SUBCASE("speedup is the ratio of total times") {
    const std::vector<BenchRecord> recs{record(Algorithm::power, 100, true, 2.0),
                                        record(Algorithm::squared, 7, true, 1.0)};
    std::ostringstream diag;
    const auto rows = summarize(recs, diag);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].algorithm == Algorithm::power);
    CHECK_FALSE(rows[0].speedup.has_value());
    REQUIRE(rows[1].speedup.has_value());
    CHECK(*rows[1].speedup == 2.0);
    CHECK(diag.str().empty());
  }
  SUBCASE("statistics") {
    const std::vector<BenchRecord> recs{record(Algorithm::power, 10, true, 1.0),
                                        record(Algorithm::power, 30, false, 2.0),
                                        record(Algorithm::power, 20, true, 3.0),
                                        record(Algorithm::power, 40, true, 6.0)};
    std::ostringstream diag;
    const auto rows = summarize(recs, diag);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].matrices == 4);
    CHECK(rows[0].converged == 3);
    CHECK(rows[0].total_time == 12.0);
    CHECK(rows[0].time_per_matrix == 3.0);
    CHECK(rows[0].mean_iterations == 25.0);
    CHECK(rows[0].median_iterations == 25.0);
    CHECK(diag.str().find("warning") != std::string::npos);
  }
  SUBCASE("empty input") {
    std::ostringstream diag;
    CHECK(summarize({}, diag).empty());
    CHECK(diag.str().find("warning") != std::string::npos);
  }
}

TEST_CASE("round_significant") {
  CHECK(round_significant(65.4, 2) == 65.0);
  CHECK(round_significant(3.66, 2) == 3.7);
  CHECK(round_significant(0.01234, 2) == 0.012);
  CHECK(round_significant(0.0, 2) == 0.0);
}

TEST_CASE("histogram") {
  SUBCASE("floor-log2 binning") {
    std::vector<BenchRecord> recs;
    for (std::uint64_t it : {4, 5, 7, 8}) recs.push_back(record(Algorithm::power, it));
    recs.push_back(record(Algorithm::power, 1000, false));
    recs.push_back(record(Algorithm::squared, 3));
    const auto h = histogram(recs, Algorithm::power, HistogramScale::log2);
    CHECK(h.bin_edges == std::vector<double>{2.0, 3.0, 4.0});
    CHECK(h.counts == std::vector<std::size_t>{3, 1});
  }
  SUBCASE("linear") {
    const std::vector<BenchRecord> one{record(Algorithm::squared, 12)};
    const auto h = histogram(one, Algorithm::squared, HistogramScale::linear);
    CHECK(h.counts == std::vector<std::size_t>{1});
    CHECK(h.bin_edges == std::vector<double>{12.0, 13.0});

    const std::vector<BenchRecord> gap{record(Algorithm::squared, 9), record(Algorithm::squared, 11),
                                       record(Algorithm::squared, 11)};
    const auto g = histogram(gap, Algorithm::squared, HistogramScale::linear);
    CHECK(g.counts == std::vector<std::size_t>{1, 0, 2});
    CHECK(g.bin_edges.size() == g.counts.size() + 1);
  }
  SUBCASE("no converged runs") {
    const std::vector<BenchRecord> recs{record(Algorithm::power, 5, false)};
    CHECK_THROWS_AS(histogram(recs, Algorithm::power, HistogramScale::log2), EmptyData);
    CHECK_THROWS_AS(histogram(recs, Algorithm::squared, HistogramScale::linear), EmptyData);
  }
}

TEST_CASE("records CSV round trip") {
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::vector<BenchRecord> recs;
  for (int i = 0; i < 200; ++i) {
    BenchRecord r;
    r.n = 2 + eng() % 5000;
    r.mode = eng() % 2 ? Field::real : Field::complex;
    r.algorithm = eng() % 2 ? Algorithm::power : Algorithm::squared;
    r.matrix_index = eng() % 300;
    r.seed = eng();
    r.wall_time = std::abs(u(eng)) * 1e-6;
    r.iterations = 1 + eng() % 1'000'000;
    r.converged = eng() % 2;
    r.eigenvalue = u(eng) / 3.0;
    r.residual = std::ldexp(std::abs(u(eng)), -40);
    if (eng() % 2) r.oracle_error = std::ldexp(std::abs(u(eng)), -60);
    recs.push_back(r);
  }
  std::stringstream buf;
  write_records_csv(buf, recs);
  const auto back = read_records_csv(buf);
  REQUIRE(back.size() == recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) CHECK(back[i] == recs[i]);
}

TEST_CASE("records CSV format") {
  std::vector<BenchRecord> recs{record(Algorithm::squared, 12, true, 0.5)};
  recs[0].eigenvalue = 0.1;
  std::ostringstream out;
  write_records_csv(out, recs);
  CHECK(out.str() ==
        std::string(kRecordHeader) + "\n10,real,squared,0,0,0.5,12,true,0.1,0,\n");

  std::istringstream bad_header("n,mode\n");
  CHECK_THROWS_AS(read_records_csv(bad_header), RejectedInput);
  std::istringstream bad_row(std::string(kRecordHeader) + "\n10,real,squared,0,0,0.5,12,yes,0.1,0,\n");
  CHECK_THROWS_AS(read_records_csv(bad_row), RejectedInput);
  std::istringstream short_row(std::string(kRecordHeader) + "\n10,real\n");
  CHECK_THROWS_AS(read_records_csv(short_row), RejectedInput);
}

TEST_CASE("parse_sizes") {
  const auto s = parse_sizes("50:100,100:50");
  REQUIRE(s.size() == 2);
  CHECK(s[1].n == 100);
  CHECK(s[1].count == 50);
  CHECK(parse_sizes("").empty());
  CHECK_THROWS_AS(parse_sizes("50"), RejectedInput);
  CHECK_THROWS_AS(parse_sizes("50:x"), RejectedInput);
  CHECK(desk_scale_sizes().size() == 3);
}

TEST_CASE("summary JSON") {
  const std::vector<BenchRecord> recs{[] {
                                        auto r = record(Algorithm::power, 100, true, 4.0);
                                        r.n = 100;
                                        return r;
                                      }(),
                                      [] {
                                        auto r = record(Algorithm::squared, 10, true, 1.0);
                                        r.n = 100;
                                        return r;
                                      }()};
  std::ostringstream diag;
  const auto rows = summarize(recs, diag);
  SuiteOptions opts;
  opts.workers = 2;
  const auto doc = nlohmann::json::parse(summary_json(rows, opts));
  CHECK(doc["workers"] == 2);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["speedup"] == 4.0);
  CHECK(doc["rows"][1]["published_speedup"] == 65.0);
  CHECK_FALSE(doc["rows"][0].contains("speedup"));
}
