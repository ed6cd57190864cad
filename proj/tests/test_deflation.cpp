#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "powersq/deflation.hpp"
#include "powersq/errors.hpp"
#include "powersq/oracle.hpp"
#include "powersq/randgen.hpp"
#include "test_support.hpp"

using namespace powersq;
using powersq::testing::max_abs_diff;

namespace {

SolverConfig config(std::uint64_t seed = 1) {
  SolverConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("deflate closed forms") {
  CHECK(deflate(DenseMatrix::diagonal({3.0, 1.0}), 3.0, DenseVector::basis(2, 0)) ==
        DenseMatrix::diagonal({0.0, 1.0}));

  const double h = 1.0 / std::sqrt(2.0);
  const DenseMatrix d = deflate(DenseMatrix{{2.0, 1.0}, {1.0, 2.0}}, 3.0, DenseVector{h, h});
  CHECK(max_abs_diff(d, DenseMatrix{{0.5, -0.5}, {-0.5, 0.5}}) <= 1e-15);
  const auto [hi, lo] = oracle::char_poly_eigs_2x2(d);
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(lo) <= 1e-15);

  CHECK_THROWS_AS(deflate(DenseMatrix::identity(2), 1.0, DenseVector{1.0, 1.0}), RejectedInput);
  CHECK_THROWS_AS(deflate(DenseMatrix::identity(3), 1.0, DenseVector::basis(2, 0)), RejectedInput);
}

TEST_CASE("deflate replaces the dominant eigenvalue by zero") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CAPTURE(seed);
    const DenseMatrix a = random_matrix({10, Field::real, seed});
    const auto ref = oracle::jacobi_eigen(a);
    const DenseMatrix d = deflate(a, ref.values[0], ref.vectors[0]);

    CHECK(max_norm_vec(matvec(d, ref.vectors[0])) <= 1e-9 * max_norm(a) * 10.0);

    std::vector<double> expected = ref.values;
    expected[0] = 0.0;
    std::vector<double> got = oracle::jacobi_eigen(d).values;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(got[i] - expected[i]) <= 1e-8);
  }
}

TEST_CASE("top_k single round equals the dominant solver") {
  const DenseMatrix a = random_matrix({12, Field::real, 21});
  for (Algorithm alg : {Algorithm::power, Algorithm::squared}) {
    const auto est = solve_dominant(a, config(3), alg);
    const auto spec = top_k_eigenpairs(a, 1, config(3), {alg});
    REQUIRE(spec.complete());
    REQUIRE(spec.size() == 1);
    CHECK(spec.pairs[0].value == est.value.real());
    CHECK(spec.pairs[0].iterations == est.iterations);
    CHECK(max_abs_diff(spec.pairs[0].vector, (1.0 / norm2(est.vector)) * est.vector) == 0.0);
  }
}

TEST_CASE("top_k on a diagonal matrix") {
  const auto s = top_k_eigenpairs(DenseMatrix::diagonal({5.0, 4.0, 3.0, 2.0, 1.0}), 3, config());
  REQUIRE(s.complete());
  REQUIRE(s.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.pairs[i].value == doctest::Approx(5.0 - static_cast<double>(i)).epsilon(1e-10));
    CHECK(testing::cos_angle(s.pairs[i].vector, DenseVector::basis(5, i)) >= 1.0 - 1e-10);
  }
}

TEST_CASE("top_k against the reference spectrum") {
  for (Field mode : {Field::real, Field::complex}) {
    for (Algorithm alg : {Algorithm::squared, Algorithm::power}) {
      CAPTURE(to_string(alg));
      const DenseMatrix a = random_matrix({20, mode, 33});
      const auto ref = oracle::jacobi_eigen(a);
      const auto s = top_k_eigenpairs(a, 5, config(4), {alg});
      REQUIRE(s.complete());
      for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(s.pairs[i].value - ref.values[i]) <= 1e-7);
      CHECK(max_pairwise_overlap(s) <= 1e-8);
      for (std::size_t i = 1; i < 5; ++i)
        CHECK(std::abs(s.pairs[i].value) <= std::abs(s.pairs[i - 1].value) + 1e-7);
    }
  }
}

TEST_CASE("deflation zeroes each extracted eigenvalue") {
  const DenseMatrix a = random_matrix({16, Field::real, 8});
  const auto s = top_k_eigenpairs(a, 6, config());
  REQUIRE(s.complete());
  DenseMatrix current = a;
  for (const EigenPair& p : s.pairs) {
    current = deflate(current, p.value, p.vector);
    CHECK(std::abs(rayleigh_quotient(current, p.vector)) <= 1e-7 * max_norm(a));
  }
}

TEST_CASE("full extraction reconstructs the matrix") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    CAPTURE(seed);
    const std::size_t n = 4 + 2 * (seed % 3);
    const DenseMatrix a = random_matrix({n, seed % 2 == 0 ? Field::real : Field::complex, 60 + seed});
    const auto s = top_k_eigenpairs(a, n, config(seed));
    REQUIRE(s.complete());
    DenseMatrix rebuilt(n, a.field());
    for (const EigenPair& p : s.pairs) rebuilt = rebuilt + p.value * outer(p.vector, p.vector);
    CHECK(max_norm(rebuilt - a) <= 1e-6);
  }
}

TEST_CASE("method equivalence") {
  const DenseMatrix a = random_matrix({20, Field::real, 101});
  const auto p = top_k_eigenpairs(a, 4, config(), {Algorithm::power});
  const auto q = top_k_eigenpairs(a, 4, config(), {Algorithm::squared});
  REQUIRE(p.complete());
  REQUIRE(q.complete());
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(p.pairs[i].value - q.pairs[i].value) <= 1e-6 * std::abs(q.pairs[i].value));
}

TEST_CASE("optional re-orthogonalization") {
  const DenseMatrix a = random_matrix({20, Field::real, 102});
  TopKOptions opts;
  opts.reorthogonalize = true;
  const auto s = top_k_eigenpairs(a, 5, config(), opts);
  REQUIRE(s.complete());
  CHECK(max_pairwise_overlap(s) <= 1e-12);
  for (const EigenPair& p : s.pairs) CHECK(norm2(p.vector) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("top_k input validation and partial results") {
  CHECK_THROWS_AS(top_k_eigenpairs(DenseMatrix{{1.0, 2.0}, {0.0, 1.0}}, 1, config()), RejectedInput);
  CHECK_THROWS_AS(top_k_eigenpairs(DenseMatrix::identity(3), 0, config()), RejectedInput);
  CHECK_THROWS_AS(top_k_eigenpairs(DenseMatrix::identity(3), 4, config()), RejectedInput);

  // Second round faces +-1 with equal modulus and cannot converge.
  const DenseMatrix a = DenseMatrix::diagonal({3.0, 1.0, -1.0});
  SolverConfig cfg = config();
  cfg.max_iter = 5000;
  const auto s = top_k_eigenpairs(a, 3, cfg, {Algorithm::power});
  CHECK_FALSE(s.complete());
  REQUIRE(s.failed_round.has_value());
  CHECK(*s.failed_round == 1);
  CHECK(s.size() == 1);
  CHECK(s.pairs[0].value == doctest::Approx(3.0).epsilon(1e-12));
}
