#include "powersq/solvers.hpp"

#include <cmath>
#include <string>

#include "powersq/errors.hpp"
#include "powersq/randgen.hpp"

namespace powersq {

std::string_view to_string(Algorithm alg) {
  return alg == Algorithm::power ? "power" : "squared";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "power") return Algorithm::power;
  if (name == "squared") return Algorithm::squared;
  throw RejectedInput("unknown algorithm '" + std::string(name) + "' (expected power|squared)");
}

void SolverConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw RejectedInput("tol must be a positive finite number");
  if (max_iter && *max_iter == 0) throw RejectedInput("max_iter must be at least 1");
}

std::uint64_t SolverConfig::iteration_cap(Algorithm alg) const {
  if (max_iter) return *max_iter;
  return alg == Algorithm::power ? kDefaultPowerMaxIter : kDefaultSquaredMaxIter;
}

Scalar rayleigh_quotient(const DenseMatrix& a, const DenseVector& x) {
  if (a.dim() != x.size()) throw RejectedInput("rayleigh_quotient: dimension mismatch");
  const double den = inner(x, x).real();
  if (den == 0.0) throw DegenerateInput("rayleigh_quotient: zero vector");
  return inner(x, matvec(a, x)) / den;
}

DenseVector fix_phase(const DenseVector& x) {
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double m = std::abs(x[i]);
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  if (best_mod <= 0.0) return x;
  if (x.is_real()) {
    return x.real()[best] < 0.0 ? Scalar(-1.0) * x : x;
  }
  DenseVector out = (std::conj(x[best]) / best_mod) * x;
  out.set(best, best_mod);
  return out;
}

namespace {

void require_square_input(const DenseMatrix& a, const SolverConfig& cfg) {
  cfg.validate();
  if (a.dim() == 0) throw RejectedInput("empty matrix");
  if (max_norm(a) == 0.0) throw DegenerateInput("zero matrix: dominant eigenvalue is 0");
}

// Rotates y so that <x, y> is real and non-negative.
void align_phase(const DenseVector& x, DenseVector& y) {
  const Scalar s = inner(x, y);
  const double mod = std::abs(s);
  if (mod == 0.0) return;
  if (y.is_real() && s.imag() == 0.0) {
    if (s.real() < 0.0) {
      for (double& v : y.real()) v = -v;
    }
    return;
  }
  y = (std::conj(s) / mod) * y;
}

double max_abs_difference(const DenseVector& a, const DenseVector& b) {
  double best = 0.0;
  if (a.is_real() && b.is_real()) {
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a.real()[i] - b.real()[i]));
    return best;
  }
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

EigenEstimate finish(const DenseMatrix& a, const DenseVector& x, std::uint64_t iterations,
                     bool stopped, double tol) {
  EigenEstimate est;
  est.vector = fix_phase(normalize_vec(x));
  est.value = rayleigh_quotient(a, est.vector);
  est.residual = max_norm_vec(matvec(a, est.vector) - est.value * est.vector);
  est.iterations = iterations;
  est.converged = stopped && est.residual <= 100.0 * tol * max_norm(a);
  return est;
}

}  // namespace

EigenEstimate power_iteration(const DenseMatrix& a, const SolverConfig& cfg) {
  if (a.dim() == 0) throw RejectedInput("empty matrix");
  return power_iteration(a, cfg, random_unit_vector(a.dim(), cfg.seed));
}

EigenEstimate power_iteration(const DenseMatrix& a, const SolverConfig& cfg,
                              const DenseVector& start) {
  require_square_input(a, cfg);
  if (start.size() != a.dim()) throw RejectedInput("power_iteration: starting vector dimension mismatch");
  const std::uint64_t cap = cfg.iteration_cap(Algorithm::power);

  DenseVector x = normalize_vec(start);
  std::uint64_t k = 0;
  bool stopped = false;
  while (k < cap) {
    DenseVector y = matvec(a, x);
    if (max_norm_vec(y) == 0.0) {
      throw DegenerateInput("power_iteration: iterate collapsed to zero; re-seed the starting vector");
    }
    y = normalize_vec(y);
    align_phase(x, y);
    ++k;
    const double diff = max_abs_difference(y, x);
    x = std::move(y);
    if (diff <= cfg.tol) {
      stopped = true;
      break;
    }
  }
  return finish(a, x, k, stopped, cfg.tol);
}

DenseMatrix matrix_power_squaring(const DenseMatrix& a, unsigned j) {
  DenseMatrix cur = a;
  for (unsigned i = 0; i < j; ++i) cur = matmul(cur, cur);
  return cur;
}

DenseMatrix squaring_step(const DenseMatrix& a) {
  const DenseMatrix sq = matmul(a, a);
  if (max_norm(sq) == 0.0) throw DegenerateInput("squaring collapsed to the zero matrix (nilpotent input)");
  return normalize_matrix(sq);
}

EigenEstimate power_iteration_squared(const DenseMatrix& a, const SolverConfig& cfg) {
  require_square_input(a, cfg);
  const std::uint64_t cap = cfg.iteration_cap(Algorithm::squared);

  DenseMatrix cur = a;
  std::uint64_t i = 0;
  bool stopped = false;
  while (i < cap) {
    DenseMatrix next = squaring_step(cur);
    ++i;
    const double diff = max_norm(next - cur);
    cur = std::move(next);
    if (diff <= cfg.tol) {
      stopped = true;
      break;
    }
  }

  constexpr int kRedraws = 3;
  for (int attempt = 0; attempt <= kRedraws; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? cfg.seed : derive_seed(cfg.seed, attempt);
    const DenseVector projected = matvec(cur, random_unit_vector(a.dim(), seed));
    if (max_norm_vec(projected) > cfg.tol) return finish(a, projected, i, stopped, cfg.tol);
  }
  throw DegenerateInput("power_iteration_squared: projected starting vector vanished after re-draws");
}

EigenEstimate solve_dominant(const DenseMatrix& a, const SolverConfig& cfg, Algorithm alg) {
  return alg == Algorithm::power ? power_iteration(a, cfg) : power_iteration_squared(a, cfg);
}

}  // namespace powersq
