#include "powersq/deflation.hpp"

#include <cmath>
#include <string>

#include "powersq/errors.hpp"
#include "powersq/randgen.hpp"

namespace powersq {

DenseMatrix deflate(const DenseMatrix& a, Scalar lambda, const DenseVector& v) {
  if (a.dim() != v.size()) throw RejectedInput("deflate: dimension mismatch");
  if (std::abs(norm2(v) - 1.0) > 1e-8) {
    throw RejectedInput("deflate: vector must have unit 2-norm (got " + std::to_string(norm2(v)) + ")");
  }
  return a - lambda * outer(v, v);
}

Spectrum top_k_eigenpairs(const DenseMatrix& a, std::size_t k, const SolverConfig& cfg,
                          const TopKOptions& options) {
  cfg.validate();
  if (k < 1 || k > a.dim()) {
    throw RejectedInput("top_k_eigenpairs: k must lie in [1, " + std::to_string(a.dim()) + "]");
  }
  if (!is_self_adjoint(a, 1e-12)) throw RejectedInput("top_k_eigenpairs: matrix is not self-adjoint");

  Spectrum out;
  out.pairs.reserve(k);
  DenseMatrix current = a;
  for (std::size_t round = 0; round < k; ++round) {
    SolverConfig round_cfg = cfg;
    if (round > 0) round_cfg.seed = derive_seed(cfg.seed, round);
    const EigenEstimate est = solve_dominant(current, round_cfg, options.method);
    if (!est.converged) {
      out.failed_round = round;
      return out;
    }

    DenseVector v = (1.0 / norm2(est.vector)) * est.vector;
    if (options.reorthogonalize) {
      for (const EigenPair& prev : out.pairs) v = v - inner(prev.vector, v) * prev.vector;
      v = (1.0 / norm2(v)) * v;
    }
    // Self-adjoint input: the Rayleigh quotient's imaginary part is rounding noise.
    const double lambda = est.value.real();
    current = deflate(current, lambda, v);
    out.pairs.push_back({lambda, std::move(v), est.iterations, est.residual});
  }
  return out;
}

double max_pairwise_overlap(const Spectrum& spectrum) {
  double worst = 0.0;
  const auto& p = spectrum.pairs;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      worst = std::max(worst, std::abs(inner(p[i].vector, p[j].vector)));
  return worst;
}

}  // namespace powersq
