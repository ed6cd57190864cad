#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "powersq/dense.hpp"
#include "powersq/solvers.hpp"

namespace powersq {

struct EigenPair {
  double value = 0.0;
  /// Unit 2-norm.
  DenseVector vector;
  std::uint64_t iterations = 0;
  double residual = 0.0;
};

/// Eigenpairs in extraction order, which is descending modulus.
struct Spectrum {
  std::vector<EigenPair> pairs;
  /// Set when the inner solver failed to converge; holds the 0-based index of
  /// the failing round, so pairs.size() == *failed_round.
  std::optional<std::size_t> failed_round;

  bool complete() const { return !failed_round.has_value(); }
  std::size_t size() const { return pairs.size(); }
};

/// A - lambda * v v^dagger. v must have unit 2-norm (within 1e-8); otherwise
/// the deflated matrix keeps a spurious multiple of v v^dagger and the result
/// is rejected.
DenseMatrix deflate(const DenseMatrix& a, Scalar lambda, const DenseVector& v);

struct TopKOptions {
  Algorithm method = Algorithm::squared;
  /// Re-orthogonalize each new vector against the previously extracted ones
  /// (classical Gram-Schmidt, one pass) before deflating.
  bool reorthogonalize = false;
};

/// Top-k eigenpairs of a self-adjoint matrix by k rounds of
/// {dominant pair of A_i, 2-norm normalization, A_{i+1} = deflate(A_i)}.
///
/// "Top" is by modulus: each round finds the current largest-|lambda| pair.
/// Round 0 uses cfg.seed for its starting vector, so k == 1 reproduces
/// solve_dominant exactly; round i > 0 uses derive_seed(cfg.seed, i).
///
/// Throws RejectedInput unless A is self-adjoint within 1e-12 entrywise and
/// 1 <= k <= n. A non-converged round ends the extraction early and is
/// reported through Spectrum::failed_round rather than thrown.
Spectrum top_k_eigenpairs(const DenseMatrix& a, std::size_t k, const SolverConfig& cfg,
                          const TopKOptions& options = {});

/// Largest |<v_i, v_j>| over i != j.
double max_pairwise_overlap(const Spectrum& spectrum);

}  // namespace powersq
