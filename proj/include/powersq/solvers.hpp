#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "powersq/dense.hpp"

namespace powersq {

enum class Algorithm {
  power,    ///< matrix-vector power iteration
  squared,  ///< power iteration through repeated normalized squaring
};

std::string_view to_string(Algorithm alg);
/// Parses "power" or "squared"; throws RejectedInput otherwise.
Algorithm parse_algorithm(std::string_view name);

inline constexpr std::uint64_t kDefaultPowerMaxIter = 1'000'000;
inline constexpr std::uint64_t kDefaultSquaredMaxIter = 64;

struct SolverConfig {
  double tol = 1e-10;
  /// Unset means the algorithm default (kDefaultPowerMaxIter or
  /// kDefaultSquaredMaxIter).
  std::optional<std::uint64_t> max_iter;
  /// Seed of the random starting vector.
  std::uint64_t seed = 0;

  /// Throws RejectedInput unless tol > 0 and max_iter >= 1.
  void validate() const;
  std::uint64_t iteration_cap(Algorithm alg) const;
};

struct EigenEstimate {
  /// Rayleigh quotient. For self-adjoint input the imaginary part is rounding
  /// noise and is kept so callers can inspect it.
  Scalar value;
  /// max_norm_vec == 1, largest-modulus entry real and positive.
  DenseVector vector;
  std::uint64_t iterations = 0;
  bool converged = false;
  /// max_norm_vec(A v - value v) against the input matrix.
  double residual = 0.0;
};

/// (x^dagger A x) / (x^dagger x). Throws DegenerateInput for x == 0.
Scalar rayleigh_quotient(const DenseMatrix& a, const DenseVector& x);

/// Scales x by a unit phase so its largest-modulus entry (lowest index on
/// ties) is real and positive.
DenseVector fix_phase(const DenseVector& x);

/// Power iteration from a random starting vector drawn with cfg.seed.
///
/// Each step normalizes A x_k by its max norm, then rotates it by the unit
/// phase making <x_k, x_{k+1}> real-positive before measuring
/// max_norm_vec(x_{k+1} - x_k). Without the rotation a negative dominant
/// eigenvalue flips the iterate's sign every step and never settles.
///
/// Reaching max_iter is not an error: the result comes back with
/// converged == false. A result is also reported as not converged when the
/// stopping rule fired but the residual exceeds 100 * tol * max_norm(A).
///
/// Throws DegenerateInput for the zero matrix or when an iterate collapses to
/// zero (starting vector in the kernel; re-seed).
EigenEstimate power_iteration(const DenseMatrix& a, const SolverConfig& cfg);
/// As above with an explicit starting vector.
EigenEstimate power_iteration(const DenseMatrix& a, const SolverConfig& cfg,
                              const DenseVector& start);

/// A^(2^j) by j plain squarings, no normalization. Throws NumericOverflow if an
/// entry leaves the finite range.
DenseMatrix matrix_power_squaring(const DenseMatrix& a, unsigned j);

/// One step of the normalized squaring: normalize_matrix(A * A).
DenseMatrix squaring_step(const DenseMatrix& a);

/// Power iteration through exponentiation by squaring.
///
/// Squares and max-normalizes A_i until max_norm(A_{i+1} - A_i) <= tol, then
/// projects a random starting vector through the final iterate. The starting
/// vector is re-drawn (up to three times) if the projection vanishes. The
/// eigenvalue is the Rayleigh quotient against the input matrix, not the
/// squared iterate. `iterations` counts squarings.
///
/// Throws DegenerateInput for the zero (or nilpotent) matrix and when every
/// starting vector is annihilated.
EigenEstimate power_iteration_squared(const DenseMatrix& a, const SolverConfig& cfg);

EigenEstimate solve_dominant(const DenseMatrix& a, const SolverConfig& cfg, Algorithm alg);

}  // namespace powersq
