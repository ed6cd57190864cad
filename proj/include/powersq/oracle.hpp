#pragma once

#include <utility>
#include <vector>

#include "powersq/dense.hpp"

// Reference eigensolver used by tests and by the benchmark's error column.
// Depends on dense.hpp only; it must never call into the solvers it checks.

namespace powersq::oracle {

struct FullSpectrum {
  /// Sorted by descending modulus; equal moduli by descending value.
  std::vector<double> values;
  /// Orthonormal (unit 2-norm), vectors[i] belongs to values[i]. Each has
  /// its largest-modulus entry real and positive.
  std::vector<DenseVector> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi eigendecomposition of a real symmetric or complex Hermitian
/// matrix.
///
/// Complex input uses complex rotations: the (p, q) entry's phase is first
/// absorbed into column q, leaving a real 2x2 block that a standard real
/// rotation annihilates. Sweeps stop once the off-diagonal Frobenius norm is
/// at most 1e-14 * max_norm(A) * n^2.
///
/// Throws RejectedInput if A is not self-adjoint within 1e-12 and
/// NonConvergence after 100 sweeps.
FullSpectrum jacobi_eigen(const DenseMatrix& a);

/// Closed-form eigenvalues of a 2x2 self-adjoint matrix,
/// (a+d)/2 +- hypot((a-d)/2, |b|), larger first.
std::pair<double, double> char_poly_eigs_2x2(const DenseMatrix& a);

}  // namespace powersq::oracle
