#pragma once

#include <cstdint>
#include <random>

#include "powersq/dense.hpp"

namespace powersq {

/// Matrix ensemble: Field::real draws real symmetric matrices, Field::complex
/// draws complex Hermitian ones.
struct EnsembleSpec {
  std::size_t n = 0;
  Field mode = Field::real;
  std::uint64_t seed = 0;
};

/// Standard normal variates from a seeded std::mt19937_64.
///
/// The engine's output sequence is fixed by the C++ standard. Uniforms take
/// the top 53 bits of each draw; normals come in pairs from the Box-Muller
/// transform (cos variate first, then sin variate). std::normal_distribution
/// is not used because its algorithm differs between standard libraries.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer over the inputs; used to derive independent per-matrix
/// and per-round seeds from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// (G + G^dagger) / 2 with G filled row-major by i.i.d. standard normals
/// (complex mode: real part then imaginary part, each N(0, 1)). Entry (r, c)
/// for r < c is computed once and mirrored, so the result is exactly
/// self-adjoint; complex diagonals are exactly real.
DenseMatrix random_matrix(const EnsembleSpec& spec);

/// i.i.d. standard normal real entries scaled to max_norm_vec == 1.
DenseVector random_unit_vector(std::size_t n, std::uint64_t seed);

}  // namespace powersq
