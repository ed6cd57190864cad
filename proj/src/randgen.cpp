#include "powersq/randgen.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "powersq/errors.hpp"

namespace powersq {

double NormalSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double kScale = 0x1.0p-53;
  // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(base) ^ a) ^ b);
}

DenseMatrix random_matrix(const EnsembleSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw RejectedInput("random_matrix: n must be positive");
  NormalSource normal(spec.seed);

  std::vector<double> g_re(n * n);
  std::vector<double> g_im;
  if (spec.mode == Field::complex) {
    g_im.resize(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      g_re[k] = normal.next();
      g_im[k] = normal.next();
    }
  } else {
    for (double& x : g_re) x = normal.next();
  }

  std::vector<double> re(n * n);
  std::vector<double> im(spec.mode == Field::complex ? n * n : 0);
  for (std::size_t r = 0; r < n; ++r) {
    re[r * n + r] = g_re[r * n + r];
    for (std::size_t c = r + 1; c < n; ++c) {
      const std::size_t upper = r * n + c;
      const std::size_t lower = c * n + r;
      const double avg_re = (g_re[upper] + g_re[lower]) / 2.0;
      re[upper] = avg_re;
      re[lower] = avg_re;
      if (!im.empty()) {
        // (G + G^dagger)/2 at (r, c): (g_rc + conj(g_cr)) / 2.
        const double avg_im = (g_im[upper] - g_im[lower]) / 2.0;
        im[upper] = avg_im;
        im[lower] = -avg_im;
      }
    }
  }
  if (spec.mode == Field::complex) {
    DenseMatrix a = DenseMatrix::from_real(n, std::move(re));
    a = a.as_complex();
    std::copy(im.begin(), im.end(), a.imag().begin());
    return a;
  }
  return DenseMatrix::from_real(n, std::move(re));
}

DenseVector random_unit_vector(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw RejectedInput("random_unit_vector: n must be positive");
  NormalSource normal(seed);
  std::vector<double> x(n);
  for (double& v : x) v = normal.next();
  return normalize_vec(DenseVector::from_real(std::move(x)));
}

}  // namespace powersq
