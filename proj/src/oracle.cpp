#include "powersq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "powersq/errors.hpp"

namespace powersq::oracle {
namespace {

constexpr int kMaxSweeps = 100;

double conj_of(double x) { return x; }
std::complex<double> conj_of(std::complex<double> x) { return std::conj(x); }
double real_of(double x) { return x; }
double real_of(std::complex<double> x) { return x.real(); }

template <typename T>
struct Work {
  std::size_t n;
  std::vector<T> a;  // row-major, overwritten towards diagonal form
  std::vector<T> v;  // accumulated rotations, eigenvectors in columns

  T& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
  T& vec(std::size_t r, std::size_t c) { return v[r * n + c]; }

  double off_diagonal_norm() const {
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) acc += std::norm(a[r * n + c]);
    return std::sqrt(acc);
  }

  // Annihilates (p, q) with U = [[c, s], [-s conj(w), c conj(w)]] acting on
  // columns p, q, where w = a_pq / |a_pq|.
  void rotate(std::size_t p, std::size_t q) {
    const T b = at(p, q);
    const double mod = std::abs(b);
    const T w = b / mod;
    const T wc = conj_of(w);
    const double app = real_of(at(p, p));
    const double aqq = real_of(at(q, q));

    const double theta = (aqq - app) / (2.0 * mod);
    double t;
    if (std::abs(theta) > 1e150) {
      t = 0.5 / theta;
    } else {
      t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
      const T akp = at(k, p);
      const T akq = at(k, q);
      at(k, p) = c * akp - s * wc * akq;
      at(k, q) = s * akp + c * wc * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const T apk = at(p, k);
      const T aqk = at(q, k);
      at(p, k) = c * apk - s * w * aqk;
      at(q, k) = s * apk + c * w * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const T vkp = vec(k, p);
      const T vkq = vec(k, q);
      vec(k, p) = c * vkp - s * wc * vkq;
      vec(k, q) = s * vkp + c * wc * vkq;
    }
    at(p, q) = T(0.0);
    at(q, p) = T(0.0);
    at(p, p) = T(app - t * mod);
    at(q, q) = T(aqq + t * mod);
  }
};

template <typename T>
Work<T> load(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  Work<T> w{n, std::vector<T>(n * n), std::vector<T>(n * n, T(0.0))};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if constexpr (std::is_same_v<T, double>) {
        w.a[r * n + c] = m.real()[r * n + c];
      } else {
        w.a[r * n + c] = m(r, c);
      }
    }
    w.v[r * n + r] = T(1.0);
  }
  return w;
}

template <typename T>
DenseVector column(Work<T>& w, std::size_t col) {
  const std::size_t n = w.n;
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double m = std::abs(w.vec(r, col));
    if (m > best_mod) {
      best_mod = m;
      best = r;
    }
  }
  const T phase = conj_of(w.vec(best, col)) / best_mod;
  std::vector<double> re(n);
  std::vector<double> im(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::complex<double> z = phase * w.vec(r, col);
    re[r] = z.real();
    im[r] = z.imag();
  }
  im[best] = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    return DenseVector::from_real(std::move(re));
  } else {
    return DenseVector::from_parts(std::move(re), std::move(im));
  }
}

template <typename T>
FullSpectrum solve(const DenseMatrix& m) {
  Work<T> w = load<T>(m);
  const std::size_t n = w.n;
  const double threshold = 1e-14 * max_norm(m) * static_cast<double>(n * n);

  int sweeps = 0;
  while (w.off_diagonal_norm() > threshold) {
    if (sweeps == kMaxSweeps) throw NonConvergence("jacobi_eigen: sweep cap reached");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mod = std::abs(w.at(p, q));
        if (mod == 0.0) continue;
        // Past the first sweeps, entries negligible against both diagonals are dropped.
        const double app = std::abs(w.at(p, p));
        const double aqq = std::abs(w.at(q, q));
        if (sweeps > 3 && app + 100.0 * mod == app && aqq + 100.0 * mod == aqq) {
          w.at(p, q) = T(0.0);
          w.at(q, p) = T(0.0);
          continue;
        }
        w.rotate(p, q);
      }
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto value = [&](std::size_t i) { return real_of(w.at(i, i)); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const double ax = std::abs(value(x));
    const double ay = std::abs(value(y));
    if (ax != ay) return ax > ay;
    return value(x) > value(y);
  });

  FullSpectrum out;
  out.sweeps = sweeps;
  for (std::size_t i : order) {
    out.values.push_back(value(i));
    out.vectors.push_back(column(w, i));
  }
  return out;
}

}  // namespace

FullSpectrum jacobi_eigen(const DenseMatrix& a) {
  if (a.dim() == 0) throw RejectedInput("jacobi_eigen: empty matrix");
  if (!is_self_adjoint(a, 1e-12)) throw RejectedInput("jacobi_eigen: matrix is not self-adjoint");
  return a.is_real() ? solve<double>(a) : solve<std::complex<double>>(a);
}

std::pair<double, double> char_poly_eigs_2x2(const DenseMatrix& a) {
  if (a.dim() != 2) throw RejectedInput("char_poly_eigs_2x2: matrix must be 2x2");
  if (!is_self_adjoint(a, 1e-12)) throw RejectedInput("char_poly_eigs_2x2: matrix is not self-adjoint");
  const double p = a(0, 0).real();
  const double d = a(1, 1).real();
  const double b = std::abs(a(0, 1));
  // Discriminant as a sum of squares: never negative, no cancellation.
  const double mid = 0.5 * (p + d);
  const double half_gap = std::hypot(0.5 * (p - d), b);
  return {mid + half_gap, mid - half_gap};
}

}  // namespace powersq::oracle
