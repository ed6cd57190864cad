#include "powersq/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "powersq/errors.hpp"

namespace powersq {
namespace {

void require_finite(Scalar v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw RejectedInput("non-finite entry");
  }
}

void require_finite(std::span<const double> data) {
  for (double d : data) {
    if (!std::isfinite(d)) throw RejectedInput("non-finite entry");
  }
}

void check_result(std::span<const double> re, std::span<const double> im, const char* op) {
  auto bad = [](double d) { return !std::isfinite(d); };
  if (std::any_of(re.begin(), re.end(), bad) || std::any_of(im.begin(), im.end(), bad)) {
    throw NumericOverflow(std::string(op) + ": result has non-finite entries");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw RejectedInput(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                        " vs " + std::to_string(b) + ")");
  }
}

bool all_zero(std::span<const double> d) {
  return std::all_of(d.begin(), d.end(), [](double x) { return x == 0.0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseVector

DenseVector::DenseVector(std::size_t n, Field field) : re_(n, 0.0) {
  if (field == Field::complex) im_.assign(n, 0.0);
}

DenseVector::DenseVector(std::initializer_list<Scalar> values) {
  re_.reserve(values.size());
  bool complex = false;
  for (Scalar v : values) {
    require_finite(v);
    re_.push_back(v.real());
    complex = complex || v.imag() != 0.0;
  }
  if (complex) {
    for (Scalar v : values) im_.push_back(v.imag());
  }
}

DenseVector DenseVector::from_real(std::vector<double> re) {
  require_finite(re);
  DenseVector v;
  v.re_ = std::move(re);
  return v;
}

DenseVector DenseVector::from_parts(std::vector<double> re, std::vector<double> im) {
  require_same_dim(re.size(), im.size(), "DenseVector::from_parts");
  require_finite(re);
  require_finite(im);
  DenseVector v;
  v.re_ = std::move(re);
  if (!all_zero(im)) v.im_ = std::move(im);
  return v;
}

DenseVector DenseVector::basis(std::size_t n, std::size_t index) {
  if (index >= n) throw RejectedInput("DenseVector::basis: index out of range");
  DenseVector v(n);
  v.re_[index] = 1.0;
  return v;
}

void DenseVector::set(std::size_t i, Scalar v) {
  require_finite(v);
  if (v.imag() != 0.0 && im_.empty()) im_.assign(re_.size(), 0.0);
  re_[i] = v.real();
  if (!im_.empty()) im_[i] = v.imag();
}

DenseVector DenseVector::as_complex() const {
  DenseVector out = *this;
  if (out.im_.empty()) out.im_.assign(out.re_.size(), 0.0);
  return out;
}

bool operator==(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t n, Field field) : n_(n), re_(n * n, 0.0) {
  if (n == 0) throw RejectedInput("DenseMatrix: dimension must be positive");
  if (field == Field::complex) im_.assign(n * n, 0.0);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : DenseMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw RejectedInput("DenseMatrix: rows must form a square matrix");
    std::size_t c = 0;
    for (Scalar v : row) set(r, c++, v);
    ++r;
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.re_[i * n + i] = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  require_finite(values);
  DenseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.re_[i * m.n_ + i] = values[i];
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

DenseMatrix DenseMatrix::from_real(std::size_t n, std::vector<double> re) {
  if (n == 0) throw RejectedInput("DenseMatrix: dimension must be positive");
  require_same_dim(re.size(), n * n, "DenseMatrix::from_real");
  require_finite(re);
  DenseMatrix m;
  m.n_ = n;
  m.re_ = std::move(re);
  return m;
}

DenseMatrix DenseMatrix::from_parts(std::size_t n, std::vector<double> re,
                                    std::vector<double> im) {
  DenseMatrix m = from_real(n, std::move(re));
  require_same_dim(im.size(), n * n, "DenseMatrix::from_parts");
  require_finite(im);
  if (!all_zero(im)) m.im_ = std::move(im);
  return m;
}

void DenseMatrix::set(std::size_t r, std::size_t c, Scalar v) {
  require_finite(v);
  if (v.imag() != 0.0 && im_.empty()) im_.assign(re_.size(), 0.0);
  const std::size_t k = r * n_ + c;
  re_[k] = v.real();
  if (!im_.empty()) im_[k] = v.imag();
}

DenseMatrix DenseMatrix::as_complex() const {
  DenseMatrix out = *this;
  if (out.im_.empty()) out.im_.assign(out.re_.size(), 0.0);
  return out;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n_ != b.n_) return false;
  if (a.re_ != b.re_) return false;
  if (a.im_.empty() && b.im_.empty()) return true;
  const std::size_t len = a.re_.size();
  for (std::size_t k = 0; k < len; ++k) {
    const double ia = a.im_.empty() ? 0.0 : a.im_[k];
    const double ib = b.im_.empty() ? 0.0 : b.im_[k];
    if (ia != ib) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kernels

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matmul");
  const std::size_t n = a.dim();
  // i-k-j order: every output entry still accumulates k = 0..n-1 in sequence,
  // the same summation order as the textbook triple loop.
  if (a.is_real() && b.is_real()) {
    DenseMatrix c(n);
    const double* ar = a.real().data();
    const double* br = b.real().data();
    double* cr = c.real().data();
    for (std::size_t i = 0; i < n; ++i) {
      double* crow = cr + i * n;
      for (std::size_t k = 0; k < n; ++k) {
        const double aik = ar[i * n + k];
        const double* brow = br + k * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
      }
    }
    check_result(c.real(), c.imag(), "matmul");
    return c;
  }

  const DenseMatrix ac = a.as_complex();
  const DenseMatrix bc = b.as_complex();
  DenseMatrix c(n, Field::complex);
  const double* ar = ac.real().data();
  const double* ai = ac.imag().data();
  const double* br = bc.real().data();
  const double* bi = bc.imag().data();
  double* cr = c.real().data();
  double* ci = c.imag().data();
  for (std::size_t i = 0; i < n; ++i) {
    double* crow_r = cr + i * n;
    double* crow_i = ci + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double xr = ar[i * n + k];
      const double xi = ai[i * n + k];
      const double* brow_r = br + k * n;
      const double* brow_i = bi + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow_r[j] += xr * brow_r[j] - xi * brow_i[j];
        crow_i[j] += xr * brow_i[j] + xi * brow_r[j];
      }
    }
  }
  check_result(c.real(), c.imag(), "matmul");
  return c;
}

DenseVector matvec(const DenseMatrix& a, const DenseVector& x) {
  require_same_dim(a.dim(), x.size(), "matvec");
  const std::size_t n = a.dim();
  if (a.is_real() && x.is_real()) {
    DenseVector y(n);
    const double* ar = a.real().data();
    const double* xr = x.real().data();
    auto yr = y.real();
    for (std::size_t r = 0; r < n; ++r) {
      const double* row = ar + r * n;
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * xr[j];
      yr[r] = acc;
    }
    check_result(y.real(), y.imag(), "matvec");
    return y;
  }

  const DenseMatrix ac = a.as_complex();
  const DenseVector xc = x.as_complex();
  DenseVector y(n, Field::complex);
  const double* ar = ac.real().data();
  const double* ai = ac.imag().data();
  const double* xr = xc.real().data();
  const double* xi = xc.imag().data();
  auto yr = y.real();
  auto yi = y.imag();
  for (std::size_t r = 0; r < n; ++r) {
    double acc_r = 0.0;
    double acc_i = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = r * n + j;
      acc_r += ar[k] * xr[j] - ai[k] * xi[j];
      acc_i += ar[k] * xi[j] + ai[k] * xr[j];
    }
    yr[r] = acc_r;
    yi[r] = acc_i;
  }
  check_result(y.real(), y.imag(), "matvec");
  return y;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  const std::size_t n = a.dim();
  DenseMatrix t(n, a.field());
  auto ar = a.real();
  auto tr = t.real();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) tr[r * n + c] = ar[c * n + r];
  if (!a.is_real()) {
    auto ai = a.imag();
    auto ti = t.imag();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ti[r * n + c] = -ai[c * n + r];
  }
  return t;
}

DenseMatrix outer(const DenseVector& u, const DenseVector& v) {
  require_same_dim(u.size(), v.size(), "outer");
  const std::size_t n = u.size();
  if (n == 0) throw RejectedInput("outer: empty vectors");
  DenseMatrix m(n, join(u.field(), v.field()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar s = u[r] * std::conj(v[c]);
      m.real()[r * n + c] = s.real();
      if (!m.is_real()) m.imag()[r * n + c] = s.imag();
    }
  }
  check_result(m.real(), m.imag(), "outer");
  return m;
}

namespace {

double max_modulus(std::span<const double> re, std::span<const double> im) {
  double best = 0.0;
  if (im.empty()) {
    for (double x : re) best = std::max(best, std::abs(x));
  } else {
    for (std::size_t k = 0; k < re.size(); ++k) best = std::max(best, std::hypot(re[k], im[k]));
  }
  return best;
}

}  // namespace

double max_norm(const DenseMatrix& a) { return max_modulus(a.real(), a.imag()); }

double max_norm_vec(const DenseVector& x) { return max_modulus(x.real(), x.imag()); }

DenseMatrix normalize_matrix(const DenseMatrix& a) {
  const double m = max_norm(a);
  if (m == 0.0) throw DegenerateInput("normalize_matrix: zero matrix");
  DenseMatrix out = a;
  for (double& x : out.real()) x /= m;
  for (double& x : out.imag()) x /= m;
  return out;
}

DenseVector normalize_vec(const DenseVector& x) {
  const double m = max_norm_vec(x);
  if (m == 0.0) throw DegenerateInput("normalize_vec: zero vector");
  DenseVector out = x;
  for (double& v : out.real()) v /= m;
  for (double& v : out.imag()) v /= m;
  return out;
}

namespace {

template <typename Op>
DenseMatrix combine(const DenseMatrix& a, const DenseMatrix& b, Op op, const char* name) {
  require_same_dim(a.dim(), b.dim(), name);
  const Field f = join(a.field(), b.field());
  DenseMatrix out(a.dim(), f);
  std::transform(a.real().begin(), a.real().end(), b.real().begin(), out.real().begin(), op);
  if (f == Field::complex) {
    const DenseMatrix x = a.as_complex();
    const DenseMatrix y = b.as_complex();
    std::transform(x.imag().begin(), x.imag().end(), y.imag().begin(), out.imag().begin(), op);
  }
  check_result(out.real(), out.imag(), name);
  return out;
}

template <typename Op>
DenseVector combine(const DenseVector& a, const DenseVector& b, Op op, const char* name) {
  require_same_dim(a.size(), b.size(), name);
  const Field f = join(a.field(), b.field());
  DenseVector out(a.size(), f);
  std::transform(a.real().begin(), a.real().end(), b.real().begin(), out.real().begin(), op);
  if (f == Field::complex) {
    const DenseVector x = a.as_complex();
    const DenseVector y = b.as_complex();
    std::transform(x.imag().begin(), x.imag().end(), y.imag().begin(), out.imag().begin(), op);
  }
  check_result(out.real(), out.imag(), name);
  return out;
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  return combine(a, b, std::plus<>{}, "matrix add");
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  return combine(a, b, std::minus<>{}, "matrix subtract");
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
  return combine(a, b, std::plus<>{}, "vector add");
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  return combine(a, b, std::minus<>{}, "vector subtract");
}

DenseMatrix operator*(Scalar s, const DenseMatrix& a) {
  const std::size_t n = a.dim();
  if (a.is_real() && s.imag() == 0.0) {
    DenseMatrix out = a;
    for (double& x : out.real()) x *= s.real();
    check_result(out.real(), out.imag(), "matrix scale");
    return out;
  }
  DenseMatrix out(n, Field::complex);
  for (std::size_t k = 0; k < n * n; ++k) {
    const Scalar v = s * Scalar(a.real()[k], a.is_real() ? 0.0 : a.imag()[k]);
    out.real()[k] = v.real();
    out.imag()[k] = v.imag();
  }
  check_result(out.real(), out.imag(), "matrix scale");
  return out;
}

DenseVector operator*(Scalar s, const DenseVector& x) {
  if (x.is_real() && s.imag() == 0.0) {
    DenseVector out = x;
    for (double& v : out.real()) v *= s.real();
    check_result(out.real(), out.imag(), "vector scale");
    return out;
  }
  DenseVector out(x.size(), Field::complex);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar v = s * x[i];
    out.real()[i] = v.real();
    out.imag()[i] = v.imag();
  }
  check_result(out.real(), out.imag(), "vector scale");
  return out;
}

Scalar inner(const DenseVector& x, const DenseVector& y) {
  require_same_dim(x.size(), y.size(), "inner");
  if (x.is_real() && y.is_real()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x.real()[i] * y.real()[i];
    return acc;
  }
  double acc_r = 0.0;
  double acc_i = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar a = x[i];
    const Scalar b = y[i];
    // conj(a) * b
    acc_r += a.real() * b.real() + a.imag() * b.imag();
    acc_i += a.real() * b.imag() - a.imag() * b.real();
  }
  return {acc_r, acc_i};
}

double norm2(const DenseVector& x) {
  double acc = 0.0;
  for (double v : x.real()) acc += v * v;
  for (double v : x.imag()) acc += v * v;
  return std::sqrt(acc);
}

Scalar trace(const DenseMatrix& a) {
  Scalar acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a(i, i);
  return acc;
}

bool is_self_adjoint(const DenseMatrix& a, double tol) {
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

}  // namespace powersq
