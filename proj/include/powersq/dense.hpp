#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace powersq {

using Scalar = std::complex<double>;

/// Whether a matrix or vector carries imaginary parts. Real-mode objects
/// store no imaginary array at all, so their scalars have im == 0 exactly.
enum class Field { real, complex };

inline Field join(Field a, Field b) {
  return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

class DenseVector {
 public:
  DenseVector() = default;
  /// Zero vector of length n.
  explicit DenseVector(std::size_t n, Field field = Field::real);
  /// Real-mode unless some value has a nonzero imaginary part.
  DenseVector(std::initializer_list<Scalar> values);

  static DenseVector from_real(std::vector<double> re);
  static DenseVector from_parts(std::vector<double> re, std::vector<double> im);
  static DenseVector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return re_.size(); }
  Field field() const { return im_.empty() ? Field::real : Field::complex; }
  bool is_real() const { return field() == Field::real; }

  Scalar operator[](std::size_t i) const {
    return {re_[i], im_.empty() ? 0.0 : im_[i]};
  }
  /// Stores v; a real-mode vector is promoted if v has an imaginary part.
  void set(std::size_t i, Scalar v);

  std::span<const double> real() const { return re_; }
  /// Empty in real mode.
  std::span<const double> imag() const { return im_; }
  std::span<double> real() { return re_; }
  std::span<double> imag() { return im_; }

  DenseVector as_complex() const;

  friend bool operator==(const DenseVector& a, const DenseVector& b);

 private:
  std::vector<double> re_;
  std::vector<double> im_;
};

/// Square n x n matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero matrix.
  explicit DenseMatrix(std::size_t n, Field field = Field::real);
  DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix diagonal(std::initializer_list<double> values);
  /// Row-major data of length n*n.
  static DenseMatrix from_real(std::size_t n, std::vector<double> re);
  static DenseMatrix from_parts(std::size_t n, std::vector<double> re, std::vector<double> im);

  std::size_t dim() const { return n_; }
  Field field() const { return im_.empty() ? Field::real : Field::complex; }
  bool is_real() const { return field() == Field::real; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    const std::size_t k = r * n_ + c;
    return {re_[k], im_.empty() ? 0.0 : im_[k]};
  }
  void set(std::size_t r, std::size_t c, Scalar v);

  std::span<const double> real() const { return re_; }
  std::span<const double> imag() const { return im_; }
  std::span<double> real() { return re_; }
  std::span<double> imag() { return im_; }

  DenseMatrix as_complex() const;

  /// Exact entrywise equality of values (field tags may differ).
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<double> re_;
  std::vector<double> im_;
};

// Kernels. All throw RejectedInput on dimension mismatch and NumericOverflow
// if a result entry is not finite.

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseVector matvec(const DenseMatrix& a, const DenseVector& x);
/// Conjugate transpose.
DenseMatrix adjoint(const DenseMatrix& a);
/// u * v^dagger.
DenseMatrix outer(const DenseVector& u, const DenseVector& v);

/// Largest entry modulus.
double max_norm(const DenseMatrix& a);
double max_norm_vec(const DenseVector& x);
/// a / max_norm(a); throws DegenerateInput for the zero matrix.
DenseMatrix normalize_matrix(const DenseMatrix& a);
/// x / max_norm_vec(x); throws DegenerateInput for the zero vector.
DenseVector normalize_vec(const DenseVector& x);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Scalar s, const DenseMatrix& a);
DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(Scalar s, const DenseVector& x);

/// x^dagger y (conjugate-linear in the first argument).
Scalar inner(const DenseVector& x, const DenseVector& y);
double norm2(const DenseVector& x);
Scalar trace(const DenseMatrix& a);
/// max |a(r,c) - conj(a(c,r))| <= tol.
bool is_self_adjoint(const DenseMatrix& a, double tol = 0.0);

}  // namespace powersq
