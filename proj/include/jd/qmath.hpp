#pragma once

#include <array>
#include <complex>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace jd {

using Complex = std::complex<double>;

/// Which factor of the two-qubit tensor product an operation refers to.
enum class Subsystem { first, second };

/// Dense complex matrix of dimension 2 or 4, stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(2) {}
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  int dim() const { return dim_; }
  Complex& operator()(int row, int col) { return data_[row * dim_ + col]; }
  const Complex& operator()(int row, int col) const { return data_[row * dim_ + col]; }
  std::span<const Complex> entries() const { return {data_.data(), size_t(dim_ * dim_)}; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int dim_;
  std::array<Complex, 16> data_{};
};

/// Pauli matrices in the basis where sigma_z|0> = +|0>.
namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascend; the
/// columns of `eigenvectors` are the matching orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Kronecker product of two 2x2 matrices in the |00>,|01>,|10>,|11> order.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic complex Jacobi. Throws NotHermitian if ||a - a^dag||_F exceeds
/// 1e-10 * max(1, ||a||_F).
Spectrum hermitian_eigen(const ComplexMatrix& a);

/// Reduced state of a 4x4 operator, keeping the requested factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

/// V f(Lambda) V^dag. Throws DomainError when f yields a non-finite value.
ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f);

/// Square root of a positive semidefinite matrix, with eigenvalues in
/// [-1e-12, 0) clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues in [-1e-12, 0) become 0; anything more negative throws.
double clamp_nonnegative(double eigenvalue);

inline constexpr double kNegativeEigenvalueClamp = 1e-12;

}  // namespace jd
