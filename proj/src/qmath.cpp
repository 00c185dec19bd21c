#include "jd/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jd/errors.hpp"

namespace jd {

namespace {

void require_valid_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw InvalidDimension("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidDimension("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { require_valid_dim(dim); }

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> row_major) : dim_(dim) {
  require_valid_dim(dim);
  if (row_major.size() != size_t(dim * dim)) {
    throw InvalidDimension("expected " + std::to_string(dim * dim) + " entries, got " +
                           std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(int(values.size()));
  for (size_t i = 0; i < values.size(); ++i) m(int(i), int(i)) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  }
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(dim_);
  for (int i = 0; i < dim_ * dim_; ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) sum += std::norm(data_[i]);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (int i = 0; i < dim_ * dim_; ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (int i = 0; i < dim_ * dim_; ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (int i = 0; i < dim_ * dim_; ++i) data_[i] *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == 0.0) continue;
      for (int c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.dim_ == b.dim_ && std::equal(a.data_.begin(), a.data_.begin() + a.dim_ * a.dim_,
                                        b.data_.begin());
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidDimension("kron expects two 2x2 factors");
  }
  ComplexMatrix m(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return m;
}

Spectrum hermitian_eigen(const ComplexMatrix& input) {
  const int n = input.dim();
  double scale = 0.0;
  for (const Complex& z : input.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("hermitian_eigen: non-finite matrix entry");
    }
    scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  }
  // Power of two, so rescaling is exact.
  scale = scale == 0.0 ? 1.0 : std::ldexp(1.0, std::ilogb(scale));
  if (frobenius_distance(input, input.adjoint()) > 1e-10 * std::max(1.0, input.frobenius_norm())) {
    throw NotHermitian("hermitian_eigen: input is not Hermitian");
  }

  // Work on the exactly Hermitian part, rescaled to O(1) entries so norms
  // cannot overflow.
  ComplexMatrix a = (input * (1.0 / scale) + input.adjoint() * (1.0 / scale)) * 0.5;
  const double norm = a.frobenius_norm();
  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr int kMaxSweeps = 100;
  const double target = 1e-14 * norm;

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Phase column q so the pivot becomes real, then rotate as in the
        // real symmetric case.
        const Complex phase = std::conj(apq) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U = diag(1, phase) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * phase;
        const Complex u_qq = c * phase;

        // a <- a U
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        // a <- U^dag a
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Spectrum out{std::vector<double>(n), ComplexMatrix(n)};
  for (int c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real() * scale;
    for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4) throw InvalidDimension("partial_trace expects a 4x4 operator");
  ComplexMatrix out(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Subsystem::first ? rho(2 * i + k, 2 * j + k)
                                              : rho(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

ComplexMatrix matrix_function(const ComplexMatrix& a, const std::function<double(double)>& f) {
  const Spectrum spec = hermitian_eigen(a);
  const int n = a.dim();
  std::vector<double> fl(n);
  for (int i = 0; i < n; ++i) {
    fl[i] = f(spec.eigenvalues[i]);
    if (!std::isfinite(fl[i])) {
      throw DomainError("matrix_function: f is undefined at eigenvalue " +
                        std::to_string(spec.eigenvalues[i]));
    }
  }
  ComplexMatrix out(n);
  const ComplexMatrix& v = spec.eigenvectors;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) sum += v(r, k) * fl[k] * std::conj(v(c, k));
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  return matrix_function(a, [](double x) { return std::sqrt(clamp_nonnegative(x)); });
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return (a - b).frobenius_norm();
}

double clamp_nonnegative(double eigenvalue) {
  if (eigenvalue >= 0.0) return eigenvalue;
  if (eigenvalue >= -kNegativeEigenvalueClamp) return 0.0;
  throw DomainError("eigenvalue " + std::to_string(eigenvalue) + " is below the clamp window");
}

}  // namespace jd
