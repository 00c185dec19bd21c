#include "jd/density_matrix.hpp"

#include <cmath>
#include <string>

#include "jd/errors.hpp"

namespace jd {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  const Complex tr = m_.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw NotAState("trace is " + std::to_string(tr.real()) + ", expected 1");
  }
  Spectrum spec;
  try {
    spec = hermitian_eigen(m_);
  } catch (const NotHermitian&) {
    throw NotAState("density matrix is not Hermitian");
  }
  if (spec.eigenvalues.front() < -kNegativeEigenvalueClamp) {
    throw NotAState("density matrix has eigenvalue " + std::to_string(spec.eigenvalues.front()));
  }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  const int n = int(amplitudes.size());
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 == 0.0) throw NotAState("zero state vector");
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
  }
  return DensityMatrix(m);
}

bool DensityMatrix::is_x_shaped() const {
  const int n = m_.dim();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r == c || r + c == n - 1) continue;
      if (std::abs(m_(r, c)) > 1e-13) return false;
    }
  }
  return true;
}

}  // namespace jd
