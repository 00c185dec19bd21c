#pragma once

#include "jd/qmath.hpp"

namespace jd {

/// A validated quantum state: Hermitian, positive semidefinite (eigenvalues
/// >= -1e-12) and unit trace (within 1e-10). Construction throws NotAState
/// otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// Normalized projector onto a (not necessarily normalized) pure state.
  static DensityMatrix pure(std::span<const Complex> amplitudes);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  const Complex& operator()(int r, int c) const { return m_(r, c); }

  /// True when every entry off the diagonal and anti-diagonal is below 1e-13.
  bool is_x_shaped() const;

 private:
  ComplexMatrix m_;
};

}  // namespace jd
