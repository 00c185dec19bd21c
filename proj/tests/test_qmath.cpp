#include <cmath>
#include <vector>

#include "doctest.h"
#include "jd/errors.hpp"
#include "jd/qmath.hpp"
#include "test_support.hpp"

using namespace jd;
using jd::testing::Rng;

namespace {

// Direct index-sum definition of the partial trace, written independently
// of the library's loop order.
ComplexMatrix brute_partial_trace(const ComplexMatrix& rho, Subsystem keep) {
  ComplexMatrix out(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const Complex v = rho(a * 2 + b, a2 * 2 + b2);
          if (keep == Subsystem::first && b == b2) out(a, a2) += v;
          if (keep == Subsystem::second && a == a2) out(b, b2) += v;
        }
  return out;
}

ComplexMatrix reconstruct(const Spectrum& s) {
  const std::vector<double>& l = s.eigenvalues;
  return s.eigenvectors * ComplexMatrix::diagonal(l) * s.eigenvectors.adjoint();
}

}  // namespace

TEST_CASE("kron of Pauli matrices") {
  const auto id = ComplexMatrix::identity(2);
  CHECK(kron(id, id) == ComplexMatrix::identity(4));

  const double zi[] = {1, 1, -1, -1};
  CHECK(kron(pauli::z(), id) == ComplexMatrix::diagonal(zi));

  const ComplexMatrix xx = kron(pauli::x(), pauli::x());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0));

  CHECK_THROWS_AS(kron(ComplexMatrix(4), id), InvalidDimension);
}

TEST_CASE("kron is bilinear") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = jd::testing::random_hermitian(rng, 2);
    const auto b = jd::testing::random_hermitian(rng, 2);
    const auto c = jd::testing::random_hermitian(rng, 2);
    const auto lhs = kron(a + b, c);
    const auto rhs = kron(a, c) + kron(b, c);
    for (int i = 0; i < 16; ++i) CHECK(std::abs(lhs.entries()[i] - rhs.entries()[i]) <= 1e-13);
  }
}

TEST_CASE("matrix construction rejects bad dimensions") {
  CHECK_THROWS_AS(ComplexMatrix(3), InvalidDimension);
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0, 3.0}), InvalidDimension);
  CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(4), InvalidDimension);
}

TEST_CASE("hermitian_eigen on simple inputs") {
  const double d[] = {-2, 0, 0, 2};
  const Spectrum s = hermitian_eigen(ComplexMatrix::diagonal(d));
  REQUIRE(s.eigenvalues.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(d[i]));

  const Spectrum sx = hermitian_eigen(pauli::x());
  CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));

  const Spectrum sy = hermitian_eigen(pauli::y());
  CHECK(sy.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_eigen reconstructs random Hermitian matrices") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const int dim = t % 2 ? 4 : 2;
    const auto h = jd::testing::random_hermitian(rng, dim, t % 3 ? 1.0 : 1e3);
    const Spectrum s = hermitian_eigen(h);
    CHECK(frobenius_distance(reconstruct(s), h) <= 1e-12 * std::max(1.0, h.frobenius_norm()));
    const auto vv = s.eigenvectors.adjoint() * s.eigenvectors;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) CHECK(std::abs(vv(r, c) - Complex(r == c)) <= 1e-12);
    for (int i = 1; i < dim; ++i) CHECK(s.eigenvalues[i - 1] <= s.eigenvalues[i]);
  }
}

TEST_CASE("hermitian_eigen is deterministic and handles degeneracy") {
  Rng rng(3);
  const auto h = jd::testing::random_hermitian(rng, 4);
  const Spectrum a = hermitian_eigen(h);
  const Spectrum b = hermitian_eigen(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);

  // sx (x) sx has two doubly degenerate eigenvalues.
  const auto xx = kron(pauli::x(), pauli::x());
  const Spectrum s = hermitian_eigen(xx);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[3] == doctest::Approx(1.0));
  CHECK(frobenius_distance(reconstruct(s), xx) <= 1e-12);
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  const ComplexMatrix m(2, {1.0, 2.0, 0.0, 1.0});
  CHECK_THROWS_AS(hermitian_eigen(m), NotHermitian);
}

TEST_CASE("partial trace") {
  const auto bell = jd::testing::bell_phi_plus();
  for (Subsystem keep : {Subsystem::first, Subsystem::second}) {
    const auto r = partial_trace(bell.matrix(), keep);
    CHECK(frobenius_distance(r, ComplexMatrix::identity(2) * 0.5) <= 1e-15);
  }

  Rng rng(5);
  const auto a = jd::testing::random_hermitian(rng, 2);
  const auto s = jd::testing::random_hermitian(rng, 2);
  CHECK(frobenius_distance(partial_trace(kron(a, s), Subsystem::first), a * s.trace()) <= 1e-13);
  CHECK(frobenius_distance(partial_trace(kron(a, s), Subsystem::second), s * a.trace()) <= 1e-13);

  for (int t = 0; t < 50; ++t) {
    const auto rho = jd::testing::random_state(rng);
    for (Subsystem keep : {Subsystem::first, Subsystem::second}) {
      const auto r = partial_trace(rho.matrix(), keep);
      CHECK(frobenius_distance(r, brute_partial_trace(rho.matrix(), keep)) <= 1e-15);
      CHECK(std::abs(r.trace() - rho.matrix().trace()) <= 1e-12);
      CHECK(frobenius_distance(r, r.adjoint()) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(partial_trace(ComplexMatrix(2), Subsystem::first), InvalidDimension);
}

TEST_CASE("matrix_function") {
  const auto e = matrix_function(ComplexMatrix(4), [](double x) { return std::exp(x); });
  CHECK(frobenius_distance(e, ComplexMatrix::identity(4)) <= 1e-15);

  const double d[] = {1, 4};
  const double r[] = {1, 2};
  CHECK(frobenius_distance(matrix_function(ComplexMatrix::diagonal(d),
                                           [](double x) { return std::sqrt(x); }),
                           ComplexMatrix::diagonal(r)) <= 1e-15);

  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto h = jd::testing::random_hermitian(rng, 4);
    CHECK(frobenius_distance(matrix_function(h, [](double x) { return x; }), h) <= 1e-12);

    const double beta = 0.7;
    const auto g = matrix_function(h, [beta](double x) { return std::exp(-beta * x); });
    const Spectrum s = hermitian_eigen(h);
    for (int k = 0; k < 4; ++k) {
      // exp(-beta H) v = exp(-beta l) v, column by column.
      for (int row = 0; row < 4; ++row) {
        Complex gv = 0.0;
        for (int c = 0; c < 4; ++c) gv += g(row, c) * s.eigenvectors(c, k);
        CHECK(std::abs(gv - std::exp(-beta * s.eigenvalues[k]) * s.eigenvectors(row, k)) <= 1e-12);
      }
    }
  }

  const double neg[] = {1, -1};
  CHECK_THROWS_AS(matrix_function(ComplexMatrix::diagonal(neg), [](double x) { return std::sqrt(x); }),
                  DomainError);
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(neg)), DomainError);
  const double tiny[] = {1, -1e-13};
  CHECK(psd_sqrt(ComplexMatrix::diagonal(tiny))(1, 1) == Complex(0.0));
}

TEST_CASE("frobenius_distance") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(frobenius_distance(i2, i2) == 0.0);
  CHECK(frobenius_distance(i2, ComplexMatrix(2)) == doctest::Approx(std::sqrt(2.0)));
  Rng rng(23);
  const auto a = jd::testing::random_hermitian(rng, 4);
  const auto b = jd::testing::random_hermitian(rng, 4);
  double sum = 0.0;
  for (int i = 0; i < 16; ++i) sum += std::norm(a.entries()[i] - b.entries()[i]);
  CHECK(frobenius_distance(a, b) == doctest::Approx(std::sqrt(sum)).epsilon(1e-14));
  CHECK_THROWS_AS(frobenius_distance(i2, ComplexMatrix(4)), InvalidDimension);
}

TEST_CASE("clamp_nonnegative") {
  CHECK(clamp_nonnegative(0.25) == 0.25);
  CHECK(clamp_nonnegative(-5e-13) == 0.0);
  CHECK_THROWS_AS(clamp_nonnegative(-1e-11), DomainError);
}
