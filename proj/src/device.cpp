#include "jd/device.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "jd/errors.hpp"

namespace jd {

namespace {

using std::numbers::pi;

// Reduces x to [0, 2); fmod is exact.
double reduce_period2(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  return r;
}

// cos(pi r) for r in [0, 1].
double cos_pi_half_period(double r) {
  if (r == 0.0) return 1.0;
  if (r == 0.5) return 0.0;
  if (r == 1.0) return -1.0;
  if (r < 0.25) return std::cos(pi * r);
  if (r <= 0.75) return std::sin(pi * (0.5 - r));
  return -std::cos(pi * (1.0 - r));
}

}  // namespace

double cos_pi(double x) {
  const double r = reduce_period2(x);
  // For r in [1, 2), r - 1 is exact.
  return r < 1.0 ? cos_pi_half_period(r) : -cos_pi_half_period(r - 1.0);
}

double sin_pi(double x) {
  const double r = reduce_period2(x);
  // sin(pi r) = cos(pi (r - 1/2)) on [0, 1]; cos is even.
  if (r < 1.0) return cos_pi_half_period(std::abs(r - 0.5));
  return -cos_pi_half_period(std::abs(r - 1.5));
}

void DeviceParams::validate() const {
  if (!(inductance_h > 0.0)) throw InvalidParameter("inductance must be positive");
  if (!(gate_capacitance_f > 0.0)) throw InvalidParameter("gate capacitance must be positive");
  if (!(junction_capacitance_f > 0.0)) {
    throw InvalidParameter("junction capacitance must be positive");
  }
  if (!(josephson_energy_k >= 0.0)) throw InvalidParameter("E_J0 must be non-negative");
}

double charge_energy(const DeviceParams& p) {
  const double total = p.gate_capacitance_f + p.junction_capacitance_f;
  if (!(total > 0.0)) throw InvalidParameter("C + C_J0 must be positive");
  const double e = constants::elementary_charge;
  return 2.0 * e * e / total / constants::boltzmann;
}

double epsilon_from_voltage(const DeviceParams& p, Qubit which) {
  const double v = which == Qubit::first ? p.gate_voltage1_v : p.gate_voltage2_v;
  const double bracket = p.gate_capacitance_f * v / constants::elementary_charge -
                         (2.0 * p.cooper_pair_offset + 1.0);
  return bracket * charge_energy(p) / 2.0;
}

double intrabit_coupling(const DeviceParams& p, Qubit which) {
  const double phi_x = which == Qubit::first ? p.phi_x1 : p.phi_x2;
  const double squid = 2.0 * p.josephson_energy_k * cos_pi(phi_x);
  return p.xi * squid * cos_pi(p.phi_e);
}

double interbit_coupling(const DeviceParams& p) {
  const double ej0_joule = p.josephson_energy_k * constants::boltzmann;
  const double phi0 = constants::flux_quantum;
  const double prefactor = 4.0 * ej0_joule * ej0_joule * pi * pi * p.inductance_h / (phi0 * phi0);
  const double s = sin_pi(p.phi_e);
  // The flux product is formed first so the result is exactly symmetric in
  // the two local fluxes.
  const double flux = cos_pi(p.phi_x1) * cos_pi(p.phi_x2);
  return -prefactor * flux * (s * s) / constants::boltzmann;
}

EffectiveParams effective_params(const DeviceParams& p) {
  p.validate();
  return {epsilon_from_voltage(p, Qubit::first), epsilon_from_voltage(p, Qubit::second),
          intrabit_coupling(p, Qubit::first), intrabit_coupling(p, Qubit::second),
          interbit_coupling(p)};
}

ComplexMatrix build_hamiltonian(const EffectiveParams& eff) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix sx = pauli::x();
  const ComplexMatrix sz = pauli::z();
  return kron(sz, id) * eff.eps1 - kron(sx, id) * eff.ej1 + kron(id, sz) * eff.eps2 -
         kron(id, sx) * eff.ej2 + kron(sx, sx) * eff.j12;
}

DensityMatrix gibbs_state(const ComplexMatrix& h, ThermalSpec spec) {
  const double t = spec.temperature_k;
  if (!(t >= 0.0)) throw InvalidParameter("temperature must be non-negative");
  const Spectrum s = hermitian_eigen(h);
  const int n = h.dim();
  const double lowest = s.eigenvalues.front();

  std::vector<double> weights(n);
  if (spec.zero_temperature()) {
    const double window = 1e-10 * h.frobenius_norm();
    for (int i = 0; i < n; ++i) weights[i] = s.eigenvalues[i] - lowest <= window ? 1.0 : 0.0;
  } else {
    for (int i = 0; i < n; ++i) weights[i] = std::exp(-(s.eigenvalues[i] - lowest) / t);
  }
  double z = 0.0;
  for (double w : weights) z += w;

  ComplexMatrix rho(n);
  const ComplexMatrix& v = s.eigenvectors;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        if (weights[k] != 0.0) sum += v(r, k) * weights[k] * std::conj(v(c, k));
      }
      rho(r, c) = sum / z;
    }
  }
  return DensityMatrix(rho);
}

DensityMatrix closed_form_thermal(const EffectiveParams& eff, double temperature_k) {
  if (!eff.is_symmetric_ising()) {
    throw UnsupportedRegime(
        "closed_form_thermal needs Ej = 0 and eps1 = eps2; use gibbs_state instead");
  }
  if (!(temperature_k > 0.0)) {
    throw UnsupportedRegime("closed_form_thermal needs T > 0; use ground_state instead");
  }
  if (eff.j12 == 0.0) {
    throw UnsupportedRegime("closed_form_thermal needs J12 != 0; use gibbs_state instead");
  }
  const double eps = eff.eps1;
  const double j = eff.j12;
  const double beta = 1.0 / temperature_k;
  const double lambda = std::hypot(2.0 * eps, j);

  // Hyperbolic functions scaled by exp(-m); the common factor cancels
  // between the entries and Z.
  const double m = beta * std::max(lambda, std::abs(j));
  const auto ch = [m](double x) { return 0.5 * (std::exp(x - m) + std::exp(-x - m)); };
  const auto sh = [m](double x) { return 0.5 * (std::exp(x - m) - std::exp(-x - m)); };

  const double z = 2.0 * ch(beta * lambda) + 2.0 * ch(beta * j);
  const double alpha = j * j * lambda * lambda;
  const double w_minus = j * j * (lambda * lambda * ch(beta * lambda) - 2.0 * eps * lambda * sh(beta * lambda));
  const double w_plus = j * j * (lambda * lambda * ch(beta * lambda) + 2.0 * eps * lambda * sh(beta * lambda));
  const double gamma = j * j * j * lambda * sh(beta * lambda);

  ComplexMatrix rho(4);
  rho(0, 0) = w_minus / (alpha * z);
  rho(3, 3) = w_plus / (alpha * z);
  rho(1, 1) = rho(2, 2) = ch(beta * j) / z;
  rho(1, 2) = rho(2, 1) = -sh(beta * j) / z;
  rho(0, 3) = rho(3, 0) = -gamma / (alpha * z);
  return DensityMatrix(rho);
}

DensityMatrix ground_state(const EffectiveParams& eff) {
  const ComplexMatrix h = build_hamiltonian(eff);
  const Spectrum s = hermitian_eigen(h);
  const double window = 1e-10 * h.frobenius_norm();
  int degeneracy = 0;
  for (double e : s.eigenvalues) {
    if (e - s.eigenvalues.front() <= window) ++degeneracy;
  }
  if (degeneracy == 1) {
    std::array<Complex, 4> psi{};
    for (int r = 0; r < 4; ++r) psi[r] = s.eigenvectors(r, 0);
    return DensityMatrix::pure(psi);
  }
  if (eff.is_symmetric_ising() && eff.j12 != 0.0) {
    // Lower eigenvector of [[2 eps, J], [J, -2 eps]]: (J, -(2 eps + lambda)).
    const double eps = eff.eps1;
    const double j = eff.j12;
    const double lambda = std::hypot(2.0 * eps, j);
    const double shifted = eps >= 0.0 ? 2.0 * eps + lambda : j * j / (lambda - 2.0 * eps);
    const std::array<Complex, 4> psi{j, 0.0, 0.0, -shifted};
    return DensityMatrix::pure(psi);
  }
  return gibbs_state(h, ThermalSpec{0.0});
}

DensityMatrix thermal_state(const EffectiveParams& eff, ThermalSpec spec) {
  if (spec.zero_temperature()) return ground_state(eff);
  return gibbs_state(build_hamiltonian(eff), spec);
}

}  // namespace jd
