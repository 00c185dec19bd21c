#pragma once

#include "jd/density_matrix.hpp"
#include "jd/qmath.hpp"

namespace jd {

namespace constants {
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double flux_quantum = 2.067833848e-15;       // Wb, h/2e
}  // namespace constants

enum class Qubit { first, second };

/// Physical controls of the two-box circuit. Energies are in kelvin
/// (E / k_B); fluxes are in units of the flux quantum.
struct DeviceParams {
  double inductance_h = 30e-9;
  double gate_capacitance_f = 1e-6;
  double junction_capacitance_f = 1e-5;
  double josephson_energy_k = 0.02;  ///< single-SQUID E_J0; not fixed by the model, tune per device
  int cooper_pair_offset = 0;
  double gate_voltage1_v = 20e-6;
  double gate_voltage2_v = 20e-6;
  double phi_e = 0.5;
  double phi_x1 = 0.0;
  double phi_x2 = 0.0;
  double xi = 1.0;

  /// Throws InvalidParameter unless L > 0, C > 0, C_J0 > 0 and E_J0 >= 0.
  void validate() const;
};

/// Coefficients of the two-qubit Hamiltonian, all in kelvin.
struct EffectiveParams {
  double eps1 = 0.0;
  double eps2 = 0.0;
  double ej1 = 0.0;
  double ej2 = 0.0;
  double j12 = 0.0;

  /// eps1 = eps2 = eps, no intrabit coupling.
  static EffectiveParams symmetric(double eps, double j) { return {eps, eps, 0.0, 0.0, j}; }

  /// True for the symmetric Ising-like regime (equal fields, no intrabit term).
  bool is_symmetric_ising() const { return ej1 == 0.0 && ej2 == 0.0 && eps1 == eps2; }

  friend bool operator==(const EffectiveParams&, const EffectiveParams&) = default;
};

struct ThermalSpec {
  double temperature_k = 0.0;

  bool zero_temperature() const { return temperature_k == 0.0; }
};

/// cos(pi x) and sin(pi x) with exact zeros and signs at half-integers and
/// integers; exactly 2-periodic.
double cos_pi(double x);
double sin_pi(double x);

/// E_c = 2 e^2 / (C + C_J0), in kelvin.
double charge_energy(const DeviceParams& p);

/// eps_i = [C V_Xi / e - (2n + 1)] E_c / 2, in kelvin.
double epsilon_from_voltage(const DeviceParams& p, Qubit which);

/// xi * 2 E_J0 cos(pi phi_xi) cos(pi phi_e), in kelvin.
double intrabit_coupling(const DeviceParams& p, Qubit which);

/// -(4 E_J0^2 pi^2 L / Phi0^2) cos(pi phi_x1) cos(pi phi_x2) sin^2(pi phi_e), in kelvin.
double interbit_coupling(const DeviceParams& p);

EffectiveParams effective_params(const DeviceParams& p);

/// sum_k [eps_k sz^(k) - Ej_k sx^(k)] + J12 sx^(1) sx^(2) in |00>,|01>,|10>,|11>.
ComplexMatrix build_hamiltonian(const EffectiveParams& eff);

/// exp(-H/T)/Z for T > 0. At T = 0, the uniform mixture over the ground
/// eigenspace (eigenvalues within 1e-10 ||H||_F of the minimum), which is
/// the T -> 0+ limit. Throws InvalidParameter for T < 0.
DensityMatrix gibbs_state(const ComplexMatrix& h, ThermalSpec spec);

/// Analytic thermal X state for the symmetric Ising regime (Ej = 0,
/// eps1 = eps2, J12 != 0) at T > 0. Uses the normalization
/// alpha = J12^2 lambda^2 with lambda = sqrt(4 eps^2 + J12^2); with it every
/// entry coincides with exp(-H/T)/Z. Throws UnsupportedRegime otherwise.
DensityMatrix closed_form_thermal(const EffectiveParams& eff, double temperature_k);

/// Zero-temperature state of the model. A nondegenerate ground state is
/// returned as a pure projector. In the symmetric Ising regime at eps = 0
/// the lower |00>,|11> eigenvector is degenerate with the |01>,|10> one; the
/// state returned is the |00>,|11> branch, i.e. the eps -> 0 limit of the
/// ground state. Other degeneracies fall back to the ground-space mixture.
DensityMatrix ground_state(const EffectiveParams& eff);

/// gibbs_state of the model Hamiltonian for T > 0, ground_state at T = 0.
DensityMatrix thermal_state(const EffectiveParams& eff, ThermalSpec spec);

}  // namespace jd
