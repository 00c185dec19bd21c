#pragma once

#include "jd/density_matrix.hpp"
#include "jd/qmath.hpp"

namespace jd {

/// Rank-1 projective measurement on one qubit: Pi_1 = |m><m| with
/// |m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, Pi_2 = I - Pi_1.
struct Measurement {
  double theta = 0.0;  ///< [0, pi]
  double phi = 0.0;    ///< [0, 2 pi)
  Subsystem side = Subsystem::first;

  /// Same Bloch direction with theta folded into [0, pi] and phi into [0, 2 pi).
  Measurement normalized() const;
};

/// All quantities in bits.
struct CorrelationReport {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  Measurement optimal_measurement;
  int optimizer_evaluations = 0;
};

/// -sum l log2 l over the spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho_a) + S(rho_b) - S(rho); values in (-1e-10, 0) are reported as 0.
double mutual_information(const DensityMatrix& rho);

/// sum_k p_k S(rho_{unmeasured|k}); outcomes with p_k <= 1e-14 contribute 0.
double conditional_entropy(const DensityMatrix& rho, const Measurement& m);

struct ClassicalCorrelation {
  double value = 0.0;
  Measurement measurement;
  int evaluations = 0;
};

/// max over projective measurements on `side` of S(rho_other) - conditional_entropy.
/// A 33 x 64 (theta x phi) grid seeds Nelder-Mead polishing.
ClassicalCorrelation classical_correlation(const DensityMatrix& rho,
                                           Subsystem side = Subsystem::first);

CorrelationReport quantum_discord(const DensityMatrix& rho, Subsystem side = Subsystem::first);

/// Discord with the measurement optimization replaced by exhaustive search
/// over theta_i = i pi / (n_theta - 1), phi_j = 2 pi j / n_phi. Never below
/// the true discord.
double discord_grid_oracle(const DensityMatrix& rho, Subsystem side, int n_theta, int n_phi);

/// Wootters concurrence. X-shaped states use the closed form, which is
/// checked against the general route; other states use the general route.
double concurrence(const DensityMatrix& rho);

/// 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)). X states only.
double concurrence_x_state(const DensityMatrix& rho);

/// Descending square roots of the spectrum of sqrt(rho) Y rho* Y sqrt(rho),
/// Y = sigma_y (x) sigma_y, combined as max(0, l1 - l2 - l3 - l4).
double concurrence_general(const DensityMatrix& rho);

/// -t log2 t - (1 - t) log2 (1 - t).
double binary_entropy(double t);

/// H((1 + sqrt(1 - C^2)) / 2) for a given concurrence.
double eof_from_concurrence(double c);

double eof(const DensityMatrix& rho);

/// Discord of the ground state of eps (sz1 + sz2) + J sx1 sx2:
/// -u log2 u - v log2 v, u = (2 eps + lambda)^2 / zeta, v = J^2 / zeta,
/// zeta = J^2 + (2 eps + lambda)^2, lambda = sqrt(4 eps^2 + J^2).
/// Throws InvalidParameter when eps = J = 0.
double ground_state_discord_analytic(double eps, double j);

}  // namespace jd
