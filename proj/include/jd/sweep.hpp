#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jd/correlations.hpp"
#include "jd/device.hpp"

namespace jd {

enum class Axis { ratio_j_over_eps, temperature, phi_x_common, phi_x1, phi_x2, voltage };

enum class Measure { discord, eof, concurrence, mutual_information, classical_correlation };

/// Either Hamiltonian coefficients directly or the device controls that map to them.
using ParameterSnapshot = std::variant<EffectiveParams, DeviceParams>;

EffectiveParams resolve(const ParameterSnapshot& params);

/// Uniform, endpoint-inclusive grid over one control.
///
/// Axis units: ratio_j_over_eps sets J12 = ratio * eps1 (effective
/// parameters only); temperature in K; phi_* in flux quanta; voltage sets
/// both gate voltages, in V (phi_* and voltage need device parameters).
struct SweepSpec {
  Axis variable = Axis::temperature;
  double start = 0.0;
  double stop = 1.0;
  int steps = 501;
  ParameterSnapshot fixed = EffectiveParams{};
  ThermalSpec thermal{};
  std::vector<Measure> measures{Measure::discord};

  /// Throws SpecError on an inconsistent spec.
  void validate() const;

  /// start + (stop - start) * i / (steps - 1), so half-integer and integer
  /// flux values on the grid are exact.
  double value_at(int index) const;
};

struct SweepRow {
  std::vector<double> axis;    ///< one value for 1-D sweeps, (x, y) for 2-D
  std::vector<double> values;  ///< in the order of SweepSpec::measures
};

struct SweepOptions {
  int threads = 1;
};

/// Requested measures of the state at the given parameters and temperature.
std::vector<double> evaluate_measures(const ParameterSnapshot& params, ThermalSpec thermal,
                                      const std::vector<Measure>& measures);

/// Rows in ascending axis order. Output is independent of the thread count.
std::vector<SweepRow> sweep_1d(const SweepSpec& spec, SweepOptions options = {});

/// Row-major grid, y outer and x inner. Fixed parameters, temperature and
/// measures come from `spec_x`; the variables must differ.
std::vector<SweepRow> sweep_2d(const SweepSpec& spec_x, const SweepSpec& spec_y,
                               SweepOptions options = {});

enum class CriticalKind { esd_temperature, optimal_ratio };

struct CriticalPoint {
  CriticalKind kind = CriticalKind::esd_temperature;
  double location = 0.0;
  double value_at = 0.0;  ///< discord at `location`, bits
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  bool boundary = false;  ///< optimum sits on an edge of the search interval
};

inline constexpr double kConcurrenceThreshold = 1e-12;

/// Lowest temperature at which the concurrence vanishes, found by bisection
/// on concurrence(T) > 1e-12 over [0, t_max] until the bracket is <= tol.
/// Throws BracketError when the ground state is not entangled or the state
/// is still entangled at t_max.
CriticalPoint esd_temperature(const ParameterSnapshot& fixed, double t_max, double tol = 1e-6);

/// J12/eps maximizing the discord of the symmetric model at fixed eps and
/// temperature. A logarithmic scan locates the peak, golden-section search
/// refines it to width `tol`. Edge maxima are flagged, not rejected.
CriticalPoint optimal_ratio(double temperature_k, double lo, double hi, double eps = 1.0,
                            double tol = 1e-6);

enum class FigureId { fig2a, fig2b, fig3, fig4, fig5 };

struct FigureSeries {
  std::string label;
  SweepSpec x;
  std::optional<SweepSpec> y;  ///< set for surface plots
};

/// Parameters of each figure preset, one entry per plotted series.
std::vector<FigureSeries> figure_preset(FigureId which);

std::string_view to_string(Axis axis);
std::string_view to_string(Measure measure);
std::string_view to_string(FigureId figure);
std::string_view to_string(CriticalKind kind);
/// Throw SpecError on unknown names.
Axis parse_axis(std::string_view name);
Measure parse_measure(std::string_view name);
FigureId parse_figure(std::string_view name);

}  // namespace jd
