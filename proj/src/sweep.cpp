#include "jd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "jd/errors.hpp"

namespace jd {

namespace {

constexpr std::pair<Axis, std::string_view> kAxisNames[] = {
    {Axis::ratio_j_over_eps, "ratio_j_over_eps"}, {Axis::temperature, "temperature"},
    {Axis::phi_x_common, "phi_x_common"},         {Axis::phi_x1, "phi_x1"},
    {Axis::phi_x2, "phi_x2"},                     {Axis::voltage, "voltage"}};

constexpr std::pair<Measure, std::string_view> kMeasureNames[] = {
    {Measure::discord, "discord"},
    {Measure::eof, "eof"},
    {Measure::concurrence, "concurrence"},
    {Measure::mutual_information, "mutual_information"},
    {Measure::classical_correlation, "classical_correlation"}};

constexpr std::pair<FigureId, std::string_view> kFigureNames[] = {{FigureId::fig2a, "fig2a"},
                                                                  {FigureId::fig2b, "fig2b"},
                                                                  {FigureId::fig3, "fig3"},
                                                                  {FigureId::fig4, "fig4"},
                                                                  {FigureId::fig5, "fig5"}};

template <class E, size_t N>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[N], E value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "unknown";
}

template <class E, size_t N>
E parse_name(const std::pair<E, std::string_view> (&table)[N], std::string_view name,
             const char* what) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  throw SpecError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

bool needs_device(Axis axis) {
  return axis == Axis::phi_x_common || axis == Axis::phi_x1 || axis == Axis::phi_x2 ||
         axis == Axis::voltage;
}

struct Setup {
  ParameterSnapshot params;
  ThermalSpec thermal;
};

void apply_axis(Setup& setup, Axis axis, double value) {
  if (axis == Axis::temperature) {
    setup.thermal.temperature_k = value;
    return;
  }
  if (axis == Axis::ratio_j_over_eps) {
    auto& eff = std::get<EffectiveParams>(setup.params);
    eff.j12 = value * eff.eps1;
    return;
  }
  auto& dev = std::get<DeviceParams>(setup.params);
  switch (axis) {
    case Axis::phi_x_common:
      dev.phi_x1 = dev.phi_x2 = value;
      break;
    case Axis::phi_x1:
      dev.phi_x1 = value;
      break;
    case Axis::phi_x2:
      dev.phi_x2 = value;
      break;
    case Axis::voltage:
      dev.gate_voltage1_v = dev.gate_voltage2_v = value;
      break;
    default:
      break;
  }
}

// Runs task(i) for i in [0, n) on up to `threads` workers. Each index is
// evaluated exactly once and writes only its own slot; the first failure in
// index order is rethrown.
void parallel_for(int n, int threads, const std::function<void(int)>& task) {
  threads = std::clamp(threads, 1, std::max(n, 1));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_row(const SweepRow& row) {
  for (double v : row.values) {
    if (!std::isfinite(v)) throw ConsistencyError("sweep produced a non-finite value");
  }
}

double discord_of(const EffectiveParams& eff, double temperature_k) {
  return quantum_discord(thermal_state(eff, ThermalSpec{temperature_k})).discord;
}

double concurrence_of(const EffectiveParams& eff, double temperature_k) {
  return concurrence(thermal_state(eff, ThermalSpec{temperature_k}));
}

}  // namespace

EffectiveParams resolve(const ParameterSnapshot& params) {
  if (const auto* eff = std::get_if<EffectiveParams>(&params)) return *eff;
  return effective_params(std::get<DeviceParams>(params));
}

void SweepSpec::validate() const {
  if (!(start < stop)) throw SpecError("sweep needs start < stop");
  if (steps < 2) throw SpecError("sweep needs at least 2 steps");
  if (measures.empty()) throw SpecError("sweep needs at least one measure");
  if (!(thermal.temperature_k >= 0.0)) throw SpecError("temperature must be non-negative");
  if (variable == Axis::temperature && start < 0.0) {
    throw SpecError("temperature axis must start at or above 0 K");
  }
  const bool device = std::holds_alternative<DeviceParams>(fixed);
  if (needs_device(variable) && !device) {
    throw SpecError(std::string(to_string(variable)) + " axis needs device parameters");
  }
  if (variable == Axis::ratio_j_over_eps && device) {
    throw SpecError("ratio_j_over_eps axis needs effective parameters");
  }
  if (device) std::get<DeviceParams>(fixed).validate();
}

double SweepSpec::value_at(int index) const {
  if (index == steps - 1) return stop;
  return start + (stop - start) * index / (steps - 1);
}

std::vector<double> evaluate_measures(const ParameterSnapshot& params, ThermalSpec thermal,
                                      const std::vector<Measure>& measures) {
  const DensityMatrix rho = thermal_state(resolve(params), thermal);
  const bool full = std::any_of(measures.begin(), measures.end(), [](Measure m) {
    return m == Measure::discord || m == Measure::mutual_information ||
           m == Measure::classical_correlation;
  });
  CorrelationReport report;
  if (full) {
    report = quantum_discord(rho);
  } else {
    report.concurrence = concurrence(rho);
    report.eof = eof_from_concurrence(report.concurrence);
  }
  std::vector<double> out;
  out.reserve(measures.size());
  for (Measure m : measures) {
    switch (m) {
      case Measure::discord:
        out.push_back(report.discord);
        break;
      case Measure::eof:
        out.push_back(report.eof);
        break;
      case Measure::concurrence:
        out.push_back(report.concurrence);
        break;
      case Measure::mutual_information:
        out.push_back(report.mutual_information);
        break;
      case Measure::classical_correlation:
        out.push_back(report.classical_correlation);
        break;
    }
  }
  return out;
}

std::vector<SweepRow> sweep_1d(const SweepSpec& spec, SweepOptions options) {
  spec.validate();
  std::vector<SweepRow> rows(spec.steps);
  parallel_for(spec.steps, options.threads, [&](int i) {
    Setup setup{spec.fixed, spec.thermal};
    const double x = spec.value_at(i);
    apply_axis(setup, spec.variable, x);
    rows[i] = {{x}, evaluate_measures(setup.params, setup.thermal, spec.measures)};
    check_row(rows[i]);
  });
  return rows;
}

std::vector<SweepRow> sweep_2d(const SweepSpec& spec_x, const SweepSpec& spec_y,
                               SweepOptions options) {
  spec_x.validate();
  if (spec_x.variable == spec_y.variable) throw SpecError("2-D sweep needs distinct variables");
  if ((spec_x.variable == Axis::phi_x_common &&
       (spec_y.variable == Axis::phi_x1 || spec_y.variable == Axis::phi_x2)) ||
      (spec_y.variable == Axis::phi_x_common &&
       (spec_x.variable == Axis::phi_x1 || spec_x.variable == Axis::phi_x2))) {
    throw SpecError("phi_x_common overlaps the per-qubit flux axes");
  }
  SweepSpec y_checked = spec_y;
  y_checked.fixed = spec_x.fixed;
  y_checked.thermal = spec_x.thermal;
  y_checked.measures = spec_x.measures;
  y_checked.validate();

  const int nx = spec_x.steps;
  const int total = nx * spec_y.steps;
  std::vector<SweepRow> rows(total);
  parallel_for(total, options.threads, [&](int k) {
    const int iy = k / nx;
    const int ix = k % nx;
    Setup setup{spec_x.fixed, spec_x.thermal};
    const double x = spec_x.value_at(ix);
    const double y = spec_y.value_at(iy);
    apply_axis(setup, spec_x.variable, x);
    apply_axis(setup, spec_y.variable, y);
    rows[k] = {{x, y}, evaluate_measures(setup.params, setup.thermal, spec_x.measures)};
    check_row(rows[k]);
  });
  return rows;
}

CriticalPoint esd_temperature(const ParameterSnapshot& fixed, double t_max, double tol) {
  if (!(tol > 0.0)) throw SpecError("ESD tolerance must be positive");
  if (!(t_max > 0.0)) throw SpecError("ESD search needs t_max > 0");
  const EffectiveParams eff = resolve(fixed);
  auto entangled = [&](double t) { return concurrence_of(eff, t) > kConcurrenceThreshold; };

  if (!entangled(0.0)) {
    throw BracketError("never entangled: concurrence of the ground state is zero");
  }
  if (entangled(t_max)) {
    throw BracketError("still entangled at t_max = " + std::to_string(t_max) + " K");
  }
  double lo = 0.0;
  double hi = t_max;
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (entangled(mid) ? lo : hi) = mid;
    ++iterations;
  }
  CriticalPoint cp;
  cp.kind = CriticalKind::esd_temperature;
  cp.location = 0.5 * (lo + hi);
  cp.value_at = discord_of(eff, cp.location);
  cp.bracket_lo = lo;
  cp.bracket_hi = hi;
  cp.iterations = iterations;
  return cp;
}

CriticalPoint optimal_ratio(double temperature_k, double lo, double hi, double eps, double tol) {
  if (!(lo > 0.0 && lo < hi)) throw SpecError("ratio bracket must satisfy 0 < lo < hi");
  if (!(temperature_k >= 0.0)) throw SpecError("temperature must be non-negative");
  if (!(tol > 0.0)) throw SpecError("ratio tolerance must be positive");
  if (eps == 0.0) throw SpecError("optimal_ratio needs eps != 0");
  auto f = [&](double r) { return discord_of(EffectiveParams::symmetric(eps, r * eps), temperature_k); };

  constexpr int kScan = 97;
  std::vector<double> grid(kScan);
  std::vector<double> values(kScan);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (int i = 0; i < kScan; ++i) {
    grid[i] = i == 0 ? lo : i == kScan - 1 ? hi : std::exp(log_lo + (log_hi - log_lo) * i / (kScan - 1));
    values[i] = f(grid[i]);
  }
  const int best = int(std::max_element(values.begin(), values.end()) - values.begin());

  double a = grid[std::max(best - 1, 0)];
  double b = grid[std::min(best + 1, kScan - 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++iterations;
  }

  CriticalPoint cp;
  cp.kind = CriticalKind::optimal_ratio;
  cp.bracket_lo = a;
  cp.bracket_hi = b;
  cp.iterations = iterations;
  cp.location = 0.5 * (a + b);
  cp.value_at = f(cp.location);
  // Compare with the touched edge: monotone profiles end on the boundary.
  for (double edge : {lo, hi}) {
    if (std::abs(edge - a) <= tol || std::abs(edge - b) <= tol) {
      const double f_edge = edge == lo ? values.front() : values.back();
      if (f_edge >= cp.value_at) {
        cp.location = edge;
        cp.value_at = f_edge;
        cp.boundary = true;
        cp.bracket_lo = edge == lo ? lo : std::max(lo, hi - (b - a));
        cp.bracket_hi = edge == lo ? std::min(hi, lo + (b - a)) : hi;
      }
    }
  }
  return cp;
}

std::vector<FigureSeries> figure_preset(FigureId which) {
  std::vector<FigureSeries> out;
  auto ratio_spec = [](double t) {
    SweepSpec s;
    s.variable = Axis::ratio_j_over_eps;
    s.start = 0.1;
    s.stop = 50.0;
    s.steps = 501;
    s.fixed = EffectiveParams::symmetric(1.0, 0.0);
    s.thermal = {t};
    s.measures = {Measure::discord};
    return s;
  };
  auto label_t = [](double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "T=%gK", t);
    return std::string(buf);
  };
  switch (which) {
    case FigureId::fig2a:
      out.push_back({label_t(0.0), ratio_spec(0.0), std::nullopt});
      break;
    case FigureId::fig2b:
      for (double t : {0.1, 0.5, 1.0, 1.5, 2.0}) out.push_back({label_t(t), ratio_spec(t), std::nullopt});
      break;
    case FigureId::fig3:
      for (double v : {7.5e-6, 50e-6, 100e-6}) {
        DeviceParams dev;
        dev.inductance_h = 30e-9;
        dev.phi_x1 = dev.phi_x2 = 0.0;
        dev.gate_voltage1_v = dev.gate_voltage2_v = v;
        SweepSpec s;
        s.variable = Axis::temperature;
        s.start = 0.0;
        s.stop = 0.05;
        s.steps = 501;
        s.fixed = dev;
        s.thermal = {0.0};
        s.measures = {Measure::discord, Measure::concurrence, Measure::eof};
        char buf[32];
        std::snprintf(buf, sizeof buf, "V_X=%guV", v * 1e6);
        out.push_back({buf, s, std::nullopt});
      }
      break;
    case FigureId::fig4:
      for (double t : {0.0, 1e-3, 5e-3}) {
        DeviceParams dev;
        dev.inductance_h = 30e-9;
        dev.gate_voltage1_v = dev.gate_voltage2_v = 20e-6;
        SweepSpec s;
        s.variable = Axis::phi_x_common;
        s.start = 0.0;
        s.stop = 2.0;
        s.steps = 501;
        s.fixed = dev;
        s.thermal = {t};
        s.measures = {Measure::discord, Measure::concurrence, Measure::eof};
        out.push_back({label_t(t), s, std::nullopt});
      }
      break;
    case FigureId::fig5:
      for (double t : {0.0, 0.01}) {
        DeviceParams dev;
        dev.inductance_h = 30e-9;
        dev.gate_voltage1_v = dev.gate_voltage2_v = 20e-6;
        SweepSpec x;
        x.variable = Axis::phi_x1;
        x.start = 0.0;
        x.stop = 2.0;
        x.steps = 101;
        x.fixed = dev;
        x.thermal = {t};
        x.measures = {Measure::discord};
        SweepSpec y = x;
        y.variable = Axis::phi_x2;
        out.push_back({label_t(t), x, y});
      }
      break;
  }
  return out;
}

std::string_view to_string(Axis axis) { return name_of(kAxisNames, axis); }
std::string_view to_string(Measure measure) { return name_of(kMeasureNames, measure); }
std::string_view to_string(FigureId figure) { return name_of(kFigureNames, figure); }
std::string_view to_string(CriticalKind kind) {
  return kind == CriticalKind::esd_temperature ? "esd_temperature" : "optimal_ratio";
}
Axis parse_axis(std::string_view name) { return parse_name(kAxisNames, name, "axis"); }
Measure parse_measure(std::string_view name) { return parse_name(kMeasureNames, name, "measure"); }
FigureId parse_figure(std::string_view name) { return parse_name(kFigureNames, name, "figure"); }

}  // namespace jd
