#include "jd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jd/config.hpp"
#include "jd/correlations.hpp"
#include "jd/output.hpp"
#include "jd/sweep.hpp"

namespace jd::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string config_path;
  std::string out_path;
  bool emit_plot = false;
  bool dimensionless = false;
  int threads = 1;

  DeviceOverrides device;
  EffectiveOverrides effective;
  std::optional<double> eps, j, v_x, phi_x, temperature;
  std::vector<std::string> measures;

  std::string figure;
  std::optional<int> steps;

  std::string critical_kind;
  double t_max = 10.0;
  double tol = 1e-6;
  std::vector<double> bracket{0.1, 50.0};

  std::string var, var2;
  double start = 0.0, stop = 1.0, start2 = 0.0, stop2 = 1.0;
  std::optional<int> steps2;
};

template <class T>
void add_optional(CLI::App* app, const std::string& name, std::optional<T>& target,
                  const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void add_parameter_flags(CLI::App* app, Options& o) {
  add_optional(app, "--l_h", o.device.l_h, "inductance L [H]");
  add_optional(app, "--c_f", o.device.c_f, "gate capacitance C [F]");
  add_optional(app, "--c_j0_f", o.device.c_j0_f, "junction capacitance C_J0 [F]");
  add_optional(app, "--e_j0_k", o.device.e_j0_k, "single-SQUID Josephson energy E_J0 [K]");
  add_optional(app, "--n", o.device.n, "Cooper-pair number offset");
  add_optional(app, "--v_x1_v", o.device.v_x1_v, "gate voltage of qubit 1 [V]");
  add_optional(app, "--v_x2_v", o.device.v_x2_v, "gate voltage of qubit 2 [V]");
  add_optional(app, "--v_x_v", o.v_x, "both gate voltages [V]");
  add_optional(app, "--phi_e", o.device.phi_e, "external flux / Phi0");
  add_optional(app, "--phi_x1", o.device.phi_x1, "SQUID flux of qubit 1 / Phi0");
  add_optional(app, "--phi_x2", o.device.phi_x2, "SQUID flux of qubit 2 / Phi0");
  add_optional(app, "--phi_x", o.phi_x, "both SQUID fluxes / Phi0");
  add_optional(app, "--xi", o.device.xi, "intrabit proportionality constant");
  add_optional(app, "--eps1_k", o.effective.eps1_k, "charge energy eps1 [K]");
  add_optional(app, "--eps2_k", o.effective.eps2_k, "charge energy eps2 [K]");
  add_optional(app, "--ej1_k", o.effective.ej1_k, "intrabit coupling of qubit 1 [K]");
  add_optional(app, "--ej2_k", o.effective.ej2_k, "intrabit coupling of qubit 2 [K]");
  add_optional(app, "--j12_k", o.effective.j12_k, "interbit coupling J12 [K]");
  add_optional(app, "--eps", o.eps, "eps1 = eps2 [K]");
  add_optional(app, "--j", o.j, "J12 [K]");
  add_optional(app, "--temperature_k,--temp", o.temperature, "temperature [K]");
  app->add_option("--measures", o.measures, "measures to evaluate")->delimiter(',');
}

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("parameters must be finite numbers");
  }
}

RunConfig build_config(const Options& o) {
  ConfigDocument doc;
  if (!o.config_path.empty()) doc = load_config(o.config_path);

  const bool device_flags = o.device.any() || o.v_x || o.phi_x;
  const bool effective_flags = o.effective.any() || o.eps || o.j;
  if (device_flags && effective_flags) {
    throw ConfigError("device and effective parameter flags cannot be mixed");
  }
  const bool effective_mode = o.dimensionless || effective_flags || doc.has_effective;
  if (effective_mode && (device_flags || doc.has_device)) {
    throw ConfigError("dimensionless mode excludes device parameters");
  }

  RunConfig cfg;
  if (effective_mode) {
    EffectiveParams e = EffectiveParams::symmetric(1.0, 1.0);
    doc.effective.apply_to(e);
    if (o.eps) e.eps1 = e.eps2 = *o.eps;
    if (o.j) e.j12 = *o.j;
    o.effective.apply_to(e);
    require_finite({e.eps1, e.eps2, e.ej1, e.ej2, e.j12});
    cfg.effective = e;
  } else {
    DeviceParams d;
    doc.device.apply_to(d);
    if (o.v_x) d.gate_voltage1_v = d.gate_voltage2_v = *o.v_x;
    if (o.phi_x) d.phi_x1 = d.phi_x2 = *o.phi_x;
    o.device.apply_to(d);
    require_finite({d.inductance_h, d.gate_capacitance_f, d.junction_capacitance_f,
                    d.josephson_energy_k, d.gate_voltage1_v,
                    d.gate_voltage2_v, d.phi_e, d.phi_x1, d.phi_x2, d.xi});
    d.validate();
    cfg.device = d;
  }
  cfg.thermal.temperature_k = o.temperature.value_or(doc.temperature_k.value_or(0.0));
  if (!(cfg.thermal.temperature_k >= 0.0) || std::isinf(cfg.thermal.temperature_k)) throw ConfigError("temperature must be non-negative");

  if (!o.measures.empty()) {
    for (const auto& m : o.measures) cfg.measures.push_back(parse_measure(m));
  } else if (doc.measures) {
    cfg.measures = *doc.measures;
  }
  cfg.output_path = !o.out_path.empty() ? o.out_path : doc.output_path.value_or("");
  cfg.emit_plot_script = o.emit_plot || doc.emit_plot_script.value_or(false);
  return cfg;
}

// Writes to the named file, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string strip_csv(const std::string& path) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return path.substr(0, path.size() - 4);
  }
  return path;
}

std::vector<std::string> measure_names(const std::vector<Measure>& ms) {
  std::vector<std::string> out;
  for (Measure m : ms) out.emplace_back(to_string(m));
  return out;
}

int cmd_report(const Options& o, std::ostream& out) {
  const RunConfig cfg = build_config(o);
  const DensityMatrix rho = thermal_state(resolve(cfg.parameters()), cfg.thermal);
  const CorrelationReport r = quantum_discord(rho);
  std::ostringstream text;
  CsvWriter csv(text, {"mutual_information", "classical_correlation", "discord", "concurrence",
                       "eof", "theta_opt", "phi_opt"});
  const double row[] = {r.mutual_information,
                        r.classical_correlation,
                        r.discord,
                        r.concurrence,
                        r.eof,
                        r.optimal_measurement.theta,
                        r.optimal_measurement.phi};
  csv.row(row);
  emit(cfg.output_path, out, text.str());
  return kOk;
}

std::string axis_label(Axis axis) {
  switch (axis) {
    case Axis::ratio_j_over_eps:
      return "J12/eps";
    case Axis::temperature:
      return "T [K]";
    case Axis::phi_x_common:
      return "Phi_X/Phi_0";
    case Axis::phi_x1:
      return "Phi_X1/Phi_0";
    case Axis::phi_x2:
      return "Phi_X2/Phi_0";
    case Axis::voltage:
      return "V_X [V]";
  }
  return "";
}

int cmd_figure(const Options& o, std::ostream& out) {
  const FigureId id = parse_figure(o.figure);
  ConfigDocument doc;
  if (!o.config_path.empty()) doc = load_config(o.config_path);
  std::vector<FigureSeries> series = figure_preset(id);
  for (FigureSeries& s : series) {
    for (SweepSpec* spec : {&s.x, s.y ? &*s.y : nullptr}) {
      if (!spec) continue;
      if (auto* dev = std::get_if<DeviceParams>(&spec->fixed)) {
        doc.device.apply_constants_to(*dev);
        o.device.apply_constants_to(*dev);
      }
      if (o.steps) spec->steps = *o.steps;
    }
  }
  if (series.front().y) {
    for (FigureSeries& s : series) s.y->fixed = s.x.fixed;
  }

  std::string path = !o.out_path.empty() ? o.out_path
                                         : doc.output_path.value_or(std::string(to_string(id)) + ".csv");
  const std::string stem = strip_csv(path);
  const bool plot = o.emit_plot || doc.emit_plot_script.value_or(false);
  const SweepOptions sweep_options{o.threads};
  std::vector<PlotPanel> panels;
  std::vector<std::string> written;

  if (series.front().y) {
    for (size_t k = 0; k < series.size(); ++k) {
      const FigureSeries& s = series[k];
      const std::string file = stem + "_" + char('a' + k) + ".csv";
      std::vector<std::string> header{"series", std::string(to_string(s.x.variable)),
                                      std::string(to_string(s.y->variable))};
      for (auto& m : measure_names(s.x.measures)) header.push_back(m);
      std::ostringstream text;
      CsvWriter csv(text, header);
      for (const SweepRow& row : sweep_2d(s.x, *s.y, sweep_options)) {
        std::vector<double> numbers = row.axis;
        numbers.insert(numbers.end(), row.values.begin(), row.values.end());
        csv.row(s.label, numbers);
      }
      emit(file, out, text.str());
      written.push_back(file);
      PlotPanel p;
      p.csv_path = file;
      p.title = std::string(to_string(id)) + " " + s.label;
      p.x_label = axis_label(s.x.variable);
      p.y_label = axis_label(s.y->variable);
      p.x_column = 2;
      p.y_column = 3;
      p.z_column = 4;
      p.surface = true;
      panels.push_back(p);
    }
  } else {
    const SweepSpec& first = series.front().x;
    std::vector<std::string> header{"series", std::string(to_string(first.variable))};
    for (auto& m : measure_names(first.measures)) header.push_back(m);
    std::ostringstream text;
    CsvWriter csv(text, header);
    std::vector<std::string> labels;
    for (const FigureSeries& s : series) {
      labels.push_back(s.label);
      for (const SweepRow& row : sweep_1d(s.x, sweep_options)) {
        std::vector<double> numbers = row.axis;
        numbers.insert(numbers.end(), row.values.begin(), row.values.end());
        csv.row(s.label, numbers);
      }
    }
    const std::string file = stem + ".csv";
    emit(file, out, text.str());
    written.push_back(file);
    for (size_t m = 0; m < first.measures.size(); ++m) {
      PlotPanel p;
      p.csv_path = file;
      p.title = std::string(to_string(id)) + " " + std::string(to_string(first.measures[m]));
      p.x_label = axis_label(first.variable);
      p.y_label = std::string(to_string(first.measures[m]));
      p.x_column = 2;
      p.y_column = 3 + int(m);
      p.series = labels;
      panels.push_back(p);
    }
  }
  if (plot) {
    const std::string gp = stem + ".gp";
    emit(gp, out, gnuplot_script(panels));
    written.push_back(gp);
  }
  for (const auto& f : written) out << "wrote " << f << '\n';
  return kOk;
}

int cmd_critical(const Options& o, std::ostream& out) {
  CriticalPoint cp;
  std::string output_path = o.out_path;
  if (o.critical_kind == "esd") {
    const RunConfig cfg = build_config(o);
    output_path = cfg.output_path;
    cp = esd_temperature(cfg.parameters(), o.t_max, o.tol);
  } else if (o.critical_kind == "ratio") {
    if (o.bracket.size() != 2) throw ConfigError("--bracket takes two values");
    cp = optimal_ratio(o.temperature.value_or(0.0), o.bracket[0], o.bracket[1], o.eps.value_or(1.0),
                       o.tol);
  } else {
    throw ConfigError("critical kind must be 'esd' or 'ratio'");
  }
  std::ostringstream text;
  CsvWriter csv(text, {"kind", "location", "value_at", "bracket_lo", "bracket_hi", "iterations",
                       "boundary"});
  const std::vector<std::string> cells{std::string(to_string(cp.kind)),
                                       format_number(cp.location),
                                       format_number(cp.value_at),
                                       format_number(cp.bracket_lo),
                                       format_number(cp.bracket_hi),
                                       std::to_string(cp.iterations),
                                       cp.boundary ? "1" : "0"};
  csv.row(cells);
  emit(output_path, out, text.str());
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const RunConfig cfg = build_config(o);
  SweepSpec x;
  x.variable = parse_axis(o.var);
  x.start = o.start;
  x.stop = o.stop;
  x.fixed = cfg.parameters();
  x.thermal = cfg.thermal;
  if (!cfg.measures.empty()) x.measures = cfg.measures;

  std::vector<std::string> header{std::string(to_string(x.variable))};
  std::vector<SweepRow> rows;
  std::optional<SweepSpec> y;
  if (!o.var2.empty()) {
    x.steps = o.steps.value_or(101);
    y = x;
    y->variable = parse_axis(o.var2);
    y->start = o.start2;
    y->stop = o.stop2;
    y->steps = o.steps2.value_or(101);
    header.emplace_back(to_string(y->variable));
    rows = sweep_2d(x, *y, SweepOptions{o.threads});
  } else {
    x.steps = o.steps.value_or(501);
    rows = sweep_1d(x, SweepOptions{o.threads});
  }
  for (auto& m : measure_names(x.measures)) header.push_back(m);

  std::ostringstream text;
  CsvWriter csv(text, header);
  for (const SweepRow& row : rows) {
    std::vector<double> numbers = row.axis;
    numbers.insert(numbers.end(), row.values.begin(), row.values.end());
    csv.row(numbers);
  }
  emit(cfg.output_path, out, text.str());
  if (cfg.emit_plot_script && !cfg.output_path.empty()) {
    std::vector<PlotPanel> panels;
    for (size_t m = 0; m < x.measures.size(); ++m) {
      PlotPanel p;
      p.csv_path = cfg.output_path;
      p.title = std::string(to_string(x.measures[m]));
      p.x_label = axis_label(x.variable);
      p.y_label = y ? axis_label(y->variable) : std::string(to_string(x.measures[m]));
      p.x_column = 1;
      p.y_column = y ? 2 : 2 + int(m);
      p.z_column = y ? 3 + int(m) : 0;
      p.surface = y.has_value();
      panels.push_back(p);
    }
    emit(strip_csv(cfg.output_path) + ".gp", out, gnuplot_script(panels));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum discord and entanglement of a two-qubit Josephson charge-qubit circuit",
               "jdisc"};
  app.require_subcommand(1);
  app.add_option("--config", o.config_path, "JSON run configuration");
  app.add_option("--out", o.out_path, "output path (CSV)");
  app.add_flag("--emit-plot-script", o.emit_plot, "also write a gnuplot script next to the CSV");
  app.add_flag("--dimensionless", o.dimensionless, "take eps/J directly instead of device controls");
  app.add_option("--threads", o.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);

  CLI::App* report = app.add_subcommand("report", "correlations of a single thermal state");
  CLI::App* figure = app.add_subcommand("figure", "preset figure sweeps as CSV");
  CLI::App* critical = app.add_subcommand("critical", "ESD temperature or discord-optimal J/eps");
  CLI::App* sweep = app.add_subcommand("sweep", "custom 1-D or 2-D parameter sweep");
  for (CLI::App* sub : {report, figure, critical, sweep}) {
    sub->fallthrough();
    add_parameter_flags(sub, o);
  }
  figure->add_option("which", o.figure, "fig2a, fig2b, fig3, fig4 or fig5")->required();
  figure->add_option("--steps", o.steps, "override grid size per axis")->check(CLI::Range(2, 100000));
  critical->add_option("kind", o.critical_kind, "esd or ratio")->required();
  critical->add_option("--t-max", o.t_max, "upper end of the ESD search [K]");
  critical->add_option("--tol", o.tol, "bracket width at termination");
  critical->add_option("--bracket", o.bracket, "J/eps search interval")->expected(2);
  sweep->add_option("--var", o.var, "swept axis")->required();
  sweep->add_option("--start", o.start)->required();
  sweep->add_option("--stop", o.stop)->required();
  sweep->add_option("--steps", o.steps)->check(CLI::Range(2, 100000));
  sweep->add_option("--var2", o.var2, "second axis for a 2-D sweep");
  sweep->add_option("--start2", o.start2);
  sweep->add_option("--stop2", o.stop2);
  sweep->add_option("--steps2", o.steps2)->check(CLI::Range(2, 100000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (report->parsed()) return cmd_report(o, out);
    if (figure->parsed()) return cmd_figure(o, out);
    if (critical->parsed()) return cmd_critical(o, out);
    return cmd_sweep(o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const SpecError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidParameter& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const BracketError& e) {
    err << "search failed: " << e.what() << '\n';
    return kSearchFailure;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  }
}

}  // namespace jd::cli
