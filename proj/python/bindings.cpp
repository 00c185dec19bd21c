#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jd/correlations.hpp"
#include "jd/device.hpp"
#include "jd/errors.hpp"
#include "jd/sweep.hpp"

namespace py = pybind11;
using namespace jd;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1) || (a.shape(0) != 2 && a.shape(0) != 4)) {
    throw InvalidDimension("expected a 2x2 or 4x4 matrix");
  }
  const int n = int(a.shape(0));
  ComplexMatrix m(n);
  auto r = a.unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = r(i, j);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  const int n = m.dim();
  CArray out({n, n});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
  return out;
}

DensityMatrix to_state(const CArray& a) { return DensityMatrix(to_matrix(a)); }

Subsystem side_of(const std::string& s) {
  if (s == "first") return Subsystem::first;
  if (s == "second") return Subsystem::second;
  throw InvalidParameter("side must be 'first' or 'second'");
}

py::dict report_dict(const CorrelationReport& r) {
  py::dict d;
  d["mutual_information"] = r.mutual_information;
  d["classical_correlation"] = r.classical_correlation;
  d["discord"] = r.discord;
  d["concurrence"] = r.concurrence;
  d["eof"] = r.eof;
  d["theta_opt"] = r.optimal_measurement.theta;
  d["phi_opt"] = r.optimal_measurement.phi;
  d["evaluations"] = r.optimizer_evaluations;
  return d;
}

py::dict critical_dict(const CriticalPoint& cp) {
  py::dict d;
  d["kind"] = std::string(to_string(cp.kind));
  d["location"] = cp.location;
  d["value_at"] = cp.value_at;
  d["bracket"] = py::make_tuple(cp.bracket_lo, cp.bracket_hi);
  d["iterations"] = cp.iterations;
  d["boundary"] = cp.boundary;
  return d;
}

std::vector<Measure> measures_of(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const auto& n : names) out.push_back(parse_measure(n));
  return out;
}

// Rows of a sweep as (axis, values) arrays.
py::tuple rows_to_arrays(const std::vector<SweepRow>& rows) {
  const py::ssize_t n = py::ssize_t(rows.size());
  const py::ssize_t na = n ? py::ssize_t(rows[0].axis.size()) : 0;
  const py::ssize_t nv = n ? py::ssize_t(rows[0].values.size()) : 0;
  py::array_t<double> axis({n, na});
  py::array_t<double> values({n, nv});
  auto a = axis.mutable_unchecked<2>();
  auto v = values.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    for (py::ssize_t k = 0; k < na; ++k) a(i, k) = rows[i].axis[k];
    for (py::ssize_t k = 0; k < nv; ++k) v(i, k) = rows[i].values[k];
  }
  return py::make_tuple(axis, values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermal quantum discord and entanglement of two coupled Josephson charge qubits";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<NotAState>(m, "NotAState", base.ptr());
  py::register_exception<SpecError>(m, "SpecError", base.ptr());
  py::register_exception<BracketError>(m, "BracketError", base.ptr());

  py::class_<DeviceParams>(m, "DeviceParams")
      .def(py::init<>())
      .def_readwrite("inductance_h", &DeviceParams::inductance_h)
      .def_readwrite("gate_capacitance_f", &DeviceParams::gate_capacitance_f)
      .def_readwrite("junction_capacitance_f", &DeviceParams::junction_capacitance_f)
      .def_readwrite("josephson_energy_k", &DeviceParams::josephson_energy_k)
      .def_readwrite("cooper_pair_offset", &DeviceParams::cooper_pair_offset)
      .def_readwrite("gate_voltage1_v", &DeviceParams::gate_voltage1_v)
      .def_readwrite("gate_voltage2_v", &DeviceParams::gate_voltage2_v)
      .def_readwrite("phi_e", &DeviceParams::phi_e)
      .def_readwrite("phi_x1", &DeviceParams::phi_x1)
      .def_readwrite("phi_x2", &DeviceParams::phi_x2)
      .def_readwrite("xi", &DeviceParams::xi)
      .def("validate", &DeviceParams::validate);

  py::class_<EffectiveParams>(m, "EffectiveParams")
      .def(py::init([](double eps1, double eps2, double ej1, double ej2, double j12) {
             return EffectiveParams{eps1, eps2, ej1, ej2, j12};
           }),
           py::arg("eps1") = 0.0, py::arg("eps2") = 0.0, py::arg("ej1") = 0.0, py::arg("ej2") = 0.0,
           py::arg("j12") = 0.0)
      .def_static("symmetric", &EffectiveParams::symmetric, py::arg("eps"), py::arg("j"))
      .def_readwrite("eps1", &EffectiveParams::eps1)
      .def_readwrite("eps2", &EffectiveParams::eps2)
      .def_readwrite("ej1", &EffectiveParams::ej1)
      .def_readwrite("ej2", &EffectiveParams::ej2)
      .def_readwrite("j12", &EffectiveParams::j12)
      .def("__eq__", [](const EffectiveParams& a, const EffectiveParams& b) { return a == b; })
      .def("__repr__", [](const EffectiveParams& e) {
        return "EffectiveParams(eps1=" + std::to_string(e.eps1) + ", eps2=" + std::to_string(e.eps2) +
               ", ej1=" + std::to_string(e.ej1) + ", ej2=" + std::to_string(e.ej2) +
               ", j12=" + std::to_string(e.j12) + ")";
      });

  m.def("effective_params", &effective_params, py::arg("device"));
  m.def("charge_energy", &charge_energy, py::arg("device"));
  m.def("interbit_coupling", &interbit_coupling, py::arg("device"));
  m.def("hamiltonian", [](const EffectiveParams& e) { return to_array(build_hamiltonian(e)); },
        py::arg("params"));

  m.def("gibbs_state",
        [](const CArray& h, double t) { return to_array(gibbs_state(to_matrix(h), {t}).matrix()); },
        py::arg("hamiltonian"), py::arg("temperature"));
  m.def("closed_form_thermal",
        [](const EffectiveParams& e, double t) { return to_array(closed_form_thermal(e, t).matrix()); },
        py::arg("params"), py::arg("temperature"));
  m.def("ground_state", [](const EffectiveParams& e) { return to_array(ground_state(e).matrix()); },
        py::arg("params"));
  m.def(
      "thermal_state",
      [](const std::variant<EffectiveParams, DeviceParams>& p, double t) {
        return to_array(thermal_state(resolve(p), {t}).matrix());
      },
      py::arg("params"), py::arg("temperature"));

  m.def("von_neumann_entropy", [](const CArray& rho) { return von_neumann_entropy(to_state(rho)); },
        py::arg("rho"));
  m.def("mutual_information", [](const CArray& rho) { return mutual_information(to_state(rho)); },
        py::arg("rho"));
  m.def(
      "quantum_discord",
      [](const CArray& rho, const std::string& side) {
        return report_dict(quantum_discord(to_state(rho), side_of(side)));
      },
      py::arg("rho"), py::arg("side") = "first");
  m.def(
      "discord_grid_oracle",
      [](const CArray& rho, int n_theta, int n_phi, const std::string& side) {
        return discord_grid_oracle(to_state(rho), side_of(side), n_theta, n_phi);
      },
      py::arg("rho"), py::arg("n_theta") = 181, py::arg("n_phi") = 361, py::arg("side") = "first");
  m.def("concurrence", [](const CArray& rho) { return concurrence(to_state(rho)); }, py::arg("rho"));
  m.def("eof", [](const CArray& rho) { return eof(to_state(rho)); }, py::arg("rho"));
  m.def("eof_from_concurrence", &eof_from_concurrence, py::arg("c"));
  m.def("ground_state_discord_analytic", &ground_state_discord_analytic, py::arg("eps"), py::arg("j"));

  m.def(
      "esd_temperature",
      [](const std::variant<EffectiveParams, DeviceParams>& p, double t_max, double tol) {
        return critical_dict(esd_temperature(p, t_max, tol));
      },
      py::arg("params"), py::arg("t_max"), py::arg("tol") = 1e-6);
  m.def(
      "optimal_ratio",
      [](double t, double lo, double hi, double eps, double tol) {
        return critical_dict(optimal_ratio(t, lo, hi, eps, tol));
      },
      py::arg("temperature"), py::arg("lo") = 0.1, py::arg("hi") = 50.0, py::arg("eps") = 1.0,
      py::arg("tol") = 1e-6);

  m.def(
      "sweep",
      [](const std::variant<EffectiveParams, DeviceParams>& p, const std::string& var, double start,
         double stop, int steps, double temperature, const std::vector<std::string>& measures, int threads) {
        SweepSpec s;
        s.variable = parse_axis(var);
        s.start = start;
        s.stop = stop;
        s.steps = steps;
        s.fixed = p;
        s.thermal = {temperature};
        s.measures = measures_of(measures);
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = sweep_1d(s, {threads});
        }
        return rows_to_arrays(rows);
      },
      py::arg("params"), py::arg("var"), py::arg("start"), py::arg("stop"), py::arg("steps") = 501,
      py::arg("temperature") = 0.0, py::arg("measures") = std::vector<std::string>{"discord"},
      py::arg("threads") = 1,
      "1-D sweep. Returns (axis, values) arrays of shapes (steps, 1) and (steps, len(measures)).");

  m.def(
      "figure",
      [](const std::string& which, std::optional<int> steps, int threads) {
        py::list out;
        for (FigureSeries s : figure_preset(parse_figure(which))) {
          if (steps) {
            s.x.steps = *steps;
            if (s.y) s.y->steps = *steps;
          }
          std::vector<SweepRow> rows;
          {
            py::gil_scoped_release release;
            rows = s.y ? sweep_2d(s.x, *s.y, {threads}) : sweep_1d(s.x, {threads});
          }
          py::tuple arrays = rows_to_arrays(rows);
          out.append(py::make_tuple(s.label, arrays[0], arrays[1]));
        }
        return out;
      },
      py::arg("which"), py::arg("steps") = py::none(), py::arg("threads") = 1,
      "Preset figure sweeps as a list of (label, axis, values).");
}
