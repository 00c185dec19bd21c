#include "jd/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace jd {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read(const json& obj, const char* key, std::optional<T>& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

bool DeviceOverrides::any() const {
  return l_h || c_f || c_j0_f || e_j0_k || n || v_x1_v || v_x2_v || phi_e || phi_x1 || phi_x2 ||
         xi;
}

void DeviceOverrides::apply_constants_to(DeviceParams& p) const {
  if (l_h) p.inductance_h = *l_h;
  if (c_f) p.gate_capacitance_f = *c_f;
  if (c_j0_f) p.junction_capacitance_f = *c_j0_f;
  if (e_j0_k) p.josephson_energy_k = *e_j0_k;
  if (n) p.cooper_pair_offset = *n;
  if (phi_e) p.phi_e = *phi_e;
  if (xi) p.xi = *xi;
}

void DeviceOverrides::apply_to(DeviceParams& p) const {
  apply_constants_to(p);
  if (v_x1_v) p.gate_voltage1_v = *v_x1_v;
  if (v_x2_v) p.gate_voltage2_v = *v_x2_v;
  if (phi_x1) p.phi_x1 = *phi_x1;
  if (phi_x2) p.phi_x2 = *phi_x2;
}

bool EffectiveOverrides::any() const { return eps1_k || eps2_k || ej1_k || ej2_k || j12_k; }

void EffectiveOverrides::apply_to(EffectiveParams& p) const {
  if (eps1_k) p.eps1 = *eps1_k;
  if (eps2_k) p.eps2 = *eps2_k;
  if (ej1_k) p.ej1 = *ej1_k;
  if (ej2_k) p.ej2 = *ej2_k;
  if (j12_k) p.j12 = *j12_k;
}

ParameterSnapshot RunConfig::parameters() const {
  if (device && effective) throw ConfigError("config sets both device and effective parameters");
  if (device) return *device;
  if (effective) return *effective;
  throw ConfigError("config sets neither device nor effective parameters");
}

ConfigDocument parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc, {"device", "effective", "thermal", "measures", "output_path", "emit_plot_script"},
                 "config");

  ConfigDocument out;
  if (doc.contains("device")) {
    const json& d = doc["device"];
    if (!d.is_object()) throw ConfigError("'device' must be an object");
    reject_unknown(d, {"l_h", "c_f", "c_j0_f", "e_j0_k", "n", "v_x1_v", "v_x2_v", "phi_e", "phi_x1",
                       "phi_x2", "xi"},
                   "device");
    out.has_device = true;
    read(d, "l_h", out.device.l_h);
    read(d, "c_f", out.device.c_f);
    read(d, "c_j0_f", out.device.c_j0_f);
    read(d, "e_j0_k", out.device.e_j0_k);
    read(d, "n", out.device.n);
    read(d, "v_x1_v", out.device.v_x1_v);
    read(d, "v_x2_v", out.device.v_x2_v);
    read(d, "phi_e", out.device.phi_e);
    read(d, "phi_x1", out.device.phi_x1);
    read(d, "phi_x2", out.device.phi_x2);
    read(d, "xi", out.device.xi);
  }
  if (doc.contains("effective")) {
    const json& e = doc["effective"];
    if (!e.is_object()) throw ConfigError("'effective' must be an object");
    reject_unknown(e, {"eps1_k", "eps2_k", "ej1_k", "ej2_k", "j12_k"}, "effective");
    out.has_effective = true;
    read(e, "eps1_k", out.effective.eps1_k);
    read(e, "eps2_k", out.effective.eps2_k);
    read(e, "ej1_k", out.effective.ej1_k);
    read(e, "ej2_k", out.effective.ej2_k);
    read(e, "j12_k", out.effective.j12_k);
  }
  if (out.has_device && out.has_effective) {
    throw ConfigError("config must contain exactly one of 'device' and 'effective'");
  }
  if (doc.contains("thermal")) {
    const json& t = doc["thermal"];
    if (!t.is_object()) throw ConfigError("'thermal' must be an object");
    reject_unknown(t, {"temperature_k"}, "thermal");
    read(t, "temperature_k", out.temperature_k);
  }
  if (doc.contains("measures")) {
    std::optional<std::vector<std::string>> names;
    read(doc, "measures", names);
    std::vector<Measure> ms;
    try {
      for (const auto& n : *names) ms.push_back(parse_measure(n));
    } catch (const SpecError& e) {
      throw ConfigError(e.what());
    }
    out.measures = ms;
  }
  read(doc, "output_path", out.output_path);
  read(doc, "emit_plot_script", out.emit_plot_script);
  return out;
}

ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace jd
