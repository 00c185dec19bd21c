#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jd/device.hpp"
#include "jd/errors.hpp"
#include "jd/sweep.hpp"

namespace jd {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Only the device fields that were explicitly given.
struct DeviceOverrides {
  std::optional<double> l_h, c_f, c_j0_f, e_j0_k;
  std::optional<int> n;
  std::optional<double> v_x1_v, v_x2_v, phi_e, phi_x1, phi_x2, xi;

  bool any() const;
  void apply_to(DeviceParams& p) const;
  /// Physical constants only (L, C, C_J0, E_J0, n, Phi_e, xi), leaving the
  /// gate voltages and local fluxes to the caller.
  void apply_constants_to(DeviceParams& p) const;
};

struct EffectiveOverrides {
  std::optional<double> eps1_k, eps2_k, ej1_k, ej2_k, j12_k;

  bool any() const;
  void apply_to(EffectiveParams& p) const;
};

/// Input to every subcommand. Exactly one of device/effective is set once
/// `finalize` has run.
struct RunConfig {
  std::optional<DeviceParams> device;
  std::optional<EffectiveParams> effective;
  ThermalSpec thermal{};
  std::string output_path;
  bool emit_plot_script = false;
  std::vector<Measure> measures;

  ParameterSnapshot parameters() const;
};

/// The JSON document as written, before defaults are filled in.
struct ConfigDocument {
  DeviceOverrides device;
  bool has_device = false;
  EffectiveOverrides effective;
  bool has_effective = false;
  std::optional<double> temperature_k;
  std::optional<std::vector<Measure>> measures;
  std::optional<std::string> output_path;
  std::optional<bool> emit_plot_script;
};

/// Throws ConfigError on malformed JSON, unknown keys or wrong types.
ConfigDocument parse_config(const std::string& json_text);
ConfigDocument load_config(const std::string& path);

}  // namespace jd
