#include <cmath>

#include "doctest.h"
#include "jd/errors.hpp"
#include "jd/sweep.hpp"

using namespace jd;

namespace {

SweepSpec small_ratio_sweep(double t, int steps = 41) {
  SweepSpec s;
  s.variable = Axis::ratio_j_over_eps;
  s.start = 0.1;
  s.stop = 50.0;
  s.steps = steps;
  s.fixed = EffectiveParams::symmetric(1.0, 0.0);
  s.thermal = {t};
  return s;
}

DeviceParams fig_device(double v) {
  DeviceParams d;
  d.gate_voltage1_v = d.gate_voltage2_v = v;
  return d;
}

double concurrence_at(const EffectiveParams& eff, double t) {
  return evaluate_measures(eff, {t}, {Measure::concurrence})[0];
}

}  // namespace

TEST_CASE("spec validation") {
  SweepSpec s = small_ratio_sweep(0.0);
  CHECK_NOTHROW(s.validate());

  auto bad = s;
  bad.stop = bad.start;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = s;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = s;
  bad.measures.clear();
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = s;
  bad.thermal = {-1.0};
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad = s;
  bad.fixed = DeviceParams{};
  CHECK_THROWS_AS(bad.validate(), SpecError);

  SweepSpec flux;
  flux.variable = Axis::phi_x1;
  flux.fixed = EffectiveParams::symmetric(1, 1);
  CHECK_THROWS_AS(flux.validate(), SpecError);
  flux.fixed = DeviceParams{};
  CHECK_NOTHROW(flux.validate());

  SweepSpec temp;
  temp.variable = Axis::temperature;
  temp.start = -0.1;
  CHECK_THROWS_AS(temp.validate(), SpecError);

  CHECK_THROWS_AS(sweep_1d(bad), SpecError);
}

TEST_CASE("grid is endpoint inclusive") {
  SweepSpec s;
  s.start = 0.0;
  s.stop = 2.0;
  s.steps = 501;
  CHECK(s.value_at(0) == 0.0);
  CHECK(s.value_at(125) == 0.5);
  CHECK(s.value_at(250) == 1.0);
  CHECK(s.value_at(375) == 1.5);
  CHECK(s.value_at(500) == 2.0);
  s.start = 0.1;
  s.stop = 50.0;
  CHECK(s.value_at(500) == 50.0);
}

TEST_CASE("2-D sweep rejects duplicate variables") {
  SweepSpec x;
  x.variable = Axis::phi_x1;
  x.fixed = DeviceParams{};
  x.start = 0;
  x.stop = 1;
  x.steps = 3;
  CHECK_THROWS_AS(sweep_2d(x, x), SpecError);
  SweepSpec y = x;
  y.variable = Axis::phi_x_common;
  CHECK_THROWS_AS(sweep_2d(x, y), SpecError);
  y.variable = Axis::temperature;
  const auto rows = sweep_2d(x, y);
  REQUIRE(rows.size() == 9);
  CHECK(rows[1].axis == std::vector<double>{0.5, 0.0});
  CHECK(rows[3].axis == std::vector<double>{0.0, 0.5});
}

TEST_CASE("ratio sweep at T = 0 rises towards 1") {
  const auto rows = sweep_1d(small_ratio_sweep(0.0, 101));
  REQUIRE(rows.size() == 101);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].axis[0] > rows[i - 1].axis[0]);
    CHECK(rows[i].values[0] >= rows[i - 1].values[0] - 1e-6);
  }
  CHECK(rows.back().values[0] > 0.998);
  CHECK(rows.back().values[0] <= 1.0);
}

TEST_CASE("discord decreases with temperature") {
  SweepSpec s;
  s.variable = Axis::temperature;
  s.start = 0.0;
  s.stop = 3.0;
  s.steps = 61;
  s.fixed = EffectiveParams::symmetric(1.0, 2.0);
  s.measures = {Measure::discord, Measure::concurrence, Measure::eof, Measure::mutual_information,
                Measure::classical_correlation};
  const auto rows = sweep_1d(s);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].values[0] <= rows[i - 1].values[0] + 1e-6);
    CHECK(rows[i].values[1] <= rows[i - 1].values[1] + 1e-12);
  }
  for (const auto& r : rows) {
    CHECK(r.values[0] == doctest::Approx(r.values[3] - r.values[4]).epsilon(1e-12));
  }
}

TEST_CASE("measure subsets agree with the full evaluation") {
  const EffectiveParams eff = EffectiveParams::symmetric(0.7, -1.2);
  const auto all = evaluate_measures(eff, {0.4}, {Measure::discord, Measure::concurrence, Measure::eof});
  const auto ent = evaluate_measures(eff, {0.4}, {Measure::eof, Measure::concurrence});
  CHECK(ent[0] == all[2]);
  CHECK(ent[1] == all[1]);
}

TEST_CASE("common-flux sweep is 1-periodic") {
  SweepSpec s;
  s.variable = Axis::phi_x_common;
  s.start = 0.0;
  s.stop = 2.0;
  s.steps = 81;
  s.fixed = fig_device(20e-6);
  s.measures = {Measure::discord, Measure::eof};
  for (double t : {0.0, 1e-3, 5e-3}) {
    s.thermal = {t};
    const auto rows = sweep_1d(s);
    for (int i = 0; i + 40 < 81; ++i) {
      CHECK(std::abs(rows[i].values[0] - rows[i + 40].values[0]) <= 1e-10);
      CHECK(std::abs(rows[i].values[1] - rows[i + 40].values[1]) <= 1e-10);
    }
    // Coupling vanishes at half-integer flux.
    CHECK(std::abs(rows[20].values[0]) <= 1e-9);
    CHECK(rows[20].values[1] == 0.0);
    if (t == 0.0) {
      double best = 0;
      for (const auto& r : rows) best = std::max(best, r.values[0]);
      CHECK(rows[0].values[0] >= best - 1e-10);
      CHECK(rows[40].values[0] >= best - 1e-10);
      CHECK(rows[80].values[0] >= best - 1e-10);
    }
  }
}

TEST_CASE("flux surface symmetry and zero lines") {
  SweepSpec x;
  x.variable = Axis::phi_x1;
  x.start = 0.0;
  x.stop = 2.0;
  x.steps = 21;
  x.fixed = fig_device(20e-6);
  SweepSpec y = x;
  y.variable = Axis::phi_x2;
  const auto cold = sweep_2d(x, y);
  x.thermal = {0.01};
  const auto warm = sweep_2d(x, y);
  REQUIRE(cold.size() == 441);
  double best = 0;
  for (const auto& r : cold) best = std::max(best, r.values[0]);
  for (int iy = 0; iy < 21; ++iy) {
    for (int ix = 0; ix < 21; ++ix) {
      const auto& r = cold[iy * 21 + ix];
      CHECK(std::abs(r.values[0] - cold[ix * 21 + iy].values[0]) <= 1e-12);
      CHECK(r.values[0] >= warm[iy * 21 + ix].values[0] - 1e-9);
      if (ix == 5 || ix == 15 || iy == 5 || iy == 15) CHECK(std::abs(r.values[0]) <= 1e-9);
    }
  }
  CHECK(cold[0].values[0] >= best - 1e-12);
  CHECK(cold[10 * 21 + 10].values[0] >= best - 1e-12);
}

TEST_CASE("results do not depend on the thread count") {
  const auto spec = small_ratio_sweep(0.5, 37);
  const auto one = sweep_1d(spec, {1});
  for (int threads : {2, 3, 8}) {
    const auto many = sweep_1d(spec, {threads});
    REQUIRE(many.size() == one.size());
    for (size_t i = 0; i < one.size(); ++i) {
      CHECK(many[i].axis == one[i].axis);
      CHECK(many[i].values == one[i].values);
    }
  }
}

TEST_CASE("ESD temperature") {
  CHECK_THROWS_AS(esd_temperature(EffectiveParams::symmetric(0.02, 0.0), 1.0), BracketError);
  CHECK_THROWS_WITH_AS(esd_temperature(EffectiveParams::symmetric(0.02, 0.0), 1.0),
                       doctest::Contains("never entangled"), BracketError);
  CHECK_THROWS_AS(esd_temperature(EffectiveParams::symmetric(0.02, -0.02), 1e-4), BracketError);
  CHECK_THROWS_AS(esd_temperature(EffectiveParams::symmetric(0.02, -0.02), 1.0, 0.0), SpecError);

  const double tol = 1e-6;
  const auto eff = EffectiveParams::symmetric(0.02, -0.02);
  const auto cp = esd_temperature(eff, 1.0, tol);
  CHECK(cp.kind == CriticalKind::esd_temperature);
  CHECK(cp.bracket_hi - cp.bracket_lo <= tol);
  CHECK(cp.location > 0.0);
  CHECK(concurrence_at(eff, cp.location - 2 * tol) > 0.0);
  CHECK(concurrence_at(eff, cp.location + 2 * tol) == 0.0);
  CHECK(cp.iterations == 20);

  const auto after = evaluate_measures(eff, {2 * cp.location}, {Measure::discord, Measure::concurrence});
  CHECK(after[1] == 0.0);
  CHECK(after[0] > 1e-4);
}

TEST_CASE("ESD on the low-voltage device") {
  const auto cp = esd_temperature(fig_device(7.5e-6), 0.05);
  const auto eff = resolve(fig_device(7.5e-6));
  CHECK(concurrence_at(eff, cp.location + 2e-6) == 0.0);
  CHECK(evaluate_measures(fig_device(7.5e-6), {2 * cp.location}, {Measure::discord})[0] > 1e-4);
  // Larger single-qubit splitting keeps the state entangled to higher T.
  const auto hot = esd_temperature(fig_device(100e-6), 0.5);
  CHECK(hot.location > cp.location);
}

TEST_CASE("optimal ratio") {
  CHECK_THROWS_AS(optimal_ratio(0.5, 0.0, 10.0), SpecError);
  CHECK_THROWS_AS(optimal_ratio(0.5, 5.0, 1.0), SpecError);
  CHECK_THROWS_AS(optimal_ratio(-0.5, 1.0, 5.0), SpecError);

  const auto cold = optimal_ratio(0.0, 0.1, 50.0);
  CHECK(cold.boundary);
  CHECK(cold.location == 50.0);
  CHECK(cold.value_at == doctest::Approx(0.99884738067839925).epsilon(5e-5));

  const auto warm = optimal_ratio(0.5, 0.1, 50.0);
  CHECK_FALSE(warm.boundary);
  CHECK(warm.value_at <= 1.0);
  CHECK(warm.bracket_hi - warm.bracket_lo <= 1e-6);
  CHECK(warm.location > 0.1);
  CHECK(warm.location < 50.0);
  // Dense scan cross-check.
  double best = 0, best_at = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r = 0.1 + (50.0 - 0.1) * i / 9999.0;
    const double d = evaluate_measures(EffectiveParams::symmetric(1.0, r), {0.5}, {Measure::discord})[0];
    if (d > best) {
      best = d;
      best_at = r;
    }
  }
  CHECK(warm.value_at >= best - 1e-7);
  CHECK(std::abs(warm.location - best_at) <= 0.05);

  for (double t : {0.1, 1.0, 1.5, 2.0}) {
    const auto cp = optimal_ratio(t, 0.1, 50.0);
    CHECK(std::isfinite(cp.location));
    CHECK(cp.location > 0.0);
    CHECK(cp.value_at > 0.0);
  }
}

TEST_CASE("figure presets") {
  const auto f2b = figure_preset(FigureId::fig2b);
  REQUIRE(f2b.size() == 5);
  const double temps[] = {0.1, 0.5, 1.0, 1.5, 2.0};
  for (int i = 0; i < 5; ++i) CHECK(f2b[i].x.thermal.temperature_k == temps[i]);
  CHECK(f2b[1].label == "T=0.5K");

  const auto f3 = figure_preset(FigureId::fig3);
  REQUIRE(f3.size() == 3);
  const double volts[] = {7.5e-6, 50e-6, 100e-6};
  for (int i = 0; i < 3; ++i) {
    const auto& dev = std::get<DeviceParams>(f3[i].x.fixed);
    CHECK(dev.gate_voltage1_v == volts[i]);
    CHECK(dev.gate_voltage2_v == volts[i]);
    CHECK(dev.inductance_h == 30e-9);
    CHECK(dev.phi_x1 == 0.0);
    CHECK(f3[i].x.variable == Axis::temperature);
  }
  CHECK(f3[0].label == "V_X=7.5uV");

  const auto f4 = figure_preset(FigureId::fig4);
  REQUIRE(f4.size() == 3);
  CHECK(f4[0].x.thermal.temperature_k == 0.0);
  CHECK(f4[1].x.thermal.temperature_k == 1e-3);
  CHECK(f4[2].x.thermal.temperature_k == 5e-3);
  CHECK(std::get<DeviceParams>(f4[0].x.fixed).gate_voltage1_v == 20e-6);

  const auto f5 = figure_preset(FigureId::fig5);
  REQUIRE(f5.size() == 2);
  REQUIRE(f5[0].y.has_value());
  CHECK(f5[0].x.steps == 101);
  CHECK(f5[1].x.thermal.temperature_k == 0.01);

  for (auto id : {FigureId::fig2a, FigureId::fig2b, FigureId::fig3, FigureId::fig4, FigureId::fig5}) {
    for (const auto& s : figure_preset(id)) CHECK_NOTHROW(s.x.validate());
    CHECK(parse_figure(to_string(id)) == id);
  }
}

TEST_CASE("names round-trip") {
  for (auto a : {Axis::ratio_j_over_eps, Axis::temperature, Axis::phi_x_common, Axis::phi_x1,
                 Axis::phi_x2, Axis::voltage}) {
    CHECK(parse_axis(to_string(a)) == a);
  }
  for (auto m : {Measure::discord, Measure::eof, Measure::concurrence, Measure::mutual_information,
                 Measure::classical_correlation}) {
    CHECK(parse_measure(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_axis("theta"), SpecError);
  CHECK_THROWS_AS(parse_measure("negativity"), SpecError);
  CHECK_THROWS_AS(parse_figure("fig6"), SpecError);
}
