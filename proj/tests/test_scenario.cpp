#include "doctest.h"

#include <cmath>
#include <string>

#include "qlift/error.hpp"
#include "qlift/figures.hpp"
#include "qlift/scenario.hpp"

using namespace qlift;

namespace {

const char* kMixed = R"(name: mixed
shape: {kind: power_rise, n: 2, t0_omega0: 100, tau_start: 0, tau_end: 3}
observable: p_plus
sweep: {parameter: t0_delta0, from: 0, to: 10, points: 3}
models: [universal, large_detuning, small_detuning]
thresholds: {universal: 0.05}
)";

std::string config_error(const std::string& text) {
  try {
    parse_scenario(text, "cfg.yaml");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Config);
    return e.what();
  }
  FAIL("parse accepted a bad scenario");
  return {};
}

}  // namespace

TEST_CASE("parse fills defaults") {
  const auto s = parse_scenario(kMixed);
  CHECK(s.name == "mixed");
  CHECK(s.observable == Observable::PPlus);
  CHECK(s.shape.n == 2);
  CHECK(s.shape.omega0 == 100.0);
  REQUIRE(s.sweep);
  CHECK(s.sweep->points == 3);
  CHECK(s.sweep->value(1) == 5.0);
  CHECK(s.output == "mixed.csv");
  CHECK(s.thresholds.at("universal") == 0.05);
}

TEST_CASE("parse errors name line and field") {
  auto msg = config_error("name: x\nshape: {kind: power_rise, n: 1, t0_omega0: 1, tau_start: 0, tau_end: 1}\n"
                          "observable: p_plus\nmodels: [linear]\nbogus: 1\n");
  CHECK(msg.find("cfg.yaml:5") != std::string::npos);
  CHECK(msg.find("'bogus'") != std::string::npos);

  msg = config_error("name: x\nshape: {kind: power_rise, n: 1, t0_omega0: 1, tau_start: 0, tau_end: 1}\n"
                     "observable: p_plus\nmodels: [nope]\n");
  CHECK(msg.find("cfg.yaml:4") != std::string::npos);
  CHECK(msg.find("field 'models'") != std::string::npos);

  msg = config_error("name: x\nshape: {kind: blob, t0_omega0: 1, tau_start: 0, tau_end: 1}\nobservable: p_plus\n"
                     "models: [linear]\n");
  CHECK(msg.find("shape.kind") != std::string::npos);

  msg = config_error("name: x\nshape: {kind: power_rise, n: 1, t0_omega0: abc, tau_start: 0, tau_end: 1}\n"
                     "observable: p_plus\nmodels: [linear]\n");
  CHECK(msg.find("t0_omega0") != std::string::npos);

  msg = config_error("name: x\nshape: {kind: power_rise, n: 1, t0_omega0: 1, tau_start: 0, tau_end: 1}\n"
                     "observable: p_plus\nsweep: {parameter: tau, from: 0.1, to: 1, points: 1}\n"
                     "models: [linear]\n");
  CHECK(msg.find("sweep.points") != std::string::npos);

  msg = config_error("name: x\nshape: {kind: power_rise, n: 1, t0_omega0: 1, tau_start: 0, tau_end: 1}\n"
                     "observable: p_plus\nmodels: [linear]\nthresholds: {universal: 1}\n");
  CHECK(msg.find("thresholds.universal") != std::string::npos);

  msg = config_error("name: [x\n");
  CHECK(msg.find("cfg.yaml:") == 0);
}

TEST_CASE("validate rejects inconsistent scenarios") {
  auto s = parse_scenario(kMixed);
  s.sweep = Sweep{SweepParameter::Tau, 0.1, 1.0, 4};
  s.observable = Observable::Lineshape;
  s.models = {"trig"};
  CHECK_THROWS_AS(validate(s), Error);

  s = parse_scenario(kMixed);
  s.t0_delta0 = -1.0;
  s.sweep.reset();
  CHECK_THROWS_AS(validate(s), Error);

  s = parse_scenario(kMixed);
  s.sweep = Sweep{SweepParameter::T0Omega0, 0.0, 1.0, 3};
  CHECK_THROWS_AS(validate(s), Error);
}

TEST_CASE("report flags refusals and keeps rows") {
  const auto r = run_scenario(parse_scenario(kMixed));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.failed_rows() == 0);
  CHECK(r.models.size() == 3);
  CHECK(std::isnan(r.rows[0].values[1]));
  REQUIRE_FALSE(r.rows[0].flags.empty());
  CHECK(r.rows[0].flags[0] == "large_detuning:validity");
  CHECK(r.breached().empty());
  CHECK(r.max_abs_error.at("universal") < 0.05);

  const auto t = report_table(r);
  CHECK(t.columns.front() == "t0_delta0");
  CHECK(t.columns.back() == "error");
  const auto j = report_json(r);
  CHECK(j["summary"]["failed_rows"] == 0);
  CHECK(j["summary"]["regime_flags"].size() == 2);
}

TEST_CASE("tight threshold is reported as a breach") {
  auto s = parse_scenario(kMixed);
  s.thresholds["universal"] = 1e-4;
  CHECK(run_scenario(s).breached() == std::vector<std::string>{"universal"});
}

TEST_CASE("output does not depend on the worker count and is repeatable") {
  auto s = parse_scenario(kMixed);
  s.sweep->points = 7;
  const auto one = to_csv(report_table(run_scenario(s, {kDefaultTol, 1})));
  const auto four = to_csv(report_table(run_scenario(s, {kDefaultTol, 4})));
  const auto again = to_csv(report_table(run_scenario(s, {kDefaultTol, 4})));
  CHECK(one == four);
  CHECK(four == again);
  CHECK(report_json(run_scenario(s, {kDefaultTol, 3})).dump() == report_json(run_scenario(s)).dump());
}

TEST_CASE("tau sweep phases stay continuous") {
  const auto s = parse_scenario(R"(name: ph
shape: {kind: power_rise, n: 1, t0_omega0: 100, tau_start: 0, tau_end: 1}
t0_delta0: 5
observable: phase_plus
sweep: {parameter: tau, from: 0.5, to: 1, points: 201}
models: [linear]
)");
  const auto r = run_scenario(s, {kDefaultTol, 2});
  for (size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(std::abs(r.rows[i].oracle - r.rows[i - 1].oracle) < 0.5);
    CHECK(std::abs(r.rows[i].values[0] - r.rows[i].oracle) < 0.01);
  }
}

TEST_CASE("tolerance outside the supported range is refused") {
  CHECK_THROWS_AS(run_scenario(parse_scenario(kMixed), {1e-3, 1}), Error);
}

TEST_CASE("figure registry") {
  const auto& ids = figure_ids();
  CHECK(ids.size() == 12);
  CHECK_THROWS_AS(reproduce_figure("fig99"), Error);

  const auto fig3 = reproduce_figure("fig3");
  REQUIRE(fig3.size() == 1);
  CHECK(fig3[0].columns == std::vector<std::string>{"omega", "p_plus", "chi_minus", "chi_plus"});
  CHECK(fig3[0].rows.size() == 301);

  const auto fig7 = reproduce_figure("fig7");
  REQUIRE(fig7.size() == 1);
  CHECK(fig7[0].rows.size() == 201);

  for (const auto& id : {"fig1", "fig5", "fig9", "figliftall"}) CHECK_FALSE(figure_scenarios(id).empty());
}
