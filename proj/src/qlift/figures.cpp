#include "qlift/figures.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "qlift/asymptotics.hpp"
#include "qlift/error.hpp"
#include "qlift/lineshape.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutLevel = 1e-8;

Scenario make(std::string name, PulseShape shape, double d, Observable obs,
              std::vector<std::string> models, std::optional<Sweep> sweep,
              std::optional<double> tau = std::nullopt) {
  Scenario s;
  s.name = std::move(name);
  s.shape = shape;
  s.t0_delta0 = d;
  s.observable = obs;
  s.models = std::move(models);
  s.sweep = sweep;
  s.tau = tau;
  s.output = s.name + ".csv";
  return s;
}

Sweep sweep(SweepParameter p, double from, double to, int points) {
  return Sweep{p, from, to, points};
}

void histories(std::vector<Scenario>& out, const std::string& prefix, const PulseShape& shape,
               double d, const std::string& model, double from, int points) {
  const Sweep sw = sweep(SweepParameter::Tau, from, shape.tau_end, points);
  out.push_back(make(prefix + "_p_plus", shape, d, Observable::PPlus, {model}, sw));
  out.push_back(make(prefix + "_phase_minus", shape, d, Observable::PhaseMinus, {model}, sw));
  out.push_back(make(prefix + "_phase_plus", shape, d, Observable::PhasePlus, {model}, sw));
}

void detuning_scan(std::vector<Scenario>& out, const std::string& prefix, int n, double tau) {
  const PulseShape shape = power_rise(n, 100.0, tau);
  const Sweep sw = sweep(SweepParameter::T0Delta0, 0.0, 20.0, 81);
  out.push_back(make(prefix + "_p_plus", shape, 0.0, Observable::PPlus,
                     {"universal", "large_detuning", "large_detuning_residue",
                      "large_detuning_corrected", "small_detuning"},
                     sw));
  out.push_back(make(prefix + "_phase_minus", shape, 0.0, Observable::PhaseMinus, {"universal"}, sw));
  out.push_back(make(prefix + "_phase_plus", shape, 0.0, Observable::PhasePlus, {"universal"}, sw));
}

void trig_scan(std::vector<Scenario>& out, const std::string& prefix, int n, double w) {
  const PulseShape shape = trig_power(n, w);
  const Sweep sw = sweep(SweepParameter::T0Delta0, 0.0, 6.0, 121);
  out.push_back(make(prefix + "_lineshape", shape, 0.0, Observable::Lineshape, {"trig"}, sw));
  out.push_back(make(prefix + "_phase_minus", shape, 0.0, Observable::LineshapePhaseMinus, {"trig"}, sw));
  out.push_back(make(prefix + "_phase_plus", shape, 0.0, Observable::LineshapePhasePlus, {"trig"}, sw));
}

std::string amp_tag(double w) { return fmt::format("w{}", w); }

Table fig3() {
  Table t{"fig3", {"omega", "p_plus", "chi_minus", "chi_plus"}, {}};
  for (int i = 0; i <= 300; ++i) {
    const double w = 0.01 * i;
    const LiftingResult r = linear_lifting(w);
    t.rows.push_back({w, r.p_plus, r.chi_minus, r.chi_plus});
  }
  return t;
}

Table fig7() {
  Table t{"fig7", {"x", "G"}, {}};
  for (int i = 0; i <= 200; ++i) {
    const double x = 0.1 * i;
    t.rows.push_back({x, gaussian_G(x)});
  }
  return t;
}

Table fig11() {
  Table t{"fig11", {"t0_omega", "t0_delta", "lambda_minus", "lambda_plus"}, {}};
  for (int i = 0; i <= 30; ++i) {
    for (int j = 0; j <= 30; ++j) {
      const double w = 0.1 * i, d = -3.0 + 0.2 * j;
      const auto [lm, lp] = eigenenergy_surface(w, d);
      t.rows.push_back({w, d, lm, lp});
    }
  }
  return t;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4",  "fig5",  "fig6",
                                            "fig7", "fig8", "fig9", "fig10", "fig11", "figliftall"};
  return ids;
}

std::vector<Scenario> figure_scenarios(const std::string& id) {
  std::vector<Scenario> out;
  if (id == "fig1") {
    for (int n : {1, 2, 4}) {
      for (double d : {2.0, 5.0, 10.0, 20.0}) {
        out.push_back(make(fmt::format("fig1_n{}_d{}", n, d), power_rise(n, 100.0, 2.0), d,
                           Observable::PPlus, {"universal"},
                           sweep(SweepParameter::Tau, 0.02, 2.0, 100)));
      }
    }
  } else if (id == "fig2") {
    histories(out, "fig2", power_rise(1, 100.0, 1.0), 5.0, "linear", 0.01, 100);
  } else if (id == "fig4") {
    const PulseShape shape =
        exponential(1, 100.0, rising_cutoff(ShapeKind::Exponential, 100.0, kCutLevel), 2.0);
    histories(out, "fig4", shape, 0.4, "exponential", -6.0, 81);
  } else if (id == "fig5") {
    detuning_scan(out, "fig5", 2, 3.0);
  } else if (id == "fig6") {
    detuning_scan(out, "fig6", 3, 2.5);
  } else if (id == "fig8") {
    trig_scan(out, "fig8", 1, kPi / 2);
  } else if (id == "fig9") {
    trig_scan(out, "fig9", 2, 2.0);
  } else if (id == "fig10") {
    trig_scan(out, "fig10", 2, 6.0);
  } else if (id == "figliftall") {
    const Sweep sw = sweep(SweepParameter::T0Delta0, 0.0, 20.0, 41);
    for (int n : {2, 4}) {
      for (double w : {1000.0, 100.0, 10.0}) {
        out.push_back(make(fmt::format("figliftall_power_n{}_{}", n, amp_tag(w)),
                           power_rise(n, w, std::pow(5000.0 / w, 1.0 / n)), 0.0,
                           Observable::HalfScrap, {"half_scrap"}, sw));
      }
    }
    for (double w : {1000.0, 100.0, 10.0}) {
      out.push_back(make(fmt::format("figliftall_gaussian_{}", amp_tag(w)),
                         gaussian(w, rising_cutoff(ShapeKind::Gaussian, w, kCutLevel), 0.0), 0.0,
                         Observable::HalfScrap, {"half_scrap"}, sw));
    }
    out.push_back(make("figliftall_exponential",
                       exponential(1, 100.0, rising_cutoff(ShapeKind::Exponential, 100.0, kCutLevel),
                                   std::log(10.0)),
                       0.0, Observable::HalfScrap, {"half_scrap"}, sw));
  } else if (id != "fig3" && id != "fig7" && id != "fig11") {
    fail(ErrorCode::InvalidArgument, fmt::format("unknown figure id '{}'", id));
  }
  return out;
}

std::vector<Table> reproduce_figure(const std::string& id, const RunOptions& options) {
  if (id == "fig3") return {fig3()};
  if (id == "fig7") return {fig7()};
  if (id == "fig11") return {fig11()};
  std::vector<Table> tables;
  for (const Scenario& s : figure_scenarios(id)) {
    tables.push_back(report_table(run_scenario(s, options)));
  }
  return tables;
}

}  // namespace qlift
