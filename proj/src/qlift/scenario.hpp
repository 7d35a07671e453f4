#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qlift/propagator.hpp"
#include "qlift/pulses.hpp"
#include "qlift/table.hpp"

namespace qlift {

enum class SweepParameter { T0Delta0, T0Omega0, Tau };

const char* sweep_parameter_name(SweepParameter p) noexcept;

/// Quantity compared between the integrator and the analytic models.
///
///   p_plus, phase_minus, phase_plus    adiabatic |A_+|^2 and unwrapped arg A_-+ at `tau`
///   lineshape                          |B_+|^2 after the whole pulse
///   lineshape_phase_minus/_plus        arg B_-+ after the whole pulse
///   half_scrap                         |A_+|^2 at the end of a rising pump
enum class Observable {
  PPlus,
  PhaseMinus,
  PhasePlus,
  Lineshape,
  LineshapePhaseMinus,
  LineshapePhasePlus,
  HalfScrap,
};

const char* observable_name(Observable o) noexcept;
/// Model names accepted for an observable.
std::vector<std::string> observable_models(Observable o);

struct Sweep {
  SweepParameter parameter = SweepParameter::T0Delta0;
  double from = 0.0;
  double to = 1.0;
  int points = 2;

  double value(int i) const;
};

struct Scenario {
  std::string name;
  /// shape.omega0 is T0*Omega0.
  PulseShape shape;
  double t0_delta0 = 0.0;
  Observable observable = Observable::PPlus;
  /// Evaluation time for the adiabatic observables; defaults to shape.tau_end.
  std::optional<double> tau;
  std::optional<Sweep> sweep;
  std::vector<std::string> models;
  /// Maximum allowed abs error per model.
  std::map<std::string, double> thresholds;
  std::string output;
};

/// Parses a YAML scenario. Errors carry ErrorCode::Config and the source
/// name, line and field.
Scenario parse_scenario(const std::string& text, const std::string& source = "<string>");
Scenario load_scenario(const std::string& path);
/// Throws Config on inconsistent fields.
void validate(const Scenario& s);

struct RunOptions {
  double tol = kDefaultTol;
  int workers = 1;
};

struct ReportRow {
  double x = 0.0;
  bool ok = true;
  std::string error;
  double oracle = 0.0;
  /// NaN where a model refused the point.
  std::vector<double> values;
  std::vector<std::string> flags;
};

struct ComparisonReport {
  std::string scenario;
  Observable observable = Observable::PPlus;
  SweepParameter parameter = SweepParameter::T0Delta0;
  std::vector<std::string> models;
  std::vector<ReportRow> rows;
  /// Over rows where both oracle and model are defined; NaN if none.
  std::map<std::string, double> max_abs_error;
  std::map<std::string, double> thresholds;
  std::vector<std::string> regime_flags;
  std::string output;

  std::vector<std::string> breached() const;
  int failed_rows() const;
};

/// Rows run on `workers` threads; the result is ordered by sweep index.
ComparisonReport run_scenario(const Scenario& s, const RunOptions& options = {});

Table report_table(const ComparisonReport& r);
/// Table plus a summary block.
nlohmann::json report_json(const ComparisonReport& r);

}  // namespace qlift
