#include "qlift/scenario.hpp"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "qlift/asymptotics.hpp"
#include "qlift/error.hpp"
#include "qlift/lineshape.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void config_fail(const std::string& source, const YAML::Node& node,
                              const std::string& field, const std::string& what) {
  const int line = node.IsDefined() ? node.Mark().line + 1 : 0;
  fail(ErrorCode::Config, fmt::format("{}:{}: field '{}': {}", source, line, field, what));
}

template <class T>
T scalar(const std::string& source, const YAML::Node& parent, const std::string& key,
         const std::string& path) {
  const YAML::Node n = parent[key];
  if (!n.IsDefined() || n.IsNull()) config_fail(source, parent, path, "missing");
  if (!n.IsScalar()) config_fail(source, n, path, "expected a scalar");
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    config_fail(source, n, path, fmt::format("cannot read '{}'", n.Scalar()));
  }
}

void check_keys(const std::string& source, const YAML::Node& map, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!map.IsMap()) config_fail(source, map, path, "expected a mapping");
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      config_fail(source, kv.first, path.empty() ? key : path + "." + key, "unknown key");
    }
  }
}

Observable parse_observable(const std::string& name) {
  for (Observable o : {Observable::PPlus, Observable::PhaseMinus, Observable::PhasePlus,
                       Observable::Lineshape, Observable::LineshapePhaseMinus,
                       Observable::LineshapePhasePlus, Observable::HalfScrap}) {
    if (name == observable_name(o)) return o;
  }
  fail(ErrorCode::Config, fmt::format("unknown observable '{}'", name));
}

SweepParameter parse_parameter(const std::string& name) {
  for (SweepParameter p : {SweepParameter::T0Delta0, SweepParameter::T0Omega0, SweepParameter::Tau}) {
    if (name == sweep_parameter_name(p)) return p;
  }
  fail(ErrorCode::Config, fmt::format("unknown sweep parameter '{}'", name));
}

bool is_phase(Observable o) {
  return o == Observable::PhaseMinus || o == Observable::PhasePlus ||
         o == Observable::LineshapePhaseMinus || o == Observable::LineshapePhasePlus;
}

bool is_adiabatic(Observable o) {
  return o == Observable::PPlus || o == Observable::PhaseMinus || o == Observable::PhasePlus;
}

// Shape and detuning of one row.
struct Point {
  PulseShape shape;
  double d;
  double tau;
};

Point point_at(const Scenario& s, double x) {
  Point p{s.shape, s.t0_delta0, s.tau.value_or(s.shape.tau_end)};
  if (!s.sweep) return p;
  switch (s.sweep->parameter) {
    case SweepParameter::T0Delta0: p.d = x; break;
    case SweepParameter::T0Omega0: p.shape.omega0 = x; break;
    case SweepParameter::Tau: p.tau = x; break;
  }
  return p;
}

struct Value {
  double v = kNaN;
  std::string flag;
};

double nearest_branch(double phase, double reference) {
  return phase + 2.0 * kPi * std::round((reference - phase) / (2.0 * kPi));
}

// Analytic adiabatic amplitudes of a rising pulse at tau.
StateVector adiabatic_model(const std::string& model, const Point& p, std::string& flag) {
  const PulseShape& sh = p.shape;
  const double w = sh.omega0;
  const SystemParams params = system_params(sh, p.d);
  if (model == "exponential") {
    require(sh.kind == ShapeKind::Exponential && sh.sign > 0, ErrorCode::InvalidArgument,
            "exponential model needs a rising exponential");
    const double s_i = w * std::exp(sh.tau_start), s = w * std::exp(p.tau);
    LiftingResult r = exponential_lifting(p.d, 0.5 * (s - s_i), s_i);
    if (r.regime_warning) flag = "regime";
    return lifting_amplitudes(r, dynamical_phase(params, sh, sh.tau_start, p.tau) +
                                     exponential_phase_offset(p.d, s_i));
  }
  LiftingResult r = model == "linear" ? linear_lifting(params.omega())
                                      : universal_lifting(sh.n, p.d, w);
  if (model == "linear" && sh.n != 1) flag = "order";
  return lifting_amplitudes(r, dynamical_phase(params, sh, sh.tau_start, p.tau));
}

Value model_value(Observable obs, const std::string& model, const Point& p) {
  Value out;
  const PulseShape& sh = p.shape;
  const double w = sh.omega0;
  const int n = sh.n;
  switch (obs) {
    case Observable::PPlus: {
      if (model.starts_with("large_detuning")) {
        const auto t = large_detuning_transfer(n, system_params(sh, p.d).alpha_n());
        out.v = model == "large_detuning"          ? t.p_plus_exact()
                : model == "large_detuning_residue" ? t.p_plus()
                                                    : std::norm(t.s_n + t.i_n_corrected);
      } else if (model == "small_detuning") {
        const auto r = small_detuning_transfer(sh.kind, n, p.d, w);
        if (r.regime_warning) out.flag = "regime";
        out.v = r.p_plus;
      } else {
        out.v = std::norm(adiabatic_model(model, p, out.flag).b_plus);
      }
      break;
    }
    case Observable::PhaseMinus:
      out.v = std::arg(adiabatic_model(model, p, out.flag).b_minus);
      break;
    case Observable::PhasePlus:
      out.v = std::arg(adiabatic_model(model, p, out.flag).b_plus);
      break;
    case Observable::Lineshape:
    case Observable::LineshapePhaseMinus:
    case Observable::LineshapePhasePlus: {
      LineshapePoint pt;
      if (model == "rosen_zener") {
        require(sh.kind == ShapeKind::Sech, ErrorCode::InvalidArgument,
                "rosen_zener model needs a sech pulse");
        pt = rosen_zener(w, p.d);
        // From free-evolution reference to the bare frame of the window.
        pt.b_minus *= std::polar(1.0, 0.5 * p.d * (sh.tau_end - sh.tau_start));
        pt.b_plus *= std::polar(1.0, -0.5 * p.d * (sh.tau_end + sh.tau_start));
      } else if (model == "trig") {
        require(sh.kind == ShapeKind::TrigPower && sh.tau_start == 0.0, ErrorCode::InvalidArgument,
                "trig model needs trig_power on [0, pi]");
        pt = trig_lineshape(n, w, p.d);
      } else {
        pt = composed_transfer(system_params(sh, p.d), sh);
      }
      if (pt.regime_warning) out.flag = "regime";
      out.v = obs == Observable::Lineshape            ? pt.p_transfer
              : obs == Observable::LineshapePhaseMinus ? std::arg(pt.b_minus)
                                                       : std::arg(pt.b_plus);
      break;
    }
    case Observable::HalfScrap: {
      if (model == "small_detuning") {
        const auto r = small_detuning_transfer(sh.kind, n, p.d, w);
        if (r.regime_warning) out.flag = "regime";
        out.v = r.p_plus;
      } else {
        const auto r = half_scrap(HalfScrapSequence::StarkPump, sh, w, p.d);
        if (r.numeric) out.flag = "numeric";
        out.v = r.p_plus_final;
      }
      break;
    }
  }
  return out;
}

double oracle_value(Observable obs, const Point& p, double tol) {
  const PulseShape& sh = p.shape;
  switch (obs) {
    case Observable::PPlus:
    case Observable::PhaseMinus:
    case Observable::PhasePlus: {
      const auto tr = trajectory(system_params(sh, p.d), sh, sh.tau_start, {p.tau}, tol);
      const TrajectoryPoint& t = tr.back();
      if (obs == Observable::PPlus) return std::norm(t.a_plus);
      return obs == Observable::PhaseMinus ? t.phase_minus : t.phase_plus;
    }
    case Observable::Lineshape:
    case Observable::LineshapePhaseMinus:
    case Observable::LineshapePhasePlus: {
      const SU2Operator u = propagate(system_params(sh, p.d), sh, sh.tau_start, sh.tau_end, tol);
      if (obs == Observable::Lineshape) return std::norm(u.u12);
      return obs == Observable::LineshapePhaseMinus ? std::arg(u.u11) : std::arg(-std::conj(u.u12));
    }
    case Observable::HalfScrap:
      return std::norm(pump_lifting_numeric(sh, p.d, tol).b_plus);
  }
  return kNaN;
}

void fill_models(const Scenario& s, const Point& p, ReportRow& row) {
  row.values.assign(s.models.size(), kNaN);
  for (size_t m = 0; m < s.models.size(); ++m) {
    try {
      Value v = model_value(s.observable, s.models[m], p);
      row.values[m] = v.v;
      if (!v.flag.empty()) row.flags.push_back(s.models[m] + ":" + v.flag);
    } catch (const Error& e) {
      row.flags.push_back(s.models[m] + ":" + error_code_name(e.code()));
    }
  }
}

void run_rows(const Scenario& s, const RunOptions& opt, std::vector<ReportRow>& rows) {
  // A tau sweep shares one trajectory.
  if (s.sweep && s.sweep->parameter == SweepParameter::Tau) {
    std::vector<double> taus;
    for (const auto& r : rows) taus.push_back(r.x);
    std::vector<TrajectoryPoint> tr;
    std::string err;
    try {
      tr = trajectory(system_params(s.shape, s.t0_delta0), s.shape, s.shape.tau_start, taus,
                      opt.tol);
    } catch (const Error& e) {
      err = e.what();
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      ReportRow& row = rows[i];
      if (!err.empty()) {
        row.ok = false;
        row.error = err;
      } else {
        const TrajectoryPoint& t = tr[i];
        row.oracle = s.observable == Observable::PPlus        ? std::norm(t.a_plus)
                     : s.observable == Observable::PhaseMinus ? t.phase_minus
                                                              : t.phase_plus;
      }
      fill_models(s, point_at(s, row.x), row);
    }
    return;
  }

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < rows.size(); i = next++) {
      ReportRow& row = rows[i];
      const Point p = point_at(s, row.x);
      try {
        row.oracle = oracle_value(s.observable, p, opt.tol);
      } catch (const Error& e) {
        row.ok = false;
        row.error = e.what();
      }
      fill_models(s, p, row);
    }
  };
  const int workers = std::max(1, std::min<int>(opt.workers, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

const char* sweep_parameter_name(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::T0Delta0: return "t0_delta0";
    case SweepParameter::T0Omega0: return "t0_omega0";
    case SweepParameter::Tau: return "tau";
  }
  return "unknown";
}

const char* observable_name(Observable o) noexcept {
  switch (o) {
    case Observable::PPlus: return "p_plus";
    case Observable::PhaseMinus: return "phase_minus";
    case Observable::PhasePlus: return "phase_plus";
    case Observable::Lineshape: return "lineshape";
    case Observable::LineshapePhaseMinus: return "lineshape_phase_minus";
    case Observable::LineshapePhasePlus: return "lineshape_phase_plus";
    case Observable::HalfScrap: return "half_scrap";
  }
  return "unknown";
}

std::vector<std::string> observable_models(Observable o) {
  switch (o) {
    case Observable::PPlus:
      return {"linear", "universal", "large_detuning", "large_detuning_residue",
              "large_detuning_corrected", "small_detuning", "exponential"};
    case Observable::PhaseMinus:
    case Observable::PhasePlus: return {"linear", "universal", "exponential"};
    case Observable::Lineshape:
    case Observable::LineshapePhaseMinus:
    case Observable::LineshapePhasePlus: return {"rosen_zener", "trig", "composed"};
    case Observable::HalfScrap: return {"half_scrap", "small_detuning"};
  }
  return {};
}

double Sweep::value(int i) const {
  if (i == points - 1) return to;
  return from + (to - from) * i / (points - 1);
}

Scenario parse_scenario(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    fail(ErrorCode::Config, fmt::format("{}:{}: {}", source, e.mark.line + 1, e.msg));
  }
  check_keys(source, root, "",
             {"name", "shape", "t0_delta0", "observable", "tau", "sweep", "models", "thresholds",
              "output"});
  Scenario s;
  s.name = scalar<std::string>(source, root, "name", "name");

  const YAML::Node shape = root["shape"];
  if (!shape.IsDefined()) config_fail(source, root, "shape", "missing");
  check_keys(source, shape, "shape", {"kind", "n", "sign", "t0_omega0", "tau_start", "tau_end"});
  const std::string kind = scalar<std::string>(source, shape, "kind", "shape.kind");
  try {
    s.shape.kind = parse_shape_kind(kind);
  } catch (const Error& e) {
    config_fail(source, shape["kind"], "shape.kind", e.what());
  }
  s.shape.n = shape["n"].IsDefined() ? scalar<int>(source, shape, "n", "shape.n") : 1;
  s.shape.sign = shape["sign"].IsDefined() ? scalar<int>(source, shape, "sign", "shape.sign") : 1;
  s.shape.omega0 = scalar<double>(source, shape, "t0_omega0", "shape.t0_omega0");
  s.shape.tau_start = scalar<double>(source, shape, "tau_start", "shape.tau_start");
  s.shape.tau_end = scalar<double>(source, shape, "tau_end", "shape.tau_end");
  try {
    validate(s.shape);
  } catch (const Error& e) {
    config_fail(source, shape, "shape", e.what());
  }

  s.t0_delta0 = root["t0_delta0"].IsDefined()
                    ? scalar<double>(source, root, "t0_delta0", "t0_delta0")
                    : 0.0;
  try {
    s.observable = parse_observable(scalar<std::string>(source, root, "observable", "observable"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Config || std::string(e.what()).find(source) == 0) throw;
    config_fail(source, root["observable"], "observable", e.what());
  }
  if (root["tau"].IsDefined()) s.tau = scalar<double>(source, root, "tau", "tau");

  if (const YAML::Node sw = root["sweep"]; sw.IsDefined()) {
    check_keys(source, sw, "sweep", {"parameter", "from", "to", "points"});
    Sweep sweep;
    try {
      sweep.parameter = parse_parameter(scalar<std::string>(source, sw, "parameter", "sweep.parameter"));
    } catch (const Error& e) {
      if (std::string(e.what()).find(source) == 0) throw;
      config_fail(source, sw["parameter"], "sweep.parameter", e.what());
    }
    sweep.from = scalar<double>(source, sw, "from", "sweep.from");
    sweep.to = scalar<double>(source, sw, "to", "sweep.to");
    sweep.points = scalar<int>(source, sw, "points", "sweep.points");
    if (sweep.points < 2) config_fail(source, sw["points"], "sweep.points", "must be >= 2");
    s.sweep = sweep;
  }

  const YAML::Node models = root["models"];
  if (!models.IsDefined() || !models.IsSequence() || models.size() == 0) {
    config_fail(source, models.IsDefined() ? models : root, "models", "need a non-empty list");
  }
  const auto allowed = observable_models(s.observable);
  for (const auto& m : models) {
    const std::string name = m.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      config_fail(source, m, "models",
                  fmt::format("'{}' is not a model of {}", name, observable_name(s.observable)));
    }
    s.models.push_back(name);
  }
  if (const YAML::Node th = root["thresholds"]; th.IsDefined()) {
    if (!th.IsMap()) config_fail(source, th, "thresholds", "expected a mapping");
    for (const auto& kv : th) {
      const std::string m = kv.first.as<std::string>();
      if (std::find(s.models.begin(), s.models.end(), m) == s.models.end()) {
        config_fail(source, kv.first, "thresholds." + m, "not one of the listed models");
      }
      s.thresholds[m] = scalar<double>(source, th, m, "thresholds." + m);
    }
  }
  s.output = root["output"].IsDefined() ? scalar<std::string>(source, root, "output", "output")
                                        : s.name + ".csv";
  try {
    validate(s);
  } catch (const Error& e) {
    config_fail(source, root, "scenario", e.what());
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Config, fmt::format("{}: cannot open scenario file", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

void validate(const Scenario& s) {
  require(!s.name.empty(), ErrorCode::Config, "scenario name is empty");
  require(!s.models.empty(), ErrorCode::Config, "scenario needs at least one model");
  require(std::isfinite(s.t0_delta0) && s.t0_delta0 >= 0.0, ErrorCode::Config,
          "t0_delta0 must be finite and >= 0");
  if (s.sweep) {
    require(s.sweep->points >= 2, ErrorCode::Config, "sweep needs >= 2 points");
    require(std::isfinite(s.sweep->from) && std::isfinite(s.sweep->to), ErrorCode::Config,
            "sweep bounds must be finite");
    if (s.sweep->parameter == SweepParameter::Tau) {
      require(is_adiabatic(s.observable), ErrorCode::Config,
              fmt::format("a tau sweep needs an adiabatic observable, not {}",
                          observable_name(s.observable)));
      require(std::min(s.sweep->from, s.sweep->to) >= s.shape.tau_start && s.sweep->from < s.sweep->to,
              ErrorCode::Config, "tau sweep must increase from tau_start on");
      require(s.sweep->to <= s.shape.tau_end, ErrorCode::Config, "tau sweep must end by tau_end");
    }
    if (s.sweep->parameter == SweepParameter::T0Delta0) {
      require(std::min(s.sweep->from, s.sweep->to) >= 0.0, ErrorCode::Config,
              "t0_delta0 sweep must be >= 0");
    }
    if (s.sweep->parameter == SweepParameter::T0Omega0) {
      require(std::min(s.sweep->from, s.sweep->to) > 0.0, ErrorCode::Config,
              "t0_omega0 sweep must be > 0");
    }
  }
  if (s.tau) {
    require(is_adiabatic(s.observable), ErrorCode::Config, "tau only applies to adiabatic observables");
    require(*s.tau > s.shape.tau_start && *s.tau <= s.shape.tau_end, ErrorCode::Config,
            "tau must lie in (tau_start, tau_end]");
  }
}

std::vector<std::string> ComparisonReport::breached() const {
  std::vector<std::string> out;
  for (const auto& [m, limit] : thresholds) {
    auto it = max_abs_error.find(m);
    if (it == max_abs_error.end() || !(it->second <= limit)) out.push_back(m);
  }
  return out;
}

int ComparisonReport::failed_rows() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; }));
}

ComparisonReport run_scenario(const Scenario& s, const RunOptions& options) {
  validate(s);
  require(options.tol >= 1e-13 && options.tol <= 1e-6, ErrorCode::InvalidArgument,
          fmt::format("tol must be in [1e-13, 1e-6], got {}", options.tol));
  ComparisonReport r;
  r.scenario = s.name;
  r.observable = s.observable;
  r.parameter = s.sweep ? s.sweep->parameter : SweepParameter::T0Delta0;
  r.models = s.models;
  r.thresholds = s.thresholds;
  r.output = s.output;
  const int count = s.sweep ? s.sweep->points : 1;
  r.rows.resize(count);
  for (int i = 0; i < count; ++i) r.rows[i].x = s.sweep ? s.sweep->value(i) : s.t0_delta0;

  run_rows(s, options, r.rows);

  if (is_phase(s.observable)) {
    // Continue the oracle along the sweep and put every model on its branch.
    bool have = false;
    double prev = 0.0;
    for (auto& row : r.rows) {
      if (!row.ok) continue;
      if (have) row.oracle = nearest_branch(row.oracle, prev);
      prev = row.oracle;
      have = true;
      for (double& v : row.values) {
        if (std::isfinite(v)) v = nearest_branch(v, row.oracle);
      }
    }
  }

  std::set<std::string> flags;
  for (size_t m = 0; m < s.models.size(); ++m) {
    double worst = kNaN;
    for (const auto& row : r.rows) {
      if (!row.ok || !std::isfinite(row.values[m])) continue;
      const double e = std::abs(row.values[m] - row.oracle);
      if (!(worst >= e)) worst = e;
    }
    r.max_abs_error[s.models[m]] = worst;
  }
  for (const auto& row : r.rows) flags.insert(row.flags.begin(), row.flags.end());
  r.regime_flags.assign(flags.begin(), flags.end());
  return r;
}

Table report_table(const ComparisonReport& r) {
  Table t;
  t.name = r.scenario;
  t.columns.push_back(sweep_parameter_name(r.parameter));
  t.columns.push_back("oracle");
  for (const auto& m : r.models) {
    t.columns.push_back(m);
    t.columns.push_back(m + "_abs_err");
    t.columns.push_back(m + "_rel_err");
  }
  t.columns.insert(t.columns.end(), {"status", "flags", "error"});
  for (const auto& row : r.rows) {
    std::vector<Cell> cells{row.x, row.ok ? row.oracle : kNaN};
    for (double v : row.values) {
      const double abs_err = row.ok ? std::abs(v - row.oracle) : kNaN;
      cells.emplace_back(v);
      cells.emplace_back(abs_err);
      cells.emplace_back(row.ok && row.oracle != 0.0 ? abs_err / std::abs(row.oracle) : kNaN);
    }
    std::string flags;
    for (const auto& f : row.flags) flags += (flags.empty() ? "" : ";") + f;
    cells.emplace_back(std::string(row.ok ? "ok" : "failed"));
    cells.emplace_back(flags);
    cells.emplace_back(row.error);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

nlohmann::json report_json(const ComparisonReport& r) {
  nlohmann::json j = to_json(report_table(r));
  nlohmann::json max_err = nlohmann::json::object();
  for (const auto& [m, v] : r.max_abs_error) {
    max_err[m] = std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  }
  j["scenario"] = r.scenario;
  j["observable"] = observable_name(r.observable);
  j["parameter"] = sweep_parameter_name(r.parameter);
  j["models"] = r.models;
  j["summary"] = {{"max_abs_error", max_err},
                  {"thresholds", r.thresholds},
                  {"breached", r.breached()},
                  {"failed_rows", r.failed_rows()},
                  {"regime_flags", r.regime_flags}};
  return j;
}

}  // namespace qlift
