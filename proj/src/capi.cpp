#include "qlift.h"

#include <yaml-cpp/exceptions.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "qlift/asymptotics.hpp"
#include "qlift/error.hpp"
#include "qlift/figures.hpp"
#include "qlift/lineshape.hpp"
#include "qlift/propagator.hpp"
#include "qlift/scenario.hpp"
#include "qlift/table.hpp"
#include "qlift/validation.hpp"

struct qlift_shape {
  qlift::PulseShape shape;
};

namespace {

struct Entry {
  qlift::Table table;
  nlohmann::json json;
  std::string stem;
};

}  // namespace

struct qlift_report {
  std::vector<Entry> entries;
  int breached = 0;
  int failed_rows = 0;
  std::vector<qlift::CriterionResult> criteria;
};

namespace {

thread_local std::string g_last_error;

qlift_status to_status(qlift::ErrorCode c) {
  return static_cast<qlift_status>(static_cast<int>(c));
}

template <class F>
qlift_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QLIFT_OK;
  } catch (const qlift::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const YAML::Exception& e) {
    g_last_error = e.what();
    return QLIFT_CONFIG;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QLIFT_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  qlift::require(p != nullptr, qlift::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

qlift_complex to_c(qlift::cplx z) { return {z.real(), z.imag()}; }

qlift_lifting to_c(const qlift::LiftingResult& r) {
  return {r.p_minus, r.p_plus, r.chi_minus, r.chi_plus, r.common_phase, r.regime_warning ? 1 : 0};
}

qlift_lineshape_point to_c(const qlift::LineshapePoint& p) {
  return {p.t0_delta0, to_c(p.b_minus), to_c(p.b_plus), p.p_transfer, p.regime_warning ? 1 : 0};
}

qlift::RunOptions options_of(const qlift_options* o) {
  qlift::RunOptions r;
  if (o) {
    r.tol = o->tol;
    r.workers = o->workers;
  }
  qlift::require(r.workers >= 1, qlift::ErrorCode::InvalidArgument, "workers must be >= 1");
  return r;
}

std::string stem_of(const std::string& output) {
  return std::filesystem::path(output).replace_extension().string();
}

void add_report(qlift_report& rep, const qlift::ComparisonReport& r, const std::string& stem) {
  rep.entries.push_back({qlift::report_table(r), qlift::report_json(r), stem});
  if (!r.breached().empty()) ++rep.breached;
  rep.failed_rows += r.failed_rows();
}

qlift_report* scenario_report(const qlift::Scenario& s, const qlift_options* options) {
  auto rep = std::make_unique<qlift_report>();
  add_report(*rep, qlift::run_scenario(s, options_of(options)), stem_of(s.output));
  return rep.release();
}

qlift::Table validation_table(const std::vector<qlift::CriterionResult>& rs) {
  qlift::Table t{"validation",
                 {"id", "name", "status", "measured", "threshold", "seconds", "budget_seconds", "detail"},
                 {}};
  for (const auto& r : rs) {
    t.rows.push_back({static_cast<double>(r.id), r.name, std::string(r.passed ? "pass" : "fail"),
                      r.measured, r.threshold, r.seconds, r.budget_seconds, r.detail});
  }
  return t;
}

nlohmann::json finite(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

nlohmann::json validation_json(const std::vector<qlift::CriterionResult>& rs) {
  nlohmann::json j = qlift::to_json(validation_table(rs));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rs) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : r.parts) {
      parts.push_back({{"label", p.label}, {"value", finite(p.value)}, {"limit", p.limit}, {"passed", p.passed}});
    }
    list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"parts", parts}});
  }
  j["criteria"] = list;
  return j;
}

std::string render(const Entry& e, qlift_format format) {
  return format == QLIFT_FORMAT_JSON ? e.json.dump(2) + "\n" : qlift::to_csv(e.table);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  qlift::require(out != nullptr, qlift::ErrorCode::Numeric, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* qlift_version(void) { return "0.1.0"; }

const char* qlift_status_name(qlift_status status) {
  if (status == QLIFT_OK) return "ok";
  if (status == QLIFT_INTERNAL) return "internal";
  return qlift::error_code_name(static_cast<qlift::ErrorCode>(static_cast<int>(status)));
}

const char* qlift_last_error(void) { return g_last_error.c_str(); }

void qlift_options_default(qlift_options* out) {
  if (out) *out = {qlift::kDefaultTol, 1};
}

qlift_status qlift_shape_create(const char* kind, int n, int sign, double t0_omega0, double tau_start,
                                double tau_end, qlift_shape** out) {
  return guard([&] {
    need(kind, "kind");
    need(out, "out");
    qlift::PulseShape s;
    s.kind = qlift::parse_shape_kind(kind);
    s.n = n;
    s.sign = sign;
    s.omega0 = t0_omega0;
    s.tau_start = tau_start;
    s.tau_end = tau_end;
    qlift::validate(s);
    *out = new qlift_shape{s};
  });
}

void qlift_shape_destroy(qlift_shape* shape) { delete shape; }

qlift_status qlift_shape_rabi(const qlift_shape* shape, double tau, double* out) {
  return guard([&] {
    need(shape, "shape");
    need(out, "out");
    *out = qlift::rabi_at(shape->shape, tau);
  });
}

qlift_status qlift_propagate(const qlift_shape* shape, double t0_delta0, double tau_a, double tau_b,
                             double tol, qlift_su2* out) {
  return guard([&] {
    need(shape, "shape");
    need(out, "out");
    const auto u = qlift::propagate(qlift::system_params(shape->shape, t0_delta0), shape->shape, tau_a,
                                    tau_b, tol);
    *out = {to_c(u.u11), to_c(u.u12)};
  });
}

qlift_status qlift_linear_lifting(double omega, qlift_lifting* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(qlift::linear_lifting(omega));
  });
}

qlift_status qlift_universal_lifting(int n, double t0_delta0, double t0_omega0, qlift_lifting* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(qlift::universal_lifting(n, t0_delta0, t0_omega0));
  });
}

qlift_status qlift_exponential_lifting(double varpi, double zeta, double s_i, qlift_lifting* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(qlift::exponential_lifting(varpi, zeta, s_i));
  });
}

qlift_status qlift_rosen_zener(double t0_omega0, double t0_delta0, qlift_lineshape_point* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(qlift::rosen_zener(t0_omega0, t0_delta0));
  });
}

qlift_status qlift_trig_lineshape(int n, double t0_omega0, double t0_delta0, qlift_lineshape_point* out) {
  return guard([&] {
    need(out, "out");
    *out = to_c(qlift::trig_lineshape(n, t0_omega0, t0_delta0));
  });
}

qlift_status qlift_composed_transfer(const qlift_shape* shape, double t0_delta0, qlift_lineshape_point* out) {
  return guard([&] {
    need(shape, "shape");
    need(out, "out");
    *out = to_c(qlift::composed_transfer(qlift::system_params(shape->shape, t0_delta0), shape->shape));
  });
}

qlift_status qlift_half_scrap(qlift_sequence sequence, const qlift_shape* pump, double t0_omega0,
                              double t0_delta0, qlift_half_scrap_result* out) {
  return guard([&] {
    need(pump, "pump");
    need(out, "out");
    qlift::require(sequence == QLIFT_STARK_PUMP || sequence == QLIFT_PUMP_STARK,
                   qlift::ErrorCode::InvalidArgument, "unknown sequence");
    const auto r = qlift::half_scrap(sequence == QLIFT_STARK_PUMP ? qlift::HalfScrapSequence::StarkPump
                                                                  : qlift::HalfScrapSequence::PumpStark,
                                     pump->shape, t0_omega0, t0_delta0);
    *out = {r.p_plus_final, r.relative_phase, r.robust_phase ? 1 : 0, r.numeric ? 1 : 0};
  });
}

qlift_status qlift_run_scenario_file(const char* path, const qlift_options* options, qlift_report** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = scenario_report(qlift::load_scenario(path), options);
  });
}

qlift_status qlift_run_scenario_text(const char* yaml, const qlift_options* options, qlift_report** out) {
  return guard([&] {
    need(yaml, "yaml");
    need(out, "out");
    *out = scenario_report(qlift::parse_scenario(yaml), options);
  });
}

qlift_status qlift_run_sweep_file(const char* path, const char* parameter, double from, double to,
                                  int points, const qlift_options* options, qlift_report** out) {
  return guard([&] {
    need(path, "path");
    need(parameter, "parameter");
    need(out, "out");
    qlift::Scenario s = qlift::load_scenario(path);
    qlift::Sweep sw{qlift::SweepParameter::T0Delta0, from, to, points};
    bool known = false;
    for (auto p : {qlift::SweepParameter::T0Delta0, qlift::SweepParameter::T0Omega0,
                   qlift::SweepParameter::Tau}) {
      if (parameter == std::string(qlift::sweep_parameter_name(p))) sw.parameter = p, known = true;
    }
    qlift::require(known, qlift::ErrorCode::Config,
                   std::string("unknown sweep parameter '") + parameter + "'");
    s.sweep = sw;
    qlift::validate(s);
    *out = scenario_report(s, options);
  });
}

size_t qlift_figure_count(void) { return qlift::figure_ids().size(); }

const char* qlift_figure_id(size_t i) {
  const auto& ids = qlift::figure_ids();
  return i < ids.size() ? ids[i].c_str() : nullptr;
}

qlift_status qlift_figure(const char* id, const qlift_options* options, qlift_report** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    const qlift::RunOptions opt = options_of(options);
    auto rep = std::make_unique<qlift_report>();
    const auto scenarios = qlift::figure_scenarios(id);
    if (scenarios.empty()) {
      for (auto& t : qlift::reproduce_figure(id, opt)) {
        nlohmann::json j = qlift::to_json(t);
        const std::string stem = t.name;
        rep->entries.push_back({std::move(t), std::move(j), stem});
      }
    } else {
      for (const auto& s : scenarios) add_report(*rep, qlift::run_scenario(s, opt), s.name);
    }
    *out = rep.release();
  });
}

qlift_status qlift_validate(const int* ids, size_t count, int workers, qlift_report** out) {
  return guard([&] {
    need(out, "out");
    qlift::require(workers >= 1, qlift::ErrorCode::InvalidArgument, "workers must be >= 1");
    auto rep = std::make_unique<qlift_report>();
    if (ids == nullptr || count == 0) {
      rep->criteria = qlift::run_validation(workers);
    } else {
      for (size_t i = 0; i < count; ++i) rep->criteria.push_back(qlift::run_criterion(ids[i], workers));
    }
    for (const auto& c : rep->criteria) rep->breached += c.passed ? 0 : 1;
    rep->entries.push_back({validation_table(rep->criteria), validation_json(rep->criteria), "validation"});
    *out = rep.release();
  });
}

size_t qlift_report_table_count(const qlift_report* report) { return report ? report->entries.size() : 0; }

const char* qlift_report_table_name(const qlift_report* report, size_t i) {
  if (!report || i >= report->entries.size()) return nullptr;
  return report->entries[i].stem.c_str();
}

qlift_status qlift_report_to_string(const qlift_report* report, size_t table, qlift_format format, char** out) {
  return guard([&] {
    need(report, "report");
    need(out, "out");
    qlift::require(table < report->entries.size(), qlift::ErrorCode::OutOfRange, "table index out of range");
    *out = duplicate(render(report->entries[table], format));
  });
}

qlift_status qlift_report_write(const qlift_report* report, const char* out_dir, qlift_format format) {
  return guard([&] {
    need(report, "report");
    need(out_dir, "out_dir");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    qlift::require(!ec, qlift::ErrorCode::Io, std::string(out_dir) + ": " + ec.message());
    const char* ext = format == QLIFT_FORMAT_JSON ? ".json" : ".csv";
    for (const auto& e : report->entries) {
      const fs::path path = fs::path(out_dir) / (e.stem + ext);
      if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
      std::ofstream f(path, std::ios::binary);
      qlift::require(static_cast<bool>(f), qlift::ErrorCode::Io, path.string() + ": cannot open for writing");
      f << render(e, format);
      qlift::require(static_cast<bool>(f), qlift::ErrorCode::Io, path.string() + ": write failed");
    }
  });
}

int qlift_report_breached(const qlift_report* report) { return report ? report->breached : 0; }

int qlift_report_failed_rows(const qlift_report* report) { return report ? report->failed_rows : 0; }

size_t qlift_report_criterion_count(const qlift_report* report) {
  return report ? report->criteria.size() : 0;
}

qlift_status qlift_report_criterion(const qlift_report* report, size_t i, qlift_criterion* out) {
  return guard([&] {
    need(report, "report");
    need(out, "out");
    qlift::require(i < report->criteria.size(), qlift::ErrorCode::OutOfRange, "criterion index out of range");
    const auto& c = report->criteria[i];
    *out = {c.id, c.name.c_str(), c.passed ? 1 : 0, c.measured, c.threshold, c.seconds, c.detail.c_str()};
  });
}

void qlift_report_destroy(qlift_report* report) { delete report; }

void qlift_string_free(char* s) { std::free(s); }

}  // extern "C"
