#include <qlift.h>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kBreach = 2, kConfig = 3, kNumeric = 4 };

struct Common {
  double tol = 0.0;
  int workers = 1;
  std::string out_dir;
  std::string format = "csv";
};

int exit_for(qlift_status s) {
  switch (s) {
    case QLIFT_OK: return kOk;
    case QLIFT_CONFIG:
    case QLIFT_INVALID_ARGUMENT:
    case QLIFT_IO: return kConfig;
    default: return kNumeric;
  }
}

int report_error(qlift_status s) {
  std::fprintf(stderr, "qlift: %s: %s\n", qlift_status_name(s), qlift_last_error());
  return exit_for(s);
}

qlift_format format_of(const Common& c) {
  return c.format == "json" ? QLIFT_FORMAT_JSON : QLIFT_FORMAT_CSV;
}

qlift_options options_of(const Common& c) {
  qlift_options o;
  qlift_options_default(&o);
  if (c.tol > 0.0) o.tol = c.tol;
  o.workers = c.workers;
  return o;
}

// Writes the report, prints where it went and maps its state to an exit code.
int finish(qlift_report* rep, const Common& c) {
  const qlift_status s = qlift_report_write(rep, c.out_dir.c_str(), format_of(c));
  if (s != QLIFT_OK) {
    qlift_report_destroy(rep);
    return report_error(s);
  }
  const char* ext = c.format == "json" ? "json" : "csv";
  for (size_t i = 0; i < qlift_report_table_count(rep); ++i) {
    std::printf("wrote %s/%s.%s\n", c.out_dir.c_str(), qlift_report_table_name(rep, i), ext);
  }
  const int failed = qlift_report_failed_rows(rep), breached = qlift_report_breached(rep);
  if (failed > 0) std::printf("%d row(s) failed\n", failed);
  if (breached > 0) std::printf("%d threshold breach(es) or failed criteria\n", breached);
  qlift_report_destroy(rep);
  if (failed > 0) return kNumeric;
  return breached > 0 ? kBreach : kOk;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--tol", c.tol, "Integrator tolerance (default 1e-11)")->check(CLI::Range(1e-13, 1e-6));
  cmd->add_option("--workers", c.workers, "Worker threads for sweep rows")->check(CLI::PositiveNumber);
  cmd->add_option("--out-dir", c.out_dir, "Output directory (default $QLIFT_OUT_DIR or ./out)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifting and creation of quasi-degeneracy in pulse-driven two-level systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qlift_version());

  Common common;
  if (const char* env = std::getenv("QLIFT_OUT_DIR"); env && *env) common.out_dir = env;
  else common.out_dir = "out";

  std::string config;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("config", config, "Scenario YAML")->required();
  add_common(run, common);

  std::string parameter = "t0_delta0";
  double from = 0.0, to = 1.0;
  int points = 21;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario file over a replaced sweep");
  sweep->add_option("config", config, "Scenario YAML")->required();
  sweep->add_option("--param", parameter, "t0_delta0, t0_omega0 or tau")
      ->check(CLI::IsMember({"t0_delta0", "t0_omega0", "tau"}));
  sweep->add_option("--from", from, "First value")->required();
  sweep->add_option("--to", to, "Last value")->required();
  sweep->add_option("--points", points, "Number of points (>= 2)");
  add_common(sweep, common);

  std::string figure_id;
  auto* figure = app.add_subcommand("figure", "Write the datasets of a built-in figure");
  std::vector<std::string> ids;
  for (size_t i = 0; i < qlift_figure_count(); ++i) ids.emplace_back(qlift_figure_id(i));
  ids.emplace_back("all");
  figure->add_option("id", figure_id, "Figure id or 'all'")->required()->check(CLI::IsMember(ids));
  add_common(figure, common);

  std::vector<int> only;
  auto* validate = app.add_subcommand("validate", "Run the acceptance suite");
  validate->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, 10));
  add_common(validate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  const qlift_options opt = options_of(common);
  qlift_report* rep = nullptr;

  if (run->parsed() || sweep->parsed()) {
    const qlift_status s = run->parsed()
                               ? qlift_run_scenario_file(config.c_str(), &opt, &rep)
                               : qlift_run_sweep_file(config.c_str(), parameter.c_str(), from, to, points, &opt, &rep);
    if (s != QLIFT_OK) return report_error(s);
    return finish(rep, common);
  }

  if (figure->parsed()) {
    std::vector<std::string> todo;
    if (figure_id == "all") todo.assign(ids.begin(), ids.end() - 1);
    else todo.push_back(figure_id);
    int worst = kOk;
    for (const auto& id : todo) {
      const qlift_status s = qlift_figure(id.c_str(), &opt, &rep);
      const int code = s != QLIFT_OK ? report_error(s) : finish(rep, common);
      worst = std::max(worst, code);
    }
    return worst;
  }

  const qlift_status s = qlift_validate(only.empty() ? nullptr : only.data(), only.size(), common.workers, &rep);
  if (s != QLIFT_OK) return report_error(s);
  for (size_t i = 0; i < qlift_report_criterion_count(rep); ++i) {
    qlift_criterion c;
    qlift_report_criterion(rep, i, &c);
    std::printf("criterion %2d %s  %s  (%.1f s)\n    %s\n", c.id, c.passed ? "PASS" : "FAIL", c.name,
                c.seconds, c.detail);
  }
  return finish(rep, common);
}
