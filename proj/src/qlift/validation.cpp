#include "qlift/validation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qlift/asymptotics.hpp"
#include "qlift/error.hpp"
#include "qlift/figures.hpp"
#include "qlift/lineshape.hpp"
#include "qlift/propagator.hpp"
#include "qlift/scenario.hpp"
#include "qlift/specfun.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
using Parts = std::vector<CriterionPart>;

CriterionPart part(std::string label, double value, double limit) {
  return {std::move(label), value, limit, value <= limit};
}

double wrap(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

double branch_error(double model, double oracle) { return std::abs(wrap(model - oracle)); }

double worst(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

Sweep linear_sweep(SweepParameter p, double from, double to, int points) {
  return Sweep{p, from, to, points};
}

Scenario scenario(const std::string& name, const PulseShape& shape, Observable obs,
                  const std::string& model, const Sweep& sw) {
  Scenario s;
  s.name = name;
  s.shape = shape;
  s.observable = obs;
  s.models = {model};
  s.sweep = sw;
  return s;
}

// Max |model - oracle| over rows where the model answered; failed rows count
// as infinite error.
struct ScanError {
  double max_abs = 0.0;
  double max_rel = 0.0;
  int refused = 0;
  int failed = 0;
};

ScanError scan_error(const ComparisonReport& r, size_t model = 0) {
  ScanError e;
  for (const auto& row : r.rows) {
    if (!row.ok) {
      ++e.failed;
      e.max_abs = INFINITY;
      continue;
    }
    const double v = row.values[model];
    if (!std::isfinite(v)) {
      ++e.refused;
      continue;
    }
    const double err = std::abs(v - row.oracle);
    e.max_abs = std::max(e.max_abs, err);
    e.max_rel = std::max(e.max_rel, err / std::abs(row.oracle));
  }
  return e;
}

// Linear rise at the second figure's parameters.
Parts linear_rise() {
  const double w = 100.0, d = 5.0;
  const PulseShape s = power_rise(1, w, 1.0);
  const SystemParams p = system_params(s, d);
  const TrajectoryPoint t = trajectory(p, s, 0.0, {1.0}).back();
  const LiftingResult r = linear_lifting(p.omega());
  const StateVector a = lifting_amplitudes(r, dynamical_phase(p, s, 0.0, 1.0));
  return {part("|p+ - |A+(1)|^2|", std::abs(r.p_plus - std::norm(t.a_plus)), 1e-4),
          part("arg A- error [rad]", branch_error(std::arg(a.b_minus), t.phase_minus), 1e-3),
          part("arg A+ error [rad]", branch_error(std::arg(a.b_plus), t.phase_plus), 1e-3)};
}

// Parabolic-cylinder operator against the propagator on a linear ramp with
// T0 Omega0 = 2, where T = tau and omega = T0 Delta0 / 2.
Parts half_lz() {
  double err = 0.0;
  for (double omega : {0.1, 0.35, 1.0, 2.0}) {
    for (int k = 1; k <= 20; ++k) {
      const double t_big = 0.5 * k;
      const PulseShape s = power_rise(1, 2.0, t_big);
      const SU2Operator u = lz_frame(propagate(system_params(s, 2.0 * omega), s, 0.0, t_big));
      err = std::max(err, max_abs_diff(u.matrix(), half_lz_exact(omega, t_big).matrix()));
    }
  }
  return {part("max entry error, 4 omega x 20 T", err, 1e-8)};
}

Parts exponential_rise() {
  std::vector<double> errs;
  double spread = 0.0, kummer = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double varpi = 0.25 * k;
    std::vector<double> formula;
    for (double w : {50.0, 100.0, 500.0}) {
      const double start = rising_cutoff(ShapeKind::Exponential, w, 1e-8);
      const double end = std::log(1000.0 / w);
      const PulseShape s = exponential(1, w, start, end);
      const double s_i = w * std::exp(start), s_end = w * std::exp(end);
      const double p = exponential_lifting(varpi, 0.5 * (s_end - s_i), s_i).p_plus;
      formula.push_back(p);
      if (w == 100.0) {
        const TrajectoryPoint t = trajectory(system_params(s, varpi), s, start, {end}).back();
        errs.push_back(std::abs(p - std::norm(t.a_plus)));
      }
    }
    for (double p : formula) spread = std::max(spread, std::abs(p - formula[0]));
  }
  const double s_i = 1e-9;
  for (double varpi : {0.0, 0.4, 1.0, 3.0}) {
    for (double s : {0.5, 5.0, 30.0, 100.0}) {
      const PulseShape sh = exponential(1, 1.0, std::log(s_i), std::log(s));
      const SU2Operator u = propagate(system_params(sh, varpi), sh, sh.tau_start, sh.tau_end);
      kummer = std::max(kummer, max_abs_diff(u.matrix(), exponential_exact(varpi, s, s_i).matrix()));
    }
  }
  return {part("p+ error, varpi in [0, 3]", worst(errs), 1e-3),
          part("p+ spread over T0 Omega0 in {50, 100, 500}", spread, 0.0),
          part("Kummer operator max entry error", kummer, 1e-7)};
}

Parts small_detuning() {
  const double h = 1e-5;
  const double slope = (linear_lifting(h).p_plus - 0.5) / h;
  // Second-order remainder of both expansions, scaled by the square of the
  // small parameter.
  double lin = 0.0, ex = 0.0;
  for (double v : {1e-1, 1e-2, 1e-3}) {
    const double w = 100.0, d = v * std::sqrt(2.0 * w);
    const double small = small_detuning_transfer(ShapeKind::PowerRise, 1, d, w).p_plus;
    lin = std::max(lin, std::abs(small - linear_lifting(v).p_plus) / (v * v));
    const double small_ex = small_detuning_transfer(ShapeKind::Exponential, 1, v, w).p_plus;
    ex = std::max(ex, std::abs(small_ex - exponential_lifting(v, 100.0, 1e-8).p_plus) / (v * v));
  }
  return {part("|slope + sqrt(pi/8)|", std::abs(slope + std::sqrt(kPi / 8)), 1e-4),
          part("linear remainder / omega^2", lin, 1.0),
          part("exponential remainder / varpi^2", ex, 1.0)};
}

Parts universal(int workers) {
  const RunOptions opt{kDefaultTol, workers};
  const auto n2 = run_scenario(scenario("universal_n2", power_rise(2, 100.0, 3.0), Observable::PPlus,
                                        "universal", linear_sweep(SweepParameter::T0Delta0, 0.0, 20.0, 81)),
                               opt);
  const auto n3 = run_scenario(scenario("universal_n3", power_rise(3, 100.0, 2.5), Observable::PhasePlus,
                                        "universal", linear_sweep(SweepParameter::T0Delta0, 0.0, 9.75, 40)),
                               opt);
  const ScanError e2 = scan_error(n2), e3 = scan_error(n3);
  return {part(fmt::format("n=2 p+ error, d in [0, 20] ({} refused)", e2.refused), e2.max_abs, 0.02),
          part(fmt::format("n=3 arg A+ error [rad], d < 10 ({} refused)", e3.refused), e3.max_abs, 0.15)};
}

Parts large_detuning(int workers) {
  const RunOptions opt{kDefaultTol, workers};
  const auto scan = run_scenario(scenario("large_n2", power_rise(2, 100.0, 3.0), Observable::PPlus,
                                          "large_detuning",
                                          linear_sweep(SweepParameter::T0Delta0, 5.0, 20.0, 61)),
                                 opt);
  const ScanError e = scan_error(scan);

  // Far tail: the integrator's P+ against alpha_2 on a log-log fit, and the
  // share of S_2 in the first-order result.
  const int n = 2;
  const double w = 100.0, tau = 6.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, dominance = 0.0;
  const int m = 11;
  for (int i = 0; i < m; ++i) {
    const double alpha = 20.0 * std::pow(5.0, i / (m - 1.0));
    const double d = std::pow(alpha * std::pow(w, 1.0 / n), n / (n + 1.0));
    const PulseShape s = power_rise(n, w, tau);
    const double p = std::norm(trajectory(system_params(s, d), s, 0.0, {tau}).back().a_plus);
    const auto t = large_detuning_transfer(n, alpha);
    dominance = std::max(dominance, std::abs(std::norm(t.s_n) / t.p_plus_exact() - 1.0));
    const double x = std::log(alpha), y = std::log(p);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return {part(fmt::format("|J_2|^2 rel error, d in [5, 20] ({} refused)", e.refused), e.max_rel, 0.2),
          part(fmt::format("log-log slope {:.4f} vs -4, alpha in [20, 100], rel dev", slope),
               std::abs(slope / (-2.0 * n) - 1.0), 0.05),
          part("|S_2|^2 / |J_2|^2 - 1, alpha in [20, 100]", dominance, 0.05)};
}

Parts rosen_zener_grid() {
  double err = 0.0, w_at = 0.0, d_at = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double w = 0.2 + 2.8 * i / 19.0, d = 2.0 * j / 19.0;
      const PulseShape s = sech(w, -12.0, 12.0);
      const double p = std::norm(propagate(system_params(s, d), s, -12.0, 12.0).u12);
      const double e = std::abs(rosen_zener(w, d).p_transfer - p);
      if (e > err) err = e, w_at = w, d_at = d;
    }
  }
  return {part(fmt::format("|B+|^2 error on 20x20 grid, support [-12, 12] (worst at W={:.3f}, d={:.3f})",
                           w_at, d_at),
               err, 1e-6)};
}

Parts trig() {
  auto scan = [](int n, double w) {
    double e = 0.0;
    for (int k = 0; k <= 120; ++k) {
      const double d = 0.05 * k;
      const PulseShape s = trig_power(n, w);
      const double p = std::norm(propagate(system_params(s, d), s, 0.0, kPi).u12);
      e = std::max(e, std::abs(trig_lineshape(n, w, d).p_transfer - p));
    }
    return e;
  };
  double re = 0.0, arg_dev = 0.0;
  for (int k = 0; k <= 120; ++k) {
    const cplx b = trig_lineshape(1, kPi / 2, 0.05 * k).b_plus;
    re = std::max(re, std::abs(b.real()));
    if (b != 0.0) arg_dev = std::max(arg_dev, std::abs(std::abs(std::arg(b)) - kPi / 2));
  }
  return {part("n=1, T0 Omega0 = pi/2", scan(1, kPi / 2), 0.05),
          part("n=2, T0 Omega0 = 2", scan(2, 2.0), 0.05),
          part("n=2, T0 Omega0 = 6", scan(2, 6.0), 0.05),
          part("n=1 |Re B+| (phase exactly +-pi/2)", re, 0.0),
          part("n=1 ||arg B+| - pi/2|", arg_dev, 0.0)};
}

Parts half_scrap_checks(int workers) {
  const PulseShape pw2 = power_rise(2, 100.0, std::sqrt(50.0));
  const PulseShape pw4 = power_rise(4, 1000.0, std::pow(5.0, 0.25));
  const PulseShape ex = exponential(1, 100.0, rising_cutoff(ShapeKind::Exponential, 100.0, 1e-8),
                                    std::log(10.0));
  auto gauss = [](double w) {
    return gaussian(w, rising_cutoff(ShapeKind::Gaussian, w, 1e-8), 0.0);
  };
  double analytic = 0.0, numeric = 0.0, phase = 0.0;
  for (auto seq : {HalfScrapSequence::StarkPump, HalfScrapSequence::PumpStark}) {
    for (const PulseShape& s : {pw2, pw4, ex}) {
      analytic = std::max(analytic, std::abs(half_scrap(seq, s, s.omega0, 0.0).p_plus_final - 0.5));
    }
    numeric = std::max(numeric, std::abs(half_scrap(seq, gauss(100.0), 100.0, 0.0).p_plus_final - 0.5));
  }
  for (const PulseShape& s : {pw2, pw4, ex, gauss(100.0)}) {
    numeric = std::max(numeric, std::abs(std::norm(pump_lifting_numeric(s, 0.0).b_plus) - 0.5));
  }
  // Doubling T0 doubles T0 Omega0 at exact resonance.
  for (const PulseShape& s : {pw2, ex, gauss(100.0)}) {
    PulseShape twice = s;
    if (s.kind == ShapeKind::Gaussian) twice = gauss(2.0 * s.omega0);
    const double a = half_scrap(HalfScrapSequence::StarkPump, s, s.omega0, 0.0).relative_phase;
    const double b = half_scrap(HalfScrapSequence::StarkPump, twice, 2.0 * s.omega0, 0.0).relative_phase;
    phase = std::max(phase, std::abs(wrap(a - b)));
  }

  double lift = 0.0;
  int refused = 0, failed = 0;
  const RunOptions opt{kDefaultTol, workers};
  for (const Scenario& s : figure_scenarios("figliftall")) {
    if (s.shape.kind != ShapeKind::PowerRise) continue;
    const ScanError e = scan_error(run_scenario(s, opt));
    lift = std::max(lift, e.max_abs);
    refused += e.refused;
    failed += e.failed;
  }
  return {part("analytic p - 1/2 at resonance", analytic, 1e-15),
          part("numeric p - 1/2 at resonance", numeric, 1e-3),
          part("Stark-pump phase change on doubling T0 [rad]", phase, 1e-9),
          part(fmt::format("power n in {{2, 4}} vs universal formula ({} rows refused by adiabaticity, "
                           "{} failed)",
                           refused, failed),
               lift, 0.02)};
}

// Second derivative by a five-point stencil along direction h.
template <class F>
cplx second_derivative(F f, cplx z, cplx h) {
  return (-f(z + 2.0 * h) + 16.0 * f(z + h) - 30.0 * f(z) + 16.0 * f(z - h) - f(z - 2.0 * h)) /
         (12.0 * h * h);
}

template <class F>
cplx first_derivative(F f, cplx z, cplx h) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

double rel(cplx residual, std::initializer_list<cplx> terms) {
  double scale = 0.0;
  for (cplx t : terms) scale = std::max(scale, std::abs(t));
  return scale == 0.0 ? std::abs(residual) : std::abs(residual) / scale;
}

Parts properties() {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  double unitarity = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double w = 1.0 + 99.0 * u(rng), d = 10.0 * u(rng);
    const double tol = std::pow(10.0, -12.0 + 4.0 * u(rng));
    const int n = 1 + static_cast<int>(4 * u(rng));
    PulseShape s;
    switch (k % 8) {
      case 0: s = power_rise(n, w, 0.5 + 1.5 * u(rng)); break;
      case 1: s = power_fall(n, w, -0.5 - 1.5 * u(rng)); break;
      case 2: s = exponential(1, w, -5.0, std::log(200.0 / w)); break;
      case 3: s = exponential(-1, w, -std::log(200.0 / w), 5.0); break;
      case 4: s = gaussian(w, -3.0, 3.0); break;
      case 5: s = sech(w, -6.0, 6.0); break;
      case 6: s = trig_power(std::min(n, 3), w); break;
      default: s = linear_truncated(w, 0.0, 2.0); break;
    }
    const SU2Operator op = propagate(system_params(s, d), s, s.tau_start, s.tau_end, tol);
    unitarity = std::max(unitarity, op.unitarity_defect() / tol);
  }

  double sum = 0.0;
  auto lifting = [&](const LiftingResult& r) { sum = std::max(sum, std::abs(r.p_minus + r.p_plus - 1.0)); };
  auto amplitudes = [&](cplx a, cplx b) {
    sum = std::max(sum, std::abs(std::norm(a) + std::norm(b) - 1.0));
  };
  for (int k = 0; k < 50; ++k) {
    const double w = 20.0 + 980.0 * u(rng), d = 30.0 * u(rng);
    const int n = 1 + static_cast<int>(4 * u(rng));
    lifting(linear_lifting(4.0 * u(rng)));
    lifting(lifting_power_law(n, d, w));
    try {
      lifting(universal_lifting(n, d, w));
    } catch (const Error&) {
    }
    lifting(exponential_lifting(3.0 * u(rng), 100.0, 1e-8));
    const LineshapePoint rz = rosen_zener(3.0 * u(rng), 2.0 * u(rng));
    amplitudes(rz.b_minus, rz.b_plus);
    const LineshapePoint tr = trig_lineshape(1 + k % 3, 0.5 + 10.0 * u(rng), 6.0 * u(rng));
    amplitudes(tr.b_minus, tr.b_plus);
    const PulseShape tp = trig_power(1 + k % 3, 6.0 + 20.0 * u(rng));
    const LineshapePoint c = composed_transfer(system_params(tp, 3.0 * u(rng)), tp);
    amplitudes(c.b_minus, c.b_plus);
    const HalfScrapResult h =
        half_scrap(HalfScrapSequence::StarkPump, power_rise(2, w, std::sqrt(5000.0 / w)), w, 20.0 + d);
    amplitudes(h.amplitudes.b_minus, h.amplitudes.b_plus);
  }

  double reversal = 0.0;
  for (int k = 0; k < 20; ++k) {
    const PulseShape fall = (k % 2 == 0) ? power_fall(1 + k % 4, 20.0 + 80.0 * u(rng), -2.0, 0.0)
                                         : exponential(-1, 20.0 + 80.0 * u(rng), -1.0, 20.0);
    const SystemParams p = system_params(fall, 0.3 + 4.0 * u(rng));
    const SU2Operator ua_fall = to_adiabatic_frame(propagate(p, fall, fall.tau_start, fall.tau_end), p,
                                                   fall, fall.tau_start, fall.tau_end);
    const PulseShape rise = mirrored(fall);
    const double a = mirror_time(fall, fall.tau_end), b = mirror_time(fall, fall.tau_start);
    const SU2Operator ua_rise = to_adiabatic_frame(propagate(p, rise, a, b), p, rise, a, b);
    reversal = std::max(reversal, max_abs_diff(falling_from_rising(ua_rise).matrix(), ua_fall.matrix()));
  }

  double weber = 0.0, kummer = 0.0, ident = 0.0;
  for (int k = 0; k < 60; ++k) {
    const cplx nu(-2.0 + 4.0 * u(rng), -2.0 + 4.0 * u(rng));
    const cplx z = std::polar(0.2 + 5.8 * u(rng), 2.0 * kPi * u(rng));
    auto d_nu = [&](cplx x) { return specfun::parabolic_cylinder_d(nu, x); };
    const cplx f = d_nu(z);
    const cplx f2 = second_derivative(d_nu, z, cplx(0.02 / (1.0 + std::abs(z) / 2.0)));
    weber = std::max(weber, std::abs(f2 + (nu + 0.5 - 0.25 * z * z) * f) /
                                (std::abs(f) * (1.0 + std::norm(z) / 4.0)));
    // D_{nu+1} - z D_nu + nu D_{nu-1} = 0
    const cplx up = specfun::parabolic_cylinder_d(nu + 1.0, z);
    const cplx down = specfun::parabolic_cylinder_d(nu - 1.0, z);
    ident = std::max(ident, rel(up - z * f + nu * down, {up, z * f, nu * down}));

    // Orders met by the exponential rise: a = i varpi/2, b = i varpi on the
    // imaginary axis.
    const double varpi = 20.0 * u(rng);
    const cplx ka(0.0, varpi / 2), kb(0.0, varpi), x(0.0, 1.0 + 400.0 * u(rng));
    auto m = [&](cplx y) { return specfun::kummer_m(ka, kb, y); };
    const cplx h(1e-2, 0.0);
    const cplx g = m(x), g1 = first_derivative(m, x, h), g2 = second_derivative(m, x, h);
    kummer = std::max(kummer, std::abs(x * g2 + (kb - x) * g1 - ka * g) / (std::abs(g) * (1.0 + std::abs(x))));
    const cplx a(-1.0 + 2.0 * u(rng), -3.0 + 6.0 * u(rng));
    const cplx b(0.5 + 2.0 * u(rng), -2.0 + 4.0 * u(rng));
    const cplx y = std::polar(0.2 + 9.8 * u(rng), 2.0 * kPi * u(rng));
    const cplx my = specfun::kummer_m(a, b, y);
    // Kummer's transformation M(a, b, x) = e^x M(b - a, b, -x)
    const cplx t = std::exp(y) * specfun::kummer_m(b - a, b, -y);
    ident = std::max(ident, rel(my - t, {my, t}));

    const cplx zg(-4.0 + 8.0 * u(rng), -4.0 + 8.0 * u(rng));
    // Gamma(z + 1) = z Gamma(z), and Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    ident = std::max(ident, std::abs(std::exp(specfun::log_gamma(zg + 1.0) - specfun::log_gamma(zg)) / zg - 1.0));
    ident = std::max(ident, std::abs(specfun::rgamma(zg) * specfun::rgamma(1.0 - zg) * kPi /
                                         std::sin(kPi * zg) - 1.0));
  }
  return {part("unitarity defect / tol, 200 random scenarios", unitarity, 10.0),
          part("|p- + p+ - 1| across models", sum, 1e-13),
          part("falling vs transposed rising operator", reversal, 1e-9),
          part("Weber residual / (|D| (1 + |z|^2/4))", weber, 1e-6),
          part("Kummer residual / (|M| (1 + |z|))", kummer, 1e-8),
          part("Gamma, D_nu and Kummer identities (rel)", ident, 1e-9)};
}

struct CriterionDef {
  const char* name;
  double budget;
  std::function<Parts(int)> run;
};

const CriterionDef& definition(int id) {
  static const std::vector<CriterionDef> defs{
      {"linear-rise asymptotics", 5.0, [](int) { return linear_rise(); }},
      {"half Landau-Zener exact operator", 30.0, [](int) { return half_lz(); }},
      {"exponential rise", 30.0, [](int) { return exponential_rise(); }},
      {"small-detuning theory", 30.0, [](int) { return small_detuning(); }},
      {"universal formula", 120.0, universal},
      {"large-detuning theory", 120.0, large_detuning},
      {"Rosen-Zener lineshape", 60.0, [](int) { return rosen_zener_grid(); }},
      {"trig lineshapes", 60.0, [](int) { return trig(); }},
      {"half-SCRAP", 120.0, half_scrap_checks},
      {"property suite", 600.0, [](int) { return properties(); }},
  };
  require(id >= 1 && id <= kCriterionCount, ErrorCode::InvalidArgument,
          fmt::format("criterion id must be in 1..{}, got {}", kCriterionCount, id));
  return defs[id - 1];
}

}  // namespace

const char* criterion_name(int id) { return definition(id).name; }

CriterionResult run_criterion(int id, int workers) {
  const CriterionDef& sp = definition(id);
  CriterionResult r;
  r.id = id;
  r.name = sp.name;
  r.budget_seconds = sp.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.parts = sp.run(workers);
  } catch (const Error& e) {
    r.parts = {CriterionPart{fmt::format("error ({})", error_code_name(e.code())), INFINITY, 0.0, false}};
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  r.passed = r.seconds <= r.budget_seconds;
  double worst_ratio = -1.0;
  std::string detail;
  for (const auto& p : r.parts) {
    r.passed = r.passed && p.passed;
    const double ratio = p.limit > 0.0 ? p.value / p.limit : (p.value > 0.0 ? INFINITY : 0.0);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      r.measured = p.value;
      r.threshold = p.limit;
    }
    detail += fmt::format("{}{}: {:.3g} (limit {:.3g}){}", detail.empty() ? "" : "; ", p.label, p.value,
                          p.limit, p.passed ? "" : " FAIL");
  }
  if (r.seconds > r.budget_seconds) {
    detail += fmt::format("; runtime {:.1f} s over budget {:.0f} s", r.seconds, r.budget_seconds);
  }
  r.detail = r.detail.empty() ? detail : detail + "; " + r.detail;
  return r;
}

std::vector<CriterionResult> run_validation(int workers) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, workers));
  return out;
}

}  // namespace qlift
