#include "qlift/propagator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "qlift/error.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kMaxSteps = 20'000'000;

using State = std::array<double, 8>;
namespace ode = boost::numeric::odeint;

void check_interval(double tau_a, double tau_b, const char* who) {
  require(std::isfinite(tau_a) && std::isfinite(tau_b) && tau_a <= tau_b,
          ErrorCode::InvalidArgument,
          fmt::format("{}: need finite tau_a <= tau_b, got [{}, {}]", who, tau_a, tau_b));
}

void check_tol(double tol) {
  require(tol >= 1e-13 && tol <= 1e-6, ErrorCode::InvalidArgument,
          fmt::format("tolerance {} outside [1e-13, 1e-6]", tol));
}

// Integration segments between envelope breakpoints.
std::vector<double> segments(const PulseShape& shape, double tau_a, double tau_b) {
  std::vector<double> cuts{tau_a};
  for (double p : breakpoints(shape, tau_a, tau_b)) cuts.push_back(p);
  cuts.push_back(tau_b);
  return cuts;
}

// Adaptive RKF78 over [t0, t1], calling `accepted(t, x)` after every step.
template <class Rhs, class Obs>
void drive(Rhs&& rhs, State& x, double t0, double t1, double tol, Obs&& accepted) {
  if (t1 <= t0) return;
  // Per-step tolerance well below the requested global accuracy; local errors
  // accumulate roughly linearly over the accepted steps.
  const double local = std::max(1e-2 * tol, 1e-15);
  auto stepper = ode::make_controlled(local, local, ode::runge_kutta_fehlberg78<State>());
  double t = t0;
  double dt = std::min(1e-3, t1 - t0);
  long steps = 0;
  while (t < t1) {
    if (t + dt > t1) dt = t1 - t;
    const double t_prev = t;
    if (stepper.try_step(rhs, x, t, dt) == ode::success) {
      if (t1 - t < 1e-15 * std::max(1.0, std::abs(t1))) t = t1;
      accepted(t, x);
    } else if (dt < 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      throw IntegrationError(t, fmt::format("step size underflow at tau = {}", t));
    }
    if (++steps > kMaxSteps) {
      throw IntegrationError(t_prev, fmt::format("step budget exhausted at tau = {}", t_prev));
    }
  }
}

cplx at(const State& x, int k) { return {x[2 * k], x[2 * k + 1]}; }
void put(State& x, int k, cplx v) {
  x[2 * k] = v.real();
  x[2 * k + 1] = v.imag();
}

// Columns (U11, U21) and (U12, U22) packed as four complex numbers.
State identity_state() {
  State x{};
  put(x, 0, 1.0);
  put(x, 3, 1.0);
  return x;
}

Mat2 state_matrix(const State& x) { return {at(x, 0), at(x, 2), at(x, 1), at(x, 3)}; }

// dU/dtau = -i H U with H = (1/2)[[h11, h12], [h21, -h11]].
void schrodinger_rhs(const State& x, State& dxdt, cplx h11, cplx h12, cplx h21) {
  const cplx mi(0.0, -0.5);
  for (int col = 0; col < 2; ++col) {
    const cplx u1 = at(x, 2 * col), u2 = at(x, 2 * col + 1);
    put(dxdt, 2 * col, mi * (h11 * u1 + h12 * u2));
    put(dxdt, 2 * col + 1, mi * (h21 * u1 - h11 * u2));
  }
}

double wrap_step(double previous, double principal) {
  return previous + std::remainder(principal - previous, 2.0 * kPi);
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c),
                   std::abs(x.d - y.d)});
}

double SU2Operator::unitarity_defect() const { return std::abs(std::norm(u11) + std::norm(u12) - 1.0); }

SU2Operator operator*(const SU2Operator& x, const SU2Operator& y) {
  return SU2Operator::from_matrix(x.matrix() * y.matrix());
}

StateVector apply(const SU2Operator& u, const StateVector& v) {
  Mat2 m = u.matrix();
  return {m.a * v.b_minus + m.b * v.b_plus, m.c * v.b_minus + m.d * v.b_plus};
}

SU2Operator propagate(const SystemParams& params, const PulseShape& shape, double tau_a,
                      double tau_b, double tol) {
  return propagate(params, shape, tau_a, tau_b, PropagateOptions{tol, false});
}

SU2Operator propagate(const SystemParams& params, const PulseShape& shape, double tau_a,
                      double tau_b, const PropagateOptions& options) {
  check_interval(tau_a, tau_b, "propagate");
  check_tol(options.tol);
  validate(shape);
  const double d = params.t0_delta0;
  State x = identity_state();
  auto cuts = segments(shape, tau_a, tau_b);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    // Evaluate the envelope strictly inside the segment at its ends.
    auto w_at = [&](double t) { return rabi_at(shape, std::clamp(t, lo, hi)); };
    if (options.interaction_picture) {
      auto rhs = [&](const State& s, State& ds, double t) {
        const cplx ph = std::polar(1.0, -d * (t - tau_a));
        const double w = w_at(t);
        schrodinger_rhs(s, ds, 0.0, w * ph, w * std::conj(ph));
      };
      drive(rhs, x, lo, hi, options.tol, [](double, const State&) {});
    } else {
      auto rhs = [&](const State& s, State& ds, double t) {
        schrodinger_rhs(s, ds, -d, w_at(t), w_at(t));
      };
      drive(rhs, x, lo, hi, options.tol, [](double, const State&) {});
    }
  }
  Mat2 m = state_matrix(x);
  if (options.interaction_picture) {
    const double phi = 0.5 * d * (tau_b - tau_a);
    m = Mat2{std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi)} * m;
  }
  return SU2Operator::from_matrix(m);
}

SU2Operator propagate_adiabatic(const SystemParams& params, const PulseShape& shape,
                                double tau_a, double tau_b, double tol) {
  check_interval(tau_a, tau_b, "propagate_adiabatic");
  check_tol(tol);
  validate(shape);
  State x = identity_state();
  auto cuts = segments(shape, tau_a, tau_b);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    // One-sided derivative toward the segment interior at its ends.
    const double nudge = 1e-13 * (hi - lo);
    auto rhs = [&](const State& s, State& ds, double t) {
      const double tc = std::clamp(t, lo, hi);
      const double tin = tc <= lo ? lo + nudge : (tc >= hi ? hi - nudge : tc);
      const double w = rabi_at(shape, tc);
      const double delta = std::hypot(params.t0_delta0, w);
      const double g = nonadiabatic_coupling(params, shape, tin);
      schrodinger_rhs(s, ds, -delta, cplx(0.0, -g), cplx(0.0, g));
    };
    drive(rhs, x, lo, hi, tol, [](double, const State&) {});
  }
  return SU2Operator::from_matrix(state_matrix(x));
}

std::vector<TrajectoryPoint> trajectory(const SystemParams& params, const PulseShape& shape,
                                        double tau_a, const std::vector<double>& taus,
                                        double tol) {
  check_tol(tol);
  validate(shape);
  require(std::is_sorted(taus.begin(), taus.end()) && (taus.empty() || taus.front() >= tau_a),
          ErrorCode::InvalidArgument, "trajectory: sample times must be sorted and >= tau_a");
  const double d = params.t0_delta0;
  std::vector<TrajectoryPoint> out;
  out.reserve(taus.size());

  State x{};
  put(x, 0, 1.0);  // only the first column matters here
  double ph_minus = 0.0, ph_plus = 0.0;
  bool plus_started = false;

  auto adiabatic = [&](double t, const State& s, cplx& am, cplx& ap) {
    const double theta = mixing_angle(rabi_at(shape, t), d);
    const double c = std::cos(theta), sn = std::sin(theta);
    const cplx bm = at(s, 0), bp = at(s, 1);
    // A = R^dagger B
    am = c * bm - sn * bp;
    ap = sn * bm + c * bp;
  };
  auto track = [&](double t, const State& s) {
    cplx am, ap;
    adiabatic(t, s, am, ap);
    ph_minus = wrap_step(ph_minus, std::arg(am));
    if (std::abs(ap) > 0.0) {
      ph_plus = plus_started ? wrap_step(ph_plus, std::arg(ap)) : std::arg(ap);
      plus_started = true;
    }
  };

  auto cuts = segments(shape, tau_a, taus.empty() ? tau_a : taus.back());
  double t = tau_a;
  size_t next = 0;
  auto emit = [&](double tau) {
    cplx am, ap;
    adiabatic(tau, x, am, ap);
    out.push_back({tau, {at(x, 0), at(x, 1)}, am, ap, ph_minus, ph_plus});
  };
  while (next < taus.size() && taus[next] == tau_a) emit(taus[next++]);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    auto w_at = [&](double tt) { return rabi_at(shape, std::clamp(tt, lo, hi)); };
    auto rhs = [&](const State& s, State& ds, double tt) {
      schrodinger_rhs(s, ds, -d, w_at(tt), w_at(tt));
    };
    while (t < hi) {
      const double stop = (next < taus.size() && taus[next] < hi) ? taus[next] : hi;
      drive(rhs, x, t, stop, tol, track);
      t = stop;
      while (next < taus.size() && taus[next] <= t) emit(taus[next++]);
    }
  }
  return out;
}

double mixing_angle(double omega, double delta) {
  require(std::isfinite(omega) && std::isfinite(delta), ErrorCode::InvalidArgument,
          "mixing_angle: non-finite input");
  require(omega >= 0.0, ErrorCode::InvalidArgument, "mixing_angle: omega must be >= 0");
  if (omega == 0.0 && delta == 0.0) {
    fail(ErrorCode::UndefinedAngle, "mixing_angle: undefined at the conical point omega = delta = 0");
  }
  require(!(omega == 0.0 && delta < 0.0), ErrorCode::InvalidArgument,
          "mixing_angle: theta = pi/2 lies outside [0, pi/2)");
  return 0.5 * std::atan2(omega, delta);
}

Mat2 rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c, s, -s, c};
}

SU2Operator to_adiabatic_frame(const SU2Operator& u, const SystemParams& params,
                               const PulseShape& shape, double tau_a, double tau_b) {
  const double ta = mixing_angle(rabi_at(shape, tau_a), params.t0_delta0);
  const double tb = mixing_angle(rabi_at(shape, tau_b), params.t0_delta0);
  return SU2Operator::from_matrix(rotation(tb).adjoint() * u.matrix() * rotation(ta));
}

SU2Operator from_adiabatic_frame(const SU2Operator& ua, const SystemParams& params,
                                 const PulseShape& shape, double tau_a, double tau_b) {
  const double ta = mixing_angle(rabi_at(shape, tau_a), params.t0_delta0);
  const double tb = mixing_angle(rabi_at(shape, tau_b), params.t0_delta0);
  return SU2Operator::from_matrix(rotation(tb) * ua.matrix() * rotation(ta).adjoint());
}

Mat2 lz_transform() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, r, -r, r};
}

SU2Operator lz_frame(const SU2Operator& u) {
  const Mat2 s = lz_transform();
  return SU2Operator::from_matrix(s.adjoint() * u.matrix() * s);
}

double nonadiabatic_coupling(const SystemParams& params, const PulseShape& shape, double tau) {
  const double d = params.t0_delta0;
  const double w = rabi_at(shape, tau);
  if (w == 0.0 && d == 0.0) {
    fail(ErrorCode::UndefinedAngle, "nonadiabatic_coupling: undefined at omega = delta = 0");
  }
  if (d == 0.0) return 0.0;
  return rabi_derivative(shape, tau, 1) * d / (d * d + w * w);
}

double nonadiabatic_coefficient(const SystemParams& params, const PulseShape& shape, double tau) {
  const double delta = std::hypot(params.t0_delta0, rabi_at(shape, tau));
  return std::abs(nonadiabatic_coupling(params, shape, tau)) / (2.0 * delta);
}

AdiabaticityProfile adiabaticity_profile(const SystemParams& params, const PulseShape& shape,
                                         int samples) {
  require(samples >= 2, ErrorCode::InvalidArgument, "adiabaticity_profile: need >= 2 samples");
  require(params.t0_delta0 > 0.0, ErrorCode::InvalidArgument,
          "adiabaticity_profile: needs a positive detuning");
  AdiabaticityProfile prof;
  const double a = shape.tau_start, b = shape.tau_end;
  // Stay one ulp-scale step inside truncated supports so derivatives are one-sided.
  const double eps = 1e-12 * std::max(1.0, b - a);
  for (int k = 0; k < samples; ++k) {
    double t = a + (b - a) * k / (samples - 1);
    if (k == 0) t += eps;
    if (k == samples - 1) t -= eps;
    const double g = nonadiabatic_coefficient(params, shape, t);
    prof.samples.emplace_back(t, g);
    if (g > prof.gamma_tilde_max) {
      prof.gamma_tilde_max = g;
      prof.tau_m = t;
    }
  }
  if (shape.kind == ShapeKind::PowerRise) {
    const int n = shape.n;
    const double ratio = params.t0_delta0 / shape.omega0;
    const double x = std::pow(double(n - 1) / (2.0 * n + 1.0), 1.0 / (2.0 * n)) *
                     std::pow(ratio, 1.0 / n);
    const double t = shape.tau_start + x;
    if (t <= shape.tau_end) {
      prof.closed_form = true;
      prof.tau_m = t;
      prof.gamma_tilde_max = nonadiabatic_coefficient(params, shape, n == 1 ? t + eps : t);
    }
  }
  return prof;
}

double adiabatic_junction(const SystemParams& params, const PulseShape& shape, double from,
                          double to, double threshold) {
  require(threshold > 0.0, ErrorCode::InvalidArgument, "adiabatic_junction: threshold must be > 0");
  const int n = 4000;
  const double eps = 1e-12 * std::max(1.0, std::abs(to - from));
  double last_bad = from;
  bool any_bad = false;
  for (int k = 0; k <= n; ++k) {
    double t = from + (to - from) * k / n;
    if (k == 0) t += (to > from ? eps : -eps);
    if (nonadiabatic_coefficient(params, shape, t) >= threshold) {
      last_bad = t;
      any_bad = true;
    }
  }
  if (!any_bad) return from;
  require(last_bad != to, ErrorCode::Adiabaticity,
          fmt::format("no adiabatic plateau: gamma_tilde >= {} up to tau = {}", threshold, to));
  // Refine the crossing between the last offending sample and the next one.
  double lo = last_bad, hi = last_bad + (to - from) / n;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (nonadiabatic_coefficient(params, shape, mid) >= threshold ? lo : hi) = mid;
  }
  return hi;
}

double dynamical_phase(const SystemParams& params, const PulseShape& shape, double tau_a,
                       double tau_b) {
  check_interval(tau_a, tau_b, "dynamical_phase");
  const double d = params.t0_delta0;
  if (shape.n == 1 && is_power_law(shape.kind)) {
    // (1/2) int sqrt(d^2 + W^2 x^2) dx on the support, (d/2) dtau outside.
    const double W = shape.omega0;
    auto prim = [&](double x) {
      const double u = W * x;
      const double asinh_term = d > 0.0 ? d * d * std::asinh(u / d) : 0.0;
      return 0.25 / W * (u * std::hypot(d, u) + asinh_term);
    };
    const double lo = std::max(tau_a, shape.tau_start), hi = std::min(tau_b, shape.tau_end);
    double inside = 0.0, covered = 0.0;
    if (lo < hi) {
      covered = hi - lo;
      if (shape.kind == ShapeKind::PowerRise) {
        inside = prim(hi - shape.tau_start) - prim(lo - shape.tau_start);
      } else {
        inside = prim(shape.tau_end - lo) - prim(shape.tau_end - hi);
      }
    }
    return inside + 0.5 * d * ((tau_b - tau_a) - covered);
  }
  auto f = [&](double t) { return 0.5 * std::hypot(d, rabi_at(shape, t)); };
  auto cuts = segments(shape, tau_a, tau_b);
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double err = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1],
                                                                           12, 1e-13, &err);
  }
  return total;
}

SU2Operator falling_from_rising(const SU2Operator& u_rise) {
  return SU2Operator::from_matrix(u_rise.matrix().transpose());
}

PulseShape mirrored(const PulseShape& shape) {
  PulseShape m = shape;
  if (is_truncated(shape.kind)) {
    m.tau_start = shape.tau_end;
    m.tau_end = 2.0 * shape.tau_end - shape.tau_start;
    if (shape.kind == ShapeKind::PowerFall) m.kind = ShapeKind::PowerRise;
    else if (shape.kind == ShapeKind::PowerRise) m.kind = ShapeKind::PowerFall;
  } else {
    m.tau_start = -shape.tau_end;
    m.tau_end = -shape.tau_start;
    if (shape.kind == ShapeKind::Exponential) m.sign = -shape.sign;
  }
  return m;
}

double mirror_time(const PulseShape& shape, double tau) {
  return is_truncated(shape.kind) ? 2.0 * shape.tau_end - tau : -tau;
}

}  // namespace qlift
