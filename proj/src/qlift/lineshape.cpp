#include "qlift/lineshape.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "qlift/error.hpp"
#include "qlift/specfun.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Edge { Power, Exponential, Numeric };

struct EdgeModel {
  Edge kind;
  int n;
};

EdgeModel edge_model(const PulseShape& s) {
  switch (s.kind) {
    case ShapeKind::TrigPower: return {Edge::Power, s.n};
    case ShapeKind::LinearTruncated: return {Edge::Power, 1};
    case ShapeKind::Sech: return {Edge::Exponential, 1};
    case ShapeKind::Gaussian: return {Edge::Numeric, 1};
    default:
      fail(ErrorCode::InvalidArgument,
           fmt::format("composed_transfer: {} is not a bell-shaped pulse", shape_kind_name(s.kind)));
  }
}

SU2Operator from_adiabatic_amplitudes(const StateVector& a) {
  return {a.b_minus, -std::conj(a.b_plus)};
}

LiftingResult power_edge_lifting(int n, double d, double omega0) {
  if (n == 1) return linear_lifting(d / std::sqrt(2.0 * omega0));
  LiftingResult r = lifting_power_law(n, d, omega0);
  r.regime_warning = 2.0 * std::hypot(d, omega0) < 10.0 * n;
  return r;
}

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

void finish(LineshapePoint& pt) {
  pt.p_transfer = std::norm(pt.b_plus);
}

// Composition without the area and junction checks.
LineshapePoint compose(const SystemParams& params, const PulseShape& shape, double tau_1,
                       double tau_2) {
  const double d = params.t0_delta0;
  const double ti = shape.tau_start, tf = shape.tau_end;
  const EdgeModel edge = edge_model(shape);

  LineshapePoint pt;
  pt.t0_delta0 = d;
  pt.area = pulse_area(shape, ti, tf);
  const double eta_mid = dynamical_phase(params, shape, tau_1, tau_2);
  SU2Operator lift, create;

  switch (edge.kind) {
    case Edge::Power: {
      const LiftingResult r = power_edge_lifting(edge.n, d, shape.omega0);
      const double eta_l = dynamical_phase(params, shape, ti, tau_1);
      const double eta_c = dynamical_phase(params, shape, tau_2, tf);
      lift = from_adiabatic_amplitudes(lifting_amplitudes(r, eta_l));
      create = falling_from_rising(from_adiabatic_amplitudes(lifting_amplitudes(r, eta_c)));
      pt.model = r.model;
      pt.regime_warning = r.regime_warning;
      pt.eta = eta_l + eta_mid + eta_c;
      break;
    }
    case Edge::Exponential: {
      // Omega ~ 2 Omega0 e^{-+tau} on the two wings.
      const double amp = 2.0 * shape.omega0;
      const double s_i = amp * std::exp(ti), s_1 = amp * std::exp(tau_1);
      const double s_f = amp * std::exp(-tf), s_2 = amp * std::exp(-tau_2);
      const LiftingResult rl = exponential_lifting(d, 0.5 * (s_1 - s_i), s_i);
      const LiftingResult rc = exponential_lifting(d, 0.5 * (s_2 - s_f), s_f);
      // The large-s phase s/2 of the model is its own dynamical phase plus a
      // constant; keep the constant and use the pulse's dynamical phase.
      const double eta_l =
          dynamical_phase(params, shape, ti, tau_1) + exponential_phase_offset(d, s_i);
      const double eta_c =
          dynamical_phase(params, shape, tau_2, tf) + exponential_phase_offset(d, s_f);
      lift = from_adiabatic_amplitudes(lifting_amplitudes(rl, eta_l));
      create = falling_from_rising(from_adiabatic_amplitudes(lifting_amplitudes(rc, eta_c)));
      pt.model = LiftingModel::ExponentialExact;
      pt.regime_warning = rl.regime_warning || rc.regime_warning;
      pt.eta = eta_l + eta_mid + eta_c;
      break;
    }
    case Edge::Numeric: {
      const Mat2 r1 = rotation(mixing_angle(rabi_at(shape, tau_1), d));
      const Mat2 r2 = rotation(mixing_angle(rabi_at(shape, tau_2), d));
      lift = SU2Operator::from_matrix(r1.adjoint() * propagate(params, shape, ti, tau_1).matrix());
      create = SU2Operator::from_matrix(propagate(params, shape, tau_2, tf).matrix() * r2);
      pt.model = LiftingModel::Numeric;
      pt.numeric_edges = true;
      pt.eta = dynamical_phase(params, shape, ti, tf);
      break;
    }
  }

  const SU2Operator u = create * SU2Operator{std::polar(1.0, eta_mid), 0.0} * lift;
  pt.b_minus = u.u11;
  pt.b_plus = -std::conj(u.u12);
  finish(pt);
  return pt;
}

}  // namespace

// lim_{s -> inf} [s/2 - (1/2) int_{s_i}^{s} sqrt(varpi^2 + x^2) dx / x]
double exponential_phase_offset(double varpi, double s_i) {
  if (varpi == 0.0) return 0.5 * s_i;
  return 0.5 * std::hypot(varpi, s_i) - 0.5 * varpi * std::asinh(varpi / s_i);
}


Junctions default_junctions(const SystemParams& params, const PulseShape& shape,
                            double threshold) {
  const double ti = shape.tau_start, tf = shape.tau_end;
  const double mid = 0.5 * (ti + tf);
  if (params.t0_delta0 == 0.0) return {mid, mid};
  return {adiabatic_junction(params, shape, ti, mid, threshold),
          adiabatic_junction(params, shape, tf, mid, threshold)};
}

LineshapePoint composed_transfer(const SystemParams& params, const PulseShape& shape,
                                 double tau_1, double tau_2, double threshold) {
  validate(shape);
  validate(params);
  edge_model(shape);
  const double ti = shape.tau_start, tf = shape.tau_end;
  require(ti <= tau_1 && tau_1 <= tau_2 && tau_2 <= tf, ErrorCode::InvalidArgument,
          fmt::format("composed_transfer: need {} <= tau_1 = {} <= tau_2 = {} <= {}", ti, tau_1,
                      tau_2, tf));
  const double area = pulse_area(shape, ti, tf);
  require(area >= kMinComposedArea, ErrorCode::AreaTooSmall,
          fmt::format("composed_transfer: pulse area {:.4g} is below {}", area, kMinComposedArea));
  if (params.t0_delta0 != 0.0) {
    for (double tau : {tau_1, tau_2}) {
      const double g = nonadiabatic_coefficient(params, shape, tau);
      require(g <= threshold, ErrorCode::Adiabaticity,
              fmt::format("composed_transfer: gamma_tilde({:.6g}) = {:.3g} exceeds {}", tau, g,
                          threshold));
    }
  }
  return compose(params, shape, tau_1, tau_2);
}

LineshapePoint composed_transfer(const SystemParams& params, const PulseShape& shape) {
  validate(shape);
  validate(params);
  const Junctions j = default_junctions(params, shape);
  return composed_transfer(params, shape, j.tau_1, j.tau_2);
}

LineshapePoint rosen_zener(double t0_omega0, double t0_delta0) {
  require(std::isfinite(t0_omega0) && t0_omega0 >= 0.0 && std::isfinite(t0_delta0),
          ErrorCode::InvalidArgument, "rosen_zener: need finite T0*Omega0 >= 0 and T0*Delta0");
  LineshapePoint pt;
  pt.t0_delta0 = t0_delta0;
  pt.area = kPi * t0_omega0;
  pt.eta = 0.5 * pt.area;
  pt.model = LiftingModel::ExponentialExact;
  pt.b_minus_approximate = true;
  const double x = 0.5 * kPi * t0_delta0;
  const double sn = std::sin(pt.eta), cs = std::cos(pt.eta);
  pt.b_plus = {0.0, -sn / std::cosh(x)};
  if (t0_omega0 == 0.0) {
    pt.b_minus = 1.0;
  } else {
    // 2 xi with the initial area referred to free evolution.
    const double two_xi = 2.0 * specfun::log_gamma({0.5, 0.5 * t0_delta0}).imag() +
                          t0_delta0 * (std::log(2.0) - std::log(t0_omega0));
    pt.b_minus = std::polar(1.0, two_xi) * cplx(cs, sn * std::tanh(x));
  }
  finish(pt);
  return pt;
}

LineshapePoint trig_lineshape(int n, double t0_omega0, double t0_delta0) {
  const PulseShape shape = trig_power(n, t0_omega0, 0.0);
  const SystemParams params = system_params(shape, t0_delta0);
  const LiftingResult r = power_edge_lifting(n, t0_delta0, t0_omega0);

  LineshapePoint pt;
  pt.t0_delta0 = t0_delta0;
  pt.area = pulse_area(shape, 0.0, kPi);
  pt.eta = dynamical_phase(params, shape, 0.0, kPi);
  pt.model = r.model;
  pt.regime_warning = pt.area < kPi * (1.0 - 1e-9);
  const double sum = r.chi_minus + r.chi_plus + pt.eta;
  pt.b_plus = cplx(0.0, -2.0 * std::sqrt(r.p_plus * r.p_minus) * std::sin(sum));
  pt.b_minus = std::polar(1.0, 2.0 * r.common_phase) *
               (r.p_minus * std::polar(1.0, 2.0 * r.chi_minus + pt.eta) +
                r.p_plus * std::polar(1.0, -(2.0 * r.chi_plus + pt.eta)));
  finish(pt);
  return pt;
}

std::pair<double, double> eigenenergy_surface(double t0_omega, double t0_delta) {
  const double half = 0.5 * std::hypot(t0_omega, t0_delta);
  return {-half, half};
}

const char* half_scrap_sequence_name(HalfScrapSequence s) noexcept {
  return s == HalfScrapSequence::StarkPump ? "stark_pump" : "pump_stark";
}

StateVector pump_lifting_numeric(const PulseShape& pump_shape, double t0_delta0, double tol) {
  const SystemParams params = system_params(pump_shape, t0_delta0);
  const double end = pump_shape.tau_end;
  const SU2Operator u = propagate(params, pump_shape, pump_shape.tau_start, end, tol);
  const Mat2 a = rotation(mixing_angle(rabi_at(pump_shape, end), t0_delta0)).adjoint() *
                 u.matrix();
  return {a.a, a.c};
}

HalfScrapResult half_scrap(HalfScrapSequence sequence, const PulseShape& pump_shape,
                           double t0_omega0, double t0_delta0) {
  PulseShape shape = pump_shape;
  shape.omega0 = t0_omega0;
  validate(shape);
  const SystemParams params = system_params(shape, t0_delta0);

  HalfScrapResult res;
  res.sequence = sequence;
  StateVector amps;
  switch (shape.kind) {
    case ShapeKind::PowerRise: {
      const LiftingResult r = universal_lifting(shape.n, t0_delta0, t0_omega0);
      amps = lifting_amplitudes(r, dynamical_phase(params, shape, shape.tau_start, shape.tau_end));
      res.model = r.model;
      break;
    }
    case ShapeKind::Exponential: {
      require(shape.sign > 0, ErrorCode::InvalidArgument,
              "half_scrap: the exponential pump must be rising");
      const double s_i = t0_omega0 * std::exp(shape.tau_start);
      const double s = t0_omega0 * std::exp(shape.tau_end);
      const LiftingResult r = exponential_lifting(t0_delta0, 0.5 * (s - s_i), s_i);
      amps = lifting_amplitudes(r, 0.5 * s);
      res.model = r.model;
      break;
    }
    case ShapeKind::Gaussian:
      amps = pump_lifting_numeric(shape, t0_delta0);
      res.model = LiftingModel::Numeric;
      res.numeric = true;
      break;
    default:
      fail(ErrorCode::InvalidArgument,
           fmt::format("half_scrap: pump must rise as a power law, exponential or Gaussian, got {}",
                       shape_kind_name(shape.kind)));
  }

  if (sequence == HalfScrapSequence::StarkPump) {
    // Lower dressed state only, then creation along Omega: the transposed lifting.
    res.amplitudes = {amps.b_minus, -std::conj(amps.b_plus)};
    res.robust_phase = true;
  } else {
    // Both dressed states, then creation along Delta maps them onto |-+>.
    res.amplitudes = amps;
    res.robust_phase = false;
  }
  res.p_plus_final = std::norm(res.amplitudes.b_plus);
  res.relative_phase =
      wrap_angle(std::arg(res.amplitudes.b_plus) - std::arg(res.amplitudes.b_minus));
  return res;
}

}  // namespace qlift
