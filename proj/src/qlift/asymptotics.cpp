#include "qlift/asymptotics.hpp"

#include <fmt/format.h>

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "qlift/error.hpp"
#include "qlift/specfun.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// Continuous branch of arg Gamma on the lines Re z = 1/2 and Re z = 1.
double arg_gamma_continuous(cplx z) { return specfun::log_gamma(z).imag(); }

void require_finite_nonneg(double v, const char* name) {
  require(std::isfinite(v) && v >= 0.0, ErrorCode::InvalidArgument,
          fmt::format("{} must be finite and >= 0, got {}", name, v));
}

// (1 - e^{-x}) without cancellation for small x.
double one_minus_exp(double x) { return -std::expm1(-x); }

// Populations and phases shared by the linear and universal formulas.
LiftingResult omega_lifting(double omega, double chi_minus_factor, double chi_plus_factor) {
  LiftingResult r;
  r.omega = omega;
  const double y = 0.25 * omega * omega;
  r.phi = arg_gamma_continuous({1.0, -y}) - arg_gamma_continuous({0.5, -y}) + 0.25 * kPi;
  r.a = std::sqrt(0.5 * (1.0 + std::exp(-0.5 * kPi * omega * omega)));
  r.b = std::sqrt(0.5 * one_minus_exp(0.5 * kPi * omega * omega));
  const double root = std::sqrt(one_minus_exp(kPi * omega * omega));
  r.p_plus = 0.5 * (1.0 - root * std::cos(r.phi));
  r.p_minus = 1.0 - r.p_plus;
  r.chi0 = y > 0.0 ? arg_gamma_continuous({0.5, -y}) - y * (1.0 - std::log(y)) : 0.0;
  const cplx e = std::polar(r.b, r.phi);
  r.chi_minus = chi_minus_factor * r.chi0 + std::arg(r.a + e);
  r.chi_plus = r.chi0 + chi_plus_factor * std::arg(r.a - e);
  return r;
}

cplx exp_log_gamma_ratio(cplx num, cplx den) {
  return std::exp(specfun::log_gamma(num) - specfun::log_gamma(den));
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Prefactor shared by K_n and L_n.
double small_detuning_prefactor(int n, double w) {
  const double m = n + 1.0;
  return std::pow(w, -1.0 / m) * std::sqrt(kPi) / std::pow(2.0 * m, n / m);
}

void check_power_order(int n) {
  require(n >= 1 && n <= 12, ErrorCode::InvalidArgument,
          fmt::format("power-law order n must be in [1, 12], got {}", n));
}

}  // namespace

const char* lifting_model_name(LiftingModel model) noexcept {
  switch (model) {
    case LiftingModel::LinearExact: return "linear_exact";
    case LiftingModel::ExponentialExact: return "exponential_exact";
    case LiftingModel::UniversalN: return "universal_n";
    case LiftingModel::LargeDetuning: return "large_detuning";
    case LiftingModel::SmallDetuning: return "small_detuning";
    case LiftingModel::Numeric: return "numeric";
  }
  return "unknown";
}

StateVector lifting_amplitudes(const LiftingResult& r, double eta) {
  return {std::polar(std::sqrt(r.p_minus), r.common_phase + r.chi_minus + eta),
          std::polar(std::sqrt(r.p_plus), r.common_phase - r.chi_plus - eta)};
}

LiftingResult linear_lifting(double omega) {
  require_finite_nonneg(omega, "omega");
  LiftingResult r = omega_lifting(omega, 1.0, 1.0);
  r.model = LiftingModel::LinearExact;
  return r;
}

double universal_omega(int n, double t0_delta0, double t0_omega0) {
  check_power_order(n);
  require_finite_nonneg(t0_delta0, "T0*Delta0");
  require(std::isfinite(t0_omega0) && t0_omega0 > 0.0, ErrorCode::InvalidArgument,
          "T0*Omega0 must be positive");
  // The Gamma ratio is 1 at n = 1.
  if (n == 1) return t0_delta0 / std::sqrt(2.0 * t0_omega0);
  return std::sqrt(2.0 / kPi) * small_detuning_k(n, t0_omega0) * t0_delta0;
}

LiftingResult lifting_power_law(int n, double t0_delta0, double t0_omega0) {
  const double omega_n = universal_omega(n, t0_delta0, t0_omega0);
  const double m = n + 1.0;
  const double ratio = std::sin(0.5 * kPi * (2 * n + 1) / m) / std::sin(0.5 * kPi * (n + 2) / m);
  LiftingResult r = omega_lifting(omega_n, n == 1 ? 1.0 : ratio, n);
  r.model = n == 1 ? LiftingModel::LinearExact : LiftingModel::UniversalN;
  r.n = n;
  return r;
}

LiftingResult universal_lifting(int n, double t0_delta0, double t0_omega0) {
  check_power_order(n);
  const double scale = 2.0 * std::hypot(t0_delta0, t0_omega0);
  require(scale >= 10.0 * n, ErrorCode::Adiabaticity,
          fmt::format("2 sqrt(d^2 + W^2) = {:.4g} is below 10 n = {}; the lifting never "
                      "becomes adiabatic",
                      scale, 10 * n));
  return lifting_power_law(n, t0_delta0, t0_omega0);
}

double lz_dynamical_phase(double omega, double t_big) {
  const double r = std::hypot(omega, t_big);
  const double log_part = omega > 0.0 ? 0.5 * omega * omega * std::asinh(t_big / omega) : 0.0;
  return 0.5 * t_big * r + log_part;
}

SU2Operator half_lz_exact(double omega, double t_big) {
  require_finite_nonneg(omega, "omega");
  require_finite_nonneg(t_big, "T");
  if (omega == 0.0) return {std::polar(1.0, 0.5 * t_big * t_big), 0.0};
  require(omega >= 1e-3, ErrorCode::OutOfRange,
          fmt::format("half_lz_exact: omega = {} loses precision below 1e-3", omega));
  const double w2 = omega * omega;
  const cplx nu(0.0, 0.5 * w2);
  const cplx z1 = t_big * std::sqrt(2.0) * std::polar(1.0, -0.25 * kPi);
  const cplx d1 = specfun::parabolic_cylinder_d(nu, z1);
  const cplx d2 = specfun::parabolic_cylinder_d(nu, -z1);
  const cplx pow2 = std::polar(1.0, 0.25 * w2 * std::log(2.0));  // 2^{i w^2/4}
  const cplx c11 = 0.5 * pow2 * exp_log_gamma_ratio({1.0, -0.5 * w2}, {1.0, -0.25 * w2});
  const cplx c12 = pow2 * std::polar(1.0, 0.25 * kPi) *
                   exp_log_gamma_ratio({1.0, -0.5 * w2}, {0.5, -0.25 * w2}) / omega;
  return {c11 * (d1 + d2), c12 * (d1 - d2)};
}

SU2Operator half_lz_adiabatic(double omega, double t_big) {
  const SU2Operator u = half_lz_exact(omega, t_big);
  const Mat2 s = lz_transform();
  const Mat2 m = rotation(mixing_angle(t_big, omega)).adjoint() * s * u.matrix() * s.adjoint() *
                 rotation(mixing_angle(0.0, omega));
  return SU2Operator::from_matrix(m);
}

SU2Operator half_lz_adiabatic_asymptotic(double omega, double t_big) {
  require_finite_nonneg(omega, "omega");
  require_finite_nonneg(t_big, "T");
  const LiftingResult r = linear_lifting(omega);
  const double y = 0.25 * omega * omega;
  const double base = lz_dynamical_phase(omega, t_big) - (y > 0.0 ? y * (1.0 - std::log(y)) : 0.0);
  const double eta1 = base + arg_gamma_continuous({0.5, -y});
  const double eta2 = base + 0.25 * kPi + arg_gamma_continuous({1.0, -y});
  const cplx e1 = std::polar(r.a, eta1), e2 = std::polar(r.b, eta2);
  return {(e1 + e2) / std::sqrt(2.0), (e2 - e1) / std::sqrt(2.0)};
}

double exponential_common_phase(double varpi, double s_i) {
  require_finite_nonneg(varpi, "varpi");
  require(std::isfinite(s_i) && s_i > 0.0, ErrorCode::InvalidArgument,
          "initial area s_i must be positive");
  return arg_gamma_continuous({0.5, 0.5 * varpi}) + varpi * std::log(2.0) -
         0.5 * varpi * std::log(s_i);
}

LiftingResult exponential_lifting(double varpi, double zeta, double s_i) {
  LiftingResult r;
  r.model = LiftingModel::ExponentialExact;
  r.omega = varpi;
  r.common_phase = exponential_common_phase(varpi, s_i);
  r.p_plus = 1.0 / (1.0 + std::exp(kPi * varpi));
  r.p_minus = 1.0 - r.p_plus;
  r.regime_warning = !(zeta >= 5.0 * varpi);
  return r;
}

SU2Operator exponential_exact(double varpi, double s, double s_i) {
  require_finite_nonneg(varpi, "varpi");
  require(std::isfinite(s) && std::isfinite(s_i) && s_i > 0.0 && s >= s_i,
          ErrorCode::InvalidArgument,
          fmt::format("exponential_exact: need 0 < s_i <= s, got s_i = {}, s = {}", s_i, s));
  if (varpi == 0.0) return {std::cos(0.5 * s), -std::conj(cplx(0.0, -std::sin(0.5 * s)))};
  const cplx a(0.0, 0.5 * varpi);
  const cplx z(0.0, s);
  const cplx phase = std::polar(1.0, 0.5 * varpi * std::log(s / s_i) - 0.5 * s);
  const cplx m0 = specfun::kummer_m(a, 2.0 * a, z);
  const cplx m1 = specfun::kummer_m(a + 1.0, 2.0 * a + 1.0, z);
  const cplx b_minus = phase * m0;
  // B+ = 2i dB-/ds + (varpi/s) B- collapses to the contiguous function below.
  const cplx b_plus = phase * (m0 - m1);
  return {b_minus, -std::conj(b_plus)};
}

SU2Operator exponential_asymptotic(double varpi, double s, double s_i) {
  const double xi = exponential_common_phase(varpi, s_i);
  const double norm = std::sqrt(2.0 * (1.0 + std::exp(-kPi * varpi)));
  const cplx up = std::polar(1.0, 0.5 * s);
  const cplx down = std::exp(-0.5 * kPi * varpi) * std::polar(1.0, -0.5 * s);
  const cplx e = std::polar(1.0, xi);
  const cplx u11 = e * (up + down) / norm;
  const cplx u21 = e * (down - up) / norm;
  return {u11, -std::conj(u21)};
}

double b_n_constant(int n) {
  check_power_order(n);
  return std::sqrt(kPi) * std::tgamma(0.5 / n) / (4.0 * n * std::tgamma((3.0 * n + 1.0) / (2.0 * n)));
}

cplx large_detuning_s(int n, double alpha_n) {
  return 0.5 * std::pow(kI / alpha_n, n) * factorial(n);
}

cplx large_detuning_i(int n, double alpha_n, double prefactor) {
  const double ab = alpha_n * b_n_constant(n);
  auto f_k = [&](int k) {
    const double t = kPi / n * (k + 0.5);
    return (k % 2 == 0 ? 1.0 : -1.0) * std::exp(-ab * std::sin(t)) * std::polar(1.0, ab * std::cos(t));
  };
  cplx sum = 0.0;
  if (n % 2 == 0) {
    for (int k = 0; k <= n / 2 - 1; ++k) sum += f_k(k);
  } else {
    sum = 0.5 * (((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * std::exp(-ab);
    for (int k = 0; k <= (n - 3) / 2; ++k) sum += f_k(k);
  }
  return prefactor * sum;
}

cplx large_detuning_j(int n, double alpha_n) {
  check_power_order(n);
  require(std::isfinite(alpha_n) && alpha_n > 0.0, ErrorCode::InvalidArgument,
          "alpha_n must be positive");
  // Integrate along the ray x = r e^{i theta}: the phase then decays like
  // exp(-alpha r^{n+1} sin((n+1) theta)/(n+1)) and no singularity is crossed
  // (the nearest poles sit at arg x = pi/(2n)).
  const double theta = kPi / (4.0 * n);
  const cplx dir = std::polar(1.0, theta);
  using State = std::array<double, 4>;  // omega(x), partial J
  auto rhs = [&](const State& y, State& dy, double r) {
    const cplx x = r * dir;
    const cplx x2n = std::pow(x, 2 * n);
    const cplx dw = dir * std::sqrt(1.0 + x2n);
    const cplx f = 0.5 * static_cast<double>(n) * std::pow(x, n - 1) / (1.0 + x2n);
    const cplx dj = dir * f * std::exp(kI * alpha_n * cplx(y[0], y[1]));
    dy = {dw.real(), dw.imag(), dj.real(), dj.imag()};
  };
  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_fehlberg78<State>());
  State y{};
  double r = 0.0, dt = 1e-3;
  for (long steps = 0; alpha_n * y[1] < 40.0 || r < 1.0; ++steps) {
    require(steps < 2'000'000, ErrorCode::Integration, "large_detuning_j: step budget exhausted");
    stepper.try_step(rhs, y, r, dt);
  }
  return {y[2], y[3]};
}

PerturbationTerms large_detuning_transfer(int n, double alpha_n) {
  check_power_order(n);
  require(std::isfinite(alpha_n) && alpha_n >= kLargeDetuningAlphaFloor, ErrorCode::Validity,
          fmt::format("alpha_n = {} is below the large-detuning floor {}", alpha_n,
                      kLargeDetuningAlphaFloor));
  PerturbationTerms t;
  t.n = n;
  t.alpha_n = alpha_n;
  t.b_n = b_n_constant(n);
  t.s_n = large_detuning_s(n, alpha_n);
  t.i_n = large_detuning_i(n, alpha_n, kPi / 3.0);
  t.i_n_corrected = large_detuning_i(n, alpha_n, 1.0);
  t.j_n = t.s_n + t.i_n;
  t.j_exact = large_detuning_j(n, alpha_n);
  return t;
}

double small_detuning_k(int n, double t0_omega0) {
  check_power_order(n);
  const double m = n + 1.0;
  return small_detuning_prefactor(n, t0_omega0) * std::tgamma((n + 2) / (2 * m)) /
         std::tgamma((2 * n + 1) / (2 * m));
}

double small_detuning_l(int n, double t0_omega0) {
  check_power_order(n);
  const double m = n + 1.0;
  return small_detuning_prefactor(n, t0_omega0) * std::tgamma(1 / (2 * m)) /
         std::tgamma(n / (2 * m));
}

double gaussian_G(double x) {
  require_finite_nonneg(x, "x");
  if (x == 0.0) return 0.0;
  const double c = 0.5 * std::sqrt(kPi) * x;
  // |integrand| <= c erfc(-tau); cut where that bound drops below 1e-13.
  double cut = 1.0;
  while (c * std::erfc(cut) > 1e-13) cut += 0.25;
  auto f = [c](double tau) { return std::sin(c * std::erfc(-tau)); };
  double err = 0.0;
  const double g = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -cut, 0.0, 15,
                                                                                 1e-13, &err);
  require(err <= 1e-9, ErrorCode::Numeric, fmt::format("gaussian_G({}): error {:.2e}", x, err));
  return g;
}

SmallDetuningResult small_detuning_transfer(ShapeKind kind, int n, double t0_delta0,
                                            double t0_omega0) {
  require_finite_nonneg(t0_delta0, "T0*Delta0");
  require(std::isfinite(t0_omega0) && t0_omega0 > 0.0, ErrorCode::InvalidArgument,
          "T0*Omega0 must be positive");
  SmallDetuningResult r;
  switch (kind) {
    case ShapeKind::PowerRise: {
      const double k = small_detuning_k(n, t0_omega0), l = small_detuning_l(n, t0_omega0);
      r.coefficient = k;
      const double h = 0.5 * t0_delta0;
      r.amplitudes = StateVector{(1.0 + h * cplx(k, l)) / std::sqrt(2.0),
                                 (1.0 + h * cplx(-k, l)) / std::sqrt(2.0)};
      break;
    }
    case ShapeKind::Exponential: r.coefficient = 0.5 * kPi; break;
    case ShapeKind::Gaussian: r.coefficient = gaussian_G(t0_omega0); break;
    default:
      fail(ErrorCode::InvalidArgument,
           fmt::format("small_detuning_transfer: no first-order result for {}", shape_kind_name(kind)));
  }
  r.p_plus = 0.5 * (1.0 - r.coefficient * t0_delta0);
  r.regime_warning = std::abs(r.coefficient * t0_delta0) > 0.5;
  return r;
}

}  // namespace qlift
