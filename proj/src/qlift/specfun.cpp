#include "qlift/specfun.hpp"

#include <fmt/format.h>

#include <array>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qlift/dd.hpp"
#include "qlift/error.hpp"

namespace qlift::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// B_2k / (2k (2k - 1)), k = 1..10.
constexpr double kStirling[] = {
    1.0 / 12.0,          -1.0 / 360.0,           1.0 / 1260.0,      -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,      1.0 / 156.0,       -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z, const char* what) {
  if (!finite(z)) fail(ErrorCode::Numeric, fmt::format("{}: non-finite value", what));
}

cplx stirling(cplx w) {
  cplx inv = 1.0 / w;
  cplx inv2 = inv * inv;
  cplx acc = 0.0;
  for (int k = 9; k >= 0; --k) acc = acc * inv2 + kStirling[k];
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + acc * inv;
}

struct Running {
  cplx sum = 0.0;
  double last = 0.0;
};

// Sum a divergent asymptotic series with ratio(s) = t_{s+1}/t_s, truncated at
// its smallest term. Returns the partial sum and the magnitude of that term.
template <typename Ratio>
Running optimal_truncation(Ratio ratio, int s_max) {
  cplx term = 1.0;
  cplx sum = 0.0;
  cplx best_sum = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < s_max; ++s) {
    double mag = std::abs(term);
    if (mag < best) {
      best = mag;
      best_sum = sum;
    } else if (mag > 1e8 * best) {
      break;
    }
    sum += term;
    if (mag <= 1e-18 * std::abs(sum)) return {sum, mag};
    if (mag == 0.0) return {sum, 0.0};
    term *= ratio(s);
  }
  return {best_sum, best};
}

}  // namespace

cplx log_gamma(cplx z) {
  require_finite(z, "log_gamma argument");
  if (is_nonpositive_integer(z)) {
    fail(ErrorCode::Pole, fmt::format("log_gamma: pole at z = {}", z.real()));
  }
  int shift = 0;
  if (std::abs(z.imag()) < 10.0) {
    shift = std::max(0, static_cast<int>(std::ceil(10.0 - z.real())));
  } else {
    shift = std::max(0, static_cast<int>(std::ceil(-z.real())));
  }
  cplx correction = 0.0;
  for (int k = 0; k < shift; ++k) correction += std::log(z + static_cast<double>(k));
  return stirling(z + static_cast<double>(shift)) - correction;
}

double arg_gamma(cplx z) {
  double r = std::remainder(log_gamma(z).imag(), 2.0 * kPi);
  return r <= -kPi ? kPi : r;
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

double erf(double x) { return std::erf(x); }

Estimate kummer_m_series(cplx a, cplx b, cplx z) {
  const double zabs = std::abs(z);
  const int k_max = 20000;

  {
    cplx term = 1.0;
    cplx sum = 1.0;
    double max_term = 1.0;
    int k = 0;
    for (; k < k_max; ++k) {
      term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) * z /
              static_cast<double>(k + 1);
      sum += term;
      double mag = std::abs(term);
      max_term = std::max(max_term, mag);
      if (mag == 0.0) break;
      if (k > 2.0 * zabs && mag <= 1e-18 * std::abs(sum)) break;
    }
    if (k == k_max) return {sum, std::numeric_limits<double>::infinity()};
    double cond = max_term / std::abs(sum);
    if (cond <= 1e3) return {sum, 4e-16 * cond * std::sqrt(k + 1.0)};
  }

  // Compensated re-summation in double-double.
  dd::Complex term(cplx{1.0, 0.0});
  dd::Complex sum(cplx{1.0, 0.0});
  const dd::Complex zz(z);
  double max_term = 1.0;
  int k = 0;
  for (; k < k_max; ++k) {
    dd::Complex num = dd::shifted(a, k) * zz;
    dd::Complex den = dd::shifted(b, k);
    term = term * num / den / static_cast<double>(k + 1);
    sum = sum + term;
    double mag = term.abs_approx();
    max_term = std::max(max_term, mag);
    if (mag == 0.0) break;
    if (k > 2.0 * zabs && mag <= 1e-18 * sum.abs_approx()) break;
  }
  cplx value = sum.value();
  if (k == k_max) return {value, std::numeric_limits<double>::infinity()};
  double cond = max_term / std::abs(value);
  return {value, std::max(2.2e-16, 1e-31 * cond * (k + 1.0))};
}

Estimate kummer_m_asymptotic(cplx a, cplx b, cplx z) {
  if (z == cplx{0.0, 0.0}) return {1.0, std::numeric_limits<double>::infinity()};
  const double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
  const cplx logz = std::log(z);
  const cplx lgb = log_gamma(b);
  const int s_max = 4 * static_cast<int>(std::abs(z)) + 100;

  cplx pre1 = 0.0;
  Running s1;
  if (!is_nonpositive_integer(b - a)) {
    pre1 = std::exp(lgb - log_gamma(b - a) + sgn * kI * kPi * a - a * logz);
    s1 = optimal_truncation(
        [&](int s) {
          double sd = s;
          return (a + sd) * (a - b + 1.0 + sd) / ((sd + 1.0) * (-z));
        },
        s_max);
  }
  cplx pre2 = 0.0;
  Running s2;
  if (!is_nonpositive_integer(a)) {
    pre2 = std::exp(lgb - log_gamma(a) + z + (a - b) * logz);
    s2 = optimal_truncation(
        [&](int s) {
          double sd = s;
          return (b - a + sd) * (1.0 - a + sd) / ((sd + 1.0) * z);
        },
        s_max);
  }
  cplx value = pre1 * s1.sum + pre2 * s2.sum;
  double scale = std::abs(pre1 * s1.sum) + std::abs(pre2 * s2.sum);
  double err = std::abs(pre1) * s1.last + std::abs(pre2) * s2.last + 1e-16 * scale;
  return {value, err / std::abs(value)};
}

double kummer_crossover_radius(cplx a, cplx b) {
  return kKummerAsymptoticRadius + kKummerParamScale * (std::abs(a) + std::abs(b - a));
}

cplx kummer_m(cplx a, cplx b, cplx z) {
  require_finite(a, "kummer_m a");
  require_finite(b, "kummer_m b");
  require_finite(z, "kummer_m z");
  if (is_nonpositive_integer(b)) {
    fail(ErrorCode::Pole, fmt::format("kummer_m: b = {} is a non-positive integer", b.real()));
  }
  if (z == cplx{0.0, 0.0}) return 1.0;
  const bool polynomial = is_nonpositive_integer(a);
  Estimate best{0.0, std::numeric_limits<double>::infinity()};
  if (!polynomial && std::abs(z) >= kummer_crossover_radius(a, b)) {
    best = kummer_m_asymptotic(a, b, z);
    if (best.rel_error <= kAcceptedRelError) return best.value;
  }
  Estimate series = kummer_m_series(a, b, z);
  if (series.rel_error < best.rel_error) best = series;
  if (!polynomial && best.rel_error > kAcceptedRelError) {
    Estimate asym = kummer_m_asymptotic(a, b, z);
    if (asym.rel_error < best.rel_error) best = asym;
  }
  if (best.rel_error <= kAcceptedRelError && finite(best.value)) return best.value;
  fail(ErrorCode::OutOfRange,
       fmt::format("kummer_m: no method reaches the accuracy target at a = ({}, {}), "
                   "b = ({}, {}), z = ({}, {})",
                   a.real(), a.imag(), b.real(), b.imag(), z.real(), z.imag()));
}

Estimate pcf_d_series(cplx nu, cplx z) {
  const cplx x = 0.5 * z * z;
  const double sqrt_pi = std::sqrt(kPi);
  Estimate m1{0.0, 0.0};
  Estimate m2{0.0, 0.0};
  cplx c1 = sqrt_pi * rgamma(0.5 * (1.0 - nu));
  cplx c2 = std::sqrt(2.0 * kPi) * z * rgamma(-0.5 * nu);
  if (c1 != cplx{0.0, 0.0}) m1 = kummer_m_series(-0.5 * nu, 0.5, x);
  if (c2 != cplx{0.0, 0.0}) m2 = kummer_m_series(0.5 * (1.0 - nu), 1.5, x);
  cplx t1 = c1 * m1.value;
  cplx t2 = c2 * m2.value;
  cplx diff = t1 - t2;
  cplx pre = std::exp(0.5 * nu * std::log(2.0) - 0.25 * z * z);
  double err = m1.rel_error * std::abs(t1) + m2.rel_error * std::abs(t2) +
               2.2e-16 * (std::abs(t1) + std::abs(t2));
  return {pre * diff, err / std::abs(diff) + 4e-16};
}

Estimate pcf_d_asymptotic(cplx nu, cplx z) {
  if (z == cplx{0.0, 0.0}) return {0.0, std::numeric_limits<double>::infinity()};
  const cplx logz = std::log(z);
  const cplx z2 = z * z;
  const int s_max = static_cast<int>(std::norm(z)) + 100;

  cplx pre1 = std::exp(-0.25 * z2 + nu * logz);
  Running s1 = optimal_truncation(
      [&](int s) {
        double s2 = 2.0 * s;
        return -(-nu + s2) * (-nu + s2 + 1.0) / ((s + 1.0) * 2.0 * z2);
      },
      s_max);

  cplx pre2 = 0.0;
  Running s2;
  const double ph = std::arg(z);
  if (std::abs(ph) > 0.5 * kPi && !is_nonpositive_integer(-nu)) {
    const double sgn = ph > 0.0 ? 1.0 : -1.0;
    pre2 = sgn * kI *
           std::exp(0.5 * std::log(2.0 * kPi) - log_gamma(-nu) + sgn * kI * kPi * (nu + 0.5) +
                    0.25 * z2 - (nu + 1.0) * logz);
    s2 = optimal_truncation(
        [&](int s) {
          double s2d = 2.0 * s;
          return (1.0 + nu + s2d) * (2.0 + nu + s2d) / ((s + 1.0) * 2.0 * z2);
        },
        s_max);
  }
  cplx value = pre1 * s1.sum + pre2 * s2.sum;
  double scale = std::abs(pre1 * s1.sum) + std::abs(pre2 * s2.sum);
  double err = std::abs(pre1) * s1.last + std::abs(pre2) * s2.last + 1e-16 * scale;
  return {value, err / std::abs(value)};
}

double pcf_crossover_radius(cplx nu) { return kPcfAsymptoticRadius + kPcfOrderScale * std::abs(nu); }

Estimate pcf_d_continuation(cplx nu, cplx z) {
  const double radius = pcf_crossover_radius(nu);
  if (std::abs(z) >= radius || z == cplx{0.0, 0.0}) return pcf_d_asymptotic(nu, z);
  const cplx z_far = z * (radius / std::abs(z));
  Estimate d0 = pcf_d_asymptotic(nu, z_far);
  Estimate d1 = pcf_d_asymptotic(nu + 1.0, z_far);
  // D'_nu = (z/2) D_nu - D_{nu+1}
  const cplx w0 = d0.value;
  const cplx w1 = 0.5 * z_far * d0.value - d1.value;
  const cplx h = z - z_far;

  using State = std::array<double, 4>;
  namespace ode = boost::numeric::odeint;
  auto rhs = [&](const State& x, State& dxdt, double t) {
    const cplx zt = z_far + t * h;
    const cplx w{x[0], x[1]};
    const cplx wp{x[2], x[3]};
    const cplx dw = wp * h;
    const cplx dwp = (0.25 * zt * zt - nu - 0.5) * w * h;
    dxdt = {dw.real(), dw.imag(), dwp.real(), dwp.imag()};
  };
  State x{w0.real(), w0.imag(), w1.real(), w1.imag()};
  auto stepper = ode::make_controlled(0.0, 1e-14, ode::runge_kutta_fehlberg78<State>());
  ode::integrate_adaptive(stepper, rhs, x, 0.0, 1.0, 1e-3);
  // Start-up error rides on the companion solution, which grows relative to
  // D_nu like exp(z^2/2) z^(-2 nu - 1) along the path.
  const double growth = 0.5 * (z * z - z_far * z_far).real() -
                        (2.0 * nu.real() + 1.0) * std::log(std::abs(z) / radius);
  const double err = (std::max(d0.rel_error, d1.rel_error) + 1e-12) * std::exp(std::max(0.0, growth));
  return {cplx{x[0], x[1]}, err};
}

Estimate pcf_d_outward(cplx nu, cplx z) {
  // D_nu(0) and D'_nu(0) in closed form, then Weber's equation along the ray.
  const double sqpi = std::sqrt(kPi);
  const cplx w0 = std::exp(0.5 * nu * std::log(2.0)) * sqpi * rgamma(0.5 * (1.0 - nu));
  const cplx w1 = -std::exp(0.5 * (nu + 1.0) * std::log(2.0)) * sqpi * rgamma(-0.5 * nu);
  using State = std::array<double, 4>;
  namespace ode = boost::numeric::odeint;
  auto rhs = [&](const State& x, State& dxdt, double t) {
    const cplx zt = t * z;
    const cplx w{x[0], x[1]};
    const cplx wp{x[2], x[3]};
    const cplx dw = wp * z;
    const cplx dwp = (0.25 * zt * zt - nu - 0.5) * w * z;
    dxdt = {dw.real(), dw.imag(), dwp.real(), dwp.imag()};
  };
  State x{w0.real(), w0.imag(), w1.real(), w1.imag()};
  auto stepper = ode::make_controlled(1e-300, 1e-14, ode::runge_kutta_fehlberg78<State>());
  ode::integrate_adaptive(stepper, rhs, x, 0.0, 1.0, 1e-3);
  const cplx value{x[0], x[1]};
  // Stable only where D_nu is the dominant solution along the ray.
  const double ph = std::abs(std::arg(z));
  const bool dominant = ph > 0.25 * kPi && ph < 0.75 * kPi;
  const double scale = std::max({std::abs(w0), std::abs(w1), 1e-300});
  const double err = dominant ? 1e-12 * std::max(1.0, scale / std::abs(value)) * (1.0 + std::norm(z))
                              : std::numeric_limits<double>::infinity();
  return {value, err};
}

cplx parabolic_cylinder_d(cplx nu, cplx z) {
  require_finite(nu, "parabolic_cylinder_d order");
  require_finite(z, "parabolic_cylinder_d argument");
  if (z == cplx{0.0, 0.0}) {
    return std::exp(0.5 * nu * std::log(2.0)) * std::sqrt(kPi) * rgamma(0.5 * (1.0 - nu));
  }
  Estimate best{0.0, std::numeric_limits<double>::infinity()};
  if (std::abs(z) >= pcf_crossover_radius(nu)) {
    best = pcf_d_asymptotic(nu, z);
    if (best.rel_error <= kAcceptedRelError) return best.value;
  }
  Estimate series = pcf_d_series(nu, z);
  if (series.rel_error < best.rel_error) best = series;
  if (best.rel_error > kAcceptedRelError) {
    Estimate asym = pcf_d_asymptotic(nu, z);
    if (asym.rel_error < best.rel_error) best = asym;
  }
  // In the sector where D_nu decays outward, integrate inward from the
  // asymptotic radius; the continuation is stable in that direction.
  if (best.rel_error > kAcceptedRelError && std::abs(std::arg(z)) < 0.25 * kPi &&
      std::abs(nu) <= kPcfContinuationMaxOrder) {
    Estimate cont = pcf_d_continuation(nu, z);
    if (cont.rel_error < best.rel_error) best = cont;
  }
  if (best.rel_error > kAcceptedRelError && std::abs(nu) <= kPcfContinuationMaxOrder) {
    Estimate out = pcf_d_outward(nu, z);
    if (out.rel_error < best.rel_error) best = out;
  }
  if (best.rel_error <= kAcceptedRelError && finite(best.value)) return best.value;
  fail(ErrorCode::OutOfRange,
       fmt::format("parabolic_cylinder_d: no method reaches the accuracy target at "
                   "nu = ({}, {}), z = ({}, {})",
                   nu.real(), nu.imag(), z.real(), z.imag()));
}

}  // namespace qlift::specfun
