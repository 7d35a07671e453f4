#include "qlift/pulses.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "qlift/error.hpp"

namespace qlift {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxSmoothOrder = 20;

double factorial_ratio(int n, int k) {
  // n! / (n-k)!
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= n - j;
  return r;
}

double binomial(int n, int m) {
  double r = 1.0;
  for (int j = 1; j <= m; ++j) r = r * (n - m + j) / j;
  return r;
}

bool inside(const PulseShape& s, double tau) { return tau >= s.tau_start && tau <= s.tau_end; }

// d^k/dx^k sin^n(x) through the exponential expansion of sin^n.
double sin_power_derivative(int n, double x, int k) {
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double j = 2.0 * m - n;
    const double sgn = ((n - m) % 2 == 0) ? 1.0 : -1.0;
    acc += binomial(n, m) * sgn * std::pow(i * j, k) * std::exp(i * j * x);
  }
  return (acc / std::pow(2.0 * i, n)).real();
}

double sin_power_integral(int n, double x0, double x1) {
  const std::complex<double> i{0.0, 1.0};
  std::complex<double> acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double j = 2.0 * m - n;
    const double sgn = ((n - m) % 2 == 0) ? 1.0 : -1.0;
    std::complex<double> f = (m * 2 == n) ? std::complex<double>(x1 - x0)
                                          : (std::exp(i * j * x1) - std::exp(i * j * x0)) / (i * j);
    acc += binomial(n, m) * sgn * f;
  }
  return (acc / std::pow(2.0 * i, n)).real();
}

double hermite(int k, double x) {
  double h0 = 1.0;
  if (k == 0) return h0;
  double h1 = 2.0 * x;
  for (int j = 1; j < k; ++j) {
    double h2 = 2.0 * x * h1 - 2.0 * j * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

// d^k sech / dtau^k = sech(tau) * P_k(tanh tau), P_{k+1} = -t P_k + (1 - t^2) P_k'.
double sech_derivative(double tau, int k) {
  std::vector<double> p{1.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (size_t m = 0; m < p.size(); ++m) {
      q[m + 1] -= p[m];
      if (m >= 1) {
        q[m - 1] += m * p[m];
        q[m + 1] -= m * p[m];
      }
    }
    p = std::move(q);
  }
  const double t = std::tanh(tau);
  double acc = 0.0;
  for (size_t m = p.size(); m-- > 0;) acc = acc * t + p[m];
  return acc / std::cosh(tau);
}

double gd(double x) {
  if (x == std::numeric_limits<double>::infinity()) return 0.5 * kPi;
  if (x == -std::numeric_limits<double>::infinity()) return -0.5 * kPi;
  return 2.0 * std::atan(std::tanh(0.5 * x));
}

}  // namespace

const char* shape_kind_name(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::PowerRise: return "power_rise";
    case ShapeKind::PowerFall: return "power_fall";
    case ShapeKind::Exponential: return "exponential";
    case ShapeKind::Gaussian: return "gaussian";
    case ShapeKind::Sech: return "sech";
    case ShapeKind::TrigPower: return "trig_power";
    case ShapeKind::LinearTruncated: return "linear_truncated";
  }
  return "unknown";
}

ShapeKind parse_shape_kind(const std::string& name) {
  for (ShapeKind k : {ShapeKind::PowerRise, ShapeKind::PowerFall, ShapeKind::Exponential,
                      ShapeKind::Gaussian, ShapeKind::Sech, ShapeKind::TrigPower,
                      ShapeKind::LinearTruncated}) {
    if (name == shape_kind_name(k)) return k;
  }
  fail(ErrorCode::InvalidArgument, fmt::format("unknown shape kind '{}'", name));
}

double SystemParams::omega() const { return t0_delta0 / std::sqrt(2.0 * t0_omega0); }

double SystemParams::alpha_n() const {
  return t0_delta0 * std::pow(t0_delta0 / t0_omega0, 1.0 / n);
}

bool is_truncated(ShapeKind kind) noexcept {
  return kind == ShapeKind::PowerRise || kind == ShapeKind::PowerFall ||
         kind == ShapeKind::TrigPower || kind == ShapeKind::LinearTruncated;
}

bool is_power_law(ShapeKind kind) noexcept {
  return kind == ShapeKind::PowerRise || kind == ShapeKind::PowerFall;
}

void validate(const PulseShape& s) {
  require(std::isfinite(s.omega0) && s.omega0 > 0.0, ErrorCode::InvalidArgument,
          fmt::format("shape: t0_omega0 must be positive and finite, got {}", s.omega0));
  require(!std::isnan(s.tau_start) && !std::isnan(s.tau_end) && s.tau_start < s.tau_end,
          ErrorCode::InvalidArgument,
          fmt::format("shape: need tau_start < tau_end, got [{}, {}]", s.tau_start, s.tau_end));
  if (is_truncated(s.kind)) {
    require(std::isfinite(s.tau_start) && std::isfinite(s.tau_end), ErrorCode::InvalidArgument,
            "shape: truncated kinds need finite support");
  }
  if (is_power_law(s.kind) || s.kind == ShapeKind::TrigPower) {
    require(s.n >= 1 && s.n <= 12, ErrorCode::InvalidArgument,
            fmt::format("shape: power n must be in [1, 12], got {}", s.n));
  }
  if (s.kind == ShapeKind::Exponential) {
    require(s.sign == 1 || s.sign == -1, ErrorCode::InvalidArgument,
            "shape: exponential sign must be +1 or -1");
  }
  if (s.kind == ShapeKind::TrigPower) {
    require(s.tau_end - s.tau_start <= kPi * (1.0 + 1e-12), ErrorCode::InvalidArgument,
            "shape: trig_power support is at most pi long");
  }
}

void validate(const SystemParams& p) {
  require(std::isfinite(p.t0_omega0) && p.t0_omega0 > 0.0, ErrorCode::InvalidArgument,
          fmt::format("params: t0_omega0 must be positive, got {}", p.t0_omega0));
  require(std::isfinite(p.t0_delta0) && p.t0_delta0 >= 0.0, ErrorCode::InvalidArgument,
          fmt::format("params: t0_delta0 must be non-negative, got {}", p.t0_delta0));
  require(p.n >= 1, ErrorCode::InvalidArgument, "params: n must be >= 1");
}

SystemParams system_params(const PulseShape& shape, double t0_delta0) {
  SystemParams p{shape.omega0, t0_delta0, std::max(1, shape.n)};
  validate(p);
  return p;
}

double rising_cutoff(ShapeKind kind, double omega0, double level) {
  require(omega0 > level, ErrorCode::InvalidArgument, "rising_cutoff: omega0 below level");
  switch (kind) {
    case ShapeKind::Exponential: return std::log(level / omega0);
    case ShapeKind::Gaussian: return -std::sqrt(std::log(omega0 / level));
    case ShapeKind::Sech: return -std::acosh(omega0 / level);
    default: fail(ErrorCode::InvalidArgument, "rising_cutoff: only for smooth kinds");
  }
}

PulseShape power_rise(int n, double omega0, double tau_end, double tau_start) {
  PulseShape s{ShapeKind::PowerRise, n, 1, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

PulseShape power_fall(int n, double omega0, double tau_start, double tau_end) {
  PulseShape s{ShapeKind::PowerFall, n, 1, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

PulseShape exponential(int sign, double omega0, double tau_start, double tau_end) {
  PulseShape s{ShapeKind::Exponential, 1, sign, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

PulseShape gaussian(double omega0, double tau_start, double tau_end) {
  PulseShape s{ShapeKind::Gaussian, 1, 1, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

PulseShape sech(double omega0, double tau_start, double tau_end) {
  PulseShape s{ShapeKind::Sech, 1, 1, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

PulseShape trig_power(int n, double omega0, double tau_start) {
  PulseShape s{ShapeKind::TrigPower, n, 1, omega0, tau_start, tau_start + kPi};
  validate(s);
  return s;
}

PulseShape linear_truncated(double omega0, double tau_start, double tau_end) {
  PulseShape s{ShapeKind::LinearTruncated, 1, 1, omega0, tau_start, tau_end};
  validate(s);
  return s;
}

double rabi_at(const PulseShape& s, double tau) {
  if (is_truncated(s.kind) && !inside(s, tau)) return 0.0;
  switch (s.kind) {
    case ShapeKind::PowerRise: return s.omega0 * std::pow(tau - s.tau_start, s.n);
    case ShapeKind::PowerFall: return s.omega0 * std::pow(s.tau_end - tau, s.n);
    case ShapeKind::Exponential: return s.omega0 * std::exp(s.sign * tau);
    case ShapeKind::Gaussian: return s.omega0 * std::exp(-tau * tau);
    case ShapeKind::Sech: return s.omega0 / std::cosh(tau);
    case ShapeKind::TrigPower: return s.omega0 * std::pow(std::sin(tau - s.tau_start), s.n);
    case ShapeKind::LinearTruncated:
      return s.omega0 * std::min(tau - s.tau_start, s.tau_end - tau);
  }
  return 0.0;
}

double rabi_derivative(const PulseShape& s, double tau, int order) {
  require(order >= 1, ErrorCode::InvalidArgument, "rabi_derivative: order must be >= 1");
  if (is_power_law(s.kind)) {
    require(order <= s.n + 2, ErrorCode::InvalidArgument,
            fmt::format("rabi_derivative: order {} exceeds n + 2 = {}", order, s.n + 2));
  } else {
    require(order <= kMaxSmoothOrder, ErrorCode::InvalidArgument,
            fmt::format("rabi_derivative: order {} exceeds {}", order, kMaxSmoothOrder));
  }
  if (is_truncated(s.kind) && !inside(s, tau)) return 0.0;
  switch (s.kind) {
    case ShapeKind::PowerRise:
      if (order > s.n) return 0.0;
      return s.omega0 * factorial_ratio(s.n, order) * std::pow(tau - s.tau_start, s.n - order);
    case ShapeKind::PowerFall: {
      if (order > s.n) return 0.0;
      double sgn = (order % 2 == 0) ? 1.0 : -1.0;
      return sgn * s.omega0 * factorial_ratio(s.n, order) *
             std::pow(s.tau_end - tau, s.n - order);
    }
    case ShapeKind::Exponential:
      return std::pow(static_cast<double>(s.sign), order) * s.omega0 * std::exp(s.sign * tau);
    case ShapeKind::Gaussian: {
      double sgn = (order % 2 == 0) ? 1.0 : -1.0;
      return sgn * s.omega0 * hermite(order, tau) * std::exp(-tau * tau);
    }
    case ShapeKind::Sech: return s.omega0 * sech_derivative(tau, order);
    case ShapeKind::TrigPower: return s.omega0 * sin_power_derivative(s.n, tau - s.tau_start, order);
    case ShapeKind::LinearTruncated:
      if (order > 1) return 0.0;
      return tau <= 0.5 * (s.tau_start + s.tau_end) ? s.omega0 : -s.omega0;
  }
  return 0.0;
}

double pulse_area(const PulseShape& s, double tau_a, double tau_b) {
  require(tau_a <= tau_b, ErrorCode::InvalidArgument, "pulse_area: need tau_a <= tau_b");
  if (is_truncated(s.kind)) {
    tau_a = std::max(tau_a, s.tau_start);
    tau_b = std::min(tau_b, s.tau_end);
    if (tau_a >= tau_b) return 0.0;
  }
  switch (s.kind) {
    case ShapeKind::PowerRise:
      return s.omega0 *
             (std::pow(tau_b - s.tau_start, s.n + 1) - std::pow(tau_a - s.tau_start, s.n + 1)) /
             (s.n + 1);
    case ShapeKind::PowerFall:
      return s.omega0 *
             (std::pow(s.tau_end - tau_a, s.n + 1) - std::pow(s.tau_end - tau_b, s.n + 1)) /
             (s.n + 1);
    case ShapeKind::Exponential:
      return s.sign > 0 ? s.omega0 * (std::exp(tau_b) - std::exp(tau_a))
                        : s.omega0 * (std::exp(-tau_a) - std::exp(-tau_b));
    case ShapeKind::Gaussian:
      return s.omega0 * 0.5 * std::sqrt(kPi) * (std::erf(tau_b) - std::erf(tau_a));
    case ShapeKind::Sech: return s.omega0 * (gd(tau_b) - gd(tau_a));
    case ShapeKind::TrigPower:
      return s.omega0 * sin_power_integral(s.n, tau_a - s.tau_start, tau_b - s.tau_start);
    case ShapeKind::LinearTruncated: {
      const double mid = 0.5 * (s.tau_start + s.tau_end);
      auto prim = [&](double t) {
        // Antiderivative of min(t - ts, te - t), continuous at the apex.
        if (t <= mid) return 0.5 * (t - s.tau_start) * (t - s.tau_start);
        const double half = 0.5 * (mid - s.tau_start) * (mid - s.tau_start);
        return 2.0 * half - 0.5 * (s.tau_end - t) * (s.tau_end - t);
      };
      return s.omega0 * (prim(tau_b) - prim(tau_a));
    }
  }
  return 0.0;
}

std::vector<double> breakpoints(const PulseShape& s, double tau_a, double tau_b) {
  std::vector<double> pts;
  auto add = [&](double t) {
    if (t > tau_a && t < tau_b) pts.push_back(t);
  };
  if (is_truncated(s.kind)) {
    add(s.tau_start);
    if (s.kind == ShapeKind::LinearTruncated) add(0.5 * (s.tau_start + s.tau_end));
    add(s.tau_end);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace qlift
