#pragma once

#include <string>
#include <vector>

namespace qlift {

enum class ShapeKind { PowerRise, PowerFall, Exponential, Gaussian, Sech, TrigPower, LinearTruncated };

const char* shape_kind_name(ShapeKind kind) noexcept;
ShapeKind parse_shape_kind(const std::string& name);

/// Coupling envelope T0*Omega(tau) on scaled time tau = t/T0.
///
/// PowerRise    omega0 (tau - tau_start)^n          on [tau_start, tau_end]
/// PowerFall    omega0 (tau_end - tau)^n            on [tau_start, tau_end]
/// Exponential  omega0 exp(sign * tau)
/// Gaussian     omega0 exp(-tau^2)
/// Sech         omega0 / cosh(tau)
/// TrigPower    omega0 sin^n(tau - tau_start)       on [tau_start, tau_end], length <= pi
/// LinearTruncated  omega0 min(tau - tau_start, tau_end - tau)   (triangle)
///
/// Truncated kinds vanish outside [tau_start, tau_end]. For the smooth kinds
/// the bounds are only the numerical integration window.
struct PulseShape {
  ShapeKind kind = ShapeKind::PowerRise;
  int n = 1;
  int sign = 1;
  double omega0 = 1.0;
  double tau_start = 0.0;
  double tau_end = 1.0;
};

struct SystemParams {
  double t0_omega0 = 1.0;
  double t0_delta0 = 0.0;
  int n = 1;

  /// omega = T0 Delta0 / sqrt(2 T0 Omega0)
  double omega() const;
  /// alpha_n = T0 Delta0 (Delta0/Omega0)^(1/n)
  double alpha_n() const;
};

bool is_truncated(ShapeKind kind) noexcept;
bool is_power_law(ShapeKind kind) noexcept;

/// Throws InvalidArgument on inconsistent fields.
void validate(const PulseShape& shape);
void validate(const SystemParams& params);

/// Parameters of a shape combined with a detuning.
SystemParams system_params(const PulseShape& shape, double t0_delta0);

/// Time where the smooth envelope T0*Omega drops to `level` on the rising side.
double rising_cutoff(ShapeKind kind, double omega0, double level = 1e-8);

PulseShape power_rise(int n, double omega0, double tau_end, double tau_start = 0.0);
PulseShape power_fall(int n, double omega0, double tau_start, double tau_end = 0.0);
PulseShape exponential(int sign, double omega0, double tau_start, double tau_end);
PulseShape gaussian(double omega0, double tau_start, double tau_end);
PulseShape sech(double omega0, double tau_start, double tau_end);
PulseShape trig_power(int n, double omega0, double tau_start = 0.0);
PulseShape linear_truncated(double omega0, double tau_start, double tau_end);

double rabi_at(const PulseShape& shape, double tau);
double rabi_derivative(const PulseShape& shape, double tau, int order);
double pulse_area(const PulseShape& shape, double tau_a, double tau_b);

/// Points inside (tau_a, tau_b) where the envelope or its first derivative jumps.
std::vector<double> breakpoints(const PulseShape& shape, double tau_a, double tau_b);

}  // namespace qlift
