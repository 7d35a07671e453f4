#pragma once

#include <complex>
#include <vector>

#include "qlift/pulses.hpp"

namespace qlift {

using cplx = std::complex<double>;

struct Mat2 {
  cplx a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
  Mat2 transpose() const { return {a, c, b, d}; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
double max_abs_diff(const Mat2& x, const Mat2& y);

/// Unimodular unitary [[u11, u12], [-conj(u12), conj(u11)]].
struct SU2Operator {
  cplx u11{1.0, 0.0};
  cplx u12{0.0, 0.0};

  Mat2 matrix() const { return {u11, u12, -std::conj(u12), std::conj(u11)}; }
  /// Repacks the first row; the second row is assumed to follow.
  static SU2Operator from_matrix(const Mat2& m) { return {m.a, m.b}; }
  /// | |u11|^2 + |u12|^2 - 1 |
  double unitarity_defect() const;
};

SU2Operator operator*(const SU2Operator& x, const SU2Operator& y);

struct StateVector {
  cplx b_minus{1.0, 0.0};
  cplx b_plus{0.0, 0.0};
};

StateVector apply(const SU2Operator& u, const StateVector& v);

inline constexpr double kDefaultTol = 1e-11;

struct PropagateOptions {
  double tol = kDefaultTol;
  /// Factor out the bare detuning phases before integrating.
  bool interaction_picture = false;
};

/// Full propagator from tau_a to tau_b of i dU/dtau = H U with
/// H = (1/2)[[-d, w(tau)], [w(tau), d]], w = shape envelope, d = T0*Delta0.
/// Integrates both columns with adaptive RKF 7(8), restarting at the envelope's
/// breakpoints. Throws IntegrationError on step-size underflow.
SU2Operator propagate(const SystemParams& params, const PulseShape& shape, double tau_a,
                      double tau_b, double tol = kDefaultTol);
SU2Operator propagate(const SystemParams& params, const PulseShape& shape, double tau_a,
                      double tau_b, const PropagateOptions& options);

/// Same propagation written directly in the adiabatic basis, with the coupling
/// gamma(tau). Returns U_A(tau_b, tau_a).
SU2Operator propagate_adiabatic(const SystemParams& params, const PulseShape& shape,
                                double tau_a, double tau_b, double tol = kDefaultTol);

struct TrajectoryPoint {
  double tau;
  StateVector bare;
  cplx a_minus, a_plus;
  /// arg A_-, arg A_+ continued through every accepted step.
  double phase_minus, phase_plus;
};

/// Evolution of B_-(tau_a) = 1 sampled at the increasing times `taus`
/// (all >= tau_a).
std::vector<TrajectoryPoint> trajectory(const SystemParams& params, const PulseShape& shape,
                                        double tau_a, const std::vector<double>& taus,
                                        double tol = kDefaultTol);

/// tan 2 theta = omega / delta, 0 <= theta < pi/2. Throws UndefinedAngle at
/// the conical point omega = delta = 0.
double mixing_angle(double omega, double delta);

/// R(theta) = [[cos, sin], [-sin, cos]]
Mat2 rotation(double theta);

/// U_A = R^dagger(theta(tau_b)) U R(theta(tau_a)).
SU2Operator to_adiabatic_frame(const SU2Operator& u, const SystemParams& params,
                               const PulseShape& shape, double tau_a, double tau_b);
SU2Operator from_adiabatic_frame(const SU2Operator& ua, const SystemParams& params,
                                 const PulseShape& shape, double tau_a, double tau_b);

/// S = (1/sqrt 2)[[1, 1], [-1, 1]]
Mat2 lz_transform();
/// S^dagger U S.
SU2Operator lz_frame(const SU2Operator& u);

/// gamma = w' d / (d^2 + w^2)
double nonadiabatic_coupling(const SystemParams& params, const PulseShape& shape, double tau);
/// gamma_tilde = |gamma| / (2 sqrt(d^2 + w^2))
double nonadiabatic_coefficient(const SystemParams& params, const PulseShape& shape, double tau);

struct AdiabaticityProfile {
  double tau_m = 0.0;
  double gamma_tilde_max = 0.0;
  bool closed_form = false;
  std::vector<std::pair<double, double>> samples;
};

/// Location and height of the gamma_tilde peak. Closed form for power rises,
/// sampled otherwise; samples are always filled.
AdiabaticityProfile adiabaticity_profile(const SystemParams& params, const PulseShape& shape,
                                         int samples = 2001);

/// First tau >= from (scanning forward) or <= from (backward) where
/// gamma_tilde stays below threshold; used to pick plateau junctions.
double adiabatic_junction(const SystemParams& params, const PulseShape& shape, double from,
                          double to, double threshold);

/// eta = (1/2) int_a^b sqrt(d^2 + w^2) dtau.
double dynamical_phase(const SystemParams& params, const PulseShape& shape, double tau_a,
                       double tau_b);

/// Creation-of-degeneracy operator from the mirrored lifting operator:
/// the transpose of the full matrix.
SU2Operator falling_from_rising(const SU2Operator& u_rise);

/// Mirror image of a falling shape as a rising one (power law about tau_end,
/// smooth kinds about 0), and the matching time map.
PulseShape mirrored(const PulseShape& shape);
double mirror_time(const PulseShape& shape, double tau);

}  // namespace qlift
