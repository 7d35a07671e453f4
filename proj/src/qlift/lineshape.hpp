#pragma once

#include <utility>

#include "qlift/asymptotics.hpp"
#include "qlift/propagator.hpp"
#include "qlift/pulses.hpp"

namespace qlift {

/// Final bare amplitudes after a full pulse starting in B_- = 1.
struct LineshapePoint {
  double t0_delta0 = 0.0;
  cplx b_minus{1.0, 0.0};
  cplx b_plus{0.0, 0.0};
  double p_transfer = 0.0;
  /// Pulse area T0 int Omega dtau over the support.
  double area = 0.0;
  /// Total dynamical phase eta_d over the support (half-area for the closed
  /// Rosen-Zener form).
  double eta = 0.0;
  LiftingModel model = LiftingModel::LinearExact;
  /// The edge operators came from the propagator instead of a formula.
  bool numeric_edges = false;
  /// The phase of b_minus is only a small-detuning approximation.
  bool b_minus_approximate = false;
  bool regime_warning = false;
};

inline constexpr double kJunctionThreshold = 0.01;
inline constexpr double kMinComposedArea = 5.0;

struct Junctions {
  double tau_1 = 0.0;
  double tau_2 = 0.0;
};

/// First points after the rise and before the fall where gamma_tilde stays
/// below threshold.
Junctions default_junctions(const SystemParams& params, const PulseShape& shape,
                            double threshold = kJunctionThreshold);

/// U = U_c(tau_f, tau_2) U_a(tau_2, tau_1) U_l(tau_1, tau_i) with the edge
/// operators taken from the lifting model of the pulse ending (power law for
/// TrigPower and LinearTruncated, exponential for Sech, numeric for Gaussian).
/// The envelope comes from `shape`, the detuning from `params`.
LineshapePoint composed_transfer(const SystemParams& params, const PulseShape& shape,
                                 double tau_1, double tau_2,
                                 double threshold = kJunctionThreshold);
LineshapePoint composed_transfer(const SystemParams& params, const PulseShape& shape);

/// Phase gained by an exponential edge beyond its dynamical phase, with s_i
/// the area already behind the edge.
double exponential_phase_offset(double varpi, double s_i);

/// |B+|^2 = sin^2(pi W / 2) / cosh^2(pi d / 2). b_minus is referred to free
/// evolution (the e^{i d tau / 2} bare phase is removed).
LineshapePoint rosen_zener(double t0_omega0, double t0_delta0);

/// Closed-form lineshape of Omega0 sin^n(tau) on [0, pi].
LineshapePoint trig_lineshape(int n, double t0_omega0, double t0_delta0);

/// lambda_-+ = -+ (1/2) sqrt(Omega^2 + Delta^2) with hbar = 1.
std::pair<double, double> eigenenergy_surface(double t0_omega, double t0_delta);

enum class HalfScrapSequence { StarkPump, PumpStark };

const char* half_scrap_sequence_name(HalfScrapSequence s) noexcept;

struct HalfScrapResult {
  HalfScrapSequence sequence = HalfScrapSequence::StarkPump;
  double p_plus_final = 0.5;
  /// arg B_+ - arg B_-, wrapped to (-pi, pi].
  double relative_phase = 0.0;
  bool robust_phase = true;
  bool numeric = false;
  StateVector amplitudes;
  LiftingModel model = LiftingModel::LinearExact;
};

/// Adiabatic amplitudes at the end of a rising pump, from the bare state
/// |-> integrated with the propagator.
StateVector pump_lifting_numeric(const PulseShape& pump_shape, double t0_delta0,
                                 double tol = kDefaultTol);

/// Superposition created by a pump rising as `pump_shape` (PowerRise,
/// Exponential or Gaussian). The Stark pulse is only a direction in the
/// (Omega, Delta) plane: Stark-pump creates along Omega from the lower
/// dressed state, pump-Stark lifts along Omega and creates along Delta.
/// The pump amplitude is t0_omega0 (overrides pump_shape.omega0).
HalfScrapResult half_scrap(HalfScrapSequence sequence, const PulseShape& pump_shape,
                           double t0_omega0, double t0_delta0);

}  // namespace qlift
