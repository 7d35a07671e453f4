#pragma once

#include <complex>
#include <optional>

#include "qlift/propagator.hpp"
#include "qlift/pulses.hpp"

namespace qlift {

enum class LiftingModel { LinearExact, ExponentialExact, UniversalN, LargeDetuning, SmallDetuning,
                          Numeric };

const char* lifting_model_name(LiftingModel model) noexcept;

/// Asymptotic adiabatic amplitudes after the lifting of quasi-degeneracy:
///   A_- = sqrt(p_-) e^{i (chi_- + eta)} e^{i xi},  A_+ = sqrt(p_+) e^{-i (chi_+ + eta)} e^{i xi}
/// where eta is the dynamical phase (the half-area for the exponential rise)
/// and xi = common_phase.
struct LiftingResult {
  double p_minus = 0.5;
  double p_plus = 0.5;
  double chi_minus = 0.0;
  double chi_plus = 0.0;
  double common_phase = 0.0;
  LiftingModel model = LiftingModel::LinearExact;
  int n = 1;
  /// Set when the inputs sit outside the asymptotic validity region.
  bool regime_warning = false;

  // Intermediate quantities, kept for reports.
  double omega = 0.0;  // omega or omega_n; varpi for the exponential model
  double phi = 0.0;
  double a = 0.0, b = 0.0;
  double chi0 = 0.0;
};

/// Adiabatic amplitudes (A_-, A_+) of a lifting result after a phase eta.
StateVector lifting_amplitudes(const LiftingResult& r, double eta);

/// Exact asymptotics of the linear rise; omega = T0 Delta0 / sqrt(2 T0 Omega0).
LiftingResult linear_lifting(double omega);

/// Power-law rise with omega replaced by omega_n (no adiabaticity check).
LiftingResult lifting_power_law(int n, double t0_delta0, double t0_omega0);
/// Same, raising Adiabaticity unless 2 sqrt(d^2 + W^2) >= 10 n.
LiftingResult universal_lifting(int n, double t0_delta0, double t0_omega0);
/// omega_n = sqrt(2/pi) K_n T0 Delta0
double universal_omega(int n, double t0_delta0, double t0_omega0);

/// Half Landau-Zener operator U_LZ(T, 0) in the Landau-Zener basis, from
/// parabolic cylinder functions of order i omega^2 / 2.
SU2Operator half_lz_exact(double omega, double t_big);
/// U_A+(tau, 0) = R^dagger S U_LZ S^dagger, with tan 2 theta = T / omega.
SU2Operator half_lz_adiabatic(double omega, double t_big);
/// Large-T form of U_A+(tau, 0).
SU2Operator half_lz_adiabatic_asymptotic(double omega, double t_big);
/// int_0^T sqrt(omega^2 + T^2) dT
double lz_dynamical_phase(double omega, double t_big);

/// Exponential rise: p_- = 1/(1 + e^{-pi varpi}), xi with the initial area s_i.
/// zeta is the current half-area; a regime warning is set when zeta < 5 varpi.
LiftingResult exponential_lifting(double varpi, double zeta, double s_i);
/// xi = arg Gamma(1/2 + i varpi/2) + varpi ln 2 - (varpi/2) ln s_i
double exponential_common_phase(double varpi, double s_i);

/// Bare-basis U(tau, tau_i) for the exponential rise from the Kummer solution,
/// with s = T0 Omega0 e^tau the partial area and s_i its initial value.
SU2Operator exponential_exact(double varpi, double s, double s_i);
/// Large-s form of the same operator.
SU2Operator exponential_asymptotic(double varpi, double s, double s_i);

using cplx = std::complex<double>;

struct PerturbationTerms {
  int n = 1;
  double alpha_n = 0.0;
  double b_n = 0.0;
  cplx s_n;
  /// Exponential contribution with the pi/3 prefactor as displayed.
  cplx i_n;
  /// Same with prefactor 1.
  cplx i_n_corrected;
  /// s_n + i_n
  cplx j_n;
  /// The first-order integral evaluated numerically.
  cplx j_exact;

  double p_plus() const { return std::norm(j_n); }
  double p_plus_exact() const { return std::norm(j_exact); }
};

/// Validity floor on alpha_n for large_detuning_transfer.
inline constexpr double kLargeDetuningAlphaFloor = 1.0;

/// b_n = int_0^1 sqrt(1 - x^{2n}) dx
double b_n_constant(int n);
/// S_n = (1/2) (i/alpha)^n n!
cplx large_detuning_s(int n, double alpha_n);
/// Residue-sum estimate of I_n with the given prefactor.
cplx large_detuning_i(int n, double alpha_n, double prefactor);
/// J_n = (1/2) int_0^inf n x^{n-1}/(1 + x^{2n}) exp(i alpha int_0^x sqrt(1 + u^{2n}) du) dx
cplx large_detuning_j(int n, double alpha_n);

PerturbationTerms large_detuning_transfer(int n, double alpha_n);

/// K_n, L_n of the small-detuning expansion for T0 Omega0 = w.
double small_detuning_k(int n, double t0_omega0);
double small_detuning_l(int n, double t0_omega0);

/// G(x) = int_{-inf}^0 sin[(sqrt(pi)/2) x (1 + erf tau)] dtau
double gaussian_G(double x);

struct SmallDetuningResult {
  double p_plus = 0.5;
  /// First-order correction factor multiplying T0 Delta0 in P_+ = (1 - c d)/2.
  double coefficient = 0.0;
  /// Power law only: A_+- without the e^{-+ i zeta} factor.
  std::optional<StateVector> amplitudes;
  bool regime_warning = false;
};

/// First-order small-detuning transfer. Power laws use K_n, L_n; the
/// exponential uses pi/2; the Gaussian uses G(T0 Omega0) at tau = 0.
SmallDetuningResult small_detuning_transfer(ShapeKind kind, int n, double t0_delta0,
                                            double t0_omega0);

}  // namespace qlift
