#pragma once

#include <complex>

namespace qlift::specfun {

using cplx = std::complex<double>;

/// Result of one evaluation method together with its relative error estimate.
struct Estimate {
  cplx value;
  double rel_error;
};

/// Principal branch of log Gamma (analytic continuation from the positive
/// real axis, cut along the negative real axis). Throws on poles.
cplx log_gamma(cplx z);

/// Imaginary part of log_gamma wrapped to (-pi, pi].
double arg_gamma(cplx z);

/// 1/Gamma(z); exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

double erf(double x);

/// Parabolic cylinder function D_nu(z).
cplx parabolic_cylinder_d(cplx nu, cplx z);

/// Kummer confluent hypergeometric function M(a, b, z) = 1F1(a; b; z).
cplx kummer_m(cplx a, cplx b, cplx z);

// Individual evaluation methods, exposed so the crossover can be checked.
Estimate kummer_m_series(cplx a, cplx b, cplx z);
Estimate kummer_m_asymptotic(cplx a, cplx b, cplx z);
Estimate pcf_d_series(cplx nu, cplx z);
Estimate pcf_d_asymptotic(cplx nu, cplx z);
/// Inward continuation of Weber's equation from the crossover radius.
Estimate pcf_d_continuation(cplx nu, cplx z);
/// Outward integration of Weber's equation from the origin.
Estimate pcf_d_outward(cplx nu, cplx z);

// Above these radii the large-argument expansions are tried first.
inline constexpr double kKummerAsymptoticRadius = 28.0;
inline constexpr double kKummerParamScale = 2.0;  // per unit of |a| + |b - a|
inline constexpr double kPcfAsymptoticRadius = 7.5;
inline constexpr double kPcfOrderScale = 1.5;  // per unit of |nu|
/// Inward continuation is only used up to this order (no turning point on the path).
inline constexpr double kPcfContinuationMaxOrder = 6.0;

/// Target accepted from a single method; beyond it the caller gets OutOfRange.
inline constexpr double kAcceptedRelError = 1e-10;

double kummer_crossover_radius(cplx a, cplx b);
double pcf_crossover_radius(cplx nu);

}  // namespace qlift::specfun
