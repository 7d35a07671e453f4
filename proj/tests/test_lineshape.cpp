#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qlift/error.hpp"
#include "qlift/lineshape.hpp"
#include "qlift/specfun.hpp"

using namespace qlift;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// Exact Rosen-Zener staying amplitude referred to free evolution.
cplx rz_b_minus_exact(double w, double d) {
  const cplx z(0.5, 0.5 * d);
  return std::exp(2.0 * specfun::log_gamma(z)) * specfun::rgamma(z + 0.5 * w) *
         specfun::rgamma(z - 0.5 * w);
}

PulseShape wide_sech(double w) { return sech(w, -std::acosh(w / 1e-9), std::acosh(w / 1e-9)); }

StateVector numeric_final(const PulseShape& s, double d) {
  auto u = propagate(system_params(s, d), s, s.tau_start, s.tau_end);
  return {u.u11, -std::conj(u.u12)};
}

double max_lineshape_error(int n, double w) {
  double worst = 0.0;
  for (int k = 0; k <= 60; ++k) {
    const double d = 0.1 * k;
    const double num = std::norm(numeric_final(trig_power(n, w), d).b_plus);
    worst = std::max(worst, std::abs(trig_lineshape(n, w, d).p_transfer - num));
  }
  return worst;
}

}  // namespace

TEST_CASE("Rosen-Zener closed form") {
  CHECK(rosen_zener(1.0, 0.0).p_transfer == Approx(1.0).epsilon(1e-15));
  for (double d : {0.0, 0.7, 3.0}) CHECK(rosen_zener(2.0, d).p_transfer < 1e-30);
  CHECK(rosen_zener(1.0, 1.0).p_transfer == Approx(1.0 / std::pow(std::cosh(kPi / 2), 2)));
  CHECK(rosen_zener(1.0, 1.0).p_transfer == Approx(0.1588).epsilon(1e-3));
  CHECK(rosen_zener(1.0, 1.0).b_minus_approximate);
  CHECK(rosen_zener(0.0, 2.0).b_minus == cplx(1.0, 0.0));
  CHECK_THROWS_AS(rosen_zener(-1.0, 0.0), Error);

  for (double w : {0.3, 1.0, 2.6, 5.3}) {
    for (double d : {0.0, 0.1, 0.5, 1.0, 2.0}) {
      auto s = wide_sech(w);
      auto rz = rosen_zener(w, d);
      auto num = numeric_final(s, d);
      CAPTURE(w);
      CAPTURE(d);
      CHECK(std::norm(rz.b_minus) + rz.p_transfer == Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(rz.b_plus - num.b_plus) < 1e-8);
      const cplx bm = num.b_minus * std::polar(1.0, -d * s.tau_end);
      CHECK(std::abs(bm - rz_b_minus_exact(w, d)) < 1e-8);
    }
  }
  // The B- phase is first order in d at fixed area.
  double prev = 0.0;
  for (double d : {0.05, 0.2, 0.8}) {
    const double err = std::abs(rosen_zener(2.6, d).b_minus - rz_b_minus_exact(2.6, d));
    CHECK(err > prev);
    prev = err;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("trig lineshape closed forms") {
  auto pi_pulse = trig_lineshape(1, kPi / 2, 0.0);
  CHECK(pi_pulse.p_transfer == Approx(1.0).epsilon(1e-14));
  CHECK(pi_pulse.area == Approx(kPi).epsilon(1e-14));
  CHECK_FALSE(pi_pulse.regime_warning);
  CHECK(trig_lineshape(1, 1.0, 0.5).regime_warning);
  CHECK(trig_lineshape(2, 2.0, 0.0).p_transfer == Approx(1.0).epsilon(1e-14));

  for (double d : {0.0, 0.3, 1.7, 4.2, 6.0}) {
    auto l = trig_lineshape(1, kPi / 2, d);
    CAPTURE(d);
    CHECK(l.b_plus.real() == 0.0);
    CHECK(std::norm(l.b_minus) + l.p_transfer == Approx(1.0).epsilon(1e-12));
    // A real symmetric Hamiltonian gives a symmetric propagator.
    CHECK(std::abs(numeric_final(trig_power(1, kPi / 2), d).b_plus.real()) < 1e-10);
  }

  CHECK(max_lineshape_error(1, kPi / 2) < 0.03);
  CHECK(max_lineshape_error(2, 6.0) < 0.05);
}

TEST_CASE("composed transfer on trig pulses") {
  for (int n : {1, 2}) {
    for (double d : {0.0, 0.5, 2.0, 4.0}) {
      auto s = trig_power(n, 12.0);
      auto p = system_params(s, d);
      auto c = composed_transfer(p, s);
      auto t = trig_lineshape(n, 12.0, d);
      CAPTURE(n);
      CAPTURE(d);
      CHECK(std::abs(c.b_plus - t.b_plus) < 1e-12);
      CHECK(std::abs(c.b_minus - t.b_minus) < 1e-12);
      CHECK(std::norm(c.b_minus) + c.p_transfer == Approx(1.0).epsilon(1e-9));
      if (d == 0.0) CHECK(c.p_transfer == Approx(std::pow(std::sin(0.5 * c.area), 2)));
    }
  }
  // Junction placement only moves phase between the operators.
  auto s = trig_power(1, 12.0);
  auto p = system_params(s, 2.0);
  auto a = composed_transfer(p, s, 1.2, 1.9);
  auto b = composed_transfer(p, s, 0.9, 2.2);
  CHECK(std::abs(a.b_plus - b.b_plus) < 1e-12);
  CHECK(std::abs(a.p_transfer - std::norm(numeric_final(s, 2.0).b_plus)) < 5e-3);
}

TEST_CASE("composed transfer on other bell shapes") {
  // Triangle: linear edges with slope Omega0.
  auto tri = linear_truncated(8.0, 0.0, 3.0);
  for (double d : {0.5, 2.0}) {
    auto c = composed_transfer(system_params(tri, d), tri);
    CAPTURE(d);
    CHECK(std::abs(c.p_transfer - std::norm(numeric_final(tri, d).b_plus)) < 5e-3);
  }
  // Gaussian edges are integrated.
  auto g = gaussian(10.0, -std::sqrt(std::log(1e10)), std::sqrt(std::log(1e10)));
  for (double d : {0.5, 2.0}) {
    auto c = composed_transfer(system_params(g, d), g);
    CHECK(c.numeric_edges);
    CHECK(c.model == LiftingModel::Numeric);
    CHECK(std::abs(c.p_transfer - std::norm(numeric_final(g, d).b_plus)) < 1e-2);
  }
}

TEST_CASE("composed sech transfer approaches Rosen-Zener") {
  auto s0 = wide_sech(15.3);
  auto c0 = composed_transfer(system_params(s0, 0.0), s0);
  CHECK(c0.p_transfer == Approx(rosen_zener(15.3, 0.0).p_transfer).epsilon(1e-6));
  for (double d : {0.1, 0.5, 1.0}) {
    double prev = 1.0;
    for (double ratio : {10.3, 30.3, 100.3}) {
      const double w = ratio * d;
      auto s = wide_sech(w);
      if (pulse_area(s, s.tau_start, s.tau_end) < kMinComposedArea) continue;
      auto c = composed_transfer(system_params(s, d), s);
      const double err = std::abs(c.p_transfer - rosen_zener(w, d).p_transfer);
      CAPTURE(d);
      CAPTURE(ratio);
      CHECK(err < 1e-3);
      CHECK(err < prev);
      CHECK(std::abs(c.b_plus - rosen_zener(w, d).b_plus) < 1e-3);
      prev = err;
    }
  }
}

TEST_CASE("composed transfer argument checks") {
  auto small = trig_power(1, 2.0);
  try {
    composed_transfer(system_params(small, 1.0), small, 1.5, 1.6);
    FAIL("expected AreaTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AreaTooSmall);
  }
  auto s = trig_power(1, 12.0);
  try {
    composed_transfer(system_params(s, 2.0), s, 0.05, 2.0);
    FAIL("expected Adiabaticity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Adiabaticity);
  }
  CHECK_THROWS_AS(composed_transfer(system_params(s, 2.0), s, 2.0, 1.0), Error);
  auto rise = power_rise(2, 100, 2.0);
  CHECK_THROWS_AS(composed_transfer(system_params(rise, 1.0), rise), Error);
  auto j = default_junctions(system_params(s, 2.0), s);
  CHECK(nonadiabatic_coefficient(system_params(s, 2.0), s, j.tau_1) ==
        Approx(kJunctionThreshold).epsilon(1e-6));
  CHECK(j.tau_2 == Approx(kPi - j.tau_1).epsilon(1e-9));
}

TEST_CASE("eigenenergy surfaces") {
  auto [lo0, hi0] = eigenenergy_surface(0.0, 0.0);
  CHECK(lo0 == 0.0);
  CHECK(hi0 == 0.0);
  auto [lo, hi] = eigenenergy_surface(3.0, 4.0);
  CHECK(lo == -2.5);
  CHECK(hi == 2.5);
  auto [l2, h2] = eigenenergy_surface(1.7, -0.4);
  CHECK(h2 - l2 == Approx(std::hypot(1.7, 0.4)));
}

TEST_CASE("half-SCRAP at exact resonance") {
  const auto rise2 = power_rise(2, 100, 3.0);
  for (auto seq : {HalfScrapSequence::StarkPump, HalfScrapSequence::PumpStark}) {
    auto r = half_scrap(seq, rise2, 100, 0.0);
    CHECK(r.p_plus_final == Approx(0.5).epsilon(1e-15));
    auto e = half_scrap(seq, exponential(1, 100, std::log(1e-8 / 100), 2.0), 100, 0.0);
    CHECK(e.p_plus_final == Approx(0.5).epsilon(1e-15));
    auto g = half_scrap(seq, gaussian(100, -std::sqrt(std::log(1e10)), 0.0), 100, 0.0);
    CHECK(g.numeric);
    CHECK(std::abs(g.p_plus_final - 0.5) < 1e-3);
  }
  auto sp = half_scrap(HalfScrapSequence::StarkPump, rise2, 100, 0.0);
  CHECK(sp.robust_phase);
  CHECK(std::abs(std::abs(sp.relative_phase) - kPi) < 1e-12);
  CHECK_FALSE(half_scrap(HalfScrapSequence::PumpStark, rise2, 100, 0.0).robust_phase);

  // Doubling T0 doubles every dynamical phase.
  for (double tend : {2.0, 3.0}) {
    auto s = power_rise(2, 100, tend);
    const double a1 = half_scrap(HalfScrapSequence::StarkPump, s, 100, 0.0).relative_phase;
    const double a2 = half_scrap(HalfScrapSequence::StarkPump, s, 200, 0.0).relative_phase;
    CHECK(std::abs(std::remainder(a1 - a2, 2 * kPi)) < 1e-12);
    const double b1 = half_scrap(HalfScrapSequence::PumpStark, s, 100, 0.0).relative_phase;
    const double b2 = half_scrap(HalfScrapSequence::PumpStark, s, 200, 0.0).relative_phase;
    CHECK(std::abs(std::remainder(b1 - b2, 2 * kPi)) > 0.1);
  }
}

TEST_CASE("half-SCRAP off resonance") {
  // The exponential rise does not depend on Omega0.
  for (double d : {0.2, 1.0, 2.5}) {
    const double want = exponential_lifting(d, 100.0, 1e-8).p_plus;
    for (double w : {10.0, 100.0, 1000.0}) {
      auto s = exponential(1, w, std::log(1e-8 / w), std::log(700.0 / w));
      auto r = half_scrap(HalfScrapSequence::StarkPump, s, w, d);
      CHECK(r.p_plus_final == Approx(want).epsilon(1e-14));
      CHECK(half_scrap(HalfScrapSequence::PumpStark, s, w, d).p_plus_final ==
            Approx(want).epsilon(1e-14));
    }
  }
  for (int n : {2, 4}) {
    const double w = 100.0;
    auto s = power_rise(n, w, std::pow(5000.0 / w, 1.0 / n));
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double d = 1.0 * k;
      auto r = half_scrap(HalfScrapSequence::StarkPump, s, w, d);
      worst = std::max(worst, std::abs(r.p_plus_final - std::norm(pump_lifting_numeric(s, d).b_plus)));
    }
    CAPTURE(n);
    CHECK(worst < 0.02);
  }
  // At a fixed detuning the power rise stays closest to 1/2.
  const double d = 0.5;
  auto pw = half_scrap(HalfScrapSequence::StarkPump, power_rise(2, 1000, 2.0), 1000, d);
  auto ex = half_scrap(HalfScrapSequence::StarkPump,
                       exponential(1, 1000, std::log(1e-8 / 1000), 0.0), 1000, d);
  auto ga = half_scrap(HalfScrapSequence::StarkPump,
                       gaussian(1000, -std::sqrt(std::log(1e11)), 0.0), 1000, d);
  CHECK(std::abs(pw.p_plus_final - 0.5) < std::abs(ex.p_plus_final - 0.5));
  CHECK(std::abs(pw.p_plus_final - 0.5) < std::abs(ga.p_plus_final - 0.5));

  CHECK_THROWS_AS(half_scrap(HalfScrapSequence::StarkPump, power_rise(4, 10, 2.0), 10, 0.0),
                  Error);
  CHECK_THROWS_AS(half_scrap(HalfScrapSequence::StarkPump, sech(10, -5, 5), 10, 0.0), Error);
}
