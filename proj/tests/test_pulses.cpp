#include "doctest.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "qlift/error.hpp"
#include "qlift/pulses.hpp"

using namespace qlift;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double quad_area(const PulseShape& s, double a, double b) {
  auto f = [&](double t) { return rabi_at(s, t); };
  if (std::isinf(a) || std::isinf(b)) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, a, b);
  }
  double acc = 0.0;
  // split at kinks so Gauss-Kronrod sees smooth pieces
  std::vector<double> cuts{a};
  for (double p : breakpoints(s, a, b)) cuts.push_back(p);
  cuts.push_back(b);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    acc += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1],
                                                                          15, 1e-14);
  }
  return acc;
}

double central_diff(const PulseShape& s, double t, double h = 1e-5) {
  return (rabi_at(s, t + h) - rabi_at(s, t - h)) / (2 * h);
}

std::vector<PulseShape> sample_shapes() {
  return {power_rise(1, 100, 1.0),       power_rise(3, 7.5, 2.0, -0.5),
          power_fall(2, 40, -1.5, 0.0),  exponential(1, 100, -20, 2),
          exponential(-1, 30, -1, 15),   gaussian(12, -6, 6),
          sech(3, -12, 12),              trig_power(1, kPi / 2),
          trig_power(2, 6, 0.3),         trig_power(5, 2),
          linear_truncated(4, 0.0, 3.0)};
}

}  // namespace

TEST_CASE("envelope values") {
  CHECK(rabi_at(power_rise(1, 100, 1.0), 0.5) == Approx(50.0));
  CHECK(rabi_at(exponential(1, 100, -20, 2), 0.0) == Approx(100.0));
  auto s = sech(100, -12, 12);
  for (double t : {3.0, 4.0, 8.0, -3.0, -6.0}) {
    double asym = 200.0 * std::exp(-std::abs(t));
    CHECK(std::abs(rabi_at(s, t) / asym - 1.0) < 0.01);
  }
  auto r = power_rise(2, 5, 1.0);
  CHECK(rabi_at(r, -0.1) == 0.0);
  CHECK(rabi_at(r, 1.1) == 0.0);
  CHECK(rabi_at(linear_truncated(2, 0, 4), 2.0) == Approx(4.0));
}

TEST_CASE("envelope derivatives") {
  CHECK(rabi_derivative(trig_power(2, 3.0), 0.0, 2) == Approx(6.0));
  CHECK(rabi_derivative(power_rise(3, 1.5, 1.0), 0.0, 3) == Approx(9.0));
  CHECK(rabi_derivative(gaussian(5, -6, 6), 0.0, 1) == Approx(0.0));
  CHECK_THROWS_AS(rabi_derivative(power_rise(1, 1, 1), 0.5, 4), Error);
  CHECK(rabi_derivative(power_rise(1, 1, 1), 0.5, 3) == 0.0);
  CHECK_THROWS_AS(rabi_derivative(gaussian(1, -6, 6), 0.5, 0), Error);

  for (const auto& s : sample_shapes()) {
    double a = std::isfinite(s.tau_start) ? s.tau_start : -5.0;
    double b = std::isfinite(s.tau_end) ? s.tau_end : 5.0;
    auto bps = breakpoints(s, a - 1, b + 1);
    for (int k = 1; k < 10; ++k) {
      double t = a + (b - a) * (k + 0.37) / 10.5;
      bool near_kink = false;
      for (double p : bps) near_kink = near_kink || std::abs(p - t) < 1e-3;
      if (near_kink) continue;
      double fd = central_diff(s, t);
      double an = rabi_derivative(s, t, 1);
      CAPTURE(shape_kind_name(s.kind));
      CAPTURE(t);
      CHECK(std::abs(an - fd) <= 1e-6 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST_CASE("higher derivatives match differences of lower ones") {
  std::vector<PulseShape> shapes{gaussian(2, -6, 6), sech(3, -12, 12), trig_power(3, 2),
                                 exponential(-1, 4, -3, 3)};
  for (const auto& s : shapes) {
    for (int k = 2; k <= 6; ++k) {
      double t = 0.6;
      double h = 1e-4;
      double fd = (rabi_derivative(s, t + h, k - 1) - rabi_derivative(s, t - h, k - 1)) / (2 * h);
      CAPTURE(shape_kind_name(s.kind));
      CAPTURE(k);
      CHECK(rabi_derivative(s, t, k) == Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("pulse areas") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(pulse_area(sech(1.7, -inf, inf), -inf, inf) == Approx(kPi * 1.7).epsilon(1e-14));
  CHECK(pulse_area(trig_power(1, 0.8), 0, kPi) == Approx(1.6).epsilon(1e-14));
  CHECK(pulse_area(trig_power(2, 0.8), 0, kPi) == Approx(0.4 * kPi).epsilon(1e-14));
  CHECK(pulse_area(power_rise(2, 3, 1), -5, 5) == Approx(1.0).epsilon(1e-14));

  for (const auto& s : sample_shapes()) {
    double a = std::isfinite(s.tau_start) ? s.tau_start : -5.0;
    double b = std::isfinite(s.tau_end) ? s.tau_end : 5.0;
    for (auto [x, y] : {std::pair{a, b}, std::pair{a + 0.3 * (b - a), a + 0.8 * (b - a)},
                        std::pair{a - 1.0, b + 1.0}}) {
      CAPTURE(shape_kind_name(s.kind));
      double closed = pulse_area(s, x, y);
      double num = quad_area(s, x, y);
      CHECK(std::abs(closed - num) <= 1e-10 * std::max(1.0, std::abs(num)));
    }
  }
}

TEST_CASE("falling power equals mirrored rising power") {
  auto rise = power_rise(3, 2.5, 1.0);
  auto fall = power_fall(3, 2.5, -1.0, 0.0);
  for (double t : {-0.9, -0.5, -0.1, 0.0}) {
    CHECK(rabi_at(fall, t) == Approx(rabi_at(rise, -t)));
    CHECK(rabi_derivative(fall, t, 1) == Approx(-rabi_derivative(rise, -t, 1)));
  }
}

TEST_CASE("validation rejects bad shapes") {
  CHECK_THROWS_AS(power_rise(0, 1, 1), Error);
  CHECK_THROWS_AS(power_rise(1, -1, 1), Error);
  CHECK_THROWS_AS(power_rise(1, 1, -1), Error);
  CHECK_THROWS_AS(exponential(2, 1, -3, 3), Error);
  PulseShape t = trig_power(1, 1);
  t.tau_end = 4.0;
  CHECK_THROWS_AS(validate(t), Error);
  CHECK(parse_shape_kind("gaussian") == ShapeKind::Gaussian);
  CHECK_THROWS_AS(parse_shape_kind("square"), Error);
  CHECK(rabi_at(gaussian(3, -10, 10), rising_cutoff(ShapeKind::Gaussian, 3)) ==
        Approx(1e-8).epsilon(1e-6));
  CHECK(rabi_at(exponential(1, 100, -30, 3), rising_cutoff(ShapeKind::Exponential, 100)) ==
        Approx(1e-8).epsilon(1e-6));
}
