#pragma once

// Double-double arithmetic (about 32 significant digits) for series that
// cancel catastrophically in plain double precision.

#include <cmath>
#include <complex>

namespace qlift::dd {

struct Real {
  double hi = 0.0;
  double lo = 0.0;
};

inline Real two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline Real quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Real two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Real operator+(Real a, Real b) {
  Real s = two_sum(a.hi, b.hi);
  Real t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Real operator-(Real a) { return {-a.hi, -a.lo}; }
inline Real operator-(Real a, Real b) { return a + (-b); }

inline Real operator*(Real a, Real b) {
  Real p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Real operator*(Real a, double b) {
  Real p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Real operator/(Real a, Real b) {
  double q1 = a.hi / b.hi;
  Real r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + Real{q3, 0.0};
}

inline Real operator/(Real a, double b) { return a / Real{b, 0.0}; }

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i) : re(r), im(i) {}
  explicit Complex(std::complex<double> z) : re{z.real(), 0.0}, im{z.imag(), 0.0} {}

  std::complex<double> value() const { return {re.hi + re.lo, im.hi + im.lo}; }
  double abs_approx() const { return std::hypot(re.hi, im.hi); }
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Complex operator/(const Complex& a, const Complex& b) {
  Real den = b.re * b.re + b.im * b.im;
  Real nr = a.re * b.re + a.im * b.im;
  Real ni = a.im * b.re - a.re * b.im;
  return {nr / den, ni / den};
}

inline Complex operator/(const Complex& a, double b) { return {a.re / b, a.im / b}; }

/// z + k with the integer shift added exactly.
inline Complex shifted(std::complex<double> z, double k) {
  return {two_sum(z.real(), k), Real{z.imag(), 0.0}};
}

}  // namespace qlift::dd
