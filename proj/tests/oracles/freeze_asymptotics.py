#!/usr/bin/env python3
"""Regenerate asymptotics_frozen.inc from mpmath at 30 digits.

Run from the repo root:  python3 tests/oracles/freeze_asymptotics.py
"""
from pathlib import Path

import mpmath as mp

mp.mp.dps = 30
OUT = Path(__file__).with_name("asymptotics_frozen.inc")


def f(x):
    return mp.nstr(x, 20)


def gaussian_g(x):
    c = mp.sqrt(mp.pi) / 2 * x
    return mp.quad(lambda t: mp.sin(c * mp.erfc(-t)), [-mp.inf, -6, -3, -1.5, 0])


def b_n(n):
    return mp.quad(lambda x: mp.sqrt(1 - x ** (2 * n)), [0, 1])


def kl_n(n, w):
    m = n + 1
    scale = (mp.mpf(m) / w) ** (mp.mpf(1) / m)
    # int_0^inf sin(s^m) ds with u = s^m
    # Smooth head in s, then half-period blocks in u = s^m summed with
    # series acceleration.
    def osc(trig, shift):
        g = lambda u: trig(u) * u ** (mp.mpf(1) / m - 1) / m
        edge = shift * mp.pi
        head = mp.quad(lambda v: trig(v ** m), [0, edge ** (mp.mpf(1) / m)]) if edge > 0 else 0
        blocks = mp.nsum(lambda k: mp.quad(g, [edge + mp.pi * k, edge + mp.pi * (k + 1)]), [0, mp.inf])
        return head + blocks

    ks, kc = osc(mp.sin, 1), osc(mp.cos, mp.mpf(1) / 2)
    return scale * ks, scale * kc


def j_n(n, alpha):
    # Same integral taken along arg x = pi/(6n), with the phase integral in
    # closed form through 2F1.
    th = mp.pi / (6 * n)
    d = mp.expj(th)

    def w(x):
        return x * mp.hyp2f1(-0.5, mp.mpf(1) / (2 * n), 1 + mp.mpf(1) / (2 * n), -x ** (2 * n))

    def integrand(r):
        x = r * d
        fx = mp.mpf(n) / 2 * x ** (n - 1) / (1 + x ** (2 * n))
        return d * fx * mp.expj(alpha * w(x))

    rmax = (60 * (n + 1) / (alpha * mp.sin((n + 1) * th))) ** (mp.mpf(1) / (n + 1)) + 2
    pts = [0] + [rmax * k / 8 for k in range(1, 9)]
    return mp.quad(integrand, pts)


def linear(omega):
    y = mp.mpf(omega) ** 2 / 4
    phi = mp.im(mp.loggamma(1 - 1j * y)) - mp.im(mp.loggamma(0.5 - 1j * y)) + mp.pi / 4
    a = mp.sqrt((1 + mp.exp(-mp.pi * omega ** 2 / 2)) / 2)
    b = mp.sqrt((1 - mp.exp(-mp.pi * omega ** 2 / 2)) / 2)
    chi0 = mp.im(mp.loggamma(0.5 - 1j * y)) - y * (1 - mp.log(y))
    e = b * mp.expj(phi)
    p_plus = abs(a - e) ** 2 / 2
    return p_plus, chi0 + mp.arg(a + e), chi0 + mp.arg(a - e)


def main():
    lines = ["// Generated by freeze_asymptotics.py (mpmath, 30 digits). Do not edit.", ""]
    lines.append("static const double kFrozenGaussianG[][2] = {")
    for x in (0.5, 1.0, 3.0, 10.0, 30.0):
        lines.append(f"    {{{x}, {f(gaussian_g(x))}}},")
    lines.append("};")
    lines.append("static const double kFrozenBn[] = {")
    lines.append("    " + ", ".join(f(b_n(n)) for n in range(1, 7)) + ",")
    lines.append("};")
    lines.append("// n, K_n(W = 100), L_n(W = 100)")
    lines.append("static const double kFrozenKL[][3] = {")
    for n in range(1, 5):
        k, l = kl_n(n, 100)
        lines.append(f"    {{{n}, {f(k)}, {f(l)}}},")
    lines.append("};")
    lines.append("// n, alpha, Re J, Im J")
    lines.append("static const double kFrozenJ[][4] = {")
    for n, alpha in ((1, 0.25), (1, 2.0), (2, 1.118033988749895), (2, 5.0), (3, 2.0), (4, 3.0)):
        j = j_n(n, mp.mpf(alpha))
        lines.append(f"    {{{n}, {alpha!r}, {f(j.real)}, {f(j.imag)}}},")
    lines.append("};")
    lines.append("// omega, p_plus, chi_minus, chi_plus")
    lines.append("static const double kFrozenLinear[][4] = {")
    for om in (0.1, 0.3535533905932738, 1.0, 2.0, 4.0):
        p, cm, cp = linear(mp.mpf(om))
        lines.append(f"    {{{om!r}, {f(p)}, {f(cm)}, {f(cp)}}},")
    lines.append("};")
    OUT.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
