#!/usr/bin/env python3
"""Generate Taylor tables for the Riemann-Siegel correction functions C0..C4.

C_k are expanded in z = p - 1/2 where p is the fractional part of sqrt(t/2pi).
Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) = -cos(2 pi z^2 - 5 pi/8) / cos(2 pi z)
is entire, so the series converge on |z| <= 1/2.

Usage: gen_rs_coeffs.py > src/rs_coeffs.inc
"""
import mpmath as mp

mp.mp.dps = 80
DEG = 140
KEEP = 70
pi = mp.pi


def cos_sq_series():
    # cos(2 pi z^2 - 5 pi / 8)
    c = [mp.mpf(0)] * (DEG + 1)
    a, b = mp.cos(5 * pi / 8), mp.sin(5 * pi / 8)
    k = 0
    while 4 * k <= DEG:
        c[4 * k] += a * (-1) ** k * (2 * pi) ** (2 * k) / mp.factorial(2 * k)
        if 4 * k + 2 <= DEG:
            c[4 * k + 2] += b * (-1) ** k * (2 * pi) ** (2 * k + 1) / mp.factorial(2 * k + 1)
        k += 1
    return c


def cos_series():
    c = [mp.mpf(0)] * (DEG + 1)
    for k in range(0, DEG // 2 + 1):
        c[2 * k] = (-1) ** k * (2 * pi) ** (2 * k) / mp.factorial(2 * k)
    return c


def divide(num, den):
    q = [mp.mpf(0)] * (DEG + 1)
    for i in range(DEG + 1):
        s = num[i] - sum(q[j] * den[i - j] for j in range(i))
        q[i] = s / den[0]
    return q


psi = [-x for x in divide(cos_sq_series(), cos_series())]


def deriv(j):
    return [psi[i + j] * mp.factorial(i + j) / mp.factorial(i) if i + j <= DEG else mp.mpf(0)
            for i in range(DEG + 1)]


def combo(terms):
    out = [mp.mpf(0)] * (DEG + 1)
    for coef, j in terms:
        d = deriv(j)
        for i in range(DEG + 1):
            out[i] += coef * d[i]
    return out


C = [
    combo([(1, 0)]),
    combo([(-1 / (96 * pi ** 2), 3)]),
    combo([(1 / (64 * pi ** 2), 2), (1 / (18432 * pi ** 4), 6)]),
    combo([(-1 / (64 * pi ** 2), 1), (-1 / (3840 * pi ** 4), 5), (-1 / (5308416 * pi ** 6), 9)]),
    combo([(1 / (128 * pi ** 2), 0), (mp.mpf(19) / (24576 * pi ** 4), 4),
           (mp.mpf(11) / (5898240 * pi ** 6), 8), (1 / (2038431744 * pi ** 8), 12)]),
]

print("// Generated by tools/gen_rs_coeffs.py; do not edit.")
print("// Taylor coefficients of the Riemann-Siegel corrections C0..C4 in z = p - 1/2.")
print(f"inline constexpr int kRsTerms = {KEEP};")
print(f"inline constexpr double kRsCoeffs[5][{KEEP}] = {{")
for c in C:
    print("    {")
    for i in range(KEEP):
        print(f"        {mp.nstr(c[i], 20, min_fixed=0, max_fixed=0)},")
    print("    },")
print("};")
