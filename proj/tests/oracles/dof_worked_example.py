#!/usr/bin/env python3
"""Independent high-precision recomputation of the worked DoF example.

Band [1.9, 2.9] GHz, R = 0.1 m, T = 0, c = 3e8, gamma = SNR_max.
Prints the per-order critical frequencies, effective bandwidths and the
total degrees of freedom at 50 significant digits. The values are frozen
into tests/test_dofcore.cpp and tests/acceptance.cpp.
"""
from mpmath import mp, mpf, e, pi, log, sqrt, besselj, gamma, findroot

mp.dps = 50

f0 = mpf("2.4e9")
w = mpf("0.5e9")
r = mpf("0.1")
t = mpf(0)
c = mpf("3e8")
ratio = mpf(1)  # gamma / snr_max


def f_crit(n):
    v = n * c / (e * pi * r) + c / (2 * e * pi * r) * log(ratio)
    return max(v, mpf(0))


n_upper = 1
while not f_crit(n_upper) > f0 + w:
    n_upper += 1

t_eff = t + 2 * r / c


def w_eff(n):
    n = abs(n)
    if n == 0:
        return 2 * w
    if n < n_upper:
        return f0 + w - max(f0 - w, f_crit(n))
    return mpf(0)


total = sum(w_eff(n) * t_eff + 1 for n in range(-(n_upper - 1), n_upper))
print("n_upper", n_upper)
print("t_eff", mp.nstr(t_eff, 30))
for n in range(0, n_upper + 1):
    print("n", n, "f_crit", mp.nstr(f_crit(n) if n else 0, 30), "w_eff", mp.nstr(w_eff(n), 30))
print("sum_w", mp.nstr(sum(w_eff(n) for n in range(-(n_upper - 1), n_upper)), 30))
print("total_dof", mp.nstr(total, 30))

# Other frozen values used by unit tests.
print("f_crit(5, R=1)", mp.nstr(5 * c / (e * pi), 30))
print("J5(1)", mp.nstr(besselj(5, 1), 30))
print("J0 first zero", mp.nstr(findroot(lambda z: besselj(0, z), 2.4), 30))
print("approx(5,1)", mp.nstr(mpf("0.5") ** 5 / 120, 30))
print("stirling(1)", mp.nstr(sqrt(2 * pi) / e, 30))
print("stirling(5)", mp.nstr(sqrt(10 * pi) * mpf(5) ** 5 * e ** -5, 30))
