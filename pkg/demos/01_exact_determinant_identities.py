#!/usr/bin/env python3
"""Exact finite-size identities, checked at machine precision.

The determinants of T_n(v) +- H_n(v) with the zero/pole symbol
v(e^{i t}) = (2 - 2 cos t)^beta have closed forms built from Barnes
G-values; the doubled Toeplitz determinant factorizes into the two signed
halves.  This script rebuilds everything from dense matrices and compares.
"""

import numpy as np

from whdet import (
    d_n, d_n_exact, det_tn_exact, fourier_coeff_v, logdet, rel_exp_diff, toeplitz,
)

beta = 0.3 + 0.2j
print(f"symbol exponent beta = {beta}")
print(f"{'n':>4} {'matrix vs closed (+)':>22} {'matrix vs closed (-)':>22} "
      f"{'T_2n vs D+ D-':>16}")
for n in (1, 2, 4, 8, 16, 32):
    gp = rel_exp_diff(d_n(beta, n, +1), d_n_exact(beta, n, +1))
    gm = rel_exp_diff(d_n(beta, n, -1), d_n_exact(beta, n, -1))
    t2n = logdet(toeplitz(lambda k: fourier_coeff_v(beta, k), 2 * n))
    gb = rel_exp_diff(t2n, d_n(beta, n, +1) + d_n(beta, n, -1))
    print(f"{n:>4} {gp:>22.3e} {gm:>22.3e} {gb:>16.3e}")

print("\npure Toeplitz closed form:")
for n in (3, 6, 12, 24):
    tn = logdet(toeplitz(lambda k: fourier_coeff_v(beta, k), n))
    print(f"  n={n:>3}: rel gap {rel_exp_diff(tn, det_tn_exact(beta, n)):.3e}")
