"""Complex log-determinants: the comparison currency for every route.

Determinants here range from e^(-beta R) scales down to values far below
double-precision underflow, so everything is carried as (log magnitude,
accumulated argument).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor

from .errors import SingularMatrix

_PIVOT_FLOOR = 1e-300


@dataclass(frozen=True)
class LogDet:
    """A complex determinant in log form: det = exp(ln_abs + 1j*arg).

    ``arg`` is accumulated (sum of pivot arguments plus the permutation
    correction), not reduced mod 2*pi.
    """

    ln_abs: float
    arg: float

    def __add__(self, other: "LogDet") -> "LogDet":
        return LogDet(self.ln_abs + other.ln_abs, self.arg + other.arg)

    def __sub__(self, other: "LogDet") -> "LogDet":
        return LogDet(self.ln_abs - other.ln_abs, self.arg - other.arg)

    def scaled(self, factor: float) -> "LogDet":
        return LogDet(factor * self.ln_abs, factor * self.arg)

    @property
    def log(self) -> complex:
        return complex(self.ln_abs, self.arg)

    @classmethod
    def from_log(cls, ln: complex) -> "LogDet":
        ln = complex(ln)
        return cls(ln.real, ln.imag)

    @classmethod
    def from_value(cls, det: complex) -> "LogDet":
        det = complex(det)
        if det == 0:
            raise SingularMatrix("determinant is exactly zero")
        return cls(math.log(abs(det)), math.atan2(det.imag, det.real))


def rel_exp_diff(a: LogDet, b: LogDet) -> float:
    """|exp(a - b) - 1|: relative difference of the determinants."""
    d = a.log - b.log
    return abs(np.exp(d) - 1.0)


def logdet(matrix) -> LogDet:
    """Log-determinant of a square matrix via LU with partial pivoting.

    ln_abs sums log|pivot|; arg sums pivot arguments plus pi per row swap.
    Raises SingularMatrix when a pivot magnitude falls below 1e-300.
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if a.shape[0] == 0:
        return LogDet(0.0, 0.0)
    lu, piv = lu_factor(a, check_finite=False)
    diag = np.diag(lu)
    mags = np.abs(diag)
    if not np.all(np.isfinite(mags)) or np.any(mags < _PIVOT_FLOOR):
        raise SingularMatrix("pivot magnitude below 1e-300")
    ln_abs = float(np.sum(np.log(mags)))
    if np.iscomplexobj(lu):
        arg = float(np.sum(np.angle(diag)))
    else:
        arg = math.pi * int(np.sum(diag < 0))
    # each row interchange flips the sign of the determinant
    swaps = int(np.sum(piv != np.arange(len(piv))))
    arg += math.pi * swaps
    return LogDet(ln_abs, arg)
