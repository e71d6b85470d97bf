"""Circle and line symbols: evaluation, Fourier coefficients, convolution kernels.

Circle symbols generate Toeplitz/Hankel matrices through their Fourier
coefficients; line symbols generate truncated convolution operators
through the Fourier transform of (symbol - 1).  The singular symbols get
closed-form coefficients; the regularized ones get convergent series; a
quadrature oracle backs both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad
from scipy.special import loggamma

from .errors import DomainError, QuadFailure, SingularPointError
from .params import is_near_nonpositive_integer
from .quadrature import QuadRule, gauss_rule


class CircleKind(Enum):
    VBETA = "v"            # (2 - 2 cos theta)^beta
    UBETA = "u"            # e^{i beta (theta - pi)}
    VBETA_R = "v_r"        # (1 - r/t)^beta (1 - r t)^beta
    UBETA_R = "u_r"        # (1 - r/t)^{-beta} (1 - r t)^beta
    CUSTOM = "custom"


class LineKind(Enum):
    VHAT = "vhat"          # (x^2/(x^2+1))^beta
    UHAT = "uhat"          # jump symbol ((x-0i)/(x-i))^{-beta} ((x+0i)/(x+i))^beta
    VHAT_EPS = "vhat_eps"  # ((x^2+eps^2)/(x^2+1))^beta
    UHAT_EPS = "uhat_eps"  # ((x-eps i)/(x-i))^{-beta} ((x+eps i)/(x+i))^beta
    PHI = "phi"            # 1 - sin(pi beta) sech(pi x)
    CUSTOM = "custom"


_SINGULAR_CIRCLE = (CircleKind.VBETA, CircleKind.UBETA)
_REGULARIZED_CIRCLE = (CircleKind.VBETA_R, CircleKind.UBETA_R)


@dataclass(frozen=True)
class CircleSymbol:
    """An evaluatable symbol on the unit circle."""

    kind: CircleKind
    beta: complex = 0.0
    r: float = 0.0
    fn: Optional[Callable] = None

    def __post_init__(self):
        if self.kind in _REGULARIZED_CIRCLE and not 0.0 <= self.r < 1.0:
            raise DomainError(f"regularized symbol needs 0 <= r < 1, got r={self.r}")
        if self.kind is CircleKind.CUSTOM and self.fn is None:
            raise DomainError("custom circle symbol needs fn(theta)")


@dataclass(frozen=True)
class LineSymbol:
    """An evaluatable symbol on the real line."""

    kind: LineKind
    beta: complex = 0.0
    eps: float = 1.0
    fn: Optional[Callable] = None

    def __post_init__(self):
        if self.kind in (LineKind.VHAT_EPS, LineKind.UHAT_EPS):
            if not 0.0 < self.eps <= 1.0:
                raise DomainError(f"eps must lie in (0, 1], got {self.eps}")
        if self.kind is LineKind.PHI:
            b = complex(self.beta)
            if not -1.5 < b.real < 0.5:
                raise DomainError(f"sech symbol needs -3/2 < Re beta < 1/2, got {b}")
        if self.kind is LineKind.CUSTOM and self.fn is None:
            raise DomainError("custom line symbol needs fn(x)")


def eval_circle(s: CircleSymbol, theta):
    """Evaluate a circle symbol at angle(s) theta (radians).

    Principal powers of each factored term; u_beta uses the branch
    e^{i beta (theta - pi)} on (0, 2 pi).
    """
    th = np.asarray(theta, dtype=float)
    if s.kind in _SINGULAR_CIRCLE:
        # every float except an exact zero of sin(theta/2) is a regular point
        if np.any(np.sin(th / 2.0) == 0.0):
            raise SingularPointError(f"{s.kind.value} symbol is singular at theta=0")
    b = complex(s.beta)
    if s.kind is CircleKind.VBETA:
        # 2 - 2 cos t = 4 sin^2(t/2), stable down to t ~ 1e-150
        return (4.0 * np.sin(th / 2.0) ** 2) ** b
    if s.kind is CircleKind.UBETA:
        return np.exp(1j * b * (np.mod(th, 2 * np.pi) - np.pi))
    t = np.exp(1j * th)
    if s.kind is CircleKind.VBETA_R:
        return (1.0 - s.r / t) ** b * (1.0 - s.r * t) ** b
    if s.kind is CircleKind.UBETA_R:
        return (1.0 - s.r / t) ** (-b) * (1.0 - s.r * t) ** b
    return s.fn(th)


def eval_line(s: LineSymbol, x):
    """Evaluate a line symbol at point(s) x."""
    x = np.asarray(x, dtype=float)
    b = complex(s.beta)
    if s.kind is LineKind.VHAT:
        if np.any(x == 0.0):
            raise SingularPointError("vhat is singular at x=0")
        return (x * x / (x * x + 1.0)) ** b
    if s.kind is LineKind.VHAT_EPS:
        return ((x * x + s.eps**2) / (x * x + 1.0)) ** b
    if s.kind is LineKind.UHAT:
        if np.any(x == 0.0):
            raise SingularPointError("uhat jumps at x=0")
        # (x - 0i) means the boundary value from below the cut at 0
        return np.where(
            x > 0,
            (x / (x - 1j)) ** (-b) * (x / (x + 1j)) ** b,
            ((-x) / (x - 1j) * np.exp(-1j * np.pi)) ** (-b)
            * ((-x) / (x + 1j) * np.exp(1j * np.pi)) ** b,
        )
    if s.kind is LineKind.UHAT_EPS:
        return ((x - 1j * s.eps) / (x - 1j)) ** (-b) * ((x + 1j * s.eps) / (x + 1j)) ** b
    if s.kind is LineKind.PHI:
        return 1.0 - np.sin(np.pi * b) / np.cosh(np.pi * x)
    return s.fn(x)


# ---------------------------------------------------------------------------
# Fourier coefficients on the circle
# ---------------------------------------------------------------------------

def fourier_coeff_v(beta, k: int) -> complex:
    """k-th Fourier coefficient of (2-2 cos theta)^beta, Re beta > -1/2.

    Closed form (-1)^k Gamma(1+2b) / (Gamma(1+b+k) Gamma(1+b-k)), obtained
    from the Cauchy product of the binomial series of (1-t)^b (1-1/t)^b and
    validated against the quadrature oracle.
    """
    b = complex(beta)
    if b.real <= -0.5:
        raise DomainError(f"coefficients of v need Re beta > -1/2, got {b}")
    for arg in (1 + b + k, 1 + b - k):
        if is_near_nonpositive_integer(arg):
            return 0.0  # reciprocal Gamma kills the term
    ln = loggamma(1 + 2 * b) - loggamma(1 + b + k) - loggamma(1 + b - k)
    return (-1) ** (k % 2) * complex(np.exp(ln))


def fourier_coeff_u(beta, k: int) -> complex:
    """k-th Fourier coefficient of e^{i beta (theta-pi)}.

    sin(pi b)/(pi (b-k)) for non-integer b; the monomial limit (-1)^b
    delta_{k,b} when b is an integer.
    """
    b = complex(beta)
    if abs(b.imag) < 1e-14 and abs(b.real - round(b.real)) < 1e-14:
        m = round(b.real)
        return complex((-1.0) ** (m % 2) if k == m else 0.0)
    return complex(np.sin(np.pi * b) / (np.pi * (b - k)))


def _binom_series(b: complex, nterms: int) -> np.ndarray:
    """Coefficients of (1 - w)^b = sum_j c_j w^j with c_j = binom(b, j)(-1)^j."""
    c = np.empty(nterms, dtype=complex)
    c[0] = 1.0
    for j in range(nterms - 1):
        c[j + 1] = c[j] * (j - b) / (j + 1)
    return c


def reg_coeff_table(s: CircleSymbol, kmax: int, tail_tol: float = 1e-14) -> np.ndarray:
    """Coefficients k = -kmax..kmax of a regularized symbol, as one array.

    Cauchy product of the two binomial series in (r t) and (r / t); the
    truncation length is chosen so the geometric tail is below tail_tol.
    """
    if s.kind not in _REGULARIZED_CIRCLE:
        raise DomainError("coefficient table only for regularized kinds")
    b = complex(s.beta)
    r = s.r
    if r == 0.0:
        out = np.zeros(2 * kmax + 1, dtype=complex)
        out[kmax] = 1.0
        return out
    # terms fall off like r^(2l+|k|) with an algebraic prefactor
    nt = kmax + max(64, int(np.ceil((40.0 + 4 * abs(b)) / max(-np.log(r), 1e-12))))
    cpos = _binom_series(b, nt)                      # (1 - r t)^b
    bneg = -b if s.kind is CircleKind.UBETA_R else b
    cneg = _binom_series(bneg, nt)                   # (1 - r/t)^{+-b}
    rp = r ** np.arange(nt)
    a_up = cpos * rp
    a_dn = cneg * rp
    out = np.empty(2 * kmax + 1, dtype=complex)
    for k in range(-kmax, kmax + 1):
        lo = max(0, -k)
        ls = np.arange(lo, nt - max(k, 0))
        out[k + kmax] = np.sum(a_up[ls + k] * a_dn[ls])
    return out


def fourier_coeff_regularized(s: CircleSymbol, k: int) -> complex:
    """Single coefficient of a regularized symbol (see reg_coeff_table)."""
    return complex(reg_coeff_table(s, abs(k))[abs(k) + k])


def fourier_coeff_numeric(s: CircleSymbol, k: int, tol: float = 1e-11) -> complex:
    """(1/2pi) int_0^{2pi} s(e^{i theta}) e^{-ik theta} d theta by adaptive
    quadrature, split at the theta=0 singularity.

    Each half is mapped by theta = u^3 (resp. 2 pi - theta = u^3), which
    turns the algebraic endpoint singularity theta^{2 Re beta} into the
    mild u^{6 Re beta + 2}, well inside adaptive-quadrature territory for
    Re beta > -1/2.
    """
    def f(th):
        return eval_circle(s, th) * np.exp(-1j * k * th)

    # choose the map power so the worst singularity theta^{2 Re beta}
    # becomes at least u^2 (C^1 at the endpoint)
    p = 3
    if s.kind in _SINGULAR_CIRCLE:
        re = complex(s.beta).real
        if s.kind is CircleKind.VBETA and re < 0.2:
            p = min(40, max(3, int(math.ceil(3.0 / (1.0 + 2.0 * re)))))
    u_hi = np.pi ** (1.0 / p)
    u_lo = 1e-6  # stub below u_lo is O(u_lo^2) by the choice of p
    # second half parametrized as theta = 2 pi - u^p; evaluating the symbol
    # at -u^p and the phase as e^{+i k u^p} (integer k) avoids the rounding
    # of 2 pi - tiny to 2 pi
    parts = (
        lambda u: f(u**p) * p * u ** (p - 1),
        lambda u: eval_circle(s, -(u**p)) * np.exp(1j * k * u**p) * p * u ** (p - 1),
    )
    total = 0.0 + 0.0j
    err = 0.0
    for g in parts:
        vr, er = quad(lambda u: float(np.real(g(u))), u_lo, u_hi,
                      limit=400, epsabs=tol / 8, epsrel=1e-13)
        vi, ei = quad(lambda u: float(np.imag(g(u))), u_lo, u_hi,
                      limit=400, epsabs=tol / 8, epsrel=1e-13)
        total += vr + 1j * vi
        err += er + ei
    if err > tol * 2 * np.pi:
        raise QuadFailure(f"coefficient quadrature error estimate {err:.2e} above tolerance")
    return complex(total / (2.0 * np.pi))


# ---------------------------------------------------------------------------
# Line kernels: k(x) = (1/2pi) int (s(xi) - 1) e^{-i xi x} d xi
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CutKernel:
    """One-sided exponential representation k(w) = sum_q W_q e^{-eta_q w}.

    Obtained by deforming the Fourier integral onto the branch cut
    [i eps, i]; `pos` applies for w > 0 and `neg` for w < 0 (they differ
    for the jump symbols, coincide for even ones).
    """

    eta: np.ndarray
    w_pos: np.ndarray
    w_neg: np.ndarray

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.empty(x.shape, dtype=self.w_pos.dtype)
        pos = x >= 0
        out[pos] = np.exp(-np.multiply.outer(x[pos], self.eta)) @ self.w_pos
        out[~pos] = np.exp(np.multiply.outer(x[~pos], self.eta)) @ self.w_neg
        return out


def _cut_eta_rule(eps: float, nodes: int, levels_lo: int, levels_hi: int) -> QuadRule:
    return gauss_rule(nodes, (eps, 1.0), grading=("geometric", levels_lo, levels_hi))


def cut_kernel(s: LineSymbol, nodes: int = 12, levels: Optional[int] = None) -> CutKernel:
    """Build the branch-cut representation of the kernel of a line symbol.

    The algebraic weight on the cut follows from the jump of the symbol
    across [i eps, i]; endpoint behavior (eta - eps)^{+-beta}, (1-eta)^{-+beta}
    is resolved by geometrically graded panels.
    """
    b = complex(s.beta)
    if s.kind is LineKind.PHI:
        raise DomainError("sech symbol kernel is closed-form; use kernel_line")
    if s.kind not in (LineKind.VHAT_EPS, LineKind.UHAT_EPS):
        raise DomainError(f"no integrable kernel for symbol kind {s.kind}")
    eps = s.eps
    if levels is None:
        levels = max(40, int(np.ceil(-np.log2(max(eps, 1e-14)))) + 28)
    rule = _cut_eta_rule(eps, nodes, levels, 24)
    eta = rule.nodes
    wq = rule.weights
    if s.kind is LineKind.VHAT_EPS:
        g = ((eta**2 - eps**2) / (1.0 - eta**2)) ** b
        w_pos = -np.sin(np.pi * b) / np.pi * wq * g
        w_neg = w_pos
    else:  # UHAT_EPS
        g = ((1.0 + eta) * (eta - eps) / ((1.0 - eta) * (eta + eps)))
        w_pos = -np.sin(np.pi * b) / np.pi * wq * g**b
        w_neg = np.sin(np.pi * b) / np.pi * wq * g**(-b)
    return CutKernel(eta, w_pos, w_neg)


def kernel_line(s: LineSymbol, x, nodes: int = 12):
    """Kernel value k(x) of a line symbol (scalar or array x).

    PHI uses the closed form -(sin pi b)/(2 pi) sech(x/2); the regularized
    kinds integrate over the branch cut.
    """
    b = complex(s.beta)
    if b == 0:
        return np.zeros_like(np.asarray(x, dtype=float), dtype=complex) if np.ndim(x) else 0.0
    if s.kind is LineKind.PHI:
        xv = np.asarray(x, dtype=float)
        val = -np.sin(np.pi * b) / (2 * np.pi) / np.cosh(xv / 2.0)
        return val if np.ndim(x) else complex(val)
    if s.kind in (LineKind.VHAT, LineKind.UHAT):
        raise DomainError(f"symbol kind {s.kind} has no integrable kernel (s-1 not L^1)")
    ker = cut_kernel(s, nodes=nodes)
    val = ker(np.atleast_1d(np.asarray(x, dtype=float)))
    return val if np.ndim(x) else complex(val[0])
