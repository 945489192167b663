"""Orthonormal classical polynomials: recurrence, coefficients, zeros.

Everything here is phrased for the *orthonormal* normalization
``integral p_n p_m w = delta_{nm}``, through the symmetric three-term
recurrence

    x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1},   b_k > 0.

The recurrence coefficients of the three classical weights are standard
(see e.g. Gautschi, "Orthogonal Polynomials: Computation and
Approximation", or the NIST DLMF chapter 18) after rescaling the
classical normalizations to unit norm.

Two evaluation routes are provided — the stable recurrence and direct
monomial (Horner) summation over explicit coefficients — so each can
audit the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from mpmath import mp
from scipy.linalg import eigh_tridiagonal

from .context import ParameterError, PrecisionContext, agrees, cancellation_clamp
from .families import HERMITE, JACOBI, LAGUERRE, Family

__all__ = [
    "PolyCoeffs",
    "recurrence_coeffs",
    "orthonormal_coeffs",
    "coeffs_from_recurrence",
    "evaluate",
    "evaluate_monomial",
    "evaluate_with_derivative",
    "rakhmanov_density",
    "zeros",
]

_DEFAULT_CTX = PrecisionContext()


@dataclass(frozen=True)
class PolyCoeffs:
    """Monomial coefficients c_0..c_n of the orthonormal polynomial p_n."""

    family: Family
    degree: int
    coeffs: tuple

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.degree + 1:
            raise ParameterError("coefficient vector must have length degree+1")
        if self.coeffs[-1] == 0:
            raise ParameterError("leading coefficient must be nonzero")


def raw_recurrence(kind: str, alpha, beta, count: int):
    """(a_k, b_k) for k < count, as mpf at the active precision.

    ``alpha``/``beta`` may be any reals > -1 (quadrature uses shifted,
    non-integer parameters).  b_0 is returned as 0: it multiplies the
    nonexistent p_{-1}.
    """
    a = mp.mpf(alpha)
    b = mp.mpf(beta)
    if kind != HERMITE and not a > -1:
        raise ParameterError("alpha must exceed -1")
    if kind == JACOBI and not b > -1:
        raise ParameterError("beta must exceed -1")
    diag, off = [], []
    for k in range(count):
        km = mp.mpf(k)
        if kind == HERMITE:
            diag.append(mp.mpf(0))
            off.append(mp.sqrt(km / 2))
        elif kind == LAGUERRE:
            diag.append(2 * km + a + 1)
            off.append(mp.sqrt(km * (km + a)))
        else:
            s = 2 * km + a + b
            if k == 0:
                diag.append((b - a) / (a + b + 2))
                off.append(mp.mpf(0))
            else:
                diag.append((b * b - a * a) / (s * (s + 2)))
                if k == 1:
                    # limit form: the generic b_1^2 is 0/0 at alpha+beta = -1
                    off.append(2 * mp.sqrt((1 + a) * (1 + b) / (3 + a + b)) / (2 + a + b))
                else:
                    off.append(
                        2
                        * mp.sqrt(km * (km + a) * (km + b) * (km + a + b) / (s * s - 1))
                        / s
                    )
    return diag, off


def recurrence_coeffs(family: Family, n: int) -> list:
    """[(a_0, b_0), ..., (a_n, b_n)] for the orthonormal recurrence."""
    if n < 0:
        raise ParameterError("degree must be nonnegative")
    diag, off = raw_recurrence(family.kind, family.alpha, family.beta, n + 1)
    return list(zip(diag, off))


def _leading_positive(coeffs: list) -> tuple:
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs)


def _explicit_coeffs(family: Family, n: int) -> tuple:
    """Explicit monomial coefficients at the active precision."""
    kind = family.kind
    a = mp.mpf(family.alpha)
    b = mp.mpf(family.beta)
    if kind == HERMITE:
        norm = mp.sqrt(mp.power(2, n) * mp.factorial(n) * mp.sqrt(mp.pi))
        c = []
        for t in range(n + 1):
            if (n - t) % 2:
                c.append(mp.mpf(0))
            else:
                sign = -1 if ((3 * n - t) // 2) % 2 else 1
                c.append(
                    sign
                    * mp.factorial(n)
                    * mp.power(2, t)
                    / (norm * mp.factorial((n - t) // 2) * mp.factorial(t))
                )
        return _leading_positive(c)
    if kind == LAGUERRE:
        norm = mp.sqrt(mp.gamma(n + a + 1) / mp.factorial(n))
        c = [
            (-1 if t % 2 else 1) * norm * mp.binomial(n, t) / mp.gamma(a + t + 1)
            for t in range(n + 1)
        ]
        return _leading_positive(c)
    # Group Gamma(a+b+n+1+i)/Gamma(a+b+n+1) as the rising factorial
    # (s0)_i so the n=0, a+b=-1 cell (Gamma(0)/Gamma(0), finite limit)
    # never evaluates a pole.  At n=0 the leftover (2n+a+b+1)*Gamma(s0)
    # collapses exactly to Gamma(a+b+2).
    s0 = a + b + n + 1
    if n == 0:
        front = mp.gamma(a + b + 2)
    else:
        front = (2 * n + a + b + 1) * mp.gamma(s0)
    norm = mp.sqrt(
        mp.gamma(a + n + 1)
        * front
        / (mp.factorial(n) * mp.power(2, a + b + 1) * mp.gamma(n + b + 1))
    )
    poch = [mp.mpf(1)] * (n + 1)
    for i in range(n):
        poch[i + 1] = poch[i] * (s0 + i)
    c = []
    for t in range(n + 1):
        terms = []
        for i in range(t, n + 1):
            term = (
                mp.binomial(n, i)
                * mp.binomial(i, t)
                * poch[i]
                / (mp.power(2, i) * mp.gamma(a + i + 1))
            )
            terms.append(-term if (i - t) % 2 else term)
        # a == b zeroes alternate coefficients exactly; snap the noise
        acc = cancellation_clamp(mp.fsum(terms), terms, mp.prec)
        c.append(norm * acc)
    return _leading_positive(c)


def orthonormal_coeffs(
    family: Family, n: int, ctx: PrecisionContext = _DEFAULT_CTX
) -> PolyCoeffs:
    """Explicit coefficients, accepted once two precisions agree.

    The alternating inner sum of the Jacobi display cancels severely at
    large n, hence the escalation loop.
    """
    if n < 0:
        raise ParameterError("degree must be nonnegative")
    bits = ctx.bits
    with mp.workprec(bits):
        prev = _explicit_coeffs(family, n)
    for _ in range(ctx.max_escalations + 1):
        bits *= 2
        with mp.workprec(bits):
            cur = _explicit_coeffs(family, n)
        if all(agrees(p, c, ctx.rel_tol) for p, c in zip(prev, cur)):
            with mp.workprec(ctx.bits):
                out = tuple(+c for c in cur)
            return PolyCoeffs(family, n, out)
        prev = cur
    raise ParameterError(
        f"coefficients failed to stabilise for {family.describe()}, n={n}"
    )


def coeffs_from_recurrence(
    family: Family, n: int, ctx: PrecisionContext = _DEFAULT_CTX
) -> PolyCoeffs:
    """Monomial coefficients built by running the recurrence symbolically."""
    with mp.workprec(ctx.bits):
        diag, off = raw_recurrence(family.kind, family.alpha, family.beta, n + 1)
        mu0 = _norm_constant(family)
        prev = [mp.mpf(0)] * (n + 1)
        cur = [mp.mpf(0)] * (n + 1)
        cur[0] = 1 / mp.sqrt(mu0)
        for k in range(n):
            nxt = [mp.mpf(0)] * (n + 1)
            for j in range(k + 1):
                nxt[j + 1] += cur[j]
                nxt[j] -= diag[k] * cur[j]
                nxt[j] -= off[k] * prev[j]
            nxt = [v / off[k + 1] for v in nxt]
            prev, cur = cur, nxt
        return PolyCoeffs(family, n, tuple(cur[: n + 1]))


def _norm_constant(family: Family):
    """Zeroth weight moment (integral of the bare weight over the interval)."""
    a = mp.mpf(family.alpha)
    b = mp.mpf(family.beta)
    if family.kind == HERMITE:
        return mp.sqrt(mp.pi)
    if family.kind == LAGUERRE:
        return mp.gamma(a + 1)
    return (
        mp.power(2, a + b + 1) * mp.gamma(a + 1) * mp.gamma(b + 1) / mp.gamma(a + b + 2)
    )


def evaluate(p: PolyCoeffs, x):
    """p_n(x) by the stable recurrence (coefficients are not used)."""
    return evaluate_recurrence(p.family, p.degree, x)


def evaluate_recurrence(family: Family, n: int, x):
    x = mp.mpf(x)
    diag, off = raw_recurrence(family.kind, family.alpha, family.beta, n + 1)
    pkm1 = mp.mpf(0)
    pk = 1 / mp.sqrt(_norm_constant(family))
    for k in range(n):
        pk, pkm1 = ((x - diag[k]) * pk - off[k] * pkm1) / off[k + 1], pk
    return pk


def evaluate_with_derivative(family: Family, n: int, x):
    """(p_n(x), p_n'(x)), both by recurrence."""
    x = mp.mpf(x)
    diag, off = raw_recurrence(family.kind, family.alpha, family.beta, n + 1)
    pkm1, dkm1 = mp.mpf(0), mp.mpf(0)
    pk = 1 / mp.sqrt(_norm_constant(family))
    dk = mp.mpf(0)
    for k in range(n):
        pk1 = ((x - diag[k]) * pk - off[k] * pkm1) / off[k + 1]
        dk1 = ((x - diag[k]) * dk + pk - off[k] * dkm1) / off[k + 1]
        pk, pkm1 = pk1, pk
        dk, dkm1 = dk1, dk
    return pk, dk


def evaluate_monomial(p: PolyCoeffs, x):
    """Horner summation of the stored coefficients (audit route)."""
    x = mp.mpf(x)
    acc = mp.mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def rakhmanov_density(family: Family, n: int, x):
    """Density p_n(x)^2 w(x); may be +inf at a singular endpoint."""
    x = mp.mpf(x)
    w = family.weight(x)
    if not mp.isfinite(w):
        return w
    v = evaluate_recurrence(family, n, x)
    return v * v * w


def zeros_raw(kind: str, alpha, beta, n: int, bits: int) -> list:
    """Zeros of the degree-n orthonormal polynomial for a raw weight.

    Float64 eigenvalues of the symmetric tridiagonal recurrence matrix
    seed an mpf Newton polish; symmetric weights get exactly mirrored
    nodes so parity cancellations are exact downstream.
    """
    if n < 1:
        return []
    with mp.workprec(bits + 20):
        diag, off = raw_recurrence(kind, alpha, beta, n + 1)
        d64 = np.array([float(v) for v in diag[:n]])
        e64 = np.array([float(v) for v in off[1:n]])
        try:
            seeds = eigh_tridiagonal(d64, e64, eigvals_only=True)
        except Exception as exc:  # pragma: no cover - LAPACK failure surface
            raise ParameterError(f"eigenvalue solve failed: {exc}") from exc

        def poly_pair(x):
            pkm1, dkm1 = mp.mpf(0), mp.mpf(0)
            pk, dk = mp.mpf(1), mp.mpf(0)
            for k in range(n):
                pk1 = ((x - diag[k]) * pk - off[k] * pkm1) / off[k + 1]
                dk1 = ((x - diag[k]) * dk + pk - off[k] * dkm1) / off[k + 1]
                pk, pkm1, dk, dkm1 = pk1, pk, dk1, dk
            return pk, dk

        out = []
        for s in seeds:
            z = mp.mpf(float(s))
            for _ in range(64):
                v, dv = poly_pair(z)
                step = v / dv
                z -= step
                if abs(step) <= mp.eps * (1 + abs(z)) * 4:
                    break
            out.append(z)
        out.sort()
        symmetric = kind == HERMITE or (kind == JACOBI and alpha == beta)
        if symmetric:
            half = [(out[n - 1 - i] - out[i]) / 2 for i in range(n // 2)]
            mirrored = [-h for h in half]
            if n % 2:
                mirrored.append(mp.mpf(0))
            out = mirrored + [half[n // 2 - 1 - i] for i in range(n // 2)]
        for lo, hi in zip(out, out[1:]):
            if not lo < hi:
                raise ParameterError("zero polish produced non-increasing nodes")
        return [+z for z in out]


def zeros(family: Family, n: int, ctx: PrecisionContext = _DEFAULT_CTX) -> list:
    """The n simple zeros of p_n, strictly increasing, inside the interval."""
    if n < 1:
        raise ParameterError("zeros need degree >= 1")
    with mp.workprec(ctx.bits):
        zs = zeros_raw(family.kind, family.alpha, family.beta, n, ctx.bits)
        lo, hi = family.interval
        if zs and not (lo < zs[0] and zs[-1] < hi):
            raise ParameterError("computed zeros escaped the interval")
        return zs
