"""Gauss quadrature for (power-shifted) classical weights, plus adaptive
integration for logarithmically singular integrands.

Gauss rules are the *exact oracle* of the package: every polynomial-power
integral (density normalization, moments, Rényi power integrals) is
evaluated with a rule whose exactness degree covers the integrand, so the
oracle carries no truncation error — only rounding at working precision.

Construction follows Golub–Welsch: nodes are the eigenvalues of the
symmetric tridiagonal recurrence matrix.  Double-precision eigenvalues
serve only as seeds; each node is polished by an mpf Newton iteration and
weights come from the Christoffel function, ``w_i = 1 / sum_k p_k(x_i)^2``.

Two adaptive integrators serve the Shannon integrals:

* :func:`integrate_log_singular` — arbitrary-precision tanh-sinh panels
  (mpmath), the contract-level routine;
* :func:`tanh_sinh_panels` — a vectorized float64 tanh-sinh engine used
  as the throughput path for large-degree entropy sweeps with regular
  (nonnegative-exponent) weights.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np
from mpmath import mp

from .context import ParameterError, PrecisionContext, cancellation_clamp
from .families import HERMITE, JACOBI, LAGUERRE, Family, RenyiOrder
from .orthopoly import evaluate_recurrence, raw_recurrence, zeros_raw

__all__ = [
    "WeightSpec",
    "QuadratureRule",
    "NonIntegrableError",
    "QuadratureError",
    "gauss_rule",
    "weight_moment",
    "integrate_density_power",
    "integrate_log_singular",
    "tanh_sinh_panels",
    "merge_points",
]

_DEFAULT_CTX = PrecisionContext()


class NonIntegrableError(ParameterError):
    """Requested power integral diverges (shifted exponent <= -1)."""


class QuadratureError(ArithmeticError):
    """Adaptive integration failed to reach the requested tolerance."""


@dataclass(frozen=True)
class WeightSpec:
    """A classical weight, possibly with shifted exponents and a rate.

    hermite:  exp(-scale x^2)            on (-inf, inf)
    laguerre: x^alpha exp(-scale x)      on [0, inf),  alpha > -1
    jacobi:   (1-x)^alpha (1+x)^beta     on [-1, 1],   alpha, beta > -1
    """

    kind: str
    alpha: float = 0.0
    beta: float = 0.0
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in (HERMITE, LAGUERRE, JACOBI):
            raise ParameterError(f"unknown weight kind {self.kind!r}")
        if self.scale <= 0:
            raise ParameterError("scale must be positive")
        if self.kind == JACOBI and self.scale != 1.0:
            raise ParameterError("jacobi weight takes no scale")
        if self.kind in (LAGUERRE, JACOBI) and not self.alpha > -1:
            raise NonIntegrableError(f"exponent alpha={self.alpha} not integrable")
        if self.kind == JACOBI and not self.beta > -1:
            raise NonIntegrableError(f"exponent beta={self.beta} not integrable")

    @classmethod
    def from_family(cls, family: Family) -> "WeightSpec":
        return cls(family.kind, family.alpha, family.beta)

    @classmethod
    def power(cls, family: Family, q) -> "WeightSpec":
        """Spec for w^q: Gaussian scale q / Laguerre (alpha q, rate q) /
        Jacobi (alpha q, beta q)."""
        qf = float(q)
        if family.kind == HERMITE:
            return cls(HERMITE, scale=qf)
        if family.kind == LAGUERRE:
            return cls(LAGUERRE, alpha=family.alpha * qf, scale=qf)
        return cls(JACOBI, alpha=family.alpha * qf, beta=family.beta * qf)


@dataclass(frozen=True)
class QuadratureRule:
    spec: WeightSpec
    nodes: tuple
    weights: tuple
    exact_degree: int

    def apply(self, f):
        return mp.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))


@functools.lru_cache(maxsize=None)
def _standard_rule(kind: str, alpha: float, beta: float, m: int, bits: int):
    """Unit-scale rule: nodes/weights as mpf tuples at `bits` precision."""
    with mp.workprec(bits + 20):
        nodes = zeros_raw(kind, alpha, beta, m, bits)
        diag, off = raw_recurrence(kind, alpha, beta, m + 1)
        mu0 = _weight_moment_impl(WeightSpec(kind, alpha, beta), 0)
        c0 = 1 / mp.sqrt(mu0)
        weights = []
        for x in nodes:
            pkm1 = mp.mpf(0)
            pk = c0
            acc = pk * pk
            for k in range(m - 1):
                pk, pkm1 = ((x - diag[k]) * pk - off[k] * pkm1) / off[k + 1], pk
                acc += pk * pk
            weights.append(1 / acc)
        return tuple(nodes), tuple(weights)


def gauss_rule(
    spec: WeightSpec, m: int, ctx: PrecisionContext = _DEFAULT_CTX
) -> QuadratureRule:
    """m-node Gauss rule for the given weight, exact to degree 2m-1."""
    if m < 1:
        raise ParameterError("rule needs at least one node")
    nodes, weights = _standard_rule(spec.kind, spec.alpha, spec.beta, m, ctx.bits)
    with mp.workprec(ctx.bits + 20):
        if spec.scale != 1.0:
            s = mp.mpf(spec.scale)
            if spec.kind == HERMITE:
                r = mp.sqrt(s)
                nodes = tuple(x / r for x in nodes)
                weights = tuple(w / r for w in weights)
            else:
                factor = mp.power(s, -(mp.mpf(spec.alpha) + 1))
                nodes = tuple(x / s for x in nodes)
                weights = tuple(w * factor for w in weights)
        for w in weights:
            if not w > 0:
                raise ParameterError("nonpositive quadrature weight")
        for lo, hi in zip(nodes, nodes[1:]):
            if not lo < hi:
                raise ParameterError("nodes not strictly increasing")
    return QuadratureRule(spec, nodes, weights, 2 * m - 1)


def _weight_moment_impl(spec: WeightSpec, j: int):
    a = mp.mpf(spec.alpha)
    b = mp.mpf(spec.beta)
    s = mp.mpf(spec.scale)
    if spec.kind == HERMITE:
        if j % 2:
            return mp.mpf(0)
        return mp.gamma((j + 1) / mp.mpf(2)) / mp.power(s, (j + 1) / mp.mpf(2))
    if spec.kind == LAGUERRE:
        return mp.gamma(a + j + 1) / mp.power(s, a + j + 1)
    acc = mp.mpf(0)
    for i in range(j + 1):
        term = (
            mp.binomial(j, i)
            * mp.power(-2, i)
            * mp.gamma(a + i + 1)
            * mp.gamma(b + 1)
            / mp.gamma(a + b + i + 2)
        )
        acc += term
    return mp.power(2, a + b + 1) * acc


def weight_moment(spec: WeightSpec, j: int, ctx: PrecisionContext = _DEFAULT_CTX):
    """Closed-form integral of x^j against the weight (Gamma expressions)."""
    if j < 0:
        raise ParameterError("moment order must be nonnegative")
    with mp.workprec(ctx.bits):
        return +_weight_moment_impl(spec, j)


def integrate_density_power(
    family: Family, n: int, q, ctx: PrecisionContext = _DEFAULT_CTX
):
    """Signed power integral  W_q = integral p_n^{2q} w^q  via an exact rule.

    2q must be a positive integer; the integrand p^{2q} w^q is then a
    polynomial of degree 2nq against the shifted weight w^q, integrated
    with a rule of covering exactness.  Equals integral rho^q whenever 2q
    is even, and returns 1 at q=1.
    """
    order = RenyiOrder.from_q(q) if not isinstance(q, RenyiOrder) else q
    spec = WeightSpec.power(family, order.q)
    deg = n * order.two_q
    rule = gauss_rule(spec, deg // 2 + 1, ctx)
    with mp.workprec(ctx.bits + 20):
        total = []
        for x, w in zip(rule.nodes, rule.weights):
            v = evaluate_recurrence(family, n, x)
            total.append(w * mp.power(v, order.two_q))
        return +cancellation_clamp(mp.fsum(total), total, ctx.bits + 20)


def merge_points(points, tol=1e-12):
    """Sort and deduplicate panel boundaries (gap <= tol collapses)."""
    pts = sorted(mp.mpf(p) for p in points)
    out = [pts[0]]
    for p in pts[1:]:
        if p - out[-1] > tol:
            out.append(p)
    return out


def integrate_log_singular(
    f,
    interval,
    split_points,
    ctx: PrecisionContext = _DEFAULT_CTX,
    *,
    abs_floor=0,
    max_degree: int = 8,
):
    """Adaptive tanh-sinh integration with panel splits at singular points.

    Returns ``(value, est_error)``.  Acceptance: est_error <=
    rel_tol*|value| + abs_floor, retried at doubled precision up to the
    context's escalation budget before raising :class:`QuadratureError`.
    Infinite endpoints are handled by the double-exponential variable
    transform of the underlying integrator.
    """
    lo, hi = interval
    inner = [p for p in split_points if lo < p < hi]
    pts = [lo] + merge_points(inner) + [hi] if inner else [lo, hi]
    bits = ctx.bits
    for _ in range(ctx.max_escalations + 1):
        with mp.workprec(bits):
            val, err = mp.quad(f, pts, error=True, maxdegree=max_degree)
            if err <= ctx.rel_tol * abs(val) + abs_floor:
                return +val, +err
        bits *= 2
    raise QuadratureError(
        f"integral failed to reach tolerance (last estimate {mp.nstr(err)})"
    )


# ---------------------------------------------------------------------------
# Vectorized float64 tanh-sinh engine
# ---------------------------------------------------------------------------

_TMAX = 4.0


def _panel_nodes(level: int):
    """Abscissas t and level spacing h for the refinement level."""
    h = 2.0 ** (1 - level) if level else 1.0
    if level == 0:
        k = np.arange(-int(_TMAX), int(_TMAX) + 1, dtype=float)
        return k, 1.0
    h = 2.0**-level
    kmax = int(_TMAX / h)
    k = np.arange(1, kmax + 1, 2, dtype=float) * h
    return np.concatenate([-k[::-1], k]), h


def tanh_sinh_panels(fpanel, points, *, tol=1e-10, max_level=9):
    """Integrate a panel-aware vectorized integrand over [points[0], points[-1]].

    ``fpanel(i, a, b, x, dl, dr)`` receives the panel index, its endpoints
    and float64 arrays of abscissas plus distances to the panel endpoints
    (computed in a cancellation-free way, so ``a + dl == x == b - dr`` holds
    to full relative accuracy even within 1e-300 of an endpoint).  It must
    return the integrand values as a float64 array.

    Returns ``(value, est_error)`` as floats.
    """
    pts = [float(p) for p in points]
    if len(pts) == 2 and np.isinf(pts[0]) and np.isinf(pts[1]):
        pts = [pts[0], 0.0, pts[1]]
    panels = list(zip(pts[:-1], pts[1:]))
    totals = np.zeros(len(panels))
    prev_totals = np.full(len(panels), np.nan)
    magnitude = 0.0
    est = np.inf
    for level in range(0, max_level + 1):
        t, h = _panel_nodes(level)
        u = 0.5 * np.pi * np.sinh(t)
        cosh_t = np.cosh(t)
        contrib = np.zeros(len(panels))
        for i, (a, b) in enumerate(panels):
            if np.isinf(a) or np.isinf(b):
                # exp-sinh map from the finite endpoint
                d = np.exp(u)
                w = 0.5 * np.pi * cosh_t * d
                if np.isinf(b):
                    x = a + d
                    vals = fpanel(i, a, b, x, d, np.full_like(x, np.inf))
                else:
                    x = b - d
                    vals = fpanel(i, a, b, x, np.full_like(x, np.inf), d)
            else:
                half = 0.5 * (b - a)
                mid = 0.5 * (a + b)
                # 1 +- tanh(u), computed without cancellation
                e2u = np.exp(-2.0 * np.abs(u))
                near = 2.0 * e2u / (1.0 + e2u)      # 1 - |tanh u|
                far = 2.0 / (1.0 + e2u)             # 1 + |tanh u|
                dl = half * np.where(u < 0, near, far)
                dr = half * np.where(u < 0, far, near)
                x = np.where(u < 0, a + dl, b - dr)
                w = half * 0.5 * np.pi * cosh_t / np.cosh(u) ** 2
                vals = fpanel(i, a, b, x, dl, dr)
            vals = np.where(np.isfinite(vals), vals, 0.0)
            contrib[i] = np.dot(w, vals)
            magnitude += h * float(np.dot(w, np.abs(vals)))
        if level == 0:
            totals = contrib.copy()
        else:
            prev_totals = totals.copy()
            totals = totals / 2.0 + h * contrib
            est = float(np.sum(np.abs(totals - prev_totals)))
            if level >= 3 and est <= tol / 8.0:
                break
    floor = 5e-16 * magnitude
    return float(np.sum(totals)), max(est, floor)
