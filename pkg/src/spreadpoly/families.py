"""Classical weight families and the Rényi order type.

A :class:`Family` names one of the three classical orthogonality weights

* Hermite   ``exp(-x^2)`` on (-inf, +inf),
* Laguerre  ``x^alpha exp(-x)`` on [0, +inf), alpha > -1,
* Jacobi    ``(1-x)^alpha (1+x)^beta`` on [-1, +1], alpha, beta > -1,

and is the key under which every other module looks up recurrence
coefficients, quadrature rules and closed-form measures.  Parameters are
stored as Python floats (exact binary values), so converting them to mpf
at any working precision is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .context import ParameterError

__all__ = ["Family", "RenyiOrder", "HERMITE", "LAGUERRE", "JACOBI"]

HERMITE = "hermite"
LAGUERRE = "laguerre"
JACOBI = "jacobi"

_KINDS = (HERMITE, LAGUERRE, JACOBI)


@dataclass(frozen=True)
class Family:
    """One classical weight: kind tag plus its exponent parameters."""

    kind: str
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")
        if self.kind == HERMITE and (self.alpha != 0.0 or self.beta != 0.0):
            raise ParameterError("hermite takes no parameters")
        if self.kind in (LAGUERRE, JACOBI) and not self.alpha > -1:
            raise ParameterError("alpha must exceed -1")
        if self.kind == LAGUERRE and self.beta != 0.0:
            raise ParameterError("laguerre takes a single parameter alpha")
        if self.kind == JACOBI and not self.beta > -1:
            raise ParameterError("beta must exceed -1")

    @classmethod
    def hermite(cls) -> "Family":
        return cls(HERMITE)

    @classmethod
    def laguerre(cls, alpha: float) -> "Family":
        return cls(LAGUERRE, float(alpha))

    @classmethod
    def jacobi(cls, alpha: float, beta: float) -> "Family":
        return cls(JACOBI, float(alpha), float(beta))

    @property
    def interval(self):
        """Orthogonality interval as a pair (mpf or +-inf endpoints)."""
        if self.kind == HERMITE:
            return (mp.ninf, mp.inf)
        if self.kind == LAGUERRE:
            return (mp.mpf(0), mp.inf)
        return (mp.mpf(-1), mp.mpf(1))

    def weight(self, x):
        """Pointwise weight value at x (mpf arithmetic)."""
        x = mp.mpf(x)
        if self.kind == HERMITE:
            return mp.exp(-x * x)
        if self.kind == LAGUERRE:
            if x == 0:
                return mp.mpf(0) ** mp.mpf(self.alpha) if self.alpha != 0 else mp.mpf(1)
            return x ** mp.mpf(self.alpha) * mp.exp(-x)
        one = mp.mpf(1)
        return (one - x) ** mp.mpf(self.alpha) * (one + x) ** mp.mpf(self.beta)

    def log_weight(self, x):
        """ln(weight) at x; -inf/+inf at singular endpoints."""
        x = mp.mpf(x)
        if self.kind == HERMITE:
            return -x * x
        if self.kind == LAGUERRE:
            return mp.mpf(self.alpha) * mp.log(x) - x
        return mp.mpf(self.alpha) * mp.log(1 - x) + mp.mpf(self.beta) * mp.log(1 + x)

    def describe(self) -> str:
        if self.kind == HERMITE:
            return "hermite"
        if self.kind == LAGUERRE:
            return f"laguerre(alpha={self.alpha:g})"
        return f"jacobi(alpha={self.alpha:g}, beta={self.beta:g})"


@dataclass(frozen=True)
class RenyiOrder:
    """Rényi order q stored through two_q = 2q (a positive integer).

    q = 1 (two_q = 2) is a legal *order* — power integrals are defined
    there and must equal 1 — but length computations reject it.
    """

    two_q: int

    def __post_init__(self) -> None:
        if not isinstance(self.two_q, int) or self.two_q < 1:
            raise ParameterError("2q must be a positive integer")

    @classmethod
    def from_q(cls, q) -> "RenyiOrder":
        """Accept q as int, Fraction, float or string ('2', '3/2', '1.5')."""
        if isinstance(q, RenyiOrder):
            return q
        frac = Fraction(q)
        two_q = 2 * frac
        if two_q.denominator != 1:
            raise ParameterError(f"2q must be an integer; got q={q}")
        return cls(int(two_q))

    @property
    def q(self) -> Fraction:
        return Fraction(self.two_q, 2)

    @property
    def is_unit(self) -> bool:
        """True for q=1, where the length exponent is undefined."""
        return self.two_q == 2

    def q_mpf(self):
        return mp.mpf(self.two_q) / 2

    def length_exponent(self):
        """-1/(q-1), the power turning the integral into a length."""
        if self.is_unit:
            raise ParameterError("Renyi length undefined at q=1")
        return mp.mpf(-2) / (self.two_q - 2)

    def __str__(self) -> str:
        q = self.q
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
