"""Closed-form stddev, Fisher information/length, Cramer-Rao products,
and moments, against hand-derived values and the numeric routes."""

from fractions import Fraction

import pytest
from mpmath import mp

from spreadpoly.context import ParameterError, PrecisionContext
from spreadpoly.families import Family
from spreadpoly.closed_form import (
    asymptotic_cramer_rao,
    cramer_rao_product,
    fisher_information,
    fisher_information_numeric,
    fisher_length,
    fisher_truncated,
    laguerre_real_moment,
    moment,
    moment_quadrature,
    stddev,
)

CTX = PrecisionContext()
TIGHT = mp.mpf(1e-70)


def test_stddev_hermite_closed():
    with mp.workprec(CTX.bits):
        for n in (0, 1, 7, 30):
            assert abs(stddev(Family.hermite(), n, CTX) - mp.sqrt(n + mp.mpf(1) / 2)) < TIGHT


def test_stddev_laguerre_closed():
    with mp.workprec(CTX.bits):
        # <x> = 2n+alpha+1, <x^2> - <x>^2 = 2n^2 + 2(alpha+1)n + alpha + 1
        assert abs(stddev(Family.laguerre(0.0), 1, CTX) - mp.sqrt(5)) < TIGHT
        assert abs(stddev(Family.laguerre(2.0), 0, CTX) - mp.sqrt(3)) < TIGHT


def test_stddev_jacobi_frozen_and_limit():
    with mp.workprec(CTX.bits):
        # Legendre n=0: variance = b_1^2 = 1/3
        assert abs(stddev(Family.jacobi(0.0, 0.0), 0, CTX) - 1 / mp.sqrt(3)) < TIGHT
        # the large-n limit of the variance is 1/2 for every (alpha, beta)
        for fam in (Family.jacobi(0.0, 0.0), Family.jacobi(2.0, 5.0)):
            assert abs(stddev(fam, 400, CTX) - 1 / mp.sqrt(2)) < 1e-2


@pytest.mark.parametrize("n", [0, 1, 2, 9])
def test_stddev_matches_quadrature(n):
    fam = Family.jacobi(-0.5, 2.0)
    with mp.workprec(CTX.bits):
        m1 = moment_quadrature(fam, n, 1, CTX)
        m2 = moment_quadrature(fam, n, 2, CTX)
        orc = mp.sqrt(m2 - m1 * m1)
        assert abs(stddev(fam, n, CTX) - orc) < mp.mpf(1e-60)


def test_fisher_information_branches():
    with mp.workprec(CTX.bits):
        assert fisher_information(Family.hermite(), 3, CTX) == 14
        assert fisher_information(Family.laguerre(0.0), 3, CTX) == 13
        # alpha > 1 display: ((2n+1) alpha + 1) / (alpha^2 - 1)
        got = fisher_information(Family.laguerre(2.0), 3, CTX)
        assert abs(got - mp.mpf(15) / 3) < TIGHT
        assert fisher_information(Family.laguerre(0.5), 3, CTX) == mp.inf
        assert fisher_information(Family.laguerre(-0.5), 0, CTX) == mp.inf
        assert fisher_information(Family.jacobi(0.0, 0.0), 3, CTX) == 2 * 3 * 4 * 7
        assert fisher_information(Family.jacobi(0.5, 0.5), 2, CTX) == mp.inf


def test_fisher_reflection_symmetry():
    for n in (0, 1, 5):
        assert fisher_information(Family.jacobi(2.0, 0.0), n, CTX) == \
            fisher_information(Family.jacobi(0.0, 2.0), n, CTX)


def test_fisher_length_degenerate_cases():
    # uniform density (Legendre n=0): F = 0, infinite length
    assert fisher_information(Family.jacobi(0.0, 0.0), 0, CTX) == 0
    assert fisher_length(Family.jacobi(0.0, 0.0), 0, CTX) == mp.inf
    # divergent information: zero length
    assert fisher_length(Family.laguerre(0.5), 2, CTX) == 0


@pytest.mark.parametrize(
    "fam",
    [Family.hermite(), Family.laguerre(0.0), Family.jacobi(0.0, 2.0)],
)
def test_fisher_closed_matches_numeric(fam):
    F = fisher_information(fam, 4, CTX)
    Fn = fisher_information_numeric(fam, 4)
    assert abs(F - Fn) / F < 1e-9


def test_cramer_rao_product_hermite_is_half():
    with mp.workprec(CTX.bits):
        for n in (0, 1, 13, 30):
            assert abs(cramer_rao_product(Family.hermite(), n, CTX) - mp.mpf(1) / 2) < TIGHT


def test_asymptotic_cramer_rao_branches():
    r = asymptotic_cramer_rao(Family.hermite(), CTX)
    assert (float(r.coefficient), r.exponent) == (0.5, Fraction(0))
    r = asymptotic_cramer_rao(Family.laguerre(0.0), CTX)
    assert r.exponent == Fraction(1, 2)
    with mp.workprec(CTX.bits):
        assert abs(r.coefficient - 1 / mp.sqrt(2)) < TIGHT
    r = asymptotic_cramer_rao(Family.jacobi(0.0, 0.0), CTX)
    assert r.exponent == Fraction(-3, 2)
    with mp.workprec(CTX.bits):
        assert abs(r.coefficient - mp.power(2, mp.mpf(-3) / 2)) < TIGHT
    # divergent-F branch records a zero rate
    r = asymptotic_cramer_rao(Family.laguerre(0.5), CTX)
    assert r.coefficient == 0
    assert float(r.at(100)) == 0.0


def test_fisher_truncated_divergence_exhibit():
    lo = fisher_truncated(Family.laguerre(-0.5), 0, 1e-4)
    hi = fisher_truncated(Family.laguerre(-0.5), 0, 1e-6)
    assert hi / lo > 100
    with pytest.raises(ParameterError):
        fisher_truncated(Family.hermite(), 2, 1e-4)
    with pytest.raises(ParameterError):
        fisher_truncated(Family.laguerre(0.0), 2, 1e-4)


def test_hermite_moments_closed():
    with mp.workprec(CTX.bits):
        for k in (1, 3, 5, 7):
            assert moment(Family.hermite(), 4, k, CTX) == 0
        # ground state is the unit Gaussian with variance 1/2
        assert abs(moment(Family.hermite(), 0, 2, CTX) - mp.mpf(1) / 2) < TIGHT
        assert abs(moment(Family.hermite(), 0, 4, CTX) - mp.mpf(3) / 4) < TIGHT
        assert abs(moment(Family.hermite(), 0, 6, CTX) - mp.mpf(15) / 8) < TIGHT
        # <x^2> = n + 1/2 = stddev^2
        for n in (1, 6, 20):
            assert abs(moment(Family.hermite(), n, 2, CTX) - (n + mp.mpf(1) / 2)) < TIGHT


def test_laguerre_moments_closed():
    with mp.workprec(CTX.bits):
        # <x> = 2n + alpha + 1
        for n, a in ((0, 0.0), (3, 0.5), (7, 5.0)):
            got = moment(Family.laguerre(a), n, 1, CTX)
            assert abs(got - (2 * n + a + 1)) < TIGHT
        # rho_1 at alpha=0 is (1-x)^2 e^-x: <x^2> = 2 - 12 + 24 = 14
        assert abs(moment(Family.laguerre(0.0), 1, 2, CTX) - 14) < TIGHT


@pytest.mark.parametrize("k", [1, 2, 4, 8])
def test_moments_match_quadrature(k):
    for fam, n in ((Family.hermite(), 6), (Family.laguerre(2.5), 5)):
        want = moment_quadrature(fam, n, k, CTX)
        got = moment(fam, n, k, CTX)
        if got == 0:
            assert abs(want) < mp.mpf(1e-60)
        else:
            assert abs(got - want) / abs(want) < mp.mpf(1e-60)


def test_laguerre_real_moment_interpolates_integer_orders():
    with mp.workprec(CTX.bits):
        for b in (0, 1, 2):
            got = laguerre_real_moment(3, 0.5, b, CTX)
            want = moment(Family.laguerre(0.5), 3, b, CTX)
            assert abs(got - want) <= mp.mpf(1e-60) * max(1, abs(want))
        # non-integer order against direct adaptive integration
        got = laguerre_real_moment(2, 0.0, mp.mpf("0.5"), CTX)
        fam = Family.laguerre(0.0)
        from spreadpoly.orthopoly import evaluate_recurrence

        direct = mp.quad(
            lambda x: mp.sqrt(x) * evaluate_recurrence(fam, 2, x) ** 2 * mp.exp(-x),
            [0, 2, mp.inf],
        )
        assert abs(got - direct) < mp.mpf(1e-20)


def test_moment_rejects_bad_orders():
    with pytest.raises(ParameterError):
        moment(Family.hermite(), 2, -1, CTX)
    with pytest.raises(ParameterError):
        moment(Family.jacobi(0.0, 0.0), 2, 2, CTX)
