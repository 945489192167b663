"""Bell-route power integrals and Renyi lengths: partition identities,
polynomial powers, frozen point values, signs, and exact zeros."""

import pytest
from mpmath import mp

from spreadpoly.context import ParameterError, PrecisionContext
from spreadpoly.families import Family, RenyiOrder
from spreadpoly.bell import (
    jacobi_power_moment,
    length_from_power_integral,
    partial_bell,
    partial_bell_enumerated,
    polynomial_power_coeffs,
    renyi_length_bell,
    renyi_power_integral_bell,
)
from spreadpoly.quadrature import integrate_density_power

CTX = PrecisionContext()
TIGHT = mp.mpf(1e-65)


def test_partial_bell_frozen_values():
    # B_{3,2}(x1,x2) = 3 x1 x2 ; B_{4,2}(x1,x2,x3) = 4 x1 x3 + 3 x2^2
    assert partial_bell(3, 2, [1, 1, 1]) == 3
    assert partial_bell(4, 2, [1, 1, 1]) == 7
    assert partial_bell(4, 2, [2, 5, 1]) == 4 * 2 * 1 + 3 * 25
    assert partial_bell(5, 1, [0, 0, 0, 0, 9]) == 9
    assert partial_bell(4, 4, [3]) == 81  # x1^4


@pytest.mark.parametrize("m,l", [(4, 2), (6, 3), (7, 2), (8, 5)])
def test_partial_bell_matches_enumeration(m, l):
    args = [mp.mpf(v) for v in (1.5, -0.25, 2.0, 0.5, -1.0, 3.0, 0.75)]
    a = partial_bell(m, l, args)
    b = partial_bell_enumerated(m, l, args)
    assert abs(a - b) <= TIGHT * max(1, abs(b))


def test_polynomial_power_coeffs():
    # (1 + 2x)^3 = 1 + 6x + 12x^2 + 8x^3
    got = polynomial_power_coeffs([mp.mpf(1), mp.mpf(2)], 3)
    assert [int(c) for c in got] == [1, 6, 12, 8]
    # p^1 is the identity, p^0 is 1
    got = polynomial_power_coeffs([mp.mpf(3), mp.mpf(-1), mp.mpf(4)], 1)
    assert [float(c) for c in got] == [3.0, -1.0, 4.0]
    assert [float(c) for c in polynomial_power_coeffs([mp.mpf(3), mp.mpf(2)], 0)] == [1.0]


def test_polynomial_power_matches_numpy():
    import numpy.polynomial.polynomial as npoly

    cs = [0.3, -1.2, 0.0, 2.5]
    want = npoly.polypow(cs, 4)
    got = polynomial_power_coeffs([mp.mpf(c) for c in cs], 4)
    assert len(got) == len(want)
    for g, w in zip(got, want):
        assert abs(float(g) - w) < 1e-10 * max(1.0, abs(w))


def test_jacobi_power_moment_against_quadrature():
    # integral_{-1}^{1} x^k (1-x)^{q a} (1+x)^{q b} dx
    with mp.workprec(CTX.bits):
        for k, q, a, b in ((0, 2, 0.5, 0.5), (3, 2, 2.0, 5.0), (5, mp.mpf(3) / 2, -0.5, 2.0)):
            got = jacobi_power_moment(k, q, a, b)
            direct = mp.quad(
                lambda x: x**k * (1 - x) ** (q * a) * (1 + x) ** (q * b), [-1, 1]
            )
            # mp.quad stalls near 1e-19 on the singular-exponent cell
            assert abs(got - direct) < mp.mpf(1e-15) * max(1, abs(direct))


@pytest.mark.parametrize(
    "family",
    [Family.hermite(), Family.laguerre(1.5), Family.jacobi(0.5, 2.0)],
)
def test_power_integral_is_one_at_unit_order(family):
    W = renyi_power_integral_bell(family, 3, RenyiOrder(2), CTX)
    assert abs(W - 1) < TIGHT


def test_power_integral_gaussian_frozen():
    with mp.workprec(CTX.bits):
        for two_q in (3, 4, 6):
            q = mp.mpf(two_q) / 2
            want = mp.power(mp.pi, (1 - q) / 2) / mp.sqrt(q)
            got = renyi_power_integral_bell(Family.hermite(), 0, RenyiOrder(two_q), CTX)
            assert abs(got - want) < TIGHT


def test_power_integral_exponential_frozen():
    # rho_0 = e^-x at alpha=0: W_q = 1/q -> Onicescu length 2
    got = renyi_power_integral_bell(Family.laguerre(0.0), 0, RenyiOrder(4), CTX)
    assert abs(got - mp.mpf(1) / 2) < TIGHT
    assert abs(renyi_length_bell(Family.laguerre(0.0), 0, 2, CTX) - 2) < TIGHT


def test_onicescu_hermite_closed_fractions():
    with mp.workprec(CTX.bits):
        base = mp.sqrt(2 * mp.pi)
        for n, factor in ((0, mp.mpf(1)), (1, mp.mpf(4) / 3), (2, mp.mpf(64) / 41)):
            got = renyi_length_bell(Family.hermite(), n, 2, CTX)
            assert abs(got - factor * base) < mp.mpf(1e-25)


def test_laguerre_onicescu_oracle_value():
    # n=1, alpha=0, q=2: the independently integrated length is 4
    got = renyi_length_bell(Family.laguerre(0.0), 1, 2, CTX)
    assert abs(got - 4) < mp.mpf(1e-25)


def test_signed_power_integral_frozen_positive_cell():
    # signed 3/2 power of p_1 = x - 1 at alpha=0: integral (x-1)^3 e^{-3x/2} = 2/27
    W = renyi_power_integral_bell(Family.laguerre(0.0), 1, RenyiOrder(3), CTX)
    with mp.workprec(CTX.bits):
        assert abs(W - mp.mpf(2) / 27) < TIGHT


def test_signed_power_integral_negative_cell():
    W = renyi_power_integral_bell(Family.jacobi(0.0, 2.0), 1, RenyiOrder(3), CTX)
    assert W < 0
    Wo = integrate_density_power(Family.jacobi(0.0, 2.0), 1, RenyiOrder(3), CTX)
    assert abs(W - Wo) < mp.mpf(1e-40) * abs(W)
    # even length exponent: the length stays real and positive
    L = length_from_power_integral(W, RenyiOrder(3))
    assert L > 0
    assert abs(L - abs(W) ** mp.mpf(-2)) < mp.mpf(1e-40) * L


def test_parity_zero_cells_are_exact():
    assert renyi_power_integral_bell(Family.hermite(), 3, RenyiOrder(3), CTX) == 0
    assert renyi_power_integral_bell(Family.jacobi(2.0, 2.0), 1, RenyiOrder(3), CTX) == 0
    assert renyi_length_bell(Family.hermite(), 3, "3/2", CTX) == mp.inf


def test_coincidence_zero_cell_alpha_half():
    # alpha = (q-3)/(2q) at q=3/2: the power integral cancels exactly
    fam = Family.laguerre(-0.5)
    order = RenyiOrder(3)
    assert renyi_power_integral_bell(fam, 1, order, CTX) == 0
    assert integrate_density_power(fam, 1, order, CTX) == 0
    assert renyi_length_bell(fam, 1, "3/2", CTX) == mp.inf


def test_length_from_power_integral_contract():
    with pytest.raises(ParameterError):
        length_from_power_integral(mp.mpf(1), RenyiOrder(2))  # q = 1
    assert length_from_power_integral(mp.mpf(0), RenyiOrder(4)) == mp.inf
    with pytest.raises(ParameterError):
        # negative integral with odd length exponent has no real power
        length_from_power_integral(mp.mpf(-0.5), RenyiOrder(4))
    got = length_from_power_integral(mp.mpf(-0.5), RenyiOrder(3))
    assert abs(got - 4) < TIGHT


def test_divergent_parameters_rejected():
    with pytest.raises(ParameterError):
        renyi_length_bell(Family.laguerre(-0.5), 2, 2, CTX)   # alpha q = -1
    with pytest.raises(ParameterError):
        renyi_length_bell(Family.jacobi(-0.5, 0.0), 1, 3, CTX)
