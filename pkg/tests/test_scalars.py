from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncisotropy.scalars import CycloContext, MultiPoly, ScalarError, cyclotomic_poly, euler_phi, q_integer

from conftest import QCTX, scalars

Z6 = CycloContext(("p",), 6)


def _coeffs(m: MultiPoly) -> list[int]:
    deg = max(k[0] for k in m.terms)
    return [m.terms.get((k,), 0) for k in range(deg + 1)]


@pytest.mark.parametrize(
    "e, expected",
    [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])],
)
def test_cyclotomic_examples(e, expected):
    assert _coeffs(cyclotomic_poly(e)) == expected


@pytest.mark.parametrize("e", range(1, 31))
def test_cyclotomic_product_is_x_e_minus_1(e):
    prod = MultiPoly.constant(1, 1)
    for d in range(1, e + 1):
        if e % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod == MultiPoly(1, {(e,): 1, (0,): -1})
    assert len(_coeffs(cyclotomic_poly(e))) - 1 == euler_phi(e)


@pytest.mark.parametrize("e", [1, 2, 3, 4, 5, 6, 8, 12, 15])
def test_zeta_is_primitive(e):
    ctx = CycloContext((), e)
    z = ctx.zeta()
    assert z ** e == ctx.one()
    for k in range(1, e):
        assert z ** k != ctx.one()


def test_root_of_unity_examples():
    z4 = CycloContext((), 4).zeta()
    assert z4 * z4 == -1
    z = Z6.zeta()
    assert (z * z - z + 1).is_zero()
    assert z ** 6 == 1
    assert (z ** -1) * z == 1


def test_basic_examples():
    p = QCTX.param("p")
    assert (p - p).is_zero()
    assert QCTX.zero().is_zero()
    assert (p ** -2).format() == "1/p^2"
    assert p ** (1 - 3) == 1 / (p * p)
    assert (1 + p).format() == "1+p"
    with pytest.raises(ScalarError):
        QCTX.zero() ** -1


@pytest.mark.parametrize("n, text", [(0, "0"), (1, "1"), (3, "1+p+p^2")])
def test_q_integer_examples(n, text):
    assert q_integer(n, QCTX).format() == text


@pytest.mark.parametrize("n", range(0, 12))
def test_q_integer_at_one(n):
    assert q_integer(n, QCTX).substitute("p", 1).as_fraction() == n


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert (a * a.inverse() - 1).is_zero()


@given(scalars(Z6), scalars(Z6), scalars(Z6, allow_zero=False))
def test_field_axioms_with_zeta(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a / c) * c == a


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rational_equality_matches_fractions(a, b):
    sa, sb = QCTX.const(a), QCTX.const(b)
    assert (sa == sb) == (a == b)
    assert (sa - sb).as_fraction() == a - b
    assert (sa * sb).as_fraction() == Fraction(a) * b


def test_lift_into_larger_context():
    small = CycloContext(("p",), 2)
    big = CycloContext(("p", "mu"), 6)
    s = small.param("p") + small.zeta()
    lifted = big.lift(s)
    # a primitive square root of unity is -1, which is zeta_6 cubed
    assert lifted == big.param("p") + big.zeta() ** 3
