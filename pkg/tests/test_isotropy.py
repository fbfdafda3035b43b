import math

import pytest
from hypothesis import given, strategies as st

from ncisotropy.isotropy import (
    CaseA,
    CaseB,
    Inner,
    IsotropyGroup,
    JordanDerivationSpec,
    QWDerivationSpec,
    classify,
    classify_case_b,
    classify_inner,
    classify_jordan,
    construct_delta_r,
    intersect,
    jordan_exponents,
    support_differences,
)
from ncisotropy.ore import NcPoly, Presentation
from ncisotropy.parsing import parse_element

from conftest import PLAIN, QCTX

QW, JP = Presentation.QUANTUM_WEYL, Presentation.JORDANIAN
MU = QCTX.param("mu")
Z = IsotropyGroup.cyclic
TORUS, FULL = IsotropyGroup.torus(), IsotropyGroup.full()


def qw(text):
    return parse_element(text, QW, QCTX)


def jp(text):
    return parse_element(text, JP, PLAIN)


def test_group_printing_and_json():
    assert [str(g) for g in (FULL, TORUS, Z(1), Z(6))] == ["Aut", "K*", "{id}", "Z_6"]
    for g in (FULL, TORUS, Z(4), IsotropyGroup.degenerate("zero derivation")):
        assert IsotropyGroup.from_json(g.to_json()) == g
    assert Z(6).to_json() == {"variant": "cyclic", "order": 6}
    with pytest.raises(ValueError):
        Z(0)


@pytest.mark.parametrize(
    "w, expected",
    [
        ("x*y + 3*x^2*y^2", TORUS),
        ("x^2*y^2 + x*y^4 + x*y^5", Z(1)),
        ("x*y^4 + x^7*y^4", Z(3)),
        ("x*y^4 + x^7*y^4 + x^9*y^6 + x^9*y^12 + x^5 + y^17", Z(1)),
        ("y^4 + x^2*y^6", Z(4)),
        ("x^3", Z(3)),
        ("7", TORUS),
    ],
)
def test_classify_inner(w, expected):
    assert classify_inner(qw(w)) == expected


def test_support_differences():
    assert support_differences(qw("x^2*y^2 + x*y^4 + x*y^5")) == {0, 3, 4}
    assert support_differences(qw("x*y^4 + x^7*y^4 + x^9*y^6 + x^9*y^12 + x^5 + y^17")) == {-5, -3, 3, 17}


def test_zero_derivations_are_degenerate():
    assert classify_inner(NcPoly.zero(QW, QCTX)).variant == "degenerate"
    assert classify(CaseA(NcPoly.zero(QW, QCTX), MU)).reason == "zero derivation"
    assert classify(CaseB(0, NcPoly.zero(QW, QCTX), NcPoly.zero(QW, QCTX))).variant == "degenerate"


@pytest.mark.parametrize(
    "a, b, expected",
    [("x^17", "y^5 + y^11", 6), ("x^17", "y^5 + y^14", 3), ("1", "0", 1), ("x^3", "y^7", 4), ("0", "y^2", 3)],
)
def test_classify_case_b(a, b, expected):
    assert classify_case_b(qw(a), qw(b)) == Z(expected)


def test_classify_case_a_is_torus():
    assert classify(CaseA(qw("x"), MU)) == TORUS
    assert classify(CaseA(qw("1 + x^2"), MU)) == TORUS


def test_intersection_examples():
    assert intersect(TORUS, Z(6)) == Z(6)
    assert intersect(Z(6), Z(15)) == Z(3)
    assert intersect(FULL, TORUS) == TORUS
    deg = IsotropyGroup.degenerate("zero derivation")
    assert intersect(deg, Z(2)) == deg and intersect(Z(2), deg) == deg


groups = st.one_of(st.just(TORUS), st.just(FULL), st.integers(1, 60).map(Z))


@given(groups, groups, groups)
def test_intersection_laws(a, b, c):
    assert intersect(a, b) == intersect(b, a)
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    assert intersect(a, a) == a


@pytest.mark.parametrize("d1", range(1, 25))
def test_cyclic_intersection_matches_root_sets(d1):
    for d2 in range(1, 25):
        n = d1 * d2
        # zeta_n^k is a d-th root of unity iff n | k*d
        roots = lambda d: {k for k in range(n) if (k * d) % n == 0}
        assert intersect(Z(d1), Z(d2)).order == len(roots(d1) & roots(d2))


def test_classify_combinations():
    assert classify(QWDerivationSpec([CaseA(qw("x"), MU), Inner(qw("x*y^4 + x^7*y^4"), MU)])) == Z(3)
    # p^(1-d) = mu only for a matching twist, so give case b and inner a common mu = p^-1
    pinv = QCTX.param("p") ** -1
    spec = QWDerivationSpec([CaseB(2, qw("x^17"), qw("y^5 + y^11")), Inner(qw("x*y^5 + x^3*y^3"), pinv)])
    assert classify(spec) == Z(2)
    with pytest.raises(ValueError):
        classify(QWDerivationSpec([CaseB(2, qw("x"), qw("y")), Inner(qw("x"), MU)]))


def test_inner_parts_are_merged_before_classifying():
    # two inner parts whose sum cancels down to a single monomial
    spec = QWDerivationSpec([Inner(qw("x*y^4 + y^2"), MU), Inner(qw("-y^2"), MU)])
    assert classify(spec) == Z(3)


@pytest.mark.parametrize(
    "alpha, psi, w, expected",
    [
        (0, "x^2 + 3*x", "x*y", Z(1)),
        (0, "0", "x^4", Z(4)),
        (0, "x^3", "0", Z(2)),
        (0, "x^4 + 1", "0", Z(1)),
        (0, "x^3 + x^2", "0", Z(1)),
        (0, "0", "x^2*y^4 + y^3", Z(3)),
        (0, "0", "0", FULL),
    ],
)
def test_classify_jordan(alpha, psi, w, expected):
    spec = JordanDerivationSpec(PLAIN.const(alpha), jp(psi), jp(w))
    assert classify_jordan(spec) == expected


def test_jordan_exponents():
    spec = JordanDerivationSpec(PLAIN.zero(), jp("x^2 + 3*x"), jp("x*y"))
    assert sorted(jordan_exponents(spec)) == [1, 2]


def test_jordan_degenerate():
    spec = JordanDerivationSpec(PLAIN.one(), jp("0"), jp("0"))
    assert classify_jordan(spec).variant == "degenerate"
    spec = JordanDerivationSpec(PLAIN.zero(), jp("5*x"), jp("3"))
    assert classify_jordan(spec).variant == "degenerate"


@pytest.mark.parametrize("r", range(1, 13))
def test_construct_delta_r(r):
    spec = construct_delta_r(r)
    assert spec.w == jp(f"x^{r}")
    assert classify(spec) == Z(r)


def test_construct_delta_r_rejects_nonpositive():
    with pytest.raises(ValueError):
        construct_delta_r(0)
