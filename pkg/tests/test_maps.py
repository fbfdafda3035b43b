import pytest
from hypothesis import given, strategies as st

from ncisotropy.maps import (
    DiagAuto,
    Endo,
    JordanAuto,
    SkewDerivation,
    ad_sigma,
    apply_endo,
    case_a_derivation,
    case_b_derivation,
    commutator_on_generators,
    compose,
    conjugate,
    derivation_is_consistent,
    endo_is_valid,
    identity,
    inverse,
    is_identity,
    jordan_derivation,
)
from ncisotropy.ore import NcPoly, Presentation, h_element
from ncisotropy.parsing import parse_element
from ncisotropy.scalars import CycloContext

from conftest import CONTEXTS, PLAIN, QCTX, elements

QW, JP, W1 = Presentation.QUANTUM_WEYL, Presentation.JORDANIAN, Presentation.FIRST_WEYL
BCTX = QCTX.with_params("beta")
GCTX = PLAIN.with_params("gamma", "c")


def qw(text, ctx=QCTX):
    return parse_element(text, QW, ctx)


def jp(text, ctx=PLAIN):
    return parse_element(text, JP, ctx)


def w1(text):
    return parse_element(text, W1, PLAIN)


# ---- automorphisms -------------------------------------------------------


def test_jordan_auto_images():
    gamma = GCTX.param("gamma")
    phi = JordanAuto(gamma, jp("y^2 + 1", GCTX))
    assert phi.apply(jp("x", GCTX)) == jp("gamma*x + y^2 + 1", GCTX)
    assert phi.apply(jp("1", GCTX)) == jp("1", GCTX)


def test_diag_auto_fixes_h():
    h = h_element(BCTX)
    assert DiagAuto(BCTX.param("beta")).apply(h) == h


def test_validity():
    assert endo_is_valid(DiagAuto(BCTX.param("beta")))
    assert endo_is_valid(JordanAuto(GCTX.param("gamma"), jp("c*y^3 + y", GCTX)))
    assert endo_is_valid(Endo(w1("2*x + y"), w1("x + y")))  # det 1
    assert not endo_is_valid(Endo(w1("2*x"), w1("2*y")))  # det 4
    assert not endo_is_valid(Endo(qw("x"), qw("x*y")))


@pytest.mark.parametrize("a,b,c,d", [(1, 0, 0, 1), (2, 1, 1, 1), (1, 3, 0, 1), (1, 0, 5, 1), (3, 2, 4, 3), (2, 0, 0, 3)])
def test_first_weyl_affine_validity_is_determinant_one(a, b, c, d):
    phi = Endo(w1(f"{a}*x + {b}*y"), w1(f"{c}*x + {d}*y"))
    assert endo_is_valid(phi) == (a * d - b * c == 1)


@given(st.sampled_from([QW, JP]), st.data())
def test_automorphisms_are_homomorphisms(pres, data):
    ctx = CONTEXTS[pres]
    f, g = data.draw(elements(pres, 3)), data.draw(elements(pres, 3))
    if pres is QW:
        phi = DiagAuto(QCTX.param("mu") * data.draw(st.sampled_from([1, 2, -3])))
    else:
        k = data.draw(st.integers(0, 3))
        phi = JordanAuto(ctx.const(data.draw(st.sampled_from([1, 2, -1]))), NcPoly.y(pres, ctx, k).scale(data.draw(st.integers(-2, 2))))
    assert apply_endo(phi, f * g) == apply_endo(phi, f) * apply_endo(phi, g)


def test_diag_fast_path_matches_substitution():
    phi = DiagAuto(QCTX.param("mu"))
    f = qw("x^3*y + 2*y^2*x - x*y^5 + 7")
    assert phi.apply(f) == Endo(*phi.images()).apply(f)


def test_jordan_composition_law_matches_substitution():
    g1, g2 = GCTX.param("gamma"), GCTX.const(3)
    a = JordanAuto(g1, jp("y^2 + c*y", GCTX))
    b = JordanAuto(g2, jp("y^3 - 1", GCTX))
    closed = compose(b, a)
    generic = compose(Endo(*b.images()), Endo(*a.images()))
    assert isinstance(closed, JordanAuto)
    assert closed.images() == generic.images()
    # (gamma_b, g_b) o (gamma_a, g_a) = (gamma_a gamma_b, gamma_a g_b(y) + g_a(gamma_b y)) in the closed law's ordering
    assert closed.gamma == g1 * g2


def test_inverses():
    beta = BCTX.param("beta")
    d = DiagAuto(beta)
    assert inverse(d).beta == beta ** -1
    assert is_identity(compose(d, DiagAuto(beta ** -1)))
    gamma = GCTX.param("gamma")
    j0 = JordanAuto(gamma, NcPoly.zero(JP, GCTX))
    assert inverse(j0).gamma == gamma ** -1 and inverse(j0).g.is_zero()
    j = JordanAuto(gamma, jp("y^3 + c*y^2 + 2", GCTX))
    assert is_identity(compose(inverse(j), j)) and is_identity(compose(j, inverse(j)))
    tri = Endo(w1("x"), w1("y + x^3 + 1"))
    assert is_identity(compose(inverse(tri), tri))
    aff = Endo(w1("2*x + y"), w1("x + y"))
    assert is_identity(compose(aff, inverse(aff)))


# ---- derivations ---------------------------------------------------------


def test_ad_examples():
    mu = QCTX.param("mu")
    one = ad_sigma(NcPoly.one(QW, QCTX), DiagAuto(mu))
    assert one.dx == qw("x").scale(1 - mu ** -1)
    xy = qw("x*y")
    d = ad_sigma(xy, DiagAuto(mu))
    assert d.dx == xy * qw("x") - (qw("x") * xy).scale(mu ** -1)
    assert d.dx.format() == "((-1+p*mu)/mu)*x^2*y + x"
    plain = ad_sigma(jp("x*y"))
    assert (plain.dx.format(), plain.dy.format()) == ("x*y^2", "-y^3")
    weyl = ad_sigma(w1("x"))
    assert weyl.dx.is_zero() and weyl.dy == w1("-1")


def test_case_a():
    mu = QCTX.param("mu")
    assert case_a_derivation(NcPoly.zero(QW, QCTX), mu).is_zero()
    h = h_element(QCTX)
    for f in ("1", "x", "1 + x^2", "x^3 - 2*x"):
        delta = case_a_derivation(qw(f), mu)
        assert derivation_is_consistent(delta)
        assert delta.apply(h).is_zero()
    one = case_a_derivation(qw("1"), mu)
    assert one.dx == qw("x") and one.dy == qw("y").scale(-mu)


def test_case_b():
    delta = case_b_derivation(0, qw("1"), qw("1"))
    assert delta.dx == qw("1") and delta.dy == qw("1") and delta.twist.beta == QCTX.param("p")
    delta = case_b_derivation(1, qw("x"), NcPoly.zero(QW, QCTX))
    assert delta.dx.is_zero() and delta.dy == h_element(QCTX) * qw("x") and delta.twist.beta == 1
    for d in range(4):
        assert derivation_is_consistent(case_b_derivation(d, qw("x^2 + 3"), qw("y^3 - y")))
    ex1 = case_b_derivation(2, qw("x^17"), qw("y^5 + y^11"))
    assert ex1.twist.beta == QCTX.param("p") ** -1
    assert derivation_is_consistent(ex1)


def test_jordan_derivations():
    d = jordan_derivation(0, NcPoly.zero(JP, PLAIN), jp("x*y"))
    assert (d.dx.format(), d.dy.format()) == ("x*y^2", "-y^3")
    d = jordan_derivation(1, NcPoly.zero(JP, PLAIN), NcPoly.zero(JP, PLAIN))
    assert d.dx == jp("y") and d.dy.is_zero()
    d = jordan_derivation(0, jp("x^2 + 3*x"), jp("x*y"))
    assert d.dx == jp("3*x + x^2 + x*y^2")
    assert d.dy == jp("(2*x + 3)*y - y^3")
    assert derivation_is_consistent(d)


def test_consistency_detects_broken_derivation():
    broken = SkewDerivation(qw("y"), NcPoly.zero(QW, QCTX))
    assert not derivation_is_consistent(broken)


def test_derivation_kills_constants():
    delta = case_b_derivation(2, qw("x^2"), qw("y"))
    assert delta.apply(qw("1")).is_zero()


def _random_derivation(data):
    kind = data.draw(st.sampled_from(["inner_qw", "case_a", "case_b", "jordan", "weyl"]))
    mu = QCTX.param("mu")
    if kind == "inner_qw":
        return ad_sigma(data.draw(elements(QW, 3, 2)), DiagAuto(mu))
    if kind == "case_a":
        return case_a_derivation(NcPoly.x(QW, QCTX, data.draw(st.integers(0, 2))) + 1, mu)
    if kind == "case_b":
        d = data.draw(st.integers(0, 2))
        return case_b_derivation(d, NcPoly.x(QW, QCTX, data.draw(st.integers(0, 3))), NcPoly.y(QW, QCTX, data.draw(st.integers(0, 3))))
    if kind == "jordan":
        return jordan_derivation(data.draw(st.integers(-2, 2)), NcPoly.x(JP, PLAIN, data.draw(st.integers(0, 3))), data.draw(elements(JP, 3, 2)))
    return ad_sigma(data.draw(elements(W1, 3, 2)))


@given(st.data())
def test_skew_leibniz(data):
    delta = _random_derivation(data)
    f = data.draw(elements(delta.pres, 3, 2))
    g = data.draw(elements(delta.pres, 3, 2))
    assert delta.apply(f * g) == delta.apply(f) * g + delta.sigma(f) * delta.apply(g)


@given(st.data())
def test_derivation_families_are_consistent(data):
    assert derivation_is_consistent(_random_derivation(data))


# ---- commutators and conjugation -----------------------------------------


def test_case_a_commutes_with_generic_diag():
    mu = BCTX.param("mu")
    delta = case_a_derivation(qw("1 + x^2", BCTX), mu)
    cx, cy = commutator_on_generators(delta, DiagAuto(BCTX.param("beta")))
    assert cx.is_zero() and cy.is_zero()


@pytest.mark.parametrize("f", ["x", "x^3", "1 + x^2"])
def test_first_weyl_translations_commute_with_ad_x(f):
    phi = Endo(w1("x"), w1(f"y + {f}"))
    cx, cy = commutator_on_generators(ad_sigma(w1("x")), phi)
    assert cx.is_zero() and cy.is_zero()


def test_first_weyl_scaling_does_not_commute():
    phi = Endo(w1("2*x"), w1("1/2*y"))
    assert endo_is_valid(phi)
    cx, cy = commutator_on_generators(ad_sigma(w1("x")), phi)
    assert cx.is_zero() and cy == w1("1/2")


def test_jordan_example_fails_for_order_two_root():
    ctx = CycloContext((), 2)
    delta = jordan_derivation(0, jp("x^2 + 3*x", ctx), jp("x*y", ctx))
    cx, cy = commutator_on_generators(delta, JordanAuto.make(ctx.zeta()))
    assert not (cx.is_zero() and cy.is_zero())


def test_conjugation():
    delta = ad_sigma(jp("x*y + x^2"))
    same = conjugate(identity(JP, PLAIN), delta)
    assert same.dx == delta.dx and same.dy == delta.dy
    phi = JordanAuto(GCTX.param("gamma"), jp("y^2 + c", GCTX))
    lifted = delta.lift(GCTX)
    assert derivation_is_consistent(conjugate(phi, lifted))


def test_conjugation_of_inner_by_diag_stays_on_support():
    mu, beta = BCTX.param("mu"), BCTX.param("beta")
    w = qw("x*y^4 + x^7*y^4 + 2*x*y", BCTX)
    rho = DiagAuto(beta)
    conj = conjugate(rho, ad_sigma(w, DiagAuto(mu)))
    expected = ad_sigma(rho.apply(w), DiagAuto(mu))
    assert conj.dx == expected.dx and conj.dy == expected.dy
    assert set(rho.apply(w).terms) == set(w.terms)


def test_isotropy_member_is_fixed_by_conjugation():
    ctx = CycloContext((), 4)
    delta = jordan_derivation(0, NcPoly.zero(JP, ctx), jp("x^4", ctx))
    phi = JordanAuto.make(ctx.zeta())
    conj = conjugate(phi, delta)
    assert conj.dx == delta.dx and conj.dy == delta.dy


def test_conjugation_requires_commuting_twist():
    delta = ad_sigma(qw("x"), DiagAuto(QCTX.param("mu")))
    with pytest.raises(ValueError):
        conjugate(Endo(qw("x"), qw("y + 1")), delta)
