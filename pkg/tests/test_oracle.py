import pytest

from ncisotropy.isotropy import (
    CaseA,
    CaseB,
    Inner,
    IsotropyGroup,
    JordanDerivationSpec,
    QWDerivationSpec,
    classify,
    construct_delta_r,
)
from ncisotropy.maps import ad_sigma, DiagAuto
from ncisotropy.oracle import commuting_orders, membership_witness, probe_jordan_g, verify_cyclic_claim, verify_membership
from ncisotropy.ore import Presentation
from ncisotropy.parsing import parse_element

from conftest import PLAIN, QCTX

QW, JP = Presentation.QUANTUM_WEYL, Presentation.JORDANIAN
MU = QCTX.param("mu")
Z = IsotropyGroup.cyclic


def qw(text):
    return parse_element(text, QW, QCTX)


def jspec(alpha, psi, w):
    return JordanDerivationSpec(PLAIN.const(alpha), parse_element(psi, JP, PLAIN), parse_element(w, JP, PLAIN))


def _divisor_orders(d):
    return sorted({k for k in range(1, d + 1) if d % k == 0} | {d + 1, 2 * d, next(k for k in range(2, d + 2) if d % k)})


def test_case_b_example_certificate():
    spec = CaseB(2, qw("x^17"), qw("y^5 + y^11"))
    cert = verify_cyclic_claim(spec, Z(6), {1, 2, 3, 6, 4, 5, 12})
    assert cert.confirmed
    assert cert.commuting_orders() == [1, 2, 3, 6]
    assert cert.to_json()["verdict"] == "confirmed"


def test_wrong_claim_is_refuted_with_witness():
    spec = CaseB(2, qw("x^17"), qw("y^5 + y^14"))
    cert = verify_cyclic_claim(spec, Z(6), [1, 2, 3, 6])
    assert not cert.confirmed
    assert cert.refuted_order == 2
    assert cert.witness["generator"] in ("x", "y")
    assert cert.to_json()["verdict"] == "refuted(2)"


def test_jordan_delta4_certificate():
    cert = verify_cyclic_claim(construct_delta_r(4), Z(4), {1, 2, 4, 3, 8})
    assert cert.confirmed and cert.commuting_orders() == [1, 2, 4]


def test_delta6_commutes_for_sixth_not_fourth_root():
    result = commuting_orders(construct_delta_r(6), [4, 6])
    assert result == {4: False, 6: True}


def test_torus_claims_use_generic_beta():
    cert = verify_cyclic_claim(Inner(qw("x*y + 3*x^2*y^2"), MU), IsotropyGroup.torus(), [2, 3])
    assert cert.tested[0] == (None, True)
    assert cert.confirmed
    assert cert.to_json()["tested"][0]["order"] == "generic"


def test_generic_beta_refutes_torus_for_cyclic_derivation():
    cert = verify_cyclic_claim(Inner(qw("x*y^4"), MU), IsotropyGroup.torus())
    assert not cert.confirmed and cert.refuted_order is None


def test_degenerate_claim_is_rejected():
    with pytest.raises(ValueError):
        verify_cyclic_claim(Inner(qw("x"), MU), IsotropyGroup.degenerate("zero derivation"))


REGRESSION_CORPUS = [
    CaseA(qw("x"), MU),
    CaseA(qw("1 + x^2"), MU),
    CaseB(2, qw("x^17"), qw("y^5 + y^11")),
    CaseB(0, qw("x^17"), qw("y^5 + y^14")),
    CaseB(1, qw("x^3"), qw("y^7")),
    Inner(qw("x*y + 3*x^2*y^2"), MU),
    Inner(qw("x*y^4 + x^7*y^4"), MU),
    Inner(qw("x^2*y^2 + x*y^4 + x*y^5"), MU),
    Inner(qw("y^4 + x^2*y^6"), MU),
    Inner(qw("x*y^4 + x^7*y^4 + x^9*y^6 + x^9*y^12 + x^5 + y^17"), MU),
    QWDerivationSpec([CaseA(qw("x"), MU), Inner(qw("x*y^4 + x^7*y^4"), MU)]),
    QWDerivationSpec([CaseB(2, qw("x^17"), qw("y^5 + y^11")), Inner(qw("x*y^5 + x^3*y^3"), QCTX.param("p") ** -1)]),
    jspec(0, "x^2 + 3*x", "x*y"),
    jspec(0, "x^3", "0"),
    jspec(0, "x^4 + 1", "0"),
    jspec(0, "x^3 + x^2", "0"),
    jspec(0, "x^5", "x^2*y^8"),
    jspec(2, "0", "x*y^3"),
] + [construct_delta_r(r) for r in (1, 2, 3, 4, 6)]


@pytest.mark.parametrize("spec", REGRESSION_CORPUS, ids=lambda s: type(s).__name__)
def test_classifier_agrees_with_oracle(spec):
    group = classify(spec)
    assert group.variant in ("torus", "cyclic")
    orders = _divisor_orders(group.order) if group.variant == "cyclic" else [2, 3, 4]
    cert = verify_cyclic_claim(spec, group, orders)
    assert cert.confirmed, cert.to_json()


def test_membership_witness_shape():
    delta = ad_sigma(qw("x*y^4"), DiagAuto(MU))
    ctx = QCTX.with_order(2)
    w = membership_witness(delta.lift(ctx), DiagAuto(ctx.zeta()))
    assert set(w) == {"generator", "monomial", "coefficient"}
    assert verify_membership(delta.lift(QCTX.with_order(3)), DiagAuto(QCTX.with_order(3).zeta()))


def test_probe_finds_no_commuting_automorphism_for_trivial_case():
    report = probe_jordan_g(jspec(0, "x^2 + 3*x", "x*y"), [2, 3, 4, 6], 4)
    assert len(report.instances) == 5 * 6
    assert report.nontrivial_commuting == []
    assert report.label == "lower bound evidence"


def test_probe_degenerate_finds_commuting_family():
    report = probe_jordan_g(jspec(1, "0", "0"), [2, 3], 2, include_generic=True)
    assert len(report.commuting) == len(report.instances)
    assert report.to_json()["instances_tested"] == 4 * 4


def test_probe_delta4():
    report = probe_jordan_g(construct_delta_r(4), [2, 3, 4], 2)
    commuting = {(i["gamma_order"], i["g_degree"]) for i in report.commuting}
    assert commuting == {(1, None), (2, None), (4, None)}
