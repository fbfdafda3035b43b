"""Brute-force verification of isotropy claims by exact commutator computation.

Roots of unity are formal (cyclotomic quotients), never floats, so every
"commutes" / "does not commute" verdict is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .isotropy import IsotropyGroup, JordanDerivationSpec, QWDerivationSpec, CaseA, CaseB, Inner
from .maps import DiagAuto, JordanAuto, SkewDerivation, commutator_on_generators
from .ore import NcPoly, Presentation
from .scalars import CycloContext

__all__ = [
    "CyclicCertificate",
    "ProbeReport",
    "verify_membership",
    "membership_witness",
    "verify_cyclic_claim",
    "probe_jordan_g",
    "commuting_orders",
]

GENERIC = None  # order marker for a transcendental beta / gamma


def membership_witness(delta: SkewDerivation, phi) -> Optional[dict]:
    """First nonzero coefficient of (delta phi - phi delta) on x then y, or None."""
    for gen, defect in zip(("x", "y"), commutator_on_generators(delta, phi)):
        if not defect.is_zero():
            (i, j), c = next(defect.items())
            return {"generator": gen, "monomial": [i, j], "coefficient": c.format()}
    return None


def verify_membership(delta: SkewDerivation, phi) -> bool:
    """True iff phi commutes with delta (checked on generators)."""
    return membership_witness(delta, phi) is None


@dataclass
class CyclicCertificate:
    claimed: IsotropyGroup
    tested: list = field(default_factory=list)  # [(order | None, commuted)]
    verdict: str = "confirmed"
    refuted_order: Optional[int] = None
    witness: Optional[dict] = None

    @property
    def confirmed(self) -> bool:
        return self.verdict == "confirmed"

    def commuting_orders(self) -> list[int]:
        return [e for e, ok in self.tested if ok and e is not GENERIC]

    def to_json(self) -> dict:
        out = {
            "claimed": self.claimed.to_json(),
            "tested": [
                {"order": "generic" if e is GENERIC else e, "commuted": ok} for e, ok in self.tested
            ],
            "verdict": self.verdict if self.confirmed else f"refuted({self.refuted_order})",
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _is_jordan(spec) -> bool:
    return isinstance(spec, JordanDerivationSpec)


def _as_spec(spec):
    if isinstance(spec, (CaseA, CaseB, Inner)):
        return QWDerivationSpec([spec])
    return spec


def _generic_context(ctx: CycloContext, name: str) -> CycloContext:
    return ctx.with_params(name)


def _test_auto(spec, ctx: CycloContext, order):
    """The automorphism probing ``order``: beta (or gamma) = zeta_order or a fresh symbol."""
    root = ctx.param("gamma" if _is_jordan(spec) else "beta") if order is GENERIC else ctx.zeta()
    if _is_jordan(spec):
        return JordanAuto.make(root)
    return DiagAuto(root, Presentation.QUANTUM_WEYL)


def _context_for(base: CycloContext, spec, order) -> CycloContext:
    if order is GENERIC:
        return _generic_context(base, "gamma" if _is_jordan(spec) else "beta")
    if order % base.order:
        raise ValueError(f"test order {order} is not a multiple of the base root order {base.order}")
    return base.with_order(order)


def commuting_orders(spec, orders: Iterable[int]) -> dict:
    """{order: commuted} for automorphisms given by a primitive root of each order."""
    spec = _as_spec(spec)
    delta = spec.build()
    out = {}
    for e in orders:
        ctx = _context_for(spec.ctx, spec, e)
        out[e] = verify_membership(delta.lift(ctx), _test_auto(spec, ctx, e))
    return out


def verify_cyclic_claim(spec, claimed: IsotropyGroup, test_orders: Iterable[int] = (), *, generic: Optional[bool] = None) -> CyclicCertificate:
    """Check a Cyclic(d) / Torus / Full claim against exact commutators.

    For each order e, beta (gamma for the Jordanian plane, with g = 0) is a
    primitive e-th root of unity; the claim predicts commutation iff e | d.
    Torus and Full claims are also tested with a transcendental beta/gamma
    (``generic`` defaults to True for them).
    """
    if claimed.variant == "degenerate":
        raise ValueError("a degenerate classification makes no checkable claim")
    spec = _as_spec(spec)
    if generic is None:
        generic = claimed.variant in ("torus", "full")
    delta = spec.build()
    cert = CyclicCertificate(claimed)
    orders: list = ([GENERIC] if generic else []) + sorted(set(test_orders))
    for e in orders:
        if e is not GENERIC and e < 1:
            raise ValueError("test orders must be >= 1")
        ctx = _context_for(spec.ctx, spec, e)
        phi = _test_auto(spec, ctx, e)
        lifted = delta.lift(ctx)
        witness = membership_witness(lifted, phi)
        commuted = witness is None
        cert.tested.append((e, commuted))
        if claimed.variant == "cyclic":
            expected = e is not GENERIC and claimed.order % e == 0
        else:
            expected = True
        if commuted != expected and cert.confirmed:
            cert.verdict = "refuted"
            cert.refuted_order = e
            cert.witness = witness
    return cert


@dataclass
class ProbeReport:
    family: str
    instances: list = field(default_factory=list)  # dicts: gamma_order, g_degree, commuted
    label: str = "lower bound evidence"

    @property
    def commuting(self) -> list:
        return [inst for inst in self.instances if inst["commuted"]]

    @property
    def nontrivial_commuting(self) -> list:
        return [
            inst for inst in self.commuting
            if not (inst["gamma_order"] == 1 and inst["g_degree"] is None)
        ]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "label": self.label,
            "instances_tested": len(self.instances),
            "instances": self.instances,
            "commuting": self.commuting,
        }


def probe_jordan_g(
    spec: JordanDerivationSpec,
    gamma_orders: Iterable[int],
    max_g_degree: int,
    *,
    include_generic: bool = False,
) -> ProbeReport:
    """Enumerate x -> gamma x + g(y), y -> gamma y with gamma = zeta_e and g in {0, y^0..y^G}.

    Bounded enumeration, not solving: it can show commuting automorphisms
    exist but never certifies the full isotropy group.
    """
    if max_g_degree < 1:
        raise ValueError("max_g_degree must be >= 1")
    orders: list = sorted(set(gamma_orders) | {1})
    if include_generic:
        orders.append(GENERIC)
    delta = spec.build()
    report = ProbeReport(
        family=f"gamma in primitive roots of orders {[o for o in orders if o is not GENERIC]}"
        + (" and a generic gamma" if include_generic else "")
        + f"; g in {{0}} + {{y^k : k <= {max_g_degree}}}"
    )
    for e in orders:
        ctx = _context_for(spec.ctx, spec, e)
        gamma = ctx.param("gamma") if e is GENERIC else ctx.zeta()
        lifted = delta.lift(ctx)
        for k in [None] + list(range(max_g_degree + 1)):
            g = NcPoly.zero(Presentation.JORDANIAN, ctx) if k is None else NcPoly.y(Presentation.JORDANIAN, ctx, k)
            phi = JordanAuto(gamma, g)
            report.instances.append({
                "gamma_order": "generic" if e is GENERIC else e,
                "g_degree": k,
                "commuted": verify_membership(lifted, phi),
            })
    return report
