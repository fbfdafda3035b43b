"""Arithmetic classification of derivation isotropy groups.

Quantum Weyl algebra: every automorphism is diagonal, so isotropy groups are
subgroups of the torus {beta in K*}.  They are read off from gcds of
exponent data:

* h-annihilating family (case a): the whole torus;
* h^d b(y) / h^d a(x) family (case b): mu_D with D = gcd(exponent + 1);
* inner ad_sigma(w): mu_c with c = gcd{j - i : c_ij != 0}, torus when c = 0.

Jordanian plane: the automorphisms are x -> gamma x + g(y), y -> gamma y and
the isotropy is cyclic of order gcd(t, s_1, ..., s_k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .maps import SkewDerivation, ad_sigma, case_a_derivation, case_b_derivation, jordan_derivation, DiagAuto
from .ore import NcPoly, Presentation, derivative_x, univariate_coeffs
from .scalars import CycloContext, Scalar

__all__ = [
    "IsotropyGroup",
    "CaseA",
    "CaseB",
    "Inner",
    "QWDerivationSpec",
    "JordanDerivationSpec",
    "support_differences",
    "classify_inner",
    "classify_case_a",
    "classify_case_b",
    "classify_qw",
    "classify_jordan",
    "classify",
    "intersect",
    "construct_delta_r",
    "jordan_exponents",
]

ZERO_DERIVATION = "zero derivation"


@dataclass(frozen=True)
class IsotropyGroup:
    variant: str  # "full" | "torus" | "cyclic" | "degenerate"
    order: Optional[int] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.variant not in ("full", "torus", "cyclic", "degenerate"):
            raise ValueError(f"unknown isotropy variant {self.variant!r}")
        if self.variant == "cyclic" and (self.order is None or self.order < 1):
            raise ValueError("cyclic isotropy needs a positive order")

    @classmethod
    def full(cls) -> "IsotropyGroup":
        return cls("full")

    @classmethod
    def torus(cls) -> "IsotropyGroup":
        return cls("torus")

    @classmethod
    def cyclic(cls, d: int) -> "IsotropyGroup":
        return cls("cyclic", int(d))

    @classmethod
    def degenerate(cls, reason: str) -> "IsotropyGroup":
        return cls("degenerate", reason=reason)

    @property
    def is_trivial(self) -> bool:
        return self.variant == "cyclic" and self.order == 1

    def to_json(self) -> dict:
        out: dict = {"variant": self.variant}
        if self.order is not None:
            out["order"] = self.order
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_json(cls, data: dict) -> "IsotropyGroup":
        return cls(data["variant"], data.get("order"), data.get("reason"))

    def __str__(self):
        if self.variant == "full":
            return "Aut"
        if self.variant == "torus":
            return "K*"
        if self.variant == "cyclic":
            return "{id}" if self.order == 1 else f"Z_{self.order}"
        return f"degenerate ({self.reason})"


def intersect(g1: IsotropyGroup, g2: IsotropyGroup) -> IsotropyGroup:
    """Intersection of two subgroups of the diagonal torus."""
    if g1.variant == "degenerate":
        return g1
    if g2.variant == "degenerate":
        return g2
    if g1.variant == "full":
        return g2
    if g2.variant == "full":
        return g1
    if g1.variant == "torus":
        return g2
    if g2.variant == "torus":
        return g1
    return IsotropyGroup.cyclic(math.gcd(g1.order, g2.order))


# ---------------------------------------------------------------------------
# Derivation specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CaseA:
    """f(h)-family; ``f`` is a polynomial in x standing for the formal variable."""

    f: NcPoly
    mu: Scalar

    def twist_mu(self) -> Scalar:
        return self.mu

    def build(self) -> SkewDerivation:
        return case_a_derivation(self.f, self.mu)

    def lift(self, ctx: CycloContext) -> "CaseA":
        return CaseA(self.f.lift(ctx), ctx.lift(self.mu))

    def is_zero(self) -> bool:
        return self.f.is_zero()


@dataclass(frozen=True, eq=False)
class CaseB:
    d: int
    a: NcPoly
    b: NcPoly

    def twist_mu(self) -> Scalar:
        return self.a.ctx.param("p") ** (1 - self.d)

    def build(self) -> SkewDerivation:
        return case_b_derivation(self.d, self.a, self.b)

    def lift(self, ctx: CycloContext) -> "CaseB":
        return CaseB(self.d, self.a.lift(ctx), self.b.lift(ctx))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()


@dataclass(frozen=True, eq=False)
class Inner:
    w: NcPoly
    mu: Scalar

    def twist_mu(self) -> Scalar:
        return self.mu

    def build(self) -> SkewDerivation:
        return ad_sigma(self.w, DiagAuto(self.mu, Presentation.QUANTUM_WEYL))

    def lift(self, ctx: CycloContext) -> "Inner":
        return Inner(self.w.lift(ctx), ctx.lift(self.mu))

    def is_zero(self) -> bool:
        return self.w.is_zero()


Component = Union[CaseA, CaseB, Inner]


@dataclass(frozen=True, eq=False)
class QWDerivationSpec:
    """A sigma_mu-derivation of the quantum Weyl algebra as a sum of family members."""

    components: tuple

    def __init__(self, components: Sequence[Component]):
        object.__setattr__(self, "components", tuple(components))

    @property
    def ctx(self) -> CycloContext:
        c = self.components[0]
        return c.f.ctx if isinstance(c, CaseA) else c.a.ctx if isinstance(c, CaseB) else c.w.ctx

    def shared_mu(self) -> Scalar:
        if not self.components:
            raise ValueError("empty derivation spec has no twist")
        mus = [c.twist_mu() for c in self.components]
        for m in mus[1:]:
            if m != mus[0]:
                raise ValueError(f"components disagree on mu: {mus[0]} vs {m}")
        return mus[0]

    def build(self) -> SkewDerivation:
        mu = self.shared_mu()
        total = None
        for c in self.components:
            delta = c.build()
            total = delta if total is None else total + delta
        meta = {"kind": "combination"}
        return SkewDerivation(total.dx, total.dy, DiagAuto(mu, Presentation.QUANTUM_WEYL), meta)

    def lift(self, ctx: CycloContext) -> "QWDerivationSpec":
        return QWDerivationSpec([c.lift(ctx) for c in self.components])


@dataclass(frozen=True, eq=False)
class JordanDerivationSpec:
    alpha: Scalar
    psi: NcPoly
    w: NcPoly

    @property
    def ctx(self) -> CycloContext:
        return self.w.ctx

    def build(self) -> SkewDerivation:
        return jordan_derivation(self.alpha, self.psi, self.w)

    def lift(self, ctx: CycloContext) -> "JordanDerivationSpec":
        return JordanDerivationSpec(ctx.lift(self.alpha), self.psi.lift(ctx), self.w.lift(ctx))


# ---------------------------------------------------------------------------
# Quantum Weyl classification
# ---------------------------------------------------------------------------


def support_differences(w: NcPoly) -> set[int]:
    """S = {j - i : c_ij != 0}."""
    return {j - i for i, j in w.terms}


def _gcd_to_group(c: int) -> IsotropyGroup:
    return IsotropyGroup.torus() if c == 0 else IsotropyGroup.cyclic(c)


def classify_inner(w: NcPoly) -> IsotropyGroup:
    if w.is_zero():
        return IsotropyGroup.degenerate(ZERO_DERIVATION)
    return _gcd_to_group(math.gcd(*support_differences(w)))


def classify_case_a(f: NcPoly, mu: Scalar | None = None) -> IsotropyGroup:
    # the automorphism group of the quantum Weyl algebra is the torus itself
    if f.is_zero():
        return IsotropyGroup.degenerate(ZERO_DERIVATION)
    return IsotropyGroup.torus()


def classify_case_b(a: NcPoly, b: NcPoly) -> IsotropyGroup:
    exps = [k for k, c in enumerate(univariate_coeffs(a, "x")) if not c.is_zero()]
    exps += [k for k, c in enumerate(univariate_coeffs(b, "y")) if not c.is_zero()]
    if not exps:
        return IsotropyGroup.degenerate(ZERO_DERIVATION)
    return IsotropyGroup.cyclic(math.gcd(*(e + 1 for e in exps)))


def _classify_component(c: Component) -> IsotropyGroup:
    if isinstance(c, CaseA):
        return classify_case_a(c.f, c.mu)
    if isinstance(c, CaseB):
        return classify_case_b(c.a, c.b)
    return classify_inner(c.w)


def classify_qw(spec: QWDerivationSpec) -> IsotropyGroup:
    """Fold the intersection over the components; inner parts are merged into one w first."""
    if not spec.components:
        return IsotropyGroup.degenerate(ZERO_DERIVATION)
    mu = spec.shared_mu()
    inner = [c for c in spec.components if isinstance(c, Inner)]
    others = [c for c in spec.components if not isinstance(c, Inner)]
    if inner:
        w = inner[0].w
        for c in inner[1:]:
            w = w + c.w
        others.append(Inner(w, mu))
    groups = [_classify_component(c) for c in others if not c.is_zero()]
    if not groups:
        return IsotropyGroup.degenerate(ZERO_DERIVATION)
    result = groups[0]
    for g in groups[1:]:
        result = intersect(result, g)
    return result


# ---------------------------------------------------------------------------
# Jordanian classification
# ---------------------------------------------------------------------------


def jordan_exponents(spec: JordanDerivationSpec) -> list[int]:
    """The constraint exponents E: gamma^e = 1 for every e in E.

    Positive exponents of psi' (the largest is t) and total degrees of the
    non-constant monomials of w.  A nonzero constant term of psi contributes
    1 once E is otherwise non-empty, since psi(gamma x) = gamma psi(x) forces
    gamma^-1 = 1 on it.
    """
    dpsi = derivative_x(spec.psi)
    exps = sorted({i for (i, _j) in dpsi.terms if i >= 1})
    exps += sorted({i + j for (i, j) in spec.w.terms if i + j >= 1})
    if exps and not spec.psi.coeff(0, 0).is_zero():
        exps.append(1)
    return exps


def classify_jordan(spec: JordanDerivationSpec) -> IsotropyGroup:
    if spec.build().is_zero():
        return IsotropyGroup.full()
    exps = jordan_exponents(spec)
    if not exps:
        return IsotropyGroup.degenerate("outside theorem's effective hypotheses - use oracle")
    return IsotropyGroup.cyclic(math.gcd(*exps))


def construct_delta_r(r: int, ctx: CycloContext | None = None) -> JordanDerivationSpec:
    """A Jordanian derivation whose isotropy group is cyclic of order r: ad(x^r)."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    ctx = ctx or CycloContext(())
    pres = Presentation.JORDANIAN
    return JordanDerivationSpec(ctx.zero(), NcPoly.zero(pres, ctx), NcPoly.x(pres, ctx, r))


def classify(spec) -> IsotropyGroup:
    if isinstance(spec, JordanDerivationSpec):
        return classify_jordan(spec)
    if isinstance(spec, QWDerivationSpec):
        return classify_qw(spec)
    if isinstance(spec, (CaseA, CaseB, Inner)):
        return classify_qw(QWDerivationSpec([spec]))
    raise TypeError(f"cannot classify {type(spec).__name__}")
