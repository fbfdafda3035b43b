"""Automorphisms, endomorphisms and (skew-)derivations as values.

A map is determined by the images of the generators.  Endomorphisms extend
multiplicatively; a skew derivation ``(delta, sigma)`` extends by the rule
``delta(ab) = delta(a) b + sigma(a) delta(b)``; ``sigma = None`` is the
ordinary Leibniz rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .ore import NcPoly, Presentation, derivative_x, h_element, substitute, univariate_coeffs
from .scalars import CycloContext, Scalar, ScalarError

__all__ = [
    "DiagAuto",
    "JordanAuto",
    "Endo",
    "SkewDerivation",
    "identity",
    "apply_endo",
    "endo_is_valid",
    "compose",
    "inverse",
    "apply_derivation",
    "ad_sigma",
    "case_a_derivation",
    "case_b_derivation",
    "jordan_derivation",
    "derivation_is_consistent",
    "commutator_on_generators",
    "conjugate",
    "relation_defect",
]


def _substitute_generators(f: NcPoly, ix: NcPoly, iy: NcPoly) -> NcPoly:
    """Ring-homomorphic image of ``f`` under x -> ix, y -> iy."""
    out = NcPoly.zero(ix.pres, ix.ctx)
    xpow = {0: NcPoly.one(ix.pres, ix.ctx)}
    ypow = {0: NcPoly.one(ix.pres, ix.ctx)}

    def power(cache, base, k):
        if k not in cache:
            top = max(cache)
            acc = cache[top]
            for e in range(top + 1, k + 1):
                acc = acc * base
                cache[e] = acc
        return cache[k]

    for (i, j), c in f.terms.items():
        out = out + (power(xpow, ix, i) * power(ypow, iy, j)).scale(ix.ctx.lift(c))
    return out


@dataclass(frozen=True, eq=False)
class DiagAuto:
    """x -> beta^-1 x, y -> beta y."""

    beta: Scalar
    pres: Presentation = Presentation.QUANTUM_WEYL

    def __post_init__(self):
        if self.beta.is_zero():
            raise ScalarError("DiagAuto needs a nonzero beta")

    @property
    def ctx(self) -> CycloContext:
        return self.beta.ctx

    def images(self) -> tuple[NcPoly, NcPoly]:
        return (
            NcPoly.monomial(self.pres, self.ctx, 1, 0, self.beta.inverse()),
            NcPoly.monomial(self.pres, self.ctx, 0, 1, self.beta),
        )

    def apply(self, f: NcPoly) -> NcPoly:
        # x^i y^j has weight j - i
        powers: dict[int, Scalar] = {}
        out = {}
        for (i, j), c in f.terms.items():
            w = j - i
            if w not in powers:
                powers[w] = self.beta**w
            out[(i, j)] = c * powers[w]
        return NcPoly(f.pres, f.ctx, out)

    def lift(self, ctx: CycloContext) -> "DiagAuto":
        return DiagAuto(ctx.lift(self.beta), self.pres)

    def __repr__(self):
        return f"DiagAuto(beta={self.beta.format()})"


@dataclass(frozen=True, eq=False)
class JordanAuto:
    """x -> gamma x + g(y), y -> gamma y on the Jordanian plane."""

    gamma: Scalar
    g: NcPoly

    def __post_init__(self):
        if self.gamma.is_zero():
            raise ScalarError("JordanAuto needs a nonzero gamma")
        if self.g.pres is not Presentation.JORDANIAN:
            raise ValueError("JordanAuto lives on the Jordanian plane")
        univariate_coeffs(self.g, "y")

    @classmethod
    def make(cls, gamma: Scalar, g: NcPoly | None = None) -> "JordanAuto":
        if g is None:
            g = NcPoly.zero(Presentation.JORDANIAN, gamma.ctx)
        return cls(gamma, g)

    @property
    def pres(self) -> Presentation:
        return Presentation.JORDANIAN

    @property
    def ctx(self) -> CycloContext:
        return self.gamma.ctx

    def images(self) -> tuple[NcPoly, NcPoly]:
        pres, ctx = self.pres, self.ctx
        return (
            NcPoly.monomial(pres, ctx, 1, 0, self.gamma) + self.g,
            NcPoly.monomial(pres, ctx, 0, 1, self.gamma),
        )

    def apply(self, f: NcPoly) -> NcPoly:
        return _substitute_generators(f, *self.images())

    def lift(self, ctx: CycloContext) -> "JordanAuto":
        return JordanAuto(ctx.lift(self.gamma), self.g.lift(ctx))

    def __repr__(self):
        return f"JordanAuto(gamma={self.gamma.format()}, g={self.g.format()})"


@dataclass(frozen=True, eq=False)
class Endo:
    """Endomorphism given by arbitrary generator images."""

    image_x: NcPoly
    image_y: NcPoly

    def __post_init__(self):
        if self.image_x.pres is not self.image_y.pres or self.image_x.ctx != self.image_y.ctx:
            raise ValueError("generator images must share presentation and context")

    @property
    def pres(self) -> Presentation:
        return self.image_x.pres

    @property
    def ctx(self) -> CycloContext:
        return self.image_x.ctx

    def images(self) -> tuple[NcPoly, NcPoly]:
        return self.image_x, self.image_y

    def apply(self, f: NcPoly) -> NcPoly:
        return _substitute_generators(f, self.image_x, self.image_y)

    def lift(self, ctx: CycloContext) -> "Endo":
        return Endo(self.image_x.lift(ctx), self.image_y.lift(ctx))

    def __repr__(self):
        return f"Endo({self.image_x.format()}, {self.image_y.format()})"


Map = Union[DiagAuto, JordanAuto, Endo]


def identity(pres: Presentation, ctx: CycloContext) -> Endo:
    return Endo(NcPoly.x(pres, ctx), NcPoly.y(pres, ctx))


def _check_same(a, b) -> None:
    if a.pres is not b.pres:
        raise ValueError(f"presentation mismatch: {a.pres.value} vs {b.pres.value}")
    if a.ctx != b.ctx:
        raise ScalarError(f"context mismatch: {a.ctx} vs {b.ctx}")


def apply_endo(phi: Map, f: NcPoly) -> NcPoly:
    _check_same(phi, f)
    return phi.apply(f)


def relation_defect(pres: Presentation, ix: NcPoly, iy: NcPoly) -> NcPoly:
    """iy*ix minus the relation's right-hand side evaluated at (ix, iy)."""
    lhs = iy * ix
    if pres is Presentation.QUANTUM_WEYL:
        p = ix.ctx.param("p")
        return lhs - (ix * iy).scale(p) - 1
    if pres is Presentation.JORDANIAN:
        return lhs - ix * iy - iy * iy
    return lhs - ix * iy - 1


def endo_is_valid(phi: Map) -> bool:
    """True iff the generator images satisfy the defining relation."""
    ix, iy = phi.images()
    return relation_defect(phi.pres, ix, iy).is_zero()


def compose(phi2: Map, phi1: Map) -> Map:
    """phi2 after phi1."""
    _check_same(phi2, phi1)
    if isinstance(phi2, DiagAuto) and isinstance(phi1, DiagAuto):
        return DiagAuto(phi2.beta * phi1.beta, phi2.pres)
    if isinstance(phi2, JordanAuto) and isinstance(phi1, JordanAuto):
        # (g2, g1) -> (gamma1 gamma2, gamma1 g2(y) + g1(gamma2 y))
        y = NcPoly.y(phi1.pres, phi1.ctx)
        g1_scaled = substitute(phi1.g, y.scale(phi2.gamma), var="y")
        return JordanAuto(phi1.gamma * phi2.gamma, phi2.g.scale(phi1.gamma) + g1_scaled)
    ix, iy = phi1.images()
    return Endo(phi2.apply(ix), phi2.apply(iy))


def _triangular_shift(phi: Endo):
    """Recognize (x, y + f(x)); returns f or None."""
    ix, iy = phi.images()
    x, y = NcPoly.x(phi.pres, phi.ctx), NcPoly.y(phi.pres, phi.ctx)
    if ix != x:
        return None
    f = iy - y
    try:
        univariate_coeffs(f, "x")
    except ValueError:
        return None
    return f


def _affine_part(phi: Endo):
    """Recognize x -> a x + b y + e, y -> c x + d y + k; returns the coefficients or None."""
    out = []
    for img in phi.images():
        if any(i + j > 1 for i, j in img.terms):
            return None
        out.append((img.coeff(1, 0), img.coeff(0, 1), img.coeff(0, 0)))
    return out


def inverse(phi: Map) -> Map:
    if isinstance(phi, DiagAuto):
        return DiagAuto(phi.beta.inverse(), phi.pres)
    if isinstance(phi, JordanAuto):
        # gamma' = 1/gamma, g'(y) = -gamma^-1 g(gamma^-1 y)
        gi = phi.gamma.inverse()
        y = NcPoly.y(phi.pres, phi.ctx)
        g = substitute(phi.g, y.scale(gi), var="y").scale(-gi)
        return JordanAuto(gi, g)
    f = _triangular_shift(phi)
    if f is not None:
        x, y = NcPoly.x(phi.pres, phi.ctx), NcPoly.y(phi.pres, phi.ctx)
        return Endo(x, y - f)
    aff = _affine_part(phi)
    if aff is not None:
        (a, b, e), (c, d, k) = aff
        det = a * d - b * c
        if det.is_zero():
            raise ValueError("endomorphism is not invertible")
        x, y = NcPoly.x(phi.pres, phi.ctx), NcPoly.y(phi.pres, phi.ctx)
        # inverse linear map applied to (x - e, y - k)
        xs, ys = x - NcPoly.const(phi.pres, phi.ctx, e), y - NcPoly.const(phi.pres, phi.ctx, k)
        inv = Endo(xs.scale(d / det) - ys.scale(b / det), ys.scale(a / det) - xs.scale(c / det))
        return inv
    raise ValueError(f"cannot invert {phi!r}: not diagonal, Jordanian, affine or triangular")


def is_identity(phi: Map) -> bool:
    ix, iy = phi.images()
    return ix == NcPoly.x(phi.pres, phi.ctx) and iy == NcPoly.y(phi.pres, phi.ctx)


# ---------------------------------------------------------------------------
# Skew derivations
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SkewDerivation:
    """A sigma-derivation fixed by delta(x), delta(y); ``twist=None`` means sigma = id."""

    dx: NcPoly
    dy: NcPoly
    twist: Optional[Map] = None
    meta: dict = field(default_factory=dict, compare=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.dx.pres is not self.dy.pres or self.dx.ctx != self.dy.ctx:
            raise ValueError("derivation images must share presentation and context")
        if self.twist is not None:
            _check_same(self.twist, self.dx)

    @property
    def pres(self) -> Presentation:
        return self.dx.pres

    @property
    def ctx(self) -> CycloContext:
        return self.dx.ctx

    def sigma(self, f: NcPoly) -> NcPoly:
        return f if self.twist is None else self.twist.apply(f)

    def _power(self, var: str, k: int) -> NcPoly:
        # delta(v^k) = delta(v^(k-1)) v + sigma(v)^(k-1) delta(v)
        key = (var, k)
        if key in self._cache:
            return self._cache[key]
        pres, ctx = self.pres, self.ctx
        if k == 0:
            out = NcPoly.zero(pres, ctx)
        else:
            gen = NcPoly.x(pres, ctx) if var == "x" else NcPoly.y(pres, ctx)
            base = self.dx if var == "x" else self.dy
            prev = self._power(var, k - 1)
            sig = self.sigma(NcPoly.x(pres, ctx, k - 1) if var == "x" else NcPoly.y(pres, ctx, k - 1))
            out = prev * gen + sig * base
        self._cache[key] = out
        return out

    def on_monomial(self, i: int, j: int) -> NcPoly:
        key = ("m", i, j)
        if key not in self._cache:
            pres, ctx = self.pres, self.ctx
            xi, yj = NcPoly.x(pres, ctx, i), NcPoly.y(pres, ctx, j)
            self._cache[key] = self._power("x", i) * yj + self.sigma(xi) * self._power("y", j)
        return self._cache[key]

    def apply(self, f: NcPoly) -> NcPoly:
        _check_same(self.dx, f)
        out = NcPoly.zero(self.pres, self.ctx)
        for (i, j), c in f.terms.items():
            if i == 0 and j == 0:
                continue
            out = out + self.on_monomial(i, j).scale(c)
        return out

    def __call__(self, f: NcPoly) -> NcPoly:
        return self.apply(f)

    def __add__(self, other: "SkewDerivation") -> "SkewDerivation":
        _check_same(self.dx, other.dx)
        if not _same_twist(self.twist, other.twist):
            raise ValueError("cannot add derivations with different twists")
        return SkewDerivation(self.dx + other.dx, self.dy + other.dy, self.twist)

    def scale(self, c) -> "SkewDerivation":
        return SkewDerivation(self.dx.scale(c), self.dy.scale(c), self.twist)

    def is_zero(self) -> bool:
        return self.dx.is_zero() and self.dy.is_zero()

    def lift(self, ctx: CycloContext) -> "SkewDerivation":
        twist = None if self.twist is None else self.twist.lift(ctx)
        return SkewDerivation(self.dx.lift(ctx), self.dy.lift(ctx), twist, dict(self.meta))

    def __repr__(self):
        t = "id" if self.twist is None else repr(self.twist)
        return f"SkewDerivation(dx={self.dx.format()}, dy={self.dy.format()}, twist={t})"


def _same_twist(a, b) -> bool:
    if a is None or b is None:
        return (a is None or is_identity(a)) and (b is None or is_identity(b))
    return all(u == v for u, v in zip(a.images(), b.images()))


def apply_derivation(delta: SkewDerivation, f: NcPoly) -> NcPoly:
    return delta.apply(f)


def ad_sigma(w: NcPoly, sigma: Optional[Map] = None) -> SkewDerivation:
    """The inner sigma-derivation a -> w a - sigma(a) w (sigma=None: ordinary ad w)."""
    x, y = w.gen_x(), w.gen_y()
    sx = x if sigma is None else sigma.apply(x)
    sy = y if sigma is None else sigma.apply(y)
    delta = SkewDerivation(w * x - sx * w, w * y - sy * w, sigma, {"kind": "inner"})
    return delta


def case_a_derivation(f: NcPoly, mu: Scalar) -> SkewDerivation:
    """The h-annihilating family on the quantum Weyl algebra, twisted by sigma_mu.

    delta(x) = f(h) x and delta(y) = -mu f(p h) y, where ``f`` is written as
    a polynomial in x standing for the formal variable.
    """
    ctx = mu.ctx
    pres = Presentation.QUANTUM_WEYL
    if mu.is_zero():
        raise ScalarError("mu must be nonzero")
    f = f.lift(ctx) if f.ctx != ctx else f
    h = h_element(ctx)
    x, y = NcPoly.x(pres, ctx), NcPoly.y(pres, ctx)
    p = ctx.param("p")
    dx = substitute(f, h) * x
    dy = (substitute(f, h.scale(p)) * y).scale(-mu)
    return SkewDerivation(dx, dy, DiagAuto(mu, pres), {"kind": "case_a"})


def case_b_derivation(d: int, a: NcPoly, b: NcPoly) -> SkewDerivation:
    """delta(x) = h^d b(y), delta(y) = h^d a(x), twisted by sigma_mu with mu = p^(1-d)."""
    if d < 0:
        raise ValueError("d must be non-negative")
    univariate_coeffs(a, "x")
    univariate_coeffs(b, "y")
    ctx = a.ctx
    hd = h_element(ctx) ** d
    mu = ctx.param("p") ** (1 - d)
    return SkewDerivation(hd * b, hd * a, DiagAuto(mu, Presentation.QUANTUM_WEYL), {"kind": "case_b", "d": d})


def jordan_derivation(alpha, psi: NcPoly, w: NcPoly) -> SkewDerivation:
    """delta(x) = alpha y + psi(x) + [w, x], delta(y) = psi'(x) y + [w, y]."""
    if psi.pres is not Presentation.JORDANIAN or w.pres is not Presentation.JORDANIAN:
        raise ValueError("jordan_derivation needs Jordanian elements")
    ctx = w.ctx
    alpha = ctx.coerce(alpha)
    x, y = NcPoly.x(psi.pres, ctx), NcPoly.y(psi.pres, ctx)
    dx = y.scale(alpha) + psi + (w * x - x * w)
    dy = derivative_x(psi) * y + (w * y - y * w)
    return SkewDerivation(dx, dy, None, {"kind": "jordan"})


def derivation_is_consistent(delta: SkewDerivation) -> bool:
    """True iff the skew-Leibniz extension respects the defining relation."""
    pres, ctx = delta.pres, delta.ctx
    if delta.twist is not None and not endo_is_valid(delta.twist):
        return False
    x, y = NcPoly.x(pres, ctx), NcPoly.y(pres, ctx)
    sx, sy = delta.sigma(x), delta.sigma(y)
    lhs = delta.dy * x + sy * delta.dx  # delta(y x)
    rhs_xy = delta.dx * y + sx * delta.dy  # delta(x y)
    if pres is Presentation.QUANTUM_WEYL:
        rhs = rhs_xy.scale(ctx.param("p"))
    elif pres is Presentation.JORDANIAN:
        rhs = rhs_xy + delta.dy * y + sy * delta.dy
    else:
        rhs = rhs_xy
    return (lhs - rhs).is_zero()


def commutator_on_generators(delta: SkewDerivation, phi: Map) -> tuple[NcPoly, NcPoly]:
    """((delta phi - phi delta)(x), (delta phi - phi delta)(y))."""
    _check_same(phi, delta.dx)
    ix, iy = phi.images()
    return delta.apply(ix) - phi.apply(delta.dx), delta.apply(iy) - phi.apply(delta.dy)


def _commutes(a: Map, b: Map) -> bool:
    return all(a.apply(u) == b.apply(v) for u, v in zip(b.images(), a.images()))


def conjugate(phi: Map, delta: SkewDerivation) -> SkewDerivation:
    """phi delta phi^-1, defined on generators."""
    _check_same(phi, delta.dx)
    if delta.twist is not None and not _commutes(phi, delta.twist):
        raise ValueError("conjugation needs phi to commute with the twist")
    phi_inv = inverse(phi)
    ix, iy = phi_inv.images()
    dx = phi.apply(delta.apply(ix))
    dy = phi.apply(delta.apply(iy))
    return SkewDerivation(dx, dy, delta.twist, dict(delta.meta))
