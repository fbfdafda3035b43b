"""Normal-form arithmetic for three Ore extensions of K[x].

Every algebra here has the basis {x^i y^j} and a defining relation of the
shape ``y*x = lam * x*y + r(y)``:

    QuantumWeyl   y x = p x y + 1
    Jordanian     y x = x y + y^2
    FirstWeyl     y x = x y + 1

Products are normalized by rewriting ``y^m x^n`` into the basis.  The
rewriting tables are integer polynomials in ``p`` and are shared across
scalar contexts.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator

from .scalars import CycloContext, Scalar, ScalarError

__all__ = [
    "Presentation",
    "NcPoly",
    "rewrite_yx",
    "rewrite_table",
    "jordan_closed_form",
    "h_element",
    "substitute",
    "univariate_coeffs",
    "derivative_x",
]


class Presentation(enum.Enum):
    QUANTUM_WEYL = "qweyl"
    JORDANIAN = "jordan"
    FIRST_WEYL = "weyl1"

    @classmethod
    def parse(cls, tag) -> "Presentation":
        if isinstance(tag, cls):
            return tag
        aliases = {
            "qweyl": cls.QUANTUM_WEYL, "quantumweyl": cls.QUANTUM_WEYL, "quantum_weyl": cls.QUANTUM_WEYL,
            "jordan": cls.JORDANIAN, "jordanian": cls.JORDANIAN,
            "weyl1": cls.FIRST_WEYL, "firstweyl": cls.FIRST_WEYL, "first_weyl": cls.FIRST_WEYL,
        }
        try:
            return aliases[str(tag).lower()]
        except KeyError:
            raise ValueError(f"unknown algebra {tag!r}") from None

    def check_context(self, ctx: CycloContext) -> None:
        if self is Presentation.QUANTUM_WEYL and not ctx.has_param("p"):
            raise ScalarError("the quantum Weyl algebra needs parameter 'p' in the scalar context")


# Integer polynomials in p are tuples of ints, lowest power first.

def _ip_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _ip_shift(a: tuple, k: int) -> tuple:
    """Multiply by p^k."""
    return (0,) * k + a if any(a) else (0,)


def _accumulate(table: dict, key, coeff: tuple) -> None:
    s = _ip_add(table.get(key, (0,)), coeff)
    if any(s):
        table[key] = s
    else:
        table.pop(key, None)


def _relation(pres: Presentation):
    """(lam as p-power, r(y) as {j: int}) for y x = p^lam_pow x y + r(y)."""
    if pres is Presentation.QUANTUM_WEYL:
        return 1, {0: 1}
    if pres is Presentation.JORDANIAN:
        return 0, {2: 1}
    return 0, {0: 1}


@lru_cache(maxsize=None)
def _rewrite_single_x(pres: Presentation, m: int) -> tuple:
    """y^m x as {(i, j): int-poly-in-p}, by one swap per step."""
    if m == 0:
        return (((1, 0), (1,)),)
    lam, rest = _relation(pres)
    table: dict = {}
    # y^m x = y^(m-1) (lam x y + r(y)) = lam (y^(m-1) x) y + y^(m-1) r(y)
    for (i, j), c in _rewrite_single_x(pres, m - 1):
        _accumulate(table, (i, j + 1), _ip_shift(c, lam))
    for k, c in rest.items():
        _accumulate(table, (0, m - 1 + k), (c,))
    return tuple(sorted(table.items()))


@lru_cache(maxsize=None)
def rewrite_table(pres: Presentation, m: int, n: int) -> tuple:
    """Normal form of y^m x^n by iterated single swaps.

    Returns a sorted tuple of ``((i, j), coeffs)`` where ``coeffs`` lists the
    integer coefficients of a polynomial in p (lowest power first).
    """
    if m < 0 or n < 0:
        raise ValueError("exponents must be non-negative")
    if m == 0 or n == 0:
        return (((n, m), (1,)),)
    if n == 1:
        return _rewrite_single_x(pres, m)
    table: dict = {}
    # y^m x^n = (y^m x^(n-1)) x, and x^i y^j x = x^i (y^j x)
    for (i, j), c in rewrite_table(pres, m, n - 1):
        if j == 0:
            _accumulate(table, (i + 1, 0), c)
            continue
        for (a, b), c2 in _rewrite_single_x(pres, j):
            prod = (0,)
            for k, v in enumerate(c2):
                if v:
                    prod = _ip_add(prod, _ip_shift(tuple(v * t for t in c), k))
            _accumulate(table, (i + a, b), prod)
    return tuple(sorted(table.items()))


def jordan_closed_form(m: int, n: int) -> dict:
    """y^m x^n in the Jordanian plane from the closed binomial-factorial formula.

    sum_{l=0}^{n} C(n, l) (m+n-l-1)!/(m-1)! x^l y^(m+n-l), valid for m, n >= 1.
    """
    if m < 1 or n < 1:
        raise ValueError("closed form needs m, n >= 1")
    return {
        (l, m + n - l): comb(n, l) * factorial(m + n - l - 1) // factorial(m - 1)
        for l in range(n + 1)
    }


@lru_cache(maxsize=4096)
def _rewrite_scalars(pres: Presentation, ctx: CycloContext, m: int, n: int) -> tuple:
    if pres is Presentation.QUANTUM_WEYL:
        p = ctx.param("p")
        out = []
        for key, c in rewrite_table(pres, m, n):
            s = ctx.zero()
            pk = ctx.one()
            for v in c:
                if v:
                    s = s + pk * v
                pk = pk * p
            out.append((key, s))
        return tuple(out)
    return tuple((key, ctx.const(c[0])) for key, c in rewrite_table(pres, m, n))


class NcPoly:
    """Element of one of the presentations, stored on the basis x^i y^j.

    ``terms`` maps ``(i, j)`` to a nonzero Scalar.  Treat instances as
    immutable.
    """

    __slots__ = ("pres", "ctx", "terms")

    def __init__(self, pres: Presentation, ctx: CycloContext, terms: dict | None = None):
        self.pres = pres
        self.ctx = ctx
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def _raw(cls, pres, ctx, terms):
        obj = cls.__new__(cls)
        obj.pres, obj.ctx, obj.terms = pres, ctx, terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, pres, ctx) -> "NcPoly":
        return cls._raw(pres, ctx, {})

    @classmethod
    def const(cls, pres, ctx, c) -> "NcPoly":
        return cls.monomial(pres, ctx, 0, 0, c)

    @classmethod
    def one(cls, pres, ctx) -> "NcPoly":
        return cls.const(pres, ctx, 1)

    @classmethod
    def monomial(cls, pres, ctx, i: int, j: int, c=1) -> "NcPoly":
        if i < 0 or j < 0:
            raise ValueError("monomial exponents must be non-negative")
        return cls(pres, ctx, {(i, j): ctx.coerce(c)})

    @classmethod
    def x(cls, pres, ctx, power: int = 1) -> "NcPoly":
        return cls.monomial(pres, ctx, power, 0)

    @classmethod
    def y(cls, pres, ctx, power: int = 1) -> "NcPoly":
        return cls.monomial(pres, ctx, 0, power)

    def gen_x(self) -> "NcPoly":
        return NcPoly.x(self.pres, self.ctx)

    def gen_y(self) -> "NcPoly":
        return NcPoly.y(self.pres, self.ctx)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), self.ctx.zero())

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def scalar_value(self) -> Scalar:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.coeff(0, 0)

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))

    def items(self) -> Iterator[tuple[tuple[int, int], Scalar]]:
        for k in self.support():
            yield k, self.terms[k]

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "NcPoly") -> None:
        if other.pres is not self.pres:
            raise ValueError(f"presentation mismatch: {self.pres.value} vs {other.pres.value}")
        if other.ctx != self.ctx:
            raise ScalarError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return NcPoly.const(self.pres, self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = v
        return NcPoly._raw(self.pres, self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.pres, self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = self.ctx.coerce(c)
        if c.is_zero():
            return NcPoly.zero(self.pres, self.ctx)
        return NcPoly(self.pres, self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for (a, b), cf in self.terms.items():
            for (c, d), cg in other.terms.items():
                prod = cf * cg
                if b == 0 or c == 0:
                    key = (a + c, b + d)
                    acc[key] = acc[key] + prod if key in acc else prod
                    continue
                for (i, j), r in _rewrite_scalars(self.pres, self.ctx, b, c):
                    key = (a + i, j + d)
                    t = prod * r
                    acc[key] = acc[key] + t if key in acc else t
        return NcPoly(self.pres, self.ctx, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "NcPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("NcPoly powers need a non-negative integer exponent")
        result = NcPoly.one(self.pres, self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = NcPoly.const(self.pres, self.ctx, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        if other.pres is not self.pres or other.ctx != self.ctx:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def lift(self, ctx: CycloContext) -> "NcPoly":
        """Re-express in a larger scalar context."""
        if ctx == self.ctx:
            return self
        return NcPoly(self.pres, ctx, {k: ctx.lift(v) for k, v in self.terms.items()})

    def map_coeffs(self, fn) -> "NcPoly":
        return NcPoly(self.pres, self.ctx, {k: fn(k, v) for k, v in self.terms.items()})

    def format(self) -> str:
        from .printing import format_element

        return format_element(self)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"NcPoly({self.pres.value}, {self.format()!r})"


def rewrite_yx(pres: Presentation, m: int, n: int, ctx: CycloContext | None = None) -> NcPoly:
    """Normal form of y^m x^n as an element."""
    pres = Presentation.parse(pres)
    ctx = ctx or CycloContext(("p",) if pres is Presentation.QUANTUM_WEYL else ())
    pres.check_context(ctx)
    return NcPoly(pres, ctx, dict(_rewrite_scalars(pres, ctx, m, n)))


def h_element(ctx: CycloContext) -> NcPoly:
    """The normal element h = yx - xy = 1 + (p-1) xy of the quantum Weyl algebra.

    It satisfies h x = p x h and y h = p h y, and is fixed by every diagonal
    automorphism.
    """
    pres = Presentation.QUANTUM_WEYL
    pres.check_context(ctx)
    x, y = NcPoly.x(pres, ctx), NcPoly.y(pres, ctx)
    return y * x - x * y


def univariate_coeffs(f: NcPoly, var: str = "x") -> list[Scalar]:
    """Coefficient list (lowest power first) of an element using one generator only."""
    out: dict[int, Scalar] = {}
    for (i, j), c in f.terms.items():
        if var == "x":
            if j:
                raise ValueError(f"expected a polynomial in x only, got {f}")
            out[i] = c
        else:
            if i:
                raise ValueError(f"expected a polynomial in y only, got {f}")
            out[j] = c
    if not out:
        return []
    return [out.get(k, f.ctx.zero()) for k in range(max(out) + 1)]


def substitute(f: NcPoly, arg: NcPoly, var: str = "x") -> NcPoly:
    """Evaluate the univariate polynomial ``f`` (in ``var``) at ``arg``: sum f_k arg^k."""
    coeffs = univariate_coeffs(f, var)
    result = NcPoly.zero(arg.pres, arg.ctx)
    # Horner
    for c in reversed(coeffs):
        result = result * arg + NcPoly.const(arg.pres, arg.ctx, arg.ctx.lift(c))
    return result


def derivative_x(f: NcPoly) -> NcPoly:
    """Formal derivative of a polynomial in x only."""
    coeffs = univariate_coeffs(f, "x")
    return NcPoly(
        f.pres, f.ctx, {(k - 1, 0): c * k for k, c in enumerate(coeffs) if k and not c.is_zero()}
    )


def from_terms(pres: Presentation, ctx: CycloContext, items: Iterable[tuple[int, int, object]]) -> NcPoly:
    out = NcPoly.zero(pres, ctx)
    for i, j, c in items:
        out = out + NcPoly.monomial(pres, ctx, i, j, c)
    return out
