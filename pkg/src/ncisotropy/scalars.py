"""Exact coefficient arithmetic.

The coefficient field is built in layers:

    integers -> MultiPoly (integer polynomials in formal parameters)
             -> RatFunc   (fractions of MultiPoly, not gcd-reduced)
             -> Scalar    (RatFunc coefficients of a formal root of unity zeta,
                           reduced modulo the cyclotomic polynomial Phi_e)

Formal parameters such as ``p`` and ``mu`` are transcendental, so ``p`` is
never a root of unity and identities that hold "for generic p" are checked
as polynomial identities.  ``zeta`` is a primitive e-th root of unity,
exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence, Union

__all__ = [
    "ScalarError",
    "MultiPoly",
    "RatFunc",
    "CycloContext",
    "Scalar",
    "cyclotomic_poly",
    "euler_phi",
    "q_integer",
]


class ScalarError(ArithmeticError):
    """Raised on context mismatch, division by zero and similar misuse."""


Number = Union[int, Fraction]


# ---------------------------------------------------------------------------
# MultiPoly
# ---------------------------------------------------------------------------


class MultiPoly:
    """Integer polynomial in ``nvars`` formal parameters.

    Terms are stored sparsely as ``{exponent_tuple: int}``; zero coefficients
    are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        if terms:
            self.terms = {k: v for k, v in terms.items() if v}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already free of zeros
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> "MultiPoly":
        exp = [0] * nvars
        exp[index] = power
        return cls._raw(nvars, {tuple(exp): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * self.nvars) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return MultiPoly._raw(self.nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not self.terms or not other.terms:
            return MultiPoly._raw(self.nvars, {})
        if len(other.terms) == 1:
            (ek, cv), = other.terms.items()
            return MultiPoly._raw(
                self.nvars,
                {tuple(a + b for a, b in zip(k, ek)): v * cv for k, v in self.terms.items()},
            )
        if len(self.terms) == 1:
            return other * self
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "MultiPoly":
        if c == 0:
            return MultiPoly._raw(self.nvars, {})
        if c == 1:
            return self
        return MultiPoly._raw(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ScalarError("negative power of a polynomial")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def min_exponents(self) -> tuple:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def shift_down(self, exps: tuple) -> "MultiPoly":
        """Divide by the monomial with exponent vector ``exps`` (must divide)."""
        if not any(exps):
            return self
        return MultiPoly._raw(
            self.nvars,
            {tuple(a - b for a, b in zip(k, exps)): v for k, v in self.terms.items()},
        )

    def exact_div_int(self, c: int) -> "MultiPoly":
        if c == 1:
            return self
        return MultiPoly._raw(self.nvars, {k: v // c for k, v in self.terms.items()})

    def leading(self) -> tuple:
        """(exponent, coefficient) of the lexicographically largest term."""
        k = max(self.terms)
        return k, self.terms[k]

    def extend(self, index_map: Sequence[int], nvars: int) -> "MultiPoly":
        """Re-embed into a larger parameter set; ``index_map[i]`` is the new slot of old var i."""
        out = {}
        for k, v in self.terms.items():
            e = [0] * nvars
            for i, a in enumerate(k):
                e[index_map[i]] = a
            out[tuple(e)] = v
        return MultiPoly._raw(nvars, out)

    def evaluate(self, index: int, value: int) -> "MultiPoly":
        """Substitute an integer for one parameter (the slot stays, with exponent 0)."""
        out: dict = {}
        for k, v in self.terms.items():
            e = list(k)
            a = e[index]
            e[index] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + v * value**a
        return MultiPoly(self.nvars, out)

    def degree_in(self, index: int) -> int:
        return max((k[index] for k in self.terms), default=-1)

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            mono = "*".join(
                n if a == 1 else f"{n}^{a}" for n, a in zip(names, k) if a
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += s if s.startswith("-") else "+" + s
        return out

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.terms!r})"


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------


def _monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


class RatFunc:
    """Quotient ``num / den`` of MultiPoly values.

    Not kept in lowest terms.  Only cheap normalizations are applied: common
    monomial factors and integer content are stripped and the denominator's
    leading coefficient is made positive.  Equality is cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            self.num = num
            self.den = MultiPoly.constant(num.nvars, 1)
            return
        if den.is_zero():
            raise ScalarError("division by zero")
        if num.is_zero():
            self.num = num
            self.den = MultiPoly.constant(num.nvars, 1)
            return
        if not den.is_one():
            if num.terms == den.terms:
                num = MultiPoly.constant(num.nvars, 1)
                den = num
            else:
                shift = tuple(min(a, b) for a, b in zip(num.min_exponents(), den.min_exponents()))
                num, den = num.shift_down(shift), den.shift_down(shift)
                g = math.gcd(num.content(), den.content())
                if den.leading()[1] < 0:
                    g = -g
                if g != 1:
                    num, den = num.exact_div_int(g), den.exact_div_int(g)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, nvars: int, c: Number) -> "RatFunc":
        c = Fraction(c)
        return cls(MultiPoly.constant(nvars, c.numerator), MultiPoly.constant(nvars, c.denominator))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return (self.num * other.den - other.num * self.den).is_zero()

    __hash__ = None  # equality is not structural

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.is_monomial() and other.den.is_monomial():
            (e1, c1), = self.den.terms.items()
            (e2, c2), = other.den.terms.items()
            c = c1 * c2 // math.gcd(c1, c2)
            e = _monomial_lcm(e1, e2)
            m1 = MultiPoly._raw(self.nvars, {tuple(a - b for a, b in zip(e, e1)): c // c1})
            m2 = MultiPoly._raw(self.nvars, {tuple(a - b for a, b in zip(e, e2)): c // c2})
            return RatFunc(self.num * m1 + other.num * m2, MultiPoly._raw(self.nvars, {e: c}))
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc(MultiPoly(self.nvars))
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    def scale(self, c: int) -> "RatFunc":
        if c == 1:
            return self
        return RatFunc(self.num.scale(c), self.den)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ScalarError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def extend(self, index_map, nvars) -> "RatFunc":
        return RatFunc(self.num.extend(index_map, nvars), self.den.extend(index_map, nvars))

    def evaluate(self, index: int, value: int) -> "RatFunc":
        den = self.den.evaluate(index, value)
        if den.is_zero():
            raise ScalarError("substitution makes a denominator vanish")
        return RatFunc(self.num.evaluate(index, value), den)

    def format(self, names) -> str:
        n = self.num.format(names)
        if self.den.is_one():
            return n
        d = self.den.format(names)
        if len(self.num.terms) > 1:
            n = f"({n})"
        # "/" binds like "*", so any product in the denominator needs brackets
        if len(self.den.terms) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# Cyclotomic polynomials
# ---------------------------------------------------------------------------


def _upoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _upoly_divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial (coefficient lists, low degree first)."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dd = len(den) - 1
    if len(rem) - 1 < dd:
        return [0], rem
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for i, dc in enumerate(den):
                rem[k - dd + i] -= c * dc
    rem = rem[:dd] or [0]
    return quot, rem


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(e: int) -> tuple[int, ...]:
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in _divisors(e)[:-1]:
        num, rem = _upoly_divmod_monic(num, _cyclotomic_coeffs(d))
        if any(rem):
            raise AssertionError(f"non-exact cyclotomic division at e={e}, d={d}")
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def cyclotomic_poly(e: int) -> MultiPoly:
    """The e-th cyclotomic polynomial as a univariate integer MultiPoly."""
    if e < 1:
        raise ValueError("cyclotomic order must be >= 1")
    return MultiPoly(1, {(k,): c for k, c in enumerate(_cyclotomic_coeffs(e))})


# ---------------------------------------------------------------------------
# Context and Scalar
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycloContext:
    """Coefficient field Q(params)[zeta]/Phi_order.

    ``order == 1`` means no extension (zeta reduces to 1).
    """

    params: tuple[str, ...] = ("p", "mu")
    order: int = 1

    def __post_init__(self):
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in {self.params}")
        if self.order < 1:
            raise ValueError("root order must be >= 1")
        if "zeta" in self.params:
            raise ValueError("'zeta' is reserved for the root of unity")

    @property
    def nvars(self) -> int:
        return len(self.params)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def modulus(self) -> tuple[int, ...]:
        return _cyclotomic_coeffs(self.order)

    def with_order(self, order: int) -> "CycloContext":
        return CycloContext(self.params, order)

    def with_params(self, *names: str) -> "CycloContext":
        extra = tuple(n for n in names if n not in self.params)
        return CycloContext(self.params + extra, self.order) if extra else self

    def has_param(self, name: str) -> bool:
        return name in self.params

    def index(self, name: str) -> int:
        try:
            return self.params.index(name)
        except ValueError:
            raise ScalarError(f"parameter {name!r} not in context {self.params}") from None

    # constructors

    def _from_rat(self, r: RatFunc) -> "Scalar":
        zero = RatFunc(MultiPoly(self.nvars))
        return Scalar(self, (r,) + (zero,) * (self.degree - 1))

    def zero(self) -> "Scalar":
        return self.const(0)

    def one(self) -> "Scalar":
        return self.const(1)

    def const(self, c: Number) -> "Scalar":
        return _const_cached(self, Fraction(c))

    def param(self, name: str) -> "Scalar":
        return self._from_rat(RatFunc(MultiPoly.variable(self.nvars, self.index(name))))

    def zeta(self) -> "Scalar":
        if self.degree == 1:
            # Phi_1 = x - 1, Phi_2 = x + 1
            return self.const(-self.modulus[0])
        coeffs = [RatFunc(MultiPoly(self.nvars))] * self.degree
        coeffs[1] = RatFunc(MultiPoly.constant(self.nvars, 1))
        return Scalar(self, tuple(coeffs))

    def coerce(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.ctx != self:
                return self.lift(value)
            return value
        if isinstance(value, (int, Fraction)):
            return self.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    def lift(self, s: "Scalar") -> "Scalar":
        """Embed a scalar from a sub-context (fewer params, order dividing ours)."""
        src = s.ctx
        if src == self:
            return s
        if self.order % src.order:
            raise ScalarError(f"cannot embed order {src.order} into order {self.order}")
        try:
            index_map = [self.params.index(n) for n in src.params]
        except ValueError:
            raise ScalarError(f"parameters {src.params} not contained in {self.params}") from None
        step = self.order // src.order
        acc = [RatFunc(MultiPoly(self.nvars))] * (self.order if self.order > 1 else 1)
        for k, c in enumerate(s.coeffs):
            if c.is_zero():
                continue
            acc[(k * step) % len(acc)] = acc[(k * step) % len(acc)] + c.extend(index_map, self.nvars)
        return Scalar(self, _reduce(acc, self.modulus))


@lru_cache(maxsize=1024)
def _const_cached(ctx: CycloContext, c: Fraction) -> "Scalar":
    return ctx._from_rat(RatFunc.constant(ctx.nvars, c))


def _reduce(coeffs: list, modulus: Sequence[int]) -> tuple:
    """Reduce a coefficient list (powers of zeta) modulo the monic ``modulus``."""
    deg = len(modulus) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        # zeta^deg = -sum_{i<deg} modulus[i] zeta^i
        for i in range(deg):
            m = modulus[i]
            if m:
                coeffs[k - deg + i] = coeffs[k - deg + i] - c.scale(m)
        coeffs[k] = RatFunc(MultiPoly(c.nvars))
    out = coeffs[:deg]
    while len(out) < deg:
        out.append(RatFunc(MultiPoly(coeffs[0].nvars if coeffs else 0)))
    return tuple(out)


class Scalar:
    """Element of ``ctx``: sum of ``coeffs[k] * zeta**k``, already reduced."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycloContext, coeffs: tuple):
        if len(coeffs) != ctx.degree:
            raise ScalarError("coefficient vector does not match the context degree")
        self.ctx = ctx
        self.coeffs = coeffs

    # -- helpers ------------------------------------------------------------

    def _other(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise ScalarError(f"context mismatch: {self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        """True when free of zeta."""
        return all(c.is_zero() for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction | None:
        """The value as a rational number, or None if it involves parameters or zeta."""
        if not self.is_rational():
            return None
        r = self.coeffs[0]
        if r.num.is_constant() and r.den.is_constant():
            return Fraction(r.num.constant_value(), r.den.constant_value())
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Scalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Scalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return Scalar(self.ctx, (a[0] * b[0],))
        nz_a = [(i, c) for i, c in enumerate(a) if not c.is_zero()]
        nz_b = [(j, c) for j, c in enumerate(b) if not c.is_zero()]
        zero = RatFunc(MultiPoly(self.ctx.nvars))
        if not nz_a or not nz_b:
            return Scalar(self.ctx, (zero,) * len(a))
        acc = [zero] * (2 * len(a) - 1)
        for i, x in nz_a:
            for j, y in nz_b:
                acc[i + j] = acc[i + j] + x * y
        return Scalar(self.ctx, _reduce(acc, self.ctx.modulus))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ScalarError("division by zero")
        nz = [(k, c) for k, c in enumerate(self.coeffs) if not c.is_zero()]
        if len(nz) == 1:
            k, c = nz[0]
            inv = self.ctx._from_rat(c.inverse())
            if k == 0:
                return inv
            # zeta^-k = zeta^(e-k)
            return inv * (self.ctx.zeta() ** (self.ctx.order - k))
        return Scalar(self.ctx, _invert_mod(list(self.coeffs), self.ctx))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            raise TypeError("exponent must be an integer")
        if k < 0:
            if self.is_zero():
                raise ScalarError("zero to a negative power")
            return self.inverse() ** (-k)
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return (self - other).is_zero()

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # -- structure ----------------------------------------------------------

    def substitute(self, name: str, value: int) -> "Scalar":
        """Evaluate one parameter at an integer."""
        idx = self.ctx.index(name)
        return Scalar(self.ctx, tuple(c.evaluate(idx, value) for c in self.coeffs))

    def format(self) -> str:
        names = self.ctx.params
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            s = c.format(names)
            if k == 0:
                parts.append(s)
                continue
            z = "zeta" if k == 1 else f"zeta^{k}"
            if s == "1":
                parts.append(z)
            elif s == "-1":
                parts.append("-" + z)
            elif _is_atomic(s):
                parts.append(f"{s}*{z}")
            else:
                parts.append(f"({s})*{z}")
        if not parts:
            return "0"
        out = parts[0]
        for s in parts[1:]:
            out += s if s.startswith("-") else "+" + s
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Scalar({self.format()!r}, order={self.ctx.order})"


def _is_atomic(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return not any(ch in body for ch in "+-/")


def _invert_mod(coeffs: list, ctx: CycloContext) -> tuple:
    """Inverse in K[zeta]/Phi_e via the extended Euclidean algorithm over K = Q(params)."""
    nv = ctx.nvars
    zero = RatFunc(MultiPoly(nv))
    one = RatFunc(MultiPoly.constant(nv, 1))

    def trim(a):
        a = list(a)
        while a and a[-1].is_zero():
            a.pop()
        return a

    def sub(a, b):
        n = max(len(a), len(b))
        a = a + [zero] * (n - len(a))
        b = b + [zero] * (n - len(b))
        return trim([x - y for x, y in zip(a, b)])

    def mul(a, b):
        if not a or not b:
            return []
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return trim(out)

    def divmod_(a, b):
        q = [zero] * max(len(a) - len(b) + 1, 1)
        r = list(a)
        lead_inv = b[-1].inverse()
        while len(r) >= len(b) and r:
            c = r[-1] * lead_inv
            shift = len(r) - len(b)
            q[shift] = c
            r = sub(r, [zero] * shift + [c * t for t in b])
        return trim(q), r

    r0 = [RatFunc.constant(nv, m) for m in ctx.modulus]
    r1 = trim(coeffs)
    s0, s1 = [], [one]
    while len(r1) > 1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
    if not r1:
        raise ScalarError("element is not invertible")
    inv_c = r1[0].inverse()
    res = [c * inv_c for c in s1]
    return _reduce(res + [zero] * max(0, ctx.degree - len(res)), ctx.modulus)


def q_integer(n: int, ctx: CycloContext) -> Scalar:
    """The geometric sum 1 + p + ... + p^(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    p = ctx.param("p")
    total = ctx.zero()
    term = ctx.one()
    for _ in range(n):
        total = total + term
        term = term * p
    return total
