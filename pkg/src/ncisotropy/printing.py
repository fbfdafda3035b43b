"""Pretty-printer for elements in normal order (x-power before y-power)."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .ore import NcPoly


def _monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def _composite(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return any(ch in body for ch in "+-/")


def format_element(f: "NcPoly") -> str:
    """Render ``f`` with terms by descending total degree, then descending x-power."""
    if f.is_zero():
        return "0"
    pieces = []
    for (i, j), c in f.items():
        s = c.format()
        mono = _monomial(i, j)
        negative = s.startswith("-") and not _composite(s)
        if negative:
            s = s[1:]
        if not mono:
            term = f"({s})" if _composite(s) and len(f.terms) > 1 else s
        elif s == "1":
            term = mono
        elif _composite(s):
            term = f"({s})*{mono}"
        else:
            term = f"{s}*{mono}"
        pieces.append((negative, term))
    neg, first = pieces[0]
    out = ("-" if neg else "") + first
    for neg, term in pieces[1:]:
        out += (" - " if neg else " + ") + term
    return out
