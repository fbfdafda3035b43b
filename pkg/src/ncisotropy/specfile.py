"""JSON records for derivations, automorphisms and classification claims.

Derivation records carry a ``"kind"`` discriminator::

    {"kind": "case_a", "f": "1 + x^2", "mu": "mu"}          # f written in x
    {"kind": "case_b", "d": 2, "a": "x^17", "b": "y^5 + y^11"}
    {"kind": "inner", "w": "x*y^4 + x^7*y^4", "mu": "mu"}    # mu omitted -> ordinary ad w
    {"kind": "combination", "components": [...]}
    {"kind": "jordan", "alpha": "0", "psi": "x^2 + 3*x", "w": "x*y"}
    {"kind": "generic", "images": ["dx", "dy"], "twist": {...}}

Automorphism records::

    {"kind": "diag", "beta": "zeta"}
    {"kind": "jordan", "gamma": "zeta", "g": "y^2"}
    {"kind": "endo", "images": ["x", "y + x^3"]}

A spec file wraps one derivation::

    {"algebra": "qweyl", "params": [...], "root_order": 1,
     "derivation": {...}, "automorphisms": [...],
     "claimed": {"variant": "cyclic", "order": 6}, "test_orders": [1, 2, 3]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .isotropy import CaseA, CaseB, Inner, IsotropyGroup, JordanDerivationSpec, QWDerivationSpec
from .maps import DiagAuto, Endo, JordanAuto, SkewDerivation, ad_sigma
from .ore import NcPoly, Presentation
from .parsing import ParseError, parse_element, parse_scalar
from .scalars import CycloContext

__all__ = ["SpecError", "SessionConfig", "SpecFile", "load_json", "load_spec_file", "build_derivation", "build_automorphism", "default_params"]


class SpecError(ValueError):
    """Schema violation in a spec record."""


def default_params(pres: Presentation) -> tuple[str, ...]:
    return ("p", "mu") if pres is Presentation.QUANTUM_WEYL else ()


@dataclass(frozen=True)
class SessionConfig:
    algebra: Presentation = Presentation.QUANTUM_WEYL
    params: tuple[str, ...] = ("p", "mu")
    root_order: int = 1
    output: str = "text"

    def __post_init__(self):
        if self.algebra is Presentation.QUANTUM_WEYL and "p" not in self.params:
            raise SpecError("the quantum Weyl algebra requires parameter 'p'")

    @property
    def ctx(self) -> CycloContext:
        return CycloContext(self.params, self.root_order)

    def element(self, text: str) -> NcPoly:
        return parse_element(text, self.algebra, self.ctx)

    def scalar(self, text) -> Any:
        return parse_scalar(str(text), self.ctx)


def load_json(source: str) -> Any:
    """Parse inline JSON, or read it from a file path."""
    text = source.strip()
    if not text.startswith(("{", "[")):
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise SpecError(f"cannot read spec {source!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc


def _require(record: dict, key: str):
    if not isinstance(record, dict):
        raise SpecError(f"expected an object, got {type(record).__name__}")
    if key not in record:
        raise SpecError(f"missing field {key!r} in {record.get('kind', 'record')} record")
    return record[key]


def _text(record: dict, key: str, default: Optional[str] = None) -> str:
    value = record.get(key, default) if default is not None else _require(record, key)
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return str(value)
    if not isinstance(value, str):
        raise SpecError(f"field {key!r} must be an expression string")
    return value


def _need_qweyl(session: SessionConfig, kind: str) -> None:
    if session.algebra is not Presentation.QUANTUM_WEYL:
        raise SpecError(f"derivation kind {kind!r} needs the quantum Weyl algebra")


def derivation_spec(record: dict, session: SessionConfig):
    """Classifiable spec object for a derivation record (None for 'generic')."""
    kind = _require(record, "kind")
    if kind == "case_a":
        _need_qweyl(session, kind)
        return CaseA(session.element(_text(record, "f")), session.scalar(_text(record, "mu", "mu")))
    if kind == "case_b":
        _need_qweyl(session, kind)
        d = _require(record, "d")
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise SpecError("case_b field 'd' must be a non-negative integer")
        return CaseB(d, session.element(_text(record, "a", "0")), session.element(_text(record, "b", "0")))
    if kind == "inner":
        w = session.element(_text(record, "w"))
        if session.algebra is Presentation.QUANTUM_WEYL:
            return Inner(w, session.scalar(_text(record, "mu", "mu")))
        return None
    if kind == "combination":
        _need_qweyl(session, kind)
        comps = _require(record, "components")
        if not isinstance(comps, list) or not comps:
            raise SpecError("'components' must be a non-empty list")
        parts = []
        for c in comps:
            spec = derivation_spec(c, session)
            if isinstance(spec, QWDerivationSpec):
                parts.extend(spec.components)
            else:
                parts.append(spec)
        return QWDerivationSpec(parts)
    if kind == "jordan":
        if session.algebra is not Presentation.JORDANIAN:
            raise SpecError("derivation kind 'jordan' needs the Jordanian plane")
        return JordanDerivationSpec(
            session.scalar(_text(record, "alpha", "0")),
            session.element(_text(record, "psi", "0")),
            session.element(_text(record, "w", "0")),
        )
    if kind == "generic":
        return None
    raise SpecError(f"unknown derivation kind {kind!r}")


def build_derivation(record: dict, session: SessionConfig) -> SkewDerivation:
    kind = _require(record, "kind")
    if kind == "generic":
        images = _require(record, "images")
        if not isinstance(images, list) or len(images) != 2:
            raise SpecError("'images' must be a list [delta(x), delta(y)]")
        twist = record.get("twist")
        return SkewDerivation(
            session.element(str(images[0])),
            session.element(str(images[1])),
            None if twist is None else build_automorphism(twist, session),
        )
    if kind == "inner" and session.algebra is not Presentation.QUANTUM_WEYL:
        return ad_sigma(session.element(_text(record, "w")))
    spec = derivation_spec(record, session)
    if isinstance(spec, QWDerivationSpec):
        return spec.build()
    return spec.build()


def build_automorphism(record: dict, session: SessionConfig):
    kind = _require(record, "kind")
    if kind == "diag":
        beta = session.scalar(_text(record, "beta"))
        if beta.is_zero():
            raise SpecError("diag automorphism needs a nonzero beta")
        return DiagAuto(beta, session.algebra)
    if kind == "jordan":
        if session.algebra is not Presentation.JORDANIAN:
            raise SpecError("automorphism kind 'jordan' needs the Jordanian plane")
        gamma = session.scalar(_text(record, "gamma"))
        if gamma.is_zero():
            raise SpecError("jordan automorphism needs a nonzero gamma")
        try:
            return JordanAuto(gamma, session.element(_text(record, "g", "0")))
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
    if kind == "endo":
        images = _require(record, "images")
        if not isinstance(images, list) or len(images) != 2:
            raise SpecError("'images' must be a list [phi(x), phi(y)]")
        return Endo(session.element(str(images[0])), session.element(str(images[1])))
    raise SpecError(f"unknown automorphism kind {kind!r}")


@dataclass
class SpecFile:
    session: SessionConfig
    derivation: dict
    automorphisms: list = field(default_factory=list)
    claimed: Optional[IsotropyGroup] = None
    test_orders: Optional[list] = None


def load_spec_file(source: str, base: Optional[SessionConfig] = None) -> SpecFile:
    data = load_json(source)
    if not isinstance(data, dict):
        raise SpecError("spec file must hold a JSON object")
    base = base or SessionConfig()
    algebra = Presentation.parse(data["algebra"]) if "algebra" in data else base.algebra
    params = list(default_params(algebra))
    for name in list(base.params) + list(data.get("params", [])):
        if not isinstance(name, str):
            raise SpecError("'params' must be a list of names")
        if name not in params:
            params.append(name)
    session = SessionConfig(algebra, tuple(params), int(data.get("root_order", base.root_order)), base.output)
    claimed = None
    if "claimed" in data:
        try:
            claimed = IsotropyGroup.from_json(data["claimed"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"invalid 'claimed' record: {exc}") from exc
    orders = data.get("test_orders")
    if orders is not None and (not isinstance(orders, list) or not all(isinstance(e, int) and e >= 1 for e in orders)):
        raise SpecError("'test_orders' must be a list of positive integers")
    return SpecFile(
        session,
        _require(data, "derivation"),
        list(data.get("automorphisms", [])),
        claimed,
        orders,
    )
