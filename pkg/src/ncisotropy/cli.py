"""Command-line front end.

Exit codes: 0 success or confirmed, 1 verification refuted (or a selftest
failure), 2 parse or schema error, 3 degenerate or unsupported classification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .isotropy import IsotropyGroup, JordanDerivationSpec, classify
from .maps import apply_endo, commutator_on_generators
from .oracle import probe_jordan_g, verify_cyclic_claim
from .ore import Presentation
from .parsing import ParseError
from .selftest import run_selftest
from .specfile import (
    SessionConfig,
    SpecError,
    build_automorphism,
    build_derivation,
    default_params,
    derivation_spec,
    load_json,
    load_spec_file,
)

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_DEGENERATE = 0, 1, 2, 3

# bounded probe used when a Jordanian classification is degenerate
PROBE_GAMMA_ORDERS = (2, 3, 4, 6)
PROBE_MAX_G_DEGREE = 4


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ncisotropy", description="Exact computations in Ore-type algebras and derivation isotropy groups.")
    parser.add_argument("--algebra", default="qweyl", choices=["qweyl", "jordan", "weyl1"])
    parser.add_argument("--root-order", type=int, default=1, metavar="E", help="adjoin a primitive E-th root of unity 'zeta'")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--param", action="append", default=[], metavar="NAME", help="extra transcendental parameter (repeatable)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", help="print the normal form of an expression")
    p.add_argument("expr")
    p = sub.add_parser("mul", help="multiply two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("apply-auto", help="apply an automorphism record (JSON or file)")
    p.add_argument("spec")
    p.add_argument("expr")
    p = sub.add_parser("apply-der", help="apply a derivation record (JSON or file)")
    p.add_argument("spec")
    p.add_argument("expr")
    p = sub.add_parser("commutator", help="delta*phi - phi*delta on the generators")
    p.add_argument("derivation")
    p.add_argument("automorphism")
    p = sub.add_parser("classify", help="classify the isotropy group of a spec file")
    p.add_argument("specfile")
    p = sub.add_parser("verify", help="classify, then certify the result with the commutator oracle")
    p.add_argument("specfile")
    sub.add_parser("selftest", help="run the worked-example corpus")
    return parser


def _session(args) -> SessionConfig:
    if args.root_order < 1:
        raise SpecError("--root-order must be >= 1")
    algebra = Presentation.parse(args.algebra)
    params = list(default_params(algebra))
    params += [name for name in args.param if name not in params]
    return SessionConfig(algebra, tuple(params), args.root_order, "json" if args.json else "text")


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def _record(source: str) -> dict:
    data = load_json(source)
    if not isinstance(data, dict):
        raise SpecError("a map record must be a JSON object")
    return data


def default_test_orders(group: IsotropyGroup) -> list[int]:
    """Divisors of d plus d+1, 2d and the smallest non-divisor; {2,3,4} for infinite groups."""
    if group.variant != "cyclic":
        return [2, 3, 4]
    d = group.order
    orders = {k for k in range(1, d + 1) if d % k == 0} | {d + 1, 2 * d}
    orders.add(next(k for k in range(2, d + 2) if d % k))
    return sorted(orders)


def _cmd_normalize(args, session):
    f = session.element(args.expr)
    _emit(args, f.format(), {"normal_form": f.format()})
    return EXIT_OK


def _cmd_mul(args, session):
    f = session.element(args.left) * session.element(args.right)
    _emit(args, f.format(), {"product": f.format()})
    return EXIT_OK


def _cmd_apply_auto(args, session):
    phi = build_automorphism(_record(args.spec), session)
    f = apply_endo(phi, session.element(args.expr))
    _emit(args, f.format(), {"image": f.format()})
    return EXIT_OK


def _cmd_apply_der(args, session):
    delta = build_derivation(_record(args.spec), session)
    f = delta.apply(session.element(args.expr))
    _emit(args, f.format(), {"image": f.format()})
    return EXIT_OK


def _cmd_commutator(args, session):
    delta = build_derivation(_record(args.derivation), session)
    phi = build_automorphism(_record(args.automorphism), session)
    cx, cy = commutator_on_generators(delta, phi)
    commutes = cx.is_zero() and cy.is_zero()
    text = f"on x: {cx}\non y: {cy}\n" + ("commutes" if commutes else "does not commute")
    _emit(args, text, {"x": cx.format(), "y": cy.format(), "commutes": commutes})
    return EXIT_OK


def _classified(args):
    spec_file = load_spec_file(args.specfile, _session(args))
    spec = derivation_spec(spec_file.derivation, spec_file.session)
    if spec is None:
        return spec_file, None, None
    try:
        return spec_file, spec, classify(spec)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def _cmd_classify(args, _session_unused):
    _, spec, group = _classified(args)
    if group is None:
        print(json.dumps({"variant": "unsupported", "reason": "no classification theory for this derivation kind"}, separators=(",", ":")))
        return EXIT_DEGENERATE
    print(json.dumps(group.to_json(), separators=(",", ":")))
    if not args.json:
        print(f"isotropy group: {group}", file=sys.stderr)
    return EXIT_DEGENERATE if group.variant == "degenerate" else EXIT_OK


def _cmd_verify(args, _session_unused):
    spec_file, spec, group = _classified(args)
    if group is None:
        _emit(args, "unsupported: no classification theory for this derivation kind", {"classification": {"variant": "unsupported"}})
        return EXIT_DEGENERATE
    if group.variant == "degenerate":
        payload = {"classification": group.to_json()}
        text = f"classification: {group}"
        if isinstance(spec, JordanDerivationSpec) and group.reason != "zero derivation":
            report = probe_jordan_g(spec, PROBE_GAMMA_ORDERS, PROBE_MAX_G_DEGREE, include_generic=True)
            payload["probe"] = report.to_json()
            found = ", ".join(
                f"(gamma order {i['gamma_order']}, g={'0' if i['g_degree'] is None else 'y^' + str(i['g_degree'])})"
                for i in report.commuting
            )
            text += f"\n{report.label}: {len(report.commuting)} of {len(report.instances)} probed automorphisms commute"
            if found:
                text += f"\n  {found}"
        _emit(args, text, payload)
        return EXIT_DEGENERATE
    claimed = spec_file.claimed
    if claimed is not None and claimed != group:
        payload = {"classification": group.to_json(), "claimed": claimed.to_json(), "verdict": "claim mismatch"}
        text = f"refuted: file claims {claimed}, classification gives {group}"
        if claimed.variant != "degenerate":
            orders = sorted(set(spec_file.test_orders or default_test_orders(claimed)) | set(default_test_orders(group)))
            cert = verify_cyclic_claim(spec, claimed, orders)
            payload["claim_certificate"] = cert.to_json()
            if not cert.confirmed:
                text += f"\noracle: claim fails at order {cert.refuted_order}, witness {cert.witness}"
        _emit(args, text, payload)
        return EXIT_REFUTED
    orders = spec_file.test_orders or default_test_orders(group)
    cert = verify_cyclic_claim(spec, group, orders)
    tested = ", ".join(f"{'generic' if e is None else e}:{'yes' if ok else 'no'}" for e, ok in cert.tested)
    text = f"classification: {group}\ncommutes by order: {tested}\nverdict: {'confirmed' if cert.confirmed else f'refuted at order {cert.refuted_order}'}"
    if cert.witness:
        text += f"\nwitness: {cert.witness}"
    _emit(args, text, {"classification": group.to_json(), "certificate": cert.to_json()})
    return EXIT_OK if cert.confirmed else EXIT_REFUTED


def _cmd_selftest(args, _session_unused):
    results = run_selftest()
    if args.json:
        print(json.dumps([{"status": s, "check": n, "detail": d} for s, n, d in results], indent=1))
    else:
        for status, name, detail in results:
            print(f"{status} {name}" + (f": {detail}" if detail else ""))
        counts = {s: sum(1 for r in results if r[0] == s) for s in ("PASS", "WARN", "FAIL")}
        print(f"{counts['PASS']} passed, {counts['WARN']} warnings, {counts['FAIL']} failed")
    return EXIT_REFUTED if any(r[0] == "FAIL" for r in results) else EXIT_OK


COMMANDS = {
    "normalize": _cmd_normalize,
    "mul": _cmd_mul,
    "apply-auto": _cmd_apply_auto,
    "apply-der": _cmd_apply_der,
    "commutator": _cmd_commutator,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "selftest": _cmd_selftest,
}


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        session = _session(args)
        return COMMANDS[args.command](args, session)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SpecError, ArithmeticError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
