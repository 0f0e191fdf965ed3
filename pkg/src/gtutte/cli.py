"""Command-line front end.

Arrangement files are JSON objects::

    {"ambient_rank": 2,
     "relations": [[0, 4]],
     "elements": [{"label": "alpha", "vector": [2, 1]}, ...],
     "group": {"finite": [4], "tori": 0, "reals": 0}}

``relations`` and ``group`` are optional.  Integers outside the signed
64-bit range are written as decimal strings and accepted either way.

Exit codes: 0 success, 1 domain error (a JSON error object is written to
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .abelian_core import ElementList, FgGroup, dual_construction
from .errors import GTutteError, ParseError
from .gtutte_engine import DEFAULT_MAX_NAIVE, g_characteristic, g_tutte, multivariate_z
from .matroid_checks import AXIOMS, MultiplicityTable, convolution_check, duality_check
from .root_systems import positive_roots
from .target import TargetGroup, parse_group_spec
from .topology import (
    DEFAULT_MAX_ENUMERATION,
    euler_characteristic,
    point_count_bruteforce,
    point_count_formula,
    poincare_polynomial,
    quasi_polynomial,
)

INT64 = 2 ** 63


def _int(x) -> int:
    if isinstance(x, bool):
        raise ParseError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise ParseError(f"expected an integer, got {x!r}")


def _out_int(x: int):
    return x if -INT64 <= x < INT64 else str(x)


def load_arrangement(obj: dict) -> tuple[ElementList, TargetGroup | None]:
    if not isinstance(obj, dict):
        raise ParseError("arrangement file must hold a JSON object")
    try:
        m = _int(obj["ambient_rank"])
        relations = [tuple(_int(x) for x in col) for col in obj.get("relations", [])]
        elements = obj.get("elements", [])
        lifts = [tuple(_int(x) for x in e["vector"]) for e in elements]
        labels = [str(e.get("label", f"a{i + 1}")) for i, e in enumerate(elements)]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed arrangement: {exc!r}") from None
    for v in relations + lifts:
        if len(v) != m:
            raise ParseError(f"vector {list(v)} does not have length ambient_rank={m}")
    group = FgGroup(m, tuple(relations))
    target = TargetGroup.from_json(obj["group"]) if obj.get("group") else None
    return ElementList(group, tuple(lifts), tuple(labels)), target


def dump_arrangement(lst: ElementList, target: TargetGroup | None = None, **extra) -> dict:
    obj: dict[str, Any] = {
        "ambient_rank": lst.group.ambient_rank,
        "relations": [[_out_int(x) for x in col] for col in lst.group.relations],
        "elements": [{"label": lst.label(i), "vector": [_out_int(x) for x in v]}
                     for i, v in enumerate(lst.lifts)],
    }
    if target is not None:
        obj["group"] = target.to_json()
    obj.update(extra)
    return obj


def _read(path: str) -> tuple[ElementList, TargetGroup | None]:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        obj = json.loads(text)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return load_arrangement(obj)


def _target(args, from_file: TargetGroup | None) -> TargetGroup:
    if getattr(args, "group", None):
        return parse_group_spec(args.group)
    if from_file is not None:
        return from_file
    raise ParseError("no target group: pass --group or add a \"group\" object to the file")


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_tutte(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    poly = g_tutte(lst, target, method=args.method, cap=args.max_naive, memo=not args.no_memo)
    _emit(args, poly.text(), {"command": "tutte", "group": str(target), "text": poly.text(),
                              "polynomial": poly.to_json()})


def cmd_chi(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    poly = g_characteristic(lst, target, method=args.method, cap=args.max_naive)
    _emit(args, poly.text(), {"command": "chi", "group": str(target), "text": poly.text(),
                              "polynomial": poly.to_json()})


def cmd_zeta(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    poly = multivariate_z(lst, target, cap=args.max_naive)
    _emit(args, poly.text(), {"command": "zeta", "group": str(target), "text": poly.text(),
                              "labels": list(lst.all_labels()), "polynomial": poly.to_json()})


def cmd_count(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    if args.oracle:
        value = point_count_bruteforce(lst, target, budget=args.max_enumeration)
    else:
        value = point_count_formula(lst, target)
    _emit(args, str(value), {"command": "count", "group": str(target), "oracle": args.oracle,
                             "count": _out_int(value)})


def cmd_euler(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    e_semi, e_top = euler_characteristic(lst, target)
    _emit(args, f"e_semi = {e_semi}\ne_top = {e_top}",
          {"command": "euler", "group": str(target), "e_semi": _out_int(e_semi), "e_top": _out_int(e_top)})


def cmd_poincare(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    poly = poincare_polynomial(lst, target)
    _emit(args, poly.text(), {"command": "poincare", "group": str(target), "text": poly.text(),
                              "polynomial": poly.to_json()})


def cmd_quasipoly(args):
    lst, _ = _read(args.file)
    qp = quasi_polynomial(lst)
    lines = [f"period = {qp.period}"] + [f"f_{k}(t) = {p.text()}" for k, p in sorted(qp.constituents.items())]
    _emit(args, "\n".join(lines), {
        "command": "quasipoly", "period": qp.period,
        "constituents": {str(k): {"text": p.text(), "polynomial": p.to_json()}
                         for k, p in sorted(qp.constituents.items())}})


def cmd_dual(args):
    lst, tg = _read(args.file)
    print(json.dumps(dump_arrangement(dual_construction(lst), tg), indent=2))


def cmd_verify(args):
    lst, tg = _read(args.file)
    target = _target(args, tg)
    reports = []
    axioms = [a.strip().upper() for a in args.axioms.split(",") if a.strip()] if args.axioms else []
    if not (axioms or args.convolution or args.duality or args.against):
        axioms = list(AXIOMS)
    for a in axioms:
        if a not in AXIOMS:
            raise ParseError(f"unknown axiom {a!r}; choose from {','.join(AXIOMS)}")
    if axioms:
        table = MultiplicityTable(lst, target, args.max_naive)
        for a in axioms:
            r = AXIOMS[a](lst, target, table=table)
            reports.append({"check": r.axiom, "holds": r.holds, "cases": r.checked, "witness": r.witness})
    if args.convolution:
        g1, g2 = (parse_group_spec(s) for s in args.convolution)
        ok = convolution_check(lst, g1, g2, args.max_naive)
        reports.append({"check": f"convolution[{g1};{g2}]", "holds": ok, "cases": 1 << len(lst), "witness": None})
    if args.duality:
        ok = duality_check(lst, target, args.max_naive)
        reports.append({"check": "duality", "holds": ok, "cases": 1, "witness": None})
    if args.against:
        other, _ = _read(args.against)
        ok = g_tutte(lst, target, method="profile") == g_tutte(other, target, method="profile")
        reports.append({"check": f"same-tutte[{args.against}]", "holds": ok, "cases": 1, "witness": None})
    lines = []
    for r in reports:
        line = f"{'PASS' if r['holds'] else 'FAIL'} {r['check']} ({r['cases']} cases)"
        if r["witness"]:
            line += " witness=" + json.dumps(r["witness"], sort_keys=True)
        lines.append(line)
    _emit(args, "\n".join(lines), {"command": "verify", "group": str(target), "reports": reports})


def cmd_root_system(args):
    data = positive_roots(args.type, args.rank)
    meta = {"root_system": {"name": data.name, "weyl_order": data.weyl_order,
                            "coxeter_number": data.coxeter_number,
                            "index_of_connection": data.index_of_connection, "period": data.period}}
    print(json.dumps(dump_arrangement(data.positive_roots, **meta), indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtutte", description="G-Tutte polynomials of lists in abelian groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True, group_required=False):
        p.add_argument("file", help="arrangement JSON file ('-' for stdin)")
        if group:
            p.add_argument("--group", "-g", required=group_required,
                           help="target group, e.g. 'Z/4', 'S1', 'Cx', 'Z/2 x S1 x R'")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--max-naive", type=int, default=DEFAULT_MAX_NAIVE,
                       help=f"cap on list length for 2^n enumeration (default {DEFAULT_MAX_NAIVE})")

    p = sub.add_parser("tutte", help="bivariate G-Tutte polynomial")
    common(p)
    p.add_argument("--method", choices=["naive", "dc", "profile"], default="dc")
    p.add_argument("--no-memo", action="store_true", help="disable deletion-contraction memoization")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("chi", help="G-characteristic polynomial")
    common(p)
    p.add_argument("--method", choices=["naive", "dc", "profile"], default="profile")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("zeta", help="multivariate G-Tutte polynomial Z")
    common(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("count", help="number of points of the complement for finite G")
    common(p)
    p.add_argument("--oracle", action="store_true", help="count by brute force over G^m")
    p.add_argument("--max-enumeration", type=int, default=DEFAULT_MAX_ENUMERATION)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("euler", help="Euler characteristics of the complement")
    common(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("poincare", help="Poincare polynomial for non-compact G")
    common(p)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("quasipoly", help="characteristic quasi-polynomial (period and constituents)")
    common(p, group=False)
    p.set_defaults(func=cmd_quasipoly)

    p = sub.add_parser("dual", help="dual arrangement file")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual, json=True)

    p = sub.add_parser("verify", help="axiom, convolution and duality checks")
    common(p)
    p.add_argument("--axioms", help="comma-separated subset of 1,2,3,4,5,P")
    p.add_argument("--convolution", nargs=2, metavar=("G1", "G2"))
    p.add_argument("--duality", action="store_true")
    p.add_argument("--against", metavar="FILE", help="also compare the G-Tutte polynomial with another arrangement")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("root-system", help="positive roots as an arrangement file")
    p.add_argument("--type", required=True, help="A..G, or a full name such as G2 or B3")
    p.add_argument("--rank", type=int)
    p.set_defaults(func=cmd_root_system)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except GTutteError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
