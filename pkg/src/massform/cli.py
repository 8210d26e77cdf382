"""Command-line front end.

Exit codes: 0 ok, 2 DSL parse error, 3 incompatible counting/group,
4 size cap exceeded, 5 invalid residue.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import reference
from .counting import build_counting
from .errors import IncompatibleCountingError, MassformError
from .expr import build_group, check_compat, parse_counting, parse_group
from .mass import (STRATIFIERS, ambient_centralizer_order, check_mass_formula,
                   conjugators_into, evaluation_entry, rationality_witness)
from .perm import default_max_order
from .poly import MassPoly


def resolve_group(text):
    entry = reference.catalog_entry(text.strip())
    if entry is not None:
        return entry.expr
    return parse_group(text)


def _group_info(G, expr):
    return {"expr": str(expr), "order": G.order, "degree": G.degree}


def _load(args):
    gexpr = resolve_group(args.group)
    cexpr = parse_counting(args.counting)
    if not check_compat(gexpr, cexpr):
        raise IncompatibleCountingError(
            f"counting function {cexpr} does not match group {gexpr}")
    G = build_group(gexpr, args.max_order)
    return gexpr, G, build_counting(cexpr, G)


def _parse_residue(text):
    if text == "all":
        return None
    try:
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"residue must be an integer or 'all': {text!r}")


def _report_payload(args, default_residue):
    gexpr, G, c = _load(args)
    residue = args.residue if args.residue is not None else default_residue
    residues = _parse_residue(residue)
    report = check_mass_formula(G, c, by=args.by, residues=residues)
    payload = report.to_dict()
    payload["group"]["expr"] = str(gexpr)
    entry = reference.entry_for_expr(gexpr)
    if entry is not None and entry.notes:
        payload["warnings"] += list(entry.notes)
    if args.evaluate:
        payload["evaluations"] = [evaluation_entry(report, q) for q in args.evaluate]
    return payload


def cmd_mass(args):
    return _report_payload(args, "1")


def cmd_check(args):
    return _report_payload(args, "all")


def cmd_rational(args):
    gexpr = resolve_group(args.group)
    G = build_group(gexpr, args.max_order)
    witness = rationality_witness(G)
    out = {"group": _group_info(G, gexpr), "rational": witness is None, "witness": None}
    if witness is not None:
        g, k = witness
        out["witness"] = {"element": str(g), "power": k,
                          "note": f"g^{k} is not conjugate to g"}
    return out


def cmd_reference(args):
    poly = reference.bhargava_rhs(args.n)
    return {"n": args.n, "coefficients": poly.to_list(),
            "scaled": (poly * math.factorial(args.n)).to_list()}


def cmd_ambient(args):
    S = build_group(resolve_group(args.within), args.max_order)
    I = build_group(resolve_group(args.group), args.max_order)
    D = build_group(resolve_group(args.target), args.max_order)
    for name, H in (("group", I), ("target", D)):
        if H.degree != S.degree or any(h not in S for h in H.elements):
            raise ValueError(f"--{name} is not a subgroup of --in")
    j = conjugators_into(I.elements, D.elements, S)
    k = ambient_centralizer_order(I.elements, S)
    return {"j": j, "k": k, "copies": j // k if j % k == 0 else f"{j}/{k}",
            "subgroup_order": I.order}


def cmd_catalog(args):
    return {"catalog": [e.to_dict() for e in reference.catalog()]}


def _format_text(payload):
    lines = []
    if "results" in payload:
        g = payload["group"]
        lines.append(f"group     {g['expr']}  (order {g['order']}, degree {g['degree']})")
        lines.append(f"counting  {payload['counting']}")
        lines.append(f"modulus   {payload['modulus']}")
        for r in payload["results"]:
            lines.append(f"a = {r['residue']:<5} total  {_poly_text(r['total'])}")
            strata = r.get("strata", [])
            width = max((len(s["key"]) for s in strata), default=0)
            for s in strata:
                lines.append(f"    {s['key']:<{width}}  {_poly_text(s['coeffs'])}")
        if payload["formula_exists"]:
            lines.append(f"formula   {_poly_text(payload['polynomial'])}")
        else:
            lines.append("formula   none (masses depend on the residue)")
        for ev in payload.get("evaluations", []):
            lines.append(f"q = {ev['q']:<5} value  {ev['value']}"
                         + ("" if ev["tame"] else "  [not tame]"))
        lines += [f"warning: {w}" for w in payload["warnings"]]
        return "\n".join(lines)
    width = max(len(k) for k in payload)
    for key in sorted(payload):
        value = payload[key]
        if not isinstance(value, str):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines)


def _poly_text(coeffs):
    return str(MassPoly(coeffs))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-order", type=int, default=None,
                        help="group order cap (default $MASSFORM_MAX_ORDER or 20000)")

    parser = argparse.ArgumentParser(prog="massform",
                                     description="Tame local mass formulas for permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, default_by in (("mass", cmd_mass, "total"), ("check", cmd_check, "total")):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--group", required=True)
        p.add_argument("--counting", required=True)
        p.add_argument("--residue", default=None,
                       help="invertible residue of q mod |G|, or 'all'")
        p.add_argument("--by", choices=STRATIFIERS, default=default_by)
        p.add_argument("--evaluate", type=int, action="append", metavar="Q",
                       help="evaluate the formula at x = 1/Q (repeatable)")
        p.set_defaults(func=func)

    p = sub.add_parser("rational", parents=[common])
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("reference", parents=[common])
    p.add_argument("kind", choices=("sn",))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_reference)

    p = sub.add_parser("ambient", parents=[common])
    p.add_argument("--group", required=True, help="the image subgroup I")
    p.add_argument("--target", required=True, help="the subgroup D")
    p.add_argument("--in", dest="within", required=True, help="the ambient group S")
    p.set_defaults(func=cmd_ambient)

    p = sub.add_parser("catalog", parents=[common])
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.max_order is None:
        args.max_order = default_max_order()
    try:
        payload = args.func(args)
    except MassformError as exc:
        print(f"massform: error: {exc}", file=stderr)
        return exc.exit_code
    except (argparse.ArgumentTypeError, ValueError) as exc:
        print(f"massform: error: {exc}", file=stderr)
        return 1
    if args.format == "json":
        stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(_format_text(payload) + "\n")
    return 0


def main(argv=None):
    sys.exit(run(argv))
