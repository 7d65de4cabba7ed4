"""Batch command-line front end.

Verbs: ``reps``, ``cells``, ``additive``, ``point``, ``group``, ``ring``,
``fixed-points``.  Output is a human-readable table by default and JSON
behind ``--format json`` (keys sorted, byte-identical across runs).
Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import brsu2, cellgen, mackey, rep_cn, ring_c2

SCHEMA_VERSION = 1

RING_ACTIONS = (
    "normalize",
    "eval-sun",
    "eval-fixed0",
    "eval-fixed1",
    "check-relation",
    "nu",
)


# ---------------------------------------------------------------------------
# Command payloads (shared by the table and JSON renderers)


def _reps_payload(n: int) -> dict:
    rep_cn.check_order(n)
    complex_rows = []
    for r in range(n):
        phi = rep_cn.IrredComplex(n, r)
        complex_rows.append(
            {
                "r": r,
                "type": rep_cn.classify_type(phi),
                "conjugate": phi.conjugate().r,
            }
        )
    quat_rows = []
    for r in range(n // 2 + 1):
        quat_rows.append({"r": r, "complex_pair": [r, (n - r) % n]})
    return {
        "command": "reps",
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "complex": complex_rows,
        "quaternionic": quat_rows,
    }


def _reps_table(payload: dict) -> str:
    lines = [f"irreducible representations of C_{payload['n']}"]
    lines.append("complex irreducibles:")
    lines.append("  r  type     conjugate")
    for row in payload["complex"]:
        lines.append(f"  {row['r']:<2} {row['type']:<8} {row['conjugate']}")
    lines.append("quaternionic irreducibles:")
    lines.append("  r  underlying complex pair")
    for row in payload["quaternionic"]:
        a, b = row["complex_pair"]
        lines.append(f"  {row['r']:<2} ({a}, {b})")
    return "\n".join(lines)


def _make_flag(n: int, name: str, count: int) -> cellgen.SplitFullFlag:
    if name == "canonical":
        return cellgen.canonical_flag(n, count)
    return cellgen.interleaved_flag(n, count)


def _cells_payload(n: int, count: int, flag_name: str) -> dict:
    rep_cn.check_order(n)
    if count < 0:
        raise ValueError("cell count must be non-negative")
    flag = _make_flag(n, flag_name, max(count, 1))
    ordinals = range(count) if count >= 1 else range(1)
    cells = [cellgen.cell_descriptor(flag, k) for k in ordinals]
    if count >= 2:
        verdict = cellgen.check_properly_even(flag, count)
    else:
        verdict = cellgen.ProperlyEvenVerdict(True)
    plan = cellgen.plan_as_dict(flag, flag_name, cells, verdict)
    plan["command"] = "cells"
    plan["schema_version"] = SCHEMA_VERSION
    return plan


def _cells_table(payload: dict) -> str:
    n = payload["n"]
    lines = [
        f"cell structure over C_{n}, {payload['flag']['name']} flag, "
        f"{len(payload['cells'])} cell(s)"
    ]
    verdict = payload["verdict"]
    if verdict["passed"]:
        lines.append("properly even: pass")
    else:
        lines.append(
            "properly even: fail at cells "
            f"{tuple(verdict['failing_pair'])}, condition ({verdict['condition']})"
        )
    header = "  k   total  profile(d:dim)"
    if n == 2:
        header += "  form"
    lines.append(header)
    for cell in payload["cells"]:
        profile = " ".join(
            f"{d}:{dim}" for d, dim in sorted(cell["profile"].items(), key=lambda kv: int(kv[0]))
        )
        row = f"  {cell['k']:<3} {cell['total']:<6} {profile}"
        if "c2_form" in cell:
            row += f"  {cell['c2_form']['m']}+{cell['c2_form']['s']}s"
        lines.append(row)
    return "\n".join(lines)


def _additive_payload(n: int, count: int) -> dict:
    structure = brsu2.additive_structure(n, count)
    generators = []
    for k, descriptor in structure.generators:
        entry = {
            "k": k,
            "fixed": descriptor.fixed_dim(1),
            "total": descriptor.total_dim,
            "profile": {str(d): dim for d, dim in descriptor.profile},
        }
        if descriptor.c2_form is not None:
            entry["c2_form"] = {"m": descriptor.c2_form[0], "s": descriptor.c2_form[1]}
        generators.append(entry)
    return {
        "command": "additive",
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "scope": structure.scope_tag,
        "verdict": {
            "passed": structure.verdict.passed,
            "failing_pair": list(structure.verdict.failing_pair)
            if structure.verdict.failing_pair
            else None,
            "condition": structure.verdict.condition,
        },
        "generators": generators,
    }


def _additive_table(payload: dict) -> str:
    lines = [
        f"module generators over C_{payload['n']} ({payload['scope']}), "
        f"k = 0..{len(payload['generators']) - 1}"
    ]
    lines.append(
        "properly even: " + ("pass" if payload["verdict"]["passed"] else "fail")
    )
    lines.append("  k   fixed  total")
    for g in payload["generators"]:
        lines.append(f"  {g['k']:<3} {g['fixed']:<6} {g['total']}")
    return "\n".join(lines)


def render_ascii_plot(points: list[tuple[int, int]], n: int) -> str:
    """Plot generator positions on the (fixed, total) lattice, one text
    column and row per two real dimensions."""
    header = (
        f"generator dimensions over C_{n} "
        "(columns: fixed dim, rows: total dim, 2 dims per character)"
    )
    if not points:
        return header + "\npoints:"
    max_x = max(x for x, _ in points)
    max_y = max(y for _, y in points)
    cols = max_x // 2 + 1
    lines = [header]
    for yy in range(max_y // 2, -1, -1):
        y = 2 * yy
        label = f"{y:>4}" if y % 4 == 0 else "    "
        row = [" "] * cols
        for px, py in points:
            if py == y:
                row[px // 2] = "o"
        lines.append(f"{label} | {''.join(row).rstrip()}".rstrip())
    lines.append("     +" + "-" * (cols + 1))
    ticks = [" "] * (cols + 2)
    for x in range(0, max_x + 1, 4):
        text = str(x)
        pos = x // 2
        for i, ch in enumerate(text):
            if pos + i < len(ticks):
                ticks[pos + i] = ch
    lines.append("       " + "".join(ticks).rstrip())
    lines.append("points: " + " ".join(f"({x},{y})" for x, y in points))
    return "\n".join(lines)


def _point_payload(m: int, s: int) -> dict:
    x, y = mackey.position_of(m, s)
    cls = mackey.point_cohomology_c2(x, y)
    pres = mackey.named_functor(cls.label, 2)
    return {
        "command": "point",
        "schema_version": SCHEMA_VERSION,
        "alpha": {"m": m, "s": s},
        "position": {"x": x, "y": y},
        "label": cls.label,
        "display": cls.display(),
        "presentation": mackey.presentation_as_dict(pres),
    }


def _point_table(payload: dict) -> str:
    alpha = payload["alpha"]
    pos = payload["position"]
    pres = payload["presentation"]
    top = mackey.AbGroup(pres["top"]["rank"], tuple(pres["top"]["torsion"]))
    bottom = mackey.AbGroup(pres["bottom"]["rank"], tuple(pres["bottom"]["torsion"]))
    lines = [
        f"alpha = {alpha['m']} + {alpha['s']}*sigma  ->  "
        f"position (x, y) = ({pos['x']}, {pos['y']})",
        f"entry: {payload['display']}",
        f"  top:    {top}",
        f"  bottom: {bottom}",
        f"  res: {pres['res']}  tr: {pres['tr']}  weyl: {pres['weyl']}",
    ]
    return "\n".join(lines)


def _group_payload(m: int, s: int, cutoff: Optional[int]) -> dict:
    group = brsu2.evaluate_group_c2(m, s, cutoff)
    payload = brsu2.evaluated_group_as_dict(group)
    payload["command"] = "group"
    payload["schema_version"] = SCHEMA_VERSION
    payload["cutoff"] = cutoff if cutoff is not None else brsu2.minimum_cutoff(m, s)
    return payload


def _group_table(payload: dict) -> str:
    alpha = payload["alpha"]
    top = mackey.AbGroup(payload["top"]["rank"], tuple(payload["top"]["torsion"]))
    bottom = mackey.AbGroup(
        payload["bottom"]["rank"], tuple(payload["bottom"]["torsion"])
    )
    lines = [
        f"cohomology of the C_2 classifying space in degree "
        f"{alpha['m']} + {alpha['s']}*sigma (cutoff {payload['cutoff']})"
    ]
    if payload["summands"]:
        summands = ", ".join(
            f"k={entry['k']}: {mackey.display_label(entry['label'])}"
            for entry in payload["summands"]
        )
    else:
        summands = "(none)"
    lines.append(f"  summands: {summands}")
    lines.append(f"  top:    {top}")
    lines.append(f"  bottom: {bottom}")
    return "\n".join(lines)


def _fixed_points_payload(n: int, mult: list[int]) -> dict:
    rep_cn.check_order(n)
    expected = n // 2 + 1
    if len(mult) != expected:
        raise ValueError(
            f"expected {expected} multiplicities for C_{n} "
            f"(indices 0..{expected - 1}), got {len(mult)}"
        )
    w = rep_cn.QuatRep(n, tuple(mult))
    components = [
        {
            "r": comp.r,
            "kind": comp.kind,
            "projective_dim": comp.projective_dim,
            "ambient_dim": comp.ambient_dim,
            "empty": comp.empty,
        }
        for comp in cellgen.fixed_components(w)
    ]
    return {
        "command": "fixed-points",
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "multiplicities": list(mult),
        "components": components,
    }


def _fixed_points_table(payload: dict) -> str:
    lines = [
        f"fixed components of the projective space over C_{payload['n']}, "
        f"multiplicities {tuple(payload['multiplicities'])}"
    ]
    lines.append("  r  kind                     proj-dim  ambient")
    for comp in payload["components"]:
        dim = "empty" if comp["empty"] else str(comp["projective_dim"])
        lines.append(
            f"  {comp['r']:<2} {comp['kind']:<24} {dim:<9} {comp['ambient_dim']}"
        )
    return "\n".join(lines)


def _ring_payload(tokens: list[str], level: Optional[int]) -> dict:
    if not tokens:
        raise ValueError(f"ring needs an action: one of {', '.join(RING_ACTIONS)}")
    action = tokens[-1]
    expr = " ".join(tokens[:-1])
    if action not in RING_ACTIONS:
        raise ValueError(
            f"unknown ring action {action!r}; expected one of {', '.join(RING_ACTIONS)}"
        )
    payload: dict = {
        "command": "ring",
        "schema_version": SCHEMA_VERSION,
        "action": action,
    }
    if action == "check-relation":
        report = ring_c2.check_relation()
        payload["passed"] = report.passed
        payload["pairs"] = [
            {"name": p.name, "lhs": str(p.lhs), "rhs": str(p.rhs), "equal": p.equal}
            for p in report.pairs
        ]
        return payload
    if action == "nu":
        if not expr:
            raise ValueError("nu needs a positive integer level, e.g. `ring 3 nu`")
        try:
            n = int(expr)
        except ValueError:
            raise ValueError(f"nu needs an integer level, got {expr!r}") from None
        record = ring_c2.nu_class(n)
        payload.update(
            {
                "n": n,
                "element": str(record.element),
                "level": record.level,
                "passed": record.passed,
                "images": {
                    "sun": str(record.sun_image),
                    "fixed0": str(record.fixed0_image),
                    "fixed1": str(record.fixed1_image),
                },
                "expected": {
                    "sun": str(record.expected_sun),
                    "fixed0": str(record.expected_fixed0),
                    "fixed1": str(record.expected_fixed1),
                },
            }
        )
        return payload
    if not expr:
        raise ValueError(f"ring action {action!r} needs an expression")
    element = ring_c2.parse_element(expr)
    payload["input"] = expr
    if action == "normalize":
        degree = element.degree_ms()
        payload["normal_form"] = str(element)
        payload["degree"] = (
            None if degree is None else {"m": degree[0], "s": degree[1]}
        )
        return payload
    payload["level"] = level
    if action == "eval-sun":
        payload["image"] = str(ring_c2.eval_sun(element, level))
    elif action == "eval-fixed0":
        payload["image"] = str(ring_c2.eval_fixed(element, 0, level))
    else:
        payload["image"] = str(ring_c2.eval_fixed(element, 1, level))
    return payload


def _ring_table(payload: dict) -> str:
    action = payload["action"]
    if action == "check-relation":
        lines = [
            "relation c^2 = e^4*c + x^2*CC: "
            + ("PASS" if payload["passed"] else "FAIL")
        ]
        for pair in payload["pairs"]:
            mark = "==" if pair["equal"] else "!="
            lines.append(f"  {pair['name']:<7} {pair['lhs']} {mark} {pair['rhs']}")
        return "\n".join(lines)
    if action == "nu":
        lines = [
            f"nu({payload['n']}) = {payload['element']} at level {payload['level']}: "
            + ("PASS" if payload["passed"] else "FAIL")
        ]
        for name in ("sun", "fixed0", "fixed1"):
            lines.append(
                f"  {name:<7} {payload['images'][name]}"
                f"  (expected {payload['expected'][name]})"
            )
        return "\n".join(lines)
    if action == "normalize":
        return f"{payload['input']}  ->  {payload['normal_form']}"
    return f"{payload['input']}  ->  {payload['image']}"


# ---------------------------------------------------------------------------
# Argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json"),
        default=argparse.SUPPRESS,
        help="output format (default: table)",
    )
    common.add_argument(
        "--max-n",
        type=int,
        default=argparse.SUPPRESS,
        help="cap on accepted group orders (default: 64)",
    )

    parser = argparse.ArgumentParser(
        prog="bredon",
        description=(
            "Exact Bredon-cohomology computations for the infinite "
            "quaternionic projective space over cyclic groups."
        ),
        parents=[common],
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("reps", parents=[common], help="irreducible tables for C_n")
    p.add_argument("n", type=int)

    p = sub.add_parser(
        "cells", parents=[common], help="cell structure of a flag filtration"
    )
    p.add_argument("n", type=int)
    p.add_argument("count", type=int, help="number of cells to list")
    p.add_argument(
        "flag", nargs="?", choices=("canonical", "interleaved"), default="canonical"
    )

    p = sub.add_parser(
        "additive", parents=[common], help="free-module generator table"
    )
    p.add_argument("n", type=int)
    p.add_argument("count", type=int, help="largest generator ordinal")
    p.add_argument("render", nargs="?", choices=("table", "json", "plot"))

    p = sub.add_parser(
        "point", parents=[common], help="point-cohomology entry for C_2"
    )
    p.add_argument("m", type=int)
    p.add_argument("s", type=int)

    p = sub.add_parser(
        "group", parents=[common], help="evaluate one C_2 cohomology group"
    )
    p.add_argument("m", type=int)
    p.add_argument("s", type=int)
    p.add_argument("cutoff", nargs="?", type=int, default=None)

    p = sub.add_parser("ring", parents=[common], help="C_2 ring computations")
    p.add_argument(
        "args",
        nargs="+",
        metavar="EXPR... ACTION",
        help=f"expression tokens followed by one of: {', '.join(RING_ACTIONS)}",
    )
    p.add_argument("--level", type=int, default=None, help="filtration truncation")

    p = sub.add_parser(
        "fixed-points",
        parents=[common],
        help="fixed components of a projective space",
    )
    p.add_argument("n", type=int)
    p.add_argument(
        "mult", nargs="+", type=int, help="multiplicities for indices 0..n//2"
    )
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[dict, str]:
    if args.verb == "reps":
        payload = _reps_payload(args.n)
        return payload, _reps_table(payload)
    if args.verb == "cells":
        payload = _cells_payload(args.n, args.count, args.flag)
        return payload, _cells_table(payload)
    if args.verb == "additive":
        payload = _additive_payload(args.n, args.count)
        if args.render == "plot":
            points = [(g["fixed"], g["total"]) for g in payload["generators"]]
            return payload, render_ascii_plot(points, args.n)
        return payload, _additive_table(payload)
    if args.verb == "point":
        payload = _point_payload(args.m, args.s)
        return payload, _point_table(payload)
    if args.verb == "group":
        payload = _group_payload(args.m, args.s, args.cutoff)
        return payload, _group_table(payload)
    if args.verb == "ring":
        payload = _ring_payload(args.args, args.level)
        return payload, _ring_table(payload)
    payload = _fixed_points_payload(args.n, args.mult)
    return payload, _fixed_points_table(payload)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # The shared --format/--max-n options suppress their defaults so that
    # a value given before the verb survives subparser re-parsing.
    fmt = getattr(args, "format", "table")
    if args.verb == "additive" and args.render == "json":
        fmt = "json"
    previous_cap = rep_cn.MAX_ORDER
    rep_cn.MAX_ORDER = getattr(args, "max_n", rep_cn.DEFAULT_MAX_ORDER)
    try:
        payload, table = _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        rep_cn.MAX_ORDER = previous_cap
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
