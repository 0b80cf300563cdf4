"""Command-line interface: bounds, constraint searches, surface
certifications, and the full verification report.

Exit codes: 0 success, 1 check failure, 2 usage or parameter error,
3 infeasible constraints, 4 inconclusive rank stabilization.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import (
    GenusBound,
    genus_bound_p4,
    genus_bound_p4_odd_acm,
    genus_bound_p5,
    genus_bracket,
    scroll_degree_cubics,
    scroll_degree_quadrics,
)
from .classical import castelnuovo, eh_pi2_bound, halphen_interval
from .hilbert import ConstraintSet, DecayRule, InfeasibleConstraints, expand_decay, genus_upper_bound
from .surfaces import (
    InconclusiveRank,
    ParamSurface,
    certified_projection,
    certify_not_on_hypersurface,
    generic_projection,
    h0_ideal,
    scroll,
    veronese,
)
from .verify import SUITES, render_structured, render_table, run_suite

__all__ = ["main"]


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except InfeasibleConstraints as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except InconclusiveRank as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusbounds",
        description="Exact genus bounds for projective curves off quadrics and cubics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="evaluate a bound family")
    bound.add_argument("family",
                       choices=["castelnuovo", "halphen", "no-quadrics", "no-cubics", "eh-pi2"])
    bound.add_argument("--r", type=int, help="ambient projective dimension")
    bound.add_argument("--d", type=int, help="curve degree")
    bound.add_argument("--d-range", help="degree sweep A..B")
    bound.add_argument("--s", type=int, help="surface degree (halphen)")
    bound.add_argument("--ambient", type=int, help="ambient dimension (castelnuovo)")
    bound.add_argument("--format", choices=["table", "structured"], default="table")
    bound.set_defaults(handler=_cmd_bound)

    search = sub.add_parser("search", help="close a constraint file and bound the genus")
    search.add_argument("--constraints", required=True, help="path to a JSON constraint file")
    search.add_argument("--format", choices=["table", "structured"], default="table")
    search.set_defaults(handler=_cmd_search)

    surface = sub.add_parser("surface", help="hypersurface counts and certifications")
    surface.add_argument("action", choices=["h0", "certify"])
    surface.add_argument("--kind", choices=["veronese2", "veronese3", "scroll"])
    surface.add_argument("--a", type=int, default=0)
    surface.add_argument("--b", type=int, default=0)
    surface.add_argument("--target-dim", type=int, help="project to this dimension first")
    surface.add_argument("--k", type=int, required=True, help="hypersurface degree")
    surface.add_argument("--seed", type=int, default=7)
    surface.add_argument("--descriptor", help="inline JSON {kind, a, b, target_dim, seed}")
    surface.add_argument("--format", choices=["table", "structured"], default="table")
    surface.set_defaults(handler=_cmd_surface)

    verify = sub.add_parser("verify", help="run the verification report")
    verify.add_argument("target", choices=["paper"])
    verify.add_argument("--only", choices=list(SUITES))
    verify.add_argument("--seed", type=int, default=7)
    verify.add_argument("--format", choices=["table", "structured"], default="table")
    verify.set_defaults(handler=_cmd_verify)
    return parser


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

def _degrees(args) -> list[int]:
    if args.d_range:
        lo, _, hi = args.d_range.partition("..")
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty degree range {args.d_range}")
        return list(range(lo, hi + 1))
    if args.d is None:
        raise ValueError("provide --d or --d-range")
    return [args.d]


def _cmd_bound(args) -> int:
    rows = []
    for d in _degrees(args):
        rows += _bound_rows(args, d)
    if args.format == "structured":
        print(json.dumps({"rows": rows}, sort_keys=True, separators=(",", ":")))
    else:
        for row in rows:
            print(_format_bound_row(row))
    return 0


def _bound_rows(args, d: int) -> list[dict]:
    family = args.family
    if family == "castelnuovo":
        if args.ambient is None:
            raise ValueError("castelnuovo needs --ambient")
        value = castelnuovo(args.ambient, d)
        return [{"family": family, "ambient": args.ambient, "d": d, "value": str(value)}]
    if family == "eh-pi2":
        return [{"family": family, "d": d, "value": str(eh_pi2_bound(d)),
                 "annotation": "curves in P^4 on no surface of degree < 5"}]
    if family == "halphen":
        if args.r is None or args.s is None:
            raise ValueError("halphen needs --r and --s")
        est = halphen_interval(args.r, d, args.s)
        row = {"family": family, "r": args.r, "d": d, "s": args.s,
               "center": str(est.center), "radius": str(est.radius),
               "interval": [str(est.lower), str(est.upper)]}
        _attach_validity(row, est.valid_from, d, est.note)
        return [row]
    if family == "no-quadrics":
        r = args.r if args.r is not None else 4
        if r == 4:
            rows = [_point_row(family, r, d, genus_bound_p4(d))]
            if d >= 6:
                rows.append(_point_row(family, r, d, genus_bound_p4_odd_acm(d)))
            return rows
        if r == 5:
            return [_point_row(family, r, d, genus_bound_p5(d))]
        if r == 6:
            return [_interval_row(family, r, d, 9, genus_bracket(6, d, 9))]
        s = scroll_degree_quadrics(r)
        return [_interval_row(family, r, d, s, genus_bracket(r, d, s))]
    if family == "no-cubics":
        if args.r is None:
            raise ValueError("no-cubics needs --r")
        s = scroll_degree_cubics(args.r)
        return [_interval_row(family, args.r, d, s, genus_bracket(args.r, d, s))]
    raise ValueError(f"unknown family {family}")


def _point_row(family: str, r: int, d: int, gb: GenusBound) -> dict:
    row = {"family": family, "r": r, "d": d, "value": str(gb.value), "strict": gb.strict}
    if gb.value.denominator == 1:
        row["value"] = str(int(gb.value))
    if gb.conditions:
        row["conditions"] = gb.conditions
    if gb.attained_by:
        row["annotation"] = f"sharp: {gb.attained_by}"
    _attach_validity(row, gb.valid_from, d, "")
    return row


def _interval_row(family: str, r: int, d: int, s: int, gb: GenusBound) -> dict:
    lo, hi = gb.interval
    row = {"family": family, "r": r, "d": d, "s": s,
           "interval": [str(lo), str(hi)], "lower_open": gb.lower_open}
    if gb.conditions:
        row["conditions"] = gb.conditions
    if gb.attained_by:
        row["annotation"] = f"sharp up to the constant: {gb.attained_by}"
    _attach_validity(row, gb.valid_from, d, "")
    return row


def _attach_validity(row: dict, valid_from: int | None, d: int, note: str) -> None:
    if valid_from is not None:
        row["valid_from"] = valid_from
        if d < valid_from:
            row["warning"] = f"outside the stated validity range (needs d >= {valid_from})"
    elif note:
        row["validity_note"] = note


def _format_bound_row(row: dict) -> str:
    parts = [row["family"]]
    for key in ("ambient", "r", "d", "s"):
        if key in row:
            parts.append(f"{key}={row[key]}")
    if "value" in row:
        parts.append(f"value={row['value']}")
    if "interval" in row:
        lo, hi = row["interval"]
        left = "(" if row.get("lower_open") else "["
        parts.append(f"interval={left}{lo}, {hi}]")
    if row.get("strict"):
        parts.append("strict")
    for key in ("conditions", "annotation", "warning", "validity_note"):
        if key in row:
            parts.append(f"| {row[key]}")
    if "valid_from" in row and "warning" not in row:
        parts.append(f"| valid for d >= {row['valid_from']}")
    return "  ".join(parts)


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _load_constraints(path: str) -> ConstraintSet:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return ConstraintSet(
        d=int(raw["d"]),
        n=int(raw["N"]),
        fixed={int(i): int(v) for i, v in raw.get("fixed", {}).items()},
        lower={int(i): int(v) for i, v in raw.get("lower", {}).items()},
        decay=[DecayRule(index=int(r["i"]), drop=int(r["drop"])) for r in raw.get("decay", [])],
        strict=bool(raw.get("strict", False)),
        label=str(raw.get("label", "")),
    )


def _cmd_search(args) -> int:
    cs = _load_constraints(args.constraints)
    branches = expand_decay(cs)
    results = []
    for branch in branches:
        est = genus_upper_bound(branch)
        results.append({
            "label": branch.label or "constraints",
            "profile": list(est.profile.values),
            "bound": est.bound,
            "strict": est.strict,
        })
    overall = max(r["bound"] for r in results)
    if args.format == "structured":
        print(json.dumps({"branches": results, "bound": overall, "strict": cs.strict},
                         sort_keys=True, separators=(",", ":")))
    else:
        for r in results:
            rel = "p_a < " if r["strict"] else "p_a <= "
            print(f"{r['label']}: profile {r['profile']}  {rel}{r['bound']}")
        if len(results) > 1:
            print(f"overall bound: {overall}")
    return 0


# ---------------------------------------------------------------------------
# surface
# ---------------------------------------------------------------------------

def _surface_from_args(args) -> tuple[ParamSurface, int | None, int]:
    seed = args.seed
    target = args.target_dim
    if args.descriptor:
        raw = json.loads(args.descriptor)
        kind = raw["kind"]
        a, b = int(raw.get("a", 0)), int(raw.get("b", 0))
        target = raw.get("target_dim", target)
        seed = int(raw.get("seed", seed))
    else:
        if args.kind is None:
            raise ValueError("provide --kind or --descriptor")
        kind, a, b = args.kind, args.a, args.b
    if kind == "scroll":
        base = scroll(a, b)
    elif kind in ("veronese2", "veronese3"):
        base = veronese(int(kind[-1]))
    else:
        raise ValueError(f"unknown surface kind {kind!r}")
    return base, (int(target) if target is not None else None), seed


def _cmd_surface(args) -> int:
    base, target, seed = _surface_from_args(args)
    if args.action == "h0":
        surf = generic_projection(base, target, seed) if target is not None else base
        res = h0_ideal(surf, args.k, seed + 1000 if target is not None else seed)
        payload = {"surface": surf.describe(), "k": args.k, "kernel_dim": res.kernel_dim,
                   "samples_used": res.samples_used, "stabilized": res.stabilized,
                   "seed": seed}
    else:
        if target is not None:
            cert = certified_projection(base, target, args.k, seed)
        else:
            cert = certify_not_on_hypersurface(base, args.k, seed)
        payload = {"surface": cert.surface, "k": cert.k, "verdict": cert.verdict,
                   "kernel_dim": cert.kernel_dim, "samples_used": cert.samples_used,
                   "seed": cert.seed, "retries": cert.retries}
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print("  ".join(f"{k}={v}" for k, v in payload.items()))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    checks = run_suite(only=args.only, seed=args.seed)
    if args.format == "structured":
        sys.stdout.write(render_structured(checks))
    else:
        sys.stdout.write(render_table(checks))
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    raise SystemExit(main())
