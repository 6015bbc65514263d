"""Command line entry point: ``greenseq <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import jsonio
from .equivalence import verify
from .hn import HNError, HNSystem, Maximal, hn_filtration, is_maximal_fho
from .linstab import linearity_decide
from .mutation import enumerate_mgs
from .paths import DegeneratePath, SimultaneousCrossings, crossings, validate_reddening
from .repmod import default_pool
from .walls import render_svg, wall_of


def _pool(q, max_dim):
    return default_pool(q, max_dim)


def cmd_mgs_enumerate(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    res = enumerate_mgs(q, args.max_len)
    if args.format == "json":
        print(json.dumps(res.to_dict()))
    else:
        for m in res:
            print(" ".join(map(str, m.mutation_vertices)), "|", " ".join(str(list(c)) for c in m.c_vectors))
        print(f"# {len(res)} sequences, max length {res.max_length}, complete_up_to_cap={res.complete_up_to_cap}")
    return 0


def cmd_walls_render(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    walls = [wall_of(m) for m in _pool(q, args.max_dim)]
    Path(args.out).write_text(render_svg(walls))
    print(f"wrote {len(walls)} walls to {args.out}")
    return 0


def cmd_path_crossings(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    path = jsonio.load_path(args.path)
    walls = [wall_of(m) for m in _pool(q, args.max_dim)]
    check = validate_reddening(path, walls)
    out = {"valid": check.valid, "reason": check.reason, "detail": check.detail}
    try:
        out["crossings"] = [
            {"time": jsonio.jsonable(c.time), "module": c.module_key, "dim": list(c.dim), "color": c.color}
            for c in crossings(path, walls)
        ]
    except (DegeneratePath, SimultaneousCrossings) as exc:
        out["error"] = str(exc)
        print(json.dumps(out))
        return 1
    print(json.dumps(out))
    return 0 if check.valid else 1


def cmd_hn_filter(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    try:
        sys_ = HNSystem(jsonio.load_sequence(q, args.system))
        X = jsonio.load_module(q, args.module)
        f = hn_filtration(X, sys_)
    except HNError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    print(json.dumps({
        "factor_labels": [list(x) for x in f.factor_labels],
        "factor_dims": [list(d) for d in f.factor_dims],
        "chain_dims": [[len(b) for b in sub] for sub in f.chain],
    }))
    return 0


def cmd_hn_maximal(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    seq = jsonio.load_sequence(q, args.sequence)
    pool = _pool(q, args.max_dim)
    try:
        v = is_maximal_fho(seq, pool)
    except HNError as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    out = {"maximal": isinstance(v, Maximal), "pool_size": len(pool), "pool_partial": getattr(pool, "partial", False)}
    if not isinstance(v, Maximal):
        out["extendable"] = {"position": v.position, "module": v.module_key}
    print(json.dumps(out))
    return 0


def cmd_linearity_check(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    seq = jsonio.load_sequence(q, args.sequence)
    b = jsonio.parse_b(args.b, q)
    v = linearity_decide(seq, b, _pool(q, args.max_dim))
    if args.format == "json":
        print(json.dumps(v.to_dict()))
    else:
        print(v.status, v.witness.to_dict() if v.witness else "", v.counterexample or "")
    return 0


def cmd_verify(args) -> int:
    q = jsonio.load_quiver(args.quiver)
    report = verify(q, args.cap)
    text = json.dumps(jsonio.jsonable(report.to_dict()), indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n")
    for s in report.sections:
        print(f"{s.name}: {s.status}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greenseq", description="Stability conditions and maximal green sequences.")
    sub = p.add_subparsers(dest="command", required=True)

    mgs = sub.add_parser("mgs").add_subparsers(dest="action", required=True)
    e = mgs.add_parser("enumerate", help="list maximal green sequences")
    e.add_argument("--quiver", required=True)
    e.add_argument("--max-len", type=int, default=12)
    e.add_argument("--format", choices=["json", "text"], default="json")
    e.set_defaults(func=cmd_mgs_enumerate)

    walls = sub.add_parser("walls").add_subparsers(dest="action", required=True)
    r = walls.add_parser("render", help="stereographic SVG of the walls (3 vertices)")
    r.add_argument("--quiver", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--max-dim", type=int, default=6)
    r.set_defaults(func=cmd_walls_render)

    path = sub.add_parser("path").add_subparsers(dest="action", required=True)
    c = path.add_parser("crossings", help="ordered wall crossings of a PL path")
    c.add_argument("--quiver", required=True)
    c.add_argument("--path", required=True)
    c.add_argument("--max-dim", type=int, default=6)
    c.set_defaults(func=cmd_path_crossings)

    hn = sub.add_parser("hn").add_subparsers(dest="action", required=True)
    f = hn.add_parser("filter", help="HN filtration of a module by a system")
    f.add_argument("--quiver", required=True)
    f.add_argument("--system", required=True)
    f.add_argument("--module", required=True)
    f.set_defaults(func=cmd_hn_filter)
    m = hn.add_parser("maximal", help="maximality of a forward hom-orthogonal sequence")
    m.add_argument("--quiver", required=True)
    m.add_argument("--sequence", required=True)
    m.add_argument("--max-dim", type=int, default=6)
    m.set_defaults(func=cmd_hn_maximal)

    lin = sub.add_parser("linearity").add_subparsers(dest="action", required=True)
    lc = lin.add_parser("check", help="is the sequence the stable set of a linear charge?")
    lc.add_argument("--quiver", required=True)
    lc.add_argument("--sequence", required=True)
    lc.add_argument("--b", default="classical")
    lc.add_argument("--format", choices=["json", "text"], default="json")
    lc.add_argument("--max-dim", type=int, default=6)
    lc.set_defaults(func=cmd_linearity_check)

    v = sub.add_parser("verify", help="run the cross-validation harness")
    v.add_argument("--quiver", required=True)
    v.add_argument("--cap", type=int, default=12)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
