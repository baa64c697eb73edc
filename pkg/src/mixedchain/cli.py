"""Command-line front end: decompositions, tables, verification sweeps.

Exit codes: 0 all requested checks pass, 1 verification failure, 2 usage
error.  All output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .bimod import (
    atypical_part,
    dimension_audit,
    p_weighted_against_chain,
    projections_match,
    semisimple_part,
    table_csv,
    verify_identity_proj,
    verify_identity_tensor,
)
from .cache import Cache
from .chainrep import ChainContext, check_centralizer, check_qwb_relations
from .fusion import chain_decompose, label_str, sorted_labels
from .partitions import bip_str
from .qarith import eval_points
from .uqmod import R, Z, build_rep, dim_label

_LABEL_RE = re.compile(r"^([ZR])\[(-?1),(-?1);(\d+),(-?\d+)\]$")


def parse_label(text: str):
    mobj = _LABEL_RE.match(text.strip())
    if not mobj:
        raise ValueError(f"cannot parse module label {text!r}; "
                         "expected e.g. Z[1,-1;3,2] or R[1,1;2,0]")
    kind, alpha, beta, s, r = mobj.groups()
    fn = Z if kind == "Z" else R
    return fn(int(alpha), int(beta), int(s), int(r))


def _decompose_payload(m: int, n: int, cache: Cache | None):
    key = Cache.key("chain", m, n)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    v = chain_decompose(m, n)
    payload = {
        "m": m,
        "n": n,
        "summands": [
            {"label": label_str(x), "mult": mult, "dim": dim_label(x)}
            for x, mult in sorted_labels(v)
        ],
        "total_dim": v.total_dim(),
    }
    if cache is not None:
        cache.put(key, payload)
    return payload


def _bar_str(z) -> str:
    return f"{z.kind}bar[{z.p};{z.t},{z.r}]"


def _bimodule_payload(m: int, n: int):
    graph = atypical_part(m, n)
    return {
        "m": m,
        "n": n,
        "semisimple": [
            {"bipartition": bip_str(lam), "barlabel": _bar_str(z), "t": z.t, "r": z.r}
            for lam, z in semisimple_part(m, n)
        ],
        "atypical": {
            "vertices": [
                {"x": bip_str(v.x), "z": _bar_str(v.z), "layer": v.layer, "col": v.col}
                for v in graph.vertices
            ],
            "edges": [
                {"from": a, "to": b, "kind": {"uq": "quantum-group", "cent": "centralizer"}[k]}
                for a, b, k in graph.edges
            ],
        },
        "audits": {
            "dim": dimension_audit(m, n),
            "identity1": verify_identity_tensor(m, n) if m >= 1 else None,
            "identity2": verify_identity_proj(m, n) if m >= 1 else None,
        },
    }


def _rep_payload(label):
    rep = build_rep(label)
    return {
        "label": label_str(label),
        "dim": rep.dim,
        "basis": ["/".join(str(t) for t in tag) for tag in rep.basis],
        "generators": {
            g: [[r, c, str(v)] for r, c, v in sorted(mat.entries())]
            for g, mat in sorted(rep.mats.items())
        },
    }


def _chain_check_task(task):
    """One (context, point) verification unit; runs in a worker process."""
    kind, m, n, seed, point_index = task
    ctx = ChainContext(m, n)
    if not ctx.operators():
        return []
    point = None if point_index is None else eval_points(seed)[point_index]
    checker = check_qwb_relations if kind == "relations" else check_centralizer
    results = checker(ctx, point=point)
    return [{"relation": r.relation, "m": m, "n": n, "backend": r.backend,
             "ok": r.ok} for r in results]


def _chain_sweep(kind: str, max_mn: int, backend: str, seed: int, jobs: int):
    point_indices = [None] if backend == "symbolic" else [0, 1, 2]
    tasks = []
    for total in range(2, max_mn + 1):
        for m in range(0, total + 1):
            for pi in point_indices:
                tasks.append((kind, m, total - m, seed, pi))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_chain_check_task, tasks))
    else:
        chunks = [_chain_check_task(t) for t in tasks]
    return [item for chunk in chunks for item in chunk]


def _verify_relations(max_mn: int, backend: str, seed: int, jobs: int = 1):
    return _chain_sweep("relations", max_mn, backend, seed, jobs)


def _verify_centralizer(max_mn: int, backend: str, seed: int, jobs: int = 1):
    return _chain_sweep("centralizer", max_mn, backend, seed, jobs)


def _verify_identities(max_mn: int):
    report = []
    for total in range(1, max_mn + 1):
        for m in range(1, total + 1):
            n = total - m
            report.append({"relation": "induction-tensor", "m": m, "n": n,
                           "backend": "labels", "ok": verify_identity_tensor(m, n)})
            report.append({"relation": "induction-proj", "m": m, "n": n,
                           "backend": "labels", "ok": verify_identity_proj(m, n)})
    return report


def _verify_dims(max_mn: int):
    report = []
    for total in range(1, max_mn + 1):
        for m in range(0, total + 1):
            n = total - m
            ok = (dimension_audit(m, n) and projections_match(m, n)
                  and p_weighted_against_chain(m, n))
            report.append({"relation": "bimodule-audit", "m": m, "n": n,
                           "backend": "labels", "ok": ok})
    return report


_SUITE_DEFAULT_MAX = {"relations": 5, "centralizer": 5, "identities": 12, "dims": 12}


def _run_verify(args) -> int:
    suites = ["relations", "centralizer", "identities", "dims"] \
        if args.suite == "all" else [args.suite]
    report = []
    for suite in suites:
        max_mn = args.max_mn or _SUITE_DEFAULT_MAX[suite]
        if suite == "relations":
            report += _verify_relations(max_mn, args.backend, args.seed, args.jobs)
        elif suite == "centralizer":
            report += _verify_centralizer(max_mn, args.backend, args.seed, args.jobs)
        elif suite == "identities":
            report += _verify_identities(max_mn)
        elif suite == "dims":
            report += _verify_dims(max_mn)
    failures = [r for r in report if not r["ok"]]
    if args.json:
        print(json.dumps(report, indent=None, sort_keys=True))
    else:
        by_ctx = {}
        for r in report:
            by_ctx.setdefault((r["m"], r["n"], r["backend"]), []).append(r)
        for (m, n, backend), rs in sorted(by_ctx.items(), key=str):
            bad = [r["relation"] for r in rs if not r["ok"]]
            status = "ok" if not bad else f"FAIL {bad}"
            print(f"(m,n)=({m},{n}) [{backend}] {len(rs)} checks: {status}")
    if failures:
        print(json.dumps({"error": "verification failed",
                          "failures": failures[:50]}), file=sys.stderr)
        return 1
    return 0


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="force JSON output")
    common.add_argument("--csv", action="store_true", help="force CSV output")
    common.add_argument("--backend", choices=("symbolic", "eval"), default="symbolic")
    common.add_argument("--seed", type=int, default=20177)
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for verification sweeps")
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--max-mn", type=int, default=None)

    parser = argparse.ArgumentParser(prog="mixedchain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="indecomposable content of the chain")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("bimodule", parents=[common],
                       help="full bimodule decomposition with audits")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("table", parents=[common],
                       help="(t,r) table of the semisimple part")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("dump-rep", parents=[common],
                       help="generator matrices of a module")
    p.add_argument("label")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", nargs="?", default="all",
                   choices=("relations", "centralizer", "identities", "dims", "all"))
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "decompose":
            if args.m < 0 or args.n < 0 or args.m + args.n < 1:
                raise ValueError("need m, n >= 0 with m + n >= 1")
            cache = Cache(args.cache_dir) if args.cache_dir else None
            print(json.dumps(_decompose_payload(args.m, args.n, cache), sort_keys=True))
            return 0
        if args.command == "bimodule":
            print(json.dumps(_bimodule_payload(args.m, args.n), sort_keys=True))
            return 0
        if args.command == "table":
            if args.json:
                from .bimod import table_grid
                cells, ts, rs = table_grid(args.m, args.n)
                print(json.dumps({"m": args.m, "n": args.n, "t": ts, "r": rs,
                                  "cells": {f"{t},{r}": bip_str(lam)
                                            for (t, r), lam in sorted(cells.items())}},
                                 sort_keys=True))
            else:
                sys.stdout.write(table_csv(args.m, args.n))
            return 0
        if args.command == "dump-rep":
            print(json.dumps(_rep_payload(parse_label(args.label)), sort_keys=True))
            return 0
        if args.command == "verify":
            return _run_verify(args)
    except (ValueError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
