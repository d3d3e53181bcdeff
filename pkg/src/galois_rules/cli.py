"""Command-line pipeline: mine a context, generalize seed rules, serve the API.

Identical inputs always produce identical artifacts and exit codes.  The log
level is taken from the GALOIS_RULES_LOG environment variable.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .context import ContextParseError, Thresholds, parse_context, parse_fraction
from .exportio import Workspace, build_workspace, export, seed_key
from .hsub import build_h_hierarchy
from .taxonomy import TaxonomyError, parse_taxonomy

log = logging.getLogger("galois_rules")

_FORMAT_BY_SUFFIX = {".csv": "csv", ".cxt": "cxt"}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("GALOIS_RULES_LOG", "WARNING").upper())
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ContextParseError, TaxonomyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois-rules",
        description="Mine association rules from a binary context and explore their hierarchies.")
    sub = parser.add_subparsers(required=True)

    mine = sub.add_parser("mine", help="build lattice, rules and the M-hierarchy")
    _common_args(mine)
    mine.add_argument("--out", type=Path, required=True, help="output directory for artifacts")
    mine.set_defaults(func=cmd_mine)

    gen = sub.add_parser("generalize", help="grow the generalization hierarchy around seed rules")
    _common_args(gen)
    gen.add_argument("--out", type=Path, required=True)
    gen.add_argument("--seed", action="append", default=[],
                     help='seed rule as "A,B=>C" (premise may be empty: "=>C"); repeatable')
    gen.add_argument("--seed-id", action="append", type=int, default=[],
                     help="seed rule id from rules.json; repeatable")
    gen.set_defaults(func=cmd_generalize)

    serve = sub.add_parser("serve", help="serve the exploration API over a built workspace")
    _common_args(serve)
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--ui", type=Path, default=None,
                       help="directory of explorer static files to serve at /")
    serve.set_defaults(func=cmd_serve)
    return parser


def _common_args(cmd: argparse.ArgumentParser):
    cmd.add_argument("--context", type=Path, required=True, help="context document (CSV or CXT)")
    cmd.add_argument("--format", choices=["csv", "cxt"], default=None,
                     help="context format; inferred from the extension when omitted")
    cmd.add_argument("--taxonomy", type=Path, default=None, help="is-a taxonomy file")
    cmd.add_argument("--minsupp", default="0.5", help="minimum support, decimal or fraction")
    cmd.add_argument("--minconf", default="0.5", help="minimum confidence, decimal or fraction")
    cmd.add_argument("--max-properties", type=int, default=64,
                     help="lattice capacity guard (number of properties)")


def _load_workspace(args) -> Workspace:
    fmt = args.format or _FORMAT_BY_SUFFIX.get(args.context.suffix.lower(), "csv")
    ctx = parse_context(args.context.read_text(encoding="utf-8"), fmt)
    th = Thresholds(parse_fraction(args.minsupp), parse_fraction(args.minconf))
    taxonomy = None
    if args.taxonomy is not None:
        taxonomy = parse_taxonomy(args.taxonomy.read_text(encoding="utf-8"), ctx)
    log.info("context: %d individuals × %d properties", ctx.n_individuals, ctx.n_properties)
    return build_workspace(ctx, th, taxonomy, max_properties=args.max_properties)


def _write(out_dir: Path, name: str, content: str):
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(content, encoding="utf-8")


def cmd_mine(args) -> int:
    ws = _load_workspace(args)
    for name, what, fmt in [
        ("lattice.json", "lattice", "json"),
        ("lattice.dot", "lattice", "dot"),
        ("rules.json", "rules", "json"),
        ("rules.csv", "rules", "csv"),
        ("mhier.json", "mhier", "json"),
        ("mhier.dot", "mhier", "dot"),
    ]:
        _write(args.out, name, export(ws, what, fmt))
    counts = ws.rule_base.counts()
    print(f"concepts: {len(ws.lattice)}")
    print(f"rules: {len(ws.rule_base)} ({counts['partial']} partial, {counts['total']} total)")
    print(f"r-ensembles: {len(ws.ensembles)}")
    print(f"artifacts written to {args.out}")
    return 0


def _parse_seed_expr(expr: str) -> tuple[frozenset[str], frozenset[str]]:
    if "=>" not in expr:
        raise ValueError(f"seed must look like 'A=>B', got {expr!r}")
    lhs, _, rhs = expr.partition("=>")
    premise = frozenset(t.strip() for t in lhs.split(",") if t.strip())
    conclusion = frozenset(t.strip() for t in rhs.split(",") if t.strip())
    if not conclusion:
        raise ValueError(f"seed {expr!r} has an empty conclusion")
    return premise, conclusion


def cmd_generalize(args) -> int:
    if not args.seed and not args.seed_id:
        print("error: provide at least one --seed or --seed-id", file=sys.stderr)
        return 2
    ws = _load_workspace(args)
    if ws.taxonomy is None:
        print("error: --taxonomy is required for generalization", file=sys.stderr)
        return 2

    seed_ids: list[int] = []
    for expr in args.seed:
        premise, conclusion = _parse_seed_expr(expr)
        idx = ws.rule_base.find(premise, conclusion)
        if idx is None:
            print(f"error: no extracted rule matches {expr!r}", file=sys.stderr)
            return 2
        seed_ids.append(idx)
    for idx in args.seed_id:
        if not 0 <= idx < len(ws.rule_base.rules):
            print(f"error: no rule with id {idx}", file=sys.stderr)
            return 2
        seed_ids.append(idx)

    seed_ids = sorted(set(seed_ids))
    seeds = [ws.rule_base.rules[i] for i in seed_ids]
    hierarchy = build_h_hierarchy(seeds, ws.taxonomy, ws.context, ws.thresholds)
    ws.h_hierarchies[seed_key(seed_ids)] = hierarchy
    _write(args.out, "hhier.json", export(ws, "hhier", "json"))
    _write(args.out, "hhier.dot", export(ws, "hhier", "dot"))
    print(f"seeds: {', '.join(str(ws.rule_base.rules[i]) for i in seed_ids)}")
    print(f"generalization nodes: {len(hierarchy.nodes)}, edges: {len(hierarchy.edges)}")
    print(f"artifacts written to {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    ws = _load_workspace(args)
    app = create_app(ws)
    if args.ui is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=args.ui, html=True), name="ui")
    counts = ws.rule_base.counts()
    print(f"serving {len(ws.rule_base)} rules ({counts['partial']} partial, {counts['total']} total) "
          f"on http://{args.host}:{args.port}")
    try:
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    except SystemExit as exc:  # uvicorn startup failure, e.g. port in use
        return int(exc.code or 1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
