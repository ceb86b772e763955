"""Command line interface.

Subcommands: `table` (bounds vs exact spread for one or more graphs),
`validate` (run the full validation suite over the built-in corpus),
`trace` (gradient-search iterations for one graph), `spectrum`
(eigenvalues of a graph matrix), `invariants` (degree and oracle
invariants).  Results go to stdout, diagnostics to stderr; exit status is
nonzero exactly when a non-excluded bound violation or an error occurred.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bounds import CatalogOptions
from .combinatorics import ALPHA_LIMIT, EB_LIMIT, VB_LIMIT
from .graphs import GraphError
from .minmax import SearchConfig
from .report import (
    DEFAULT_BOUNDS,
    GraphSpecError,
    RunConfig,
    run_invariants,
    run_spectrum,
    run_table,
    run_trace,
)
from .validation import validate_all

ENV_ORACLE_LIMIT = "SLQ_ORACLE_LIMIT"


def _add_common_flags(sub: argparse.ArgumentParser):
    sub.add_argument(
        "--oracle-limit",
        type=int,
        default=None,
        metavar="N",
        help="cap every brute-force oracle at N vertices "
        f"(defaults: alpha {ALPHA_LIMIT}, vertex bipartiteness {VB_LIMIT}, "
        f"edge bipartiteness {EB_LIMIT}; env {ENV_ORACLE_LIMIT})",
    )
    sub.add_argument("--iters", type=int, default=10, metavar="K",
                     help="gradient-search iterations (default 10)")
    sub.add_argument("--step", type=float, default=0.1, metavar="S",
                     help="gradient-search step size (default 0.1)")
    sub.add_argument("--step-mode", choices=("constant", "decreasing"),
                     default="constant", help="step schedule: s or s/sqrt(k)")
    sub.add_argument("--format", choices=("csv", "text"), default="text",
                     dest="fmt", help="output format (default text)")
    sub.add_argument("--seed", type=int, default=None, metavar="U64",
                     help="default seed for rand: specs without seed=")
    sub.add_argument("--precision", type=int, default=2, metavar="D",
                     help="decimals in text output (default 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slq",
        description="Signless Laplacian spread: exact values and bound catalogs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_table = subs.add_parser(
        "table", help="bounds vs exact spread, one row per graph"
    )
    p_table.add_argument("sources", nargs="+", metavar="GRAPH",
                         help="graph specs like path:5, rand:n=40,m=634,seed=1, file:PATH")
    p_table.add_argument(
        "--bounds",
        default=None,
        metavar="LIST",
        help="comma-separated catalog names, or 'all' "
        f"(default: {','.join(DEFAULT_BOUNDS)})",
    )
    _add_common_flags(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_val = subs.add_parser(
        "validate", help="run the validation suite over the built-in corpus"
    )
    _add_common_flags(p_val)
    p_val.set_defaults(func=_cmd_validate)

    p_trace = subs.add_parser("trace", help="gradient-search trace for one graph")
    p_trace.add_argument("source", metavar="GRAPH")
    _add_common_flags(p_trace)
    p_trace.set_defaults(func=_cmd_trace)

    p_spec = subs.add_parser("spectrum", help="eigenvalues of a graph matrix")
    p_spec.add_argument("source", metavar="GRAPH")
    p_spec.add_argument("--matrix", choices=("adjacency", "laplacian", "signless"),
                        default="signless", help="which matrix (default signless)")
    _add_common_flags(p_spec)
    p_spec.set_defaults(func=_cmd_spectrum)

    p_inv = subs.add_parser("invariants", help="degree and oracle invariants")
    p_inv.add_argument("source", metavar="GRAPH")
    _add_common_flags(p_inv)
    p_inv.set_defaults(func=_cmd_invariants)

    return parser


def _oracle_limits(args):
    limit = args.oracle_limit
    if limit is None:
        raw = os.environ.get(ENV_ORACLE_LIMIT)
        if raw is not None:
            try:
                limit = int(raw)
            except ValueError:
                raise GraphSpecError(
                    f"{ENV_ORACLE_LIMIT} must be an integer, got {raw!r}"
                ) from None
    if limit is None:
        return ALPHA_LIMIT, VB_LIMIT, EB_LIMIT
    if limit < 1:
        raise GraphSpecError("oracle limit must be at least 1")
    return limit, limit, limit


def _run_config(args, bounds=None) -> RunConfig:
    alpha_limit, vb_limit, eb_limit = _oracle_limits(args)
    search = SearchConfig(
        iterations=args.iters, step=args.step, step_mode=args.step_mode
    )
    catalog = CatalogOptions(
        alpha_limit=alpha_limit,
        vb_limit=vb_limit,
        eb_limit=eb_limit,
        search=search,
    )
    return RunConfig(
        sources=tuple(getattr(args, "sources", ())) or (getattr(args, "source", ""),),
        bounds=bounds if bounds is not None else DEFAULT_BOUNDS,
        fmt=args.fmt,
        precision=args.precision,
        seed=args.seed,
        catalog=catalog,
    )


def _cmd_table(args) -> int:
    if args.bounds is None:
        bounds = DEFAULT_BOUNDS
    elif args.bounds.strip() == "all":
        bounds = "all"
    else:
        bounds = tuple(x.strip() for x in args.bounds.split(",") if x.strip())
        if not bounds:
            raise GraphSpecError("--bounds got an empty list")
    config = _run_config(args, bounds=bounds)
    text, code = run_table(config)
    sys.stdout.write(text)
    return code


def _cmd_validate(args) -> int:
    config = _run_config(args)
    rep = validate_all(options=config.catalog)
    w = sys.stdout.write
    w(f"graphs checked: {rep.graphs_checked}\n")
    w(f"bound cells checked: {rep.cells_checked} ({rep.inapplicable_cells} inapplicable)\n")
    w(f"unexcluded violations: {len(rep.failures)}\n")
    for v in rep.failures:
        w(f"  FAIL {v}\n")
    w(f"logged discrepancies (known unsound printed forms): {len(rep.logged)}\n")
    for v in rep.logged:
        w(f"  note {v}\n")
    for title, failures in (
        ("equality fixtures", rep.fixture_failures),
        ("matrix identities", rep.identity_failures),
        ("gradient checks", rep.gradient_failures),
    ):
        w(f"{title}: {'OK' if not failures else str(len(failures)) + ' failures'}\n")
        for s in failures:
            w(f"  FAIL {s}\n")
    w("result: PASS\n" if rep.ok else "result: FAIL\n")
    return 0 if rep.ok else 1


def _cmd_trace(args) -> int:
    config = _run_config(args)
    sys.stdout.write(run_trace(args.source, config))
    return 0


def _cmd_spectrum(args) -> int:
    config = _run_config(args)
    sys.stdout.write(run_spectrum(args.source, config, matrix=args.matrix))
    return 0


def _cmd_invariants(args) -> int:
    config = _run_config(args)
    sys.stdout.write(run_invariants(args.source, config))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphSpecError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
