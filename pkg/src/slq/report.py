"""Experiment rows, graph-spec parsing, and deterministic table rendering.

A table run evaluates selected catalog bounds on each input graph next to
the exact spread, flags any bound on the wrong side of its target, and
renders either a fixed-width text table (2 decimals by default) or CSV
(10 significant digits).  Output is byte-identical for identical
configurations.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bounds import CATALOG_BY_NAME, CatalogOptions, GraphData, evaluate_catalog
from .graphs import Graph, GraphError, generate_named, generate_random_connected, read_edge_list
from .minmax import SearchConfig, gradient_search
from .validation import printed_form_excluded

# paper-style column order; any further selected bounds follow sorted by name
PAPER_COLUMNS = ("liu_2.3", "meg1", "meg2", "Ncon", "Z1", "Z2", "eta")
DEFAULT_BOUNDS = PAPER_COLUMNS + ("liu_delta",)

CSV_FMT = "%.10g"
SPECTRUM_FMT = "%.17g"


class GraphSpecError(ValueError):
    """Unparseable graph specification string."""


def parse_graph_spec(spec: str, default_seed: Optional[int] = None):
    """Parse a graph source spec into (label, Graph).

    Accepted forms: "path:5", "cycle:6", "complete:4", "star:4",
    "kbip:3,3", "kn1uk1:6", "rand:n=40,m=634,seed=1", "file:PATH".
    A rand spec may omit seed= when a default seed is supplied.
    """
    if ":" not in spec:
        raise GraphSpecError(f"malformed graph spec {spec!r}: expected 'kind:params'")
    kind, _, rest = spec.partition(":")
    try:
        if kind in ("path", "cycle", "complete", "star", "kn1uk1"):
            return spec, generate_named(kind, int(rest))
        if kind == "kbip":
            p, q = rest.split(",")
            return spec, generate_named("complete_bipartite", (int(p), int(q)))
        if kind == "rand":
            fields = {}
            for part in rest.split(","):
                key, _, value = part.partition("=")
                if not value:
                    raise GraphSpecError(
                        f"malformed rand spec {spec!r}: expected key=value parts"
                    )
                fields[key.strip()] = int(value)
            extra = set(fields) - {"n", "m", "seed"}
            if extra or "n" not in fields or "m" not in fields:
                raise GraphSpecError(
                    f"rand spec {spec!r} needs n=, m= and optionally seed="
                )
            seed = fields.get("seed", default_seed)
            if seed is None:
                raise GraphSpecError(
                    f"rand spec {spec!r} has no seed; add seed= or pass --seed"
                )
            label = f"rand:n={fields['n']},m={fields['m']},seed={seed}"
            return label, generate_random_connected(fields["n"], fields["m"], seed)
        if kind == "file":
            with open(rest, "r", encoding="utf-8") as fh:
                return spec, read_edge_list(fh.read())
    except GraphSpecError:
        raise
    except (ValueError, GraphError) as exc:
        raise GraphSpecError(f"bad graph spec {spec!r}: {exc}") from None
    raise GraphSpecError(f"unknown graph spec kind {kind!r}")


@dataclass(frozen=True)
class RunConfig:
    """Everything a table run depends on; equal configs render identical bytes."""

    sources: tuple
    bounds: tuple = DEFAULT_BOUNDS
    fmt: str = "text"
    precision: int = 2
    seed: Optional[int] = None
    catalog: CatalogOptions = field(default_factory=CatalogOptions)


@dataclass(frozen=True)
class ExperimentRow:
    """One graph's evaluated bounds next to the exact spread."""

    label: str
    n: int
    m: int
    Delta: int
    delta: int
    seed: Optional[int]
    s_q: float
    outcomes: tuple  # CatalogOutcome per selected bound, in column order
    violations: tuple  # (entry name, excluded flag) pairs


def resolve_bounds(selection) -> tuple:
    """Expand a bounds selection ('all', a name list, or None) into column order."""
    if selection is None:
        names = list(DEFAULT_BOUNDS)
    elif selection == "all" or selection == ("all",):
        names = sorted(CATALOG_BY_NAME)
    else:
        names = list(selection)
        unknown = [x for x in names if x not in CATALOG_BY_NAME]
        if unknown:
            raise GraphSpecError(
                f"unknown bound names: {', '.join(sorted(unknown))}; "
                f"choose from {', '.join(sorted(CATALOG_BY_NAME))}"
            )
    head = [c for c in PAPER_COLUMNS if c in names]
    tail = sorted(set(names) - set(PAPER_COLUMNS))
    return tuple(head + tail)


def build_row(label: str, g: Graph, columns, options: CatalogOptions,
              seed: Optional[int] = None) -> ExperimentRow:
    """Evaluate the selected bounds on one graph and flag violations."""
    data = GraphData(
        g,
        alpha_limit=options.alpha_limit,
        vb_limit=options.vb_limit,
        eb_limit=options.eb_limit,
        search=options.search,
    )
    opts = CatalogOptions(
        include=tuple(columns),
        alpha_limit=options.alpha_limit,
        vb_limit=options.vb_limit,
        eb_limit=options.eb_limit,
        search=options.search,
    )
    by_name = {o.name: o for o in evaluate_catalog(data, opts)}
    outcomes = tuple(by_name[c] for c in columns)
    reference = {"s_Q": data.s_q, "s_L": data.s_l, "s": data.s_a}
    violations = []
    for outcome in outcomes:
        if not outcome.evaluated:
            continue
        res = outcome.result
        ref = reference[res.target]
        bad = (
            res.value > ref + 1e-6
            if res.direction == "lower"
            else res.value < ref - 1e-6
        )
        if bad:
            violations.append((res.name, printed_form_excluded(res.name, data)))
    profile_delta = min(g.degrees)
    profile_Delta = max(g.degrees)
    return ExperimentRow(
        label=label,
        n=g.n,
        m=g.m,
        Delta=profile_Delta,
        delta=profile_delta,
        seed=seed,
        s_q=data.s_q,
        outcomes=outcomes,
        violations=tuple(violations),
    )


def run_table(config: RunConfig):
    """Build all rows and render them; returns (text, exit_code).

    Exit code 1 iff some non-excluded bound landed on the wrong side of
    the exact spread.
    """
    columns = resolve_bounds(config.bounds)
    rows = []
    for spec in config.sources:
        label, g = parse_graph_spec(spec, default_seed=config.seed)
        seed = None
        if label.startswith("rand:"):
            seed = int(label.rsplit("seed=", 1)[1])
        rows.append(build_row(label, g, columns, config.catalog, seed=seed))
    text = render_table(rows, columns, config)
    hard = any(not excluded for row in rows for (_, excluded) in row.violations)
    return text, (1 if hard else 0)


def _violation_cell(row: ExperimentRow) -> str:
    if not row.violations:
        return "-"
    return ";".join(
        f"{name}[logged]" if excluded else name for name, excluded in row.violations
    )


def render_table(rows, columns, config: RunConfig) -> str:
    """Render rows in the fixed column order for the configured format."""
    header = (
        ["graph", "n", "m", "Delta", "delta", "liu_2.2"]
        + list(columns)
        + ["s_Q", "violations", "seed"]
    )

    def cells(row: ExperimentRow, value_fmt) -> list:
        out = [row.label, str(row.n), str(row.m), str(row.Delta), str(row.delta), "ext"]
        for outcome in row.outcomes:
            out.append(value_fmt % outcome.result.value if outcome.evaluated else "n/a")
        out.append(value_fmt % row.s_q)
        out.append(_violation_cell(row))
        out.append("" if row.seed is None else str(row.seed))
        return out

    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(cells(row, CSV_FMT))
        return buf.getvalue()
    value_fmt = f"%.{config.precision}f"
    table = [header] + [cells(row, value_fmt) for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = []
    for r in table:
        lines.append(
            "  ".join(cell.ljust(w) if i == 0 else cell.rjust(w)
                      for i, (cell, w) in enumerate(zip(r, widths))).rstrip()
        )
    return "\n".join(lines) + "\n"


def run_trace(spec: str, config: RunConfig, search: Optional[SearchConfig] = None) -> str:
    """Gradient-search trace for one graph: iteration header row, value row,
    then footer notes (start value, best, perturbation, stagnation)."""
    from .spectra import signless_laplacian_matrix

    label, g = parse_graph_spec(spec, default_seed=config.seed)
    cfg = search or config.catalog.search
    trace = gradient_search(signless_laplacian_matrix(g), cfg)
    iters = list(range(1, len(trace.values) + 1))
    notes = [
        f"graph = {label}",
        f"start f = {CSV_FMT % trace.initial_value}",
        f"eta = {CSV_FMT % trace.best_value} at iteration {trace.iteration_of_best}",
    ]
    if trace.perturbed:
        notes.append("start point perturbed: tangential gradient vanished at the all-ones vector")
    if trace.stagnated_at is not None:
        notes.append(f"stagnated at iteration {trace.stagnated_at}")
    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["iteration"] + [str(i) for i in iters])
        writer.writerow(["f"] + [CSV_FMT % v for v in trace.values])
        for note in notes:
            buf.write(f"# {note}\n")
        return buf.getvalue()
    value_fmt = f"%.{config.precision}f"
    head = ["iteration"] + [str(i) for i in iters]
    vals = ["f"] + [value_fmt % v for v in trace.values]
    widths = [max(len(a), len(b)) for a, b in zip(head, vals)]
    lines = [
        "  ".join(c.rjust(w) for c, w in zip(head, widths)),
        "  ".join(c.rjust(w) for c, w in zip(vals, widths)),
    ]
    lines.extend(notes)
    return "\n".join(lines) + "\n"


def run_spectrum(spec: str, config: RunConfig, matrix: str = "signless") -> str:
    """Eigenvalues of the chosen graph matrix, descending, 17 significant
    digits, one per line (CSV: index,value rows)."""
    from .spectra import (
        adjacency_matrix,
        eigenvalues,
        laplacian_matrix,
        signless_laplacian_matrix,
    )

    label, g = parse_graph_spec(spec, default_seed=config.seed)
    build = {
        "adjacency": adjacency_matrix,
        "laplacian": laplacian_matrix,
        "signless": signless_laplacian_matrix,
    }
    if matrix not in build:
        raise GraphSpecError(f"unknown matrix kind {matrix!r}")
    values = eigenvalues(build[matrix](g)).values
    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "value"])
        for i, v in enumerate(values, start=1):
            writer.writerow([str(i), SPECTRUM_FMT % v])
        return buf.getvalue()
    return "".join(SPECTRUM_FMT % v + "\n" for v in values)


def run_invariants(spec: str, config: RunConfig) -> str:
    """Degree data plus the oracle invariants, honoring the size limits."""
    from .combinatorics import (
        OracleLimitError,
        edge_bipartiteness,
        independence_number,
        vertex_bipartiteness,
    )
    from .graphs import degree_profile

    label, g = parse_graph_spec(spec, default_seed=config.seed)
    profile = degree_profile(g)
    opts = config.catalog
    pairs = [
        ("graph", label),
        ("n", str(g.n)),
        ("m", str(g.m)),
        ("Delta", str(profile.Delta)),
        ("delta", str(profile.delta)),
        ("M1", str(profile.m1)),
    ]

    def oracle(fn, limit):
        try:
            return str(fn(g, limit=limit))
        except OracleLimitError as exc:
            return f"n/a ({exc})"

    pairs.append(("alpha", oracle(independence_number, opts.alpha_limit)))
    pairs.append(("vertex_bipartiteness", oracle(vertex_bipartiteness, opts.vb_limit)))
    pairs.append(("edge_bipartiteness", oracle(edge_bipartiteness, opts.eb_limit)))
    if config.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in pairs:
            writer.writerow([key, value])
        return buf.getvalue()
    return "".join(f"{key} = {value}\n" for key, value in pairs)


def parse_table_csv(text: str):
    """Round-trip helper: parse an emitted CSV table back into value dicts."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    header = rows[0]
    out = []
    for raw in rows[1:]:
        rec = dict(zip(header, raw))
        parsed = {}
        for key, value in rec.items():
            if key in ("graph", "violations", "liu_2.2"):
                parsed[key] = value
            elif key == "seed":
                parsed[key] = None if value == "" else int(value)
            elif key in ("n", "m", "Delta", "delta"):
                parsed[key] = int(value)
            else:
                parsed[key] = np.nan if value == "n/a" else float(value)
        out.append(parsed)
    return out
