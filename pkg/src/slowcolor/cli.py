"""Command-line front end.

Exit codes: 0 success / all assertions pass, 1 assertion failure, 2 usage or
parse error, 3 resource cap exceeded, 130 interrupted session.
"""

import json
import os
import signal
import sys

import click

from .canon import graph_from_canonical_key
from .families import ParseError, parse_graph
from .game import GameRecord, IllegalMoveError
from .graph import Graph, bits, induced_subgraph, is_independent, mask_of
from .harness import EXPERIMENT_HEADERS, EXPERIMENTS, SUITES, write_rows_csv
from .invariants import bound_report
from .paintability import PaintabilityLimitError
from .solver import (
    SlowSolver,
    SolveCancelled,
    SolverCache,
    SolverLimitError,
    score_lower_certificate,
    solve,
)
from .strategies import PAINTERS, EvaluatorLimitError, GraphClassError

SCHEMA_PREFIX = "slowcolor"
SCHEMA_VERSION = 1

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_INTERRUPT = 130


def _parse_or_exit(text: str) -> Graph:
    try:
        return parse_graph(text)
    except ParseError as exc:
        click.echo(f"error: cannot parse graph spec: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


def _load_cache(path: str | None) -> tuple[SolverCache, str | None]:
    if not path:
        return SolverCache(), None
    if os.path.exists(path):
        return SolverCache.load(path), path
    return SolverCache(), path


def _emit(fmt: str, payload: dict, text_lines: list[str]) -> None:
    if fmt == "jsonl":
        click.echo(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        keys = sorted(payload)
        click.echo(",".join(keys))
        click.echo(",".join(str(payload[k]) for k in keys))
    else:
        for line in text_lines:
            click.echo(line)


@click.group()
def main():
    """Exact solving, strategies, and verification for the slow-coloring game."""


_common = [
    click.option("--cache", "cache_path", envvar="SLOWCOLOR_CACHE", default=None,
                 help="Persistent value-cache file (env: SLOWCOLOR_CACHE)."),
    click.option("--limit", default=12, show_default=True, help="Solver vertex cap."),
    click.option("--threads", default=1, show_default=True,
                 help="Worker threads for root-level moves; never changes output."),
    click.option("--format", "fmt", type=click.Choice(["text", "csv", "jsonl"]),
                 default="text", show_default=True),
]


def common_options(fn):
    for opt in reversed(_common):
        fn = opt(fn)
    return fn


@main.command(name="solve")
@click.argument("graph_spec")
@click.option("--transcript", is_flag=True, help="Print an optimal-play transcript.")
@click.option("--bounds", "show_bounds", is_flag=True, help="Print the bound report.")
@common_options
def cmd_solve(graph_spec, transcript, show_bounds, cache_path, limit, threads, fmt):
    """Compute the exact game value of GRAPH_SPEC."""
    g = _parse_or_exit(graph_spec)
    cache, save_path = _load_cache(cache_path)
    cancel = {"flag": False}

    def on_sigint(signum, frame):
        cancel["flag"] = True

    previous = signal.signal(signal.SIGINT, on_sigint)
    try:
        result = solve(g, cache, limit=limit, threads=threads,
                       should_cancel=lambda: cancel["flag"])
    except SolverLimitError as exc:
        click.echo(f"error: {exc} (use --limit to override)", err=True)
        sys.exit(EXIT_LIMIT)
    except SolveCancelled:
        if save_path:
            cache.save(save_path)
            click.echo(f"interrupted; partial cache flushed to {save_path}", err=True)
        sys.exit(EXIT_INTERRUPT)
    finally:
        signal.signal(signal.SIGINT, previous)

    marks = [sorted(bits(m)) for m in result.optimal_marks]
    payload = {
        "schema": f"{SCHEMA_PREFIX}/solve/v{SCHEMA_VERSION}",
        "graph": graph_spec,
        "n": g.n,
        "value": result.value,
        # csv cells must stay comma-free: 0-3|1-3 means marks {0,3} and {1,3}
        "optimal_marks": "|".join("-".join(map(str, m)) for m in marks)
        if fmt == "csv"
        else marks,
    }
    lines = [
        f"graph: {graph_spec} (n={g.n}, m={g.edge_count()})",
        f"value: {result.value}",
        "optimal first marks: " + "; ".join("{" + ",".join(map(str, m)) + "}" for m in marks),
    ]
    _emit(fmt, payload, lines)
    if show_bounds:
        rep = bound_report(g)
        if fmt == "jsonl":
            click.echo(json.dumps({
                "schema": f"{SCHEMA_PREFIX}/bounds/v{SCHEMA_VERSION}",
                "graph": graph_spec,
                "row": rep.csv_row(),
            }))
        else:
            click.echo(rep.CSV_HEADER)
            click.echo(rep.csv_row())
    if transcript:
        record = score_lower_certificate(g, cache, limit=limit)
        if fmt == "jsonl":
            click.echo(json.dumps({
                "schema": f"{SCHEMA_PREFIX}/transcript/v{SCHEMA_VERSION}",
                "graph": graph_spec,
                "rounds": record.to_lines(),
            }))
        else:
            click.echo(record.to_text())
    if save_path:
        cache.save(save_path)


@main.command(name="verify")
@click.argument("suite_name")
@click.option("--n-max", default=None, type=int, help="Override the suite size limit.")
@click.option("--r-max", default=None, type=int, help="Override the experiment range.")
@click.option("--samples", default=100, show_default=True, help="Random corpus size (bounds suite).")
@click.option("--seed", default=2024, show_default=True, help="Random corpus base seed.")
@click.option("--out", "out_path", default=None, help="Write the report/table CSV here.")
@click.option("--plot", "plot_path", default=None, help="Render a figure alongside the output.")
def cmd_verify(suite_name, n_max, r_max, samples, seed, out_path, plot_path):
    """Run an assertion suite or experiment; exit 0 only if nothing failed.

    Suites: closed-forms, tree-extremality, bounds, equality-characterizations.
    Experiments (report-only): krr-fit, pnk-conjecture, join-sqrt-gap,
    ktree-conjecture.
    """
    cache = SolverCache()
    if suite_name in SUITES:
        kwargs = {}
        if n_max is not None:
            kwargs["n_max"] = n_max
        if suite_name == "bounds":
            kwargs["sample_count"] = samples
            kwargs["base_seed"] = seed
        report = SUITES[suite_name](cache=cache, **kwargs)
        rows = None
    elif suite_name in EXPERIMENTS:
        kwargs = {}
        if r_max is not None and suite_name in ("krr-fit", "join-sqrt-gap"):
            kwargs["r_max"] = r_max
        if n_max is not None and suite_name in ("pnk-conjecture", "ktree-conjecture"):
            kwargs["n_max"] = n_max
        if suite_name in ("pnk-conjecture", "ktree-conjecture"):
            kwargs["cache"] = cache
        report, rows = EXPERIMENTS[suite_name](**kwargs)
    else:
        known = ", ".join(sorted(list(SUITES) + list(EXPERIMENTS)))
        click.echo(f"error: unknown suite {suite_name!r} (known: {known})", err=True)
        sys.exit(EXIT_USAGE)

    click.echo(report.to_text())
    if out_path:
        if rows is not None:
            write_rows_csv(out_path, EXPERIMENT_HEADERS[suite_name], rows)
        else:
            report.write_csv(out_path)
        click.echo(f"wrote {out_path}")
    if plot_path:
        from . import plots

        if suite_name == "krr-fit":
            plots.render_krr_fit(rows, plot_path)
        elif suite_name == "join-sqrt-gap":
            plots.render_gap_scatter(rows, plot_path)
        else:
            plots.render_suite_summary(report, plot_path)
        click.echo(f"wrote {plot_path}")
    sys.exit(0 if report.ok() else EXIT_FAIL)


@main.command(name="table")
@click.argument("family", type=click.Choice(["bipartite", "join"]))
@click.option("--r-max", "-r", "r_max", default=10, show_default=True)
@click.option("--s-max", "-s", "s_max", default=10, show_default=True)
@click.option("--out", "out_path", default=None, help="Write the table CSV here.")
@click.option("--plot", "plot_path", default=None, help="Render a heatmap alongside the CSV.")
def cmd_table(family, r_max, s_max, out_path, plot_path):
    """Emit the exact value table of a two-parameter family as CSV."""
    from .formulas import bipartite_dp, join_dp

    if r_max < 0 or s_max < 0 or r_max * s_max > 4_000_000:
        click.echo("error: table range out of budget", err=True)
        sys.exit(EXIT_LIMIT)
    table = bipartite_dp(r_max, s_max) if family == "bipartite" else join_dp(r_max, s_max)
    lines = ["r,s,value"] + [f"{r},{s},{v}" for r, s, v in table.csv_rows()]
    if out_path:
        write_rows_csv(out_path, ["r", "s", "value"], table.csv_rows())
        click.echo(f"wrote {out_path}")
    else:
        for line in lines:
            click.echo(line)
    if plot_path:
        from . import plots

        plots.render_table_heatmap(table, plot_path)
        click.echo(f"wrote {plot_path}")


@main.group(name="cache")
def cmd_cache():
    """Inspect and check persistent value caches."""


@cmd_cache.command(name="info")
@click.argument("path")
def cache_info(path):
    """Print entry count and basic stats of a cache file."""
    try:
        cache = SolverCache.load(path)
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    sizes = [key[0] for key in cache.values]
    click.echo(f"{path}: {len(cache)} entries")
    if sizes:
        click.echo(f"vertex counts: min {min(sizes)}, max {max(sizes)}")


@cmd_cache.command(name="check")
@click.argument("path")
@click.option("--sample", default=50, show_default=True, help="Entries to re-solve.")
def cache_check(path, sample):
    """Re-solve a sample of cached entries with a cold cache; exit 1 on mismatch."""
    try:
        cache = SolverCache.load(path)
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    checked = 0
    for key in sorted(cache.values):
        if checked >= sample:
            break
        g = graph_from_canonical_key(key)
        if g is None or g.n > 10:
            continue
        fresh = solve(g, SolverCache()).value
        if fresh != cache.values[key]:
            click.echo(f"MISMATCH for key {key.hex()}: cached {cache.values[key]}, solved {fresh}")
            sys.exit(EXIT_FAIL)
        checked += 1
    click.echo(f"re-verified {checked} entries, all consistent")


@main.command(name="play")
@click.argument("graph_spec")
@click.option("--role", type=click.Choice(["lister", "painter"]), default="painter",
              show_default=True, help="Side played by the human.")
@click.option("--opponent", default="optimal", show_default=True,
              help="Engine policy: optimal, greedy, tree, alpha2, threshold, mark-all.")
@common_options
def cmd_play(graph_spec, role, opponent, cache_path, limit, threads, fmt):
    """Play the slow-coloring game interactively on GRAPH_SPEC."""
    g = _parse_or_exit(graph_spec)
    cache, save_path = _load_cache(cache_path)
    try:
        target = solve(g, cache, limit=limit).value
    except SolverLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LIMIT)
    solver = SlowSolver(g, cache, limit=max(limit, g.n))

    painter_engine = None
    lister_engine = None
    if role == "lister":
        if opponent == "optimal":
            painter_engine = lambda alive, marked: solver.best_response(alive, marked)
        elif opponent in PAINTERS:
            strat = PAINTERS[opponent]()

            def painter_engine(alive, marked, _strat=strat):
                current, old = induced_subgraph(g, alive)
                local = mask_of(old.index(v) for v in bits(marked))
                reply = _strat.respond(current, local)
                return mask_of(old[v] for v in bits(reply))
        else:
            click.echo(f"error: unknown painter {opponent!r}", err=True)
            sys.exit(EXIT_USAGE)
    else:
        if opponent == "optimal":
            lister_engine = lambda alive: solver.best_first_moves(alive)[0]
        elif opponent == "mark-all":
            lister_engine = lambda alive: alive
        else:
            click.echo(f"error: unknown lister {opponent!r}", err=True)
            sys.exit(EXIT_USAGE)

    click.echo(f"graph: {graph_spec} (n={g.n}); optimal score is {target}")
    click.echo("edges: " + (", ".join(f"{u}-{v}" for u, v in g.edges()) or "none"))
    record = GameRecord(g.n)
    alive = g.vertex_mask
    try:
        while alive:
            click.echo(f"remaining vertices: {sorted(bits(alive))}")
            if role == "lister":
                marked = _prompt_set("mark> ", alive, "marked vertices must be remaining")
                if marked == 0:
                    click.echo("rule: the marked set must be nonempty")
                    continue
                colored = painter_engine(alive, marked)
                click.echo(f"painter colors {sorted(bits(colored))}")
            else:
                marked = lister_engine(alive)
                click.echo(f"lister marks {sorted(bits(marked))} (+{marked.bit_count()})")
                while True:
                    colored = _prompt_set("color> ", alive, "colored vertices must be remaining")
                    if colored & ~marked:
                        click.echo("rule: you may only color marked vertices")
                        continue
                    if not is_independent(g, colored):
                        click.echo("rule: the colored set must be independent")
                        continue
                    break
            record.rounds.append((marked, colored))
            alive &= ~colored
    except EOFError:
        click.echo("\nsession aborted")
        sys.exit(EXIT_INTERRUPT)
    click.echo(record.to_text())
    click.echo(f"optimal score for this graph: {target}")
    if save_path:
        cache.save(save_path)


def _prompt_set(prompt: str, alive: int, rule: str) -> int:
    while True:
        raw = input(prompt)
        tokens = raw.replace(",", " ").split()
        try:
            verts = [int(tok) for tok in tokens]
        except ValueError:
            click.echo("rule: enter vertex numbers separated by spaces or commas")
            continue
        mask = mask_of(verts) if verts else 0
        if mask & ~alive:
            click.echo(f"rule: {rule}")
            continue
        return mask


def run():  # pragma: no cover - thin wrapper
    try:
        main(standalone_mode=True)
    except (SolverLimitError, PaintabilityLimitError, EvaluatorLimitError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_LIMIT)
    except (GraphClassError, IllegalMoveError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)


if __name__ == "__main__":  # pragma: no cover
    run()
