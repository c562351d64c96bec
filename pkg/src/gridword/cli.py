"""Command-line front end: formulas, constructions, verification, sweeps.

Exit codes: 0 success (verify: word is degree-bounded), 1 verification or
sweep failure, 2 usage/parse errors, 3 internal construction bug.
"""

from __future__ import annotations

import json
import sys

import click

from . import domination, formula, oracle
from .construct import construct
from .errors import (
    CapacityError,
    ConstructionError,
    ParseError,
    PartialResultError,
)
from .grid_word import (
    Word2D,
    excess,
    filled_count,
    is_degree_bounded,
    max_degree,
    parse_text,
    render_text,
    row_distribution,
    to_json,
)
from .render import render_svg, render_tikz

_CONTEXT = {"help_option_names": ["--help"]}


def _check_d(d: int) -> None:
    if not 0 <= d <= 4:
        raise click.UsageError(f"d must be in 0..4, got {d}")


def _check_dims(*dims: int) -> None:
    for value in dims:
        if value < 1:
            raise click.UsageError(f"dimensions must be positive, got {value}")


@click.group(context_settings=_CONTEXT)
def main() -> None:
    """Maximal binary grid words of bounded degree."""


@main.command("max")
@click.option("-d", "--d", "d", type=int, required=True, help="degree bound 0..4")
@click.option("-h", "--h", "h", type=int, required=True, help="height")
@click.option("-w", "--w", "w", type=int, required=True, help="width")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def cmd_max(d: int, h: int, w: int, as_json: bool) -> None:
    """Print the closed-form maximum filled count m_d(h, w)."""
    _check_d(d)
    _check_dims(h, w)
    value = formula.max_filled(d, h, w)
    if as_json:
        click.echo(json.dumps({"d": d, "h": h, "w": w, "max": value}))
    else:
        click.echo(str(value))


@main.command("construct")
@click.option("-d", "--d", "d", type=int, required=True, help="degree bound 0..4")
@click.option("-h", "--h", "h", type=int, required=True, help="height")
@click.option("-w", "--w", "w", type=int, required=True, help="width")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "svg", "tikz"]),
    default="text",
    show_default=True,
)
def cmd_construct(d: int, h: int, w: int, fmt: str) -> None:
    """Print a maximal degree-d word of the given dimensions."""
    _check_d(d)
    _check_dims(h, w)
    try:
        word = construct(d, h, w)
    except CapacityError as exc:
        raise click.UsageError(str(exc))
    except ConstructionError as exc:
        click.echo(f"internal construction error: {exc}", err=True)
        sys.exit(3)
    if fmt == "text":
        click.echo(render_text(word), nl=False)
    elif fmt == "json":
        click.echo(to_json(word))
    elif fmt == "svg":
        click.echo(render_svg(word), nl=False)
    else:
        click.echo(render_tikz(word), nl=False)


def _read_word(path: str) -> Word2D:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            click.echo(f"cannot read {path}: {exc}", err=True)
            sys.exit(2)
    try:
        return parse_text(text)
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(2)


@main.command("verify")
@click.argument("path", default="-")
@click.option("-d", "--d", "d", type=int, required=True, help="degree bound 0..4")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def cmd_verify(path: str, d: int, as_json: bool) -> None:
    """Check a grid-text word against the degree bound and the formula.

    Reads from PATH, or standard input when PATH is '-'.  Exit 0 when the
    word is degree-bounded, 1 otherwise, 2 on parse errors.
    """
    _check_d(d)
    word = _read_word(path)
    count = filled_count(word)
    degree = max_degree(word)
    bounded = is_degree_bounded(word, d)
    target = formula.max_filled(d, word.height, word.width)
    ex = excess(word)
    dist = row_distribution(word)
    if as_json:
        click.echo(
            json.dumps(
                {
                    "h": word.height,
                    "w": word.width,
                    "d": d,
                    "filled": count,
                    "max_degree": degree,
                    "bounded": bounded,
                    "excess": str(ex),
                    "row_distribution": list(dist),
                    "max_filled": target,
                    "is_full": bounded and count == target,
                }
            )
        )
    else:
        click.echo(f"dimensions: {word.height}x{word.width}")
        click.echo(f"filled: {count}")
        click.echo(f"max degree: {degree}")
        click.echo(f"degree <= {d}: {'yes' if bounded else 'no'}")
        click.echo(f"excess: {ex}")
        click.echo(f"row distribution: {dist}")
        click.echo(f"m_{d}({word.height},{word.width}) = {target}")
        click.echo(f"{d}-full: {'yes' if bounded and count == target else 'no'}")
    sys.exit(0 if bounded else 1)


@main.command("sweep")
@click.option("-d", "--d", "d_list", default="0,1,2,3,4", show_default=True,
              help="comma-separated degree bounds")
@click.option("--h-max", "-h", "h_max", type=int, default=None,
              help="maximum height")
@click.option("--w-max", "-w", "w_max", type=int, default=None,
              help="maximum width")
@click.option("--max", "both_max", type=int, default=None,
              help="shorthand setting both --h-max and --w-max")
@click.option("--odd-only", is_flag=True, help="restrict to odd dimensions")
@click.option("--profile-limit", type=int, default=None,
              help="override the oracle profile width limit")
def cmd_sweep(d_list: str, h_max: int | None, w_max: int | None,
              both_max: int | None, odd_only: bool,
              profile_limit: int | None) -> None:
    """Compare formula and oracle over a range; one JSON line per cell.

    Exits 0 iff every computed cell agrees (capacity skips are allowed).
    """
    try:
        ds = [int(part) for part in d_list.split(",") if part.strip() != ""]
    except ValueError:
        raise click.UsageError(f"bad -d list: {d_list!r}")
    for d in ds:
        _check_d(d)
    if both_max is not None:
        h_max = h_max or both_max
        w_max = w_max or both_max
    if h_max is None:
        raise click.UsageError("--h-max (or --max) is required")
    reports = oracle.verify_theorem(
        ds, h_max, w_max, odd_only=odd_only, width_limit=profile_limit
    )
    disagreements = []
    skips = []
    for report in reports:
        click.echo(report.to_json_line())
        if report.skipped:
            skips.append(report)
        elif not report.agrees:
            disagreements.append(report)
    click.echo(
        f"# sweep: {len(reports)} cells, "
        f"{len(disagreements)} disagreements, {len(skips)} skipped"
    )
    for report in disagreements:
        click.echo(
            f"# disagreement at d={report.d} h={report.h} w={report.w}: "
            f"formula={report.formula_value} oracle={report.oracle_value}"
        )
    for report in skips:
        click.echo(f"# skipped d={report.d} h={report.h} w={report.w}: {report.reason}")
    sys.exit(0 if not disagreements else 1)


@main.command("gamma")
@click.option("-h", "--h", "h", type=int, required=True, help="height")
@click.option("-w", "--w", "w", type=int, required=True, help="width")
@click.option("--witness", is_flag=True, help="also print a minimum dominating set")
@click.option("--profile-limit", type=int, default=None,
              help="override the domination profile width limit")
@click.option("--json", "as_json", is_flag=True, help="emit JSON")
def cmd_gamma(h: int, w: int, witness: bool, profile_limit: int | None,
              as_json: bool) -> None:
    """Print the domination number of the h x w grid graph."""
    _check_dims(h, w)
    try:
        if witness:
            found = domination.min_dominating_set(h, w, profile_limit=profile_limit)
            if as_json:
                click.echo(found.to_json())
            else:
                click.echo(str(found.gamma))
                click.echo(" ".join(f"({i},{j})" for i, j in sorted(found.chosen)))
        else:
            value = domination.gamma(h, w, profile_limit=profile_limit)
            if as_json:
                click.echo(json.dumps({"h": h, "w": w, "gamma": value}))
            else:
                click.echo(str(value))
    except CapacityError as exc:
        raise click.UsageError(str(exc))


@main.command("unique")
@click.option("-d", "--d", "d", type=int, required=True, help="degree bound 0..4")
@click.option("-h", "--h", "h", type=int, required=True, help="height")
@click.option("-w", "--w", "w", type=int, required=True, help="width")
@click.option("--cap", type=int, default=None, help="enumeration cap")
def cmd_unique(d: int, h: int, w: int, cap: int | None) -> None:
    """Count maximal words up to symmetry and report on uniqueness."""
    _check_d(d)
    _check_dims(h, w)
    try:
        count = oracle.count_maximal(d, h, w, up_to_symmetry=True, cap=cap)
    except CapacityError as exc:
        raise click.UsageError(str(exc))
    except PartialResultError as exc:
        click.echo(f"count >= {exc.lower_bound} (cap exceeded)")
        sys.exit(0)
    click.echo(str(count))
    if count == 1:
        click.echo("uniqueness: consistent")
    else:
        click.echo(f"uniqueness: counterexample at ({h},{w})")
    sys.exit(0)


if __name__ == "__main__":
    main()
