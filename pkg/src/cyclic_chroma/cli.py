"""Command-line surface: membership, witnesses, verification, search, tables.

Exit codes are uniform across commands: 0 for success or a valid coloring,
1 for infeasible / invalid / theorem disagreement, 2 for usage, parse, or
resource errors.  With --json every command prints a single JSON object on
standard output; diagnostics go to standard error.
"""

from __future__ import annotations

import json
import re
import sys

import click

from .characterization import (
    chi_prime,
    contains,
    forbidden_set,
    theta_cyclic,
    theta_interval,
)
from .constructor import Infeasible, construct
from .model import CycleColoring
from .oracle import (
    SearchBoundExceeded,
    count_colorings,
    decompose as decompose_coloring,
    exists_search,
    theta_by_search,
)
from .verifier import CYCLIC, INTERVAL, verify

_PLAIN_INT = re.compile(r"^(0|[1-9][0-9]*)$")


class PlainIntType(click.ParamType):
    """Unsigned decimal integers; signs and leading zeros are rejected."""

    name = "integer"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        if not _PLAIN_INT.fullmatch(str(value)):
            self.fail(
                f"{value!r} is not an unsigned integer without leading zeros",
                param,
                ctx,
            )
        return int(value)


PLAIN_INT = PlainIntType()
_MODE_CHOICE = click.Choice([CYCLIC, INTERVAL])


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _braced(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _semis(values) -> str:
    return ";".join(str(v) for v in values)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise click.UsageError(message)


def _read_coloring(src: str | None) -> CycleColoring:
    """Read a coloring record from a file path, '-', or standard input."""
    try:
        if src is None or src == "-":
            text = click.get_text_stream("stdin").read()
        else:
            with open(src, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        click.echo(f"error: cannot read input: {exc}", err=True)
        sys.exit(2)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        click.echo(f"error: input is not valid JSON: {exc}", err=True)
        sys.exit(2)
    try:
        return CycleColoring.from_record(data)
    except ValueError as exc:
        click.echo(f"error: bad coloring record: {exc}", err=True)
        sys.exit(2)


def _echo_violations(report) -> None:
    for v in report.violations:
        click.echo(
            f"violation: v{v.vertex} palette ({v.palette[0]},{v.palette[1]}) {v.reason}"
        )
    if report.missing_colors:
        click.echo(f"missing colors: {_braced(sorted(report.missing_colors))}")


@click.group()
def main() -> None:
    """Interval-like edge colorings of simple cycles: closed formulas,
    canonical witnesses, verification, and an exhaustive-search oracle."""


@main.command()
@click.argument("n", type=PLAIN_INT)
@click.option(
    "--mode",
    type=_MODE_CHOICE,
    default=CYCLIC,
    show_default=True,
    help="Palette rule: plain interval, or interval on the color circle.",
)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
def theta(n: int, mode: str, as_json: bool) -> None:
    """Print every feasible color count for the N-edge cycle."""
    _require(n >= 3, "N must be at least 3")
    try:
        ts = theta_cyclic(n) if mode == CYCLIC else theta_interval(n)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if as_json:
        obj: dict = {
            "n": n,
            "mode": mode,
            "members": list(ts.members),
            "provenance": ts.provenance,
        }
        if ts.members:
            obj["w"] = ts.members[0]
            obj["W"] = ts.members[-1]
        click.echo(_dumps(obj))
        return
    label, tag = ("Θ", "cyc") if mode == CYCLIC else ("θ", "int")
    line = f"{label}(C({n})) = {_braced(ts.members)}"
    if ts.members:
        line += f"  w_{tag}={ts.members[0]} W_{tag}={ts.members[-1]}"
    click.echo(line)


@main.command()
@click.argument("n", type=PLAIN_INT)
@click.argument("t", type=PLAIN_INT)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
def make(n: int, t: int, as_json: bool) -> None:
    """Emit the canonical witness coloring for (N, T), or why none exists."""
    _require(n >= 3, "N must be at least 3")
    try:
        coloring = construct(n, t)
    except Infeasible as exc:
        if as_json:
            click.echo(
                _dumps(
                    {
                        "n": n,
                        "t": t,
                        "feasible": False,
                        "reason": exc.reason,
                        "message": exc.message,
                    }
                )
            )
        else:
            click.echo(f"infeasible: {exc.message}")
        sys.exit(1)
    click.echo(_dumps(coloring.to_record()))


@main.command()
@click.argument("src", required=False, metavar="[INPUT]")
@click.option("--mode", type=_MODE_CHOICE, default=CYCLIC, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
def check(src: str | None, mode: str, as_json: bool) -> None:
    """Verify a coloring record (file path, '-', or stdin)."""
    coloring = _read_coloring(src)
    report = verify(coloring, mode)
    if as_json:
        click.echo(_dumps(report.to_json_dict()))
    else:
        click.echo(f"proper: {_yn(report.proper)}")
        click.echo(f"surjective: {_yn(report.surjective)}")
        _echo_violations(report)
        click.echo(f"valid ({mode}): {_yn(report.mode_satisfied)}")
    sys.exit(0 if report.mode_satisfied else 1)


@main.command()
@click.argument("n", type=PLAIN_INT)
@click.option("--tmin", type=PLAIN_INT, default=1, show_default=True)
@click.option("--tmax", type=PLAIN_INT, default=None, help="Defaults to N.")
@click.option("--mode", type=_MODE_CHOICE, default=CYCLIC, show_default=True)
@click.option("--count", "with_count", is_flag=True, help="Also count all witnesses.")
@click.option(
    "--assert-theorem",
    "check_formula",
    is_flag=True,
    help="Compare search verdicts with the closed formula; exit 1 on mismatch.",
)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
def oracle(
    n: int,
    tmin: int,
    tmax: int | None,
    mode: str,
    with_count: bool,
    check_formula: bool,
    as_json: bool,
) -> None:
    """Exhaustively decide feasibility for each T in [TMIN, TMAX]."""
    _require(n >= 3, "N must be at least 3")
    if tmax is None:
        tmax = n
    _require(1 <= tmin <= tmax <= n, "need 1 <= tmin <= tmax <= N")
    interval_members = theta_interval(n).members if mode == INTERVAL else ()
    rows: list[dict] = []
    try:
        for t in range(tmin, tmax + 1):
            row: dict = {"t": t, "exists": exists_search(n, t, mode)}
            if with_count:
                row["count"] = count_colorings(n, t, mode)
            if check_formula:
                row["formula"] = (
                    contains(n, t) if mode == CYCLIC else t in interval_members
                )
            rows.append(row)
    except SearchBoundExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    agree = (
        all(r["exists"] == r["formula"] for r in rows) if check_formula else None
    )
    if as_json:
        obj: dict = {"n": n, "mode": mode, "rows": rows}
        if agree is not None:
            obj["agree"] = agree
        click.echo(_dumps(obj))
    else:
        for r in rows:
            line = f"t={r['t']} {_yn(r['exists'])}"
            if with_count:
                line += f" count={r['count']}"
            if check_formula:
                line += f" formula={_yn(r['formula'])}"
                if r["formula"] != r["exists"]:
                    line += " MISMATCH"
            click.echo(line)
        if agree is not None:
            click.echo(f"theorem agreement: {'ok' if agree else 'MISMATCH'}")
    sys.exit(0 if agree in (None, True) else 1)


@main.command()
@click.argument("nmax", type=PLAIN_INT)
@click.option(
    "--oracle-upto",
    "oracle_upto",
    type=PLAIN_INT,
    default=None,
    help="Also run the search oracle for every n up to this size.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "markdown"]),
    default="csv",
    show_default=True,
)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
def table(nmax: int, oracle_upto: int | None, fmt: str, as_json: bool) -> None:
    """Reference table for n in [3, NMAX]: chromatic index, feasible set, gap."""
    _require(nmax >= 3, "NMAX must be at least 3")
    with_oracle = oracle_upto is not None
    rows: list[dict] = []
    try:
        for n in range(3, nmax + 1):
            theta_formula = theta_cyclic(n).members
            gap = sorted(forbidden_set(n)) if n >= 5 else []
            row: dict = {
                "n": n,
                "chi": chi_prime(n),
                "theta": list(theta_formula),
                "forbidden": gap,
            }
            if with_oracle and n <= oracle_upto:
                found = theta_by_search(n, CYCLIC).members
                row["oracle"] = list(found)
                row["agree"] = found == theta_formula
            rows.append(row)
    except SearchBoundExceeded as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if as_json:
        click.echo(_dumps({"nmax": nmax, "oracle_upto": oracle_upto, "rows": rows}))
        return
    if fmt == "csv":
        header = "n,chi,theta,forbidden" + (",oracle,agree" if with_oracle else "")
        lines = [header]
        for row in rows:
            line = (
                f"{row['n']},{row['chi']},"
                f"{_semis(row['theta'])},{_semis(row['forbidden'])}"
            )
            if with_oracle:
                if "oracle" in row:
                    line += f",{_semis(row['oracle'])},{str(row['agree']).lower()}"
                else:
                    line += ",,"
            lines.append(line)
    else:
        headers = ["n", "chi", "theta", "forbidden"]
        if with_oracle:
            headers += ["oracle", "agree"]
        lines = [
            "| " + " | ".join(headers) + " |",
            "| " + " | ".join(["---"] * len(headers)) + " |",
        ]
        for row in rows:
            cells = [
                str(row["n"]),
                str(row["chi"]),
                _braced(row["theta"]),
                _braced(row["forbidden"]),
            ]
            if with_oracle:
                if "oracle" in row:
                    cells += [_braced(row["oracle"]), str(row["agree"]).lower()]
                else:
                    cells += ["", ""]
            lines.append("| " + " | ".join(cells) + " |")
    click.echo("\n".join(lines) + "\n", nl=False)


@main.command()
@click.argument("src", required=False, metavar="[INPUT]")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object.")
def decompose(src: str | None, as_json: bool) -> None:
    """Structure report for a valid coloring: boundary runs, gaps, size identity."""
    coloring = _read_coloring(src)
    report = verify(coloring, CYCLIC)
    if not report.mode_satisfied:
        if as_json:
            click.echo(_dumps(report.to_json_dict()))
        else:
            click.echo("not a valid cyclic-mode coloring:")
            _echo_violations(report)
        sys.exit(1)
    d = decompose_coloring(coloring)
    if as_json:
        click.echo(_dumps(d.to_json_dict()))
        return
    if d.connected:
        if d.u_size == 0:
            click.echo("case A: H₀ connected (U empty)")
        else:
            click.echo("case A: H₀ connected (m=1)")
        return
    click.echo(f"case B: m={d.m} components, rotation offset {d.rotation}")
    for s in d.components:
        click.echo(
            f"H{s.index}: zeta={s.zeta} eta={s.eta} "
            f"|H|={s.h_size} |H'|={s.h_prime_size}"
        )
    click.echo(f"y = ({','.join(str(v) for v in d.y)})")
    click.echo(f"psi = ({','.join(str(v) for v in d.psi)})")
    click.echo(f"horizontal = ({','.join(_yn(h) for h in d.horizontal)})")
    click.echo(f"M1={_braced(sorted(d.m1))} M2={_braced(sorted(d.m2))}")
    ok = d.psi_sum == d.n + 2 * d.m
    click.echo(f"m={d.m}, Σψ={d.psi_sum}={d.n}+{2 * d.m} {'✓' if ok else '✗'}")


if __name__ == "__main__":
    main()
