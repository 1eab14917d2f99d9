"""forge: batch commands over the construction with stable tsv/json output.

Data rows go to stdout, the one-line summary to stderr. Exit codes: 0 ok,
1 a mathematical check failed, 2 invalid input.
"""

from __future__ import annotations

import functools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import click

from .anomaly import (
    correlation_scan,
    degree_pattern_scan,
    exception_set,
)
from .arith import parse_rat, primes_up_to
from .ascent import (
    Branch,
    ascend_range,
    build_polynomial,
    integer_params,
    rational_params,
    verify_disc_formula,
    verify_phi_identity,
    verify_psi3_identity,
)
from .curves import Curve, count_points, is_admissible, reduce_curve
from .errors import ForgeError
from .fields import RadicalElem
from .poly import discriminant, poly_to_json, poly_to_text


def _fail(message: str, code: int):
    click.echo(f"forge: {message}", err=True)
    sys.exit(code)


def _load_curve(a_text: str, b_text: str) -> Curve:
    return Curve(parse_rat(a_text), parse_rat(b_text))


def _common_options(fn):
    fn = click.option("--a", "a_text", required=True, metavar="RAT", help="Coefficient a as p/q.")(fn)
    fn = click.option("--b", "b_text", required=True, metavar="RAT", help="Coefficient b as p/q.")(fn)
    fn = click.option(
        "--format", "fmt", type=click.Choice(["tsv", "json"]), default="tsv", show_default=True
    )(fn)
    fn = click.option("--jobs", type=int, default=1, show_default=True, help="Worker threads.")(fn)
    fn = click.option(
        "--seed", type=int, default=0, show_default=True,
        help="Reserved for randomized subcommands; all current outputs are deterministic.",
    )(fn)
    return fn


def _forge_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ForgeError as exc:
            _fail(str(exc), 2)

    return wrapper


@click.group()
def main():
    """Exact lifts of elliptic-curve points into pure cubic fields."""


@main.command()
@_common_options
@_forge_errors
def poly(a_text, b_text, fmt, jobs, seed):
    """Print the slope polynomial, branch, its discriminant, exception set."""
    E = _load_curve(a_text, b_text)
    cp = build_polynomial(E)
    exc = sorted(exception_set(E))
    disc = discriminant(cp.poly)
    if fmt == "json":
        click.echo(
            json.dumps(
                {
                    "polynomial": poly_to_json(cp.poly),
                    "polynomial_text": poly_to_text(cp.poly),
                    "branch": cp.branch.value,
                    "discriminant": str(disc),
                    "exception_set": exc,
                }
            )
        )
    else:
        click.echo(f"polynomial\t{poly_to_text(cp.poly)}")
        click.echo(f"branch\t{cp.branch.value}")
        click.echo(f"discriminant\t{disc}")
        click.echo("exception_set\t" + ",".join(str(p) for p in exc))


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        _fail(f"range must look like A..B, got {text!r}", 2)
    try:
        return int(lo), int(hi)
    except ValueError:
        _fail(f"range bounds must be integers, got {text!r}", 2)


def _coord_text(coord) -> str:
    if isinstance(coord, RadicalElem):
        return str(coord)
    return str(coord)


def _divisors_text(record) -> str:
    parts = []
    for d in record.anomalous_divisors:
        status = "exceptional" if d.exceptional else ("anomalous" if d.anomalous else "ordinary")
        parts.append(f"{d.l}:{status}")
    return ",".join(parts) or "-"


@main.command()
@_common_options
@click.option("--x", "x_range", default="1..20", show_default=True, metavar="A..B",
              help="Integer parameter range, inclusive.")
@click.option("--rational-height", type=int, default=None, metavar="H",
              help="Enumerate rationals p/q with 0 < p, q <= H instead of --x.")
@click.option("--skip-trivial", is_flag=True, help="Drop perfect-cube (m0 = 1) records.")
@_forge_errors
def ascend(a_text, b_text, fmt, jobs, seed, x_range, rational_height, skip_trivial):
    """Lift a parameter sweep to points over pure cubic fields."""
    E = _load_curve(a_text, b_text)
    if rational_height is not None:
        params = rational_params(rational_height)
    else:
        lo, hi = _parse_range(x_range)
        params = integer_params(lo, hi)
    batch = ascend_range(E, params, jobs=jobs)
    records = [r for r in batch.records if not (skip_trivial and r.trivial_class)]
    for rec in records:
        if fmt == "json":
            click.echo(json.dumps(rec.to_json()))
        else:
            click.echo(
                "\t".join(
                    [
                        str(rec.x),
                        str(rec.m_x),
                        str(rec.m0),
                        str(rec.cube_class.c),
                        _coord_text(rec.point[0]),
                        _coord_text(rec.point[1]),
                        "true" if rec.on_curve else "false",
                        rec.verdict.label(),
                        _divisors_text(rec),
                    ]
                )
            )
    for x, reason in batch.skipped:
        click.echo(f"notice: skipped x = {x}: {reason}", err=True)
    click.echo(
        f"records={len(records)} distinct_m0={len(batch.distinct_m0)} "
        f"infinite={batch.infinite_count} trivial={batch.trivial_count} "
        f"skipped={len(batch.skipped)}",
        err=True,
    )
    if any(not r.on_curve for r in records):
        sys.exit(1)


def _residue_filter(class_text: str):
    return {"all": None, "1mod3": 1, "2mod3": 2}[class_text]


@main.command()
@_common_options
@click.option("--mode", type=click.Choice(["anomalous", "correlate", "patterns"]),
              required=True)
@click.option("--max-l", "max_l", type=int, default=500, show_default=True,
              help="Scan primes l <= this bound.")
@click.option("--class", "class_text", type=click.Choice(["all", "1mod3", "2mod3"]),
              default="all", show_default=True, help="Residue class of l mod 3.")
@_forge_errors
def scan(a_text, b_text, fmt, jobs, seed, mode, max_l, class_text):
    """Per-prime diagnostics: counts, root/anomalous correlation, patterns."""
    E = _load_curve(a_text, b_text)
    residue = _residue_filter(class_text)

    def keep(ell: int) -> bool:
        return residue is None or ell % 3 == residue

    if mode == "anomalous":
        ells = [ell for ell in primes_up_to(max_l) if is_admissible(E, ell) and keep(ell)]

        def report_at(ell: int):
            return count_points(reduce_curve(E, ell))

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(report_at, ells))
        else:
            reports = [report_at(ell) for ell in ells]
        anomalous_count = 0
        for report in reports:
            anomalous_count += report.anomalous
            if fmt == "json":
                click.echo(json.dumps(report.to_json()))
            else:
                click.echo(
                    f"{report.l}\t{report.count}\t{report.trace}\t"
                    f"{'true' if report.anomalous else 'false'}"
                )
        click.echo(f"primes={len(reports)} anomalous={anomalous_count}", err=True)
        return

    if mode == "correlate":
        report = correlation_scan(E, max_l)
        rows = [r for r in report.rows if keep(r.l)]
        for row in rows:
            if fmt == "json":
                click.echo(json.dumps(row.to_json()))
            else:
                click.echo(
                    f"{row.l}\t{'true' if row.has_root else 'false'}\t"
                    f"{'true' if row.anomalous else 'false'}\t"
                    f"{'true' if row.agree else 'false'}"
                )
        mismatches = [r for r in rows if not r.agree]
        label = " one-directional" if report.one_directional else ""
        click.echo(
            f"primes={len(rows)} mismatches={len(mismatches)} "
            f"irreducibility={report.irreducibility.value}{label}",
            err=True,
        )
        for row in mismatches:
            click.echo(f"mismatch: l={row.l} has_root={row.has_root} anomalous={row.anomalous}", err=True)
        if mismatches and not report.one_directional:
            sys.exit(1)
        return

    rows = degree_pattern_scan(E, max_l, residue)
    for ell, pattern in rows:
        if fmt == "json":
            click.echo(json.dumps({"l": ell, "pattern": list(pattern)}))
        else:
            click.echo(f"{ell}\t{','.join(str(d) for d in pattern)}")
    click.echo(
        f"primes={len(rows)} patterns={len(sorted({p for _, p in rows}))}", err=True
    )


@main.command()
@_common_options
@_forge_errors
def verify(a_text, b_text, fmt, jobs, seed):
    """Run the construction's polynomial identity checks for one curve."""
    E = _load_curve(a_text, b_text)
    checks = [
        ("phi_identity", verify_phi_identity(E)),
        ("psi3_identity", verify_psi3_identity(E)),
    ]
    skipped = None
    if build_polynomial(E).branch is Branch.GENERIC:
        checks.append(("disc_formula", verify_disc_formula(E)))
    else:
        skipped = "disc_formula skipped: needs the generic branch (a != 0)"
    for name, ok in checks:
        if fmt == "json":
            click.echo(json.dumps({"check": name, "result": "pass" if ok else "fail"}))
        else:
            click.echo(f"{name}\t{'pass' if ok else 'fail'}")
    if skipped:
        click.echo(f"notice: {skipped}", err=True)
    passed = sum(ok for _, ok in checks)
    click.echo(f"checks={len(checks)} passed={passed}", err=True)
    if passed != len(checks):
        sys.exit(1)


if __name__ == "__main__":
    main()
