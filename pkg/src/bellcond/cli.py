"""Command line front end.

Exit codes: 0 holds / feasible, 3 violated / infeasible, 4 simulation
deviates from theory beyond 4 standard errors, 2 bad arguments, 1 I/O
failure.  All output is deterministic for a fixed set of flags.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import math
import sys

import click

from . import classical_fit as fit_mod
from . import inequalities as ineq
from . import measurement as sim
from .errors import BellcondError
from .probspace import format_rational

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_VIOLATED = 3
EXIT_FLAGGED = 4

# lets negative angles such as "-1.2" through as positional arguments
ANGLE_ARGS = {"ignore_unknown_options": True}


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None, summary: str | None = None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(EXIT_IO)
    if summary:
        click.echo(summary)


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def output_options(f):
    @click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
    @click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write output here instead of stdout.")
    @click.option("--degrees", is_flag=True, help="Interpret all angles as degrees.")
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except BellcondError as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Classical vs quantum conditional probability checks for spin projections."""


@main.command()
@click.option("--min", "theta_min", type=float, default=0.0, show_default=True)
@click.option("--max", "theta_max", type=float, default=math.pi / 2, show_default="pi/2")
@click.option("--steps", type=int, default=1801, show_default=True)
@output_options
def scan(theta_min, theta_max, steps, fmt, out, degrees):
    """Scan f(t) = cos^2 3t + sin^2 2t - cos^2 t over a uniform grid."""
    result = ineq.scan_violations(_angle(theta_min, degrees), _angle(theta_max, degrees), steps)
    text = result.to_csv() if fmt == "csv" else result.to_json()
    worst = result.worst
    region = result.violation_interval()
    summary = (
        f"worst theta={worst.inputs['theta']!r} f={worst.slack!r} violated={worst.violated}; "
        + (f"violating grid points in [{region[0]!r}, {region[1]!r}]" if region else "no violations")
    )
    _emit(text, out, summary)
    if out is None:
        click.echo(summary, err=True)


@main.command(context_settings=ANGLE_ARGS)
@click.argument("theta1", type=float)
@click.argument("theta2", type=float)
@click.argument("theta3", type=float)
@output_options
def check(theta1, theta2, theta3, fmt, out, degrees):
    """Conditional Wigner inequality for sigma(THETA1), sigma(THETA2), sigma(THETA3)."""
    report = ineq.quantum_wigner_conditional(*(_angle(t, degrees) for t in (theta1, theta2, theta3)))
    d = report.to_dict()
    if fmt == "csv":
        text = _csv([["kind", "lhs", "rhs", "slack", "violated"],
                     [d["kind"], repr(report.lhs), repr(report.rhs), repr(report.slack), str(report.violated).lower()]])
    else:
        text = _dump_json(d)
    _emit(text, out, f"{'VIOLATED' if report.violated else 'holds'}: slack={report.slack!r}")
    sys.exit(EXIT_VIOLATED if report.violated else EXIT_OK)


@main.command(context_settings=ANGLE_ARGS)
@click.argument("theta1", type=float)
@click.argument("theta2", type=float)
@click.argument("theta3", type=float)
@click.option("--denom", type=int, default=10**6, show_default=True, help="Rationalization denominator (>= 2).")
@output_options
def fit(theta1, theta2, theta3, denom, fmt, out, degrees):
    """Decide whether a classical joint distribution reproduces the quantum pairwise statistics."""
    if denom < 2:
        raise click.BadParameter("must be >= 2", param_hint="--denom")
    result = fit_mod.quantum_fit(*(_angle(t, degrees) for t in (theta1, theta2, theta3)), denom)
    if fmt == "csv":
        if result.feasible:
            rows = [["atom", "mass"]] + [
                [fit_mod.atom_label(a), format_rational(m)] for a, m in zip(fit_mod.ATOMS, result.witness.masses)
            ]
        else:
            c = result.certificate
            rows = [["facet", "ordering", "expression", "deficit", "propagated_bound"],
                    [c.facet.ident, c.facet.ordering, c.facet.expression,
                     format_rational(c.deficit), format_rational(c.propagated_bound)]]
        text = _csv(rows)
    else:
        text = result.to_json()
    if result.feasible:
        summary = "feasible: classical witness found"
    else:
        summary = f"infeasible: {result.certificate.facet.ident} {result.certificate.facet.expression}"
    _emit(text, out, summary)
    sys.exit(EXIT_OK if result.feasible else EXIT_VIOLATED)


@main.command(context_settings=ANGLE_ARGS)
@click.argument("theta_first", type=float)
@click.argument("theta_second", type=float)
@click.option("--trials", type=int, default=10**6, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@output_options
def simulate(theta_first, theta_second, trials, seed, fmt, out, degrees):
    """Measure sigma(THETA_FIRST), collapse, then measure sigma(THETA_SECOND)."""
    if trials < 1:
        raise click.BadParameter("must be >= 1", param_hint="--trials")
    if not 0 <= seed < 2**64:
        raise click.BadParameter("must be in [0, 2**64)", param_hint="--seed")
    spec = sim.protocol(_angle(theta_first, degrees), _angle(theta_second, degrees), trials, seed)
    table = sim.run_protocol(spec)
    comparison = sim.compare_to_theory(spec, table)
    if fmt == "csv":
        rows = [["first", "second", "count"]]
        for i, f in enumerate(("+1", "-1")):
            for j, s in enumerate(("+1", "-1")):
                rows.append([f, s, table.counts[i][j]])
        text = _csv(rows)
    else:
        text = sim.dumps(sim.simulation_record(spec, table, comparison))
    status = "FLAGGED" if comparison.flagged else "consistent with theory"
    _emit(text, out, f"{status}: counts={table.to_dict()['counts']}")
    sys.exit(EXIT_FLAGGED if comparison.flagged else EXIT_OK)


@main.command()
@click.option("--min", "theta_min", type=float, default=0.0, show_default=True)
@click.option("--max", "theta_max", type=float, default=math.pi / 6, show_default="pi/6")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@output_options
def maximize(theta_min, theta_max, tol, fmt, out, degrees):
    """Find the angle of strongest violation of the trig inequality."""
    theta, value = ineq.maximize_violation(_angle(theta_min, degrees), _angle(theta_max, degrees), tol)
    violated = value < -ineq.FLOAT_TOL
    if fmt == "csv":
        text = _csv([["theta", "f", "violated"], [repr(theta), repr(value), str(violated).lower()]])
    else:
        text = _dump_json({"theta": theta, "f": value, "violated": violated})
    _emit(text, out, f"theta*={theta!r} f={value!r}")


if __name__ == "__main__":
    main()
