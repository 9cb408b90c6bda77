"""Bell and Wigner type inequalities, classical and quantum.

Classical checks run on a :class:`~bellcond.probspace.FiniteProbabilitySpace`
in exact arithmetic, so their verdicts carry zero tolerance.  The
quantum-side checks are floating point and call a violation only when the
slack drops below ``-FLOAT_TOL``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import probspace as ps
from . import qubit as qm
from .errors import BadRange, NonPositiveTolerance, OutOfRange

FLOAT_TOL = 1e-12
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

Number = Union[Fraction, float]


class InequalityKind(str, enum.Enum):
    BELL_COVARIATION = "BellCovariation"
    WIGNER_JOINT = "WignerJoint"
    WIGNER_CONDITIONAL = "WignerConditional"
    TRIG_SPECIAL = "TrigSpecial"


def _jsonable(v):
    if isinstance(v, Fraction):
        return ps.format_rational(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class InequalityReport:
    kind: InequalityKind
    lhs: Number
    rhs: Number
    slack: Number
    violated: bool
    inputs: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return isinstance(self.slack, Fraction)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "slack": _jsonable(self.slack),
            "violated": self.violated,
            "inputs": _jsonable(self.inputs),
        }


def _report(kind, lhs, rhs, slack, inputs) -> InequalityReport:
    tol = 0 if isinstance(slack, Fraction) else FLOAT_TOL
    return InequalityReport(kind, lhs, rhs, slack, bool(slack < -tol), inputs)


def _describe(*xs: ps.DichotomicVariable) -> dict:
    return {name: list(x.values) for name, x in zip("abc", xs)}


def bell_covariation_check(space, a, b, c) -> InequalityReport:
    """``|<a,b> - <c,b>| <= 1 - <a,c>``, exact."""
    lhs = abs(ps.covariation(space, a, b) - ps.covariation(space, c, b))
    rhs = 1 - ps.covariation(space, a, c)
    return _report(InequalityKind.BELL_COVARIATION, lhs, rhs, rhs - lhs, _describe(a, b, c))


def wigner_joint_check(space, a, b, c) -> InequalityReport:
    """``P(a=+1, b=+1) + P(b=-1, c=+1) >= P(a=+1, c=+1)``, exact."""
    lhs = ps.joint_prob(space, a, 1, b, 1) + ps.joint_prob(space, b, -1, c, 1)
    rhs = ps.joint_prob(space, a, 1, c, 1)
    return _report(InequalityKind.WIGNER_JOINT, lhs, rhs, lhs - rhs, _describe(a, b, c))


def wigner_conditional_check(pab: Number, pcb: Number, pac: Number, inputs: dict | None = None) -> InequalityReport:
    """``P(a=+1|b=+1) + P(c=+1|b=-1) >= P(a=+1|c=+1)`` for conditionals from any source.

    All-rational inputs give an exact report; any float makes it a float report.
    """
    values = (pab, pcb, pac)
    for name, v in zip(("pab", "pcb", "pac"), values):
        if isinstance(v, float) and not math.isfinite(v):
            raise OutOfRange(f"{name} is not finite")
        if not 0 <= v <= 1:
            raise OutOfRange(f"{name} = {v} lies outside [0, 1]")
    if not all(isinstance(v, (Fraction, int)) for v in values):
        pab, pcb, pac = (float(v) for v in values)
    lhs = pab + pcb
    rhs = pac
    if inputs is None:
        inputs = {"pab": pab, "pcb": pcb, "pac": pac}
    return _report(InequalityKind.WIGNER_CONDITIONAL, lhs, rhs, lhs - rhs, inputs)


def classical_wigner_conditional(space, a, b, c) -> InequalityReport:
    """Conditional Wigner check fed with Bayes conditionals from ``space``."""
    return wigner_conditional_check(
        ps.bayes_conditional(space, a, 1, b, 1),
        ps.bayes_conditional(space, c, 1, b, -1),
        ps.bayes_conditional(space, a, 1, c, 1),
        inputs=_describe(a, b, c),
    )


class ConsistencyError(AssertionError):
    """Closed-form and inner-product routes disagree beyond tolerance."""


def quantum_wigner_conditional(theta1: float, theta2: float, theta3: float) -> InequalityReport:
    """Conditional Wigner check for the spin projections ``sigma(theta1..3)``."""
    s1, s2, s3 = (qm.spin_observable(t) for t in (theta1, theta2, theta3))
    pab = qm.quantum_conditional(s1, s2).entry(1, 1)
    pcb = qm.quantum_conditional(s3, s2).entry(1, -1)
    pac = qm.quantum_conditional(s1, s3).entry(1, 1)

    direct = (
        qm.transition_probability(qm.eigenvector(s1, 1), qm.eigenvector(s2, 1)),
        qm.transition_probability(qm.eigenvector(s3, 1), qm.eigenvector(s2, -1)),
        qm.transition_probability(qm.eigenvector(s1, 1), qm.eigenvector(s3, 1)),
    )
    for closed, via in zip((pab, pcb, pac), direct):
        if abs(closed - via) > FLOAT_TOL:
            raise ConsistencyError(f"closed form {closed!r} vs eigenvector overlap {via!r}")

    return wigner_conditional_check(
        pab,
        pcb,
        pac,
        inputs={"theta1": float(theta1), "theta2": float(theta2), "theta3": float(theta3)},
    )


def _trig_sides(theta: float) -> tuple[float, float]:
    lhs = math.cos(3.0 * theta) ** 2 + math.sin(2.0 * theta) ** 2
    rhs = math.cos(theta) ** 2
    return lhs, rhs


def trig_specialization(theta: float) -> float:
    """``cos^2(3t) + sin^2(2t) - cos^2(t)``; negative values are violations."""
    lhs, rhs = _trig_sides(qm.check_angle(theta))
    return lhs - rhs


def trig_report(theta: float) -> InequalityReport:
    theta = qm.check_angle(theta)
    lhs, rhs = _trig_sides(theta)
    return _report(InequalityKind.TRIG_SPECIAL, lhs, rhs, lhs - rhs, {"theta": theta})


def angle_grid(theta_min: float, theta_max: float, steps: int) -> list[float]:
    """Uniform grid including both endpoints."""
    theta_min, theta_max = qm.check_angle(theta_min), qm.check_angle(theta_max)
    if int(steps) != steps or steps < 2:
        raise BadRange(f"steps must be an integer >= 2, got {steps!r}")
    if not theta_min < theta_max:
        raise BadRange(f"need theta_min < theta_max, got [{theta_min}, {theta_max}]")
    steps = int(steps)
    width = theta_max - theta_min
    last = steps - 1
    return [theta_min + width * i / last for i in range(last)] + [theta_max]


@dataclass(frozen=True)
class ViolationScanResult:
    grid: list[float]
    reports: list[InequalityReport]
    worst: InequalityReport

    @property
    def violating(self) -> list[float]:
        return [t for t, r in zip(self.grid, self.reports) if r.violated]

    def violation_interval(self) -> tuple[float, float] | None:
        """Smallest and largest violating grid angle, or ``None``."""
        bad = self.violating
        return (bad[0], bad[-1]) if bad else None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theta", "f", "violated"])
        for t, r in zip(self.grid, self.reports):
            writer.writerow([repr(t), repr(r.slack), "true" if r.violated else "false"])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([r.to_dict() for r in self.reports], indent=2) + "\n"


def scan_violations(theta_min: float, theta_max: float, steps: int) -> ViolationScanResult:
    grid = angle_grid(theta_min, theta_max, steps)
    reports = [trig_report(t) for t in grid]
    # min() keeps the first minimum, i.e. the lowest grid index on ties
    worst = min(reports, key=lambda r: r.slack)
    return ViolationScanResult(grid, reports, worst)


def _golden_section(f, lo: float, hi: float, tol: float) -> float:
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def maximize_violation(
    theta_lo: float, theta_hi: float, tol: float = 1e-9, grid_steps: int = 1001
) -> tuple[float, float]:
    """Minimize the trig slack on ``[theta_lo, theta_hi]``.

    A uniform grid picks the best sample, then golden-section search refines
    the bracket made of its two neighbours down to width ``tol``.  Returns
    ``(theta_star, f(theta_star))``; endpoints are kept if they beat the
    refined point.
    """
    if not tol > 0:
        raise NonPositiveTolerance(f"tol must be positive, got {tol!r}")
    grid = angle_grid(theta_lo, theta_hi, grid_steps)
    values = [trig_specialization(t) for t in grid]
    i = min(range(len(grid)), key=values.__getitem__)
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    best_theta, best_f = grid[i], values[i]
    if hi - lo > tol:
        t = _golden_section(trig_specialization, lo, hi, tol)
        ft = trig_specialization(t)
        if ft < best_f:
            best_theta, best_f = t, ft
    return best_theta, best_f
