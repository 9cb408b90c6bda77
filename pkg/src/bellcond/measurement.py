"""Monte Carlo of sequential projective measurements on one qubit.

Each trial prepares ``initial``, measures ``first`` (Born rule), collapses
onto the observed eigenvector and then measures ``second``.  Randomness
comes from numpy's PCG64 bit generator: every trial consumes two raw 64-bit
words, each mapped to a double in ``[0, 1)`` as ``(word >> 11) * 2**-53``.
This pins the stream to PCG64 itself rather than to any numpy distribution
method, so counts are reproducible across platforms and numpy releases.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import qubit as qm
from .errors import EmptyConditionRow, NotNormalized

FLAG_SIGMAS = 4.0
DEFAULT_INITIAL = qm.QubitState((1 + 0j, 0j))


@dataclass(frozen=True)
class ProtocolSpec:
    first: qm.SpinObservable
    second: qm.SpinObservable
    trials: int
    seed: int
    initial: qm.QubitState = DEFAULT_INITIAL

    def __post_init__(self):
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError(f"trials must be a positive integer, got {self.trials!r}")
        if not self.initial.is_normalized():
            raise NotNormalized("initial state must be normalized")


def protocol(theta_first: float, theta_second: float, trials: int, seed: int, initial=None) -> ProtocolSpec:
    return ProtocolSpec(
        qm.spin_observable(theta_first),
        qm.spin_observable(theta_second),
        trials,
        seed,
        DEFAULT_INITIAL if initial is None else initial,
    )


@dataclass(frozen=True)
class FrequencyTable:
    """``counts[i][j]`` for first outcome ``i`` and second outcome ``j`` (index 0 is +1)."""

    counts: tuple[tuple[int, int], tuple[int, int]]
    trials: int
    seed: int | None = None

    def __post_init__(self):
        if sum(map(sum, self.counts)) != self.trials:
            raise ValueError("counts do not add up to the number of trials")

    def row_total(self, first_outcome: int) -> int:
        return sum(self.counts[qm._outcome_index(first_outcome)])

    def to_dict(self) -> dict:
        return {"counts": [list(r) for r in self.counts], "trials": self.trials, "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "FrequencyTable":
        return cls(tuple(tuple(int(v) for v in r) for r in d["counts"]), int(d["trials"]), d.get("seed"))


def uniform_doubles(seed: int, n: int) -> np.ndarray:
    raw = np.random.PCG64(seed).random_raw(n)
    return (raw >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def run_protocol(spec: ProtocolSpec) -> FrequencyTable:
    u = uniform_doubles(spec.seed, 2 * spec.trials).reshape(spec.trials, 2)
    p_first = qm.born_probability(spec.initial, spec.first, 1)
    first_plus = u[:, 0] < p_first

    # after collapse the state is an eigenvector of `first`, so the second
    # outcome distribution depends only on which eigenvector it was
    post = {o: qm.eigenvector(spec.first, o) for o in qm.OUTCOMES}
    p_second_plus = {o: qm.born_probability(post[o], spec.second, 1) for o in qm.OUTCOMES}
    threshold = np.where(first_plus, p_second_plus[1], p_second_plus[-1])
    second_plus = u[:, 1] < threshold

    n_pp = int(np.count_nonzero(first_plus & second_plus))
    n_p = int(np.count_nonzero(first_plus))
    n_mp = int(np.count_nonzero(~first_plus & second_plus))
    n_m = spec.trials - n_p
    counts = ((n_pp, n_p - n_pp), (n_mp, n_m - n_mp))
    return FrequencyTable(counts, spec.trials, spec.seed)


def run_protocol_stepwise(spec: ProtocolSpec) -> FrequencyTable:
    """Trial-by-trial reference using ``collapse`` explicitly; same stream, same counts."""
    u = uniform_doubles(spec.seed, 2 * spec.trials)
    counts = [[0, 0], [0, 0]]
    for k in range(spec.trials):
        state = spec.initial
        first = 1 if u[2 * k] < qm.born_probability(state, spec.first, 1) else -1
        state = qm.collapse(state, spec.first, first)
        second = 1 if u[2 * k + 1] < qm.born_probability(state, spec.second, 1) else -1
        counts[qm._outcome_index(first)][qm._outcome_index(second)] += 1
    return FrequencyTable(tuple(map(tuple, counts)), spec.trials, spec.seed)


def conditional_frequency(table: FrequencyTable, first_outcome: int) -> float:
    """Empirical ``P(second = +1 | first = first_outcome)``."""
    row = table.counts[qm._outcome_index(first_outcome)]
    total = sum(row)
    if total == 0:
        raise EmptyConditionRow(f"no trials with first outcome {first_outcome:+d}")
    return row[0] / total


def theoretical_conditional(spec: ProtocolSpec, first_outcome: int) -> float:
    return qm.quantum_conditional(spec.second, spec.first).entry(1, first_outcome)


@dataclass(frozen=True)
class BranchComparison:
    first_outcome: int
    n: int
    empirical: float
    theory: float
    deviation: float
    std_error: float
    flagged: bool

    def to_dict(self) -> dict:
        return {
            "first_outcome": self.first_outcome,
            "n": self.n,
            "empirical": self.empirical,
            "theory": self.theory,
            "deviation": self.deviation,
            "std_error": self.std_error,
            "flagged": self.flagged,
        }


@dataclass(frozen=True)
class Comparison:
    branches: tuple[BranchComparison, ...]

    @property
    def flagged(self) -> bool:
        return any(b.flagged for b in self.branches)

    def to_dict(self) -> dict:
        return {"flagged": self.flagged, "branches": [b.to_dict() for b in self.branches]}


def compare_to_theory(spec: ProtocolSpec, table: FrequencyTable, theory=None) -> Comparison:
    """Per nonempty branch: empirical vs analytic conditional, flagged beyond 4 standard errors.

    ``theory`` optionally replaces :func:`theoretical_conditional` (used for
    negative controls).
    """
    theory = theory or theoretical_conditional
    branches = []
    for o in qm.OUTCOMES:
        n = table.row_total(o)
        if n == 0:
            continue
        emp = conditional_frequency(table, o)
        p = theory(spec, o)
        se = math.sqrt(p * (1.0 - p) / n)
        dev = abs(emp - p)
        branches.append(BranchComparison(o, n, emp, p, dev, se, dev > FLAG_SIGMAS * se))
    return Comparison(tuple(branches))


def simulation_record(spec: ProtocolSpec, table: FrequencyTable, comparison: Comparison) -> dict:
    return {
        "protocol": {
            "theta_first": spec.first.theta,
            "theta_second": spec.second.theta,
            "trials": spec.trials,
            "seed": spec.seed,
            "initial": spec.initial.to_dict(),
        },
        "table": table.to_dict(),
        "comparison": comparison.to_dict(),
    }


def dumps(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"
