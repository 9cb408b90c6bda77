"""Single-qubit spin projections in the x-z plane.

The observable family is ``sigma(theta) = cos(theta) * sigma_z + sin(theta) * sigma_x``
with the closed-form eigenvectors

    phi_plus(theta)  = ( cos(theta/2), sin(theta/2))   eigenvalue +1
    phi_minus(theta) = (-sin(theta/2), cos(theta/2))   eigenvalue -1

Amplitudes are 64-bit complex numbers in the sigma_z basis; comparisons use
an absolute tolerance of ``TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonFiniteAngle, NotNormalized, ZeroAmplitudeOutcome

TOL = 1e-12
TWO_PI = 2.0 * math.pi

OUTCOMES = (1, -1)


def _outcome_index(outcome: int) -> int:
    if outcome == 1:
        return 0
    if outcome == -1:
        return 1
    raise ValueError(f"outcome must be +1 or -1, got {outcome!r}")


@dataclass(frozen=True)
class QubitState:
    amplitudes: tuple[complex, complex]

    def __post_init__(self):
        a0, a1 = (complex(a) for a in self.amplitudes)
        if not all(math.isfinite(v) for v in (a0.real, a0.imag, a1.real, a1.imag)):
            raise ValueError("qubit amplitudes must be finite")
        object.__setattr__(self, "amplitudes", (a0, a1))

    @property
    def norm_squared(self) -> float:
        a0, a1 = self.amplitudes
        return abs(a0) ** 2 + abs(a1) ** 2

    def is_normalized(self) -> bool:
        return abs(self.norm_squared - 1.0) <= TOL

    def isclose(self, other: "QubitState", tol: float = TOL) -> bool:
        return all(abs(u - v) <= tol for u, v in zip(self.amplitudes, other.amplitudes))

    def to_dict(self) -> dict:
        a0, a1 = self.amplitudes
        return {"re": [a0.real, a1.real], "im": [a0.imag, a1.imag]}

    @classmethod
    def from_dict(cls, d: dict) -> "QubitState":
        (r0, r1), (i0, i1) = d["re"], d["im"]
        return cls((complex(r0, i0), complex(r1, i1)))


def qubit_state(a0: complex, a1: complex) -> QubitState:
    return QubitState((a0, a1))


def _require_normalized(*states: QubitState) -> None:
    for s in states:
        if not s.is_normalized():
            raise NotNormalized(f"state has squared norm {s.norm_squared!r}")


def inner(e: QubitState, f: QubitState) -> complex:
    """``<e, f>``, antilinear in the first slot."""
    return sum((u.conjugate() * v for u, v in zip(e.amplitudes, f.amplitudes)), 0j)


@dataclass(frozen=True)
class SpinObservable:
    theta: float

    @property
    def matrix(self) -> tuple[tuple[float, float], tuple[float, float]]:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return ((c, s), (s, -c))

    def apply(self, state: QubitState) -> QubitState:
        (m00, m01), (m10, m11) = self.matrix
        a0, a1 = state.amplitudes
        return QubitState((m00 * a0 + m01 * a1, m10 * a0 + m11 * a1))


def check_angle(theta: float) -> float:
    theta = float(theta)
    if not math.isfinite(theta):
        raise NonFiniteAngle(f"angle must be finite, got {theta!r}")
    return theta


def spin_observable(theta: float) -> SpinObservable:
    t = math.fmod(check_angle(theta), TWO_PI)
    if t < 0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod of a tiny negative can round up to 2*pi
        t = 0.0
    return SpinObservable(t)


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: int
    eigenvector: QubitState


def eigenpairs(obs: SpinObservable) -> tuple[EigenPair, EigenPair]:
    half = obs.theta / 2.0
    c, s = math.cos(half), math.sin(half)
    return (
        EigenPair(1, QubitState((complex(c), complex(s)))),
        EigenPair(-1, QubitState((complex(-s), complex(c)))),
    )


def eigenvector(obs: SpinObservable, outcome: int) -> QubitState:
    return eigenpairs(obs)[_outcome_index(outcome)].eigenvector


def transition_probability(e: QubitState, f: QubitState) -> float:
    _require_normalized(e, f)
    return abs(inner(e, f)) ** 2


@dataclass(frozen=True)
class ConditionalMatrix:
    """``entries[i][j] = P(a = alpha_i | b = beta_j)``, index 0 for +1 and 1 for -1."""

    entries: tuple[tuple[float, float], tuple[float, float]]

    def entry(self, alpha: int, beta: int) -> float:
        return self.entries[_outcome_index(alpha)][_outcome_index(beta)]

    def row_sums(self) -> tuple[float, float]:
        return tuple(sum(row) for row in self.entries)

    def column_sums(self) -> tuple[float, float]:
        return tuple(sum(col) for col in zip(*self.entries))

    def is_doubly_stochastic(self, tol: float = TOL) -> bool:
        return all(abs(t - 1.0) <= tol for t in self.row_sums() + self.column_sums())


def quantum_conditional(a: SpinObservable, b: SpinObservable) -> ConditionalMatrix:
    half = (a.theta - b.theta) / 2.0
    c2 = math.cos(half) ** 2
    s2 = math.sin(half) ** 2
    return ConditionalMatrix(((c2, s2), (s2, c2)))


def conditional_from_eigenpairs(a: SpinObservable, b: SpinObservable) -> ConditionalMatrix:
    """Same matrix as :func:`quantum_conditional`, via inner products of eigenvectors."""
    ea, eb = eigenpairs(a), eigenpairs(b)
    return ConditionalMatrix(
        tuple(
            tuple(transition_probability(pa.eigenvector, pb.eigenvector) for pb in eb) for pa in ea
        )
    )


def born_probability(state: QubitState, obs: SpinObservable, outcome: int) -> float:
    _require_normalized(state)
    return abs(inner(eigenvector(obs, outcome), state)) ** 2


def collapse(state: QubitState, obs: SpinObservable, outcome: int) -> QubitState:
    """Projective update onto the eigenvector for ``outcome`` (canonical real phase)."""
    if born_probability(state, obs, outcome) <= TOL:
        raise ZeroAmplitudeOutcome(
            f"outcome {outcome:+d} of sigma({obs.theta!r}) has zero probability in this state"
        )
    return eigenvector(obs, outcome)
