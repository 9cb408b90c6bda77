"""Finite Kolmogorov probability spaces with exact rational weights.

Events are arbitrary subsets of the atom list (the full power set), random
variables are ``+1``/``-1`` valued tuples indexed by atom.  Every quantity
returned here is a :class:`fractions.Fraction`; no floating point is used.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatch,
    NegativeWeight,
    NotNormalized,
    ZeroConditioningEvent,
)

RationalLike = Union[Fraction, int, str]

WEIGHT_BITS = 16


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` text; integers keep an explicit ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point weights are not accepted; pass a Fraction or 'p/q' string")
    return parse_rational(value) if isinstance(value, str) else Fraction(value)


@dataclass(frozen=True)
class FiniteProbabilitySpace:
    weights: tuple[Fraction, ...]

    @property
    def atom_count(self) -> int:
        return len(self.weights)

    @cached_property
    def _scaled(self) -> tuple[int, tuple[int, ...]]:
        # integer numerators over one common denominator; keeps sums cheap
        denom = lcm(*(w.denominator for w in self.weights))
        return denom, tuple(w.numerator * (denom // w.denominator) for w in self.weights)

    def mass(self, indicator: Iterable[bool]) -> Fraction:
        """Probability of the event given as a per-atom membership mask."""
        denom, nums = self._scaled
        return Fraction(sum(n for n, hit in zip(nums, indicator) if hit), denom)

    def to_json(self) -> str:
        return json.dumps({"weights": [format_rational(w) for w in self.weights]})

    @classmethod
    def from_json(cls, text: str) -> "FiniteProbabilitySpace":
        return make_space(json.loads(text)["weights"])


@dataclass(frozen=True)
class DichotomicVariable:
    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (1, -1) for v in self.values):
            raise ValueError(f"dichotomic variable must take values +1/-1, got {self.values}")

    def __neg__(self) -> "DichotomicVariable":
        return DichotomicVariable(tuple(-v for v in self.values))

    def __mul__(self, other: "DichotomicVariable") -> "DichotomicVariable":
        if len(self.values) != len(other.values):
            raise DimensionMismatch("variables live on spaces of different size")
        return DichotomicVariable(tuple(u * v for u, v in zip(self.values, other.values)))


def variable(values: Iterable[int]) -> DichotomicVariable:
    return DichotomicVariable(tuple(int(v) for v in values))


def make_space(weights: Sequence[RationalLike]) -> FiniteProbabilitySpace:
    if len(weights) == 0:
        raise ValueError("a probability space needs at least one atom")
    ws = tuple(_as_fraction(w) for w in weights)
    for i, w in enumerate(ws):
        if w < 0:
            raise NegativeWeight(f"atom {i} has negative weight {format_rational(w)}")
    total = sum(ws, Fraction(0))
    if total != 1:
        raise NotNormalized(f"weights sum to {format_rational(total)}, not 1")
    return FiniteProbabilitySpace(ws)


def uniform_space(n: int) -> FiniteProbabilitySpace:
    return make_space([Fraction(1, n)] * n)


def _check(space: FiniteProbabilitySpace, *xs: DichotomicVariable) -> None:
    for x in xs:
        if len(x.values) != space.atom_count:
            raise DimensionMismatch(
                f"variable has {len(x.values)} entries, space has {space.atom_count} atoms"
            )


def expectation(space: FiniteProbabilitySpace, x: DichotomicVariable) -> Fraction:
    _check(space, x)
    denom, nums = space._scaled
    return Fraction(sum(n * v for n, v in zip(nums, x.values)), denom)


def covariation(space: FiniteProbabilitySpace, x: DichotomicVariable, y: DichotomicVariable) -> Fraction:
    """``<x, y> = E[xy]``."""
    _check(space, x, y)
    denom, nums = space._scaled
    return Fraction(sum(n * u * v for n, u, v in zip(nums, x.values, y.values)), denom)


def prob(space: FiniteProbabilitySpace, x: DichotomicVariable, alpha: int) -> Fraction:
    _check(space, x)
    return space.mass(v == alpha for v in x.values)


def joint_prob(
    space: FiniteProbabilitySpace,
    x: DichotomicVariable,
    alpha: int,
    y: DichotomicVariable,
    beta: int,
) -> Fraction:
    _check(space, x, y)
    return space.mass(u == alpha and v == beta for u, v in zip(x.values, y.values))


def bayes_conditional(
    space: FiniteProbabilitySpace,
    x: DichotomicVariable,
    alpha: int,
    y: DichotomicVariable,
    beta: int,
) -> Fraction:
    """``P(x=alpha | y=beta) = P(x=alpha, y=beta) / P(y=beta)``.

    Raises :class:`ZeroConditioningEvent` when ``P(y=beta) == 0``.
    """
    cond = prob(space, y, beta)
    if cond == 0:
        raise ZeroConditioningEvent(f"P(y={beta:+d}) = 0; conditional probability undefined")
    return joint_prob(space, x, alpha, y, beta) / cond


def is_symmetric(space: FiniteProbabilitySpace, x: DichotomicVariable) -> bool:
    return prob(space, x, 1) == Fraction(1, 2)


def random_space_and_variables(
    seed: int, atom_count: int
) -> tuple[FiniteProbabilitySpace, DichotomicVariable, DichotomicVariable, DichotomicVariable]:
    """Seeded generator of a space plus three arbitrary ``+-1`` variables.

    Weights are integers drawn from ``[0, 2**16)`` divided by their total;
    an all-zero draw is repeated.  Uses :class:`random.Random`, whose
    Mersenne Twister stream is stable across platforms.
    """
    if atom_count < 1:
        raise ValueError("atom_count must be >= 1")
    rng = random.Random(seed)
    while True:
        raw = [rng.randrange(1 << WEIGHT_BITS) for _ in range(atom_count)]
        total = sum(raw)
        if total:
            break
    space = FiniteProbabilitySpace(tuple(Fraction(r, total) for r in raw))
    a, b, c = (
        DichotomicVariable(tuple(rng.choice((1, -1)) for _ in range(atom_count))) for _ in range(3)
    )
    return space, a, b, c


def random_symmetric_space(
    seed: int, atom_count: int
) -> tuple[FiniteProbabilitySpace, DichotomicVariable, DichotomicVariable, DichotomicVariable]:
    """Random space on ``2 * atom_count`` atoms where all three variables are unbiased.

    Each atom of a :func:`random_space_and_variables` draw is split into a
    pair with half the weight, the second copy carrying negated values.
    """
    space, a, b, c = random_space_and_variables(seed, atom_count)
    half = Fraction(1, 2)
    weights = tuple(w * half for w in space.weights) * 2
    mirrored = [DichotomicVariable(v.values + tuple(-s for s in v.values)) for v in (a, b, c)]
    return FiniteProbabilitySpace(weights), *mirrored
