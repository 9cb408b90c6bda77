"""Does a classical joint distribution reproduce given pairwise statistics?

Three unbiased ``+-1`` observables ``a, b, c`` are modelled on the canonical
8-atom space of sign patterns, listed lexicographically from ``(+,+,+)`` to
``(-,-,-)``.  Given the ``(+1,+1)`` joint masses of each pair, an exact
phase-one simplex either produces a vertex witness or reports
infeasibility; in the latter case the certificate is the most violated
member of the Wigner facet family (all relabelings and outcome flips of
``P(a=+1,b=+1) + P(b=-1,c=+1) - P(a=+1,c=+1) >= 0``).
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import inequalities as ineq
from . import probspace as ps
from . import qubit as qm
from .errors import OutOfRangeTarget
from .simplex import find_feasible_point

HALF = Fraction(1, 2)
VARS = ("a", "b", "c")
PAIRS = (("a", "b"), ("b", "c"), ("a", "c"))
ATOMS: tuple[tuple[int, int, int], ...] = tuple(itertools.product((1, -1), repeat=3))


def atom_label(atom: tuple[int, int, int]) -> str:
    return "".join("+" if s > 0 else "-" for s in atom)


def _pair_key(x: str, y: str) -> tuple[str, str]:
    return (x, y) if VARS.index(x) < VARS.index(y) else (y, x)


@dataclass(frozen=True)
class PairwiseTargets:
    """``(+1,+1)`` joint masses of the three pairs; all marginals are 1/2.

    ``rounding_bound`` is the largest distance between each stored rational
    and the value it approximates (zero for exact sources).
    """

    p_ab: Fraction
    p_bc: Fraction
    p_ac: Fraction
    rounding_bound: Fraction = Fraction(0)
    raw: tuple[float, float, float] | None = None

    def __post_init__(self):
        for name in ("p_ab", "p_bc", "p_ac"):
            v = getattr(self, name)
            if isinstance(v, float):
                raise TypeError(f"{name} must be rational; use targets_from_quantum for floats")
            object.__setattr__(self, name, Fraction(v))

    def pair(self, x: str, y: str) -> Fraction:
        return {("a", "b"): self.p_ab, ("b", "c"): self.p_bc, ("a", "c"): self.p_ac}[_pair_key(x, y)]

    def joint(self, x: str, alpha: int, y: str, beta: int) -> Fraction:
        """``P(x=alpha, y=beta)`` implied by the targets and unbiased marginals."""
        p = self.pair(x, y)
        return p if alpha == beta else HALF - p

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.p_ab, self.p_bc, self.p_ac

    def to_dict(self) -> dict:
        d = {
            "p_ab": ps.format_rational(self.p_ab),
            "p_bc": ps.format_rational(self.p_bc),
            "p_ac": ps.format_rational(self.p_ac),
            "rounding_bound": ps.format_rational(self.rounding_bound),
        }
        if self.raw is not None:
            d["raw"] = list(self.raw)
        return d


def targets_from_quantum(theta1: float, theta2: float, theta3: float, denom: int) -> PairwiseTargets:
    """Quantum ``(+1,+1)`` masses ``cos^2(dtheta/2) / 2`` rounded to multiples of ``1/denom``."""
    if int(denom) != denom or denom < 2:
        raise ValueError(f"denom must be an integer >= 2, got {denom!r}")
    denom = int(denom)
    obs = dict(zip(VARS, (qm.spin_observable(t) for t in (theta1, theta2, theta3))))
    ceiling = denom // 2
    raw = []
    rounded = []
    for x, y in PAIRS:
        p = 0.5 * qm.quantum_conditional(obs[x], obs[y]).entry(1, 1)
        raw.append(p)
        rounded.append(Fraction(min(max(round(p * denom), 0), ceiling), denom))
    return PairwiseTargets(*rounded, rounding_bound=Fraction(1, 2 * denom), raw=tuple(raw))


@dataclass(frozen=True)
class JointDistribution8:
    masses: tuple[Fraction, ...]

    def as_space(self):
        """The witness as a probability space with ``a, b, c`` as random variables."""
        space = ps.make_space(self.masses)
        a, b, c = (ps.DichotomicVariable(tuple(atom[k] for atom in ATOMS)) for k in range(3))
        return space, a, b, c

    def to_dict(self) -> dict:
        return {
            "atoms": [atom_label(s) for s in ATOMS],
            "masses": [ps.format_rational(m) for m in self.masses],
        }


@dataclass(frozen=True)
class Term:
    sign: int
    x: str
    alpha: int
    y: str
    beta: int

    def render(self) -> str:
        return f"P({self.x}={self.alpha:+d},{self.y}={self.beta:+d})"


@dataclass(frozen=True)
class Facet:
    """An affine functional ``sum(sign * P(x=alpha, y=beta)) >= 0`` of the Wigner family."""

    index: int
    terms: tuple[Term, ...]
    middle: str
    outer: tuple[str, str]

    @property
    def ident(self) -> str:
        return f"W{self.index:02d}"

    @property
    def ordering(self) -> str:
        return f"({self.outer[0]}, {self.outer[1]} | {self.middle})"

    @property
    def expression(self) -> str:
        pos = " + ".join(t.render() for t in self.terms if t.sign > 0)
        neg = " - ".join(t.render() for t in self.terms if t.sign < 0)
        return f"{pos} - {neg} >= 0"

    @property
    def coefficients(self) -> tuple[int, ...]:
        idx = {v: k for k, v in enumerate(VARS)}
        out = []
        for atom in ATOMS:
            out.append(
                sum(
                    t.sign
                    for t in self.terms
                    if atom[idx[t.x]] == t.alpha and atom[idx[t.y]] == t.beta
                )
            )
        return tuple(out)

    def on_masses(self, masses) -> Fraction:
        return sum((c * m for c, m in zip(self.coefficients, masses)), Fraction(0))

    def on_targets(self, targets: PairwiseTargets) -> Fraction:
        return sum(
            (t.sign * targets.joint(t.x, t.alpha, t.y, t.beta) for t in self.terms), Fraction(0)
        )

    def to_dict(self) -> dict:
        return {
            "id": self.ident,
            "ordering": self.ordering,
            "expression": self.expression,
            "coefficients": list(self.coefficients),
        }


_GENERATOR = (Term(1, "a", 1, "b", 1), Term(1, "b", -1, "c", 1), Term(-1, "a", 1, "c", 1))


@lru_cache(maxsize=None)
def enumerate_wigner_facets() -> tuple[Facet, ...]:
    """All relabelings and outcome flips of the Wigner functional, deduplicated.

    Index 0 is the untransformed inequality.  Order follows
    ``itertools.permutations`` of the variables, then sign flips with
    ``+1`` before ``-1``.
    """
    facets: list[Facet] = []
    seen: set[tuple[int, ...]] = set()
    for perm in itertools.permutations(VARS):
        rename = dict(zip(VARS, perm))
        for flips in itertools.product((1, -1), repeat=3):
            flip = dict(zip(perm, flips))
            terms = []
            for t in _GENERATOR:
                x, y = rename[t.x], rename[t.y]
                alpha, beta = t.alpha * flip[x], t.beta * flip[y]
                if VARS.index(x) > VARS.index(y):
                    x, alpha, y, beta = y, beta, x, alpha
                terms.append(Term(t.sign, x, alpha, y, beta))
            outer = tuple(sorted((rename["a"], rename["c"]), key=VARS.index))
            facet = Facet(len(facets), tuple(terms), rename["b"], outer)
            key = facet.coefficients
            if key in seen:
                continue
            seen.add(key)
            facets.append(facet)
    return tuple(facets)


class Status(str, enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class Certificate:
    facet: Facet
    deficit: Fraction
    rounding_bound: Fraction

    @property
    def propagated_bound(self) -> Fraction:
        """Worst-case shift of the facet value caused by target rounding."""
        return len(self.facet.terms) * self.rounding_bound

    @property
    def robust(self) -> bool:
        return -self.deficit > self.propagated_bound

    def to_dict(self) -> dict:
        return {
            "facet": self.facet.to_dict(),
            "deficit": ps.format_rational(self.deficit),
            "deficit_float": float(self.deficit),
            "rounding_bound": ps.format_rational(self.rounding_bound),
            "propagated_bound": ps.format_rational(self.propagated_bound),
            "robust": self.robust,
        }


@dataclass(frozen=True)
class FeasibilityResult:
    status: Status
    targets: PairwiseTargets
    witness: JointDistribution8 | None = None
    certificate: Certificate | None = None

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "targets": self.targets.to_dict(),
            "witness": self.witness.to_dict() if self.witness else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def constraint_system(targets: PairwiseTargets) -> tuple[list[list[int]], list[Fraction]]:
    """Normalization, three unbiased marginals and three pairwise targets over the 8 atoms."""
    A = [[1] * 8]
    b = [Fraction(1)]
    for k in range(3):
        A.append([1 if atom[k] == 1 else 0 for atom in ATOMS])
        b.append(HALF)
    for (x, y), p in zip(PAIRS, targets.as_tuple()):
        i, j = VARS.index(x), VARS.index(y)
        A.append([1 if atom[i] == 1 and atom[j] == 1 else 0 for atom in ATOMS])
        b.append(p)
    return A, b


def _check_range(targets: PairwiseTargets) -> None:
    for name, p in zip(("p_ab", "p_bc", "p_ac"), targets.as_tuple()):
        if not 0 <= p <= HALF:
            raise OutOfRangeTarget(f"{name} = {ps.format_rational(p)} outside [0, 1/2]")


def violated_facets(targets: PairwiseTargets) -> list[tuple[Facet, Fraction]]:
    return [(f, v) for f in enumerate_wigner_facets() if (v := f.on_targets(targets)) < 0]


def decide_feasibility(targets: PairwiseTargets) -> FeasibilityResult:
    _check_range(targets)
    A, b = constraint_system(targets)
    x = find_feasible_point(A, b)
    if x is not None:
        return FeasibilityResult(Status.FEASIBLE, targets, witness=JointDistribution8(tuple(x)))
    bad = violated_facets(targets)
    if not bad:
        raise ineq.ConsistencyError("LP infeasible but every Wigner facet holds")
    facet, value = min(bad, key=lambda fv: fv[1])  # ties keep the lowest index
    cert = Certificate(facet, value, targets.rounding_bound)
    return FeasibilityResult(Status.INFEASIBLE, targets, certificate=cert)


def verify_witness(witness: JointDistribution8, targets: PairwiseTargets) -> bool:
    """Exact recheck of a witness, including the conditional Wigner inequality."""
    m = witness.masses
    if len(m) != 8 or any(v < 0 for v in m):
        return False
    A, b = constraint_system(targets)
    for row, rhs in zip(A, b):
        if sum((c * v for c, v in zip(row, m)), Fraction(0)) != rhs:
            return False
    space, a, bb, c = witness.as_space()
    return not ineq.classical_wigner_conditional(space, a, bb, c).violated


def quantum_fit(theta1: float, theta2: float, theta3: float, denom: int) -> FeasibilityResult:
    return decide_feasibility(targets_from_quantum(theta1, theta2, theta3, denom))

