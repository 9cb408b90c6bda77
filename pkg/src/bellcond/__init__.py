"""Kolmogorov vs. quantum conditional probabilities for a single qubit."""

from .classical_fit import (
    FeasibilityResult,
    JointDistribution8,
    PairwiseTargets,
    decide_feasibility,
    enumerate_wigner_facets,
    targets_from_quantum,
    verify_witness,
)
from .inequalities import (
    InequalityReport,
    bell_covariation_check,
    maximize_violation,
    quantum_wigner_conditional,
    scan_violations,
    trig_specialization,
    wigner_conditional_check,
    wigner_joint_check,
)
from .probspace import (
    DichotomicVariable,
    FiniteProbabilitySpace,
    bayes_conditional,
    covariation,
    expectation,
    is_symmetric,
    joint_prob,
    make_space,
    random_space_and_variables,
)
from .qubit import (
    QubitState,
    SpinObservable,
    born_probability,
    collapse,
    eigenpairs,
    quantum_conditional,
    spin_observable,
    transition_probability,
)

__version__ = "0.1.0"
