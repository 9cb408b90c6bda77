import math

import pytest
from hypothesis import given, strategies as st

from bellcond import qubit as qm
from bellcond.errors import NonFiniteAngle, NotNormalized, ZeroAmplitudeOutcome

R2 = math.sqrt(2) / 2
angles = st.floats(-20.0, 20.0, allow_nan=False)


def state(a0, a1):
    return qm.qubit_state(a0, a1)


def test_spin_observable_special_angles():
    assert qm.spin_observable(0).matrix == ((1.0, 0.0), (0.0, -1.0))
    (m00, m01), (m10, m11) = qm.spin_observable(math.pi / 2).matrix
    assert abs(m00) < 1e-15 and m01 == 1.0 and m10 == 1.0 and abs(m11) < 1e-15


def test_spin_observable_periodicity_and_range():
    assert abs(qm.spin_observable(2 * math.pi + 0.3).theta - 0.3) < 1e-12
    assert 0 <= qm.spin_observable(-1e-300).theta < 2 * math.pi
    assert 0 <= qm.spin_observable(-7.0).theta < 2 * math.pi


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_spin_observable_rejects_non_finite(bad):
    with pytest.raises(NonFiniteAngle):
        qm.spin_observable(bad)


@given(angles)
def test_matrix_is_traceless_with_det_minus_one(theta):
    (a, b), (c, d) = qm.spin_observable(theta).matrix
    assert b == c
    assert abs(a + d) < 1e-12
    assert abs(a * d - b * c + 1) < 1e-12


def test_eigenpairs_examples():
    plus, minus = qm.eigenpairs(qm.spin_observable(0))
    assert plus.eigenvector.isclose(state(1, 0)) and minus.eigenvector.isclose(state(0, 1))

    plus, minus = qm.eigenpairs(qm.spin_observable(math.pi))
    assert plus.eigenvector.isclose(state(0, 1)) and minus.eigenvector.isclose(state(-1, 0))

    plus, _ = qm.eigenpairs(qm.spin_observable(math.pi / 2))
    assert plus.eigenvector.isclose(state(R2, R2))


@given(angles)
def test_eigenpairs_satisfy_eigen_equation(theta):
    obs = qm.spin_observable(theta)
    for pair in qm.eigenpairs(obs):
        assert pair.eigenvector.is_normalized()
        image = obs.apply(pair.eigenvector)
        assert all(
            abs(u - pair.eigenvalue * v) < 1e-12 for u, v in zip(image.amplitudes, pair.eigenvector.amplitudes)
        )


def test_transition_probability_examples():
    e = state(1, 0)
    assert qm.transition_probability(e, e) == 1
    assert qm.transition_probability(e, state(0, 1)) == 0
    assert abs(qm.transition_probability(e, state(R2, R2)) - 0.5) < 1e-12
    with pytest.raises(NotNormalized):
        qm.transition_probability(e, state(1, 1))


def test_transition_probability_complex_phase():
    assert abs(qm.transition_probability(state(1j, 0), state(R2, R2 * 1j)) - 0.5) < 1e-12


def test_quantum_conditional_examples():
    s = qm.spin_observable
    assert qm.quantum_conditional(s(0.7), s(0.7)).entries == ((1.0, 0.0), (0.0, 1.0))
    m = qm.quantum_conditional(s(math.pi), s(0)).entries
    assert abs(m[0][0]) < 1e-12 and abs(m[0][1] - 1) < 1e-12 and abs(m[1][0] - 1) < 1e-12
    m = qm.quantum_conditional(s(0), s(math.pi / 2))
    assert all(abs(v - 0.5) < 1e-12 for row in m.entries for v in row)


@given(angles, angles)
def test_conditional_matrix_properties(t1, t2):
    a, b = qm.spin_observable(t1), qm.spin_observable(t2)
    m = qm.quantum_conditional(a, b)
    assert m.is_doubly_stochastic()
    via = qm.conditional_from_eigenpairs(a, b)
    assert all(abs(u - v) < 1e-12 for r1, r2 in zip(m.entries, via.entries) for u, v in zip(r1, r2))
    # order-free within this family
    swapped = qm.quantum_conditional(b, a)
    assert all(abs(u - v) < 1e-12 for r1, r2 in zip(m.entries, swapped.entries) for u, v in zip(r1, r2))
    half = (t1 - t2) / 2
    assert abs(math.cos(half) ** 2 + math.sin(half) ** 2 - 1) < 1e-12


def test_born_probability_examples():
    obs = qm.spin_observable(1.1)
    phi_plus = qm.eigenvector(obs, 1)
    assert abs(qm.born_probability(phi_plus, obs, 1) - 1) < 1e-12
    assert qm.born_probability(phi_plus, obs, -1) < 1e-12
    assert abs(qm.born_probability(state(1, 0), qm.spin_observable(math.pi / 2), 1) - 0.5) < 1e-12
    with pytest.raises(NotNormalized):
        qm.born_probability(state(2, 0), obs, 1)


@given(angles, st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
def test_born_probabilities_sum_to_one(theta, alpha, phase):
    psi = state(math.cos(alpha), math.sin(alpha) * complex(math.cos(phase), math.sin(phase)))
    obs = qm.spin_observable(theta)
    assert abs(qm.born_probability(psi, obs, 1) + qm.born_probability(psi, obs, -1) - 1) < 1e-12


def test_collapse_examples():
    obs = qm.spin_observable(0.4)
    phi_plus = qm.eigenvector(obs, 1)
    assert qm.collapse(phi_plus, obs, 1) == phi_plus
    assert qm.collapse(state(1, 0), qm.spin_observable(math.pi / 2), 1).isclose(state(R2, R2))
    with pytest.raises(ZeroAmplitudeOutcome):
        qm.collapse(phi_plus, obs, -1)


@given(angles, st.sampled_from([1, -1]), st.floats(0, 2 * math.pi))
def test_collapse_idempotent(theta, outcome, alpha):
    obs = qm.spin_observable(theta)
    psi = state(math.cos(alpha), math.sin(alpha))
    if qm.born_probability(psi, obs, outcome) <= 1e-9:
        return
    once = qm.collapse(psi, obs, outcome)
    assert qm.collapse(once, obs, outcome) == once


def test_state_json_round_trip():
    psi = state(R2, 1j * R2)
    assert psi.to_dict() == {"re": [R2, 0.0], "im": [0.0, R2]}
    assert qm.QubitState.from_dict(psi.to_dict()) == psi
