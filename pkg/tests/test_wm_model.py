import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_ramsey, wm_hamiltonian_loops
from quditramsey.linalg import is_hermitian, is_unitary
from quditramsey.protocols import Protocol, signal
from quditramsey.wm_model import (
    WmSystem,
    analytic_qutrit_propagator,
    analytic_qutrit_ramsey,
    free_evolution,
    ideal_qubit_fringe,
    pulse_propagator,
    wm_hamiltonian,
)

HALF_PI = math.pi / 2


def test_default_rabi_is_quarter_turn():
    assert WmSystem(3).rabi == HALF_PI
    assert WmSystem(3, pulse_duration=2.0).rabi == math.pi / 4


@pytest.mark.parametrize("kwargs", [dict(dim=1), dict(dim=2.5), dict(dim=3, pulse_duration=0.0),
                                    dict(dim=3, detuning=math.nan)])
def test_invalid_systems(kwargs):
    with pytest.raises(ValueError):
        WmSystem(**kwargs)


def test_qubit_hamiltonian():
    d, o = 0.3, 1.7
    np.testing.assert_allclose(wm_hamiltonian(WmSystem(2, d, rabi=o)), 0.5 * np.array([[-d, o], [o, d]]))


def test_qutrit_hamiltonian():
    d, o = -0.4, 1.2
    r = o / math.sqrt(2)
    expected = [[-d, r, 0], [r, 0, r], [0, r, d]]
    np.testing.assert_allclose(wm_hamiltonian(WmSystem(3, d, rabi=o)), expected, atol=1e-15)


def test_ququartit_couplings():
    h = wm_hamiltonian(WmSystem(4, 0.0, rabi=2.0)).real
    np.testing.assert_allclose(np.diag(h, 1), [math.sqrt(3), 2, math.sqrt(3)])
    np.testing.assert_allclose(np.diag(h), 0)


@given(st.integers(2, 16), st.floats(-5, 5), st.floats(0.1, 5))
def test_hamiltonian_structure(dim, d, o):
    h = wm_hamiltonian(WmSystem(dim, d, rabi=o))
    assert is_hermitian(h)
    assert np.count_nonzero(np.triu(h, 2)) == 0
    c = np.diag(h, 1)
    np.testing.assert_allclose(c, c[::-1], rtol=1e-14)
    np.testing.assert_allclose(h, wm_hamiltonian_loops(dim, d, o), atol=1e-14)


def test_free_evolution_examples():
    assert np.array_equal(free_evolution(WmSystem(5, 0.0), 7.0), np.eye(5))
    d, t = 0.3, 2.0
    np.testing.assert_allclose(free_evolution(WmSystem(2, d), t),
                               np.diag([np.exp(1j * d * t / 2), np.exp(-1j * d * t / 2)]))
    f = free_evolution(WmSystem(5, 0.4), 10.0)
    np.testing.assert_allclose(np.angle(np.diag(f)), np.angle(np.exp(1j * np.array([8, 4, 0, -4, -8]))), atol=1e-12)


@given(st.integers(2, 9), st.floats(-5, 5), st.floats(0, 20), st.floats(0, 20))
def test_free_evolution_phases_add(dim, d, t1, t2):
    s = WmSystem(dim, d)
    f = free_evolution(s, t1) @ free_evolution(s, t2)
    assert is_unitary(f, 1e-12)
    np.testing.assert_allclose(f, free_evolution(s, t1 + t2), atol=1e-12)


def test_free_evolution_rejects_negative_time():
    with pytest.raises(ValueError):
        free_evolution(WmSystem(3), -1.0)


def test_resonant_qubit_pulse_is_half_transfer():
    r = pulse_propagator(WmSystem(2))
    assert abs(abs(r[1, 0]) ** 2 - 0.5) < 1e-14


def test_analytic_propagator_resonant_centre():
    s = WmSystem(3, 0.0, rabi=0.9, pulse_duration=1.3)
    assert abs(analytic_qutrit_propagator(s)[1, 1] - math.cos(0.9 * 1.3)) < 1e-15
    assert abs(analytic_qutrit_propagator(WmSystem(3))[1, 1]) < 1e-15


@pytest.mark.parametrize("detuning", [0.0, 0.5])
def test_analytic_propagator_matches_exponential(detuning):
    s = WmSystem(3, detuning)
    assert np.max(np.abs(analytic_qutrit_propagator(s) - pulse_propagator(s))) < 1e-9


def test_closed_forms_reject_other_dimensions():
    with pytest.raises(ValueError, match="D = 3"):
        analytic_qutrit_propagator(WmSystem(4))
    with pytest.raises(ValueError, match="D = 3"):
        analytic_qutrit_ramsey(WmSystem(2), 1.0)


@pytest.mark.parametrize("tau", [0.0, 3.0, 10.0, 17.5])
def test_resonant_qutrit_ramsey_returns_centre(tau):
    assert abs(analytic_qutrit_ramsey(WmSystem(3), tau) - 1.0) < 1e-14


def test_qutrit_ramsey_matches_sequence_oracle():
    s = WmSystem(3, 0.5)
    u = brute_ramsey(3, 0.5, HALF_PI, 1.0, 10.0)
    assert abs(analytic_qutrit_ramsey(s, 10.0) - abs(u[1, 1]) ** 2) < 1e-9


def test_qutrit_fringes_twice_as_dense_as_qubit():
    ds = np.linspace(-1, 1, 2001)
    qutrit = np.array([analytic_qutrit_ramsey(WmSystem(3, d), 10.0) for d in ds])
    qubit = ideal_qubit_fringe(ds, 10.0)

    def peaks(y):
        return int(np.sum((y[1:-1] > y[:-2]) & (y[1:-1] > y[2:])))

    assert peaks(qutrit) >= 2 * peaks(qubit)


@given(st.floats(-5, 5), st.floats(0.1, 5), st.floats(0.1, 3), st.floats(0, 20))
def test_analytic_matches_numeric_everywhere(d, o, t, tau):
    s = WmSystem(3, d, t, o)
    assert np.max(np.abs(analytic_qutrit_propagator(s) - pulse_propagator(s))) < 1e-9
    r = pulse_propagator(s)
    numeric = abs((r @ free_evolution(s, tau) @ r)[1, 1]) ** 2
    assert abs(analytic_qutrit_ramsey(s, tau) - numeric) < 1e-9
    assert -1e-12 <= analytic_qutrit_ramsey(s, tau) <= 1 + 1e-12


def test_ideal_fringe_values():
    assert ideal_qubit_fringe(0.0, 10.0) == 1.0
    assert abs(ideal_qubit_fringe(math.pi / 10, 10.0)) < 1e-15
    assert abs(ideal_qubit_fringe(0.2, 10.0) - 0.29192658) < 1e-8


def test_ideal_fringe_close_to_pulsed_qubit_near_resonance():
    p = Protocol("wm", 2)
    assert signal(p, WmSystem(2, 0.0), 10.0) == pytest.approx(ideal_qubit_fringe(0.0, 10.0), abs=1e-14)
    for d in np.linspace(-0.05, 0.05, 41):
        assert abs(signal(p, WmSystem(2, d), 10.0) - ideal_qubit_fringe(d, 10.0)) < 0.02
