"""Ramsey interferometry on Wigner-Majorana qudits."""

from .linalg import hermitian_eigen, is_hermitian, is_unitary, unitary_exp
from .metrics import FringeMetrics, FringeSignal, find_extrema, fringe_metrics, qfi
from .protocols import (
    Protocol,
    ProtocolKind,
    SignalRule,
    gate_sequence,
    qft_gate,
    ramsey_sequence,
    signal,
    signal_rule_for,
    sqrt_x_gate,
)
from .sweep import SweepSpec, run_sweep, table_one
from .wm_model import (
    WmSystem,
    analytic_qutrit_propagator,
    analytic_qutrit_ramsey,
    free_evolution,
    ideal_qubit_fringe,
    pulse_propagator,
    wm_hamiltonian,
)

__all__ = [
    "FringeMetrics", "FringeSignal", "Protocol", "ProtocolKind", "SignalRule", "SweepSpec",
    "WmSystem", "analytic_qutrit_propagator", "analytic_qutrit_ramsey", "find_extrema",
    "free_evolution", "fringe_metrics", "gate_sequence", "hermitian_eigen", "ideal_qubit_fringe",
    "is_hermitian", "is_unitary", "pulse_propagator", "qfi", "qft_gate", "ramsey_sequence",
    "run_sweep", "signal", "signal_rule_for", "sqrt_x_gate", "table_one", "unitary_exp",
    "wm_hamiltonian",
]
