"""Interrogation sequences and the scalar Ramsey signal they produce.

Two families:

* ``WM_RAMSEY``: pulse, free evolution, pulse, with the pulses simulated from
  the WM Hamiltonian.
* ``QFT`` / ``SQRT_X``: an ideal, instantaneous gate ``G`` in place of each
  pulse, ``U = G F(tau) G``.

The signal is a sum of transition probabilities out of one prepared state,
see :func:`signal_rule_for`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .wm_model import WmSystem, free_evolution, pulse_propagator


class ProtocolKind(str, enum.Enum):
    WM_RAMSEY = "wm"
    QFT = "qft"
    SQRT_X = "sqrtx"


@dataclass(frozen=True)
class Protocol:
    kind: ProtocolKind
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "kind", ProtocolKind(self.kind))
        if int(self.dim) != self.dim or self.dim < 2:
            raise ValueError(f"protocol dimension must be an integer >= 2, got {self.dim!r}")

    @property
    def label(self) -> str:
        if self.kind is ProtocolKind.WM_RAMSEY:
            return str(self.dim)
        name = "QFT" if self.kind is ProtocolKind.QFT else "sqrtX"
        return f"{name}{self.dim}"


@dataclass(frozen=True)
class SignalRule:
    """1-based prepared state and the measured states whose probabilities are summed."""

    prepared: int
    measured: tuple[int, ...]


def signal_rule_for(dim: int, kind: ProtocolKind | str = ProtocolKind.WM_RAMSEY) -> SignalRule:
    """Prepared/measured states for a D-level interrogation.

    D=2 measures the transfer 1 -> 2 and D=3 the survival of the central
    state. For larger D the prepared state is the central one (odd D) or the
    lower of the two m = +-1/2 states (even D), and the signal is the summed
    population of its two neighbours. Gate protocols use the same rule.
    """
    kind = ProtocolKind(kind)
    if int(dim) != dim or dim < 2:
        raise ValueError(f"no signal rule for D={dim!r} ({kind.value}): need an integer D >= 2")
    if dim == 2:
        return SignalRule(1, (2,))
    if dim == 3:
        return SignalRule(2, (2,))
    p = dim // 2 if dim % 2 == 0 else (dim + 1) // 2
    return SignalRule(p, (p - 1, p + 1))


def mirrored_rule(rule: SignalRule, dim: int) -> SignalRule:
    """The same rule under the ladder reflection d -> D + 1 - d."""
    flip = lambda d: dim + 1 - d  # noqa: E731
    return SignalRule(flip(rule.prepared), tuple(sorted(flip(d) for d in rule.measured)))


def ramsey_sequence(sys: WmSystem, tau: float) -> np.ndarray:
    r = pulse_propagator(sys)
    return r @ free_evolution(sys, tau) @ r


def qft_gate(dim: int) -> np.ndarray:
    k = np.arange(dim)
    # exponent reduced mod D before exponentiating keeps entries exact roots of unity
    return np.exp(2j * np.pi * (np.outer(k, k) % dim) / dim) / np.sqrt(dim)


def clock_gate(dim: int, power: float = 1.0) -> np.ndarray:
    """diag(omega^(k*power)) for k = 0..D-1; power 1/2 is the principal sqrt(Z)."""
    return np.diag(np.exp(2j * np.pi * power * np.arange(dim) / dim))


def shift_gate(dim: int) -> np.ndarray:
    """X_D = QFT Z QFT^dagger, the cyclic shift |k> -> |k-1 mod D>."""
    q = qft_gate(dim)
    return q @ clock_gate(dim) @ q.conj().T


def sqrt_x_gate(dim: int) -> np.ndarray:
    q = qft_gate(dim)
    return q @ clock_gate(dim, 0.5) @ q.conj().T


def gate_for(kind: ProtocolKind | str, dim: int) -> np.ndarray:
    kind = ProtocolKind(kind)
    if kind is ProtocolKind.QFT:
        return qft_gate(dim)
    if kind is ProtocolKind.SQRT_X:
        return sqrt_x_gate(dim)
    raise ValueError(f"{kind.value!r} is not a gate protocol")


def gate_sequence(kind: ProtocolKind | str, dim: int, detuning: float, tau: float) -> np.ndarray:
    g = gate_for(kind, dim)
    # G applied twice (not G then G^dagger)
    return g @ free_evolution(WmSystem(dim, detuning=detuning), tau) @ g


def sequence(protocol: Protocol, sys: WmSystem, tau: float) -> np.ndarray:
    if sys.dim != protocol.dim:
        raise ValueError(f"protocol is for D={protocol.dim} but system has D={sys.dim}")
    if protocol.kind is ProtocolKind.WM_RAMSEY:
        return ramsey_sequence(sys, tau)
    return gate_sequence(protocol.kind, sys.dim, sys.detuning, tau)


def final_state(protocol: Protocol, sys: WmSystem, tau: float) -> np.ndarray:
    """U|prepared>, the state read out by the signal rule."""
    rule = signal_rule_for(protocol.dim, protocol.kind)
    return sequence(protocol, sys, tau)[:, rule.prepared - 1]


def signal(protocol: Protocol, sys: WmSystem, tau: float, rule: SignalRule | None = None) -> float:
    rule = rule or signal_rule_for(protocol.dim, protocol.kind)
    u = sequence(protocol, sys, tau)
    column = u[:, rule.prepared - 1]
    return float(sum(abs(column[d - 1]) ** 2 for d in rule.measured))
