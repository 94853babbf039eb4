"""Wigner-Majorana spin-ladder Hamiltonians and the pulse/free-evolution
propagators built from them, plus closed-form qutrit results used as
independent checks on the numerics.

States are labelled 1..D in docstrings; array indices are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .linalg import unitary_exp

DEFAULT_TAU = 10.0
DEFAULT_PULSE = 1.0


def default_rabi(pulse_duration: float) -> float:
    """Rabi frequency giving a pi/2 pulse on a qubit: pi / (2T)."""
    return math.pi / (2.0 * pulse_duration)


@dataclass(frozen=True)
class WmSystem:
    """A D-level WM qudit driven by a square pulse.

    ``rabi`` defaults to pi/(2T). Frequencies are angular, in inverse units
    of ``pulse_duration``.
    """

    dim: int
    detuning: float = 0.0
    pulse_duration: float = DEFAULT_PULSE
    rabi: float = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.dim!r}")
        if not (self.pulse_duration > 0 and math.isfinite(self.pulse_duration)):
            raise ValueError(f"pulse duration must be positive, got {self.pulse_duration!r}")
        if self.rabi is None:
            object.__setattr__(self, "rabi", default_rabi(self.pulse_duration))
        for name in ("rabi", "detuning"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        object.__setattr__(self, "dim", int(self.dim))

    def with_detuning(self, detuning: float) -> "WmSystem":
        return replace(self, detuning=float(detuning))

    def level_shifts(self) -> np.ndarray:
        """Diagonal of H_D divided by the detuning: d - (D+1)/2 for d = 1..D."""
        return np.arange(1, self.dim + 1) - (self.dim + 1) / 2.0

    def couplings(self) -> np.ndarray:
        """Nearest-neighbour couplings 1/2 sqrt(d(D-d)) Omega, d = 1..D-1."""
        d = np.arange(1, self.dim)
        return 0.5 * np.sqrt(d * (self.dim - d)) * self.rabi


def wm_hamiltonian(sys: WmSystem) -> np.ndarray:
    h = np.diag(sys.level_shifts() * sys.detuning).astype(np.complex128)
    c = sys.couplings()
    idx = np.arange(sys.dim - 1)
    h[idx, idx + 1] = c
    h[idx + 1, idx] = c
    return h


def free_evolution(sys: WmSystem, tau: float) -> np.ndarray:
    if tau < 0:
        raise ValueError(f"interrogation time must be >= 0, got {tau!r}")
    return np.diag(np.exp(-1j * tau * sys.detuning * sys.level_shifts()))


def pulse_propagator(sys: WmSystem) -> np.ndarray:
    """R_D(T) = exp(-i H_D T)."""
    return unitary_exp(wm_hamiltonian(sys), sys.pulse_duration)


def _qutrit_terms(sys: WmSystem):
    if sys.dim != 3:
        raise ValueError(f"closed-form qutrit expressions need D = 3, got D = {sys.dim}")
    delta, omega = sys.detuning, sys.rabi
    omega_gen = math.hypot(delta, omega)
    if omega_gen == 0.0:
        raise ValueError("closed form undefined for zero detuning and zero Rabi frequency")
    area = omega_gen * sys.pulse_duration
    c, s = math.cos(area), math.sin(area)
    delta_t = delta - delta * c - 1j * omega_gen * s
    return delta, omega, omega_gen, c, delta_t


def analytic_qutrit_propagator(sys: WmSystem) -> np.ndarray:
    """Closed-form R_3(T).

    The generalized pulse area is taken as sqrt(delta^2 + omega^2) * T; with
    that reading the expression agrees with :func:`pulse_propagator` to
    machine precision.
    """
    delta, omega, omega_gen, c, dt = _qutrit_terms(sys)
    dtc = dt.conjugate()
    r2 = math.sqrt(2.0)
    edge = 0.5 * omega**2 * (c - 1.0)
    m = np.array(
        [
            [delta**2 - delta * dt + 0.5 * omega**2 * (1.0 + c), omega * dt / r2, edge],
            [omega * dt / r2, delta**2 + omega**2 * c, -omega * dtc / r2],
            [edge, -omega * dtc / r2, delta**2 - delta * dtc + 0.5 * omega**2 * (1.0 + c)],
        ],
        dtype=np.complex128,
    )
    return m / omega_gen**2


def analytic_qutrit_ramsey(sys: WmSystem, tau: float) -> float:
    """Closed-form central-state survival probability P(2 <- 2) of R F(tau) R."""
    delta, omega, omega_gen, c, dt = _qutrit_terms(sys)
    phase = complex(math.cos(delta * tau), math.sin(delta * tau))
    amp = (
        2.0 * (delta**2 + omega**2 * c) ** 2
        + phase * dt**2 * omega**2
        + phase.conjugate() * omega**2 * dt.conjugate() ** 2
    )
    return abs(amp) ** 2 / (4.0 * omega_gen**8)


def ideal_qubit_fringe(detuning, tau):
    """cos^2(detuning * tau / 2); accepts scalars or arrays."""
    return np.cos(0.5 * np.asarray(detuning) * tau) ** 2
