"""Fringe figures of merit and quantum Fisher information.

Resolution, contrast and their product (the resolution-contrast index) are
computed from a sampled detuning trace:

* extrema are interior three-point extrema, refined with a local parabola;
* resolution = window width / mean spacing of successive minima, i.e. the
  number of complete fringe cycles fitting in the window;
* contrast = mean over every maximum of ``peak - (left + right) / 2`` where
  left/right are the nearest flanking minima. A peak with no minimum on one
  side inside the window uses the trace's endpoint sample instead.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .protocols import Protocol, final_state
from .wm_model import WmSystem

log = logging.getLogger(__name__)

PROB_SLACK = 1e-9
GRID_RTOL = 1e-12
QFI_STEP = 1e-5
QFI_CLAMP = -1e-8
QFI_RICHARDSON_RTOL = 1e-3


class UndefinedResolutionError(ValueError):
    """The trace has too few fringes in the window to define a resolution."""


class Extremum(NamedTuple):
    delta: float
    prob: float


@dataclass(frozen=True)
class FringeSignal:
    deltas: np.ndarray
    probs: np.ndarray
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        x = np.asarray(self.deltas, dtype=float)
        y = np.asarray(self.probs, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise ValueError("deltas and probs must be 1-d arrays of equal length")
        if x.size < 3:
            raise ValueError(f"need at least 3 samples, got {x.size}")
        steps = np.diff(x)
        if np.any(steps <= 0):
            raise ValueError("detuning grid must be strictly ascending")
        # Absolute floor absorbs the rounding of linspace on wide windows.
        slack = GRID_RTOL * steps.mean() + 8 * np.finfo(float).eps * np.max(np.abs(x))
        if np.max(np.abs(steps - steps.mean())) > slack:
            raise ValueError("detuning grid must be uniformly spaced")
        if np.any(~np.isfinite(y)) or y.min() < -PROB_SLACK or y.max() > 1 + PROB_SLACK:
            raise ValueError("probabilities must lie in [0, 1]")
        x.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "deltas", x)
        object.__setattr__(self, "probs", y)

    @property
    def width(self) -> float:
        return float(self.deltas[-1] - self.deltas[0])


@dataclass(frozen=True)
class FringeMetrics:
    resolution: float
    contrast: float
    rci: float
    maxima: tuple[float, ...]
    minima: tuple[float, ...]


def _refine(x: np.ndarray, y: np.ndarray, i: int) -> Extremum:
    a, b, c = y[i - 1], y[i], y[i + 1]
    curv = a - 2.0 * b + c
    if curv == 0.0:
        return Extremum(float(x[i]), float(b))
    off = 0.5 * (a - c) / curv
    step = x[i + 1] - x[i]
    return Extremum(float(x[i] + off * step), float(b - 0.25 * (a - c) * off))


def find_extrema(sig: FringeSignal) -> tuple[list[Extremum], list[Extremum]]:
    """Interior local maxima and minima of a sampled trace.

    Runs of equal samples count as one extremum placed at the run's midpoint;
    the endpoints of the trace are never extrema.
    """
    x, y = sig.deltas, sig.probs
    n = y.size
    maxima: list[Extremum] = []
    minima: list[Extremum] = []
    i = 1
    while i < n - 1:
        j = i
        while j + 1 < n - 1 and y[j + 1] == y[i]:
            j += 1
        if y[j + 1] == y[i]:
            break  # plateau runs into the last sample
        left, right = y[i - 1], y[j + 1]
        if left < y[i] and right < y[i]:
            target = maxima
        elif left > y[i] and right > y[i]:
            target = minima
        else:
            target = None
        if target is not None:
            if j == i:
                target.append(_refine(x, y, i))
            else:
                target.append(Extremum(float(0.5 * (x[i] + x[j])), float(y[i])))
        i = j + 1
    return maxima, minima


def resolution(sig: FringeSignal, minima: list[Extremum] | None = None) -> float:
    if minima is None:
        minima = find_extrema(sig)[1]
    if len(minima) < 2:
        raise UndefinedResolutionError(
            f"resolution undefined: {len(minima)} fringe minima in the window, need >= 2"
        )
    spacing = (minima[-1].delta - minima[0].delta) / (len(minima) - 1)
    return sig.width / spacing


def contrast(sig: FringeSignal, maxima: list[Extremum], minima: list[Extremum]) -> float:
    if not maxima:
        raise UndefinedResolutionError("contrast undefined: no fringe maxima in the window")
    lo = Extremum(float(sig.deltas[0]), float(sig.probs[0]))
    hi = Extremum(float(sig.deltas[-1]), float(sig.probs[-1]))
    bounds = [lo, *minima, hi]
    where = np.array([b.delta for b in bounds])
    swings = []
    for peak in maxima:
        k = int(np.searchsorted(where, peak.delta))
        swings.append(peak.prob - 0.5 * (bounds[k - 1].prob + bounds[k].prob))
    return float(np.mean(swings))


def fringe_metrics(sig: FringeSignal) -> FringeMetrics:
    maxima, minima = find_extrema(sig)
    re = resolution(sig, minima)
    co = contrast(sig, maxima, minima)
    return FringeMetrics(
        resolution=re,
        contrast=co,
        rci=re * co,
        maxima=tuple(m.delta for m in maxima),
        minima=tuple(m.delta for m in minima),
    )


def _qfi_central(protocol: Protocol, sys: WmSystem, tau: float, step: float) -> float:
    d0 = sys.detuning
    psi = final_state(protocol, sys, tau)
    plus = final_state(protocol, sys.with_detuning(d0 + step), tau)
    minus = final_state(protocol, sys.with_detuning(d0 - step), tau)
    dpsi = (plus - minus) / (2.0 * step)
    return 4.0 * (np.vdot(dpsi, dpsi).real - abs(np.vdot(psi, dpsi)) ** 2)


def qfi(protocol: Protocol, sys: WmSystem, tau: float, step: float = QFI_STEP) -> float:
    """Pure-state quantum Fisher information of U(delta)|prepared> w.r.t. detuning.

    The derivative is a central difference with step ``step``; the estimate is
    compared against one at ``step / 2`` and a warning is logged when they
    disagree by more than 0.1%.
    """
    value = _qfi_central(protocol, sys, tau, step)
    half = _qfi_central(protocol, sys, tau, step / 2)
    if abs(value - half) > QFI_RICHARDSON_RTOL * max(abs(half), 1e-12):
        log.warning(
            "QFI finite difference unstable at detuning %g: %g (h) vs %g (h/2)",
            sys.detuning, value, half,
        )
    if value < 0:
        if value < QFI_CLAMP:
            raise ArithmeticError(f"negative QFI {value:g} at detuning {sys.detuning:g}")
        value = 0.0
    if not math.isfinite(value):
        raise ArithmeticError(f"non-finite QFI at detuning {sys.detuning:g}")
    return float(value)
