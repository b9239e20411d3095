"""Delayed consensus dynamics x'(t) = -L x(t - tau) over a digraph.

The integrator is a fixed-step explicit fourth-order scheme.  Delayed
states are read from the stored trajectory with linear interpolation,
using the constant history x(t) = x0 on [-tau, 0]; the step constraint
(step <= tau/10 for positive delay) keeps every delayed lookup strictly
in the past.  With zero delay the scheme reduces to classical RK4 on
x' = -L x.

``delay_margin`` gives the classical stability margin of the scalar
modes s' = -lambda s(t - tau): the mode with eigenvalue
lambda = rho*exp(1j*phi), rho > 0, |phi| < pi/2 is stable for
tau < (pi/2 - |phi|)/rho, and any eigenvalue with nonpositive real part
(other than zero) is unstable for every delay.
"""

from __future__ import annotations

import cmath
import csv
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .graph import Digraph, laplacian
from .spectra import spectrum_scale


class SimStatus(Enum):
    CONVERGED = "Converged"
    DIVERGED = "Diverged"
    TIMEOUT = "Timeout"


@dataclass
class SimConfig:
    """Simulation parameters; ``validate`` enforces the invariants."""

    tau: float
    x0: np.ndarray
    step: float = 1e-3
    t_max: float = 20.0
    threshold: float = 1e-3
    divergence_bound: float = 1e3
    sample_stride: int | None = None  # default: thin to about 2000 samples

    def validate(self, n: int) -> None:
        if self.tau < 0:
            raise ValueError("delay must be nonnegative")
        if self.step <= 0:
            raise ValueError("integration step must be positive")
        if self.tau > 0 and self.step > self.tau / 10:
            raise ValueError(f"step {self.step} must be <= tau/10 = {self.tau / 10}")
        if self.t_max <= 0:
            raise ValueError("time horizon must be positive")
        if self.threshold <= 0:
            raise ValueError("convergence threshold must be positive")
        if self.divergence_bound <= self.threshold:
            raise ValueError("divergence bound must exceed the threshold")
        if len(np.atleast_1d(np.asarray(self.x0))) != n:
            raise ValueError(f"initial state must have {n} entries")
        if self.sample_stride is not None and self.sample_stride < 1:
            raise ValueError("sample stride must be >= 1")


@dataclass
class SimulationResult:
    """Thinned trajectory plus the termination event."""

    times: np.ndarray          # (k,)
    states: np.ndarray         # (k, n)
    status: SimStatus
    t_event: float | None
    tau: float
    step: float

    @property
    def samples(self) -> list[tuple[float, np.ndarray]]:
        return [(float(t), x) for t, x in zip(self.times, self.states)]

    @property
    def disagreement_trace(self) -> list[tuple[float, float]]:
        return [(float(t), disagreement(x)) for t, x in zip(self.times, self.states)]

    def to_summary(self) -> dict:
        return {
            "outcome": self.status.value,
            "t_event": self.t_event,
            "tau": self.tau,
            "step": self.step,
        }


def disagreement(x: Sequence[float]) -> float:
    """Largest pairwise state difference: max(x) - min(x)."""
    arr = np.asarray(x, dtype=float)
    if arr.size < 1:
        raise ValueError("state vector must be non-empty")
    return float(arr.max() - arr.min())


def simulate(g: Digraph, cfg: SimConfig) -> SimulationResult:
    """Integrate until convergence, divergence, or the horizon.

    Convergence and divergence are checked every step; the reported
    event time is the first step time whose disagreement crosses the
    respective bound (non-finite states count as divergence).
    """
    cfg.validate(g.n)
    lap = laplacian(g)
    h = cfg.step
    tau = cfg.tau
    x0 = np.asarray(cfg.x0, dtype=float).copy()
    n_steps = int(math.ceil(cfg.t_max / h - 1e-12))
    states = np.empty((n_steps + 1, g.n))
    states[0] = x0

    def delayed(s: float, upto: int) -> np.ndarray:
        if s <= 0.0:
            return x0
        pos = s / h
        j = min(int(pos), upto - 1)
        frac = pos - j
        return states[j] + frac * (states[j + 1] - states[j])

    status = SimStatus.TIMEOUT
    t_event: float | None = None
    last = 0
    d0 = disagreement(x0)
    if d0 < cfg.threshold:
        status, t_event = SimStatus.CONVERGED, 0.0
    elif d0 > cfg.divergence_bound:
        status, t_event = SimStatus.DIVERGED, 0.0
    else:
        # Divergent runs may overflow by design; the non-finite check
        # below turns that into a Diverged outcome instead of a warning.
        with np.errstate(over="ignore", invalid="ignore"):
            for k in range(n_steps):
                t = k * h
                x = states[k]
                if tau == 0.0:
                    k1 = -(lap @ x)
                    k2 = -(lap @ (x + 0.5 * h * k1))
                    k3 = -(lap @ (x + 0.5 * h * k2))
                    k4 = -(lap @ (x + h * k3))
                else:
                    # The right-hand side depends only on the delayed
                    # state, so the two midpoint stages coincide.
                    k1 = -(lap @ delayed(t - tau, k))
                    k2 = -(lap @ delayed(t + 0.5 * h - tau, k))
                    k3 = k2
                    k4 = -(lap @ delayed(t + h - tau, k))
                states[k + 1] = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
                last = k + 1
                t_next = (k + 1) * h
                if not np.all(np.isfinite(states[k + 1])):
                    status, t_event = SimStatus.DIVERGED, t_next
                    break
                d = disagreement(states[k + 1])
                if d > cfg.divergence_bound:
                    status, t_event = SimStatus.DIVERGED, t_next
                    break
                if d < cfg.threshold:
                    status, t_event = SimStatus.CONVERGED, t_next
                    break
            else:
                last = n_steps

    stride = cfg.sample_stride or max(1, last // 2000)
    keep = list(range(0, last + 1, stride))
    if keep[-1] != last:
        keep.append(last)
    idx = np.array(keep)
    return SimulationResult(
        times=idx * h,
        states=states[idx],
        status=status,
        t_event=t_event,
        tau=tau,
        step=h,
    )


def delay_margin(eigs: Iterable[complex], zero_tol: float = 1e-9) -> float:
    """Largest delay below which every scalar mode s' = -lambda s(t - tau)
    is stable; inf when only the zero eigenvalue is present, 0.0 when a
    nonzero eigenvalue has nonpositive real part."""
    eigs = [complex(z) for z in eigs]
    if not eigs:
        return math.inf
    bound = zero_tol * spectrum_scale(eigs)
    margin = math.inf
    for z in eigs:
        if abs(z) <= bound:
            continue
        if z.real <= 0.0:
            return 0.0
        margin = min(margin, (math.pi / 2 - abs(cmath.phase(z))) / abs(z))
    return margin


def write_trajectory_csv(result: SimulationResult, path: str | Path) -> None:
    """Write the sampled trajectory as t,x1,...,xn,disagreement rows."""
    n = result.states.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"x{i}" for i in range(1, n + 1)] + ["disagreement"])
        for t, x in zip(result.times, result.states):
            writer.writerow([f"{t:.10g}"] + [f"{v:.10g}" for v in x]
                            + [f"{disagreement(x):.10g}"])
