"""Numerical eigenvalues, realness testing, and closed-form spectra.

The numerical route (``eigenvalues``) is LAPACK's Hessenberg + shifted-QR
solver via numpy, which is backward stable: returned values are exact
eigenvalues of a matrix within c*n*eps*||M|| of the input.  Backward
stability still scatters *defective* repeated eigenvalues by roughly the
square root of that bound, so realness verdicts go through
``refine_spectrum``, which averages clusters the working precision
cannot separate.  The closed forms implemented here are:

* ``two_node_spectrum``: quadratic roots for any real 2x2 matrix; real
  whenever the off-diagonal product is nonnegative, because the
  discriminant is then (m11 - m22)^2 + 4*m12*m21 >= 0.
* ``cycle_spectrum``: 1 - exp(2*pi*1j*k/n) for the unweighted directed
  n-cycle Laplacian.
* ``udcec_spectrum``: the spectrum of a complete unweighted graph with a
  single embedded directed m-cycle: {0} + {n-1+exp(2*pi*1j*k/m)} + {n}.
* ``dcid_spectrum``: each base eigenvalue mu fans out into
  mu + 1 - exp(2*pi*1j*k/m) under a directed ring of m graph copies.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

DEFAULT_REALNESS_TOL = 1e-8


def _sort_key(z: complex) -> tuple[float, float]:
    return (z.real, z.imag)


def sort_spectrum(eigs: Iterable[complex]) -> list[complex]:
    """Canonical (Re, Im) ascending order."""
    return sorted((complex(z) for z in eigs), key=_sort_key)


def eigenvalues(matrix: np.ndarray) -> list[complex]:
    """All eigenvalues of a real square matrix, sorted by (Re, Im)."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return sort_spectrum(np.linalg.eigvals(m))


def spectrum_scale(eigs: Sequence[complex]) -> float:
    return max(1.0, max(abs(z) for z in eigs)) if len(eigs) else 1.0


def refine_spectrum(eigs: Sequence[complex],
                    radius_factor: float = 8.0) -> list[complex]:
    """Average eigenvalue clusters that working precision cannot separate.

    A backward-stable solver scatters a defective eigenvalue of
    multiplicity p over a radius of order (n*eps*||M||)^(1/p), while the
    cluster mean stays accurate to first order; conjugate symmetry of
    the output of a real solver makes the mean of a real defective
    cluster exactly real.  Values within
    ``radius_factor * sqrt(eps) * max(1, |a|, |b|)`` of each other are
    therefore linked into one cluster (single linkage) and replaced by
    the cluster mean, keeping multiplicities.  Well-separated values are
    returned unchanged.
    """
    values = sort_spectrum(eigs)
    n = len(values)
    if n <= 1:
        return values
    base_radius = radius_factor * math.sqrt(float(np.finfo(float).eps))
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            radius = base_radius * max(1.0, abs(values[i]), abs(values[j]))
            if abs(values[i] - values[j]) <= radius:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    clusters: dict[int, list[complex]] = {}
    for i in range(n):
        clusters.setdefault(find(i), []).append(values[i])
    refined: list[complex] = []
    for members in clusters.values():
        mean = sum(members) / len(members)
        refined.extend([mean] * len(members))
    return sort_spectrum(refined)


def is_real_spectrum(eigs: Sequence[complex], tol: float = DEFAULT_REALNESS_TOL) -> bool:
    """True iff every imaginary part is within tol * max(1, max |eig|)."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if not len(eigs):
        return True
    bound = tol * spectrum_scale(eigs)
    return all(abs(z.imag) <= bound for z in eigs)


@dataclass(frozen=True)
class SpectralReport:
    """Eigenvalue multiset with a realness verdict at a given tolerance."""

    eigenvalues: tuple[complex, ...]
    is_real: bool
    realness_tolerance: float
    scale: float

    @classmethod
    def from_eigenvalues(cls, eigs: Iterable[complex],
                         tol: float = DEFAULT_REALNESS_TOL) -> "SpectralReport":
        eigs = tuple(sort_spectrum(eigs))
        return cls(
            eigenvalues=eigs,
            is_real=is_real_spectrum(eigs, tol),
            realness_tolerance=tol,
            scale=spectrum_scale(eigs),
        )

    @classmethod
    def from_matrix(cls, matrix: np.ndarray,
                    tol: float = DEFAULT_REALNESS_TOL) -> "SpectralReport":
        """Report over the refined spectrum of ``matrix``.

        Cluster refinement keeps the realness verdict stable when a
        genuinely real spectrum has defective repeated eigenvalues,
        which raw solver output scatters into tiny conjugate pairs.
        """
        return cls.from_eigenvalues(refine_spectrum(eigenvalues(matrix)), tol)

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [[z.real, z.imag] for z in self.eigenvalues],
            "is_real": self.is_real,
            "tolerance": self.realness_tolerance,
        }


def two_node_spectrum(m11: float, m12: float, m21: float,
                      m22: float) -> tuple[complex, complex]:
    """Both roots of the characteristic quadratic of [[m11, m12], [m21, m22]].

    Returned in (Re, Im) ascending order; exactly real (zero imaginary
    part) whenever m12 * m21 >= 0.
    """
    trace = m11 + m22
    disc = (m11 - m22) ** 2 + 4.0 * m12 * m21
    if disc >= 0.0:
        root = math.sqrt(disc)
        lo, hi = (trace - root) / 2.0, (trace + root) / 2.0
        return complex(lo), complex(hi)
    root = cmath.sqrt(complex(disc))
    pair = ((trace - root) / 2.0, (trace + root) / 2.0)
    return tuple(sorted(pair, key=_sort_key))  # type: ignore[return-value]


def cycle_spectrum(n: int) -> list[complex]:
    """Laplacian spectrum of the unweighted directed n-cycle, n >= 3."""
    if n < 3:
        raise ValueError(f"a directed cycle needs at least 3 nodes, got {n}")
    return [1.0 - cmath.exp(2j * math.pi * k / n) for k in range(n)]


def udcec_spectrum(n: int, m: int) -> list[complex]:
    """Spectrum of the n-node complete graph with an embedded directed m-cycle.

    Consists of a simple 0, the ring values n-1+exp(2*pi*1j*k/m) for
    k = 1..m-1, and the value n with multiplicity n-m.  Requires
    3 <= m <= n.
    """
    if not (3 <= m <= n):
        raise ValueError(f"require 3 <= m <= n, got n={n}, m={m}")
    eigs: list[complex] = [0j]
    eigs.extend((n - 1) + cmath.exp(2j * math.pi * k / m) for k in range(1, m))
    eigs.extend([complex(n)] * (n - m))
    return eigs


def dcid_spectrum(mu: Sequence[complex], m: int) -> list[complex]:
    """Spectrum of a directed ring of m copies of a graph with spectrum mu.

    Every base eigenvalue splits into mu_i + 1 - exp(2*pi*1j*k/m),
    k = 0..m-1, so the result has m * len(mu) values.  Requires m >= 3
    (smaller m does not form a proper directed ring).
    """
    if m < 3:
        raise ValueError(f"directed ring interconnection requires m >= 3, got {m}")
    if not len(mu):
        raise ValueError("base spectrum must be non-empty")
    return [complex(v) + 1.0 - cmath.exp(2j * math.pi * k / m)
            for v in mu for k in range(m)]


def multiset_max_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Largest pairwise distance under an optimal matching of two multisets.

    Returns inf when the multisets differ in size.  The assignment
    minimizes the total distance, so the returned maximum is a sound
    upper bound for asserting that two spectra agree within a tolerance.
    """
    if len(a) != len(b):
        return math.inf
    if not len(a):
        return 0.0
    av = np.asarray([complex(z) for z in a])
    bv = np.asarray([complex(z) for z in b])
    cost = np.abs(av[:, None] - bv[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def spectra_match(a: Sequence[complex], b: Sequence[complex], tol: float) -> bool:
    return multiset_max_distance(a, b) <= tol
