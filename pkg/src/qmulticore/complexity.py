"""Majorization-based complexity metrics.

The chain is: sorted-descending cumulants of an output distribution
(its Lorenz curve), the ensemble standard deviation of those cumulants at
each prefix length k (the fluctuation curve), the Euclidean distance D_H
between a circuit ensemble's fluctuation curve and the one of Haar-random
pure states, and finally ID_H, the trapezoidal integral of D_H over the
applied gate count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SUM_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Prefix cumulants F(k), k = 1..M, of a sorted-descending distribution."""

    cumulants: np.ndarray

    @property
    def dimension(self) -> int:
        return self.cumulants.shape[0]


@dataclass(frozen=True, eq=False)
class FluctuationCurve:
    """Per-k ensemble standard deviation of Lorenz cumulants."""

    values: np.ndarray

    @property
    def dimension(self) -> int:
        return self.values.shape[0]


def _check_distribution(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1:
        raise ValueError(f"expected a 1-D probability vector, got shape {p.shape}")
    if np.any(p < 0):
        raise ValueError("probability vector has negative entries")
    total = p.sum()
    if abs(total - 1.0) > _SUM_TOL:
        raise ValueError(f"probability vector is not normalized: sum = {total!r}")
    return p


def _sorted_cumulants(p: np.ndarray) -> np.ndarray:
    return np.cumsum(np.sort(p)[::-1])


def lorenz(p) -> LorenzCurve:
    """Lorenz curve of a probability vector: F(k) = sum of its k largest entries."""
    return LorenzCurve(_sorted_cumulants(_check_distribution(p)))


def majorizes(q, p, atol: float = 1e-12) -> bool:
    """True iff p is majorized by q: F_q(k) >= F_p(k) for every prefix k."""
    q = _check_distribution(q)
    p = _check_distribution(p)
    if q.shape != p.shape:
        raise ValueError(f"length mismatch: {q.shape[0]} vs {p.shape[0]}")
    fq = _sorted_cumulants(q)
    fp = _sorted_cumulants(p)
    return bool(np.all(fq[:-1] >= fp[:-1] - atol))


def fluctuation_curve(ensemble) -> FluctuationCurve:
    """Population standard deviation of Lorenz cumulants across an ensemble.

    ``ensemble`` is an (M, dim) array (or sequence of M probability
    vectors); M >= 2.  The divisor is M, matching the moment form
    std = sqrt(<F^2> - <F>^2).
    """
    arr = np.asarray(ensemble, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"expected an (M, dim) ensemble, got shape {arr.shape}")
    if arr.shape[0] < 2:
        raise ValueError(f"ensemble must have at least 2 members, got {arr.shape[0]}")
    if np.any(arr < 0):
        raise ValueError("ensemble has negative entries")
    totals = arr.sum(axis=1)
    if np.any(np.abs(totals - 1.0) > _SUM_TOL):
        raise ValueError("ensemble member is not normalized")
    cumulants = np.cumsum(np.sort(arr, axis=1)[:, ::-1], axis=1)
    return FluctuationCurve(np.std(cumulants, axis=0))


def haar_probabilities(num_qubits: int, num_samples: int, rng: np.random.Generator) -> np.ndarray:
    """(num_samples, 2**n) output probabilities of Haar-random pure states.

    States are drawn as vectors of independent standard complex Gaussian
    amplitudes, normalized.
    """
    dim = 1 << num_qubits
    z = rng.standard_normal((num_samples, dim)) + 1j * rng.standard_normal((num_samples, dim))
    p = np.abs(z) ** 2
    p /= p.sum(axis=1, keepdims=True)
    return p


def haar_reference(num_qubits: int, num_samples: int = 1000, seed: int = 0) -> FluctuationCurve:
    """Monte Carlo fluctuation curve of Haar-random n-qubit pure states."""
    from .statevector import MAX_QUBITS

    if not 1 <= num_qubits <= MAX_QUBITS:
        raise ValueError(f"num_qubits must be in [1, {MAX_QUBITS}], got {num_qubits}")
    if num_samples < 2:
        raise ValueError(f"num_samples must be >= 2, got {num_samples}")
    rng = np.random.default_rng(seed)
    return fluctuation_curve(haar_probabilities(num_qubits, num_samples, rng))


def distance_to_haar(circuit_curve: FluctuationCurve, haar_curve: FluctuationCurve) -> float:
    """Euclidean distance between two fluctuation curves over all k."""
    a = circuit_curve.values
    b = haar_curve.values
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.linalg.norm(a - b))


def integrated_dh(points) -> float:
    """Trapezoidal integral of (gate_count, D_H) points over the gate axis."""
    pts = list(points)
    if len(pts) < 2:
        raise ValueError(f"need at least 2 points to integrate, got {len(pts)}")
    g = np.array([float(x) for x, _ in pts])
    d = np.array([float(y) for _, y in pts])
    if np.any(np.diff(g) <= 0):
        raise ValueError(f"gate counts must be strictly increasing: {g.tolist()}")
    return float(np.trapezoid(d, g))
