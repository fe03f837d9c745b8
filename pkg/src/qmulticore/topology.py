"""Core partitions and inter-core interconnect topologies.

A processor of n = N * n_q qubits is split into N equal cores of n_q
qubits; core c owns the contiguous qubit range [c*n_q, (c+1)*n_q).  The
interconnect graph over cores is one of: linear chain, ring, star (hub at
core 0), fully connected, or monolithic (single core, no interconnects).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum


class Architecture(str, Enum):
    LINEAR = "linear"
    RING = "ring"
    STAR = "star"
    FULL = "full"
    MONOLITHIC = "monolithic"

    def __str__(self) -> str:  # serialize as the bare lowercase name
        return self.value


@dataclass(frozen=True)
class Partition:
    """N cores of n_q qubits each."""

    num_cores: int
    qubits_per_core: int

    def __post_init__(self):
        if self.num_cores < 1:
            raise ValueError(f"num_cores must be >= 1, got {self.num_cores}")
        if self.qubits_per_core < 2:
            # one-qubit cores cannot host CNOT gates
            raise ValueError(
                f"qubits_per_core must be >= 2, got {self.qubits_per_core}"
            )

    @property
    def total_qubits(self) -> int:
        return self.num_cores * self.qubits_per_core

    def core_qubits(self, core: int) -> range:
        """Global qubit indices owned by the given core."""
        if not 0 <= core < self.num_cores:
            raise ValueError(f"core {core} out of range for {self.num_cores} cores")
        base = core * self.qubits_per_core
        return range(base, base + self.qubits_per_core)


def edges(arch: Architecture, num_cores: int) -> list[tuple[int, int]]:
    """Deduplicated core-pair edges (a, b) with a < b, in lexicographic order.

    Ring with N = 2 collapses to the single linear edge; with 2 cores every
    architecture is the same one-edge graph.
    """
    arch = Architecture(arch)
    if num_cores < 1:
        raise ValueError(f"num_cores must be >= 1, got {num_cores}")
    if arch is Architecture.MONOLITHIC:
        if num_cores != 1:
            raise ValueError("monolithic architecture requires exactly 1 core")
        return []
    if num_cores == 1:
        raise ValueError(f"{arch.value} architecture requires >= 2 cores")

    if arch is Architecture.LINEAR:
        pairs = [(c, c + 1) for c in range(num_cores - 1)]
    elif arch is Architecture.RING:
        pairs = [(c, c + 1) for c in range(num_cores - 1)] + [(0, num_cores - 1)]
    elif arch is Architecture.STAR:
        pairs = [(0, c) for c in range(1, num_cores)]
    elif arch is Architecture.FULL:
        pairs = list(itertools.combinations(range(num_cores), 2))
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unhandled architecture {arch}")
    return sorted(set(pairs))


def swaps_per_round(arch: Architecture, num_cores: int) -> int:
    """Number of interconnect SWAP gates applied per communication round."""
    return len(edges(arch, num_cores))
