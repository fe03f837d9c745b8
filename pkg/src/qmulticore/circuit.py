"""Reproducible random gate streams for partitioned processors.

A stream is built from repeated rounds: every core applies ``gpc`` local
gates drawn from {CNOT, H, T} on its own qubits (cores in index order),
then one SWAP is applied per interconnect edge, between a uniformly random
qubit of each linked core.  The stream is cut at exactly ``total_gates``
events, mid-round if necessary.

All randomness comes from one PCG64 generator seeded with the circuit
seed, consumed in a fixed batched order (local gate kinds, local operand
draws, then swap qubit draws, per full-rounds block), so a given
(spec, seed) always reproduces the same stream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .statevector import OP_CNOT, OP_H, OP_SWAP, OP_T, Gate, StateVector, _apply_compiled
from .topology import Architecture, Partition, edges

_OP_NAME = {OP_H: "H", OP_T: "T", OP_CNOT: "CNOT", OP_SWAP: "SWAP"}


@dataclass(frozen=True)
class CircuitSpec:
    """Everything needed to regenerate one circuit's gate stream."""

    partition: Partition
    architecture: Architecture
    gpc: int
    total_gates: int = 2000
    seed: int = 0

    def __post_init__(self):
        if self.gpc < 1:
            raise ValueError(f"gpc must be >= 1, got {self.gpc}")
        if self.total_gates < 1:
            raise ValueError(f"total_gates must be >= 1, got {self.total_gates}")
        # validates the architecture/core-count combination up front
        edges(self.architecture, self.partition.num_cores)


@dataclass(frozen=True, slots=True)
class GateEvent:
    sequence_index: int
    gate: Gate


@dataclass(frozen=True)
class CheckpointSchedule:
    """Gate counts at which output probabilities are recorded."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts:
            raise ValueError("checkpoint schedule is empty")
        if any(c < 1 for c in self.counts):
            raise ValueError("checkpoint counts must be >= 1")
        if any(b <= a for a, b in zip(self.counts, self.counts[1:])):
            raise ValueError(f"checkpoint counts must be strictly increasing: {self.counts}")

    @classmethod
    def default(cls, total_gates: int, start: int = 200, step: int = 100) -> "CheckpointSchedule":
        """Checkpoints at start, start+step, ... plus the final gate count."""
        counts = [c for c in range(start, total_gates + 1, step)]
        if not counts or counts[-1] != total_gates:
            counts.append(total_gates)
        return cls(tuple(counts))

    def validate_against(self, total_gates: int) -> None:
        if self.counts[-1] != total_gates:
            raise ValueError(
                f"final checkpoint {self.counts[-1]} must equal total_gates={total_gates}"
            )


def _compile_stream(spec: CircuitSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Generate the stream as (opcodes, qubit_a, qubit_b) arrays of length G.

    qubit_a is the target for H/T, the control for CNOT, the first SWAP
    operand otherwise; qubit_b is -1 for single-qubit gates.
    """
    part = spec.partition
    n_cores, nq = part.num_cores, part.qubits_per_core
    edge_arr = np.array(edges(spec.architecture, n_cores), dtype=np.int64).reshape(-1, 2)
    n_edges = edge_arr.shape[0]
    g_total = spec.total_gates
    round_len = n_cores * spec.gpc + n_edges
    n_rounds = -(-g_total // round_len)  # ceil: last round may be cut

    rng = np.random.default_rng(spec.seed)
    kinds = rng.integers(0, 3, size=(n_rounds, n_cores, spec.gpc))
    raws = rng.integers(0, nq * (nq - 1), size=(n_rounds, n_cores, spec.gpc))

    core_base = (np.arange(n_cores, dtype=np.int64) * nq)[None, :, None]
    # kind 0 = CNOT, 1 = H, 2 = T; raws decodes the operand draw:
    #   CNOT: ordered pair index over the nq*(nq-1) distinct (control, target)
    #   H/T:  raws % nq is uniform over the core's qubits
    ctrl = raws // (nq - 1)
    rem = raws % (nq - 1)
    tgt = rem + (rem >= ctrl)
    is_cnot = kinds == 0
    ops_loc = np.where(is_cnot, OP_CNOT, np.where(kinds == 1, OP_H, OP_T)).astype(np.int8)
    qa_loc = np.where(is_cnot, core_base + ctrl, core_base + raws % nq)
    qb_loc = np.where(is_cnot, core_base + tgt, -1)

    ops_loc = ops_loc.reshape(n_rounds, n_cores * spec.gpc)
    qa_loc = qa_loc.reshape(n_rounds, n_cores * spec.gpc)
    qb_loc = qb_loc.reshape(n_rounds, n_cores * spec.gpc)

    if n_edges:
        swq = rng.integers(0, nq, size=(n_rounds, n_edges, 2))
        ops_sw = np.full((n_rounds, n_edges), OP_SWAP, dtype=np.int8)
        qa_sw = edge_arr[:, 0][None, :] * nq + swq[:, :, 0]
        qb_sw = edge_arr[:, 1][None, :] * nq + swq[:, :, 1]
        ops = np.concatenate([ops_loc, ops_sw], axis=1)
        qa = np.concatenate([qa_loc, qa_sw], axis=1)
        qb = np.concatenate([qb_loc, qb_sw], axis=1)
    else:
        ops, qa, qb = ops_loc, qa_loc, qb_loc

    return (
        np.ascontiguousarray(ops.reshape(-1)[:g_total]),
        np.ascontiguousarray(qa.reshape(-1)[:g_total]),
        np.ascontiguousarray(qb.reshape(-1)[:g_total]),
    )


def generate_stream(spec: CircuitSpec) -> list[GateEvent]:
    """The full gate stream as GateEvent objects (index 0 .. G-1)."""
    ops, qa, qb = _compile_stream(spec)
    events = []
    for i in range(ops.shape[0]):
        op = int(ops[i])
        if op in (OP_H, OP_T):
            gate = Gate(_OP_NAME[op], (int(qa[i]),))
        else:
            gate = Gate(_OP_NAME[op], (int(qa[i]), int(qb[i])))
        events.append(GateEvent(i, gate))
    return events


def stream_text(events: list[GateEvent]) -> str:
    """Line-oriented debug dump: ``<index> <kind> <qubits...>``."""
    lines = [
        f"{ev.sequence_index} {ev.gate.kind} " + " ".join(str(q) for q in ev.gate.qubits)
        for ev in events
    ]
    return "\n".join(lines) + "\n"


def run_with_checkpoints(
    spec: CircuitSpec, schedule: CheckpointSchedule | None = None
) -> list[np.ndarray]:
    """Evolve |0...0> through the stream, recording probabilities at each
    scheduled gate count (exact counts, even mid-round)."""
    if schedule is None:
        schedule = CheckpointSchedule.default(spec.total_gates)
    if schedule.counts[-1] > spec.total_gates:
        raise ValueError(
            f"checkpoint {schedule.counts[-1]} exceeds total_gates={spec.total_gates}"
        )
    schedule.validate_against(spec.total_gates)

    ops, qa, qb = _compile_stream(spec)
    state = StateVector(spec.partition.total_qubits)
    snapshots = []
    prev = 0
    for count in schedule.counts:
        _apply_compiled(state, ops[prev:count], qa[prev:count], qb[prev:count])
        prev = count
        snapshots.append(state.probabilities())
    return snapshots
