"""Dense statevector simulation of the {H, T, CNOT, SWAP} gate set.

The register convention used everywhere in this package: qubit ``q`` of an
``n``-qubit register occupies bit ``n - 1 - q`` of the amplitude index, so
qubit 0 is the most significant bit and basis labels read left to right,
``|q0 q1 ... q_{n-1}>``.  For example with n = 2 the state ``|10>`` (qubit 0
set) lives at index 2.

Gates are applied by stride/bit-mask iteration over the flat amplitude
array; no gate matrix is ever materialized.  The hot loops are JIT compiled
with numba, and circuits can hand a whole pre-encoded gate block to
``_apply_compiled`` so the per-gate dispatch cost is paid once per block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

#: Hard ceiling on register width (2**24 amplitudes = 256 MiB, complex128).
MAX_QUBITS = 24

SQRT1_2 = math.sqrt(0.5)

#: Phase applied by the T gate to the |1> component.
T_PHASE = complex(SQRT1_2, SQRT1_2)  # exp(i*pi/4)

# Opcodes for the compiled gate encoding.
OP_H = 0
OP_T = 1
OP_CNOT = 2
OP_SWAP = 3

_KIND_TO_OP = {"H": OP_H, "T": OP_T, "CNOT": OP_CNOT, "SWAP": OP_SWAP}
_ARITY = {"H": 1, "T": 1, "CNOT": 2, "SWAP": 2}


@dataclass(frozen=True, slots=True)
class Gate:
    """A single gate: kind in {H, T, CNOT, SWAP} plus its qubit operands.

    Operand order matters for CNOT: ``qubits = (control, target)``.
    """

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != _ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} takes {_ARITY[self.kind]} qubit(s), got {self.qubits}"
            )
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind} operands must be distinct, got {self.qubits}")

    @classmethod
    def h(cls, target: int) -> "Gate":
        return cls("H", (target,))

    @classmethod
    def t(cls, target: int) -> "Gate":
        return cls("T", (target,))

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls("CNOT", (control, target))

    @classmethod
    def swap(cls, a: int, b: int) -> "Gate":
        return cls("SWAP", (a, b))


@njit(cache=True)
def _apply_kernel(amps, ops, mask_a, mask_b):  # pragma: no cover - jitted
    """Apply a block of encoded gates in place.

    ops[g] is an opcode; mask_a/mask_b carry the operand bit masks
    (mask_b is unused for H and T).  Plain IEEE double arithmetic, no
    fastmath, so results are bit-reproducible.
    """
    dim = amps.shape[0]
    for g in range(ops.shape[0]):
        op = ops[g]
        if op == 0:  # H on mask_a
            m = mask_a[g]
            for base in range(0, dim, m << 1):
                for i in range(base, base + m):
                    j = i + m
                    x = amps[i]
                    y = amps[j]
                    amps[i] = (x + y) * 0.7071067811865476
                    amps[j] = (x - y) * 0.7071067811865476
        elif op == 1:  # T on mask_a
            m = mask_a[g]
            ph = complex(0.7071067811865476, 0.7071067811865476)
            for base in range(0, dim, m << 1):
                for i in range(base, base + m):
                    amps[i + m] = amps[i + m] * ph
        elif op == 2:  # CNOT: control mask_a, target mask_b
            mc = mask_a[g]
            mt = mask_b[g]
            m1 = mc if mc < mt else mt
            m2 = mt if mc < mt else mc
            for b2 in range(0, dim, m2 << 1):
                for b1 in range(b2, b2 + m2, m1 << 1):
                    for base in range(b1, b1 + m1):
                        i = base | mc
                        j = i | mt
                        x = amps[i]
                        amps[i] = amps[j]
                        amps[j] = x
        else:  # SWAP: exchanges the (0,1)/(1,0) pair of mask_a, mask_b
            mp = mask_a[g]
            mq = mask_b[g]
            m1 = mp if mp < mq else mq
            m2 = mq if mp < mq else mp
            for b2 in range(0, dim, m2 << 1):
                for b1 in range(b2, b2 + m2, m1 << 1):
                    for base in range(b1, b1 + m1):
                        i = base | m1
                        j = base | m2
                        x = amps[i]
                        amps[i] = amps[j]
                        amps[j] = x


class StateVector:
    """An n-qubit pure state as 2**n complex128 amplitudes, initially |0...0>."""

    __slots__ = ("num_qubits", "_amps")

    def __init__(self, num_qubits: int, max_qubits: int = MAX_QUBITS):
        if not 1 <= num_qubits <= max_qubits:
            raise ValueError(
                f"num_qubits must be in [1, {max_qubits}], got {num_qubits}"
            )
        self.num_qubits = num_qubits
        self._amps = np.zeros(1 << num_qubits, dtype=np.complex128)
        self._amps[0] = 1.0

    @property
    def dim(self) -> int:
        return self._amps.shape[0]

    @property
    def amplitudes(self) -> np.ndarray:
        """The live amplitude array (not a copy)."""
        return self._amps

    def _mask(self, qubit: int) -> int:
        if not 0 <= qubit < self.num_qubits:
            raise ValueError(
                f"qubit {qubit} out of range for {self.num_qubits}-qubit register"
            )
        return 1 << (self.num_qubits - 1 - qubit)

    def apply(self, gate: Gate) -> "StateVector":
        """Apply one gate in place and return self."""
        ops = np.empty(1, dtype=np.int8)
        ma = np.zeros(1, dtype=np.int64)
        mb = np.zeros(1, dtype=np.int64)
        ops[0] = _KIND_TO_OP[gate.kind]
        ma[0] = self._mask(gate.qubits[0])
        if len(gate.qubits) == 2:
            mb[0] = self._mask(gate.qubits[1])
        _apply_kernel(self._amps, ops, ma, mb)
        return self

    def apply_all(self, gates) -> "StateVector":
        for gate in gates:
            self.apply(gate)
        return self

    def probabilities(self) -> np.ndarray:
        """|amplitude|**2 per basis state; raises if the state has drifted off norm."""
        p = np.abs(self._amps) ** 2
        total = p.sum()
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"state is not normalized: sum of probabilities = {total!r}")
        return p

    def norm(self) -> float:
        return float(np.linalg.norm(self._amps))

    def copy(self) -> "StateVector":
        dup = object.__new__(StateVector)
        dup.num_qubits = self.num_qubits
        dup._amps = self._amps.copy()
        return dup

    def __repr__(self) -> str:
        return f"StateVector(num_qubits={self.num_qubits})"


def _apply_compiled(state: StateVector, ops: np.ndarray, qubit_a: np.ndarray,
                    qubit_b: np.ndarray) -> None:
    """Apply a pre-encoded gate block (opcodes + operand qubit indices) in place.

    Fast path for circuit evolution; identical arithmetic to ``apply`` gate
    by gate, just without per-gate dispatch overhead.
    """
    n = state.num_qubits
    if ops.shape[0] == 0:
        return
    if qubit_a.min() < 0 or qubit_a.max() >= n:
        raise ValueError("qubit index out of range in compiled gate block")
    two_q = ops >= OP_CNOT
    if np.any(two_q) and qubit_b[two_q].max() >= n:
        raise ValueError("qubit index out of range in compiled gate block")
    mask_a = np.left_shift(np.int64(1), (n - 1 - qubit_a).astype(np.int64))
    mask_b = np.where(
        two_q, np.left_shift(np.int64(1), (n - 1 - qubit_b).astype(np.int64)), 0
    ).astype(np.int64)
    _apply_kernel(state._amps, np.ascontiguousarray(ops, dtype=np.int8),
                  np.ascontiguousarray(mask_a), np.ascontiguousarray(mask_b))
