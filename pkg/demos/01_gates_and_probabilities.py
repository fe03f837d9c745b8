"""Statevector basics: building states gate by gate.

The simulator stores 2**n complex amplitudes and applies H, T, CNOT and
SWAP in place.  Qubit 0 is the most significant bit of the basis index,
so labels read left to right: |q0 q1 ...>.
"""

import numpy as np

from qmulticore import Gate, StateVector

# |00> -> H on qubit 0 -> CNOT(0, 1): a Bell pair
sv = StateVector(2)
sv.apply(Gate.h(0)).apply(Gate.cnot(0, 1))
print("Bell pair amplitudes:", np.round(sv.amplitudes, 6))
print("Bell pair probabilities:", sv.probabilities())

# T gates only move phases, never probabilities
sv = StateVector(1).apply(Gate.h(0)).apply(Gate.t(0))
print("\nAfter H then T:", np.round(sv.amplitudes, 6))
print("probabilities unchanged:", sv.probabilities())

# eight T gates are the identity
sv = StateVector(1).apply(Gate.h(0))
before = sv.amplitudes.copy()
for _ in range(8):
    sv.apply(Gate.t(0))
print("\nmax |T^8 - identity| deviation:", np.max(np.abs(sv.amplitudes - before)))

# a long random word keeps the norm pinned to 1
rng = np.random.default_rng(1)
sv = StateVector(8)
for _ in range(2000):
    kind = rng.integers(3)
    q = int(rng.integers(8))
    if kind == 0:
        sv.apply(Gate.h(q))
    elif kind == 1:
        sv.apply(Gate.t(q))
    else:
        r = int(rng.integers(7))
        sv.apply(Gate.cnot(q, r if r < q else r + 1))
print("\nnorm drift after 2000 random gates on 8 qubits:", abs(sv.norm() - 1))
