"""The majorization-based complexity chain, step by step.

Lorenz curves order distributions by uniformity; ensembles of circuits are
compared to Haar-random states through the standard deviation of their
Lorenz cumulants (the fluctuation curve), the distance D_H between those
curves, and the integral ID_H of D_H over the gate count.
"""

import numpy as np

from qmulticore import (
    distance_to_haar,
    fluctuation_curve,
    haar_reference,
    integrated_dh,
    lorenz,
    majorizes,
)
from qmulticore.complexity import haar_probabilities

# Lorenz curves: prefix sums of the sorted-descending distribution
p = [0.2, 0.5, 0.3]
print("lorenz([0.2, 0.5, 0.3]) =", lorenz(p).cumulants)

# a peaked distribution majorizes a flat one, never the reverse
peaked, flat = [0.75, 0.25, 0.0, 0.0], [0.3, 0.3, 0.2, 0.2]
print("peaked majorizes flat:", majorizes(peaked, flat))
print("flat majorizes peaked:", majorizes(flat, peaked))

# fluctuation curve of a small ensemble
members = [[0.5, 0.5], [0.7, 0.3], [0.6, 0.4]]
print("\nfluctuation curve of 3 two-outcome members:",
      fluctuation_curve(members).values)

# Haar reference: for 1 qubit the first cumulant is max(u, 1-u) with u
# uniform, whose standard deviation is 1/sqrt(48) = 0.14434
curve = haar_reference(1, num_samples=200_000, seed=3)
print("\nHaar n=1 std[F(1)]:", round(float(curve.values[0]), 5),
      "(closed form 0.14434)")

# two independent Haar ensembles sit close together; a lightly scrambled
# ensemble (here: Haar states mixed with a bias) sits farther away
ref = haar_reference(6, 1000, seed=10)
ens = haar_probabilities(6, 100, np.random.default_rng(11))
print("\nD_H of a Haar ensemble to the Haar reference:",
      round(distance_to_haar(fluctuation_curve(ens), ref), 4))
biased = 0.5 * ens + 0.5 / 64
print("D_H of a flattened ensemble to the same reference:",
      round(distance_to_haar(fluctuation_curve(biased), ref), 4))

# ID_H is the trapezoidal integral of D_H over the applied gates
points = [(200, 4.0), (300, 2.0), (400, 1.0), (500, 0.5)]
print("\nintegrated_dh over a decaying toy curve:", integrated_dh(points))
