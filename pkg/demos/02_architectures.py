"""Core partitions and interconnect topologies.

A register of n = N * n_q qubits is split into N contiguous cores; the
architecture fixes which core pairs get one SWAP per communication round.
"""

from qmulticore import Architecture, Partition, edges, swaps_per_round

part = Partition(4, 3)
print(f"partition: {part.num_cores} cores x {part.qubits_per_core} qubits "
      f"= {part.total_qubits} total")
for c in range(part.num_cores):
    print(f"  core {c} owns qubits {list(part.core_qubits(c))}")

print("\nedge sets for 4 cores:")
for arch in (Architecture.LINEAR, Architecture.RING, Architecture.STAR,
             Architecture.FULL):
    print(f"  {arch.value:7s} {edges(arch, 4)}")

print("\nswaps per round (SW) as the core count grows:")
print("  N     linear  ring  star  full")
for n in range(2, 7):
    row = [swaps_per_round(a, n) for a in
           (Architecture.LINEAR, Architecture.RING, Architecture.STAR,
            Architecture.FULL)]
    print(f"  {n}     {row[0]:4d} {row[1]:5d} {row[2]:5d} {row[3]:5d}")

print("\nwith 2 cores every architecture has the same single edge:")
for arch in (Architecture.LINEAR, Architecture.RING, Architecture.STAR,
             Architecture.FULL):
    print(f"  {arch.value:7s} {edges(arch, 2)}")
