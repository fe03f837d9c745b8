"""Reproducible random gate streams.

A stream repeats rounds of gpc local gates per core (drawn from CNOT, H, T
uniformly, operands uniform inside the core) followed by one SWAP per
architecture edge between random qubits of the linked cores.  The same
seed always regenerates the same stream.
"""

from qmulticore import (
    Architecture,
    CheckpointSchedule,
    CircuitSpec,
    Partition,
    generate_stream,
    run_with_checkpoints,
    stream_text,
)

spec = CircuitSpec(
    partition=Partition(2, 2),
    architecture=Architecture.LINEAR,
    gpc=3,
    total_gates=16,
    seed=42,
)
print(f"stream for {spec.partition.num_cores}x{spec.partition.qubits_per_core} "
      f"linear, gpc={spec.gpc}, seed={spec.seed}:")
print(stream_text(generate_stream(spec)))

# round structure: 2 cores x 3 local gates, then 1 swap, repeat
events = generate_stream(spec)
swap_positions = [ev.sequence_index for ev in events if ev.gate.kind == "SWAP"]
print("swap positions:", swap_positions, "(every 7th slot: round length 2*3+1)")

# identical seeds regenerate identical streams
again = generate_stream(spec)
print("regenerated stream identical:", events == again)

# probabilities can be snapshotted at exact gate counts, mid-round or not
snaps = run_with_checkpoints(spec, CheckpointSchedule((4, 10, 16)))
for count, snap in zip((4, 10, 16), snaps):
    print(f"after {count:2d} gates: top probability {snap.max():.4f}, "
          f"sum {snap.sum():.12f}")
