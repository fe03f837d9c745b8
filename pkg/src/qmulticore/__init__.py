"""Statevector simulation and majorization-based complexity benchmarks for
multicore quantum processors with SWAP interconnects."""

from .circuit import (
    CheckpointSchedule,
    CircuitSpec,
    GateEvent,
    generate_stream,
    run_with_checkpoints,
    stream_text,
)
from .complexity import (
    FluctuationCurve,
    LorenzCurve,
    distance_to_haar,
    fluctuation_curve,
    haar_reference,
    integrated_dh,
    lorenz,
    majorizes,
)
from .runner import (
    DEFAULT_GPC_GRID,
    ExperimentConfig,
    ExperimentResult,
    run_cell,
    run_experiment,
    write_checkpoint_csv,
    write_summary_csv,
)
from .statevector import MAX_QUBITS, Gate, StateVector
from .topology import Architecture, Partition, edges, swaps_per_round

__version__ = "0.1.0"

__all__ = [
    "Architecture",
    "CheckpointSchedule",
    "CircuitSpec",
    "DEFAULT_GPC_GRID",
    "ExperimentConfig",
    "ExperimentResult",
    "FluctuationCurve",
    "Gate",
    "GateEvent",
    "LorenzCurve",
    "MAX_QUBITS",
    "Partition",
    "StateVector",
    "distance_to_haar",
    "edges",
    "fluctuation_curve",
    "generate_stream",
    "haar_reference",
    "integrated_dh",
    "lorenz",
    "majorizes",
    "run_cell",
    "run_experiment",
    "run_with_checkpoints",
    "stream_text",
    "swaps_per_round",
    "write_checkpoint_csv",
    "write_summary_csv",
]
