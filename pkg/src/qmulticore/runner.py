"""Experiment orchestration: GPC sweeps over architectures and partitions,
ensemble execution, D_H / ID_H aggregation, CSV emission, and the CLI.

Each (architecture, partition, gpc) cell runs an ensemble of M circuits
with per-circuit seeds derived by hashing (experiment seed, cell identity,
circuit index), so results do not depend on worker count or scheduling.
One Haar reference curve is computed per register width and shared by all
cells of that width.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .circuit import CheckpointSchedule, CircuitSpec, generate_stream, run_with_checkpoints, stream_text
from .complexity import (
    FluctuationCurve,
    distance_to_haar,
    haar_reference,
    integrated_dh,
    lorenz,
)
from .topology import Architecture, Partition, edges, swaps_per_round

#: Default GPC sweep grid: log-like spacing covering the optimum bands of
#: every 12-qubit partition studied.
DEFAULT_GPC_GRID = (1, 2, 3, 5, 7, 10, 15, 20, 30, 50, 75, 100, 150, 200)

CHECKPOINT_CSV_HEADER = "arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,gate_count,dh"
SUMMARY_CSV_HEADER = "arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,id_h"


class ResourceBudgetError(RuntimeError):
    """A cell (or the Haar reference) would exceed the configured memory budget."""


class CellFailure(RuntimeError):
    """A cell aborted; the message identifies the offending cell."""


@dataclass(frozen=True)
class ExperimentConfig:
    partitions: tuple[tuple[int, int], ...]
    architectures: tuple[Architecture, ...]
    gpc_values: tuple[int, ...] = DEFAULT_GPC_GRID
    total_gates: int = 2000
    checkpoint_start: int = 200
    checkpoint_step: int = 100
    ensemble_size: int = 100
    haar_samples: int = 1000
    seed: int = 0
    output_path: str | None = None
    include_monolithic: bool = False
    memory_budget_bytes: int = 4 << 30

    def __post_init__(self):
        if not self.partitions:
            raise ValueError("config needs at least one partition")
        if not self.architectures and not self.include_monolithic:
            raise ValueError("config needs at least one architecture")
        for pair in self.partitions:
            part = Partition(*pair)  # validates N >= 1, n_q >= 2
            for arch in self.architectures:
                edges(arch, part.num_cores)  # rejects invalid (arch, N) combos
        if not self.gpc_values or any(g < 1 for g in self.gpc_values):
            raise ValueError(f"gpc_values must all be >= 1, got {self.gpc_values}")
        if self.ensemble_size < 2:
            raise ValueError(f"ensemble_size must be >= 2, got {self.ensemble_size}")
        if self.haar_samples < 2:
            raise ValueError(f"haar_samples must be >= 2, got {self.haar_samples}")
        if self.total_gates < 1:
            raise ValueError(f"total_gates must be >= 1, got {self.total_gates}")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data = dict(raw)
        if "partitions" in data:
            data["partitions"] = tuple((int(n), int(q)) for n, q in data["partitions"])
        if "architectures" in data:
            data["architectures"] = tuple(Architecture(a) for a in data["architectures"])
        if "gpc_values" in data:
            data["gpc_values"] = tuple(int(g) for g in data["gpc_values"])
        return cls(**data)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["partitions"] = [list(p) for p in self.partitions]
        d["architectures"] = [a.value for a in self.architectures]
        d["gpc_values"] = list(self.gpc_values)
        return d

    def schedule(self) -> CheckpointSchedule:
        return CheckpointSchedule.default(
            self.total_gates, self.checkpoint_start, self.checkpoint_step
        )


def load_config(path: str) -> ExperimentConfig:
    with open(path) as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: config must be a JSON object")
    return ExperimentConfig.from_dict(raw)


@dataclass(frozen=True)
class ExperimentResult:
    architecture: Architecture
    partition: Partition
    gpc: int
    sw: int
    sw_over_gpc: float
    dh_points: tuple[tuple[int, float], ...]
    id_h: float | None


def _cells(config: ExperimentConfig) -> list[tuple[Architecture, Partition, int]]:
    cells = [
        (arch, Partition(n, nq), gpc)
        for (n, nq) in config.partitions
        for arch in config.architectures
        for gpc in config.gpc_values
    ]
    if config.include_monolithic:
        seen = []
        for n, nq in config.partitions:
            total = n * nq
            if total not in seen:
                seen.append(total)
        # the monolithic stream has no interconnect rounds, so its gate
        # sequence is independent of gpc; one cell per register width
        for total in seen:
            cells.append((Architecture.MONOLITHIC, Partition(1, total), config.total_gates))
    return cells


def _circuit_seed(seed: int, arch: Architecture, partition: Partition, gpc: int,
                  index: int) -> int:
    key = f"{seed}|{arch.value}|{partition.num_cores}|{partition.qubits_per_core}|{gpc}|{index}"
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "little")


def _haar_seed(seed: int, num_qubits: int) -> int:
    key = f"haar|{seed}|{num_qubits}"
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "little")


def _cell_dh(arch_value: str, num_cores: int, qubits_per_core: int, gpc: int,
             total_gates: int, counts: tuple[int, ...], ensemble_size: int,
             seed: int, haar_values: np.ndarray) -> np.ndarray:
    """Ensemble fluctuation curves and their distance to Haar, per checkpoint."""
    arch = Architecture(arch_value)
    part = Partition(num_cores, qubits_per_core)
    schedule = CheckpointSchedule(counts)
    dim = 1 << part.total_qubits
    stack = np.empty((ensemble_size, len(counts), dim))
    for i in range(ensemble_size):
        spec = CircuitSpec(
            part, arch, gpc, total_gates,
            seed=_circuit_seed(seed, arch, part, gpc, i),
        )
        for k, p in enumerate(run_with_checkpoints(spec, schedule)):
            stack[i, k] = lorenz(p).cumulants
    stds = np.std(stack, axis=0)  # population std, divisor = ensemble size
    return np.sqrt(((stds - haar_values[None, :]) ** 2).sum(axis=1))


def _cell_task(args) -> np.ndarray:
    try:
        return _cell_dh(*args)
    except ResourceBudgetError:
        raise
    except Exception as exc:
        arch_value, num_cores, qubits_per_core, gpc = args[0], args[1], args[2], args[3]
        raise CellFailure(
            f"cell (arch={arch_value}, n_cores={num_cores}, "
            f"qubits_per_core={qubits_per_core}, gpc={gpc}) failed: {exc!r}"
        ) from exc


def _check_budget(config: ExperimentConfig,
                  cells: list[tuple[Architecture, Partition, int]],
                  counts: tuple[int, ...]) -> None:
    for arch, part, gpc in cells:
        dim = 1 << part.total_qubits
        need = config.ensemble_size * len(counts) * dim * 8 + dim * 16
        # the shared Haar reference holds a (samples, dim) complex stack
        haar_need = config.haar_samples * dim * (16 + 8)
        if max(need, haar_need) > config.memory_budget_bytes:
            raise ResourceBudgetError(
                f"cell (arch={arch.value}, n_cores={part.num_cores}, "
                f"qubits_per_core={part.qubits_per_core}, gpc={gpc}) needs "
                f"~{max(need, haar_need)} bytes, over the budget of "
                f"{config.memory_budget_bytes}"
            )


def run_cell(architecture: Architecture, partition: Partition, gpc: int, *,
             total_gates: int = 2000, schedule: CheckpointSchedule | None = None,
             ensemble_size: int = 100, seed: int = 0,
             haar_curve: FluctuationCurve | None = None,
             haar_samples: int = 1000) -> ExperimentResult:
    """Run one (architecture, partition, gpc) ensemble and aggregate its metrics."""
    if schedule is None:
        schedule = CheckpointSchedule.default(total_gates)
    if haar_curve is None:
        haar_curve = haar_reference(
            partition.total_qubits, haar_samples, _haar_seed(seed, partition.total_qubits)
        )
    dh = _cell_dh(
        architecture.value, partition.num_cores, partition.qubits_per_core, gpc,
        total_gates, schedule.counts, ensemble_size, seed, haar_curve.values,
    )
    sw = swaps_per_round(architecture, partition.num_cores)
    points = tuple(zip(schedule.counts, (float(x) for x in dh)))
    return ExperimentResult(
        architecture=architecture,
        partition=partition,
        gpc=gpc,
        sw=sw,
        sw_over_gpc=sw / gpc,
        dh_points=points,
        id_h=integrated_dh(points) if len(points) >= 2 else None,
    )


def run_experiment(config: ExperimentConfig, threads: int = 1,
                   haar_cache: dict[int, FluctuationCurve] | None = None
                   ) -> list[ExperimentResult]:
    """Run every cell of the config; deterministic for any worker count.

    Writes the checkpoint CSV to ``config.output_path`` (and a companion
    ``*_summary.csv``) when an output path is configured.
    """
    cells = _cells(config)
    counts = config.schedule().counts
    _check_budget(config, cells, counts)

    haar: dict[int, FluctuationCurve] = dict(haar_cache or {})
    for _, part, _ in cells:
        n = part.total_qubits
        if n not in haar:
            haar[n] = haar_reference(n, config.haar_samples, _haar_seed(config.seed, n))

    tasks = [
        (arch.value, part.num_cores, part.qubits_per_core, gpc, config.total_gates,
         counts, config.ensemble_size, config.seed, haar[part.total_qubits].values)
        for arch, part, gpc in cells
    ]
    if threads <= 1 or len(tasks) == 1:
        dh_arrays = [_cell_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            dh_arrays = list(pool.map(_cell_task, tasks))

    results = []
    for (arch, part, gpc), dh in zip(cells, dh_arrays):
        sw = swaps_per_round(arch, part.num_cores)
        points = tuple(zip(counts, (float(x) for x in dh)))
        results.append(ExperimentResult(
            architecture=arch,
            partition=part,
            gpc=gpc,
            sw=sw,
            sw_over_gpc=sw / gpc,
            dh_points=points,
            id_h=integrated_dh(points) if len(points) >= 2 else None,
        ))

    if config.output_path:
        write_checkpoint_csv(results, config.output_path)
        write_summary_csv(results, summary_path(config.output_path))
    return results


def _fmt(x: float) -> str:
    return format(x, ".10g")


def summary_path(checkpoint_csv_path: str) -> str:
    root, ext = os.path.splitext(checkpoint_csv_path)
    return f"{root}_summary{ext or '.csv'}"


def write_checkpoint_csv(results: list[ExperimentResult], path: str) -> None:
    """One row per (cell, checkpoint): the D_H trace behind the summary."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CHECKPOINT_CSV_HEADER.split(","))
        for r in results:
            for gate_count, dh in r.dh_points:
                w.writerow([
                    r.architecture.value, r.partition.num_cores,
                    r.partition.qubits_per_core, r.gpc, r.sw,
                    _fmt(r.sw_over_gpc), gate_count, _fmt(dh),
                ])


def write_summary_csv(results: list[ExperimentResult], path: str) -> None:
    """One row per cell with its integrated distance ID_H."""
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(SUMMARY_CSV_HEADER.split(","))
        for r in results:
            w.writerow([
                r.architecture.value, r.partition.num_cores,
                r.partition.qubits_per_core, r.gpc, r.sw,
                _fmt(r.sw_over_gpc),
                "" if r.id_h is None else _fmt(r.id_h),
            ])


# ---------------------------------------------------------------------------
# CLI


def _parse_gpc_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad gpc list {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty gpc list")
    return values


def _default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmulticore",
        description="Benchmark complexity growth of random circuits on multicore layouts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute an experiment config file")
    p_run.add_argument("--config", required=True, help="JSON experiment config")
    p_run.add_argument("--out", help="checkpoint CSV path (summary CSV written alongside)")
    p_run.add_argument("--threads", type=int, default=_default_threads())
    p_run.add_argument("--seed", type=int, help="override the config seed")
    p_run.add_argument("--ensemble", type=int, help="override the ensemble size")
    p_run.add_argument("--gates", type=int, help="override the total gate count")
    p_run.set_defaults(func=_cmd_run)

    p_sweep = sub.add_parser("sweep", help="GPC sweep for one architecture/partition")
    p_sweep.add_argument("--arch", required=True,
                         choices=[a.value for a in Architecture])
    p_sweep.add_argument("--cores", type=int, required=True)
    p_sweep.add_argument("--qubits-per-core", type=int, required=True)
    p_sweep.add_argument("--gpc", type=_parse_gpc_list, default=DEFAULT_GPC_GRID,
                         help="comma-separated gates-per-core values")
    p_sweep.add_argument("--gates", type=int, default=2000)
    p_sweep.add_argument("--ensemble", type=int, default=100)
    p_sweep.add_argument("--haar-samples", type=int, default=1000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--threads", type=int, default=_default_threads())
    p_sweep.add_argument("--out", help="checkpoint CSV path (summary CSV written alongside)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_haar = sub.add_parser("haar", help="emit a Haar reference fluctuation curve")
    p_haar.add_argument("--qubits", type=int, required=True)
    p_haar.add_argument("--samples", type=int, default=1000)
    p_haar.add_argument("--seed", type=int, default=0)
    p_haar.add_argument("--out", help="CSV path (stdout when omitted)")
    p_haar.set_defaults(func=_cmd_haar)

    p_stream = sub.add_parser("stream", help="dump a gate stream for a seed")
    p_stream.add_argument("--arch", required=True,
                          choices=[a.value for a in Architecture])
    p_stream.add_argument("--cores", type=int, required=True)
    p_stream.add_argument("--qubits-per-core", type=int, required=True)
    p_stream.add_argument("--gpc", type=_parse_gpc_list, required=True)
    p_stream.add_argument("--gates", type=int, default=2000)
    p_stream.add_argument("--seed", type=int, default=0)
    p_stream.add_argument("--out", help="text path (stdout when omitted)")
    p_stream.set_defaults(func=_cmd_stream)

    return parser


def _cmd_run(args) -> int:
    config = load_config(args.config)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.ensemble is not None:
        overrides["ensemble_size"] = args.ensemble
    if args.gates is not None:
        overrides["total_gates"] = args.gates
    if args.out:
        overrides["output_path"] = args.out
    if overrides:
        config = dataclasses.replace(config, **overrides)
    if not config.output_path:
        raise ValueError("no output path: pass --out or set output_path in the config")
    run_experiment(config, threads=args.threads)
    print(f"wrote {config.output_path} and {summary_path(config.output_path)}")
    return 0


def _cmd_sweep(args) -> int:
    config = ExperimentConfig(
        partitions=((args.cores, args.qubits_per_core),),
        architectures=(Architecture(args.arch),),
        gpc_values=args.gpc,
        total_gates=args.gates,
        ensemble_size=args.ensemble,
        haar_samples=args.haar_samples,
        seed=args.seed,
        output_path=args.out,
    )
    results = run_experiment(config, threads=args.threads)
    for r in results:
        id_h = "n/a" if r.id_h is None else _fmt(r.id_h)
        print(
            f"arch={r.architecture.value} n_cores={r.partition.num_cores} "
            f"qubits_per_core={r.partition.qubits_per_core} gpc={r.gpc} "
            f"sw={r.sw} sw_over_gpc={_fmt(r.sw_over_gpc)} id_h={id_h}"
        )
    if config.output_path:
        print(f"wrote {config.output_path} and {summary_path(config.output_path)}")
    return 0


def _cmd_haar(args) -> int:
    curve = haar_reference(args.qubits, args.samples, args.seed)
    lines = ["k,std_f"]
    lines += [f"{k + 1},{_fmt(v)}" for k, v in enumerate(curve.values)]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_stream(args) -> int:
    if len(args.gpc) != 1:
        raise ValueError(f"stream takes a single gpc value, got {args.gpc}")
    spec = CircuitSpec(
        Partition(args.cores, args.qubits_per_core),
        Architecture(args.arch),
        args.gpc[0],
        total_gates=args.gates,
        seed=args.seed,
    )
    text = stream_text(generate_stream(spec))
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cli_main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ResourceBudgetError, CellFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
