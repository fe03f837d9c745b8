"""Figure builders for the four layout kinds.

- idh_vs_gpc:     one panel per architecture, one ID_H(gpc) series per partition
- idh_vs_swratio: one panel per partition, one ID_H(SW/GPC) series per architecture
- dh_vs_gates:    one panel per architecture, D_H(G) at each partition's optimal
                  gpc, with every monolithic series overlaid in black
- scaling:        one panel per architecture, ID_H(SW/GPC) series per partition
                  (optionally filtered to one core size)
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

KINDS = ("idh_vs_gpc", "idh_vs_swratio", "dh_vs_gates", "scaling")

#: panel order used throughout: fully connected, star, ring, linear
ARCH_ORDER = ("full", "star", "ring", "linear")

_INT_FIELDS = ("n_cores", "qubits_per_core", "gpc", "sw", "gate_count")
_FLOAT_FIELDS = ("sw_over_gpc", "dh", "id_h")
_BASE_COLUMNS = ("arch", "n_cores", "qubits_per_core", "gpc", "sw", "sw_over_gpc")


class FigureDataError(ValueError):
    """The CSV input cannot back the requested figure."""


@dataclass(frozen=True)
class PlotSpec:
    figure_kind: str
    inputs: tuple[str, ...]
    output: str
    group_keys: tuple[str, ...] = ()
    qubits_per_core: int | None = None

    def __post_init__(self):
        if self.figure_kind not in KINDS:
            raise FigureDataError(
                f"unknown figure kind {self.figure_kind!r}; expected one of {KINDS}"
            )
        if not self.inputs:
            raise FigureDataError("no input CSV paths given")


def read_rows(paths) -> list[dict]:
    """Parse and merge CSV files, converting numeric fields; '' becomes None."""
    rows = []
    for path in paths:
        with open(path, newline="") as f:
            reader = csv.DictReader(f)
            header = reader.fieldnames or []
            missing = [c for c in _BASE_COLUMNS if c not in header]
            if missing:
                raise FigureDataError(f"{path}: missing columns {missing}")
            for raw in reader:
                row = dict(raw)
                for key in _INT_FIELDS:
                    if row.get(key) not in (None, ""):
                        row[key] = int(row[key])
                for key in _FLOAT_FIELDS:
                    if row.get(key) in (None, ""):
                        row[key] = None
                    else:
                        row[key] = float(row[key])
                rows.append(row)
    if not rows:
        raise FigureDataError("no data rows in " + ", ".join(paths))
    return rows


def _check_group_keys(rows: list[dict], keys) -> None:
    for key in keys:
        if any(key not in row for row in rows):
            raise FigureDataError(f"grouping key {key!r} not present in the CSV header")


def _partition_label(row: dict) -> str:
    return f"({row['n_cores']},{row['qubits_per_core']})"


def _ordered_archs(rows: list[dict]) -> list[str]:
    present = {r["arch"] for r in rows if r["arch"] != "monolithic"}
    ordered = [a for a in ARCH_ORDER if a in present]
    return ordered + sorted(present - set(ordered))


def _ordered_partitions(rows: list[dict]) -> list[tuple[int, int]]:
    pairs = {(r["n_cores"], r["qubits_per_core"]) for r in rows
             if r["arch"] != "monolithic"}
    return sorted(pairs, key=lambda p: (-p[0], p[1]))


def _panel_grid(n_panels: int):
    cols = min(n_panels, 2)
    rows = (n_panels + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(5.5 * cols, 4 * rows),
                             squeeze=False)
    flat = [ax for row in axes for ax in row]
    for ax in flat[n_panels:]:
        ax.set_visible(False)
    return fig, flat[:n_panels]


def _series(rows, key_func):
    groups: dict = {}
    for row in rows:
        groups.setdefault(key_func(row), []).append(row)
    return groups


def _fig_idh_vs_gpc(rows: list[dict]):
    data = [r for r in rows if r.get("id_h") is not None and r["arch"] != "monolithic"]
    if not data:
        raise FigureDataError("no summary rows with id_h values")
    archs = _ordered_archs(data)
    fig, axes = _panel_grid(len(archs))
    for ax, arch in zip(axes, archs):
        panel = [r for r in data if r["arch"] == arch]
        for part in _ordered_partitions(panel):
            series = sorted(
                (r for r in panel
                 if (r["n_cores"], r["qubits_per_core"]) == part),
                key=lambda r: r["gpc"],
            )
            ax.plot([r["gpc"] for r in series], [r["id_h"] for r in series],
                    marker="o", label=f"({part[0]},{part[1]})")
        ax.set_xscale("log")
        ax.set_xlabel("gates per core")
        ax.set_ylabel("ID_H")
        ax.set_title(arch)
        ax.legend(fontsize=8)
    return fig


def _fig_idh_vs_swratio(rows: list[dict], scaling: bool = False,
                        qubits_per_core: int | None = None):
    data = [r for r in rows if r.get("id_h") is not None and r["arch"] != "monolithic"]
    if qubits_per_core is not None:
        data = [r for r in data if r["qubits_per_core"] == qubits_per_core]
    if not data:
        raise FigureDataError("no summary rows with id_h values after filtering")
    if scaling:
        # panels per architecture, a series per partition: the core-scaling view
        panels = _ordered_archs(data)
        in_panel = lambda r, arch: r["arch"] == arch
        series_of = _partition_label
    else:
        panels = [f"({n},{q})" for n, q in _ordered_partitions(data)]
        in_panel = lambda r, label: _partition_label(r) == label
        series_of = lambda r: r["arch"]
    fig, axes = _panel_grid(len(panels))
    for ax, panel_key in zip(axes, panels):
        panel = [r for r in data if in_panel(r, panel_key)]
        for label, series in sorted(_series(panel, series_of).items()):
            series = sorted(series, key=lambda r: r["sw_over_gpc"])
            ax.plot([r["sw_over_gpc"] for r in series],
                    [r["id_h"] for r in series], marker="o", label=label)
        ax.set_xscale("log")
        ax.set_xlabel("SW/GPC")
        ax.set_ylabel("ID_H")
        ax.set_title(str(panel_key))
        ax.legend(fontsize=8)
    return fig


def _optimal_gpc(summary_rows: list[dict]) -> dict:
    """(arch, N, n_q) -> gpc with the smallest id_h, from summary rows."""
    best: dict = {}
    for r in summary_rows:
        if r.get("id_h") is None or r["arch"] == "monolithic":
            continue
        key = (r["arch"], r["n_cores"], r["qubits_per_core"])
        if key not in best or r["id_h"] < best[key][0]:
            best[key] = (r["id_h"], r["gpc"])
    return {key: gpc for key, (_, gpc) in best.items()}


def _fig_dh_vs_gates(rows: list[dict]):
    data = [r for r in rows if r.get("dh") is not None]
    if not data:
        raise FigureDataError("no checkpoint rows with dh values")
    optima = _optimal_gpc([r for r in rows if r.get("id_h") is not None])
    mono = [r for r in data if r["arch"] == "monolithic"]
    multi = [r for r in data if r["arch"] != "monolithic"]
    if not multi:
        raise FigureDataError("no multicore checkpoint rows to plot")
    archs = _ordered_archs(multi)
    fig, axes = _panel_grid(len(archs))
    for ax, arch in zip(axes, archs):
        panel = [r for r in multi if r["arch"] == arch]
        for part in _ordered_partitions(panel):
            rows_part = [r for r in panel
                         if (r["n_cores"], r["qubits_per_core"]) == part]
            opt = optima.get((arch, part[0], part[1]))
            if opt is not None:
                rows_part = [r for r in rows_part if r["gpc"] == opt]
            for gpc, series in sorted(_series(rows_part, lambda r: r["gpc"]).items()):
                series = sorted(series, key=lambda r: r["gate_count"])
                ax.plot([r["gate_count"] for r in series],
                        [r["dh"] for r in series], marker=".",
                        label=f"({part[0]},{part[1]}) gpc={gpc}")
        # the single-core baseline is drawn in black on every panel
        for part, series in sorted(
                _series(mono, lambda r: (r["n_cores"], r["qubits_per_core"])).items()):
            series = sorted(series, key=lambda r: r["gate_count"])
            ax.plot([r["gate_count"] for r in series], [r["dh"] for r in series],
                    color="black", linewidth=1.4,
                    label=f"monolithic n={part[0] * part[1]}")
        ax.set_yscale("log")
        ax.set_xlabel("total gates")
        ax.set_ylabel("D_H")
        ax.set_title(arch)
        ax.legend(fontsize=8)
    return fig


def render(spec: PlotSpec):
    """Build the figure for the spec and write it to spec.output."""
    rows = read_rows(spec.inputs)
    _check_group_keys(rows, spec.group_keys)
    if spec.figure_kind == "idh_vs_gpc":
        fig = _fig_idh_vs_gpc(rows)
    elif spec.figure_kind == "idh_vs_swratio":
        fig = _fig_idh_vs_swratio(rows)
    elif spec.figure_kind == "scaling":
        fig = _fig_idh_vs_swratio(rows, scaling=True,
                                  qubits_per_core=spec.qubits_per_core)
    else:
        fig = _fig_dh_vs_gates(rows)
    fig.tight_layout()
    # Date metadata is suppressed so identical inputs give identical bytes
    if spec.output.endswith(".svg"):
        fig.savefig(spec.output, metadata={"Date": None})
    else:
        fig.savefig(spec.output, dpi=140)
    plt.close(fig)
    return fig
