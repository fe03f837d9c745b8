import csv

import pytest

ARCHS = ("full", "star", "ring", "linear")
PARTITIONS = ((6, 2), (4, 3), (3, 4), (2, 6))
GPCS = (2, 10, 50)

CHECKPOINT_HEADER = ["arch", "n_cores", "qubits_per_core", "gpc", "sw",
                     "sw_over_gpc", "gate_count", "dh"]
SUMMARY_HEADER = ["arch", "n_cores", "qubits_per_core", "gpc", "sw",
                  "sw_over_gpc", "id_h"]


def swaps(arch: str, n: int) -> int:
    if arch in ("linear", "star"):
        return n - 1
    if arch == "ring":
        return n if n > 2 else 1
    if arch == "full":
        return n * (n - 1) // 2
    return 0


def fake_id_h(arch: str, n: int, gpc: int) -> float:
    # synthetic but shaped like real sweeps: interior minimum at gpc=10
    return 300.0 + 10.0 * ARCHS.index(arch) + 5.0 * n + 2.0 * abs(gpc - 10)


@pytest.fixture
def summary_csv(tmp_path):
    path = tmp_path / "sweep_summary.csv"
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(SUMMARY_HEADER)
        for arch in ARCHS:
            for n, nq in PARTITIONS:
                sw = swaps(arch, n)
                for gpc in GPCS:
                    w.writerow([arch, n, nq, gpc, sw, sw / gpc,
                                fake_id_h(arch, n, gpc)])
    return str(path)


@pytest.fixture
def checkpoint_csv(tmp_path):
    path = tmp_path / "sweep.csv"
    counts = (50, 100, 150, 200)
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(CHECKPOINT_HEADER)
        for arch in ("ring", "star"):
            for n, nq in ((4, 3), (2, 6)):
                sw = swaps(arch, n)
                for gpc in GPCS:
                    for i, g in enumerate(counts):
                        w.writerow([arch, n, nq, gpc, sw, sw / gpc, g,
                                    2.0 / (i + 1) + 0.01 * gpc])
        for i, g in enumerate(counts):
            w.writerow(["monolithic", 1, 12, 200, 0, 0.0, g, 1.5 / (i + 1)])
    return str(path)


@pytest.fixture
def matching_summary_csv(tmp_path):
    # summary for the same cells as checkpoint_csv, optimum at gpc=10
    path = tmp_path / "small_summary.csv"
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(SUMMARY_HEADER)
        for arch in ("ring", "star"):
            for n, nq in ((4, 3), (2, 6)):
                sw = swaps(arch, n)
                for gpc in GPCS:
                    w.writerow([arch, n, nq, gpc, sw, sw / gpc,
                                fake_id_h(arch, n, gpc)])
    return str(path)


@pytest.fixture
def empty_csv(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text(",".join(SUMMARY_HEADER) + "\n")
    return str(path)


def visible_axes(fig):
    return [ax for ax in fig.axes if ax.get_visible()]
