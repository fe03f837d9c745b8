"""Secondary acceptance: render the three headline layouts from a real
sweep produced by the simulator CLI, checking panel and series counts
against the config's cells."""

import json
import shutil
import subprocess

import pytest

from qmc_figures import PlotSpec, render

from conftest import visible_axes

pytestmark = pytest.mark.skipif(
    shutil.which("qmulticore") is None,
    reason="qmulticore CLI not installed",
)

CONFIG = {
    "partitions": [[3, 2], [2, 3]],
    "architectures": ["ring", "star"],
    "gpc_values": [2, 5, 10],
    "total_gates": 200,
    "checkpoint_start": 50,
    "checkpoint_step": 50,
    "ensemble_size": 4,
    "haar_samples": 100,
    "seed": 3,
    "include_monolithic": True,
}


@pytest.fixture(scope="module")
def sweep_csvs(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("sweep")
    cfg = tmp / "exp.json"
    cfg.write_text(json.dumps(CONFIG))
    out = tmp / "results.csv"
    subprocess.run(
        ["qmulticore", "run", "--config", str(cfg), "--out", str(out),
         "--threads", "1"],
        check=True,
        capture_output=True,
    )
    summary = tmp / "results_summary.csv"
    assert out.exists() and summary.exists()
    return str(out), str(summary)


def test_idh_vs_gpc_layout(sweep_csvs, tmp_path):
    _, summary = sweep_csvs
    fig = render(PlotSpec("idh_vs_gpc", (summary,), str(tmp_path / "fig1.png")))
    axes = visible_axes(fig)
    assert len(axes) == len(CONFIG["architectures"])
    for ax in axes:
        assert len(ax.lines) == len(CONFIG["partitions"])


def test_idh_vs_swratio_layout(sweep_csvs, tmp_path):
    _, summary = sweep_csvs
    fig = render(PlotSpec("idh_vs_swratio", (summary,), str(tmp_path / "fig2.png")))
    axes = visible_axes(fig)
    assert len(axes) == len(CONFIG["partitions"])
    for ax in axes:
        assert len(ax.lines) == len(CONFIG["architectures"])


def test_dh_vs_gates_layout(sweep_csvs, tmp_path):
    checkpoint, summary = sweep_csvs
    fig = render(PlotSpec("dh_vs_gates", (checkpoint, summary),
                          str(tmp_path / "fig3.png")))
    axes = visible_axes(fig)
    assert len(axes) == len(CONFIG["architectures"])
    for ax in axes:
        # one optimal-gpc series per partition plus one black monolithic
        # overlay per register width (both partitions here are 6 qubits)
        assert len(ax.lines) == len(CONFIG["partitions"]) + 1
        assert sum(l.get_color() == "black" for l in ax.lines) == 1
