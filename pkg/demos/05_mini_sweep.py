"""A small end-to-end GPC sweep on a 6-qubit ring processor.

This is the full benchmark pipeline in miniature: for each gates-per-core
value an ensemble of circuits is evolved, checkpointed, reduced to
fluctuation curves, and distilled into one ID_H number.  Too few local
gates waste the budget on interconnects, too many starve communication:
ID_H has an interior minimum.  The 12-qubit study in the README is the
same thing at scale.
"""

import numpy as np

from qmulticore import Architecture, ExperimentConfig, run_experiment

config = ExperimentConfig(
    partitions=((3, 2),),
    architectures=(Architecture.RING,),
    gpc_values=(1, 2, 3, 5, 7, 10, 20, 40, 80),
    total_gates=600,
    checkpoint_start=60,
    checkpoint_step=60,
    ensemble_size=40,
    haar_samples=500,
    seed=1,
    output_path="mini_sweep.csv",
)

results = run_experiment(config, threads=1)

print("gpc   SW/GPC   ID_H")
for r in results:
    print(f"{r.gpc:3d}   {r.sw_over_gpc:6.3f}   {r.id_h:7.2f}")

best = min(results, key=lambda r: r.id_h)
print(f"\noptimal gates-per-core: {best.gpc} (ID_H = {best.id_h:.2f})")
print("wrote mini_sweep.csv and mini_sweep_summary.csv")

dh = np.array([d for _, d in best.dh_points])
print("\nD_H decay at the optimum:",
      " ".join(f"{x:.3f}" for x in dh))
