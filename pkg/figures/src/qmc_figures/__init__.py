"""Render the standard figure layouts from multicore sweep CSV files.

Input is the simulator's CSV schema (one file per granularity):

- checkpoint rows: arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,gate_count,dh
- summary rows:    arch,n_cores,qubits_per_core,gpc,sw,sw_over_gpc,id_h

This package only displays those numbers; it never recomputes a metric.
"""

from .plots import KINDS, FigureDataError, PlotSpec, render

__all__ = ["KINDS", "FigureDataError", "PlotSpec", "render"]

__version__ = "0.1.0"
