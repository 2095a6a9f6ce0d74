"""Figure rendering for slotbench result CSVs.

Consumes only the CSV files the experiment harness emits (fig_bars.csv,
fig_curves.csv); no dependency on the slotbench package itself.
"""

__version__ = "0.1.0"
