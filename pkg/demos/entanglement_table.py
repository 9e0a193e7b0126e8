#!/usr/bin/env python3
"""Entanglement entropy per pump charge and projection scenario.

Prints the entropy table at the package's default convention (natural log,
unit-sum Schmidt weights, raw ring projections at the lens-output geometry),
shows the two structural facts the table encodes — ring projections cost
entropy, higher pump charge buys it back — and runs the convention
calibration to report how close each column can get to the benchmark values.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from spdc_oam import QuadratureConfig, calibrate, entropy_table

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                   "entropy_vs_charge.png")

quad = QuadratureConfig()
report = entropy_table(quad=quad)
print(report.to_text())
print()

rows_ordered = all(r[0] > r[1] > r[2] for r in report.cells)
cols_growing = all(
    all(a < b for a, b in zip(col, col[1:]))
    for col in zip(*report.cells))
print("ring projections reduce entropy at every pump charge: %s" % rows_ordered)
print("entropy grows with pump charge in every scenario:     %s" % cols_growing)
print()

fig, ax = plt.subplots(figsize=(6, 4))
for col, label in enumerate(report.columns):
    ax.plot(report.l_p_values, [row[col] for row in report.cells],
            "o-", label=label)
ax.set_xlabel("pump charge l_p")
ax.set_ylabel("von Neumann entropy (nats)")
ax.set_xticks(report.l_p_values)
ax.legend()
fig.tight_layout()
fig.savefig(OUT, dpi=150)

# the benchmark table was produced under an unstated convention, so scan the
# plausible choices and report the best fit overall and per column
print("scanning entropy conventions against the benchmark table ...")
scan = calibrate(quad=quad)
print(scan.to_text())
print()
print("wrote %s" % OUT)
