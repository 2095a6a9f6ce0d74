"""Secondary acceptance: render valid SVG from the real harness report CSVs,
one bar/line per grid cell. Skips when the grids have not been run yet;
the synthetic-CSV tests in test_render.py always run.
"""
import csv
import os
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from slotbench_figures.render import render_bars, render_curves, save_figure

REPORT_DIR = Path(os.environ.get(
    "SLOTBENCH_REPORT_DIR",
    Path(__file__).parent.parent.parent / "out" / "acceptance" / "report"))


def _require(name: str) -> Path:
    path = REPORT_DIR / name
    if not path.exists():
        pytest.skip(f"{path} not present; run the slotbench grids first")
    return path


class TestA11RealCSVs:
    def test_bars_from_real_report(self, tmp_path):
        path = _require("fig_bars.csv")
        with open(path, newline="") as fh:
            rows = [r for r in csv.DictReader(fh) if r["mean"] not in ("", "NA")]
        fig, info = render_bars(path)
        assert info["n_bars"] == len(rows)
        out = save_figure(fig, tmp_path / "fig1.svg")
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")
        svg = out.read_text()
        for row in rows:
            assert f'id="bar-{row["task"]}-{row["variant"]}"' in svg
        print(f"\nACCEPTANCE A11 (bars): PASS - {info['n_bars']} bars "
              f"from {path}")

    def test_curves_from_real_report(self, tmp_path):
        path = _require("fig_curves.csv")
        fig, info = render_curves(path)
        assert info["n_lines"] == 2 * len(info["cells"])
        out = save_figure(fig, tmp_path / "fig2.svg")
        root = ET.parse(out).getroot()
        assert root.tag.endswith("svg")
        print(f"\nACCEPTANCE A11 (curves): PASS - {len(info['cells'])} cells "
              f"x 2 panels from {path}")
