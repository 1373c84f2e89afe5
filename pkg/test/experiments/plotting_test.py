from gdpkit.experiments.plotting import svg_path, plot_columns, plot_figures
from gdpkit.experiments.csv_output import Table
from pathlib import Path
import tempfile
import unittest

TABLE = Table(["t", "V_gdp", "V_dp"], [{"t": 0.0, "V_gdp": 4.0, "V_dp": 4.0}, {"t": 1.0, "V_gdp": 2.0, "V_dp": 1.0}])


class SvgPathTest(unittest.TestCase):

    def test_next_to_table(self):
        self.assertEqual(svg_path("runs/hot.csv", "volume"), Path("runs/hot_volume.svg"))

    def test_stdout(self):
        self.assertEqual(svg_path(None, "volume"), Path("gdp_volume.svg"))


class PlotTest(unittest.TestCase):

    def test_writes_svg(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "volume.svg"
            plot_columns(TABLE, "t", {"V_gdp": "GDP", "V_dp": "DP", "V_missing": "skipped"}, path, "V", "volume")
            self.assertIn("<svg", path.read_text())

    def test_figures(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = str(Path(tmp) / "metrics.csv")
            paths = plot_figures(TABLE, out, [("volume", {"V_gdp": "GDP"}, "V", "volume")])
            self.assertEqual(paths, [Path(tmp) / "metrics_volume.svg"])
            self.assertTrue(paths[0].exists())
