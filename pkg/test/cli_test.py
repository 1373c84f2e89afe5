from gdpkit.cli import main, build_parser
from gdpkit.experiments import commands
from gdpkit.utils import logger as log
from pathlib import Path
from unittest.mock import MagicMock, patch
import tempfile
import unittest


class CliTest(unittest.TestCase):

    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()
        self.tmp = Path(self.dir.name)

    def tearDown(self):
        log.set_log_file(None)
        self.dir.cleanup()

    def test_parser_commands(self):
        args = build_parser().parse_args(["sweep", "--sweep-T", "10,20", "--bloch", "0,0,1", "--self-check"])
        self.assertEqual(args.sweep_temperature, (10.0, 20.0))
        self.assertEqual(args.bloch, (0.0, 0.0, 1.0))
        self.assertTrue(args.self_check)
        self.assertIsNone(args.emit_svg)

    def test_rates(self):
        out = self.tmp / "rates.txt"
        self.assertEqual(main(["rates", "--out", str(out)]), commands.EXIT_OK)
        self.assertIn("y=6.283185307180e+00\n", out.read_text())

    def test_config_file(self):
        config = self.tmp / "run.cfg"
        config.write_text("alpha = 0.01\n")
        out = self.tmp / "rates.txt"
        self.assertEqual(main(["rates", "--config", str(config), "--out", str(out)]), commands.EXIT_OK)
        self.assertIn("y=3.141592653590e+00\n", out.read_text())

    def test_too_few_points(self):
        self.assertEqual(main(["metrics", "--points", "1"]), commands.EXIT_CONFIG)

    def test_missing_config_file(self):
        self.assertEqual(main(["metrics", "--config", str(self.tmp / "missing.cfg")]), commands.EXIT_CONFIG)

    def test_unknown_flag(self):
        self.assertEqual(main(["metrics", "--beta", "1"]), commands.EXIT_CONFIG)

    def test_unknown_command(self):
        self.assertEqual(main(["plot"]), commands.EXIT_CONFIG)

    def test_unwritable_output(self):
        blocker = self.tmp / "blocker"
        blocker.write_text("")
        self.assertEqual(main(["rates", "--out", str(blocker / "rates.txt")]), commands.EXIT_IO)

    def test_kraus(self):
        out = self.tmp / "kraus.txt"
        self.assertEqual(main(["kraus", "--out", str(out)]), commands.EXIT_OK)
        self.assertIn("gdp_discrepancy=", out.read_text())

    def test_kraus_discrepancy(self):
        with patch("gdpkit.experiments.commands.channel_action_distance", MagicMock(return_value=1e-3)):
            self.assertEqual(main(["kraus", "--out", str(self.tmp / "kraus.txt")]), commands.EXIT_NUMERIC)

    def test_numeric_failure(self):
        with patch.dict("gdpkit.cli.COMMANDS", {"rates": MagicMock(side_effect=ArithmeticError("overflow"))}):
            self.assertEqual(main(["rates"]), commands.EXIT_NUMERIC)

    def test_metrics_self_check(self):
        out = self.tmp / "metrics.csv"
        self.assertEqual(main(["metrics", "--points", "11", "--self-check", "--out", str(out)]), commands.EXIT_OK)
        lines = out.read_text().splitlines()
        self.assertEqual(len(lines), 1 + 1 + 11 + 2)
        self.assertTrue(lines[-2].startswith("#max S_gdp="))
        self.assertTrue(lines[-1].startswith("#min S_gdp="))

    def test_self_check_failure(self):
        with patch("gdpkit.experiments.commands.self_check", MagicMock(return_value=["t=0.0 S_gdp: stored 1"])):
            code = main(["metrics", "--points", "3", "--self-check", "--out", str(self.tmp / "metrics.csv")])
        self.assertEqual(code, commands.EXIT_NUMERIC)

    def test_entangle_with_svg(self):
        out = self.tmp / "pair.csv"
        self.assertEqual(main(["entangle", "--points", "21", "--emit-svg", "--out", str(out)]), commands.EXIT_OK)
        self.assertTrue(out.read_text().splitlines()[-1].startswith("#esd_gdp="))
        self.assertTrue((self.tmp / "pair_concurrence.svg").exists())
        self.assertTrue((self.tmp / "pair_eof.svg").exists())

    def test_log_file(self):
        logfile = self.tmp / "run.log"
        main(["rates", "--omega0", "7.5", "--log-file", str(logfile), "--out", str(self.tmp / "rates.txt")])
        self.assertIn("markovianity", logfile.read_text())
