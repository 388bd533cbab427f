# Copyright (c) 2026, Complex Splines contributors
# See license.txt

import json
import os
import tempfile
import unittest
from unittest.mock import patch

import mpmath
from click.testing import CliRunner

from complex_splines.analysis import BoundCheckResult
from complex_splines.commands import EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION, cli, main
from complex_splines.exceptions import NumericError
from complex_splines.verification import VerificationReport


class TestCommands(unittest.TestCase):
	def setUp(self):
		try:
			self.runner = CliRunner(mix_stderr=False)
		except TypeError:
			# click 8.2 always keeps stderr apart
			self.runner = CliRunner()

	def invoke(self, *args):
		return self.runner.invoke(cli, list(args))

	def rows(self, result):
		lines = result.stdout.splitlines()
		return lines[0].split(","), [line.split(",") for line in lines[1:]]

	def test_sample_hat(self):
		result = self.invoke("sample", "--z", "2", "--a", "0", "--x0", "0", "--dx", "0.5", "--n", "5")
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		header, rows = self.rows(result)
		self.assertEqual(header, ["x", "re", "im"])
		for row, expected in zip(rows, (0, 0.5, 1, 0.5, 0)):
			self.assertAlmostEqual(float(row[1]), expected, places=12)
			self.assertAlmostEqual(float(row[2]), 0, places=12)

	def test_sample_json(self):
		result = self.invoke("sample", "--z", "2.5+1i", "--a", "1", "--n", "3", "--format", "json")
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		payload = json.loads(result.stdout)
		self.assertEqual(payload["z"], [2.5, 1.0])
		self.assertEqual(len(payload["values"]), 3)

	def test_domain_error(self):
		result = self.invoke("sample", "--z", "0.9")
		self.assertEqual(result.exit_code, EXIT_USAGE)
		self.assertIn("Re z > 1", result.stderr)
		self.assertEqual(result.stdout, "")

	def test_click_usage_error(self):
		self.assertEqual(self.invoke("sample", "--n", "many").exit_code, EXIT_USAGE)
		self.assertEqual(self.invoke("verify", "everything").exit_code, EXIT_USAGE)
		self.assertEqual(self.invoke("transform").exit_code, EXIT_USAGE)

	def test_fourier(self):
		result = self.invoke(
			"fourier", "--z", "2+1i", "--a", "0.5", "--omega0", "0", "--domega", "1", "--n", "4", "--format", "json"
		)
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		payload = json.loads(result.stdout)
		self.assertEqual(payload["omega0"], 0.0)
		expected = complex(mpmath.power((1 - mpmath.exp(-0.5)) / 0.5, mpmath.mpc(2, 1)))
		self.assertAlmostEqual(payload["values"][0][0], expected.real, places=12)
		self.assertAlmostEqual(payload["values"][0][1], expected.imag, places=12)
		self.assertNotAlmostEqual(payload["values"][0][0], 1.0, places=3)

	def test_filter_cubic(self):
		result = self.invoke("filter", "--z", "3", "--a", "0")
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		header, rows = self.rows(result)
		self.assertEqual(header, ["k", "re", "im"])
		self.assertEqual(len(rows), 4)
		for row, expected in zip(rows, (0.125, 0.375, 0.375, 0.125)):
			self.assertAlmostEqual(float(row[1]), expected, places=12)

	def test_bivariate(self):
		result = self.invoke(
			"bivariate", "--z", "2+0.5i", "--zeta", "1.5", "--a", "1", "--b", "0.3", "--dx", "0.5", "--n", "8"
		)
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		header, rows = self.rows(result)
		self.assertEqual(header, ["x", "kummer_re", "kummer_im", "2f1_re", "2f1_im", "difference"])
		self.assertEqual(len(rows), 8)
		self.assertTrue(all(float(row[-1]) < 1e-10 for row in rows))

		self.assertEqual(self.invoke("bivariate", "--z", "2", "--a", "1").exit_code, EXIT_USAGE)

	def test_verify_writes_report(self):
		with tempfile.TemporaryDirectory() as tmp:
			out = os.path.join(tmp, "report.json")
			result = self.invoke("verify", "special-functions", "--format", "json", "--out", out)
			self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
			with open(out) as f:
				report = json.load(f)
		self.assertTrue(report["passed"])
		self.assertEqual(report["suite"], "special-functions")
		self.assertEqual(report["config"]["suite"], "special-functions")

	def test_verify_failure(self):
		report = VerificationReport("riesz", [BoundCheckResult("riesz_bounds", 4, 1.0, 1e-10)])
		with patch("complex_splines.commands.run_suite", return_value=report):
			result = self.invoke("verify", "--suite", "riesz")
		self.assertEqual(result.exit_code, EXIT_VERIFICATION)
		self.assertIn("riesz_bounds", result.stdout)
		self.assertIn("failed", result.stderr)

	def test_numeric_error(self):
		with patch("complex_splines.commands.sample", side_effect=NumericError("series diverged", terms=10)):
			result = self.invoke("sample")
		self.assertEqual(result.exit_code, EXIT_NUMERIC)
		self.assertIn("series diverged", result.stderr)

	def test_config_file(self):
		with tempfile.TemporaryDirectory() as tmp:
			path = os.path.join(tmp, "run.json")
			with open(path, "w") as f:
				json.dump({"z": "3", "a": 0, "dx": 0.5, "n": 3, "format": "json"}, f)
			result = self.invoke("sample", "--config", path, "--n", "2")
		self.assertEqual(result.exit_code, EXIT_OK, result.stderr)
		payload = json.loads(result.stdout)
		self.assertEqual(len(payload["values"]), 2)
		self.assertEqual(payload["dx"], 0.5)

	def test_main_exit_code(self):
		with self.assertRaises(SystemExit) as raised:
			main(["sample", "--z", "0.5"])
		self.assertEqual(raised.exception.code, EXIT_USAGE)
