# Copyright (c) 2026, Complex Splines contributors
# See license.txt

import json
import unittest

from complex_splines.analysis import BoundCheckResult
from complex_splines.config import DEFAULT_SETTINGS, settings_with
from complex_splines.verification import SUITES, VerificationReport, run_suite

SMALL = settings_with(matrix_real=(2.0,), matrix_imag=(0.0, 1.0), matrix_a=(1.0,), sweep_size=1000)


class TestVerificationReport(unittest.TestCase):
	def test_passed(self):
		report = VerificationReport("x", [BoundCheckResult("ok", 1, 0.0, 1.0)])
		self.assertTrue(report.passed)
		report.checks.append(BoundCheckResult("bad", 1, 2.0, 1.0))
		self.assertFalse(report.passed)
		self.assertEqual(list(report.to_dict()), ["suite", "passed", "wall_time", "config", "checks"])

	def test_suite_order(self):
		self.assertEqual(
			list(SUITES),
			[
				"inequalities",
				"fourier-consistency",
				"two-scale",
				"riesz",
				"wavelet",
				"delta-identity",
				"bivariate",
				"special-functions",
				"convolution",
				"all",
			],
		)


class TestSuites(unittest.TestCase):
	def assertSuitePasses(self, name, settings=SMALL):
		report = run_suite(name, settings, config_echo={"suite": name})
		failed = [check.to_dict() for check in report.checks if not check.passed]
		self.assertTrue(report.checks)
		self.assertFalse(failed, failed)
		json.dumps(report.to_dict())
		return report

	def test_special_functions(self):
		report = self.assertSuitePasses("special-functions")
		self.assertEqual(report.config_echo, {"suite": "special-functions"})

	def test_inequalities(self):
		self.assertSuitePasses("inequalities")

	def test_spline_sandwich_covers_every_decay(self):
		settings = settings_with(matrix_real=(1.2, 4.0), matrix_imag=(0.0, -1.0), matrix_a=(0.5,), sweep_size=1000)
		report = self.assertSuitePasses("inequalities", settings)
		sandwiches = [check for check in report.checks if check.name == "spline_sandwich"]
		covered = {(complex(*check.details["z"]), check.details["a"]) for check in sandwiches}
		for re in (1.2, 4.0):
			for im in (0.0, -1.0):
				for a in (0.1, 1.0, 10.0):
					self.assertIn((complex(re, im), a), covered)
		self.assertTrue(all(check.grid_size == 1000 for check in sandwiches))
		self.assertEqual(DEFAULT_SETTINGS.sweep_size, 100000)

	def test_fourier_consistency(self):
		self.assertSuitePasses("fourier-consistency")

	def test_two_scale(self):
		self.assertSuitePasses("two-scale")

	def test_two_scale_with_strong_damping(self):
		settings = settings_with(matrix_real=(1.2, 2.0), matrix_imag=(1.0, -1.0), matrix_a=(3.0,), sweep_size=1000)
		report = self.assertSuitePasses("two-scale", settings)
		self.assertEqual(sum(check.name == "filter_mass" for check in report.checks), 4)

	def test_riesz(self):
		self.assertSuitePasses("riesz")

	def test_delta_identity(self):
		self.assertSuitePasses("delta-identity")

	def test_wavelet(self):
		self.assertSuitePasses("wavelet")

	def test_deterministic(self):
		first = run_suite("special-functions", SMALL).to_dict()
		second = run_suite("special-functions", SMALL).to_dict()
		first.pop("wall_time")
		second.pop("wall_time")
		self.assertEqual(first, second)

	def test_logs_progress(self):
		with self.assertLogs("complex_splines", level="INFO") as logs:
			run_suite("special-functions", SMALL)
		self.assertTrue(any("special-functions" in line for line in logs.output))
