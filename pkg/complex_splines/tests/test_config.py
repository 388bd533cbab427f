# Copyright (c) 2026, Complex Splines contributors
# See license.txt

import json
import math
import os
import tempfile
import unittest

from complex_splines.config import (
	DEFAULT_SETTINGS,
	load_run_config,
	parse_complex,
	settings_with,
)
from complex_splines.exceptions import DomainError, UsageError


class TestParseComplex(unittest.TestCase):
	def test_tokens(self):
		self.assertEqual(parse_complex("2.5+1i"), 2.5 + 1j)
		self.assertEqual(parse_complex("-0.5i"), -0.5j)
		self.assertEqual(parse_complex("2"), 2 + 0j)
		self.assertEqual(parse_complex(" 3 - 2i "), 3 - 2j)
		self.assertEqual(parse_complex([1, 2]), 1 + 2j)
		self.assertEqual(parse_complex(1.5), 1.5 + 0j)

	def test_bad_tokens(self):
		for token in ("abc", "nan", "inf+1i", ""):
			with self.assertRaises(UsageError):
				parse_complex(token)


class TestSettings(unittest.TestCase):
	def test_period(self):
		self.assertEqual(DEFAULT_SETTINGS.period, 1.0)
		self.assertAlmostEqual(settings_with(wavelet_period="standard").period, 2 * math.pi)

	def test_matrix(self):
		matrix = DEFAULT_SETTINGS.matrix()
		self.assertEqual(len(matrix), 48)
		self.assertEqual(matrix[0], (1.2 + 0j, 0.0))
		self.assertEqual(matrix[-1], (4 - 1j, 3.0))


class TestLoadRunConfig(unittest.TestCase):
	def setUp(self):
		fd, self.path = tempfile.mkstemp(suffix=".json")
		os.close(fd)

	def tearDown(self):
		os.remove(self.path)

	def write(self, payload):
		with open(self.path, "w") as f:
			json.dump(payload, f)

	def test_defaults(self):
		config = load_run_config("sample")
		self.assertEqual(config.z, 2 + 0j)
		self.assertEqual(config.format, "csv")
		self.assertIs(config.settings, DEFAULT_SETTINGS)

	def test_flags_override_file(self):
		self.write({"z": "2.5+1i", "a": 0.5, "n": 10, "format": "json"})
		config = load_run_config("sample", path=self.path, n=4, a=None)
		self.assertEqual(config.z, 2.5 + 1j)
		self.assertEqual(config.a, 0.5)
		self.assertEqual(config.n, 4)
		self.assertEqual(config.format, "json")

	def test_unreadable_file(self):
		with open(self.path, "w") as f:
			f.write("{not json")
		with self.assertRaises(UsageError):
			load_run_config("sample", path=self.path)
		with self.assertRaises(UsageError):
			load_run_config("sample", path=self.path + ".missing")

	def test_unknown_key(self):
		self.write({"z": 2, "colour": "red"})
		with self.assertRaisesRegex(UsageError, "colour"):
			load_run_config("sample", path=self.path)

	def test_domain(self):
		with self.assertRaises(DomainError):
			load_run_config("sample", z="0.9")
		with self.assertRaises(DomainError):
			load_run_config("fourier", a=-1)

	def test_usage(self):
		with self.assertRaises(UsageError):
			load_run_config("sample", format="xml")
		with self.assertRaises(UsageError):
			load_run_config("sample", dx=0)
		with self.assertRaises(UsageError):
			load_run_config("sample", n=0)
		with self.assertRaises(UsageError):
			load_run_config("filter", tol=-1e-3)
		with self.assertRaises(UsageError):
			load_run_config("verify", suite="everything")
		with self.assertRaises(UsageError):
			load_run_config("bivariate", z=2, a=1)
		with self.assertRaises(UsageError):
			load_run_config("transform")

	def test_echo(self):
		config = load_run_config("bivariate", z="2+0.5i", zeta="1.5", a=1, b=0.3)
		echoed = config.echo()
		self.assertEqual(echoed["z"], [2.0, 0.5])
		self.assertEqual(echoed["zeta"], [1.5, 0.0])
		self.assertNotIn("settings", echoed)
		json.dumps(echoed)
