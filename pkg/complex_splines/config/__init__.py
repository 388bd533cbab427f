# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

import json
import math
from dataclasses import dataclass, field, fields, replace

from complex_splines.exceptions import UsageError

COMMANDS = ("sample", "fourier", "filter", "bivariate", "verify")
FORMATS = ("csv", "json")
PERIOD_CONVENTIONS = {"unit": 1.0, "standard": 2 * math.pi}


@dataclass(frozen=True)
class SplineSettings:
	"""Tolerances and grid knobs shared by every module"""

	# series for special functions
	kummer_tolerance: float = 1e-15
	kummer_max_terms: int = 10000
	kummer_quiet_terms: int = 3

	# Omega symbol
	taylor_radius: float = 1e-4
	taylor_terms: int = 10
	branch_margin: float = 1e-9

	# Poisson images of the symbol on sampling grids
	alias_terms: int = 64

	# time <-> Fourier oracles
	fourier_x_min: float = 40.0
	fourier_dx: float = 1 / 64
	fourier_tol: float = 1e-5
	partition_x_max: float = 60.0
	partition_dx: float = 1 / 128
	partition_tol: float = 1e-4

	# multiresolution
	filter_tol: float = 1e-12
	filter_max_terms: int = 4096
	two_scale_x_max: float = 12.0
	two_scale_dx: float = 1 / 32
	two_scale_tol: float = 1e-8
	degeneracy_threshold: float = 1e-10
	wavelet_period: str = "unit"
	orthonormality_tol: float = 1e-6

	# periodized sums
	riesz_tol: float = 1e-10
	riesz_max_terms: int = 256
	riesz_grid: int = 4096
	riesz_floor: float = 1e-8

	# fractional operators
	delta_terms: int = 200
	delta_tol: float = 1e-6
	decay_tol: float = 1e-8
	fft_padding: int = 4

	# inequality sweeps
	inequality_slack: float = 1e-12
	sweep_size: int = 100000
	seed: int = 20260417

	# test matrix
	matrix_real: tuple = (1.2, 2.0, 2.5, 4.0)
	matrix_imag: tuple = (0.0, 1.0, -1.0)
	matrix_a: tuple = (0.0, 0.5, 1.0, 3.0)

	@property
	def period(self):
		return PERIOD_CONVENTIONS[self.wavelet_period]

	def matrix(self):
		"""(z, a) pairs of the default test matrix in a fixed order"""
		return [
			(complex(re, im), a) for re in self.matrix_real for im in self.matrix_imag for a in self.matrix_a
		]


DEFAULT_SETTINGS = SplineSettings()


def parse_complex(text):
	"""Parse `2.5+1i`, `2`, `-0.5i` style single tokens"""
	if isinstance(text, (int, float, complex)):
		return complex(text)
	if isinstance(text, (list, tuple)) and len(text) == 2:
		return complex(float(text[0]), float(text[1]))

	token = str(text).strip().replace(" ", "")
	if token.endswith("i"):
		token = token[:-1] + "j"
	try:
		value = complex(token)
	except ValueError:
		raise UsageError("Cannot read complex number {0!r}, expected a form like 2.5+1i".format(text))

	if not (math.isfinite(value.real) and math.isfinite(value.imag)):
		raise UsageError("Complex number {0!r} is not finite".format(text))
	return value


@dataclass(frozen=True)
class RunConfig:
	command: str
	z: complex = 2.0
	zeta: complex = None
	a: float = 0.0
	b: float = None
	x0: float = 0.0
	dx: float = 1 / 64
	n: int = 256
	tol: float = None
	out: str = None
	format: str = "csv"
	suite: str = "all"
	settings: SplineSettings = field(default=DEFAULT_SETTINGS, compare=False)

	def spec(self):
		from complex_splines.spline_core import SplineSpec

		return SplineSpec(self.z, self.a)

	def bivariate_spec(self):
		from complex_splines.bivariate import BivariateSpec

		if self.zeta is None or self.b is None:
			raise UsageError("The bivariate command needs both --zeta and --b")
		return BivariateSpec(self.z, self.zeta, self.a, self.b)

	def echo(self):
		"""JSON-safe copy of the parsed configuration"""
		echoed = {}
		for item in fields(self):
			if item.name == "settings":
				continue
			value = getattr(self, item.name)
			if isinstance(value, complex):
				value = [value.real, value.imag]
			echoed[item.name] = value
		return echoed


def load_run_config(command, path=None, settings=DEFAULT_SETTINGS, **overrides):
	"""Build a validated RunConfig from an optional JSON file and flag overrides (flags win)"""
	values = {}
	if path:
		try:
			with open(path) as f:
				values.update(json.load(f))
		except (OSError, ValueError) as e:
			raise UsageError("Cannot read config file {0}: {1}".format(path, e))

	values.update({key: value for key, value in overrides.items() if value is not None})
	values.pop("command", None)

	known = {item.name for item in fields(RunConfig)} - {"command", "settings"}
	unknown = sorted(set(values) - known)
	if unknown:
		raise UsageError("Unknown config keys: {0}".format(", ".join(unknown)))

	for key in ("z", "zeta"):
		if values.get(key) is not None:
			values[key] = parse_complex(values[key])
	for key in ("a", "b", "x0", "dx", "tol"):
		if values.get(key) is not None:
			values[key] = float(values[key])
	if values.get("n") is not None:
		values["n"] = int(values["n"])

	config = RunConfig(command=command, settings=settings, **values)
	validate_run_config(config)
	return config


def validate_run_config(config):
	"""Check every precondition up front so no computation starts on bad input"""
	if config.command not in COMMANDS:
		raise UsageError("Unknown command {0!r}".format(config.command))
	if config.format not in FORMATS:
		raise UsageError("Unknown format {0!r}, expected one of {1}".format(config.format, ", ".join(FORMATS)))
	if not config.dx > 0:
		raise UsageError("Grid step must be positive, got {0}".format(config.dx))
	if config.n < 1:
		raise UsageError("Sample count must be at least 1, got {0}".format(config.n))
	if config.tol is not None and not config.tol > 0:
		raise UsageError("Tolerance must be positive, got {0}".format(config.tol))

	if config.command == "verify":
		from complex_splines.verification import SUITES

		if config.suite not in SUITES:
			raise UsageError(
				"Unknown suite {0!r}, expected one of {1}".format(config.suite, ", ".join(SUITES))
			)
	elif config.command == "bivariate":
		config.bivariate_spec()
	else:
		config.spec()


def settings_with(**changes):
	return replace(DEFAULT_SETTINGS, **changes)
