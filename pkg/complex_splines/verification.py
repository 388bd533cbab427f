# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Named verification suites. Checks run in declaration order so reports are
reproducible; `all` concatenates the other suites.
"""

import time
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from complex_splines import analysis, bivariate, fractional, multiresolution
from complex_splines.analysis import BoundCheckResult
from complex_splines.config import DEFAULT_SETTINGS, PERIOD_CONVENTIONS
from complex_splines.logger import get_logger
from complex_splines.serialization import check_to_json_line
from complex_splines.special_functions import (
	binomial,
	gamma,
	gauss_2f1_terminating,
	kummer_m,
	kummer_m_integral,
)
from complex_splines.spline_core import SplineSpec

BIVARIATE_SPECS = (
	(2 + 0.5j, 1.5, 1.0, 0.3),
	(2.5, 2 + 1j, 0.5, 0.0),
	(1.5 + 0.5j, 2.5 - 0.5j, 0.0, 1.0),
	(2 + 0.5j, 2.0, 1.0, 0.3),
	(2.0, 1.5, 0.7, 0.7),
)


@dataclass
class VerificationReport:
	suite: str
	checks: list = field(default_factory=list)
	wall_time: float = 0.0
	config_echo: dict = field(default_factory=dict)

	@property
	def passed(self):
		return all(check.passed for check in self.checks)

	def to_dict(self):
		return {
			"suite": self.suite,
			"passed": self.passed,
			"wall_time": self.wall_time,
			"config": self.config_echo,
			"checks": [check.to_dict() for check in self.checks],
		}


def _matrix(settings):
	return [SplineSpec(z, a) for z, a in settings.matrix()]


SANDWICH_DECAYS = (0.1, 1.0, 10.0)


def inequalities(settings, tol=None):
	x = np.concatenate(([0.0, np.pi], analysis.random_grid(-50, 50, settings.sweep_size, settings)))
	yield analysis.check_cos_cosh_lemma(x, settings)

	omega = np.linspace(-100, 100, settings.sweep_size)
	for a in (0.1, 0.5, 1.0, 3.0, 10.0):
		yield analysis.check_omega_sandwich(a, omega, settings)

	specs = [
		SplineSpec(complex(re, im), a)
		for re in settings.matrix_real
		for im in settings.matrix_imag
		for a in SANDWICH_DECAYS
	]
	specs += [SplineSpec(2.5 + 1j, 1.0), SplineSpec(1.1 + 3j, 0.1)]
	for spec in specs:
		yield analysis.check_spline_sandwich(spec, omega, settings)

	yield analysis.check_circle_asymptotics((10.0, 20.0, 30.0), settings=settings)

	for spec in _matrix(settings):
		yield analysis.check_spectrum_factorization(spec, np.linspace(-50, 50, 2001), settings)


def fourier_consistency(settings, tol=None):
	for spec in _matrix(settings):
		yield analysis.check_fourier_consistency(spec, tol, settings)
		yield analysis.check_partition_constant(spec, settings=settings)
		yield analysis.check_decay_bound(spec, settings)


def two_scale(settings, tol=None):
	omega = np.linspace(-4 * np.pi, 4 * np.pi, 801)
	for spec in _matrix(settings):
		yield multiresolution.check_two_scale(spec, tol=tol, settings=settings)
		yield multiresolution.check_nested_spaces(spec, omega, settings)
		yield multiresolution.check_filter_mass(spec, settings)
		yield multiresolution.check_scaling_function_conditions(spec, settings)


def riesz(settings, tol=None):
	for spec in _matrix(settings):
		yield analysis.check_riesz_bounds(spec, settings=settings)
		yield analysis.check_riesz_periodicity(spec, settings=settings)


def wavelet(settings, tol=None):
	for z, a in ((2.0, 0.0), (3.0, 0.0), (2.5, 1.0), (2.5 + 1j, 0.5)):
		spec = SplineSpec(z, a)
		for period in dict.fromkeys((settings.period, PERIOD_CONVENTIONS["standard"])):
			framed = multiresolution.WaveletSpec.from_spec(spec, settings, period=period)
			yield multiresolution.check_wavelet_orthonormality(framed, settings=settings)

		w = multiresolution.WaveletSpec.from_spec(spec, settings)
		grid = np.linspace(0, w.period, 1024, endpoint=False)
		correlation = multiresolution.autocorrelation(w, grid, settings=settings)
		yield BoundCheckResult(
			"autocorrelation_positive",
			grid.size,
			settings.degeneracy_threshold / max(float(np.min(correlation.value)), 1e-300),
			1.0,
			{"z": [complex(z).real, complex(z).imag], "a": a, "minimum": float(np.min(correlation.value))},
		)


def delta_identity(settings, tol=None):
	for spec in _matrix(settings):
		yield fractional.verify_delta_identity(spec, tol=tol, settings=settings)
		yield fractional.check_exp_difference_reproduces_spline(spec)


def bivariate_suite(settings, tol=None):
	for z, zeta, a, b in BIVARIATE_SPECS:
		spec = bivariate.BivariateSpec(z, zeta, a, b)
		yield bivariate.check_bracket_forms(spec)
		yield bivariate.check_commutativity(spec)
		yield bivariate.check_convolution(spec)
		yield bivariate.check_fourier(spec, settings=settings)


def special_functions(settings, tol=None):
	rng = np.random.default_rng(settings.seed)
	z = rng.uniform(-19.5, 20, 400) + 1j * rng.uniform(-20, 20, 400)
	z = z[np.min(np.abs(z[:, None] + np.arange(25)[None, :]), axis=1) > 0.05]

	ours = gamma(z)
	relative = np.abs(ours - special.gamma(z)) / np.abs(special.gamma(z))
	yield BoundCheckResult("gamma_reference", z.size, float(np.max(relative)), 1e-11)

	reflection = np.abs(ours * gamma(1 - z) * np.sin(np.pi * z) / np.pi - 1)
	yield BoundCheckResult("gamma_reflection", z.size, float(np.max(reflection)), 1e-10)

	recurrence = np.abs(gamma(z + 1) - z * ours) / np.abs(z * ours)
	yield BoundCheckResult("gamma_recurrence", z.size, float(np.max(recurrence)), 1e-12)

	orders = rng.uniform(-5, 5, 20) + 1j * rng.uniform(-5, 5, 20)
	pascal = max(
		abs(binomial(w, k) - binomial(w - 1, k) - binomial(w - 1, k - 1)) / max(1.0, abs(binomial(w, k)))
		for w in orders
		for k in range(1, 51)
	)
	yield BoundCheckResult("binomial_pascal", orders.size * 50, pascal, 1e-12)

	# (b - a) M(a-1) + (2a - b + x) M(a) - a M(a+1) = 0
	a, b = 1.3 + 0.4j, 2.7 - 0.2j
	x = np.linspace(-20, 20, 81)
	contiguous = (b - a) * kummer_m(a - 1, b, x) + (2 * a - b + x) * kummer_m(a, b, x) - a * kummer_m(a + 1, b, x)
	scale = np.maximum(1.0, np.abs(a * kummer_m(a + 1, b, x)))
	yield BoundCheckResult("kummer_contiguous", x.size, float(np.max(np.abs(contiguous) / scale)), 1e-10)

	integral = max(
		abs(kummer_m(a, b, point) - kummer_m_integral(a, b, point)) / max(1.0, abs(kummer_m(a, b, point)))
		for point in (-5.0, -0.5, 0.5, 3.0, 8.0)
	)
	yield BoundCheckResult("kummer_integral", 5, integral, 1e-8)

	spec = bivariate.BivariateSpec(2 + 1j, 1.5 + 0.5j, 0.3, 0.0)
	direct = bivariate.bracket_double_binomial(spec, 4)[3] / binomial(spec.zeta, 3)
	hypergeometric = gauss_2f1_terminating(3, -spec.z, 1 - 3 + spec.zeta, np.exp(-0.3))
	yield BoundCheckResult("gauss_2f1_bracket", 4, abs(direct - hypergeometric), 1e-12)


def convolution(settings, tol=None):
	yield analysis.check_semigroup(1.5, 1.5, 0.0)
	yield analysis.check_semigroup(2 + 1j, 2.5, 0.5)
	for order in (2, 3, 4):
		yield analysis.check_classical_reduction(order)
	yield analysis.check_order_recursion(3.5 + 1j)
	yield fractional.check_kernel_semigroup(1.5, 2.0)
	yield fractional.check_kernel_semigroup(1.5 + 0.5j, 1.2)
	yield fractional.check_kernel_pairing(2.5 + 0.5j, 1.0, settings=settings)
	yield fractional.check_symbol_semigroup(1.5 + 0.5j, 0.7 - 1j, 0.5, np.linspace(-100, 100, 2001))
	yield fractional.check_symbol_semigroup(2.0 + 1j, 1.2, 0.0, np.linspace(-100, 100, 2001))


SUITES = {
	"inequalities": inequalities,
	"fourier-consistency": fourier_consistency,
	"two-scale": two_scale,
	"riesz": riesz,
	"wavelet": wavelet,
	"delta-identity": delta_identity,
	"bivariate": bivariate_suite,
	"special-functions": special_functions,
	"convolution": convolution,
	"all": None,
}


def run_suite(name, settings=DEFAULT_SETTINGS, tol=None, config_echo=None):
	"""Run one named suite (or every suite for `all`) into a VerificationReport"""
	names = [key for key in SUITES if key != "all"] if name == "all" else [name]
	logger = get_logger()
	report = VerificationReport(name, config_echo=config_echo or {})
	started = time.monotonic()

	for suite in names:
		logger.info("running suite %s", suite)
		for check in SUITES[suite](settings, tol):
			logger.debug(check_to_json_line(check))
			if not check.passed:
				logger.warning("check %s failed: %.3g > %.3g", check.name, check.max_violation, check.slack)
			report.checks.append(check)

	report.wall_time = round(time.monotonic() - started, 3)
	logger.info("suite %s finished: %s checks, passed=%s", name, len(report.checks), report.passed)
	return report
