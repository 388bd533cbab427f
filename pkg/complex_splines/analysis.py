# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Inequality sweeps, Riesz sums and the time/Fourier oracles.

Every check returns a BoundCheckResult; `max_violation` is the measured
quantity and `slack` the threshold it is compared to.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from complex_splines.config import DEFAULT_SETTINGS
from complex_splines.exceptions import DomainError
from complex_splines.logger import get_logger
from complex_splines.spline_core import (
	SampledFunction,
	SplineSpec,
	aliased_symbol,
	classical_bspline,
	complex_bspline_recursion,
	convolve_oracle,
	evaluate_time,
	fourier_transform,
	omega_real_imag,
	omega_symbol,
	sample,
)


@dataclass(frozen=True)
class BoundCheckResult:
	name: str
	grid_size: int
	max_violation: float
	slack: float = DEFAULT_SETTINGS.inequality_slack
	details: dict = field(default_factory=dict, compare=False)

	@property
	def passed(self):
		return bool(np.isfinite(self.max_violation) and self.max_violation <= self.slack)

	def to_dict(self):
		return {
			"name": self.name,
			"grid_size": self.grid_size,
			"max_violation": float(self.max_violation),
			"passed": self.passed,
			"slack": float(self.slack),
			"details": self.details,
		}


class PeriodizedSum(NamedTuple):
	value: np.ndarray
	tail_bound: float
	terms: int


class RieszBounds(NamedTuple):
	lower: float
	upper: float
	tail_bound: float


def _violation(excess):
	excess = np.asarray(excess, dtype=float)
	return float(max(np.max(excess, initial=0.0), 0.0))


def random_grid(low, high, size, settings=DEFAULT_SETTINGS):
	"""Seeded uniform grid so sweeps are reproducible"""
	return np.sort(np.random.default_rng(settings.seed).uniform(low, high, size))


def check_cos_cosh_lemma(x_grid, settings=DEFAULT_SETTINGS):
	"""(1 - cos x)/x^2 <= 1/2 <= (cosh x - 1)/x^2, with the value 1/2 at x = 0"""
	x = np.asarray(x_grid, dtype=float)
	nonzero = x != 0
	safe = np.where(nonzero, x, 1.0)
	half = safe / 2

	lower = np.where(nonzero, 2 * np.sin(half) ** 2 / safe**2, 0.5)
	with np.errstate(over="ignore"):
		upper = np.where(nonzero, 2 * np.sinh(half) ** 2 / safe**2, 0.5)

	return BoundCheckResult(
		"cos_cosh_lemma",
		x.size,
		_violation(np.maximum(lower - 0.5, 0.5 - upper)),
		settings.inequality_slack,
	)


def check_omega_sandwich(a, omega_grid, settings=DEFAULT_SETTINGS):
	"""e^{-a/2}|Omega(w)| <= |Omega(w, a)| <= 1 + |Omega(w)|"""
	if not a > 0:
		raise DomainError("The Omega sandwich needs a > 0, got a={0}".format(a))

	omega = np.asarray(omega_grid, dtype=float)
	plain = np.abs(omega_symbol(omega, 0.0, settings))
	damped = np.abs(omega_symbol(omega, a, settings))

	excess = np.maximum(np.exp(-a / 2) * plain - damped, damped - (1 + plain))
	return BoundCheckResult(
		"omega_sandwich", omega.size, _violation(excess), settings.inequality_slack, {"a": a}
	)


def check_spline_sandwich(spec, omega_grid, settings=DEFAULT_SETTINGS):
	"""
	e^{-a Re z/2 - 2 pi |Im z|}|B_z^(w)| <= |E_z^a^(w)| <= 1 + 2^{Re z} e^{2 pi |Im z|}|B_z^(w)|

	The upper bound is not sharp at the zeros of B_z^ (w = 2 pi k, k != 0):
	for large |Im z| and small a it fails in a window narrower than 1e-8
	around them, which grids of ordinary spacing never hit.
	"""
	if not spec.a > 0:
		raise DomainError("The spline sandwich needs a > 0, got a={0}".format(spec.a))

	omega = np.asarray(omega_grid, dtype=float)
	plain = np.abs(fourier_transform(SplineSpec(spec.z, 0.0), omega, settings))
	damped = np.abs(fourier_transform(spec, omega, settings))

	sigma, spread = spec.z.real, abs(spec.z.imag)
	lower = np.exp(-spec.a * sigma / 2 - 2 * np.pi * spread) * plain
	upper = 1 + 2**sigma * np.exp(2 * np.pi * spread) * plain

	# relative to the larger side so a single scale fits every z
	excess = np.maximum(lower - damped, damped - upper) / np.maximum(1.0, damped)
	return BoundCheckResult(
		"spline_sandwich",
		omega.size,
		_violation(excess),
		settings.inequality_slack,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a},
	)


def circle_identity_residual(omega, a):
	"""(f - 1/2a)^2 + g^2 - 1/4a^2 minus its closed form; zero up to rounding"""
	omega = np.asarray(omega, dtype=float)
	f, g = omega_real_imag(omega, a)
	deviation = (f - 1 / (2 * a)) ** 2 + g**2 - 1 / (4 * a * a)
	closed = np.exp(-a) * (-omega * np.sin(omega) / a + np.exp(-a) - np.cos(omega)) / (a * a + omega * omega)
	return deviation, deviation - closed


def check_circle_asymptotics(a_values, points=20001, settings=DEFAULT_SETTINGS):
	"""
	Omega(., a) approaches the circle of radius 1/2a about 1/2a as a grows.

	Reports the fitted constant C in max|deviation| <= C (e^{-2a} + e^{-a}) / a^2
	per a, and for each pair of neighbouring a1 < a2 the measured deviation ratio
	next to e^{-(a2 - a1)} (a1/a2)^2. Passes when the exact identity residual is
	at rounding level, every fitted C stays below 10 and every ratio is within a
	factor 5 of its prediction.
	"""
	constants = {}
	peaks = {}
	residual = 0.0
	for a in sorted(a_values):
		omega = np.linspace(-10 * a, 10 * a, points)
		deviation, identity = circle_identity_residual(omega, a)
		residual = max(residual, float(np.max(np.abs(identity))))
		peaks[a] = float(np.max(np.abs(deviation)))
		constants[str(a)] = float(peaks[a] / ((np.exp(-2 * a) + np.exp(-a)) / a**2))

	ratios = {}
	spread = 0.0
	ordered = list(peaks)
	for a1, a2 in zip(ordered, ordered[1:]):
		expected = math.exp(-(a2 - a1)) * (a1 / a2) ** 2
		measured = peaks[a2] / peaks[a1] if peaks[a1] > 0 else math.inf
		ratios["{0}/{1}".format(a2, a1)] = {"measured": measured, "expected": expected}
		spread = max(spread, abs(math.log(measured / expected)) if 0 < measured < math.inf else math.inf)

	fitted = max(constants.values(), default=0.0)
	return BoundCheckResult(
		"circle_asymptotics",
		points * len(a_values),
		max(fitted / 10, residual / 1e-13, spread / math.log(5)),
		1.0,
		{"fitted_constants": constants, "deviation_ratios": ratios, "identity_residual": residual},
	)


def periodization_terms(constant, exponent, period, tol, cap):
	"""
	Smallest K with constant * (period (K - 1/2))^{-exponent} summed over |k| > K below tol.

	The tail sum is bounded by 2 constant period^{-exponent} (K - 1/2)^{1-exponent}/(exponent - 1).
	Returns (K, bound at K); K never exceeds `cap`.
	"""

	def bound(terms):
		return 2 * constant * period ** (-exponent) * (terms - 0.5) ** (1 - exponent) / (exponent - 1)

	wanted = (2 * constant * period ** (-exponent) / (tol * (exponent - 1))) ** (1 / (exponent - 1)) + 0.5
	terms = int(min(cap, max(2, math.ceil(wanted))))
	return terms, float(bound(terms))


def reduce_frequency(omega, period):
	omega = np.asarray(omega, dtype=float)
	return omega - period * np.floor(omega / period + 0.5)


def riesz_sum(spec, omega, k_max=None, settings=DEFAULT_SETTINGS):
	"""
	sum_k |E_z^a^(w + 2 pi k)|^2 over |k| <= k_max with a certified tail bound.

	Uses |E^(v)| <= e^{pi |Im z|} ((1 + e^{-a})/|v|)^{Re z}.
	"""
	constant = np.exp(2 * np.pi * abs(spec.z.imag)) * (1 + np.exp(-spec.a)) ** (2 * spec.z.real)
	planned, tail = periodization_terms(
		constant, 2 * spec.z.real, 2 * np.pi, settings.riesz_tol, settings.riesz_max_terms
	)
	if k_max is None:
		k_max = planned
	else:
		tail = 2 * constant * (2 * np.pi) ** (-2 * spec.z.real) * (k_max - 0.5) ** (1 - 2 * spec.z.real)
		tail /= 2 * spec.z.real - 1

	if tail > settings.riesz_tol:
		get_logger().warning("Riesz tail bound %.3g above %.3g with %s terms", tail, settings.riesz_tol, k_max)

	reduced = np.atleast_1d(reduce_frequency(omega, 2 * np.pi))
	shifts = 2 * np.pi * np.arange(-k_max, k_max + 1)
	spectrum = fourier_transform(spec, (reduced[:, None] + shifts[None, :]).ravel(), settings)
	value = (np.abs(spectrum) ** 2).reshape(reduced.size, shifts.size).sum(axis=1)
	if np.ndim(omega) == 0:
		value = float(value[0])
	return PeriodizedSum(value, float(tail), k_max)


def riesz_bounds(spec, grid_size=None, settings=DEFAULT_SETTINGS):
	"""Certified Riesz bounds: A from partial sums (terms are nonnegative), B adds the tail"""
	grid_size = grid_size or settings.riesz_grid
	omega = 2 * np.pi * np.arange(grid_size) / grid_size
	sums = riesz_sum(spec, omega, settings=settings)
	return RieszBounds(float(np.min(sums.value)), float(np.max(sums.value) + sums.tail_bound), sums.tail_bound)


def check_riesz_bounds(spec, grid_size=None, settings=DEFAULT_SETTINGS):
	bounds = riesz_bounds(spec, grid_size, settings)
	return BoundCheckResult(
		"riesz_bounds",
		grid_size or settings.riesz_grid,
		settings.riesz_floor / max(bounds.lower, 1e-300),
		1.0,
		{
			"z": [spec.z.real, spec.z.imag],
			"a": spec.a,
			"lower": bounds.lower,
			"upper": bounds.upper,
			"tail_bound": bounds.tail_bound,
		},
	)


def check_spectrum_factorization(spec, omega_grid, settings=DEFAULT_SETTINGS):
	"""E_z^a^ = E_{Re z}^a^ e^{i Im z ln|Omega|} e^{-Im z Arg Omega}, and its modulus form"""
	omega = np.asarray(omega_grid, dtype=float)
	symbol = omega_symbol(omega, spec.a, settings)
	full = fourier_transform(spec, omega, settings)
	real_order = fourier_transform(SplineSpec(spec.z.real, spec.a), omega, settings)

	nonzero = symbol != 0
	log_modulus = np.log(np.abs(np.where(nonzero, symbol, 1.0)))
	rotation = np.exp(1j * spec.z.imag * log_modulus - spec.z.imag * np.angle(symbol))
	predicted = np.where(nonzero, real_order * rotation, 0)

	scale = np.maximum(1.0, np.abs(full))
	factor_error = float(np.max(np.abs(full - predicted) / scale, initial=0.0))
	modulus_error = float(np.max(np.abs(np.abs(full) - np.abs(predicted)) / scale, initial=0.0))
	return BoundCheckResult(
		"spectrum_factorization",
		omega.size,
		max(factor_error, modulus_error),
		1e-12,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a, "modulus_error": modulus_error},
	)


def fourier_domain_length(spec, settings=DEFAULT_SETTINGS):
	return max(settings.fourier_x_min, 20 / max(spec.a, 0.5))


def _domain_tail(spec, samples, dx, length):
	# |E| beyond X from its envelope on the last unit interval
	per_unit = max(1, int(round(1 / dx)))
	envelope = float(np.max(np.abs(samples[-per_unit:])))
	decay = length / spec.z.real
	if spec.a > 0:
		decay = min(decay, 1 / spec.a)
	return 4 * envelope * decay


def check_fourier_consistency(spec, tol=None, settings=DEFAULT_SETTINGS):
	"""
	DFT of samples on [0, X) against the Poisson image of the symbol.

	The threshold adds the alias tail bound and an estimate of the discarded
	domain tail. The plain distance to the symbol itself is reported too.
	"""
	tol = settings.fourier_tol if tol is None else tol
	dx = settings.fourier_dx
	length = fourier_domain_length(spec, settings)
	n = int(round(length / dx))

	samples = sample(spec, 0.0, dx, n).values
	spectrum = np.fft.fft(samples) * dx
	omega = 2 * np.pi * np.fft.fftfreq(n, dx)

	target = aliased_symbol([(spec.z, spec.a)], omega, dx, settings=settings)
	error = float(np.max(np.abs(spectrum - target.value)))
	domain_tail = _domain_tail(spec, samples, dx, length)
	plain = float(np.max(np.abs(spectrum - fourier_transform(spec, omega, settings))))

	get_logger().debug("fourier consistency z=%s a=%s n=%s error=%.3g", spec.z, spec.a, n, error)
	return BoundCheckResult(
		"fourier_consistency",
		n,
		error,
		tol + float(np.max(target.tail_bound)) + domain_tail,
		{
			"z": [spec.z.real, spec.z.imag],
			"a": spec.a,
			"x_max": length,
			"alias_tail": float(np.max(target.tail_bound)),
			"domain_tail": domain_tail,
			"error_to_symbol": plain,
		},
	)


def check_partition_constant(spec, tol=None, settings=DEFAULT_SETTINGS):
	"""Trapezoid integral over [0, X] against the aliased symbol at 0 (the constant (1 - e^{-a})^z/a^z)"""
	tol = settings.partition_tol if tol is None else tol
	dx = settings.partition_dx
	length = settings.partition_x_max
	n = int(round(length / dx)) + 1

	samples = sample(spec, 0.0, dx, n).values
	integral = dx * (np.sum(samples) - (samples[0] + samples[-1]) / 2)
	target = aliased_symbol([(spec.z, spec.a)], 0.0, dx, settings=settings)
	error = abs(integral - target.value[0])
	domain_tail = _domain_tail(spec, samples, dx, length)

	return BoundCheckResult(
		"partition_constant",
		n,
		float(error),
		tol + float(target.tail_bound[0]) + domain_tail,
		{
			"z": [spec.z.real, spec.z.imag],
			"a": spec.a,
			"domain_tail": domain_tail,
			"error_to_symbol": float(abs(integral - fourier_transform(spec, 0.0, settings))),
		},
	)


def check_decay_bound(spec, settings=DEFAULT_SETTINGS):
	"""|E_z^a(x)| <= e^{-ax}|E_z^0(x)| on [0, X]"""
	dx = settings.fourier_dx
	length = fourier_domain_length(spec, settings)
	x = dx * np.arange(int(round(length / dx)) + 1)

	damped = np.abs(evaluate_time(spec, x))
	plain = np.abs(evaluate_time(SplineSpec(spec.z, 0.0), x))
	excess = damped - np.exp(-spec.a * x) * plain
	return BoundCheckResult(
		"decay_bound", x.size, _violation(excess), settings.inequality_slack, {"z": [spec.z.real, spec.z.imag], "a": spec.a}
	)


def indicator_samples(dx):
	"""Indicator of [0, 1] with half weights at the ends (trapezoid rule)"""
	steps = int(round(1 / dx))
	values = np.ones(steps + 1)
	values[[0, -1]] = 0.5
	return SampledFunction(0.0, dx, values)


def check_classical_reduction(order, dx=1 / 256):
	"""Integer order, a = 0: Cox-de Boor values, and B_n = indicator * B_{n-1} to O(dx^2)"""
	x = dx * np.arange(int(round((order + 1) / dx)) + 1)
	direct = float(np.max(np.abs(evaluate_time(SplineSpec(order, 0.0), x) - classical_bspline(order, x))))

	convolution_error = 0.0
	if order >= 3:
		lower = SampledFunction(0.0, dx, classical_bspline(order - 1, dx * np.arange(int(round(order / dx)) + 1)))
		product = convolve_oracle(indicator_samples(dx), lower)
		convolution_error = float(np.max(np.abs(product.values.real - classical_bspline(order, product.grid))))

	return BoundCheckResult(
		"classical_reduction",
		x.size,
		max(direct / 1e-12, convolution_error / dx**2),
		1.0,
		{"order": order, "direct_error": direct, "convolution_error": convolution_error},
	)


def check_semigroup(first, second, a, dx=1 / 1024, x_max=8.0, tol=1e-4):
	"""E_{z1}^a * E_{z2}^a = E_{z1+z2}^a by direct convolution on [0, x_max]"""
	n = int(round(x_max / dx)) + 1
	left = sample(SplineSpec(first, a), 0.0, dx, n)
	right = sample(SplineSpec(second, a), 0.0, dx, n)
	product = convolve_oracle(left, right).values[:n]
	exact = evaluate_time(SplineSpec(complex(first) + complex(second), a), left.grid)

	return BoundCheckResult(
		"semigroup",
		n,
		float(np.max(np.abs(product - exact))),
		tol,
		{"orders": [[complex(first).real, complex(first).imag], [complex(second).real, complex(second).imag]], "a": a},
	)


def check_riesz_periodicity(spec, points=64, settings=DEFAULT_SETTINGS):
	omega = np.linspace(0, 2 * np.pi, points, endpoint=False)
	here = riesz_sum(spec, omega, settings=settings).value
	there = riesz_sum(spec, omega + 2 * np.pi, settings=settings).value
	return BoundCheckResult(
		"riesz_periodicity",
		points,
		float(np.max(np.abs(here - there))),
		1e-10,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a},
	)


def check_order_recursion(z, x_max=8.0, dx=1 / 32):
	"""B_z(x) = x/(z-1) B_{z-1}(x) + (z-x)/(z-1) B_{z-1}(x-1)"""
	x = dx * np.arange(int(round(x_max / dx)) + 1)
	error = np.abs(evaluate_time(SplineSpec(z, 0.0), x) - complex_bspline_recursion(z, x))
	return BoundCheckResult("order_recursion", x.size, float(np.max(error)), 1e-10, {"z": [complex(z).real, complex(z).imag]})
