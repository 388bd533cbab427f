# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Two-scale structure: the low-pass filter, the refinement identity
E_z^{2a}(x) = 2 sum_k h_k E_z^a(2x - k) with h_k = 2^{-z} binom(z,k) e^{-ak},
and the wavelet built from it.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate

from complex_splines.analysis import BoundCheckResult, PeriodizedSum, periodization_terms, reduce_frequency
from complex_splines.config import DEFAULT_SETTINGS, PERIOD_CONVENTIONS
from complex_splines.exceptions import DegeneracyError, UsageError
from complex_splines.logger import get_logger
from complex_splines.special_functions import binomial_sequence, binomial_tail_bound
from complex_splines.spline_core import SplineSpec, evaluate_time, fourier_transform, symbol_power

# irrational excess in nodes per period; with half-step nodes no node lands on a multiple of the period
NODE_OFFSET = (3 - 5**0.5) / 2
QUADRATURE_CHUNK = 1024


@dataclass(frozen=True, eq=False)
class FilterCoefficients:
	weights: np.ndarray
	z: complex
	a: float
	tail_bound: float

	def symbol(self, omega):
		"""sum_k weights[k] e^{-iwk}"""
		omega = np.asarray(omega, dtype=float)
		k = np.arange(self.weights.size)
		return np.exp(-1j * np.multiply.outer(omega, k)) @ self.weights

	def to_dict(self):
		return {
			"z": [self.z.real, self.z.imag],
			"a": self.a,
			"weights": [[w.real, w.imag] for w in self.weights.tolist()],
			"tail_bound": self.tail_bound,
		}


@dataclass(frozen=True, eq=False)
class WaveletSpec:
	base: SplineSpec
	filter: FilterCoefficients
	period: float = PERIOD_CONVENTIONS["unit"]
	gain: float = 1.0

	def __post_init__(self):
		if self.filter.z != self.base.z or self.filter.a != self.base.a:
			raise UsageError(
				"Filter for z={0}, a={1} does not belong to z={2}, a={3}".format(
					self.filter.z, self.filter.a, self.base.z, self.base.a
				)
			)
		if not self.period > 0 or not self.gain > 0:
			raise UsageError("Wavelet period and gain must be positive")

	@classmethod
	def from_spec(cls, spec, settings=DEFAULT_SETTINGS, gain=1.0, period=None):
		period = settings.period if period is None else period
		return cls(spec, lowpass_filter(spec, settings.filter_tol, settings), period, gain)


def scale_symbol(spec, omega, settings=DEFAULT_SETTINGS):
	"""G(w) = ((1 + e^{-(a+iw)})/2)^z, so that E_z^{2a}^(2w) = G(w) E_z^a^(w)"""
	omega = np.asarray(omega, dtype=float)
	return symbol_power((1 + np.exp(-(spec.a + 1j * omega))) / 2, spec.z, settings)


def lowpass_filter(spec, tol, settings=DEFAULT_SETTINGS):
	if not tol > 0:
		raise UsageError("Filter tolerance must be positive, got {0}".format(tol))
	return _lowpass_filter(spec, float(tol), settings.filter_max_terms)


@lru_cache(maxsize=256)
def _lowpass_filter(spec, tol, cap):
	z, a = spec.z, spec.a
	target = tol * 2**z.real
	# shortest length searched; the tail bound itself holds from any index
	start = int(max(2 * abs(z) + 2, abs(z) ** 2 / (2 * (1 + z.real)) + 1))

	length, tail = start, binomial_tail_bound(z, a, start)
	while tail >= target and length < cap:
		length = min(cap, length * 2)
		tail = binomial_tail_bound(z, a, length)
	if tail < target:
		low, high = start, length
		while low < high:
			middle = (low + high) // 2
			if binomial_tail_bound(z, a, middle) < target:
				high = middle
			else:
				low = middle + 1
		length, tail = low, binomial_tail_bound(z, a, low)
	else:
		get_logger().warning("Filter for z=%s a=%s capped at %s terms, tail %.3g", z, a, cap, tail)

	k = np.arange(length)
	weights = 2.0 ** (-z) * binomial_sequence(z, length - 1) * np.exp(-a * k)
	nonzero = np.flatnonzero(np.abs(weights) > 0)
	if tail == 0.0 and nonzero.size:
		weights = weights[: nonzero[-1] + 1]

	weights.flags.writeable = False
	get_logger().debug("low-pass filter z=%s a=%s: %s taps, tail %.3g", z, a, weights.size, tail)
	return FilterCoefficients(weights, z, a, float(2 ** (-z.real) * tail))


def refine(spec, x, settings=DEFAULT_SETTINGS):
	"""Right-hand side 2 sum_k h_k E_z^a(2x - k) of the two-scale relation"""
	x = np.asarray(x, dtype=float)
	filt = lowpass_filter(spec, settings.filter_tol, settings)
	active = min(filt.weights.size, int(np.floor(2 * np.max(x, initial=0.0))) + 1)

	total = np.zeros(x.shape, dtype=complex)
	for k in range(active):
		total = total + filt.weights[k] * evaluate_time(spec, 2 * x - k)
	return 2 * total


def check_two_scale(spec, x_max=None, dx=None, tol=None, settings=DEFAULT_SETTINGS):
	"""E_z^{2a}(x) against the refined sum on [0, x_max]"""
	x_max = settings.two_scale_x_max if x_max is None else x_max
	dx = settings.two_scale_dx if dx is None else dx
	tol = settings.two_scale_tol if tol is None else tol
	x = dx * np.arange(int(round(x_max / dx)) + 1)

	coarse = evaluate_time(SplineSpec(spec.z, 2 * spec.a), x)
	fine = refine(spec, x, settings)
	filt = lowpass_filter(spec, settings.filter_tol, settings)

	# taps past 2x meet E_z^a on its zero half-line, so truncation only shows below that
	truncation = 0.0
	if filt.weights.size <= 2 * x_max:
		truncation = 2 * filt.tail_bound * float(np.max(np.abs(evaluate_time(spec, 2 * x))))

	return BoundCheckResult(
		"two_scale",
		x.size,
		float(np.max(np.abs(coarse - fine))),
		tol + truncation,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a, "taps": int(filt.weights.size)},
	)


def check_nested_spaces(spec, omega_grid, settings=DEFAULT_SETTINGS):
	"""E_z^{2a}^(2w) = H(w) E_z^a^(w) with the truncated filter symbol H"""
	omega = np.asarray(omega_grid, dtype=float)
	filt = lowpass_filter(spec, settings.filter_tol, settings)

	base = fourier_transform(spec, omega, settings)
	coarse = fourier_transform(SplineSpec(spec.z, 2 * spec.a), 2 * omega, settings)
	error = np.abs(coarse - filt.symbol(omega) * base) - filt.tail_bound * np.abs(base)
	return BoundCheckResult(
		"nested_spaces",
		omega.size,
		float(np.max(error)),
		1e-10,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a, "tail_bound": filt.tail_bound},
	)


def check_filter_mass(spec, settings=DEFAULT_SETTINGS):
	filt = lowpass_filter(spec, settings.filter_tol, settings)
	error = abs(complex(np.sum(filt.weights)) - complex(scale_symbol(spec, 0.0, settings)))
	return BoundCheckResult(
		"filter_mass",
		filt.weights.size,
		float(error),
		filt.tail_bound + 1e-13,
		{"z": [spec.z.real, spec.z.imag], "a": spec.a},
	)


def check_scaling_function_conditions(spec, settings=DEFAULT_SETTINGS):
	"""E_z^a^ is continuous at 0 (symmetric limits shrink) and E_z^a^(0) != 0"""
	at_zero = complex(fourier_transform(spec, 0.0, settings))
	steps = np.array([1e-3, 1e-5, 1e-7])
	jumps = np.array(
		[
			max(
				abs(complex(fourier_transform(spec, h, settings)) - at_zero),
				abs(complex(fourier_transform(spec, -h, settings)) - at_zero),
			)
			for h in steps
		]
	)
	shrinking = bool(np.all(np.diff(jumps) <= 0)) and jumps[-1] < 1e-5
	violation = 0.0 if shrinking and abs(at_zero) > 1e-6 else 1.0
	return BoundCheckResult(
		"scaling_function_conditions",
		steps.size,
		violation,
		0.0,
		{"value_at_zero": [at_zero.real, at_zero.imag], "jumps": jumps.tolist()},
	)


def mother_wavelet_symbol(w, omega, settings=DEFAULT_SETTINGS):
	"""theta^(w) = gain e^{-iw/2} conj(G(w/2 + pi)) E_z^a^(w/2)"""
	omega = np.asarray(omega, dtype=float)
	half = omega / 2
	mirror = np.conj(scale_symbol(w.base, half + np.pi, settings))
	return w.gain * np.exp(-1j * half) * mirror * fourier_transform(w.base, half, settings)


def _autocorrelation_tail(w):
	# |theta^(v)|^2 <= gain^2 e^{3 pi |Im z|} (2 (1 + e^{-a}))^{2 Re z} |v|^{-2 Re z}
	sigma = w.base.z.real
	constant = w.gain**2 * np.exp(3 * np.pi * abs(w.base.z.imag)) * (2 * (1 + np.exp(-w.base.a))) ** (2 * sigma)
	return constant, 2 * sigma


def autocorrelation(w, omega, k_max=None, settings=DEFAULT_SETTINGS):
	"""R(w) = sum_k |theta^(w + k p)|^2, evaluated at w reduced modulo the period p"""
	constant, exponent = _autocorrelation_tail(w)
	planned, tail = periodization_terms(constant, exponent, w.period, settings.riesz_tol, settings.riesz_max_terms)
	if k_max is None:
		k_max = planned
	else:
		tail = 2 * constant * w.period ** (-exponent) * (k_max - 0.5) ** (1 - exponent) / (exponent - 1)

	reduced = np.atleast_1d(reduce_frequency(omega, w.period))
	shifts = w.period * np.arange(-k_max, k_max + 1)
	theta = mother_wavelet_symbol(w, (reduced[:, None] + shifts[None, :]).ravel(), settings)
	value = (np.abs(theta) ** 2).reshape(reduced.size, shifts.size).sum(axis=1)
	if np.ndim(omega) == 0:
		value = float(value[0])
	return PeriodizedSum(value, float(tail), k_max)


def orthonormalized_wavelet_symbol(w, omega, settings=DEFAULT_SETTINGS):
	"""psi^ = theta^ / sqrt(R)"""
	omega = np.asarray(omega, dtype=float)
	correlation = np.asarray(autocorrelation(w, omega, settings=settings).value)
	low = correlation < settings.degeneracy_threshold
	if np.any(low):
		raise DegeneracyError(
			"Autocorrelation below {0}".format(settings.degeneracy_threshold),
			omega=float(np.atleast_1d(omega)[np.argmax(np.atleast_1d(low))]),
			value=float(np.min(correlation)),
		)
	return mother_wavelet_symbol(w, omega, settings) / np.sqrt(correlation)


def check_wavelet_orthonormality(
	w, shifts=(0, 1, 2), nodes_per_period=64, window_periods=256, settings=DEFAULT_SETTINGS
):
	"""
	<psi, psi(. - 2 pi k/p)> against (p/2pi) delta_{k0}, reported divided by p/2pi.

	The inner products are (1/2pi) integral |psi^(w)|^2 e^{iwt} dw, taken by the
	trapezoid rule on [-W, W] with W = window_periods p. psi^ comes from
	orthonormalized_wavelet_symbol at nodes off every multiple of p, so the
	periodization behind it is not reused. The slack adds the mass outside the
	window and the autocorrelation truncation, both relative to min R.
	Only the standard period 2 pi makes these the integer translates; for other
	periods the integer-shift inner products are reported alongside.
	"""
	p = w.period
	step = p / (nodes_per_period + NODE_OFFSET)
	window = window_periods * p
	count = int(np.ceil(window / step))
	omega = step * (np.arange(-count, count) + 0.5)

	energy = np.empty(omega.size)
	for start in range(0, omega.size, QUADRATURE_CHUNK):
		chunk = omega[start : start + QUADRATURE_CHUNK]
		energy[start : start + chunk.size] = np.abs(orthonormalized_wavelet_symbol(w, chunk, settings)) ** 2

	def inner(t):
		return complex(integrate.trapezoid(energy * np.exp(1j * omega * t), dx=step)) / (2 * np.pi)

	products = {}
	violation = 0.0
	for k in shifts:
		value = inner(2 * np.pi * k / p) * 2 * np.pi / p
		products[str(k)] = [value.real, value.imag]
		violation = max(violation, abs(value - (1.0 if k == 0 else 0.0)))

	cells = p * (np.arange(nodes_per_period) + 0.5) / nodes_per_period
	correlation = autocorrelation(w, cells, settings=settings)
	floor = max(float(np.min(correlation.value)), settings.degeneracy_threshold)
	constant, exponent = _autocorrelation_tail(w)
	outside = 2 * constant * window ** (1 - exponent) / ((exponent - 1) * floor)
	slack = settings.orthonormality_tol + outside / p + correlation.tail_bound / floor

	details = {
		"z": [w.base.z.real, w.base.z.imag],
		"a": w.base.a,
		"period": p,
		"translate_step": 2 * np.pi / p,
		"inner_products": products,
		"nodes": int(omega.size),
	}
	if not np.isclose(p, PERIOD_CONVENTIONS["standard"]):
		literal = {str(k): inner(float(k)) for k in shifts}
		details["integer_shift_inner_products"] = {k: [v.real, v.imag] for k, v in literal.items()}

	return BoundCheckResult("wavelet_orthonormality", omega.size, violation, slack, details)
