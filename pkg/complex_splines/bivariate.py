# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Two-parameter splines E_{(z,zeta)}^{(a,b)} = E_z^a * E_zeta^b.

Time domain:
	1/Gamma(z+zeta) sum_k beta_k (-1)^k e^{-bx} M(z, z+zeta; -(a-b)(x-k)) (x-k)_+^{z+zeta-1}
with the bracket beta_k = sum_l binom(z,l) binom(zeta,k-l) e^{-l(a-b)}
= binom(zeta,k) 2F1(-k, -z; 1-k+zeta; e^{-(a-b)}).
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from complex_splines.analysis import BoundCheckResult
from complex_splines.config import DEFAULT_SETTINGS
from complex_splines.exceptions import DomainError
from complex_splines.logger import get_logger
from complex_splines.special_functions import (
	binomial,
	binomial_sequence,
	complex_order,
	gamma,
	gauss_2f1_terminating,
	kummer_m,
	truncated_power,
)
from complex_splines.spline_core import (
	SplineSpec,
	aliased_symbol,
	convolve_oracle,
	evaluate_time,
	fourier_transform,
	sample,
)


@dataclass(frozen=True)
class BivariateSpec:
	z: complex
	zeta: complex
	a: float
	b: float

	def __post_init__(self):
		object.__setattr__(self, "z", complex_order(self.z))
		object.__setattr__(self, "zeta", complex_order(self.zeta))
		for name in ("a", "b"):
			value = float(getattr(self, name))
			if not (math.isfinite(value) and value >= 0):
				raise DomainError("Decay parameter must satisfy {0} >= 0, got {0}={1}".format(name, value))
			object.__setattr__(self, name, value)

	@property
	def factors(self):
		return [(self.z, self.a), (self.zeta, self.b)]

	def swapped(self):
		return BivariateSpec(self.zeta, self.z, self.b, self.a)

	def to_dict(self):
		return {"z": [self.z.real, self.z.imag], "zeta": [self.zeta.real, self.zeta.imag], "a": self.a, "b": self.b}


class Brackets(NamedTuple):
	values: np.ndarray
	fallback: np.ndarray


def bivariate_fourier(spec, omega, settings=DEFAULT_SETTINGS):
	"""Omega(w, a)^z Omega(w, b)^zeta"""
	return fourier_transform(SplineSpec(spec.z, spec.a), omega, settings) * fourier_transform(
		SplineSpec(spec.zeta, spec.b), omega, settings
	)


def bracket_double_binomial(spec, terms):
	"""beta_k for k < terms as the Cauchy product of the two binomial sequences"""
	ratio = np.exp(-(spec.a - spec.b) * np.arange(terms))
	first = binomial_sequence(spec.z, terms - 1) * ratio
	second = binomial_sequence(spec.zeta, terms - 1)
	return np.convolve(first, second)[:terms]


def bracket_2f1(spec, terms):
	"""
	beta_k through the terminating 2F1.

	Where a Pochhammer factor of 1-k+zeta vanishes the double-binomial value
	is used instead and flagged.
	"""
	ratio = math.exp(-(spec.a - spec.b))
	values = np.empty(terms, dtype=complex)
	fallback = np.zeros(terms, dtype=bool)
	direct = None

	for k in range(terms):
		try:
			values[k] = binomial(spec.zeta, k) * gauss_2f1_terminating(k, -spec.z, 1 - k + spec.zeta, ratio)
		except DomainError:
			if direct is None:
				direct = bracket_double_binomial(spec, terms)
			values[k] = direct[k]
			fallback[k] = True

	if np.any(fallback):
		get_logger().warning(
			"2F1 bracket degenerate for zeta=%s at k=%s, used the double-binomial sum",
			spec.zeta,
			np.flatnonzero(fallback).tolist(),
		)
	return Brackets(values, fallback)


def _evaluate(spec, x, brackets):
	total = np.zeros(x.shape, dtype=complex)
	order = spec.z + spec.zeta
	decay = spec.a - spec.b

	for k, bracket in enumerate(brackets):
		shifted = x - k
		active = shifted > 0
		if not np.any(active):
			break
		kummer = kummer_m(spec.z, order, -decay * shifted[active])
		total[active] += (
			bracket
			* (-1) ** k
			* np.exp(-spec.b * x[active])
			* kummer
			* truncated_power(shifted[active], order - 1)
		)
	return total / gamma(order)


def _prepare(x, terms):
	x = np.asarray(x, dtype=float)
	scalar = x.ndim == 0
	x = np.atleast_1d(x)
	if terms is None:
		terms = int(math.floor(np.max(x, initial=0.0))) + 1
	return x, scalar, terms


def bivariate_time_kummer(spec, x, terms=None):
	if spec.a == spec.b:
		return evaluate_time(SplineSpec(spec.z + spec.zeta, spec.a), x, terms)

	x, scalar, terms = _prepare(x, terms)
	result = _evaluate(spec, x, bracket_double_binomial(spec, terms))
	return complex(result[0]) if scalar else result


def bivariate_time_2f1(spec, x, terms=None):
	if spec.a == spec.b:
		return evaluate_time(SplineSpec(spec.z + spec.zeta, spec.a), x, terms)

	x, scalar, terms = _prepare(x, terms)
	result = _evaluate(spec, x, bracket_2f1(spec, terms).values)
	return complex(result[0]) if scalar else result


def check_bracket_forms(spec, x_max=12.0, dx=1 / 16, tol=1e-10):
	"""Kummer form with either bracket agrees pointwise"""
	x = dx * np.arange(int(round(x_max / dx)) + 1)
	kummer = bivariate_time_kummer(spec, x)
	hypergeometric = bivariate_time_2f1(spec, x)
	scale = max(1.0, float(np.max(np.abs(kummer))))
	return BoundCheckResult(
		"bivariate_bracket_forms",
		x.size,
		float(np.max(np.abs(kummer - hypergeometric))) / scale,
		tol,
		spec.to_dict(),
	)


def check_commutativity(spec, x_max=12.0, dx=1 / 16, tol=1e-8):
	"""E_{(z,zeta)}^{(a,b)} = E_{(zeta,z)}^{(b,a)}"""
	x = dx * np.arange(int(round(x_max / dx)) + 1)
	error = np.abs(bivariate_time_kummer(spec, x) - bivariate_time_kummer(spec.swapped(), x))
	return BoundCheckResult("bivariate_commutativity", x.size, float(np.max(error)), tol, spec.to_dict())


def check_convolution(spec, x_max=8.0, dx=1 / 512, tol=1e-4):
	"""Closed form against the sampled convolution E_z^a * E_zeta^b on [0, x_max]"""
	n = int(round(x_max / dx)) + 1
	left = sample(SplineSpec(spec.z, spec.a), 0.0, dx, n)
	right = sample(SplineSpec(spec.zeta, spec.b), 0.0, dx, n)
	product = convolve_oracle(left, right).values[:n]
	error = np.abs(product - bivariate_time_kummer(spec, left.grid))
	return BoundCheckResult("bivariate_convolution", n, float(np.max(error)), tol, spec.to_dict())


def check_fourier(spec, x_max=40.0, dx=1 / 64, tol=1e-4, settings=DEFAULT_SETTINGS):
	"""
	DFT and trapezoid integral of the closed form against the aliased product symbol.
	"""
	n = int(round(x_max / dx))
	x = dx * np.arange(n)
	values = bivariate_time_kummer(spec, x)

	omega = 2 * np.pi * np.fft.fftfreq(n, dx)
	target = aliased_symbol(spec.factors, omega, dx, settings=settings)
	error = float(np.max(np.abs(np.fft.fft(values) * dx - target.value)))

	per_unit = int(round(1 / dx))
	envelope = float(np.max(np.abs(values[-per_unit:])))
	decay = x_max / (spec.z.real + spec.zeta.real)
	if min(spec.a, spec.b) > 0:
		decay = min(decay, 1 / min(spec.a, spec.b))
	domain_tail = 4 * envelope * decay

	integral = dx * (np.sum(values) - values[0] / 2)
	integral_error = abs(integral - target.value[0]) if n else 0.0
	return BoundCheckResult(
		"bivariate_fourier",
		n,
		max(error, float(integral_error)),
		tol + float(np.max(target.tail_bound)) + domain_tail,
		dict(spec.to_dict(), alias_tail=float(np.max(target.tail_bound)), domain_tail=domain_tail),
	)
