# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Operators of complex order: the exponential difference operator, the
multiplier (a + iw)^z of (D + aI)^z and the kernel K_z(x) = x_+^{z-1}/Gamma(z).
"""

import math
from dataclasses import dataclass

import numpy as np

from complex_splines.analysis import BoundCheckResult
from complex_splines.config import DEFAULT_SETTINGS
from complex_splines.exceptions import DomainError, UsageError
from complex_splines.logger import get_logger
from complex_splines.special_functions import binomial_tail_bound, complex_order, gamma, truncated_power
from complex_splines.spline_core import (
	SampledFunction,
	convolve_oracle,
	delta_coefficients,
	evaluate_time,
	fourier_transform,
)


@dataclass(frozen=True)
class OperatorSpec:
	"""Order and decay of an operator; unlike SplineSpec only Re z > 0 is needed"""

	z: complex
	a: float

	def __post_init__(self):
		object.__setattr__(self, "z", complex_order(self.z, lower=0.0))
		if not float(self.a) >= 0:
			raise DomainError("Decay parameter must satisfy a >= 0, got a={0}".format(self.a))
		object.__setattr__(self, "a", float(self.a))


@dataclass(frozen=True, eq=False)
class DeltaTrain:
	coefficients: np.ndarray
	z: complex
	a: float
	tail_bound: float

	@property
	def coefficient_sum(self):
		return complex(np.sum(self.coefficients))

	@property
	def fitted_constant(self):
		"""c in |sum c_l| <= c e^{|z - 1|}"""
		return abs(self.coefficient_sum) / math.exp(abs(self.z - 1))

	def symbol(self, omega):
		"""sum_l c_l e^{-iwl}"""
		omega = np.asarray(omega, dtype=float)
		ell = np.arange(self.coefficients.size)
		return np.exp(-1j * np.multiply.outer(omega, ell)) @ self.coefficients

	def to_dict(self):
		return {
			"z": [self.z.real, self.z.imag],
			"a": self.a,
			"coefficients": [[c.real, c.imag] for c in self.coefficients.tolist()],
			"tail_bound": self.tail_bound,
		}


def delta_train(spec, terms):
	"""Coefficients c_0, ..., c_L of the delta train (D + aI)^z E_z^a"""
	if terms < 0:
		raise UsageError("Delta train needs L >= 0, got {0}".format(terms))
	coefficients = delta_coefficients(spec.z, spec.a, terms + 1)
	coefficients.flags.writeable = False
	return DeltaTrain(coefficients, spec.z, spec.a, binomial_tail_bound(spec.z, spec.a, terms + 1))


def exp_difference(spec, f, terms):
	"""
	sum_{l <= L} binom(z,l)(-1)^l e^{-la} f(. - l), with f taken as 0 left of its grid.

	Accepts a SplineSpec or an OperatorSpec; integer shifts must land on grid points.
	"""
	steps = f.steps_per_unit()
	coefficients = delta_coefficients(spec.z, spec.a, terms + 1)

	result = np.zeros(len(f), dtype=complex)
	for ell, coefficient in enumerate(coefficients):
		shift = ell * steps
		if shift >= len(f):
			break
		result[shift:] += coefficient * f.values[: len(f) - shift]
	return SampledFunction(f.x0, f.dx, result)


def _multiplier(z, a, omega):
	# (a + iw)^z on the principal branch; 0 at the origin for Re z > 0
	w = a + 1j * np.asarray(omega, dtype=float)
	z = complex(z)
	origin = w == 0
	if z == 0:
		return np.ones(w.shape, dtype=complex)
	if np.any(origin) and z.real <= 0:
		raise DomainError("Multiplier (a + iw)^z is singular at a=0, w=0 for z={0}".format(z))

	result = np.zeros(w.shape, dtype=complex)
	result[~origin] = np.exp(z * np.log(w[~origin]))
	return result


def fractional_derivative_symbol(z, a, omega):
	"""Multiplier (a + iw)^z of (D + aI)^z"""
	z = complex_order(z, lower=0.0)
	if not a >= 0:
		raise DomainError("Decay parameter must satisfy a >= 0, got a={0}".format(a))
	value = _multiplier(z, a, np.atleast_1d(omega))
	return complex(value[0]) if np.ndim(omega) == 0 else value


def apply_fractional(z_op, a, f, settings=DEFAULT_SETTINGS):
	"""
	Apply (D + aI)^{z_op} to sampled data by its Fourier multiplier.

	The data are zero padded to `fft_padding` times their length; the right
	edge must have decayed below `decay_tol`.
	"""
	edge = abs(complex(f.values[-1]))
	if edge > settings.decay_tol:
		raise UsageError(
			"Samples have not decayed at the right edge: |f|={0:.3g} above {1:.3g}".format(edge, settings.decay_tol)
		)

	size = settings.fft_padding * len(f)
	padded = np.zeros(size, dtype=complex)
	padded[: len(f)] = f.values
	omega = 2 * np.pi * np.fft.fftfreq(size, f.dx)

	transformed = np.fft.ifft(_multiplier(z_op, a, omega) * np.fft.fft(padded))
	return SampledFunction(f.x0, f.dx, transformed[: len(f)])


def kernel_kz(z, x):
	"""K_z(x) = x_+^{z-1}/Gamma(z)"""
	z = complex_order(z, lower=0.0)
	return truncated_power(x, z - 1) / gamma(z)


def verify_delta_identity(spec, terms=None, omega_grid=None, tol=None, settings=DEFAULT_SETTINGS):
	"""
	(a + iw)^z E_z^a^(w) against the truncated delta-train symbol.

	Passes when the residual stays below tol plus the coefficient tail; also
	reports the coefficient sum (1 - e^{-a})^z and the fitted constant c.
	"""
	terms = settings.delta_terms if terms is None else terms
	tol = settings.delta_tol if tol is None else tol
	omega = np.linspace(-20, 20, 4001) if omega_grid is None else np.asarray(omega_grid, dtype=float)

	train = delta_train(spec, terms)
	lhs = _multiplier(spec.z, spec.a, omega) * fourier_transform(spec, omega, settings)
	residual = float(np.max(np.abs(lhs - train.symbol(omega))))
	if train.tail_bound > tol:
		get_logger().warning("Delta train tail %.3g above %.3g at L=%s", train.tail_bound, tol, terms)

	return BoundCheckResult(
		"delta_identity",
		omega.size,
		residual,
		tol + train.tail_bound,
		{
			"z": [spec.z.real, spec.z.imag],
			"a": spec.a,
			"terms": terms,
			"tail_bound": train.tail_bound,
			"coefficient_sum": [train.coefficient_sum.real, train.coefficient_sum.imag],
			"fitted_constant": train.fitted_constant,
		},
	)


def check_exp_difference_reproduces_spline(spec, dx=1 / 64, x_max=10.0, tol=1e-8):
	"""exp_difference applied to e^{-ax} K_z gives back E_z^a (the time series restated)"""
	steps = int(round(x_max / dx)) + 1
	x = dx * np.arange(steps)
	damped_kernel = SampledFunction(0.0, dx, np.exp(-spec.a * x) * kernel_kz(spec.z, x))

	produced = exp_difference(spec, damped_kernel, int(math.floor(x_max)) + 1)
	error = float(np.max(np.abs(produced.values - evaluate_time(spec, x))))
	return BoundCheckResult(
		"exp_difference", steps, error, tol, {"z": [spec.z.real, spec.z.imag], "a": spec.a}
	)


def check_kernel_semigroup(z, zeta, x_max=4.0, dx=1 / 256, tol=None):
	"""K_z * K_zeta = K_{z+zeta} by direct convolution; error O(dx) relative to max|K_{z+zeta}|"""
	n = int(round(x_max / dx)) + 1
	x = dx * np.arange(n)
	product = convolve_oracle(
		SampledFunction(0.0, dx, kernel_kz(z, x)), SampledFunction(0.0, dx, kernel_kz(zeta, x))
	).values[:n]
	exact = kernel_kz(complex(z) + complex(zeta), x)
	scale = float(np.max(np.abs(exact)))
	tol = 10 * dx * scale if tol is None else tol
	return BoundCheckResult(
		"kernel_semigroup",
		n,
		float(np.max(np.abs(product - exact))),
		tol,
		{"orders": [[complex(z).real, complex(z).imag], [complex(zeta).real, complex(zeta).imag]]},
	)


def check_kernel_pairing(z, a, dx=1 / 128, x_min=-8.0, x_max=40.0, sigma=0.5, tol=1e-4, settings=DEFAULT_SETTINGS):
	"""
	(D + aI)^z [e^{-a.} K_z] is the unit impulse at 0.

	Paired with a unit-height Gaussian centred at 0 the result must be 1.
	"""
	n = int(round((x_max - x_min) / dx)) + 1
	x = x_min + dx * np.arange(n)
	damped_kernel = SampledFunction(x_min, dx, np.exp(-a * np.maximum(x, 0)) * kernel_kz(z, x))

	impulse = apply_fractional(z, a, damped_kernel, settings)
	pairing = complex(dx * np.sum(impulse.values * np.exp(-(x**2) / (2 * sigma**2))))
	return BoundCheckResult(
		"kernel_pairing",
		n,
		abs(pairing - 1),
		tol,
		{"z": [complex(z).real, complex(z).imag], "a": a, "pairing": [pairing.real, pairing.imag]},
	)


def check_symbol_semigroup(z, zeta, a, omega_grid):
	"""(a + iw)^z (a + iw)^zeta = (a + iw)^{z+zeta} on the right half-plane"""
	omega = np.asarray(omega_grid, dtype=float)
	product = fractional_derivative_symbol(z, a, omega) * fractional_derivative_symbol(zeta, a, omega)
	combined = fractional_derivative_symbol(complex(z) + complex(zeta), a, omega)
	error = np.abs(product - combined) / np.maximum(1.0, np.abs(combined))
	return BoundCheckResult("symbol_semigroup", omega.size, float(np.max(error)), 1e-12, {"a": a})

