# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Exponential B-splines of complex order: the Fourier symbol Omega(w, a)^z, the
time-domain series and the sampled-function plumbing the oracles share.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import signal

from complex_splines.config import DEFAULT_SETTINGS
from complex_splines.exceptions import DomainError, NumericError, UsageError
from complex_splines.logger import get_logger
from complex_splines.special_functions import binomial_sequence, complex_order, gamma, truncated_power

# below this modulus the argument of Omega near a zero of the symbol is set by rounding, not by the branch
BRANCH_CHECK_FLOOR = 1e-10


@dataclass(frozen=True)
class SplineSpec:
	z: complex
	a: float

	def __post_init__(self):
		object.__setattr__(self, "z", complex_order(self.z))
		a = float(self.a)
		if not (math.isfinite(a) and a >= 0):
			raise DomainError("Decay parameter must satisfy a >= 0, got a={0}".format(self.a))
		object.__setattr__(self, "a", a)


@dataclass(frozen=True, eq=False)
class SampledFunction:
	x0: float
	dx: float
	values: np.ndarray

	def __post_init__(self):
		if not self.dx > 0:
			raise UsageError("Grid step must be positive, got dx={0}".format(self.dx))
		values = np.array(self.values, dtype=complex).ravel()
		if values.size == 0:
			raise UsageError("A sampled function needs at least one value")
		if not np.all(np.isfinite(values)):
			raise NumericError("Sampled values are not finite", first=int(np.argmin(np.isfinite(values))))
		values.flags.writeable = False
		object.__setattr__(self, "x0", float(self.x0))
		object.__setattr__(self, "dx", float(self.dx))
		object.__setattr__(self, "values", values)

	def __len__(self):
		return self.values.size

	@property
	def grid(self):
		return self.x0 + self.dx * np.arange(self.values.size)

	def steps_per_unit(self):
		"""1/dx as an integer, or UsageError when the grid does not hit the integers"""
		steps = round(1 / self.dx)
		if steps < 1 or abs(1 / self.dx - steps) > 1e-9 * steps:
			raise UsageError("1/dx must be an integer on this grid, got dx={0}".format(self.dx))
		return steps


class TruncationPlan(NamedTuple):
	terms: int
	tail_bound: float


class AliasedSymbol(NamedTuple):
	value: np.ndarray
	tail_bound: np.ndarray


def _taylor_omega(w, terms):
	# (1 - e^{-w})/w = sum_n (-w)^n / (n+1)!
	total = np.zeros(w.shape, dtype=complex)
	term = np.ones(w.shape, dtype=complex)
	for n in range(terms):
		total = total + term
		term = term * (-w) / (n + 2)
	return total


def omega_symbol(omega, a, settings=DEFAULT_SETTINGS):
	"""Omega(w, a) = (1 - e^{-(a+iw)})/(a+iw), continued by 1 at the origin"""
	if not a >= 0:
		raise DomainError("Omega(w, a) needs a >= 0, got a={0}".format(a))

	omega = np.asarray(omega, dtype=float)
	scalar = omega.ndim == 0
	w = np.atleast_1d(a + 1j * omega)

	small = np.abs(w) < settings.taylor_radius
	safe = np.where(small, 1.0, w)
	result = np.where(small, _taylor_omega(w, settings.taylor_terms), -np.expm1(-safe) / safe)
	return complex(result[0]) if scalar else result


def omega_real_imag(omega, a):
	"""Real and imaginary part of Omega(w, a) in closed form"""
	if not a > 0:
		raise DomainError("The closed forms f, g need a > 0, got a={0}".format(a))

	omega = np.asarray(omega, dtype=float)
	decay = np.exp(-a)
	denominator = a * a + omega * omega
	f = (a - decay * (a * np.cos(omega) - omega * np.sin(omega))) / denominator
	g = (-omega + decay * (omega * np.cos(omega) + a * np.sin(omega))) / denominator
	return f, g


def symbol_power(base, z, settings=DEFAULT_SETTINGS):
	"""base^z on the principal branch, 0 where base vanishes, with a branch assertion"""
	base = np.asarray(base, dtype=complex)
	scalar = base.ndim == 0
	base = np.atleast_1d(base)

	# next to a zero at 2 pi k the argument sits within pi k |base| of the cut
	significant = np.abs(base) > max(BRANCH_CHECK_FLOOR, settings.branch_margin)
	angles = np.angle(base[significant])
	if angles.size and np.max(np.abs(angles)) >= np.pi - settings.branch_margin:
		raise NumericError("Symbol crossed the branch cut", z=z, arg=float(angles[np.argmax(np.abs(angles))]))

	nonzero = base != 0
	result = np.zeros(base.shape, dtype=complex)
	result[nonzero] = np.exp(complex(z) * np.log(base[nonzero]))
	return complex(result[0]) if scalar else result


def fourier_transform(spec, omega, settings=DEFAULT_SETTINGS):
	return symbol_power(omega_symbol(omega, spec.a, settings), spec.z, settings)


def product_fourier(orders, params, omega, settings=DEFAULT_SETTINGS):
	"""Fourier transform of the convolution of E_{z_j}^{a_j}: the product of the symbols"""
	if len(orders) != len(params) or not orders:
		raise UsageError("Need as many decay parameters as orders, got {0} and {1}".format(len(orders), len(params)))

	result = None
	for z, a in zip(orders, params):
		factor = fourier_transform(SplineSpec(z, a), omega, settings)
		result = factor if result is None else result * factor
	return result


def plan_truncation(spec, x_max, tol):
	"""Terms of the time series needed on [0, x_max]; the tail vanishes identically past that"""
	if not tol > 0:
		raise UsageError("Tolerance must be positive, got {0}".format(tol))
	if not x_max > 0:
		raise UsageError("x_max must be positive, got {0}".format(x_max))
	return TruncationPlan(terms=int(math.floor(x_max)) + 1, tail_bound=0.0)


def delta_coefficients(z, a, terms):
	"""c_l = binom(z, l)(-1)^l e^{-la} for l < terms"""
	ell = np.arange(terms)
	return binomial_sequence(z, terms - 1) * (-1.0) ** ell * np.exp(-a * ell)


def evaluate_time(spec, x, terms=None):
	"""
	E_z^a(x) = 1/Gamma(z) sum_l binom(z,l)(-1)^l e^{-la} e^{-a(x-l)}_+ (x-l)_+^{z-1}.

	Every term vanishes for l >= x, so the sum is finite and exact; `terms`
	overrides the planned count.
	"""
	x = np.asarray(x, dtype=float)
	scalar = x.ndim == 0
	x = np.atleast_1d(x)

	if terms is None:
		x_max = float(np.max(x)) if x.size else 0.0
		terms = plan_truncation(spec, x_max, 1.0).terms if x_max > 0 else 0

	result = np.zeros(x.shape, dtype=complex)
	coefficients = delta_coefficients(spec.z, spec.a, terms) if terms else ()
	for ell, coefficient in enumerate(coefficients):
		shifted = x - ell
		active = shifted > 0
		if not np.any(active):
			break
		result[active] += (
			coefficient * np.exp(-spec.a * shifted[active]) * truncated_power(shifted[active], spec.z - 1)
		)

	result = result / gamma(spec.z)
	return complex(result[0]) if scalar else result


def sample(spec, x0, dx, n):
	if not dx > 0 or n < 1:
		raise UsageError("Sampling needs dx > 0 and n >= 1, got dx={0}, n={1}".format(dx, n))
	grid = x0 + dx * np.arange(n)
	get_logger().debug("sampling z=%s a=%s on %s points from %s", spec.z, spec.a, n, x0)
	return SampledFunction(x0, dx, evaluate_time(spec, grid))


def convolve_oracle(f, g):
	"""dx-scaled discrete convolution of two samples on the same step"""
	if not math.isclose(f.dx, g.dx, rel_tol=1e-12):
		raise UsageError("Cannot convolve samples with dx={0} and dx={1}".format(f.dx, g.dx))
	values = signal.fftconvolve(f.values, g.values) * f.dx
	return SampledFunction(f.x0 + g.x0, f.dx, values)


def classical_bspline(n, x):
	"""Cardinal B_n on [0, n] by the Cox-de Boor recursion, B_1 = indicator of [0, 1)"""
	if int(n) != n or n < 1:
		raise DomainError("Classical B-spline order must be a positive integer, got {0}".format(n))

	x = np.asarray(x, dtype=float)
	previous = [((x - k >= 0) & (x - k < 1)).astype(float) for k in range(int(n))]
	for order in range(2, int(n) + 1):
		previous = [
			((x - k) * previous[k] + (order - (x - k)) * previous[k + 1]) / (order - 1)
			for k in range(int(n) - order + 1)
		]
	return previous[0]


def complex_bspline_recursion(z, x):
	"""Right-hand side x/(z-1) B_{z-1}(x) + (z-x)/(z-1) B_{z-1}(x-1) of the order recursion"""
	lower = SplineSpec(complex_order(z, lower=2.0) - 1, 0.0)
	x = np.asarray(x, dtype=float)
	return (x * evaluate_time(lower, x) + (lower.z + 1 - x) * evaluate_time(lower, x - 1)) / lower.z


def _nyquist_terms(dx):
	steps = round(1 / dx)
	return steps >= 1 and abs(1 / dx - steps) <= 1e-9 * steps


def aliased_symbol(factors, omega, dx, terms=None, settings=DEFAULT_SETTINGS):
	"""
	Poisson image sum_m F(w + 2 pi m/dx) of a product of symbols F = prod Omega(., a_j)^{z_j}.

	This is exactly what dx * sum_n f(n dx) e^{-i w n dx} equals for the sampled
	continuous spline f. Frequencies are expected inside the Nyquist band.
	For one factor on a grid with integer 1/dx the images beyond `terms` are
	summed in closed form by a midpoint integral and the bound is the midpoint
	remainder; otherwise the bound covers the whole discarded tail.
	"""
	factors = [(complex(z), float(a)) for z, a in factors]
	for z, a in factors:
		SplineSpec(z, a)
	terms = terms or settings.alias_terms

	omega = np.atleast_1d(np.asarray(omega, dtype=float))
	period = 2 * np.pi / dx
	images = np.arange(-terms, terms + 1)
	shifted = (omega[:, None] + period * images[None, :]).ravel()

	product = np.ones(shifted.shape, dtype=complex)
	for z, a in factors:
		product = product * fourier_transform(SplineSpec(z, a), shifted, settings)
	value = product.reshape(omega.size, images.size).sum(axis=1)

	sigma = sum(z.real for z, _ in factors)
	spread = sum(abs(z.imag) for z, _ in factors)

	if len(factors) == 1 and _nyquist_terms(dx) and terms >= 2:
		z, a = factors[0]
		w = a + 1j * omega
		scale = symbol_power(-np.expm1(-w), z, settings)
		start = terms + 0.5
		correction = sum(
			side * (w + side * 1j * period * start) ** (1 - z) for side in (1, -1)
		) / ((z - 1) * 1j * period)
		value = value + scale * correction
		tail = (
			2
			* np.abs(scale)
			* abs(z * (z + 1))
			* np.exp(np.pi * abs(z.imag) / 2)
			* period ** (-sigma)
			* (terms - 1) ** (-sigma - 1)
			/ (24 * (sigma + 1))
		)
	else:
		envelope = np.exp(np.pi * spread) * np.prod([(1 + np.exp(-a)) ** z.real for z, a in factors])
		tail = np.full(
			omega.shape,
			2 * envelope * period ** (-sigma) * (terms - 0.5) ** (1 - sigma) / (sigma - 1),
		)

	return AliasedSymbol(value, np.broadcast_to(tail, omega.shape).astype(float))
