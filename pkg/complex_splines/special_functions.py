# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""
Complex special functions behind every spline formula.

All functions accept numpy arrays for the argument that is swept over a grid
(x for truncated powers and Kummer M, z for gamma) and return a Python complex
when called with scalars.
"""

import numpy as np
from scipy import integrate

from complex_splines.config import DEFAULT_SETTINGS
from complex_splines.exceptions import DomainError, NumericError

# Lanczos approximation, g = 7, nine coefficients
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
	0.99999999999980993,
	676.5203681218851,
	-1259.1392167224028,
	771.32342877765313,
	-176.61502916214059,
	12.507343278686905,
	-0.13857109526572012,
	9.9843695780195716e-6,
	1.5056327351493116e-7,
)
HALF_LOG_TWO_PI = 0.5 * np.log(2 * np.pi)


def _as_array(value):
	array = np.asarray(value, dtype=complex)
	return array, array.ndim == 0


def _restore(array, scalar):
	if scalar:
		return complex(array.reshape(()))
	return array


def _is_nonpositive_integer(value, atol=1e-12):
	value = complex(value)
	return abs(value.imag) <= atol and value.real <= atol and abs(value.real - round(value.real)) <= atol


def complex_order(value, lower=1.0):
	"""Validate a spline or operator order: Re z > lower (1 for splines, 0 for operators)"""
	try:
		z = complex(value)
	except (TypeError, ValueError):
		raise DomainError("Order {0!r} is not a complex number".format(value))

	if not (np.isfinite(z.real) and np.isfinite(z.imag)):
		raise DomainError("Order {0} is not finite".format(z))
	if not z.real > lower:
		raise DomainError("Order z={0} needs Re z > {1}".format(z, lower))
	return z


def _lanczos(z):
	z = z - 1
	x = np.full(z.shape, LANCZOS_COEFFICIENTS[0], dtype=complex)
	for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
		x = x + coefficient / (z + i)
	t = z + LANCZOS_G + 0.5
	return np.exp(HALF_LOG_TWO_PI + (z + 0.5) * np.log(t) - t) * x


def gamma(z):
	"""Euler Gamma function, relative error about 1e-14 on |Re z|, |Im z| <= 20"""
	z, scalar = _as_array(z)

	poles = (np.abs(z.imag) <= 1e-12) & (z.real <= 1e-12) & (np.abs(z.real - np.round(z.real)) <= 1e-12)
	if np.any(poles):
		raise DomainError("Gamma has a pole at z={0}".format(z[poles].flat[0]))

	result = np.empty(z.shape, dtype=complex)
	reflect = z.real < 0.5
	if np.any(~reflect):
		result[~reflect] = _lanczos(z[~reflect])
	if np.any(reflect):
		w = z[reflect]
		result[reflect] = np.pi / (np.sin(np.pi * w) * _lanczos(1 - w))

	if not np.all(np.isfinite(result)):
		raise NumericError("Gamma overflowed", z=z[~np.isfinite(result)].flat[0])
	return _restore(result, scalar)


def binomial_sequence(z, k_max):
	"""[binom(z, 0), ..., binom(z, k_max)] by the recurrence binom(z,k) = binom(z,k-1)(z-k+1)/k"""
	z = complex(z)
	if k_max < 0:
		raise DomainError("Binomial index must be nonnegative, got {0}".format(k_max))

	k = np.arange(1, k_max + 1)
	return np.concatenate(([1 + 0j], np.cumprod((z - k + 1) / k)))


def binomial(z, k):
	if int(k) != k or k < 0:
		raise DomainError("Binomial index must be a nonnegative integer, got {0}".format(k))
	return complex(binomial_sequence(z, int(k))[-1])


def binomial_tail_bound(z, a, terms):
	"""
	Upper bound on sum_{k >= terms} |binom(z,k)| e^{-ak}.

	The ratio r_j = |b_{j+1}/b_j| = |z-j|/(j+1) satisfies r_j <= (j/(j+1))^s with
	s = 1 + Re z/2 once j Re z >= |z|^2 + 1 + Re z, so past that index L
	|b_k| <= |b_L| (L/k)^s and the remainder is at most |b_L| e^{-aL} (1 + 2L/Re z).
	Since r_j <= 1 there as well, |b_L| e^{-aL} / (1 - e^{-a}) also bounds it for a > 0.
	Terms between `terms` and L are summed exactly. For -1 < Re z <= 0 only the
	geometric form applies, starting where r_j <= 1. Zero when z is a nonnegative
	integer no larger than terms - 1, infinite when no bound applies.
	"""
	z = complex(z)
	if abs(z.imag) < 1e-14 and z.real >= 0 and abs(z.real - round(z.real)) < 1e-14 and round(z.real) < terms:
		return 0.0

	x, modulus = z.real, abs(z) ** 2
	if x > 0:
		start = max(terms, int(np.ceil((modulus + 1 + x) / x)))
	elif x > -1 and a > 0:
		start = max(terms, int(np.ceil((z.imag**2 / (1 + x) - 1 + x) / 2)) + 1)
	else:
		return np.inf

	magnitudes = np.abs(binomial_sequence(z, start)) * np.exp(-a * np.arange(start + 1))
	head = float(np.sum(magnitudes[terms:start]))
	last = float(magnitudes[start])

	factors = []
	if x > 0:
		factors.append(1 + 2 * start / x)
	if a > 0:
		factors.append(1 / -np.expm1(-a))
	return head + last * min(factors)


def truncated_power(x, exponent):
	"""x_+^exponent: exp(exponent ln x) for x > 0 and 0 elsewhere"""
	x = np.asarray(x, dtype=float)
	scalar = x.ndim == 0
	x = np.atleast_1d(x)

	result = np.zeros(x.shape, dtype=complex)
	positive = x > 0
	result[positive] = np.exp(complex(exponent) * np.log(x[positive]))
	return _restore(result, scalar)


def _kummer_series(a, b, x, settings):
	term = np.ones(x.shape, dtype=complex)
	total = np.ones(x.shape, dtype=complex)
	quiet = np.zeros(x.shape, dtype=int)

	for n in range(settings.kummer_max_terms):
		term = term * (a + n) / (b + n) * x / (n + 1)
		total = total + term
		small = np.abs(term) <= settings.kummer_tolerance * np.abs(total)
		quiet = np.where(small, quiet + 1, 0)
		if np.all(quiet >= settings.kummer_quiet_terms):
			return total

	raise NumericError(
		"Kummer series did not converge",
		a=a,
		b=b,
		terms=settings.kummer_max_terms,
		x_max=complex(x[np.argmax(np.abs(x))]),
	)


def kummer_m(a, b, x, settings=DEFAULT_SETTINGS):
	"""
	Confluent hypergeometric M(a, b; x), vectorized over x.

	Arguments with Re x < 0 go through M(a,b;x) = e^x M(b-a,b;-x) so the
	series never alternates.
	"""
	a, b = complex(a), complex(b)
	if _is_nonpositive_integer(b):
		raise DomainError("Kummer M has a pole at b={0}".format(b))

	x, scalar = _as_array(x)
	x = np.atleast_1d(x)
	result = np.empty(x.shape, dtype=complex)

	negative = x.real < 0
	if np.any(~negative):
		result[~negative] = _kummer_series(a, b, x[~negative], settings)
	if np.any(negative):
		flipped = x[negative]
		result[negative] = np.exp(flipped) * _kummer_series(b - a, b, -flipped, settings)
	return _restore(result, scalar)


def kummer_m_integral(a, b, x):
	"""
	M(a, b; x) from its Beta-integral representation, Re b > Re a > 0.

	Independent of the series, used as an oracle.
	"""
	a, b, x = complex(a), complex(b), complex(x)
	if not b.real > a.real > 0:
		raise DomainError("Integral form of M needs Re b > Re a > 0, got a={0}, b={1}".format(a, b))

	def integrand(t):
		return np.exp(x * t + (a - 1) * np.log(t) + (b - a - 1) * np.log1p(-t))

	real, _ = integrate.quad(lambda t: integrand(t).real, 0, 1, limit=200)
	imag, _ = integrate.quad(lambda t: integrand(t).imag, 0, 1, limit=200)
	return gamma(b) / (gamma(a) * gamma(b - a)) * complex(real, imag)


def gauss_2f1_terminating(k, b, c, x):
	"""Finite sum of 2F1(-k, b; c; x) over its k+1 terms"""
	if int(k) != k or k < 0:
		raise DomainError("Terminating 2F1 needs a nonnegative integer k, got {0}".format(k))
	k, b, c, x = int(k), complex(b), complex(c), complex(x)

	term = 1 + 0j
	total = 1 + 0j
	for n in range(k):
		if abs(c + n) < 1e-12:
			raise DomainError("Pochhammer (c)_{0} vanishes for c={1}".format(n + 1, c))
		term *= (-k + n) * (b + n) * x / ((c + n) * (n + 1))
		total += term
	return total
