# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt


class SplineError(Exception):
	"""Base class for every error raised by the toolkit"""

	exit_code = 1


class DomainError(SplineError, ValueError):
	"""Argument outside the domain of a formula (pole, a < 0, Re z <= 1, ...)"""


class UsageError(SplineError, ValueError):
	"""Inputs that are individually valid but cannot be combined"""


class NumericError(SplineError, ArithmeticError):
	"""Series that did not converge or a branch assertion that failed"""

	exit_code = 3

	def __init__(self, message, **diagnostics):
		self.diagnostics = diagnostics
		if diagnostics:
			details = ", ".join("{0}={1}".format(key, value) for key, value in diagnostics.items())
			message = "{0} ({1})".format(message, details)
		super().__init__(message)


class DegeneracyError(NumericError):
	"""Autocorrelation too small to orthonormalize"""
