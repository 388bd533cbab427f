# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

import numpy as np

import frappe
from complex_splines.complex_splines.doctype.complex_spline_settings.complex_spline_settings import (
	get_spline_settings,
)
from complex_splines.config import load_run_config
from complex_splines.exceptions import NumericError, SplineError
from complex_splines.multiresolution import lowpass_filter
from complex_splines.serialization import sampled_to_dict
from complex_splines.spline_core import fourier_transform, sample
from complex_splines.verification import run_suite


def _config(command, **values):
	"""RunConfig from request arguments with the site's settings"""
	try:
		return load_run_config(command, settings=get_spline_settings(), **values)
	except SplineError as e:
		frappe.throw(frappe._("Invalid {0} request: {1}").format(command, str(e)))


def _fail(command, e):
	if isinstance(e, NumericError):
		frappe.log_error("Complex spline {0} did not converge: {1}".format(command, str(e)))
	frappe.throw(frappe._("Error computing {0}: {1}").format(command, str(e)))


@frappe.whitelist()
def sample_spline(z=None, a=None, x0=None, dx=None, n=None):
	"""Samples of E_z^a as {z, a, x0, dx, values}"""
	config = _config("sample", z=z, a=a, x0=x0, dx=dx, n=n)
	try:
		spec = config.spec()
		f = sample(spec, config.x0, config.dx, config.n)
		return sampled_to_dict(f, z=[spec.z.real, spec.z.imag], a=spec.a)
	except SplineError as e:
		_fail("sample", e)


@frappe.whitelist()
def fourier_sweep(z=None, a=None, omega0=None, domega=None, n=None):
	config = _config("fourier", z=z, a=a, x0=omega0, dx=domega, n=n)
	try:
		spec = config.spec()
		omega = config.x0 + config.dx * np.arange(config.n)
		values = fourier_transform(spec, omega, config.settings)
		return {
			"z": [spec.z.real, spec.z.imag],
			"a": spec.a,
			"omega0": config.x0,
			"domega": config.dx,
			"values": [[v.real, v.imag] for v in values.tolist()],
		}
	except SplineError as e:
		_fail("fourier", e)


@frappe.whitelist()
def lowpass_filter_json(z=None, a=None, tol=None):
	config = _config("filter", z=z, a=a, tol=tol)
	try:
		return lowpass_filter(config.spec(), config.tol or config.settings.filter_tol, config.settings).to_dict()
	except SplineError as e:
		_fail("filter", e)


@frappe.whitelist()
def run_verification(suite="all", tol=None):
	"""Run one suite on the site and return the report; suites take seconds to minutes"""
	frappe.only_for("System Manager")
	config = _config("verify", suite=suite, tol=tol)
	try:
		report = run_suite(config.suite, config.settings, config.tol, config.echo())
	except SplineError as e:
		_fail("verify", e)

	if not report.passed:
		failed = [check.name for check in report.checks if not check.passed]
		frappe.log_error("Verification suite {0} failed: {1}".format(suite, ", ".join(failed)))
	return report.to_dict()
