# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

import logging

LOGGER_NAME = "complex_splines"


def get_logger():
	"""Site logger inside a bench, module logger everywhere else"""
	try:
		import frappe

		if getattr(frappe.local, "site", None):
			return frappe.logger(LOGGER_NAME, allow_site=True)
	except ImportError:
		pass

	return logging.getLogger(LOGGER_NAME)
