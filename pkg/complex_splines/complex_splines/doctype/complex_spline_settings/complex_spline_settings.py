# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

import frappe
from frappe import _
from frappe.model.document import Document

from complex_splines.config import DEFAULT_SETTINGS, PERIOD_CONVENTIONS, settings_with
from complex_splines.logger import LOGGER_NAME

CACHE_KEY = "complex_spline_settings"

# doctype field -> SplineSettings field
FIELD_MAP = {
	"filter_tolerance": "filter_tol",
	"grid_step": "fourier_dx",
	"riesz_max_terms": "riesz_max_terms",
	"alias_terms": "alias_terms",
	"wavelet_period": "wavelet_period",
}


class ComplexSplineSettings(Document):
	def validate(self):
		"""Validate tolerances, grid step and term caps"""
		self.validate_positive("filter_tolerance", "grid_step", "riesz_max_terms", "alias_terms")
		self.validate_grid_step()
		if self.wavelet_period and self.wavelet_period not in PERIOD_CONVENTIONS:
			frappe.throw(
				_("Unknown wavelet period convention {0}, expected one of {1}").format(
					self.wavelet_period, ", ".join(PERIOD_CONVENTIONS)
				)
			)

	def validate_positive(self, *fieldnames):
		for fieldname in fieldnames:
			value = self.get(fieldname)
			if value is not None and value <= 0:
				frappe.throw(_("{0} must be positive, got {1}").format(self.meta.get_label(fieldname), value))

	def validate_grid_step(self):
		"""Time shifts by whole units must land on grid points"""
		if self.grid_step and abs(1 / self.grid_step - round(1 / self.grid_step)) > 1e-9:
			frappe.throw(_("Grid Step must be 1/m for an integer m, got {0}").format(self.grid_step))

	def as_settings(self):
		return settings_from_values({fieldname: self.get(fieldname) for fieldname in FIELD_MAP})

	def on_update(self):
		frappe.cache().delete_key(CACHE_KEY)
		frappe.logger(LOGGER_NAME).info("Complex Spline Settings updated")


def get_spline_settings():
	"""SplineSettings of the current site, cached for 5 minutes"""
	values = frappe.cache().get_value(CACHE_KEY)

	if not values:
		doc = frappe.get_single("Complex Spline Settings")
		values = {fieldname: doc.get(fieldname) for fieldname in FIELD_MAP}
		frappe.cache().set_value(CACHE_KEY, values, expires_in_sec=300)

	return settings_from_values(values)


def settings_from_values(values):
	"""SplineSettings with every filled-in doctype field applied over the defaults"""
	changes = {}
	for fieldname, value in values.items():
		setting = FIELD_MAP[fieldname]
		if value:
			changes[setting] = type(getattr(DEFAULT_SETTINGS, setting))(value)
	return settings_with(**changes)
