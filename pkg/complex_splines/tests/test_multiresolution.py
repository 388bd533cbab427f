# Copyright (c) 2026, Complex Splines contributors
# See license.txt

import unittest
from unittest.mock import patch

import numpy as np

from complex_splines.config import DEFAULT_SETTINGS, PERIOD_CONVENTIONS, settings_with
from complex_splines.exceptions import DegeneracyError, UsageError
from complex_splines.multiresolution import (
	WaveletSpec,
	autocorrelation,
	check_filter_mass,
	check_nested_spaces,
	check_scaling_function_conditions,
	check_two_scale,
	check_wavelet_orthonormality,
	lowpass_filter,
	mother_wavelet_symbol,
	orthonormalized_wavelet_symbol,
	refine,
	scale_symbol,
)
from complex_splines.special_functions import binomial_sequence
from complex_splines.spline_core import SplineSpec, fourier_transform


class TestScaleSymbol(unittest.TestCase):
	def test_values(self):
		self.assertEqual(scale_symbol(SplineSpec(2, 0), 0.0), 1)
		self.assertLess(abs(scale_symbol(SplineSpec(3, 0), np.pi)), 1e-12)

	def test_links_the_two_scales(self):
		spec = SplineSpec(2.5 + 1j, 0.7)
		omega = np.linspace(-15, 15, 301)
		coarse = fourier_transform(SplineSpec(spec.z, 2 * spec.a), 2 * omega)
		np.testing.assert_allclose(coarse, scale_symbol(spec, omega) * fourier_transform(spec, omega), atol=1e-12)


class TestLowpassFilter(unittest.TestCase):
	def test_linear_and_quadratic_masks(self):
		np.testing.assert_allclose(lowpass_filter(SplineSpec(2, 0), 1e-12).weights, [0.25, 0.5, 0.25])
		np.testing.assert_allclose(lowpass_filter(SplineSpec(3, 0), 1e-12).weights, [1 / 8, 3 / 8, 3 / 8, 1 / 8])
		self.assertEqual(lowpass_filter(SplineSpec(3, 0), 1e-12).tail_bound, 0.0)

	def test_symbol_converges_to_scale_symbol(self):
		spec = SplineSpec(2 + 1j, 1.0)
		filt = lowpass_filter(spec, 1e-12)
		omega = np.linspace(-np.pi, np.pi, 201)
		error = np.abs(filt.symbol(omega) - scale_symbol(spec, omega))
		self.assertTrue(np.all(error <= filt.tail_bound + 1e-13))

	def test_tail_bound_covers_dropped_taps(self):
		for spec in (SplineSpec(2 + 1j, 1.0), SplineSpec(1.2 - 1j, 3.0), SplineSpec(2.5, 0.5)):
			filt = lowpass_filter(spec, 1e-12)
			full = 2.0 ** (-spec.z) * binomial_sequence(spec.z, 20000) * np.exp(-spec.a * np.arange(20001))
			dropped = float(np.sum(np.abs(full[filt.weights.size :])))
			self.assertGreaterEqual(filt.tail_bound, dropped, spec)
			self.assertLess(filt.tail_bound, 1e-12)
			self.assertTrue(check_filter_mass(spec).passed, spec)

	def test_filter_mass_across_the_default_matrix(self):
		for z, a in DEFAULT_SETTINGS.matrix():
			result = check_filter_mass(SplineSpec(z, a))
			self.assertTrue(result.passed, result.to_dict())

	def test_weights_are_read_only(self):
		filt = lowpass_filter(SplineSpec(2.5, 0.5), 1e-12)
		with self.assertRaises(ValueError):
			filt.weights[0] = 0

	def test_to_dict(self):
		payload = lowpass_filter(SplineSpec(2, 0), 1e-12).to_dict()
		self.assertEqual(payload["z"], [2.0, 0.0])
		self.assertEqual(payload["weights"][1], [0.5, 0.0])
		self.assertIn("tail_bound", payload)

	def test_rejects_non_positive_tolerance(self):
		with self.assertRaises(UsageError):
			lowpass_filter(SplineSpec(2, 0), 0.0)


class TestTwoScale(unittest.TestCase):
	def test_hat_at_one_half(self):
		self.assertAlmostEqual(complex(refine(SplineSpec(2, 0), 0.5)), 0.5, places=14)

	def test_left_of_support(self):
		np.testing.assert_array_equal(refine(SplineSpec(2.5 + 1j, 1.0), np.array([-2.0, -0.5])), 0)

	def test_relation_holds(self):
		for spec in (SplineSpec(3 + 0.5j, 0.7), SplineSpec(1.2 - 1j, 0.0), SplineSpec(2.5, 3.0)):
			result = check_two_scale(spec)
			self.assertTrue(result.passed, result.to_dict())

	def test_ladder_conditions(self):
		spec = SplineSpec(2.5 + 1j, 0.5)
		self.assertTrue(check_nested_spaces(spec, np.linspace(-4 * np.pi, 4 * np.pi, 401)).passed)
		self.assertTrue(check_filter_mass(spec).passed)
		self.assertTrue(check_scaling_function_conditions(spec).passed)


class TestWavelet(unittest.TestCase):
	def test_vanishing_moment(self):
		w = WaveletSpec.from_spec(SplineSpec(2, 0))
		self.assertLess(abs(mother_wavelet_symbol(w, 0.0)), 1e-12)

	def test_autocorrelation_is_periodic_and_positive(self):
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0))
		grid = np.linspace(0, 1, 1024, endpoint=False)
		here = autocorrelation(w, grid).value
		there = autocorrelation(w, grid + 1).value
		self.assertLess(np.max(np.abs(here - there)), 1e-9)
		self.assertGreater(np.min(here), 0)

	def test_standard_period(self):
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0), settings_with(wavelet_period="standard"))
		self.assertAlmostEqual(w.period, 2 * np.pi)

	def test_gain_cancels(self):
		spec = SplineSpec(2.5 + 1j, 0.5)
		omega = np.linspace(-0.5, 0.5, 33)
		plain = orthonormalized_wavelet_symbol(WaveletSpec.from_spec(spec), omega)
		scaled = orthonormalized_wavelet_symbol(WaveletSpec.from_spec(spec, gain=3.0), omega)
		np.testing.assert_allclose(scaled, plain, rtol=1e-12, atol=1e-15)

	def test_unit_periodization(self):
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0))
		omega = np.linspace(-0.5, 0.5, 16, endpoint=False)
		correlation = autocorrelation(w, omega)
		total = np.zeros(omega.size)
		for k in range(-correlation.terms, correlation.terms + 1):
			total += np.abs(orthonormalized_wavelet_symbol(w, omega + k)) ** 2
		np.testing.assert_allclose(total, 1, atol=1e-8)

	def test_degeneracy(self):
		settings = settings_with(degeneracy_threshold=1e6)
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0), settings)
		with self.assertRaises(DegeneracyError):
			orthonormalized_wavelet_symbol(w, 0.1, settings)

	def test_orthonormality(self):
		for spec in (SplineSpec(2, 0), SplineSpec(2.5, 1.0)):
			for period in PERIOD_CONVENTIONS.values():
				result = check_wavelet_orthonormality(WaveletSpec.from_spec(spec, period=period))
				self.assertTrue(result.passed, result.to_dict())

	def test_orthonormality_sees_a_distorted_wavelet(self):
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0), period=PERIOD_CONVENTIONS["standard"])
		exact = orthonormalized_wavelet_symbol

		def distorted(w, omega, settings=DEFAULT_SETTINGS):
			return exact(w, omega, settings) * (1 + 0.01 * np.sin(omega))

		with patch("complex_splines.multiresolution.orthonormalized_wavelet_symbol", side_effect=distorted):
			result = check_wavelet_orthonormality(w)
		self.assertFalse(result.passed)
		self.assertAlmostEqual(abs(complex(*result.details["inner_products"]["1"])), 0.01, delta=1e-3)

	def test_unit_period_translates_by_two_pi(self):
		w = WaveletSpec.from_spec(SplineSpec(2.5, 1.0))
		result = check_wavelet_orthonormality(w, shifts=(0, 1))
		self.assertTrue(result.passed, result.to_dict())
		self.assertAlmostEqual(result.details["translate_step"], 2 * np.pi)

		# integer translates of this wavelet are neither normalized nor orthogonal
		literal = result.details["integer_shift_inner_products"]
		self.assertAlmostEqual(literal["0"][0], 1 / (2 * np.pi), places=4)
		self.assertGreater(abs(complex(*literal["1"])), 1e-3)

		standard = WaveletSpec.from_spec(SplineSpec(2.5, 1.0), period=PERIOD_CONVENTIONS["standard"])
		self.assertNotIn("integer_shift_inner_products", check_wavelet_orthonormality(standard).details)

	def test_filter_must_match(self):
		with self.assertRaises(UsageError):
			WaveletSpec(SplineSpec(2, 0), lowpass_filter(SplineSpec(3, 0), 1e-12))
