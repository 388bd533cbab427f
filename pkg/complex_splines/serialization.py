# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

"""CSV and JSON shapes of the toolkit's outputs; floats are written with repr so JSON round-trips bit-exactly."""

import csv
import io
import json

import numpy as np

from complex_splines.exceptions import UsageError
from complex_splines.spline_core import SampledFunction


def _pair(value):
	value = complex(value)
	return [value.real, value.imag]


def sampled_to_dict(f, **extra):
	payload = dict(extra)
	payload.update({"x0": f.x0, "dx": f.dx, "values": [_pair(v) for v in f.values.tolist()]})
	return payload


def sampled_from_dict(payload):
	try:
		values = [complex(re, im) for re, im in payload["values"]]
		return SampledFunction(payload["x0"], payload["dx"], np.array(values, dtype=complex))
	except (KeyError, TypeError, ValueError) as e:
		raise UsageError("Not a sampled function: {0}".format(e))


def sampled_rows(f):
	return [{"x": x, "re": v.real, "im": v.imag} for x, v in zip(f.grid.tolist(), f.values.tolist())]


def symbol_rows(omega, values):
	return [
		{"omega": w, "re": v.real, "im": v.imag, "abs": abs(v)}
		for w, v in zip(np.asarray(omega, dtype=float).tolist(), np.asarray(values, dtype=complex).tolist())
	]


def filter_rows(coefficients):
	return [{"k": k, "re": w.real, "im": w.imag} for k, w in enumerate(coefficients.weights.tolist())]


def check_rows(checks):
	return [
		{
			"name": check.name,
			"grid_size": check.grid_size,
			"max_violation": float(check.max_violation),
			"slack": float(check.slack),
			"passed": check.passed,
		}
		for check in checks
	]


def dumps_csv(fieldnames, rows):
	buffer = io.StringIO()
	writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
	writer.writeheader()
	for row in rows:
		writer.writerow(row)
	return buffer.getvalue()


def dumps_json(payload):
	return json.dumps(payload, indent=1) + "\n"


def check_to_json_line(check):
	"""One BoundCheckResult as a single JSON line"""
	return json.dumps(
		{
			"name": check.name,
			"grid_size": check.grid_size,
			"max_violation": float(check.max_violation),
			"passed": check.passed,
		}
	)
