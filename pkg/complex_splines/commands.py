# Copyright (c) 2026, Complex Splines contributors
# For license information, please see license.txt

import sys

import click
import numpy as np

from complex_splines.bivariate import bivariate_time_2f1, bivariate_time_kummer
from complex_splines.config import FORMATS, load_run_config
from complex_splines.exceptions import SplineError
from complex_splines.logger import get_logger
from complex_splines.multiresolution import lowpass_filter
from complex_splines.serialization import (
	check_rows,
	dumps_csv,
	dumps_json,
	filter_rows,
	sampled_rows,
	sampled_to_dict,
	symbol_rows,
)
from complex_splines.spline_core import fourier_transform, sample
from complex_splines.verification import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_NUMERIC = 3


def _pair(value):
	return [value.real, value.imag]


def render_sample(config):
	spec = config.spec()
	f = sample(spec, config.x0, config.dx, config.n)
	if config.format == "json":
		return dumps_json(sampled_to_dict(f, z=_pair(spec.z), a=spec.a)), EXIT_OK
	return dumps_csv(["x", "re", "im"], sampled_rows(f)), EXIT_OK


def render_fourier(config):
	spec = config.spec()
	omega = config.x0 + config.dx * np.arange(config.n)
	values = fourier_transform(spec, omega, config.settings)
	if config.format == "json":
		payload = {
			"z": _pair(spec.z),
			"a": spec.a,
			"omega0": config.x0,
			"domega": config.dx,
			"values": [_pair(v) for v in values.tolist()],
		}
		return dumps_json(payload), EXIT_OK
	return dumps_csv(["omega", "re", "im", "abs"], symbol_rows(omega, values)), EXIT_OK


def render_filter(config):
	filt = lowpass_filter(config.spec(), config.tol or config.settings.filter_tol, config.settings)
	if config.format == "json":
		return dumps_json(filt.to_dict()), EXIT_OK
	return dumps_csv(["k", "re", "im"], filter_rows(filt)), EXIT_OK


def render_bivariate(config):
	spec = config.bivariate_spec()
	x = config.x0 + config.dx * np.arange(config.n)
	kummer = bivariate_time_kummer(spec, x)
	hypergeometric = bivariate_time_2f1(spec, x)
	difference = np.abs(kummer - hypergeometric)

	if config.format == "json":
		payload = dict(
			spec.to_dict(),
			x0=config.x0,
			dx=config.dx,
			kummer=[_pair(v) for v in kummer.tolist()],
			hypergeometric=[_pair(v) for v in hypergeometric.tolist()],
			difference=difference.tolist(),
		)
		return dumps_json(payload), EXIT_OK

	rows = [
		{"x": p, "kummer_re": k.real, "kummer_im": k.imag, "2f1_re": h.real, "2f1_im": h.imag, "difference": d}
		for p, k, h, d in zip(x.tolist(), kummer.tolist(), hypergeometric.tolist(), difference.tolist())
	]
	fieldnames = ["x", "kummer_re", "kummer_im", "2f1_re", "2f1_im", "difference"]
	return dumps_csv(fieldnames, rows), EXIT_OK


def render_verify(config):
	report = run_suite(config.suite, config.settings, config.tol, config.echo())
	code = EXIT_OK if report.passed else EXIT_VERIFICATION
	if config.format == "json":
		return dumps_json(report.to_dict()), code
	fieldnames = ["name", "grid_size", "max_violation", "slack", "passed"]
	return dumps_csv(fieldnames, check_rows(report.checks)), code


RENDERERS = {
	"sample": render_sample,
	"fourier": render_fourier,
	"filter": render_filter,
	"bivariate": render_bivariate,
	"verify": render_verify,
}


def run(config):
	"""Execute one parsed command, write its output and return the exit code"""
	logger = get_logger()
	try:
		text, code = RENDERERS[config.command](config)
	except SplineError as e:
		logger.error("%s failed: %s", config.command, e)
		click.echo("error: {0}".format(e), err=True)
		return e.exit_code

	if config.out:
		with open(config.out, "w", newline="") as f:
			f.write(text)
		logger.info("%s wrote %s", config.command, config.out)
	else:
		click.echo(text, nl=False)

	if code == EXIT_VERIFICATION:
		click.echo("error: verification suite {0} failed".format(config.suite), err=True)
	return code


def _execute(ctx, command, **options):
	try:
		config = load_run_config(command, **options)
	except SplineError as e:
		click.echo("error: {0}".format(e), err=True)
		ctx.exit(e.exit_code)
	ctx.exit(run(config))


def spline_options(func):
	options = [
		click.option("--config", "path", type=click.Path(dir_okay=False), help="JSON file with run settings."),
		click.option("--z", help="Complex order, e.g. 2.5+1i."),
		click.option("--a", type=float, help="Decay parameter a >= 0."),
		click.option("--x0", "--omega0", "x0", type=float, help="First grid point."),
		click.option("--dx", "--domega", "dx", type=float, help="Grid step."),
		click.option("--n", type=int, help="Number of grid points."),
		click.option("--tol", type=float, help="Tolerance override."),
		click.option("--out", type=click.Path(dir_okay=False), help="Output file, stdout if omitted."),
		click.option("--format", "format", type=click.Choice(FORMATS), help="Output format."),
	]
	for option in reversed(options):
		func = option(func)
	return func


class SplineCommandGroup(click.Group):
	"""Group whose click usage errors exit with 1 like every other bad input"""

	def main(self, *args, standalone_mode=True, **kwargs):
		try:
			code = super().main(*args, standalone_mode=False, **kwargs)
		except click.ClickException as e:
			e.show()
			code = EXIT_USAGE
		except click.Abort:
			click.echo("Aborted!", err=True)
			code = EXIT_USAGE

		if not standalone_mode:
			return code
		sys.exit(code or EXIT_OK)


@click.group(cls=SplineCommandGroup)
def cli():
	"""Exponential B-splines of complex order: sampling, symbols, filters and checks."""


@cli.command("sample")
@spline_options
@click.pass_context
def sample_command(ctx, **options):
	"""Time-domain samples of E_z^a."""
	_execute(ctx, "sample", **options)


@cli.command("fourier")
@spline_options
@click.pass_context
def fourier_command(ctx, **options):
	"""Fourier symbol Omega(w, a)^z on an omega grid."""
	_execute(ctx, "fourier", **options)


@cli.command("filter")
@spline_options
@click.pass_context
def filter_command(ctx, **options):
	"""Low-pass filter weights of the two-scale relation."""
	_execute(ctx, "filter", **options)


@cli.command("bivariate")
@spline_options
@click.option("--zeta", help="Second complex order.")
@click.option("--b", type=float, help="Second decay parameter.")
@click.pass_context
def bivariate_command(ctx, **options):
	"""Two-parameter spline through both closed forms."""
	_execute(ctx, "bivariate", **options)


@cli.command("verify")
@click.argument("suite_name", required=False, type=click.Choice(list(SUITES)))
@spline_options
@click.option("--suite", type=click.Choice(list(SUITES)), help="Suite to run, `all` by default.")
@click.pass_context
def verify_command(ctx, suite_name, suite, **options):
	"""Run a verification suite and write its report."""
	_execute(ctx, "verify", suite=suite_name or suite, **options)


commands = [cli]


def main(argv=None):
	code = cli.main(args=argv, prog_name="complex-splines", standalone_mode=False)
	sys.exit(code or EXIT_OK)
