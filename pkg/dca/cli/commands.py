"""``dca`` command line: check, transform and examples.

Exit codes: 0 when every verdict holds, 1 when some verdict is false (or an
example diverges), 2 for input and usage errors.
"""

from __future__ import annotations

import logging
import sys
from fractions import Fraction
from pathlib import Path

import click

from dca.checks import get_check
from dca.checks.report import CheckReport
from dca.cli.corpus import EXAMPLE_IDS, reproduce_examples
from dca.cli.instances import QuadraticForm, load_instance
from dca.cli.reporting import dumps, render_text, report_file, report_json
from dca.cli.transforms import get_transform, run_transform
from dca.config import load_config
from dca.errors import DCAError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet

logger = logging.getLogger("dca.cli")

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

INSTANCE_TYPES = {"set": LatticeSet, "function": DiscreteFunction, "quadratic": QuadraticForm}


class InputError(click.ClickException):
    exit_code = EXIT_USAGE


class IntList(click.ParamType):
    name = "I,J,..."

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(v) for v in value.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


class RationalType(click.ParamType):
    name = "P/Q"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


class RationalList(click.ParamType):
    name = "R,R,..."

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(Fraction(v) for v in value.split(","))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a comma-separated list of rationals", param, ctx)


class BoxType(click.ParamType):
    name = "LO:HI"

    def convert(self, value, param, ctx):
        if isinstance(value, IntegerBox):
            return value
        try:
            lo, hi = value.split(":")
            return IntegerBox(IntList().convert(lo, param, ctx), IntList().convert(hi, param, ctx))
        except (ValueError, DCAError) as e:
            self.fail(f"{value!r} is not a box LO:HI ({e})", param, ctx)


def _load(paths, kinds, max_dim: int):
    objects = []
    for path, kind in zip(paths, kinds):
        obj = load_instance(path)
        if not isinstance(obj, INSTANCE_TYPES[kind]):
            raise InputError(f"{path}: expected a {kind} instance")
        if obj.dim > max_dim:
            raise InputError(f"{path}: dimension {obj.dim} exceeds DCA_MAX_DIM={max_dim}")
        objects.append(obj)
    return objects


def _emit(document, text: str, as_json: bool, out):
    if out:
        Path(out).write_text(dumps(document))
        logger.info(f"wrote {out}")
    click.echo(dumps(document) if as_json else text, nl=False)


@click.group()
@click.option("--log-level", default=None, help="Overrides DCA_LOG_LEVEL.")
@click.pass_context
def cli(ctx, log_level):
    """Exact checks and operations for discrete convex functions."""
    config = load_config()
    if log_level:
        config["log_level"] = log_level
    logging.basicConfig(level=config["log_level"].upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = config


@cli.command()
@click.argument("name")
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option("--mode", type=click.Choice(["all", "global", "local"]), default=None)
@click.option("--probes", type=int, default=None, help="Random probes for argmin-ic.")
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True, help="Print the JSON report instead of text.")
@click.pass_obj
def check(config, name, files, mode, probes, seed, out, as_json):
    """Run check NAME on every instance file."""
    try:
        entry = get_check(name)
        options = {
            "mode": mode,
            "probes": config["probes"] if probes is None else probes,
            "seed": config["seed"] if seed is None else seed,
        }
        reports = []
        for obj in _load(files, [entry.subject] * len(files), config["max_dim"]):
            result = entry.run(obj, options)
            reports.extend(result if isinstance(result, list) else [result])
    except (DCAError, ValueError) as e:
        raise InputError(str(e)) from None

    document = report_file(["check", name, *files], reports)
    _emit(document, render_text(reports), as_json, out)
    failed = any(isinstance(r, CheckReport) and not r.verdict for r in reports)
    sys.exit(EXIT_FALSE if failed else EXIT_OK)


@cli.command()
@click.argument("name")
@click.argument("files", nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option("--keep", type=IntList(), default=None, help="Kept coordinates (0-based).")
@click.option("--kind", type=click.Choice(["l1", "l2sq"]), default="l1")
@click.option("--a", "a", type=RationalType(), default=None, help="Penalty coefficient.")
@click.option("--box", type=BoxType(), default=None)
@click.option("--axis", type=int, default=None)
@click.option("--lo", type=int, default=None)
@click.option("--hi", type=int, default=None)
@click.option("--point", type=RationalList(), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def transform(config, name, files, keep, kind, a, box, axis, lo, hi, point, out):
    """Apply transform NAME to the instance files and print the result."""
    try:
        entry = get_transform(name)
        if len(files) != len(entry.inputs):
            raise click.UsageError(f"{name} takes {len(entry.inputs)} instance file(s), got {len(files)}")
        objects = _load(files, entry.inputs, config["max_dim"])
        options = {"keep": keep, "kind": kind, "a": a, "box": box,
                   "axis": axis, "lo": lo, "hi": hi, "point": point}
        document = run_transform(name, objects, options)
    except (DCAError, ValueError) as e:
        raise InputError(str(e)) from None
    _emit(document, dumps(document), True, out)


@cli.command()
@click.option("--only", type=click.Choice(EXAMPLE_IDS), multiple=True)
@click.option("--self-test", is_flag=True, help="Perturb one expected value; the run must then fail.")
@click.option("--workers", type=int, default=None, help="Overrides DCA_WORKERS.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def examples(config, only, self_test, workers, out, as_json):
    """Reproduce the built-in example corpus."""
    outcomes = reproduce_examples(only, self_test, config["workers"] if workers is None else workers)
    command = ["examples", *(f"--only={i}" for i in only)] + (["--self-test"] if self_test else [])
    document = report_file(command, [], {
        "examples": [
            {"id": o.id, "title": o.title, "matches": o.matches, "mismatches": o.mismatches,
             "reports": [report_json(r) for r in o.reports]}
            for o in outcomes
        ],
    })
    lines = []
    for o in outcomes:
        lines.append(f"{o.id} {o.title}: matches: {'yes' if o.matches else 'no'}")
        lines.extend(f"  mismatch: {m}" for m in o.mismatches)
    _emit(document, "\n".join(lines) + "\n", as_json, out)
    sys.exit(EXIT_OK if all(o.matches for o in outcomes) else EXIT_FALSE)


def run(argv=None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="dca", standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else EXIT_USAGE)
    return EXIT_OK
