from __future__ import annotations

import argparse
import logging
import math
import re
import sys
from typing import Any, Sequence

from casson_invariants import __version__
from casson_invariants.constants import (
    ALL_FORMATS,
    COMMANDS,
    EXIT_CODES,
    FORMATS,
)
from casson_invariants.exceptions import (
    CassonError,
    EnumerationCapExceeded,
    IntegralityError,
)
from casson_invariants.invariants import (
    base_geometry,
    bb_census,
    decompose_lambda_zero,
    lambda_psl_expr,
    lambda_psl_small_seifert,
    theorem_case,
)
from casson_invariants.manifolds import (
    ManifoldExpr,
    SmallSeifertSpec,
    parse_manifold_expr,
    render,
)
from casson_invariants.oracle import VerificationReport, verify_census
from casson_invariants.oracle.counting import check_cap
from casson_invariants.cli.config import JobConfig
from casson_invariants.cli.emit import (
    render_mapping,
    render_rows,
    report_values,
)
from casson_invariants.cli.sweep import default_spec, run_sweep

logger = logging.getLogger(__name__)

SLOPE_RE = re.compile(r"^\s*[+-]?[0-9]+\s*/\s*[+-]?[0-9]+\s*$")


def slope_type(text: str) -> str:
    """Argument type of ``--slope``.

    Args:
        text (str): The raw argument, e.g. "-5/3".

    Raises:
        argparse.ArgumentTypeError: If the text is not of the form ``p/q``.

    Returns:
        str: The slope with spaces removed.
    """
    if not SLOPE_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"slope must look like p/q, got {text!r}"
        )
    return text.replace(" ", "")


def build_parser() -> argparse.ArgumentParser:
    """Builds the argument parser of the ``casson`` command.

    The output, oracle and logging flags are accepted after every
    subcommand.

    Returns:
        argparse.ArgumentParser: The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=ALL_FORMATS, default=None)
    common.add_argument(
        "--cap", type=int, default=None, help="enumeration cap on p*q*r"
    )
    common.add_argument(
        "--quiet",
        action="store_const",
        const=True,
        default=None,
        help="suppress caveats",
    )
    common.add_argument("--config", default=None, help="INI config file")
    common.add_argument(
        "--save-config",
        dest="save_config",
        default=None,
        metavar="PATH",
        help="write the options set by files and flags to an INI file",
    )
    common.add_argument("--log-level", dest="log_level", default=None)
    common.add_argument("--log-file", dest="log_file", default=None)

    parser = argparse.ArgumentParser(
        prog="casson",
        description="Exact PSL(2,C) and SL(2,C) Casson invariants.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    shs = commands.add_parser(
        COMMANDS.SHS, parents=[common], help="Seifert homology sphere"
    )
    shs.add_argument("multiplicities", nargs="+", type=int)

    twist = commands.add_parser(
        COMMANDS.TWIST, parents=[common], help="surgery on a twist knot"
    )
    twist.add_argument("--xi", type=int, required=True)
    twist.add_argument("--slope", type=slope_type, required=True)

    for name, help_text in (
        (COMMANDS.SSF, "invariants of a small Seifert space"),
        (COMMANDS.CENSUS, "character census of a small Seifert space"),
        (COMMANDS.VERIFY, "cross-check a small Seifert space"),
    ):
        small = commands.add_parser(name, parents=[common], help=help_text)
        small.add_argument("orders", nargs=3, type=int, metavar="ORDER")
        small.add_argument(
            "--abc", nargs=3, type=int, default=None, metavar="COEFFICIENT"
        )

    expr = commands.add_parser(
        COMMANDS.EXPR, parents=[common], help="connected-sum expression"
    )
    expr.add_argument("expression")

    sweep = commands.add_parser(
        COMMANDS.SWEEP, parents=[common], help="sweep small Seifert spaces"
    )
    sweep.add_argument("--max", type=int, required=True)
    sweep.add_argument(
        "--abc-samples", dest="abc_samples", type=int, default=None
    )

    job = commands.add_parser("job", parents=[common], help="run a JSON job")
    job.add_argument("job_file")
    return parser


def configure_logging(job: JobConfig) -> None:
    logging.basicConfig(
        level=job.log_level,
        filename=job.log_file,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )


def small_seifert_of(job: JobConfig) -> SmallSeifertSpec:
    """The small Seifert space a job is about.

    Args:
        job (JobConfig): The job.

    Raises:
        ValueError: If the job names no small Seifert space.

    Returns:
        SmallSeifertSpec: The validated spec.
    """
    if job.manifold is not None:
        expr = parse_manifold_expr(job.manifold)
        if not isinstance(expr, SmallSeifertSpec):
            raise ValueError(
                f"{job.command} needs a single SSF(...) manifold, got "
                f"{job.manifold!r}"
            )
        return expr
    if job.orders is None:
        raise ValueError(f"{job.command} needs cone orders or a manifold")
    return default_spec(job.orders)


def expression_of(job: JobConfig) -> ManifoldExpr:
    if job.manifold is None:
        return small_seifert_of(job)
    return parse_manifold_expr(job.manifold)


def verification_values(
    report: VerificationReport, plain: bool
) -> dict[str, Any]:
    """Flattens a verification report into output fields.

    Args:
        report (VerificationReport): The report.
        plain (bool): Whether check fields hold the status with its detail,
            as printed in plain output, or the bare status.

    Returns:
        dict[str, Any]: The fields in output order.
    """
    values: dict[str, Any] = {
        "manifold": report.manifold,
        "sl_case": report.theorem_case.value,
        "base_geometry": report.geometry.value,
    }
    if report.oracle_counts is not None:
        values["oracle_plus"], values["oracle_minus"] = report.oracle_counts
    for check in report.checks:
        values[check.name] = (
            str(check).split(": ", 1)[1] if plain else check.status.value
        )
    values["passed"] = report.passed
    return values


def execute(job: JobConfig) -> tuple[str, int]:
    """Runs a job.

    Args:
        job (JobConfig): The job.

    Raises:
        CassonError: On invalid manifolds or an exceeded enumeration cap.
        ValueError: On an inconsistent job.

    Returns:
        tuple[str, int]: The rendered output and the exit code.
    """
    output_format, quiet = job.output_format, job.quiet
    command = job.command

    if command in (COMMANDS.SHS, COMMANDS.TWIST):
        expr = expression_of(job)
        value = lambda_psl_expr(expr)
        if output_format == FORMATS.PLAIN:
            return f"{value}\n", EXIT_CODES.OK
        values = {"manifold": render(expr), "lambda": str(value)}
        return render_mapping(values, output_format), EXIT_CODES.OK

    if command in (COMMANDS.SSF, COMMANDS.EXPR):
        expr = expression_of(job)
        values = report_values(decompose_lambda_zero(expr))
        if isinstance(expr, SmallSeifertSpec):
            values["sl_case"] = theorem_case(expr).value
            values["base_geometry"] = base_geometry(*expr.orders).value
        return render_mapping(values, output_format, quiet), EXIT_CODES.OK

    if command == COMMANDS.CENSUS:
        spec = small_seifert_of(job)
        census = bb_census(spec)
        from_census = census.lambda_psl_from_census
        lambda_psl = lambda_psl_small_seifert(spec)
        values = {"manifold": render(spec), **census.as_dict()}
        values["lambda_psl_from_census"] = str(from_census)
        values["lambda_psl"] = str(lambda_psl)
        values["composition_identity"] = (
            "pass" if from_census == lambda_psl else "fail"
        )
        return render_mapping(values, output_format, quiet), EXIT_CODES.OK

    if command == COMMANDS.VERIFY:
        spec = small_seifert_of(job)
        check_cap(math.prod(spec.orders), job.cap)
        report = verify_census(spec, job.cap)
        values = verification_values(report, output_format == FORMATS.PLAIN)
        code = EXIT_CODES.OK if report.passed else EXIT_CODES.CHECK_FAILED
        return render_mapping(values, output_format, quiet), code

    if command == COMMANDS.SWEEP:
        if job.sweep_max is None:
            raise ValueError("sweep needs a maximal cone order")
        outcome = run_sweep(job.sweep_max, job.abc_samples, job.cap)
        code = EXIT_CODES.OK if outcome.passed else EXIT_CODES.CHECK_FAILED
        return render_rows(outcome.rows, output_format, quiet), code

    raise ValueError(f"Unknown command {command!r}")


def run(argv: Sequence[str] | None = None) -> int:
    """Runs the command line and writes the result to stdout.

    Args:
        argv (Sequence[str] | None): The arguments without the program name.
            Defaults to ``sys.argv[1:]``.

    Returns:
        int: 0 on success, 2 on invalid input, 3 when a check fails or an
            invariant comes out non-integral and 4 when the enumeration cap
            is exceeded.
    """
    args = build_parser().parse_args(argv)
    try:
        job = JobConfig.from_args(args)
        if args.save_config:
            job.save_to_file(args.save_config)
    except (ValueError, OSError) as exc:
        print(f"casson: {exc}", file=sys.stderr)
        return EXIT_CODES.INVALID_INPUT
    configure_logging(job)

    try:
        output, code = execute(job)
    except EnumerationCapExceeded as exc:
        logger.error("%s", exc)
        print(f"casson: {exc}", file=sys.stderr)
        return EXIT_CODES.CAP_EXCEEDED
    except IntegralityError as exc:
        logger.error("%s", exc)
        print(f"casson: {exc}", file=sys.stderr)
        return EXIT_CODES.CHECK_FAILED
    except (CassonError, ValueError) as exc:
        print(f"casson: {exc}", file=sys.stderr)
        return EXIT_CODES.INVALID_INPUT
    sys.stdout.write(output)
    return code


def main() -> None:
    sys.exit(run())
