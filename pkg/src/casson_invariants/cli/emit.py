"""Plain, JSON and CSV rendering of invariant reports and sweep rows.

Exact values are rendered as reduced fractions ("101/4", "15/2", "30"),
counts as integers and missing values as null in JSON or an empty field in
CSV. Both machine formats carry the same values field for field.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Iterable, TextIO

from casson_invariants.arithmetic import AbelianGroup, QuarterRational
from casson_invariants.constants import FORMATS, SWEEP_COLUMNS
from casson_invariants.invariants import InvariantReport
from casson_invariants.oracle import CheckStatus, VerificationReport

ORACLE_OK = {
    CheckStatus.PASS: "true",
    CheckStatus.FAIL: "false",
    CheckStatus.FINDING: "false",
    CheckStatus.SKIPPED: "skipped",
}


@dataclass(frozen=True)
class SweepRow:
    """One manifold's line in a sweep, in the documented column order."""

    manifold: str
    lambda_psl: QuarterRational
    lambda_sl: QuarterRational | None
    h1: AbelianGroup
    h1_z2_order: int
    lambda_zero: QuarterRational | None
    residual: QuarterRational | None
    reducible: int | None
    dihedral: int | None
    klein: int | None
    total: int | None
    oracle_ok: str
    caveats: tuple[str, ...]

    @staticmethod
    def from_report(
        report: InvariantReport,
        verification: VerificationReport | None = None,
    ) -> SweepRow:
        """Builds a row from a report and, for small Seifert spaces, the
        outcome of their verification.

        Args:
            report (InvariantReport): The invariants.
            verification (VerificationReport | None): The cross-checks. If
                None, ``oracle_ok`` is left empty. Defaults to None.

        Returns:
            SweepRow: The row.
        """
        caveats = [caveat.value for caveat in report.caveats]
        oracle_ok = ""
        if verification is not None:
            oracle_ok = ORACLE_OK.get(verification.oracle_status, "")
            caveats.extend(
                f"{check.status.value}:{check.name}"
                for check in verification.checks
                if check.status in (CheckStatus.FAIL, CheckStatus.FINDING)
            )
        census = report.census
        return SweepRow(
            manifold=report.manifold,
            lambda_psl=report.lambda_psl,
            lambda_sl=report.lambda_sl,
            h1=report.h1,
            h1_z2_order=report.h1_z2_order,
            lambda_zero=report.lambda_zero,
            residual=report.residual,
            reducible=census.reducible if census else None,
            dihedral=census.dihedral if census else None,
            klein=census.klein if census else None,
            total=census.total if census else None,
            oracle_ok=oracle_ok,
            caveats=tuple(caveats),
        )

    def as_record(self) -> dict[str, Any]:
        """The row as JSON-ready values keyed by column name."""
        record: dict[str, Any] = {}
        for column in SWEEP_COLUMNS:
            value = getattr(self, column)
            if isinstance(value, (QuarterRational, AbelianGroup)):
                value = str(value)
            elif isinstance(value, tuple):
                value = list(value)
            record[column] = value
        return record


def _csv_field(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(value)
    return str(value)


def render_rows(
    rows: Iterable[SweepRow], output_format: str, quiet: bool = False
) -> str:
    """Renders sweep rows.

    Args:
        rows (Iterable[SweepRow]): The rows, in emission order.
        output_format (str): "plain", "json" or "csv".
        quiet (bool): Whether to drop the caveats from plain output. Defaults
            to False.

    Raises:
        ValueError: If the format is unknown.

    Returns:
        str: The rendered text, ending with a newline. CSV output always
            starts with the header, even without rows.
    """
    records = [row.as_record() for row in rows]
    if output_format == FORMATS.JSON:
        return json.dumps(records, indent=4) + "\n"
    if output_format == FORMATS.CSV:
        buffer = io.StringIO()
        writer = csv.writer(
            buffer,
            delimiter=",",
            quotechar='"',
            quoting=csv.QUOTE_MINIMAL,
            lineterminator="\n",
        )
        writer.writerow(SWEEP_COLUMNS)
        for record in records:
            writer.writerow(_csv_field(record[c]) for c in SWEEP_COLUMNS)
        return buffer.getvalue()
    if output_format == FORMATS.PLAIN:
        columns = [c for c in SWEEP_COLUMNS if not (quiet and c == "caveats")]
        table = [columns] + [
            [_csv_field(record[c]) for c in columns] for record in records
        ]
        widths = [
            max(len(line[i]) for line in table) for i in range(len(columns))
        ]
        return "".join(
            "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
            + "\n"
            for line in table
        )
    raise ValueError(f"Unknown output format {output_format!r}")


def emit(
    rows: Iterable[SweepRow],
    output_format: str,
    stream: TextIO,
    quiet: bool = False,
) -> None:
    """Writes sweep rows to a stream in the requested format.

    Args:
        rows (Iterable[SweepRow]): The rows.
        output_format (str): "plain", "json" or "csv".
        stream (TextIO): Where to write.
        quiet (bool): Whether to drop caveats from plain output. Defaults to
            False.
    """
    stream.write(render_rows(rows, output_format, quiet=quiet))


def render_mapping(
    values: dict[str, Any], output_format: str, quiet: bool = False
) -> str:
    """Renders the result of a single computation.

    Plain output is one ``key: value`` line per entry, with caveats listed
    last unless ``quiet``; JSON output is one object; CSV output is a header
    line and a value line.

    Args:
        values (dict[str, Any]): Names mapped to JSON-ready values; a
            ``caveats`` entry holds a list of strings.
        output_format (str): "plain", "json" or "csv".
        quiet (bool): Whether to drop the caveats. Defaults to False.

    Raises:
        ValueError: If the format is unknown.

    Returns:
        str: The rendered text, ending with a newline.
    """
    if quiet:
        values = {k: v for k, v in values.items() if k != "caveats"}
    if output_format == FORMATS.JSON:
        return json.dumps(values, indent=4) + "\n"
    if output_format == FORMATS.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(values.keys())
        writer.writerow(_csv_field(v) for v in values.values())
        return buffer.getvalue()
    if output_format == FORMATS.PLAIN:
        lines = []
        for key, value in values.items():
            if key == "caveats":
                continue
            lines.append(f"{key}: {_csv_field(value)}")
        for caveat in values.get("caveats") or []:
            lines.append(f"caveat: {caveat}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"Unknown output format {output_format!r}")


def report_values(report: InvariantReport) -> dict[str, Any]:
    """The values of an invariant report keyed for ``render_mapping``."""
    values: dict[str, Any] = {
        "manifold": report.manifold,
        "lambda_psl": str(report.lambda_psl),
        "lambda_sl": _optional(report.lambda_sl),
        "h1": str(report.h1),
        "h1_z2_order": report.h1_z2_order,
        "lambda_zero": _optional(report.lambda_zero),
        "residual": _optional(report.residual),
    }
    values["caveats"] = [caveat.value for caveat in report.caveats]
    return values


def _optional(value: QuarterRational | None) -> str | None:
    return None if value is None else str(value)
