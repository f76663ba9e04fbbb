"""Writers for sweep tables and analysis reports."""

import sys
from argparse import ArgumentParser
from pathlib import Path
from typing import Optional, Sequence, get_args

import pandas as pd
from loguru import logger
from pydantic import BaseModel, TypeAdapter

from hawking_steering.exceptions import OutputError
from hawking_steering.models import OutputFormat
from hawking_steering.registry import SHARED, CommandRegistry


@CommandRegistry.register_cli(SHARED)
def cli_arguments(parser: ArgumentParser):
    """Output arguments shared by every subcommand."""
    parser.add_argument(
        "--out",
        type=Path,
        dest="out",
        default=None,
        help="Output file (stdout when omitted)",
    )
    parser.add_argument(
        "--format",
        choices=list(get_args(OutputFormat)),
        dest="format",
        default=None,
        help="Output format for tables (default: csv)",
    )


def table_to_text(table: pd.DataFrame, format: OutputFormat = "csv") -> str:
    """CSV with 17 significant digits and LF line endings, or a JSON array of row objects."""
    if format == "csv":
        return table.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    if format == "json":
        return table.to_json(orient="records", double_precision=15) + "\n"
    raise ValueError(f"Unknown output format {format!r}")


def _write_text(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path = Path(path)
        # newline="" keeps LF line endings on every platform.
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise OutputError(exc.errno, f"Cannot write {path}: {exc.strerror}", str(path)) from exc
    logger.info(f"Wrote {len(text)} bytes to {path}")


def write_table(table: pd.DataFrame, path: Optional[Path] = None, format: OutputFormat = "csv") -> None:
    """Write a sweep table to ``path`` (stdout when None).

    Raises
    ------
    OutputError
        If the file cannot be written.
    """
    _write_text(table_to_text(table, format), path)


def write_report(report: BaseModel | Sequence[BaseModel], path: Optional[Path] = None) -> None:
    """Write a report model, or a list of them, as indented JSON."""
    if isinstance(report, BaseModel):
        text = report.model_dump_json(indent=2)
    else:
        text = TypeAdapter(list[type(report[0])]).dump_json(list(report), indent=2).decode()
    _write_text(text + "\n", path)
