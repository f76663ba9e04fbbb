"""Command-line front end: ``hawking-steering <command> [options]``.

Exit codes: 0 success, 1 usage or configuration error, 2 numeric-domain error, 3 I/O error.
"""

import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Optional, Sequence, get_args

from loguru import logger
from pydantic import ValidationError

from hawking_steering import analysis, exporter
from hawking_steering.exceptions import ConfigError, HawkingSteeringError, OutputError, UsageError
from hawking_steering.models import Pair, RRange, SweepConfig
from hawking_steering.registry import SHARED, CommandRegistry
from hawking_steering.steering import steering_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3

DEFAULT_ADJUDICATION_GRID = [round(0.1 * k, 1) for k in range(1, 31)]


class CliParser(ArgumentParser):
    """ArgumentParser that raises instead of exiting, so usage errors map to exit code 1."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


@CommandRegistry.register_cli(SHARED)
def cli_arguments(parser: ArgumentParser):
    """Arguments shared by every subcommand."""
    parser.add_argument("--omega", type=float, default=None, help="Mode frequency (default 1.0)")
    parser.add_argument(
        "--jobs",
        type=int,
        default=analysis.default_jobs(),
        help="Worker processes for sweeps (default: all cores)",
    )
    parser.add_argument("--config", type=Path, default=None, help="JSON file with SweepConfig fields")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parser.add_argument("--log-file", type=Path, dest="log_file", default=None, help="Also log to this file")


@CommandRegistry.register_cli("sweep")
def sweep_arguments(parser: ArgumentParser):
    parser.add_argument("--pair", choices=list(get_args(Pair)), default=None)
    parser.add_argument("--s", type=float, nargs="+", dest="s_values", default=None, help="Squeezing values")
    parser.add_argument("--r-min", type=float, dest="r_min", default=None)
    parser.add_argument("--r-max", type=float, dest="r_max", default=None)
    parser.add_argument("--r-steps", type=int, dest="r_steps", default=None)


@CommandRegistry.register_cli("figure")
def figure_arguments(parser: ArgumentParser):
    parser.add_argument("name", choices=list(get_args(analysis.FigureName)), help="Figure dataset")


@CommandRegistry.register_cli("threshold")
def threshold_arguments(parser: ArgumentParser):
    parser.add_argument("--s", type=float, dest="s", required=True, help="Squeezing value")


@CommandRegistry.register_cli("adjudicate")
def adjudicate_arguments(parser: ArgumentParser):
    parser.add_argument(
        "--s",
        type=float,
        nargs="+",
        dest="s_grid",
        default=DEFAULT_ADJUDICATION_GRID,
        help="Squeezing values in (0, 3] (default 0.1, 0.2, ..., 3.0)",
    )


@CommandRegistry.register_cli("bound-check")
def bound_arguments(parser: ArgumentParser):
    parser.add_argument("--s-max", type=float, dest="s_max", default=6.0)
    parser.add_argument("--r-max", type=float, dest="r_max", default=6.0)
    parser.add_argument("--step", type=float, default=0.01)


@CommandRegistry.register_cli("report")
def report_arguments(parser: ArgumentParser):
    parser.add_argument("--s", type=float, dest="s", required=True)
    parser.add_argument("--r", type=float, dest="r", required=True)
    parser.add_argument("--pair", choices=list(get_args(Pair)), default="AB")
    parser.add_argument("--method", choices=["closed", "general"], default="closed")


def load_config(path: Optional[Path]) -> SweepConfig:
    """SweepConfig from a JSON file, or the defaults."""
    if path is None:
        return SweepConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot read config file {path}: {exc.strerror}") from exc
    return SweepConfig.model_validate_json(text)


def resolve_config(args: Namespace) -> SweepConfig:
    """File values (or model defaults) overridden by the flags given on the command line."""
    config = load_config(args.config)
    data = config.model_dump()
    r_range = data["r_range"]
    for flag, key in (("r_min", "min"), ("r_max", "max"), ("r_steps", "steps")):
        if getattr(args, flag, None) is not None:
            r_range[key] = getattr(args, flag)
    overrides = {
        "pair": getattr(args, "pair", None),
        "s_values": getattr(args, "s_values", None),
        "omega": args.omega,
        "output_path": args.out,
        "format": args.format,
    }
    data.update({key: value for key, value in overrides.items() if value is not None})
    data["r_range"] = RRange(**r_range)
    return SweepConfig(**data)


@CommandRegistry.register_command("sweep", help="Steering table over an (s, r) grid")
def run_sweep(args: Namespace) -> int:
    config = resolve_config(args)
    table = analysis.sweep(config, jobs=args.jobs)
    exporter.write_table(table, config.output_path, config.format)
    return EXIT_OK


@CommandRegistry.register_command("figure", help="Dataset behind one of the figures")
def run_figure(args: Namespace) -> int:
    table = analysis.figure(args.name, jobs=args.jobs)
    exporter.write_table(table, args.out, args.format or "csv")
    return EXIT_OK


@CommandRegistry.register_command("threshold", help="Sudden-death and sudden-birth roots at one squeezing value")
def run_threshold(args: Namespace) -> int:
    exporter.write_report(analysis.find_death_birth(args.s), args.out)
    return EXIT_OK


@CommandRegistry.register_command("adjudicate", help="Test both candidate critical-point relations")
def run_adjudicate(args: Namespace) -> int:
    exporter.write_report(analysis.adjudicate_critical_formula(args.s_grid), args.out)
    return EXIT_OK


@CommandRegistry.register_command("bound-check", help="Supremum of the steering asymmetry against ln 2")
def run_bound_check(args: Namespace) -> int:
    reports = [
        analysis.verify_ln2_bound(pair, s_max=args.s_max, r_max=args.r_max, step=args.step) for pair in ("AB", "BBbar")
    ]
    exporter.write_report(reports, args.out)
    return EXIT_OK


@CommandRegistry.register_command("report", help="Steering report at one (s, r) point")
def run_report(args: Namespace) -> int:
    exporter.write_report(steering_report(args.s, args.r, args.pair, method=args.method), args.out)
    return EXIT_OK


def configure_logging(verbose: bool = False, log_file: Optional[Path] = None) -> None:
    level = "DEBUG" if verbose else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level)
    if log_file is not None:
        try:
            logger.add(log_file, level=level)
        except OSError as exc:
            raise OutputError(exc.errno, f"Cannot open log file {log_file}: {exc.strerror}", str(log_file)) from exc


def build_parser() -> ArgumentParser:
    parser = CliParser(
        prog="hawking-steering",
        description="Gaussian steering and its asymmetry under the Hawking-radiation channel",
    )
    return CommandRegistry.build_parser(parser)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose, args.log_file)
        return args.runner(args)
    except (ConfigError, ValidationError) as exc:
        logger.error(f"{exc}")
        return EXIT_USAGE
    except OutputError as exc:
        logger.error(f"{exc}")
        return EXIT_IO
    except HawkingSteeringError as exc:
        logger.error(f"{exc}")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
