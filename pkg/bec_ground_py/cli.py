"""Contains the command-line entry point."""

# Python libraries
import argparse
import logging
import sys

# bec_ground_py components
from .errors import ConfigError
from .runner import Runner

EXIT_SUCCESS = 0
EXIT_RUN_FAILED = 1
EXIT_CONFIG_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    """Creates the argument parser with the "run" and "table" commands.

    Returns:
        parser (argparse.ArgumentParser): Parser.
    """
    parser = argparse.ArgumentParser(prog="bec-ground", description="Ground states of two-component condensates by ANNI and ALM.")
    parser.add_argument("--verbose", action="store_true", help="log every iteration")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="solve every point of a configuration and write the results")
    run.add_argument("config", help="TOML or JSON run configuration")
    run.add_argument("--out", default=None, help="output directory (defaults to output.directory, then 'results')")
    run.add_argument("--dump-states", action="store_true", default=None, help="write wave functions for every run")
    run.add_argument("--threads", type=int, default=None, help="number of sweep points solved concurrently")

    table = commands.add_parser("table", help="solve every point of a configuration and print the summary as CSV")
    table.add_argument("config", help="TOML or JSON run configuration")
    table.add_argument("--threads", type=int, default=None, help="number of sweep points solved concurrently")

    return parser


def main(argv: list = None) -> int:
    """Runs the command line.

    Args:
        argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        status (int): 0 when every run converged, 1 when any run failed, 2 on configuration errors.
    """
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if arguments.verbose else logging.INFO, format="%(levelname)s %(name)s: %(message)s")

    runner = Runner(threads=arguments.threads)
    if arguments.command == "run":
        runner.dump_states = arguments.dump_states
        runner.output_directory = arguments.out

    try:
        runner.initialize(arguments.config)
    except ConfigError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    if arguments.command == "run" and runner.output_directory is None:
        runner.output_directory = "results"
    if arguments.command == "table":
        runner.output_directory = None

    runner.run_model()

    if arguments.command == "table":
        sys.stdout.write(runner.summary_table())

    return EXIT_SUCCESS if runner.all_converged else EXIT_RUN_FAILED
