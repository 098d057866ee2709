"""Contains the orchestration of configured experiments."""

# Python libraries
import csv
import io
import logging
import os
from concurrent.futures import ThreadPoolExecutor

import msgpack
import numpy as np

# bec_ground_py components
from .bec import build_problem
from .errors import BecGroundError
from .result_row import SUMMARY_COLUMNS, ResultRow
from .run_config import RunConfig, load_config
from .solvers import BlockSpec, alm, anni, multiblock_anni

logger = logging.getLogger(__name__)


def dump_state(state: object, grid: object, path: str, rescale: tuple = (1.0, 1.0)) -> str:
    """Writes node coordinates and both wave functions as space-separated columns (x, [y, [z,]] phi1, phi2).

    Args:
        state (IterateState): Converged iterate.
        grid (Grid): Grid of the problem.
        path (str): Output file.
        rescale (tuple, optional): Factors mapping (u, v) to (phi1, phi2). Defaults to (1.0, 1.0).

    Returns:
        path (str): Written file.
    """
    columns = np.column_stack([grid.nodes(), rescale[0] * state.u, rescale[1] * state.v])

    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    try:
        np.savetxt(path, columns, fmt="%.17g", encoding="utf-8")
    except OSError as error:
        raise OSError(f"Could not write the state dump '{path}': {error}") from error

    return path


def load_state(path: str, dims: int) -> tuple:
    """Reads a file written by dump_state.

    Args:
        path (str): Dump file.
        dims (int): Number of coordinate columns.

    Returns:
        nodes, phi1, phi2 (tuple): Coordinates of shape (size, dims) and both wave functions.
    """
    columns = np.loadtxt(path, ndmin=2, encoding="utf-8")
    return columns[:, :dims], columns[:, dims], columns[:, dims + 1]


class Runner:
    """Class responsible for running every point of a configured experiment and writing its results."""

    def __init__(self, output_directory: str = None, dump_states: bool = None, threads: int = None) -> object:
        """Creates a Runner object. Arguments left as None fall back to the [output] section of the configuration.

        Args:
            output_directory (str, optional): Directory receiving summary.csv, histories/ and states/. Defaults to None.
            dump_states (bool, optional): Whether wave functions are written. Defaults to None.
            threads (int, optional): Number of sweep points solved concurrently. Defaults to None.

        Returns:
            object: Created Runner object.
        """
        self.output_directory = output_directory
        self.dump_states = dump_states
        self.threads = threads

        self.config = None
        self.rows = []
        self.reports = {}

    def initialize(self, input_file) -> None:
        """Loads and validates the configuration.

        Args:
            input_file (dict or str): Configuration dictionary, JSON file or TOML file.
        """
        ResultRow.reset()
        self.rows = []
        self.reports = {}

        self.config = RunConfig._from_dict(load_config(input_file))

        output = self.config.output
        if self.output_directory is None:
            self.output_directory = output.get("directory")
        if self.dump_states is None:
            self.dump_states = bool(output.get("dump_states", False))
        if self.threads is None:
            self.threads = int(output.get("threads", 1))

    def solve_point(self, run_id: str, overrides: dict) -> tuple:
        """Builds and solves one sweep point.

        Args:
            run_id (str): Identifier of the point.
            overrides (dict): Swept parameter values.

        Returns:
            problem, report, error (tuple): Built problem (None if building failed) and either the report or the error.
        """
        problem = None
        config = self.config.solver_config()

        try:
            problem = build_problem(self.config.build_spec(overrides))
            logger.info("%s: solving %s with %s", run_id, problem.label or overrides, self.config.method)

            if self.config.method == "anni":
                report = anni(problem, config)
            elif self.config.method == "alm":
                report = alm(problem, config)
            else:
                plugins = self.config.plugins(problem)
                blocks = [
                    BlockSpec(operator=problem.a1, nonlinearity=plugins[0], coupling_row=(0.0, problem.beta12)),
                    BlockSpec(operator=problem.a2, nonlinearity=plugins[1], coupling_row=(problem.beta12, 0.0)),
                ]
                report = multiblock_anni(blocks, config, physical_betas=problem.physical_betas)
        except BecGroundError as error:
            logger.error("%s failed: %s", run_id, error)
            return problem, None, error

        return problem, report, None

    def run_model(self) -> list:
        """Solves every sweep point and writes the results.

        Returns:
            rows (list): One ResultRow per point, in sweep order.
        """
        points = self.config.points()

        with ThreadPoolExecutor(max_workers=max(1, self.threads)) as executor:
            outcomes = list(executor.map(lambda point: self.solve_point(*point), points))

        # Aggregation runs serially in sweep order, whatever the completion order was
        for (run_id, overrides), (problem, report, error) in zip(points, outcomes):
            parameters = overrides if overrides else self.config.build_spec({}).parameters()
            if error is not None:
                self.rows.append(ResultRow.from_error(run_id, parameters, error, method=self.config.method))
                continue

            self.rows.append(ResultRow.from_report(run_id, parameters, report))
            self.reports[run_id] = (problem, report)

        if self.output_directory is not None:
            self.dump_data_to_disk()

        return self.rows

    def summary_table(self) -> str:
        """Formats the summary as CSV with the header params..., f, nrmG, iter, inner_iter, cpu_s, term.

        Returns:
            table (str): CSV text.
        """
        parameter_names = self.config.parameter_names()

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(parameter_names + SUMMARY_COLUMNS)
        for row in self.rows:
            writer.writerow(row.as_csv_row(parameter_names))

        return buffer.getvalue()

    def dump_data_to_disk(self) -> None:
        """Writes summary.csv, one msgpack history per run and, when enabled, the wave-function dumps."""
        os.makedirs(f"{self.output_directory}/histories", exist_ok=True)

        with open(f"{self.output_directory}/summary.csv", "w", encoding="UTF-8", newline="") as output_file:
            output_file.write(self.summary_table())

        for run_id, (problem, report) in self.reports.items():
            with open(f"{self.output_directory}/histories/{run_id}.msgpack", "wb") as output_file:
                output_file.write(msgpack.packb(report._to_dict()))

            if self.dump_states:
                dump_state(report.final, problem.grid, f"{self.output_directory}/states/{run_id}.txt", rescale=problem.rescale)

    @property
    def all_converged(self) -> bool:
        """Whether every run met a convergence test."""
        return all(row.converged for row in self.rows)
