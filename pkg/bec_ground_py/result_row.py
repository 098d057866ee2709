"""Contains one line of a summary table."""

# Python libraries
import math

# bec_ground_py components
from .component_manager import ComponentManager

SUMMARY_COLUMNS = ["f", "nrmG", "iter", "inner_iter", "cpu_s", "term"]


class ResultRow(ComponentManager):
    """Outcome of one sweep point: parameters, final energy, gradient norm, iteration counts, timing and termination."""

    # Class attributes that allow this class to use helper methods from ComponentManager
    _instances = []
    _object_count = 0

    def __init__(
        self,
        run_id: str = "",
        parameters: dict = None,
        f: float = math.nan,
        nrmG: float = math.nan,
        iterations: int = 0,
        inner_iterations: int = 0,
        cpu_s: float = 0.0,
        termination: str = "",
        converged: bool = False,
        method: str = "",
        obj_id: int = None,
    ) -> object:
        """Creates a ResultRow object.

        Args:
            run_id (str, optional): Identifier of the sweep point. Defaults to "".
            parameters (dict, optional): Swept parameter values. Defaults to {}.
            f (float, optional): Final objective value. Defaults to nan.
            nrmG (float, optional): Final gradient norm. Defaults to nan.
            iterations (int, optional): Outer iterations. Defaults to 0.
            inner_iterations (int, optional): Total subproblem iterations (ALM). Defaults to 0.
            cpu_s (float, optional): Wall time of the solver call. Defaults to 0.0.
            termination (str, optional): GRAD_TOL, ENERGY_TOL, MAX_ITER or an error code. Defaults to "".
            converged (bool, optional): Whether the run met a convergence test. Defaults to False.
            method (str, optional): Solver name. Defaults to "".
            obj_id (int, optional): Object identifier. Defaults to None.

        Returns:
            object: Created ResultRow object.
        """
        self.run_id = run_id
        self.parameters = dict(parameters) if parameters is not None else {}
        self.f = f
        self.nrmG = nrmG
        self.iterations = iterations
        self.inner_iterations = inner_iterations
        self.cpu_s = cpu_s
        self.termination = termination
        self.converged = converged
        self.method = method

        self.__class__._register(self, obj_id)

    @classmethod
    def from_report(cls, run_id: str, parameters: dict, report: object) -> object:
        """Creates the row of a finished solver run.

        Args:
            run_id (str): Identifier of the sweep point.
            parameters (dict): Swept parameter values.
            report (SolveReport): Solver outcome.

        Returns:
            row (ResultRow): Created row.
        """
        return cls(
            run_id=run_id,
            parameters=parameters,
            f=float(report.energy),
            nrmG=float(report.grad_norm),
            iterations=report.iterations,
            inner_iterations=report.inner_iterations,
            cpu_s=report.wall_time,
            termination=report.termination.value,
            converged=report.converged,
            method=report.method,
        )

    @classmethod
    def from_error(cls, run_id: str, parameters: dict, error: object, method: str = "") -> object:
        """Creates the row of a failed solver run.

        Args:
            run_id (str): Identifier of the sweep point.
            parameters (dict): Swept parameter values.
            error (BecGroundError): Failure.
            method (str, optional): Solver name. Defaults to "".

        Returns:
            row (ResultRow): Created row with the error code as termination.
        """
        return cls(
            run_id=run_id,
            parameters=parameters,
            iterations=error.iteration or 0,
            termination=error.code.value,
            method=method,
        )

    def as_csv_row(self, parameter_names: list) -> list:
        """Formats the row for the summary table.

        Args:
            parameter_names (list): Parameter columns, in table order.

        Returns:
            cells (list): Parameter values followed by f, nrmG, iter, inner_iter, cpu_s and term.
        """
        parameters = [f"{self.parameters[name]:g}" if name in self.parameters else "" for name in parameter_names]
        return parameters + [
            f"{self.f:.8f}",
            f"{self.nrmG:.3e}",
            str(self.iterations),
            str(self.inner_iterations),
            f"{self.cpu_s:.3f}",
            self.termination,
        ]

    def _to_dict(self) -> dict:
        """Method that overrides the way the object is formatted to JSON.

        Returns:
            dict: JSON-friendly representation of the object.
        """
        return {
            "run_id": self.run_id,
            "parameters": self.parameters,
            "f": self.f,
            "nrmG": self.nrmG,
            "iterations": self.iterations,
            "inner_iterations": self.inner_iterations,
            "cpu_s": self.cpu_s,
            "termination": self.termination,
            "converged": self.converged,
            "method": self.method,
        }
