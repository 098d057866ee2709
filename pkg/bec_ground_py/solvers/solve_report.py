"""Contains the outcome of a solver run."""

# Python libraries
from dataclasses import dataclass, field
from enum import Enum


class Termination(str, Enum):
    """Reasons for a solver run to stop."""

    GRAD_TOL = "GRAD_TOL"
    ENERGY_TOL = "ENERGY_TOL"
    MAX_ITER = "MAX_ITER"


@dataclass(frozen=True)
class IterationRecord:
    """Diagnostics of one outer iteration, one entry per block in every tuple."""

    iteration: int
    energy: float
    grad_norm: float
    shifts: tuple
    deltas: tuple
    thetas: tuple
    halvings: tuple
    inner_iterations: int = 0
    linear_iterations: int = 0

    @property
    def theta_u(self) -> float:
        return self.thetas[0]

    @property
    def theta_v(self) -> float:
        return self.thetas[1]

    @property
    def delta_u(self) -> float:
        return self.deltas[0]

    @property
    def delta_v(self) -> float:
        return self.deltas[1]

    def _to_dict(self) -> dict:
        """Method that overrides the way the object is formatted to JSON.

        Returns:
            dict: JSON-friendly representation of the object.
        """
        return {
            "iteration": self.iteration,
            "energy": float(self.energy),
            "grad_norm": float(self.grad_norm),
            "shifts": [float(value) for value in self.shifts],
            "deltas": [float(value) for value in self.deltas],
            "thetas": [float(value) for value in self.thetas],
            "halvings": [int(value) for value in self.halvings],
            "inner_iterations": self.inner_iterations,
            "linear_iterations": self.linear_iterations,
        }


@dataclass
class SolveReport:
    """Final iterate, per-iteration history, timing and termination reason of a solver run."""

    method: str
    converged: bool
    iterations: int
    final: object
    termination: Termination
    wall_time: float
    history: list = field(default_factory=list)
    inner_iterations: int = 0
    energy_parts: dict = field(default_factory=dict)

    @property
    def energy(self) -> float:
        """Final objective value."""
        return self.final.energy

    @property
    def grad_norm(self) -> float:
        """Final gradient norm."""
        return self.final.grad_norm

    def energies(self) -> list:
        """Returns the energy after every outer iteration, starting with the initial iterate.

        Returns:
            energies (list): Energy history.
        """
        return [record.energy for record in self.history]

    def _to_dict(self) -> dict:
        """Method that overrides the way the object is formatted to JSON.

        Returns:
            dict: JSON-friendly representation of the object.
        """
        return {
            "method": self.method,
            "converged": self.converged,
            "iterations": self.iterations,
            "inner_iterations": self.inner_iterations,
            "termination": self.termination.value,
            "wall_time": float(self.wall_time),
            "energy": float(self.energy),
            "grad_norm": float(self.grad_norm),
            "shifts": [float(value) for value in self.final.shifts],
            "energy_parts": {name: float(value) for name, value in self.energy_parts.items()},
            "history": [record._to_dict() for record in self.history],
        }
