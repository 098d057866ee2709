"""Contains the alternating Newton-Noda iteration (ANNI)."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..model import energy_parts
from .block_solver import BlockSolver
from .newton_noda_step import newton_noda_step
from .solve_report import SolveReport
from .solver_config import SolverConfig


class AnniSolver(BlockSolver):
    """Performs one modified Newton-Noda step per block and outer iteration, each accepted only on strict descent."""

    method = "anni"

    def update_block(self, j: int, view: object, u: np.ndarray) -> dict:
        """Computes the one-step modified Newton-Noda update of block j.

        Args:
            j (int): Block index.
            view (BlockView): Subproblem of block j with the other blocks frozen.
            u (np.ndarray): Current iterate of block j.

        Returns:
            update (dict): New iterate and step diagnostics.
        """
        step = newton_noda_step(view, u, self.config, self.precond_shift)
        return {
            "u": step.u_next,
            "shift": step.shift,
            "delta": step.delta,
            "theta": step.theta,
            "halvings": step.halvings,
            "linear_iterations": step.linear_iterations,
        }


def anni(p: object, cfg: SolverConfig = None, initial: tuple = None) -> SolveReport:
    """Computes the ground state of a two-component problem by ANNI.

    Args:
        p (CoupledProblem): Problem data.
        cfg (SolverConfig, optional): Solver settings. Defaults to SolverConfig().
        initial (tuple, optional): Initial (u0, v0). Defaults to the configured initial guess.

    Returns:
        report (SolveReport): Final iterate, history and termination reason.
    """
    report = AnniSolver(problem=p.as_multiblock(), config=cfg).run(blocks=None if initial is None else list(initial))
    report.energy_parts = energy_parts(p, report.final.u, report.final.v)
    return report
