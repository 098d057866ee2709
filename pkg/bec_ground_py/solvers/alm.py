"""Contains the alternating minimization scheme (ALM) with Newton-Noda subproblem solves."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..model import energy_parts
from .block_solver import BlockSolver
from .nni import block_nni
from .solve_report import SolveReport
from .solver_config import SolverConfig


class AlmSolver(BlockSolver):
    """Minimizes each block in turn over its sphere, to inner_nni_tol, with the other blocks frozen."""

    method = "alm"

    def update_block(self, j: int, view: object, u: np.ndarray) -> dict:
        """Solves the subproblem of block j.

        Args:
            j (int): Block index.
            view (BlockView): Subproblem of block j with the other blocks frozen.
            u (np.ndarray): Warm start.

        Returns:
            update (dict): Subproblem minimizer and its eigenvalue.
        """
        result = block_nni(view, u, self.config, self.precond_shift)
        return {
            "u": result.u,
            "shift": result.lam,
            "theta": 1.0 if result.iterations else 0.0,
            "inner_iterations": result.iterations,
            "linear_iterations": result.linear_iterations,
        }


def alm(p: object, cfg: SolverConfig = None, initial: tuple = None) -> SolveReport:
    """Computes the ground state of a two-component problem by alternating minimization.

    Args:
        p (CoupledProblem): Problem data.
        cfg (SolverConfig, optional): Solver settings. Defaults to SolverConfig().
        initial (tuple, optional): Initial (u0, v0). Defaults to the configured initial guess.

    Returns:
        report (SolveReport): Final iterate, history, termination reason and total inner iterations.
    """
    report = AlmSolver(problem=p.as_multiblock(), config=cfg).run(blocks=None if initial is None else list(initial))
    report.energy_parts = energy_parts(p, report.final.u, report.final.v)
    return report
