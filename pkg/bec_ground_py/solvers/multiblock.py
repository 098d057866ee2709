"""Contains the multi-block ANNI front end."""

# Python libraries
from dataclasses import dataclass

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..model import MultiBlockProblem
from .anni import AnniSolver
from .solve_report import SolveReport
from .solver_config import SolverConfig


@dataclass(frozen=True)
class BlockSpec:
    """One block: its operator, its nonlinearity plugin and its row of coupling coefficients beta_js."""

    operator: object
    nonlinearity: object
    coupling_row: tuple


def build_multiblock_problem(blocks: list, physical_betas: tuple = None, label: str = "") -> MultiBlockProblem:
    """Assembles a MultiBlockProblem from block specifications.

    Args:
        blocks (list): BlockSpec objects.
        physical_betas (tuple, optional): Continuum self-interactions used to pick the preconditioner shift. Defaults to None.
        label (str, optional): Label used in logs. Defaults to "".

    Returns:
        problem (MultiBlockProblem): Problem with symmetrized couplings.
    """
    rows = [tuple(block.coupling_row) for block in blocks]
    if any(len(row) != len(blocks) for row in rows):
        raise BecGroundError(ErrorCode.INVALID_SPEC, f"Every coupling row must have {len(blocks)} entries.")

    return MultiBlockProblem(
        operators=[block.operator for block in blocks],
        nonlinearities=[block.nonlinearity for block in blocks],
        couplings=np.array(rows, dtype=float),
        physical_betas=physical_betas,
        label=label,
    )


def multiblock_anni(blocks: list, cfg: SolverConfig = None, initial: list = None, physical_betas: tuple = None) -> SolveReport:
    """Runs ANNI cyclically over m blocks.

    Args:
        blocks (list): BlockSpec objects.
        cfg (SolverConfig, optional): Solver settings. Defaults to SolverConfig().
        initial (list, optional): Initial unit vectors, one per block. Defaults to the configured initial guess.
        physical_betas (tuple, optional): Continuum self-interactions used to pick the preconditioner shift. Defaults to None.

    Returns:
        report (SolveReport): Final iterate, history and termination reason.
    """
    return AnniSolver(problem=build_multiblock_problem(blocks, physical_betas), config=cfg).run(blocks=initial)
