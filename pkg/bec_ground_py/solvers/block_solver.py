"""Contains the outer iteration loop shared by the ANNI, ALM and multi-block solvers."""

# Python libraries
import logging
import time

import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from ..model import IterateState
from .solve_report import IterationRecord, SolveReport, Termination
from .solver_config import SolverConfig, initial_blocks
from .stopping import check_stop

logger = logging.getLogger(__name__)

POSITIVE_START_TOLERANCE = 1e-10


class BlockSolver:
    """Class responsible for driving the outer block-cyclic iterations over a MultiBlockProblem.

    Subclasses implement update_block(), which returns the new iterate of one block together with its diagnostics.
    """

    method = "block"

    def __init__(self, problem: object, config: SolverConfig = None) -> object:
        """Creates a BlockSolver object.

        Args:
            problem (MultiBlockProblem): Problem to solve.
            config (SolverConfig, optional): Solver settings. Defaults to SolverConfig().

        Returns:
            object: Created BlockSolver object.
        """
        self.problem = problem
        self.config = config if config is not None else SolverConfig()
        self.precond_shift = self.config.inner.resolve_precond_shift(problem.physical_betas)

        self.blocks = None
        self.state = None
        self.history = []
        self.iteration = 0
        self.inner_iterations = 0
        self.running = False

    def initialize(self, blocks: list = None) -> None:
        """Sets the initial iterate.

        Args:
            blocks (list, optional): Positive unit vectors, one per block. Defaults to the configured initial guess.
        """
        if blocks is None:
            blocks = initial_blocks(self.problem, self.config.init)

        if len(blocks) != self.problem.m:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"Expected {self.problem.m} initial blocks, got {len(blocks)}.")

        for index, block in enumerate(blocks):
            if abs(np.linalg.norm(block) - 1) > POSITIVE_START_TOLERANCE or np.any(np.asarray(block) <= 0):
                raise BecGroundError(ErrorCode.INVALID_SPEC, f"Initial block {index} must be a strictly positive unit vector.")

        self.blocks = [np.array(block, dtype=float) for block in blocks]
        self.history = []
        self.iteration = 0
        self.inner_iterations = 0
        self.state = self.snapshot()

    def snapshot(self) -> IterateState:
        """Captures the current iterate with its Rayleigh-quotient shifts, energy and gradient norm.

        Returns:
            state (IterateState): Current iterate.
        """
        shifts = tuple(self.problem.block(j, self.blocks).rayleigh(u) for j, u in enumerate(self.blocks))
        return IterateState(
            blocks=tuple(self.blocks),
            shifts=shifts,
            energy=self.problem.energy(self.blocks),
            grad_norm=self.problem.grad_norm(self.blocks),
        )

    def run(self, blocks: list = None) -> SolveReport:
        """Executes the outer iterations until the stopping rule fires.

        Args:
            blocks (list, optional): Initial blocks. Defaults to the configured initial guess.

        Returns:
            report (SolveReport): Final iterate, history and termination reason.
        """
        self.initialize(blocks)
        started = time.perf_counter()

        self.monitor(IterationRecord(0, self.state.energy, self.state.grad_norm, self.state.shifts, (), (), ()))
        termination = check_stop(self.state, None, self.config, self.iteration)
        self.running = termination is None

        while self.running:
            self.iteration += 1
            previous = self.state

            try:
                record = self.step()
            except BecGroundError as error:
                error.iteration = self.iteration
                raise

            self.state = self.snapshot()
            self.monitor(record)

            termination = check_stop(self.state, previous, self.config, self.iteration)
            self.running = termination is None

        wall_time = time.perf_counter() - started
        converged = termination != Termination.MAX_ITER
        logger.info(
            "%s %s: f=%.10f nrmG=%.3e iterations=%d (%s) in %.3fs",
            self.method,
            self.problem.label,
            self.state.energy,
            self.state.grad_norm,
            self.iteration,
            termination.value,
            wall_time,
        )

        return SolveReport(
            method=self.method,
            converged=converged,
            iterations=self.iteration,
            final=self.state,
            termination=termination,
            wall_time=wall_time,
            history=self.history,
            inner_iterations=self.inner_iterations,
        )

    def step(self) -> IterationRecord:
        """Advances every block once, in order, each against the freshest partners.

        Returns:
            record (IterationRecord): Diagnostics of the outer iteration.
        """
        shifts, deltas, thetas, halvings = [], [], [], []
        inner_iterations = linear_iterations = 0

        for j in range(self.problem.m):
            view = self.problem.block(j, self.blocks)
            update = self.update_block(j, view, self.blocks[j])

            self.blocks[j] = update["u"]
            shifts.append(update["shift"])
            deltas.append(update.get("delta", 0.0))
            thetas.append(update.get("theta", 0.0))
            halvings.append(update.get("halvings", 0))
            inner_iterations += update.get("inner_iterations", 0)
            linear_iterations += update.get("linear_iterations", 0)

        self.inner_iterations += inner_iterations
        return IterationRecord(
            iteration=self.iteration,
            energy=self.problem.energy(self.blocks),
            grad_norm=self.problem.grad_norm(self.blocks),
            shifts=tuple(shifts),
            deltas=tuple(deltas),
            thetas=tuple(thetas),
            halvings=tuple(halvings),
            inner_iterations=inner_iterations,
            linear_iterations=linear_iterations,
        )

    def update_block(self, j: int, view: object, u: np.ndarray) -> dict:
        """Computes the new iterate of block j.

        Args:
            j (int): Block index.
            view (BlockView): Subproblem of block j with the other blocks frozen.
            u (np.ndarray): Current iterate of block j.

        Returns:
            update (dict): New iterate under "u", the shift used under "shift" and optional diagnostics.
        """
        raise NotImplementedError

    def monitor(self, record: IterationRecord) -> None:
        """Stores the diagnostics of an iteration.

        Args:
            record (IterationRecord): Diagnostics to store.
        """
        self.history.append(record)
        logger.debug(
            "%s %d: f=%.14g nrmG=%.3e thetas=%s deltas=%s",
            self.method,
            record.iteration,
            record.energy,
            record.grad_norm,
            record.thetas,
            record.deltas,
        )
