"""Contains the multi-block objective sum_j h_j(u_j) + sum_{j<s} beta_js sum u_j^2 u_s^2 on a product of spheres."""

# Python libraries
import numpy as np

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode
from .block_view import BlockView


class MultiBlockProblem:
    """Blocks j = 1..m with h_j(u) = 2 h~_j(u) + u^T A_j u coupled through symmetric quartic terms.

    The coupling matrix is symmetrized as (beta_sj + beta_js) / 2 and its diagonal is ignored.
    """

    def __init__(
        self,
        operators: list,
        nonlinearities: list,
        couplings: np.ndarray,
        grid: object = None,
        physical_betas: tuple = None,
        label: str = "",
    ) -> object:
        """Creates a MultiBlockProblem object.

        Args:
            operators (list): Linear part A_j of every block.
            nonlinearities (list): Nonlinearity plugin h~_j of every block.
            couplings (np.ndarray): m x m coupling coefficients beta_js.
            grid (Grid, optional): Grid shared by the blocks. Defaults to the grid of the first operator.
            physical_betas (tuple, optional): Continuum self-interactions used to pick the preconditioner shift. Defaults to (0.0,).
            label (str, optional): Label used in logs. Defaults to "".

        Returns:
            object: Created MultiBlockProblem object.
        """
        couplings = np.asarray(couplings, dtype=float)
        m = len(operators)

        if m == 0 or len(nonlinearities) != m:
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"Got {m} operators and {len(nonlinearities)} nonlinearities.")
        if couplings.shape != (m, m):
            raise BecGroundError(ErrorCode.INVALID_SPEC, f"The coupling matrix must be {m} x {m} (got {couplings.shape}).")
        if not np.all(np.isfinite(couplings)):
            raise BecGroundError(ErrorCode.INVALID_SPEC, "Coupling coefficients must be finite.")
        if len({operator.size for operator in operators}) != 1:
            raise BecGroundError(ErrorCode.INVALID_SPEC, "Every block operator must act on the same number of unknowns.")

        symmetric = 0.5 * (couplings + couplings.T)
        np.fill_diagonal(symmetric, 0.0)

        self.operators = list(operators)
        self.nonlinearities = list(nonlinearities)
        self.couplings = symmetric
        self.grid = grid if grid is not None else operators[0].grid
        self.physical_betas = tuple(physical_betas) if physical_betas is not None else (0.0,)
        self.label = label

    def __repr__(self) -> str:
        return f"MultiBlockProblem(m={self.m}, size={self.size}, label='{self.label}')"

    @property
    def m(self) -> int:
        """Number of blocks."""
        return len(self.operators)

    @property
    def size(self) -> int:
        """Unknown count per block."""
        return self.operators[0].size

    def block(self, j: int, blocks: list) -> BlockView:
        """Returns the subproblem of block j with every other block frozen.

        Args:
            j (int): Block index.
            blocks (list): Current unit vectors of all blocks.

        Returns:
            view (BlockView): Subproblem of block j.
        """
        background = np.zeros(self.size)
        for s, partner in enumerate(blocks):
            if s != j and self.couplings[j, s] != 0.0:
                background += self.couplings[j, s] * partner**2

        return BlockView(operator=self.operators[j], nonlinearity=self.nonlinearities[j], background=background)

    def energy(self, blocks: list) -> float:
        """Evaluates the multi-block objective.

        Args:
            blocks (list): Unit vectors of all blocks.

        Returns:
            f (float): Objective value.
        """
        total = 0.0
        for j, (operator, nonlinearity, u) in enumerate(zip(self.operators, self.nonlinearities, blocks)):
            total += 2.0 * nonlinearity.value(u) + float(u @ operator.apply(u))
            for s in range(j + 1, self.m):
                total += self.couplings[j, s] * float(np.sum(u**2 * blocks[s] ** 2))

        return total

    def grad_norm(self, blocks: list) -> float:
        """Computes the combined projected-residual norm over every block.

        Args:
            blocks (list): Unit vectors of all blocks.

        Returns:
            norm (float): sqrt(sum_j |A_j(u_j) u_j - (u_j^T A_j(u_j) u_j) u_j|^2).
        """
        squares = 0.0
        for j, u in enumerate(blocks):
            projected = self.block(j, blocks).projected_residual(u)
            squares += float(projected @ projected)

        return float(np.sqrt(squares))
