"""Contains the discretized single-particle operator A = -1/2 Laplacian + diag(V)."""

# Python libraries
from enum import Enum

import networkx as nx
import numpy as np
import scipy.fft as fft
import scipy.sparse as sparse
from scipy.sparse.linalg import LinearOperator


class Structure(str, Enum):
    """Storage layouts of SymmetricOperator objects."""

    TRIDIAGONAL_BLOCKS = "TRIDIAGONAL_BLOCKS"
    FOURIER_DIAGONAL_PLUS_DIAGONAL = "FOURIER_DIAGONAL_PLUS_DIAGONAL"


class SymmetricOperator:
    """Symmetric linear operator on the unknowns of a grid.

    Finite-difference operators hold an assembled sparse matrix (sums of Kronecker-expanded tridiagonal stencils plus the
    potential on the diagonal). Spectral operators hold the Fourier symbol of the kinetic term and apply it with real
    FFTs. Instances are immutable once built and can be shared by concurrent solver runs.
    """

    def __init__(
        self,
        grid: object,
        potential_values: np.ndarray,
        structure: Structure,
        matrix: sparse.spmatrix = None,
        kinetic_symbol: np.ndarray = None,
        stencil: tuple = None,
        scale: float = 1.0,
        irreducible: bool = None,
    ) -> object:
        """Creates a SymmetricOperator object.

        Args:
            grid (Grid): Grid the operator acts on.
            potential_values (np.ndarray): Diagonal potential part (already multiplied by scale).
            structure (Structure): Storage layout.
            matrix (sparse.spmatrix, optional): Assembled FD matrix (already multiplied by scale). Defaults to None.
            kinetic_symbol (np.ndarray, optional): Half-spectrum symbol of the kinetic part (already multiplied by scale). Defaults to None.
            stencil (tuple, optional): (diagonal, off-diagonal) FD stencil coefficients per axis, unscaled. Defaults to None.
            scale (float, optional): Factor the operator has been multiplied by. Defaults to 1.0.
            irreducible (bool, optional): Known irreducibility of the FD pattern (computed when omitted). Defaults to None.

        Returns:
            object: Created SymmetricOperator object.
        """
        self.grid = grid
        self.potential_values = potential_values
        self.structure = Structure(structure)
        self.matrix = matrix
        self.kinetic_symbol = kinetic_symbol
        self.stencil = stencil
        self.scale = float(scale)

        self.size = grid.size

        # M-matrix certificate (diagonal entries positive, off-diagonals nonpositive, irreducible)
        if self.structure == Structure.TRIDIAGONAL_BLOCKS:
            self.irreducible = self.is_irreducible() if irreducible is None else irreducible
            self.m_matrix = self.scale > 0 and bool(np.all(self.matrix.diagonal() > 0)) and self.irreducible
        else:
            self.irreducible = None
            self.m_matrix = False

    def __repr__(self) -> str:
        return f"SymmetricOperator(structure={self.structure.value}, size={self.size}, m_matrix={self.m_matrix})"

    @property
    def supports_direct_solve(self) -> bool:
        """Whether shifted systems can be solved by the banded direct backend (1D finite differences)."""
        return self.structure == Structure.TRIDIAGONAL_BLOCKS and self.grid.dims == 1

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Computes Ax.

        Args:
            x (np.ndarray): Vector of grid unknowns.

        Returns:
            ax (np.ndarray): Action of the operator on x.
        """
        if self.structure == Structure.TRIDIAGONAL_BLOCKS:
            return self.matrix @ x

        shape = self.grid.shape
        kinetic = fft.irfftn(self.kinetic_symbol * fft.rfftn(x.reshape(shape)), s=shape).ravel()
        return kinetic + self.potential_values * x

    def tridiagonal_bands(self) -> tuple:
        """Returns the main and first off-diagonal of a 1D finite-difference operator.

        Returns:
            diagonal, off_diagonal (tuple): Arrays of length size and size - 1.
        """
        if not self.supports_direct_solve:
            raise ValueError(f"{self} is not a 1D tridiagonal operator.")

        return self.matrix.diagonal(0), self.matrix.diagonal(1)

    def scaled(self, factor: float) -> object:
        """Returns the operator multiplied by a scalar.

        Args:
            factor (float): Multiplier.

        Returns:
            operator (SymmetricOperator): factor * A.
        """
        return SymmetricOperator(
            grid=self.grid,
            potential_values=factor * self.potential_values,
            structure=self.structure,
            matrix=factor * self.matrix if self.matrix is not None else None,
            kinetic_symbol=factor * self.kinetic_symbol if self.kinetic_symbol is not None else None,
            stencil=self.stencil,
            scale=factor * self.scale,
            irreducible=self.irreducible,
        )

    def as_linear_operator(self) -> LinearOperator:
        """Wraps the operator as a SciPy LinearOperator.

        Returns:
            operator (LinearOperator): Matrix-free view of A.
        """
        return LinearOperator(shape=(self.size, self.size), matvec=self.apply, rmatvec=self.apply, dtype=float)

    def to_dense(self) -> np.ndarray:
        """Assembles the operator as a dense matrix by applying it to every unit vector.

        Returns:
            matrix (np.ndarray): Dense (size, size) matrix.
        """
        if self.matrix is not None:
            return self.matrix.toarray()

        return np.column_stack([self.apply(column) for column in np.eye(self.size)])

    def is_irreducible(self) -> bool:
        """Checks whether the graph of the off-diagonal nonzero pattern is connected.

        Returns:
            irreducible (bool): True when every unknown is reachable from every other one.
        """
        if self.matrix is None:
            raise ValueError("Irreducibility is only certified for assembled finite-difference operators.")

        pattern = sparse.triu(self.matrix, k=1).tocoo()
        graph = nx.Graph()
        graph.add_nodes_from(range(self.size))
        graph.add_edges_from(zip(pattern.row[pattern.data != 0], pattern.col[pattern.data != 0]))

        return nx.is_connected(graph)
