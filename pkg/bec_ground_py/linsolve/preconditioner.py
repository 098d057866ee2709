"""Contains the Fourier preconditioner (cI - Laplacian)^-1."""

# Python libraries
import numpy as np
import scipy.fft as fft

# bec_ground_py components
from ..grid import squared_wavenumbers


class FourierPreconditioner:
    """Applies (cI - Laplacian)^-1 on a periodic grid with the shape and spacings of a given grid.

    The Laplacian here has symbol -|k|^2, twice the kinetic symbol of the operators. Finite-difference grids reuse the
    periodic box spanned by their interior nodes.
    """

    def __init__(self, grid: object, shift: float) -> object:
        """Creates a FourierPreconditioner object.

        Args:
            grid (Grid): Grid whose shape and spacings define the periodic box.
            shift (float): Constant c > 0.

        Returns:
            object: Created FourierPreconditioner object.
        """
        if not shift > 0:
            raise ValueError(f"The preconditioner shift must be positive (got {shift}).")

        self.shape = grid.shape
        self.shift = float(shift)
        self.inverse_symbol = 1.0 / (self.shift + squared_wavenumbers(grid.shape, grid.spacings))

    def apply(self, b: np.ndarray) -> np.ndarray:
        """Computes (cI - Laplacian)^-1 b.

        Args:
            b (np.ndarray): Vector of grid unknowns.

        Returns:
            y (np.ndarray): Preconditioned vector.
        """
        return fft.irfftn(self.inverse_symbol * fft.rfftn(b.reshape(self.shape)), s=self.shape).ravel()


def precondition(b: np.ndarray, grid: object, c: float) -> np.ndarray:
    """Applies (cI - Laplacian)^-1 to b through Fourier diagonalization.

    Args:
        b (np.ndarray): Vector of grid unknowns.
        grid (Grid): Grid defining the periodic box.
        c (float): Shift c > 0.

    Returns:
        y (np.ndarray): Preconditioned vector.
    """
    return FourierPreconditioner(grid=grid, shift=c).apply(b)
