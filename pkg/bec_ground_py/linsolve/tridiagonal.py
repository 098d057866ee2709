"""Contains the direct solver for symmetric positive definite tridiagonal systems."""

# Python libraries
import numpy as np
from scipy.linalg import LinAlgError, solveh_banded

# bec_ground_py components
from ..errors import BecGroundError, ErrorCode


def solve_tridiagonal_spd(diagonal: np.ndarray, off_diagonal: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solves T y = b for a symmetric tridiagonal T with a banded Cholesky factorization (no pivoting).

    Args:
        diagonal (np.ndarray): Main diagonal of T.
        off_diagonal (np.ndarray): First super-diagonal of T.
        b (np.ndarray): Right-hand side, one vector or one column per right-hand side.

    Returns:
        y (np.ndarray): Solution with the shape of b.
    """
    # Upper banded storage expected by solveh_banded
    bands = np.zeros((2, diagonal.size))
    bands[0, 1:] = off_diagonal
    bands[1, :] = diagonal

    try:
        return solveh_banded(bands, b, check_finite=False)
    except LinAlgError as error:
        raise BecGroundError(
            ErrorCode.INDEFINITE_JACOBIAN, f"Tridiagonal Jacobian is not positive definite ({error})."
        ) from error
