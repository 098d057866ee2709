"""Contains the finite-difference (homogeneous Dirichlet) operator builder."""

# Python libraries
from functools import reduce

import scipy.sparse as sparse

# bec_ground_py components
from ..grid import Scheme, build_grid
from ..potentials import sample_potential
from .symmetric_operator import Structure, SymmetricOperator


def second_difference(points: int, spacing: float) -> sparse.spmatrix:
    """Builds the 1D stencil of -1/2 d^2/dx^2 on the interior nodes.

    Args:
        points (int): Number of interior nodes.
        spacing (float): Mesh width h.

    Returns:
        stencil (sparse.spmatrix): Tridiagonal matrix with 1/h^2 on the diagonal and -1/(2h^2) beside it.
    """
    diagonal = 1.0 / spacing**2
    off_diagonal = -0.5 / spacing**2
    return sparse.diags([off_diagonal, diagonal, off_diagonal], offsets=[-1, 0, 1], shape=(points, points), format="csr")


def build_fd_operator(domain: object, n, potential: object) -> SymmetricOperator:
    """Assembles A = -1/2 Laplacian + diag(V) with second-order central differences.

    The d-dimensional kinetic term is the Kronecker sum of the 1D stencils, with the first axis varying slowest to
    match the row-major node order.

    Args:
        domain (Domain): Truncated domain.
        n (int or tuple): Points per axis (the operator acts on the n-1 interior nodes of each axis).
        potential (object): Potential specification.

    Returns:
        operator (SymmetricOperator): Assembled operator.
    """
    grid = build_grid(domain=domain, counts=n, scheme=Scheme.FD)
    potential_values = sample_potential(potential=potential, grid=grid)

    # Kronecker sum of the 1D stencils
    identities = [sparse.identity(points, format="csr") for points in grid.shape]
    kinetic = sparse.csr_matrix((grid.size, grid.size))
    for axis, (points, spacing) in enumerate(zip(grid.shape, grid.spacings)):
        factors = identities[:axis] + [second_difference(points, spacing)] + identities[axis + 1 :]
        kinetic = kinetic + reduce(lambda left, right: sparse.kron(left, right, format="csr"), factors)

    matrix = (kinetic + sparse.diags(potential_values, format="csr")).tocsr()

    return SymmetricOperator(
        grid=grid,
        potential_values=potential_values,
        structure=Structure.TRIDIAGONAL_BLOCKS,
        matrix=matrix,
        stencil=tuple((1.0 / spacing**2, -0.5 / spacing**2) for spacing in grid.spacings),
    )
