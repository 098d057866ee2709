"""Shared fixtures of the test suite."""

# Python libraries
import numpy as np
import pytest
import scipy.sparse as sparse

# bec_ground_py components
from bec_ground_py.grid import Domain, Grid, Scheme, Structure, SymmetricOperator
from bec_ground_py.grid import HarmonicLatticePotential, build_fd_operator, constant_potential
from bec_ground_py.model import CoupledProblem


@pytest.fixture
def matrix_operator():
    """Wraps an explicit symmetric matrix as an operator on a 1D grid with unit spacing."""

    def wrap(matrix) -> SymmetricOperator:
        matrix = np.asarray(matrix, dtype=float)
        size = matrix.shape[0]
        grid = Grid(domain=Domain(lower=(0.0,), upper=(float(size + 1),)), counts=size + 1, scheme=Scheme.FD)
        return SymmetricOperator(
            grid=grid,
            potential_values=np.diag(matrix).copy(),
            structure=Structure.TRIDIAGONAL_BLOCKS,
            matrix=sparse.csr_matrix(matrix),
        )

    return wrap


@pytest.fixture
def fd_operator():
    """1D finite-difference operator with V = 1 on five interior nodes (h = 1)."""
    return build_fd_operator(domain=Domain(lower=(0.0,), upper=(6.0,)), n=6, potential=constant_potential(1.0))


@pytest.fixture
def small_problem():
    """Harmonic trap on [-6, 6] with 47 unknowns and moderate interactions."""
    operator = build_fd_operator(domain=Domain.symmetric(6.0, dims=1), n=48, potential=HarmonicLatticePotential())
    return CoupledProblem(a1=operator, a2=operator.scaled(0.8), beta11=6.0, beta22=4.0, beta12=3.0, grid=operator.grid)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_unit(rng):
    """Draws unit vectors, optionally with strictly positive entries."""

    def draw(size: int, positive: bool = False) -> np.ndarray:
        vector = rng.uniform(0.1, 1.0, size) if positive else rng.standard_normal(size)
        return vector / np.linalg.norm(vector)

    return draw
