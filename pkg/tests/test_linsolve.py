"""Tests of the Jacobian and bordered Newton solves."""

# Python libraries
import numpy as np
import pytest

# bec_ground_py components
from bec_ground_py.errors import BecGroundError, ErrorCode
from bec_ground_py.grid import Domain, build_grid, build_spectral_operator, constant_potential
from bec_ground_py.linsolve import (
    Backend,
    LinearSolverConfig,
    estimate_min_eigenvalue,
    pcg,
    precondition,
    solve_bordered,
    solve_jacobian,
    solve_tridiagonal_spd,
    uses_direct_backend,
)
from bec_ground_py.model import CoupledProblem, apply_jacobian, min_ratio, residual


def spd_matrix(rng, size: int) -> np.ndarray:
    matrix = rng.standard_normal((size, size))
    return matrix @ matrix.T + size * np.eye(size)


def dense_jacobian(p: CoupledProblem, u: np.ndarray, v: np.ndarray, lam: float) -> np.ndarray:
    return np.column_stack([apply_jacobian(p, u, v, lam, column) for column in np.eye(p.n)])


class TestDirectSolves:
    def test_tridiagonal_matches_dense_solve(self, rng):
        diagonal = rng.uniform(3.0, 4.0, 9)
        off_diagonal = rng.uniform(-1.0, 1.0, 8)
        b = rng.standard_normal((9, 2))

        dense = np.diag(diagonal) + np.diag(off_diagonal, 1) + np.diag(off_diagonal, -1)

        np.testing.assert_allclose(solve_tridiagonal_spd(diagonal, off_diagonal, b), np.linalg.solve(dense, b), rtol=1e-10)

    def test_indefinite_tridiagonal_is_reported(self):
        with pytest.raises(BecGroundError) as error:
            solve_tridiagonal_spd(np.array([1.0, -1.0]), np.array([0.0]), np.ones(2))

        assert error.value.code == ErrorCode.INDEFINITE_JACOBIAN


class TestPcg:
    def test_matches_dense_solve(self, rng):
        matrix = spd_matrix(rng, 12)
        b = rng.standard_normal(12)

        y, iterations = pcg(lambda x: matrix @ x, b, lambda r: r, tol=1e-12, maxit=100)

        np.testing.assert_allclose(y, np.linalg.solve(matrix, b), rtol=1e-9)
        assert 0 < iterations <= 100

    def test_zero_right_hand_side(self):
        y, iterations = pcg(lambda x: x, np.zeros(4), lambda r: r)

        assert iterations == 0
        np.testing.assert_array_equal(y, np.zeros(4))

    def test_nonpositive_curvature_aborts(self):
        with pytest.raises(BecGroundError) as error:
            pcg(lambda x: np.array([1.0, -1.0]) * x, np.array([0.0, 1.0]), lambda r: r)

        assert error.value.code == ErrorCode.INDEFINITE_JACOBIAN

    def test_iteration_cap(self, rng):
        matrix = spd_matrix(rng, 10)

        with pytest.raises(BecGroundError) as error:
            pcg(lambda x: matrix @ x, rng.standard_normal(10), lambda r: r, tol=1e-12, maxit=1)

        assert error.value.code == ErrorCode.NO_CONVERGENCE


class TestLanczos:
    def test_full_krylov_space_is_exact(self, rng):
        matrix = spd_matrix(rng, 8)

        estimate = estimate_min_eigenvalue(lambda x: matrix @ x, rng.standard_normal(8), steps=8)

        assert estimate == pytest.approx(np.linalg.eigvalsh(matrix)[0], rel=1e-8)

    def test_short_run_bounds_the_smallest_eigenvalue(self, rng):
        matrix = spd_matrix(rng, 40)

        estimate = estimate_min_eigenvalue(lambda x: matrix @ x, rng.standard_normal(40), steps=5)

        assert estimate >= np.linalg.eigvalsh(matrix)[0] - 1e-10

    def test_eigenvector_start_stops_early(self):
        matrix = np.diag([1.0, 2.0, 3.0])

        assert estimate_min_eigenvalue(lambda x: matrix @ x, np.array([1.0, 0.0, 0.0])) == pytest.approx(1.0)


class TestPreconditioner:
    def test_constant_vector(self):
        grid = build_grid(Domain.symmetric(np.pi, dims=1), 8, "SPECTRAL")

        np.testing.assert_allclose(precondition(np.full(8, 2.0), grid, 4.0), np.full(8, 0.5), atol=1e-14)

    def test_single_fourier_mode(self):
        grid = build_grid(Domain.symmetric(np.pi, dims=1), 8, "SPECTRAL")
        b = np.cos(2 * grid.nodes()[:, 0])

        np.testing.assert_allclose(precondition(b, grid, 3.0), b / 7.0, atol=1e-14)

    def test_inverts_shifted_laplacian(self, rng):
        c = 30.0
        # 2 (-1/2 Laplacian + c/2) = cI - Laplacian
        operator = build_spectral_operator(Domain.symmetric(3.0, dims=2), 16, constant_potential(c / 2))
        b = rng.standard_normal(operator.size)

        y = precondition(b, operator.grid, c)

        np.testing.assert_allclose(2 * operator.apply(y), b, atol=1e-12 * np.linalg.norm(b))


class TestLinearSolverConfig:
    def test_precond_shift_follows_interaction_strength(self):
        config = LinearSolverConfig()

        assert config.resolve_precond_shift((10.0, 9.0)) == 3.0
        assert config.resolve_precond_shift((400.0, 400.0)) == 30.0
        assert LinearSolverConfig(precond_shift=7.0).resolve_precond_shift((400.0,)) == 7.0

    def test_invalid_tolerance_is_rejected(self):
        with pytest.raises(BecGroundError) as error:
            LinearSolverConfig(pcg_tol=1.5)

        assert error.value.code == ErrorCode.INVALID_SPEC

    def test_backend_names_are_case_insensitive(self):
        assert LinearSolverConfig(backend="pcg").backend == Backend.PCG

    def test_direct_backend_needs_tridiagonal_operator(self):
        operator = build_spectral_operator(Domain.symmetric(2.0, dims=1), 8, constant_potential(1.0))
        p = CoupledProblem(a1=operator, a2=operator, beta11=1.0, beta22=1.0, beta12=0.0)

        with pytest.raises(BecGroundError) as error:
            uses_direct_backend(p.u_block(np.ones(8)), LinearSolverConfig(backend=Backend.DIRECT_TRIDIAG))

        assert error.value.code == ErrorCode.INVALID_SPEC


class TestSolveJacobian:
    def test_identity_jacobian(self, matrix_operator, random_unit, rng):
        u, v = random_unit(6), random_unit(6)
        lam = 0.5
        a1 = np.diag((1 + lam) - 3.0 * u**2 - 0.5 * v**2)
        p = CoupledProblem(a1=matrix_operator(a1), a2=matrix_operator(np.eye(6)), beta11=1.0, beta22=1.0, beta12=0.5)
        b = rng.standard_normal(6)

        np.testing.assert_allclose(solve_jacobian(p, u, v, lam, b, LinearSolverConfig()), b, rtol=1e-12)

    @pytest.mark.parametrize("backend", [Backend.DIRECT_TRIDIAG, Backend.PCG])
    def test_dense_oracle(self, fd_operator, random_unit, rng, backend):
        p = CoupledProblem(a1=fd_operator, a2=fd_operator, beta11=2.0, beta22=1.0, beta12=1.0)
        u, v = random_unit(p.n, positive=True), random_unit(p.n, positive=True)
        b = rng.standard_normal(p.n)

        y = solve_jacobian(p, u, v, 0.5, b, LinearSolverConfig(backend=backend, pcg_tol=1e-13))

        np.testing.assert_allclose(y, np.linalg.solve(dense_jacobian(p, u, v, 0.5), b), rtol=1e-10)

    def test_spectral_mode(self):
        operator = build_spectral_operator(Domain.symmetric(np.pi, dims=1), 8, constant_potential(1.0))
        p = CoupledProblem(a1=operator, a2=operator, beta11=0.0, beta22=0.0, beta12=0.0)
        x = operator.grid.nodes()[:, 0]
        b = np.cos(x)

        y = solve_jacobian(p, np.ones(8) / np.sqrt(8), np.ones(8) / np.sqrt(8), 0.0, b, LinearSolverConfig())

        np.testing.assert_allclose(y, b / 1.5, atol=1e-7)


class TestSolveBordered:
    def test_bordered_system_dense_oracle(self, small_problem, random_unit):
        u, v = random_unit(small_problem.n, positive=True), random_unit(small_problem.n, positive=True)
        lam = min_ratio(small_problem, u, v)

        solution = solve_bordered(small_problem, u, v, lam, LinearSolverConfig())

        n = small_problem.n
        bordered = np.zeros((n + 1, n + 1))
        bordered[:n, :n] = dense_jacobian(small_problem, u, v, lam)
        bordered[:n, n] = -u
        bordered[n, :n] = u
        rhs = np.concatenate([-residual(small_problem, u, v, lam), [0.0]])
        expected = np.linalg.solve(bordered, rhs)

        np.testing.assert_allclose(solution.delta_u, expected[:n], atol=1e-9)
        assert solution.delta == pytest.approx(expected[n], rel=1e-9)

    def test_tangent_step_and_positive_increment(self, small_problem, random_unit):
        for _ in range(10):
            u, v = random_unit(small_problem.n, positive=True), random_unit(small_problem.n, positive=True)
            lam = min_ratio(small_problem, u, v)

            solution = solve_bordered(small_problem, u, v, lam, LinearSolverConfig())

            assert abs(u @ solution.delta_u) <= 1e-7
            assert solution.delta > 0

    def test_pcg_backend_satisfies_bordered_equations(self, small_problem, random_unit):
        u, v = random_unit(small_problem.n, positive=True), random_unit(small_problem.n, positive=True)
        lam = min_ratio(small_problem, u, v)
        config = LinearSolverConfig(backend=Backend.PCG)

        solution = solve_bordered(small_problem, u, v, lam, config)

        r = residual(small_problem, u, v, lam)
        gap = apply_jacobian(small_problem, u, v, lam, solution.delta_u) - solution.delta * u + r
        assert np.linalg.norm(gap) <= 10 * config.pcg_tol * (solution.delta + np.linalg.norm(r))
        assert abs(u @ solution.delta_u) <= 10 * config.pcg_tol
        assert solution.linear_iterations > 0

    def test_eigenvector_gives_zero_step(self, fd_operator):
        p = CoupledProblem(a1=fd_operator, a2=fd_operator, beta11=0.0, beta22=0.0, beta12=0.0)
        eigenvalues, eigenvectors = np.linalg.eigh(fd_operator.to_dense())
        u = np.abs(eigenvectors[:, 0])

        solution = solve_bordered(p, u, u, eigenvalues[0] - 0.5, LinearSolverConfig())

        np.testing.assert_allclose(solution.delta_u, np.zeros(p.n), atol=1e-12)
        assert solution.delta == pytest.approx(0.5)

    def test_shift_above_spectrum_is_reported(self, small_problem, random_unit):
        u, v = random_unit(small_problem.n, positive=True), random_unit(small_problem.n, positive=True)

        with pytest.raises(BecGroundError) as error:
            solve_bordered(small_problem, u, v, 1e4, LinearSolverConfig())

        assert error.value.code == ErrorCode.INDEFINITE_JACOBIAN
