"""Tests of domains, grids, potentials and single-particle operators."""

# Python libraries
import numpy as np
import pytest

# bec_ground_py components
from bec_ground_py.errors import BecGroundError, ErrorCode
from bec_ground_py.grid import (
    CustomPotential,
    Domain,
    Grid,
    HarmonicLatticePotential,
    Scheme,
    build_fd_operator,
    build_grid,
    build_operator,
    build_spectral_operator,
    constant_potential,
    sample_potential,
    second_difference,
)
from bec_ground_py.presets import sine_lattice


def gaussian(*coordinates):
    return np.exp(-sum(x**2 for x in coordinates))


class TestGrid:
    def test_fd_grid_keeps_interior_nodes(self):
        grid = build_grid(Domain(lower=(0.0,), upper=(3.0,)), 3, Scheme.FD)

        assert grid.shape == (2,)
        assert grid.spacings == (1.0,)
        np.testing.assert_allclose(grid.nodes().ravel(), [1.0, 2.0])

    def test_spectral_grid_drops_right_endpoint(self):
        grid = build_grid(Domain.symmetric(1.0, dims=2), 4, Scheme.SPECTRAL)

        assert grid.shape == (4, 4)
        assert grid.size == 16
        assert grid.cell_volume == pytest.approx(0.25)
        np.testing.assert_allclose(grid.axes[0], [-1.0, -0.5, 0.0, 0.5])

    def test_nodes_are_row_major(self):
        grid = build_grid(Domain(lower=(0.0, 0.0), upper=(3.0, 4.0)), (3, 4), Scheme.FD)

        nodes = grid.nodes()

        assert nodes.shape == (6, 2)
        np.testing.assert_allclose(nodes[:3], [[1.0, 1.0], [1.0, 2.0], [1.0, 3.0]])

    def test_invalid_domain_is_rejected(self):
        with pytest.raises(BecGroundError) as error:
            Domain(lower=(1.0,), upper=(1.0,))

        assert error.value.code == ErrorCode.INVALID_GRID

    def test_spectral_grid_needs_power_of_two(self):
        with pytest.raises(BecGroundError) as error:
            Grid(domain=Domain.symmetric(1.0, dims=1), counts=6, scheme=Scheme.SPECTRAL)

        assert error.value.code == ErrorCode.INVALID_GRID

    def test_fd_grid_needs_three_points(self):
        with pytest.raises(BecGroundError):
            Grid(domain=Domain.symmetric(1.0, dims=1), counts=2, scheme=Scheme.FD)


class TestPotentials:
    def test_harmonic_trap_vanishes_at_origin(self):
        grid = build_grid(Domain.symmetric(1.0, dims=2), 4, Scheme.SPECTRAL)

        values = sample_potential(HarmonicLatticePotential(harmonic_weights=(1.0, 1.0)), grid)

        origin = int(np.flatnonzero(np.all(grid.nodes() == 0.0, axis=1))[0])
        assert values[origin] == 0.0

    def test_cosine_lattice_at_origin(self):
        grid = build_grid(Domain.symmetric(16.0, dims=1), 1024, Scheme.FD)

        values = sample_potential(HarmonicLatticePotential(lattice_amplitude=24.0), grid)

        assert grid.nodes()[511, 0] == 0.0
        assert values[511] == pytest.approx(24.0)

    def test_sine_lattice_in_three_dimensions(self):
        ones = np.array([1.0])

        assert sine_lattice(100.0).evaluate((ones, ones, ones))[0] == pytest.approx(301.5)

    def test_nonfinite_potential_is_reported(self):
        potential = CustomPotential(lambda x: np.where(np.abs(x) < 1e-12, np.inf, x**2), name="singular")

        with pytest.raises(BecGroundError) as error:
            build_spectral_operator(Domain.symmetric(1.0, dims=1), 8, potential)

        assert error.value.code == ErrorCode.NONFINITE_POTENTIAL
        assert "singular" in str(error.value)

    def test_negative_harmonic_weight_is_rejected(self):
        with pytest.raises(ValueError):
            HarmonicLatticePotential(harmonic_weights=-1.0)

    def test_constant_potential_broadcasts(self):
        grid = build_grid(Domain.symmetric(1.0, dims=3), 4, Scheme.SPECTRAL)

        np.testing.assert_allclose(sample_potential(constant_potential(2.5), grid), np.full(64, 2.5))


class TestFiniteDifferenceOperator:
    def test_two_point_stencil(self):
        operator = build_fd_operator(Domain(lower=(0.0,), upper=(3.0,)), 3, constant_potential(0.0))

        np.testing.assert_allclose(operator.to_dense(), [[1.0, -0.5], [-0.5, 1.0]])

    def test_two_dimensional_kronecker_sum(self):
        operator = build_fd_operator(Domain(lower=(0.0, 0.0), upper=(3.0, 3.0)), 3, constant_potential(0.0))

        stencil = second_difference(2, 1.0).toarray()
        expected = np.kron(stencil, np.eye(2)) + np.kron(np.eye(2), stencil)

        np.testing.assert_allclose(operator.to_dense(), expected)
        off_diagonal = operator.to_dense() - np.diag(np.diag(operator.to_dense()))
        np.testing.assert_allclose(-off_diagonal.sum(axis=1), np.diag(operator.to_dense()) / 2)

    def test_optical_lattice_stencil(self):
        operator = build_fd_operator(Domain.symmetric(16.0, dims=1), 1024, HarmonicLatticePotential(lattice_amplitude=24.0))

        h = 32 / 1024
        x = operator.grid.nodes()[:, 0]
        diagonal, off_diagonal = operator.tridiagonal_bands()

        assert operator.size == 1023
        np.testing.assert_allclose(diagonal, 1 / h**2 + x**2 / 2 + 24 * np.cos(x) ** 2)
        np.testing.assert_allclose(off_diagonal, np.full(1022, -0.5 / h**2))

    def test_m_matrix_certificate(self):
        operator = build_fd_operator(Domain.symmetric(4.0, dims=2), 16, HarmonicLatticePotential(lattice_amplitude=2.0))

        dense = operator.to_dense()
        off_diagonal = dense - np.diag(np.diag(dense))

        assert operator.m_matrix
        assert operator.irreducible
        assert np.all(off_diagonal <= 0)
        assert np.all(np.diag(dense) > 0)
        assert np.all(operator.apply(np.ones(operator.size)) > 0)

    def test_symmetry_on_random_vectors(self, rng):
        operator = build_fd_operator(Domain.symmetric(3.0, dims=3), 8, HarmonicLatticePotential())

        for _ in range(20):
            x, y = rng.standard_normal((2, operator.size))
            gap = abs(x @ operator.apply(y) - y @ operator.apply(x))
            assert gap <= 1e-10 * np.linalg.norm(x) * np.linalg.norm(y)

    def test_second_order_consistency(self):
        errors = []
        for n in (128, 256):
            operator = build_fd_operator(Domain.symmetric(8.0, dims=1), n, constant_potential(0.0))
            x = operator.grid.nodes()[:, 0]
            exact = (1 - 2 * x**2) * gaussian(x)
            errors.append(np.max(np.abs(operator.apply(gaussian(x)) - exact)))

        assert errors[1] < 1e-2
        assert errors[0] / errors[1] > 3.5


class TestSpectralOperator:
    def test_single_fourier_mode(self):
        operator = build_spectral_operator(Domain.symmetric(np.pi, dims=1), 8, constant_potential(0.0))

        x = operator.grid.nodes()[:, 0]

        np.testing.assert_allclose(operator.apply(np.cos(x)), 0.5 * np.cos(x), atol=1e-13)

    def test_constant_mode_sees_only_the_potential(self):
        operator = build_spectral_operator(Domain.symmetric(np.pi, dims=1), 8, constant_potential(1.0))

        np.testing.assert_allclose(operator.apply(np.full(8, 0.3)), np.full(8, 0.3), atol=1e-14)

    def test_dense_assembly_is_symmetric(self):
        operator = build_spectral_operator(Domain.symmetric(4.0, dims=2), 16, sine_lattice(10.0))

        dense = operator.to_dense()

        assert dense.shape == (256, 256)
        np.testing.assert_allclose(dense, dense.T, atol=1e-12 * np.abs(dense).max())
        x = np.random.default_rng(3).standard_normal(256)
        np.testing.assert_allclose(dense @ x, operator.apply(x), atol=1e-10)

    def test_positive_definite_with_nonnegative_potential(self):
        operator = build_spectral_operator(Domain.symmetric(4.0, dims=2), 8, sine_lattice(10.0))

        assert np.linalg.eigvalsh(operator.to_dense()).min() > 0
        assert not operator.m_matrix

    def test_spectral_consistency(self):
        operator = build_operator(Domain.symmetric(8.0, dims=1), 64, constant_potential(0.0), "SPECTRAL")

        x = operator.grid.nodes()[:, 0]
        exact = (1 - 2 * x**2) * gaussian(x)

        np.testing.assert_allclose(operator.apply(gaussian(x)), exact, atol=1e-10)

    def test_scaled_operator(self):
        operator = build_spectral_operator(Domain.symmetric(2.0, dims=1), 16, HarmonicLatticePotential())
        x = np.linspace(-1.0, 1.0, 16)

        np.testing.assert_allclose(operator.scaled(0.3).apply(x), 0.3 * operator.apply(x), atol=1e-12)
