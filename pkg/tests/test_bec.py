"""Tests of the physical layer: reductions, grid rescaling, wave-function recovery and presets."""

# Python libraries
import numpy as np
import pytest

# bec_ground_py components
from bec_ground_py.bec import (
    BecSpec,
    Family,
    build_problem,
    build_spin_half,
    component_masses,
    has_unique_ground_state,
    magnetization,
    recover_wavefunctions,
    reduce_spin1,
    reduce_spin2,
    spinor_components,
    total_mass,
)
from bec_ground_py.errors import BecGroundError, ErrorCode
from bec_ground_py.grid import Domain, HarmonicLatticePotential, Scheme, build_fd_operator
from bec_ground_py.model import IterateState, energy
from bec_ground_py.presets import PRESETS, optical_lattice_spin1_2d, optical_lattice_spin2_2d, optical_lattice_spin_half_1d
from bec_ground_py.solvers import anni


def unit_box_spec(**overrides) -> BecSpec:
    """Spin-1/2 spec on [0, 8] with h = 1 (seven interior unknowns)."""
    arguments = dict(
        family=Family.SPIN_HALF,
        domain=Domain(lower=(0.0,), upper=(8.0,)),
        n=8,
        potential=HarmonicLatticePotential(),
        interactions=(4.0, 2.0, 1.0),
        alpha=0.5,
    )
    arguments.update(overrides)
    return BecSpec(**arguments)


def state_of(u: np.ndarray, v: np.ndarray) -> IterateState:
    return IterateState(blocks=(u, v), shifts=(0.0, 0.0), energy=0.0, grad_norm=0.0)


class TestReductions:
    @pytest.mark.parametrize(
        "arguments, expected",
        [((3.0, 1.0, 0.0), (4.0, 4.0, 2.0, 0.5)), ((300.0, 100.0, 0.9), (400.0, 400.0, 200.0, 0.95))],
    )
    def test_spin1(self, arguments, expected):
        assert reduce_spin1(*arguments) == pytest.approx(expected)

    @pytest.mark.parametrize(
        "arguments, expected",
        [((5.0, 1.0, -1.0, 0.0), (9.0, 9.0, 0.6, 0.5)), ((243.0, 12.1, -13.0, 1.5), (291.4, 291.4, 189.4, 0.875))],
    )
    def test_spin2(self, arguments, expected):
        assert reduce_spin2(*arguments) == pytest.approx(expected)

    @pytest.mark.parametrize("arguments", [(3.0, -1.0, 0.0), (3.0, 1.0, 1.0), (1.0, 2.0, 0.0)])
    def test_spin1_outside_the_reducible_regime(self, arguments):
        with pytest.raises(BecGroundError) as error:
            reduce_spin1(*arguments)

        assert error.value.code == ErrorCode.INVALID_SPEC

    @pytest.mark.parametrize(
        "arguments", [(5.0, 1.0, 1.0, 0.0), (5.0, -1.0, -1.0, 0.0), (5.0, 1.0, -1.0, 2.0), (1.0, 1.0, -1.0, 0.0)]
    )
    def test_spin2_outside_the_reducible_regime(self, arguments):
        with pytest.raises(BecGroundError):
            reduce_spin2(*arguments)


class TestBecSpec:
    def test_alpha_must_lie_in_the_open_interval(self):
        with pytest.raises(BecGroundError) as error:
            unit_box_spec(alpha=1.0)

        assert error.value.code == ErrorCode.INVALID_SPEC

    def test_zeeman_terms_are_rejected(self):
        with pytest.raises(BecGroundError):
            unit_box_spec(zeeman=(0.1, 0.0))

    def test_interaction_count_follows_the_family(self):
        with pytest.raises(BecGroundError):
            unit_box_spec(interactions=(1.0, 2.0))

    def test_spinor_spec_checks_its_reduction(self):
        with pytest.raises(BecGroundError):
            optical_lattice_spin1_2d(3.0, -1.0, 0.0, n=8)

    def test_family_and_scheme_accept_names(self):
        spec = unit_box_spec(family="spin_half", scheme="fd")

        assert spec.family == Family.SPIN_HALF
        assert spec.scheme == Scheme.FD

    def test_parameters(self):
        assert unit_box_spec().parameters() == {"beta11": 4.0, "beta22": 2.0, "beta12": 1.0, "alpha": 0.5}
        assert optical_lattice_spin1_2d(3.0, 1.0, 0.2, n=8).parameters() == {"beta0": 3.0, "beta1": 1.0, "magnetization": 0.2}

    def test_unique_ground_state_conditions(self):
        assert has_unique_ground_state(10.3, 10.0, 9.7)
        assert has_unique_ground_state(4.0, 4.0, -1.0)
        assert not has_unique_ground_state(1.0, 1.0, -2.0)
        assert not has_unique_ground_state(0.0, 1.0, 1.0)


class TestRescaling:
    def test_coefficients_on_a_unit_spacing_grid(self):
        p = build_spin_half(unit_box_spec())

        assert (p.beta11, p.beta22, p.beta12) == pytest.approx((1.0, 0.5, 0.25))
        assert p.rescale == pytest.approx((np.sqrt(0.5), np.sqrt(0.5)))
        assert p.physical_betas == (4.0, 2.0)

        operator = build_fd_operator(Domain(lower=(0.0,), upper=(8.0,)), 8, HarmonicLatticePotential())
        np.testing.assert_allclose(p.a1.to_dense(), 0.5 * operator.to_dense())
        assert p.a1.m_matrix and p.a2.m_matrix

    def test_discrete_objective_is_the_truncated_energy(self, rng):
        spec = unit_box_spec(alpha=0.3)
        p = build_spin_half(spec)
        h = p.grid.cell_volume
        dense = build_fd_operator(spec.domain, spec.n, spec.potential).to_dense()

        phi1, phi2 = rng.uniform(0.1, 1.0, (2, p.n))
        phi1 *= np.sqrt(0.3 / (h * np.sum(phi1**2)))
        phi2 *= np.sqrt(0.7 / (h * np.sum(phi2**2)))
        u, v = phi1 / p.rescale[0], phi2 / p.rescale[1]

        truncated = h * (
            phi1 @ dense @ phi1
            + phi2 @ dense @ phi2
            + 2.0 * np.sum(phi1**4)
            + 1.0 * np.sum(phi2**4)
            + 1.0 * np.sum(phi1**2 * phi2**2)
        )

        assert np.linalg.norm(u) == pytest.approx(1.0)
        assert np.linalg.norm(v) == pytest.approx(1.0)
        assert energy(p, u, v) == pytest.approx(truncated, rel=1e-12)

    def test_spin1_spec_goes_through_its_reduction(self):
        p = build_spin_half(optical_lattice_spin1_2d(3.0, 1.0, 0.0, n=8))

        assert p.grid.cell_volume == pytest.approx(1.0)
        assert (p.beta11, p.beta22, p.beta12) == pytest.approx((1.0, 1.0, 0.5))
        assert not p.m_matrix

    def test_custom_spec_keeps_raw_coefficients(self):
        spec = unit_box_spec(family=Family.CUSTOM, alpha=None)

        with pytest.raises(BecGroundError):
            build_spin_half(spec)

        p = build_problem(spec)
        assert (p.beta11, p.beta22, p.beta12) == (4.0, 2.0, 1.0)
        np.testing.assert_allclose(p.a1.to_dense(), p.a2.to_dense())


class TestWavefunctions:
    def test_recovery_restores_component_masses(self, random_unit):
        spec = unit_box_spec(alpha=0.3)
        p = build_spin_half(spec)

        phi1, phi2 = recover_wavefunctions(p, state_of(random_unit(p.n), random_unit(p.n)))

        assert phi1.shape == p.grid.shape
        assert component_masses(phi1, phi2, p.grid) == pytest.approx((0.3, 0.7))
        assert total_mass(phi1, phi2, p.grid) == pytest.approx(1.0)
        assert magnetization(spec, phi1, phi2, p.grid) == pytest.approx(-0.4)

    def test_unit_spacing_scaling(self):
        p = build_spin_half(unit_box_spec())
        u = np.ones(p.n) / np.sqrt(p.n)

        phi1, _ = recover_wavefunctions(p, state_of(u, u))

        np.testing.assert_allclose(phi1, u / np.sqrt(2))

    @pytest.mark.parametrize(
        "spec, size",
        [(optical_lattice_spin1_2d(3.0, 1.0, 0.4, n=8), 3), (optical_lattice_spin2_2d(5.0, 1.0, -1.0, 1.2, n=8), 5)],
    )
    def test_spinor_magnetization_matches_the_spec(self, spec, size, random_unit):
        p = build_spin_half(spec)

        phi1, phi2 = recover_wavefunctions(p, state_of(random_unit(p.n), random_unit(p.n)))
        components = spinor_components(spec, phi1, phi2)

        assert len(components) == size
        assert all(np.all(component == 0) for component in components[1:-1])
        assert magnetization(spec, phi1, phi2, p.grid) == pytest.approx(spec.magnetization)

    def test_ground_state_is_positive_and_normalized(self):
        spec = optical_lattice_spin_half_1d(10.0, 0.5, n=64, half_width=8.0)
        p = build_spin_half(spec)

        report = anni(p)
        phi1, phi2 = recover_wavefunctions(p, report.final)

        assert report.converged
        assert np.all(phi1 > 0) and np.all(phi2 > 0)
        assert total_mass(phi1, phi2, p.grid) == pytest.approx(1.0)


class TestPresets:
    def test_spin_half_lattice(self):
        spec = optical_lattice_spin_half_1d(10.0, 0.2)

        assert spec.interactions == pytest.approx((10.3, 10.0, 9.7))
        assert spec.scheme == Scheme.FD
        assert spec.n == 1024
        assert spec.domain.lower == (-16.0,)

    def test_spin_half_lattice_reproduces_the_weak_interaction_energy(self):
        report = anni(build_spin_half(optical_lattice_spin_half_1d(10.0, 0.2)))

        assert report.converged
        assert report.energy == pytest.approx(6.8651, abs=5e-4)
        assert report.grad_norm <= 1e-6
        assert report.iterations <= 30

    def test_spinor_presets_use_the_spectral_scheme(self):
        assert optical_lattice_spin1_2d(3.0, 1.0, 0.0, n=8).scheme == Scheme.SPECTRAL
        assert optical_lattice_spin2_2d(5.0, 1.0, -1.0, 0.0, n=8).domain.upper == (8.0, 8.0)

    def test_registry(self):
        assert set(PRESETS) == {
            "optical_lattice_spin_half_1d",
            "optical_lattice_spin1_2d",
            "optical_lattice_spin1_3d",
            "optical_lattice_spin2_2d",
            "optical_lattice_spin2_3d",
        }
