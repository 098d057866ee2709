"""Tests of the nonlinearity plugins."""

# Python libraries
import numpy as np
import pytest

# bec_ground_py components
from bec_ground_py.errors import BecGroundError, ErrorCode
from bec_ground_py.nonlinearities import plugin_modified_gpe, plugin_quartic, plugin_saturable


def symmetric_kernel(rng, size: int) -> np.ndarray:
    kernel = rng.uniform(0.0, 1.0, (size, size))
    return kernel + kernel.T


class TestQuarticNonlinearity:
    def test_closed_form_values(self):
        plugin = plugin_quartic(2.0)
        u = np.array([1.0, 1.0])

        assert plugin.value(u) == pytest.approx(1.0)
        np.testing.assert_allclose(plugin.ratio(u), [2.0, 2.0])
        np.testing.assert_allclose(plugin.curvature_diag(u), [6.0, 6.0])
        np.testing.assert_allclose(plugin.gradient(u), [2.0, 2.0])

    def test_increment_matches_value_difference(self, rng):
        plugin = plugin_quartic(7.5)
        u, e = rng.standard_normal((2, 12))

        assert plugin.increment(u, e) == pytest.approx(plugin.value(u + e) - plugin.value(u), rel=1e-12)

    def test_finite_difference_consistency(self, rng):
        gradient_error, curvature_error = plugin_quartic(3.0).finite_difference_check(rng.uniform(0.1, 1.0, 8))

        assert gradient_error <= 1e-6
        assert curvature_error <= 1e-6

    def test_negative_beta_is_rejected(self):
        with pytest.raises(BecGroundError) as error:
            plugin_quartic(-1.0)

        assert error.value.code == ErrorCode.INVALID_SPEC


class TestSaturableNonlinearity:
    def test_closed_form_values(self):
        plugin = plugin_saturable(1.0)
        u = np.array([1.0])

        assert plugin.value(u) == pytest.approx(1 - np.log(2))
        np.testing.assert_allclose(plugin.ratio(u), [1.0])
        np.testing.assert_allclose(plugin.curvature_diag(u), [2.0])

    def test_finite_difference_consistency(self, rng):
        saturation = rng.uniform(0.5, 2.0, 6)

        gradient_error, curvature_error = plugin_saturable(saturation).finite_difference_check(rng.uniform(0.1, 1.0, 6))

        assert gradient_error <= 1e-6
        assert curvature_error <= 1e-6

    def test_increment_matches_value_difference(self, rng):
        plugin = plugin_saturable(1.0)
        u, e = rng.uniform(0.1, 1.0, (2, 5))

        assert plugin.increment(u, e) == pytest.approx(plugin.value(u + e) - plugin.value(u), rel=1e-10)

    def test_nonpositive_saturation_is_rejected(self):
        with pytest.raises(BecGroundError):
            plugin_saturable([1.0, 0.0])


class TestModifiedGpeNonlinearity:
    def test_identity_kernel_is_quartic(self, rng):
        u = rng.uniform(0.1, 1.0, 5)
        modified = plugin_modified_gpe(np.eye(5))
        quartic = plugin_quartic(4.0)

        assert modified.value(u) == pytest.approx(quartic.value(u))
        np.testing.assert_allclose(modified.ratio(u), quartic.ratio(u))
        np.testing.assert_allclose(modified.curvature_diag(u), quartic.curvature_diag(u))
        assert modified.hessian_is_diagonal

    def test_gradient_carries_factor_four(self, rng):
        kernel = symmetric_kernel(rng, 6)
        plugin = plugin_modified_gpe(kernel)
        u = rng.uniform(0.1, 1.0, 6)

        gradient_error, curvature_error = plugin.finite_difference_check(u)

        assert gradient_error <= 1e-6
        assert curvature_error <= 1e-6
        np.testing.assert_allclose(plugin.gradient(u), 4 * (kernel @ u**2) * u)
        assert not plugin.hessian_is_diagonal

    def test_hessian_action_matches_gradient_differences(self, rng):
        plugin = plugin_modified_gpe(symmetric_kernel(rng, 5))
        u, x = rng.uniform(0.1, 1.0, (2, 5))
        epsilon = 1e-6

        numeric = (plugin.gradient(u + epsilon * x) - plugin.gradient(u - epsilon * x)) / (2 * epsilon)

        np.testing.assert_allclose(plugin.hessian_apply(u, x), numeric, rtol=1e-6)

    def test_invalid_kernels_are_rejected(self):
        with pytest.raises(BecGroundError):
            plugin_modified_gpe([[1.0, 2.0], [0.0, 1.0]])
        with pytest.raises(BecGroundError):
            plugin_modified_gpe([[1.0, -1.0], [-1.0, 1.0]])
