"""Tests for space.weights."""

import numpy as np
import pytest

from fock_ida.core.errors import UnsupportedWeightError
from fock_ida.space.quadrature import plane_grid
from fock_ida.space.weights import Weight, WeightKind


class TestStandardWeight:
    def test_rejects_non_positive_alpha(self):
        with pytest.raises(ValueError):
            Weight.standard(0.0)

    def test_laplacian_is_two_alpha(self):
        weight = Weight.standard(1.5)
        z = np.array([0.3, 1 + 1j, -2 + 0.5j])
        np.testing.assert_allclose(weight.laplacian(z), 3.0, atol=1e-4)
        assert weight.m == weight.M == 3.0

    def test_total_mass(self):
        assert Weight.standard(2.0).total_mass() == pytest.approx(np.pi / 2.0)

    def test_closed_form_kernel(self):
        weight = Weight.standard(1.0)
        assert weight.closed_form_kernel(0.0, 0.0) == pytest.approx(1.0 / np.pi)
        assert weight.closed_form_kernel(1.0, 1.0) == pytest.approx(np.e / np.pi)

    def test_effective_radius_grows_with_degree(self):
        weight = Weight.standard(1.0)
        assert weight.effective_radius(80) > weight.effective_radius(10) > 0


class TestPerturbedWeight:
    def test_sinusoidal_curvature_bounds_straddle_standard(self):
        weight = Weight.sinusoidal(1.0, 0.1, 1.0)
        assert weight.kind == WeightKind.RADIAL
        assert 0 < weight.m < 2.0 < weight.M
        assert not weight.has_closed_form_kernel

    def test_strong_perturbation_is_rejected(self):
        with pytest.raises(UnsupportedWeightError):
            Weight.sinusoidal(1.0, 1.0, 10.0)

    def test_total_mass_matches_plane_quadrature(self):
        weight = Weight.sinusoidal(1.0, 0.1, 1.0)
        grid = plane_grid(12.0)
        direct = grid.integrate(np.exp(-2.0 * weight.phi(grid.nodes)))
        assert weight.total_mass() == pytest.approx(direct, rel=1e-8)

    def test_no_closed_form_kernel(self):
        with pytest.raises(UnsupportedWeightError):
            Weight.sinusoidal(1.0, 0.1, 1.0).closed_form_kernel(0.0, 0.0)


class TestGeneralWeight:
    def test_not_radial(self):
        weight = Weight.general(lambda z: 0.5 * np.abs(z) ** 2 + 0.1 * z.real, m=2.0, M=2.0)
        assert not weight.is_radial
        with pytest.raises(UnsupportedWeightError):
            weight.require_radial()

    def test_curvature_violations(self):
        weight = Weight.general(lambda z: np.abs(z) ** 2, m=1.0, M=2.0)
        # Laplacian of |z|^2 is 4, outside [1, 2] everywhere
        z = np.array([0.5, 1j, 2.0])
        assert weight.curvature_violations(z).size == 3
