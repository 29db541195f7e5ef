"""Tests for space.basis."""

import numpy as np
import pytest

from fock_ida.core.errors import UnsupportedWeightError
from fock_ida.space.basis import build_basis, gram_matrix, standard_log_moments
from fock_ida.space.quadrature import plane_grid
from fock_ida.space.weights import Weight


class TestStandardBasis:
    def test_gram_residual(self, codomain):
        assert codomain.N == 80
        assert codomain.gram_residual < 1e-10

    def test_first_functions(self, basis):
        z = np.array([0.3 + 0.2j, -1.0 + 0.5j])
        values = basis.evaluate(z)
        np.testing.assert_allclose(values[:, 0], 1.0 / np.sqrt(np.pi), rtol=1e-12)
        np.testing.assert_allclose(values[:, 1], z / np.sqrt(np.pi), rtol=1e-12)
        np.testing.assert_allclose(values[:, 2], z**2 / np.sqrt(2.0 * np.pi), rtol=1e-12)

    def test_log_moments(self):
        moments = np.exp(standard_log_moments(1.0, 4))
        np.testing.assert_allclose(moments, np.pi * np.array([1.0, 1.0, 2.0, 6.0]), rtol=1e-12)

    def test_weighted_values_stay_finite_far_out(self, basis):
        values = basis.weighted_values(np.array([30.0 + 0j]))
        assert np.all(np.isfinite(values))

    def test_truncated(self, codomain):
        section = codomain.truncated(10)
        assert section.N == 10
        np.testing.assert_array_equal(section.log_norms, codomain.log_norms[:10])
        with pytest.raises(ValueError):
            codomain.truncated(0)
        with pytest.raises(ValueError):
            codomain.truncated(81)


class TestPerturbedBasis:
    def test_orthonormal(self):
        weight = Weight.sinusoidal(1.0, 0.1, 1.0)
        basis = build_basis(weight, 20)
        gram = gram_matrix(basis, plane_grid(10.0, n_angular=64))
        np.testing.assert_allclose(gram, np.eye(20), atol=1e-8)

    def test_small_sine_perturbation(self):
        weight = Weight.radial_perturbed(1.0, lambda rho: 0.1 * np.sin(rho), label="0.1 sin|z|")
        basis = build_basis(weight, 10)
        assert basis.gram_residual <= 1e-8
        gram = gram_matrix(basis, plane_grid(10.0))
        np.testing.assert_allclose(gram, np.eye(10), atol=1e-8)

    def test_single_constant_is_normalized(self):
        weight = Weight.radial_perturbed(1.0, lambda rho: 0.1 * np.sin(rho), label="0.1 sin|z|")
        basis = build_basis(weight, 1)
        c = basis.evaluate(np.array([0j, 1.5 + 0.5j]))[:, 0]
        np.testing.assert_allclose(c, c[0], rtol=1e-12)
        assert abs(c[0]) ** 2 * weight.total_mass() == pytest.approx(1.0, rel=1e-10)

    def test_rejects_general_weight(self):
        weight = Weight.general(lambda z: np.abs(z) ** 2, m=4.0, M=4.0)
        with pytest.raises(UnsupportedWeightError):
            build_basis(weight, 5)

    def test_rejects_empty_order(self, standard_weight):
        with pytest.raises(ValueError):
            build_basis(standard_weight, 0)
