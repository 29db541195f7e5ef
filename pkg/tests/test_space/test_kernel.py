"""Tests for space.kernel."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fock_ida.core.errors import TruncationError
from fock_ida.space.kernel import (
    kernel_coefficients,
    kernel_decay_diagnostic,
    kernel_eval,
    normalized_kernel,
    submean_constant,
)
from fock_ida.space.quadrature import plane_grid

REPRODUCING_GRID = plane_grid(8.0)


class TestKernelEval:
    def test_matches_closed_form(self, basis):
        rng = np.random.default_rng(1)
        z = 2.0 * np.sqrt(rng.uniform(size=20)) * np.exp(2j * np.pi * rng.uniform(size=20))
        w = 2.0 * np.sqrt(rng.uniform(size=20)) * np.exp(2j * np.pi * rng.uniform(size=20))
        exact = np.exp(z * np.conj(w)) / np.pi
        np.testing.assert_allclose(kernel_eval(basis, z, w), exact, atol=1e-8)

    def test_hermitian_symmetry(self, basis):
        z, w = 0.4 + 0.1j, -0.3 + 0.7j
        assert kernel_eval(basis, z, w) == pytest.approx(np.conj(kernel_eval(basis, w, z)))

    def test_outside_validated_radius(self, basis):
        with pytest.raises(TruncationError):
            kernel_eval(basis, 20.0, 0.0)


class TestNormalizedKernel:
    def test_unit_norm(self, basis):
        coeffs = kernel_coefficients(basis, np.array([0.0, 1 + 1j, 3.0 - 2.0j]))
        np.testing.assert_allclose(np.linalg.norm(coeffs, axis=-1), 1.0, rtol=1e-12)

    def test_at_origin_is_e0(self, basis):
        coeffs = normalized_kernel(basis, 0j)
        assert abs(coeffs[0]) == pytest.approx(1.0)
        assert np.max(np.abs(coeffs[1:])) == 0.0


class TestDiagnostics:
    def test_kernel_decay(self, basis):
        rng = np.random.default_rng(2)
        z = rng.uniform(-2, 2, 40) + 1j * rng.uniform(-2, 2, 40)
        w = rng.uniform(-2, 2, 40) + 1j * rng.uniform(-2, 2, 40)
        report = kernel_decay_diagnostic(basis, z, w)
        assert report.pairs == 40
        assert report.theta > 0
        assert report.C > 0
        # the weighted diagonal of the standard kernel is 1/pi
        assert report.diagonal_min == pytest.approx(1.0 / np.pi, rel=1e-10)
        assert report.diagonal_max == pytest.approx(1.0 / np.pi, rel=1e-10)

    def test_submean_constant_of_constant_function(self, basis):
        coefficients = np.zeros(basis.N)
        coefficients[0] = 1.0
        value = submean_constant(basis, coefficients, 0j, 1.0)
        assert value == pytest.approx(1.0 / (np.pi * (1.0 - np.exp(-1.0))), rel=1e-10)


class TestReproducingProperty:
    @given(
        st.integers(min_value=0, max_value=2**32 - 1),
        st.integers(min_value=0, max_value=57),
        st.floats(min_value=0.0, max_value=2.0),
        st.floats(min_value=0.0, max_value=2.0 * np.pi),
    )
    @settings(max_examples=25, deadline=None)
    def test_inner_product_with_kernel_evaluates_polynomial(self, basis, seed, degree, radius, angle):
        rng = np.random.default_rng(seed)
        c = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        z = radius * np.exp(1j * angle)
        nodes = REPRODUCING_GRID.nodes

        p_nodes = basis.evaluate(nodes)[:, : degree + 1] @ c
        k_nodes = kernel_eval(basis, nodes, z, check=False)
        density = np.exp(-2.0 * basis.weight.phi(nodes))
        inner = complex(REPRODUCING_GRID.integrate(p_nodes * np.conj(k_nodes) * density))

        expected = complex(basis.evaluate(z)[: degree + 1] @ c)
        assert abs(inner - expected) <= 1e-8

    def test_kernel_reproduces_itself(self, basis):
        # <K_w, K_z> = K_N(z, w)
        z, w = 0.5 - 1.0j, -1.2 + 0.3j
        nodes = REPRODUCING_GRID.nodes
        density = np.exp(-2.0 * basis.weight.phi(nodes))
        integrand = kernel_eval(basis, nodes, w, check=False) * np.conj(kernel_eval(basis, nodes, z, check=False))
        inner = complex(REPRODUCING_GRID.integrate(integrand * density))
        assert inner == pytest.approx(complex(kernel_eval(basis, z, w)), abs=1e-8)
