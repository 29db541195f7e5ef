"""Tests for schatten.criteria."""

from dataclasses import replace

import numpy as np
import pytest

from fock_ida.core.errors import UnsupportedWeightError
from fock_ida.core.models import FieldKind
from fock_ida.ida.fields import OscillationField, center_grid
from fock_ida.operators.hankel import hankel_apply_to_kernel, hankel_gram
from fock_ida.schatten.criteria import (
    condition_c_from_field,
    condition_c_integral,
    key_estimate_constant,
    stroethoff_quantities,
    translate_norm,
)
from fock_ida.space.symbols import bump, zbar_symbol
from fock_ida.space.weights import Weight


@pytest.fixture(scope="module")
def zbar_gram(basis, codomain):
    return hankel_gram(zbar_symbol(), basis, codomain)


class TestConditionC:
    def test_returns_pth_power(self):
        centers, weights = center_grid(5.0, 0.25)
        field = OscillationField(centers, np.exp(-np.abs(centers) ** 2), weights, FieldKind.KERNEL_HANKEL, 5.0)
        estimate = condition_c_from_field(field, 2.0)
        assert estimate.value == pytest.approx(np.pi / 2.0, rel=1e-6)
        assert not estimate.divergent
        assert estimate.detail == "condition-C"

    def test_zbar_kernel_integral_diverges(self, zbar_gram, basis):
        centers, weights = center_grid(4.0, 0.5)
        estimate = condition_c_integral(zbar_gram, basis, 2.0, centers, weights, 4.0)
        assert estimate.divergent

    def test_compact_symbol_is_finite(self, basis, codomain):
        gram = hankel_gram(bump(), basis, codomain)
        centers, weights = center_grid(6.0, 0.5)
        estimate = condition_c_integral(gram, basis, 2.0, centers, weights, 6.0)
        assert not estimate.divergent
        assert estimate.value > 0


class TestStroethoff:
    def test_zbar_profile(self, zbar_gram, basis):
        centers, _ = center_grid(3.0, 0.5)
        report = stroethoff_quantities(zbar_gram, basis, centers)
        assert report.sup == pytest.approx(1.0, abs=1e-6)
        np.testing.assert_allclose(report.profile, 1.0, atol=1e-6)
        assert report.value_at(1.0) == pytest.approx(1.0, abs=1e-6)
        assert len(report.to_dict()["edges"]) == report.edges.size


class TestTranslateNorm:
    @pytest.mark.parametrize("z", [0j, 1.0 + 1.0j, -1.5 + 0.5j])
    def test_zbar_shift_identity(self, codomain, z):
        assert translate_norm(zbar_symbol(), z, codomain) == pytest.approx(1.0, rel=1e-8)

    @pytest.mark.parametrize("z", [0j, 1.0 + 0j, 1.0 + 1.0j])
    def test_bump_matches_kernel_application(self, basis, codomain, z):
        shifted = translate_norm(bump(), z, codomain)
        direct = hankel_apply_to_kernel(bump(), z, basis, codomain)
        assert abs(shifted - direct) <= 1e-6

    def test_needs_standard_weight(self, codomain):
        perturbed = replace(codomain, weight=Weight.sinusoidal(1.0, 0.1, 1.0))
        with pytest.raises(UnsupportedWeightError):
            translate_norm(bump(), 0j, perturbed)


class TestKeyEstimate:
    def test_constant(self):
        centers = np.array([0j, 1 + 0j, 2 + 0j])
        g = OscillationField(centers, np.array([1.0, 2.0, 0.5]), np.ones(3), FieldKind.G, 2.0)
        kernel = OscillationField(centers, np.array([2.0, 1.0, 0.0]), np.ones(3), FieldKind.KERNEL_HANKEL, 2.0)
        assert key_estimate_constant(g, kernel) == pytest.approx(2.0)

    def test_centers_must_match(self):
        g = OscillationField(np.array([0j]), np.array([1.0]), np.ones(1), FieldKind.G, 0.0)
        kernel = OscillationField(np.array([1 + 0j]), np.array([1.0]), np.ones(1), FieldKind.KERNEL_HANKEL, 1.0)
        with pytest.raises(ValueError):
            key_estimate_constant(g, kernel)
