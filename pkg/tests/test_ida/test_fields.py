"""Tests for ida.fields."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fock_ida.catalog.symbols import DEFAULT_SUITE, parse_symbol
from fock_ida.core.models import FieldKind
from fock_ida.ida.fields import (
    OscillationField,
    ball_average,
    bda_norm,
    center_grid,
    d_convergence,
    field_norm,
    g_field,
    ida_norm,
    imo_norm,
    local_holo_fit,
    m2r_mean,
    mo_field,
    oscillation_fields,
    oscillation_split_constant,
    tail_test,
    vda_check,
)
from fock_ida.lattice.nets import lattice_lp_sum
from fock_ida.space.symbols import abs_squared, bump, complex_bump, random_field, zbar_symbol

CENTERS, _ = center_grid(2.0, 0.5)
BOUNDED_SUITE = [name for name in DEFAULT_SUITE if parse_symbol(name).bounded]
scalars = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
coefficients = st.lists(
    st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False), min_size=1, max_size=3
)


def make_field(values, R=5.0, h=0.25) -> OscillationField:
    centers, weights = center_grid(R, h)
    return OscillationField(centers, values(centers), weights, FieldKind.G, R)


class TestCenterGrid:
    def test_small_grid(self):
        centers, weights = center_grid(1.0, 0.5)
        assert centers.size == 13
        np.testing.assert_allclose(weights, 0.25)


class TestLocalFits:
    def test_holomorphic_polynomial_is_fitted_exactly(self):
        c = 1 + 1j
        fit = local_holo_fit(lambda z: z**2, c, 0.5, 2)
        np.testing.assert_allclose(fit.coefficients, [c**2, 2 * c, 1.0], atol=1e-10)
        assert fit.residual < 1e-10
        assert fit.evaluate(np.array(2.0 + 0j)) == pytest.approx(4.0)

    def test_zbar_distance(self):
        r = 0.8
        fit = local_holo_fit(zbar_symbol(), 0.3 - 0.2j, r, 3)
        assert fit.residual == pytest.approx(r / np.sqrt(2.0), rel=1e-10)

    def test_abs_squared_distance_at_origin(self):
        r = 1.5
        fit = local_holo_fit(abs_squared(), 0j, r, 4)
        assert fit.residual == pytest.approx(r**2 / np.sqrt(12.0), rel=1e-10)

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            local_holo_fit(zbar_symbol(), 0j, 0.0, 1)
        with pytest.raises(ValueError):
            local_holo_fit(zbar_symbol(), 0j, 1.0, -1)

    def test_to_dict(self):
        info = local_holo_fit(zbar_symbol(), 0j, 1.0, 1).to_dict()
        assert info["d"] == 1
        assert len(info["coefficients"]) == 2


class TestOscillationFields:
    def test_chain_is_ordered(self):
        centers, weights = center_grid(3.0, 0.5)
        fields = oscillation_fields(random_field(3), 1.0, 2, centers, weights, 3.0)
        g, mo, m2 = (fields[k].values for k in (FieldKind.G, FieldKind.MO, FieldKind.M2))
        assert np.all(g <= mo)
        assert np.all(mo <= m2)
        assert fields[FieldKind.G].d == 2
        assert fields[FieldKind.MO].d == 0

    def test_zbar_fields_are_flat(self):
        centers, _ = center_grid(2.0, 0.5)
        np.testing.assert_allclose(g_field(zbar_symbol(), 1.0, 2, centers).values, 1.0 / np.sqrt(2.0), rtol=1e-10)
        np.testing.assert_allclose(mo_field(zbar_symbol(), 1.0, centers).values, 1.0 / np.sqrt(2.0), rtol=1e-10)

    def test_ball_statistics(self):
        assert m2r_mean(lambda z: np.full(z.shape, 2.0 + 0j), 1 + 1j, 0.5) == pytest.approx(2.0)
        assert ball_average(lambda z: z, 1 - 2j, 0.7) == pytest.approx(1 - 2j)

    def test_d_convergence_of_zbar(self):
        assert d_convergence(zbar_symbol(), 0j, 1.0, 1) == pytest.approx(0.0, abs=1e-10)

    def test_oscillation_split(self):
        centers, _ = center_grid(2.0, 0.5)
        report = oscillation_split_constant(complex_bump(0j, 1.5, 2.0), 1.0, 1, centers)
        assert report.lower_holds
        assert report.max_violation == 0.0
        assert report.constant >= 0.5


class TestFieldNorms:
    def test_gaussian_field(self):
        field = make_field(lambda c: np.exp(-np.abs(c) ** 2))
        estimate = field_norm(field, 2.0)
        assert not estimate.divergent
        assert estimate.value == pytest.approx(np.sqrt(np.pi / 2.0), rel=1e-6)

    def test_flat_field_diverges(self):
        field = make_field(lambda c: np.ones(c.size))
        estimate = field_norm(field, 1.0)
        assert estimate.divergent
        assert estimate.tail == pytest.approx(1.0)

    def test_sup_is_never_divergent(self):
        field = make_field(lambda c: np.ones(c.size))
        assert field_norm(field, np.inf).value == 1.0
        assert not field_norm(field, np.inf).divergent
        assert bda_norm(field) == 1.0

    def test_zero_field(self):
        field = make_field(lambda c: np.zeros(c.size))
        assert tail_test(field, 1e-3) == (False, 0.0)

    def test_vda(self):
        vanishing, (edges, profile) = vda_check(make_field(lambda c: np.exp(-np.abs(c) ** 2)))
        assert vanishing
        assert edges.size == profile.size
        assert profile[0] == pytest.approx(1.0)
        assert not vda_check(make_field(lambda c: np.ones(c.size)))[0]

    def test_compact_symbol_vanishes_at_infinity(self):
        centers, weights = center_grid(4.0, 0.5)
        g = g_field(bump(), 0.5, 1, centers, weights, 4.0)
        assert vda_check(g)[0]

    def test_negative_values_rejected(self):
        with pytest.raises(ValueError):
            make_field(lambda c: -np.ones(c.size))

    def test_rejects_non_positive_p(self):
        with pytest.raises(ValueError):
            field_norm(make_field(lambda c: np.ones(c.size)), 0.0)


class TestGInvariants:
    @given(scalars, scalars)
    @settings(max_examples=30, deadline=None)
    def test_homogeneity(self, re, im):
        c = complex(re, im)
        f = random_field(3)
        base = g_field(f, 1.0, 2, CENTERS).values
        scaled = g_field(lambda z: c * f(z), 1.0, 2, CENTERS).values
        np.testing.assert_allclose(scaled, abs(c) * base, rtol=1e-10, atol=1e-14)

    @given(coefficients)
    @settings(max_examples=30, deadline=None)
    def test_holomorphic_invariance(self, coeffs):
        f = complex_bump(0.5j, 1.5, 2.0)
        base = g_field(f, 1.0, 2, CENTERS).values
        shifted = g_field(lambda z: f(z) + np.polyval(coeffs[::-1], z), 1.0, 2, CENTERS).values
        np.testing.assert_allclose(shifted, base, rtol=1e-8, atol=1e-10)

    @pytest.mark.parametrize("d", [0, 1, 2, 5, 9])
    def test_monotone_in_degree(self, d):
        for f in (random_field(3), complex_bump(0j, 1.5, 2.0), abs_squared()):
            higher = g_field(f, 1.0, d + 1, CENTERS).values
            lower = g_field(f, 1.0, d, CENTERS).values
            assert np.all(higher <= lower * (1.0 + 1e-12))


class TestImoNorm:
    def test_constant_is_zero(self):
        centers, weights = center_grid(3.0, 0.5)
        estimate = imo_norm(lambda z: np.full(z.shape, 2.0 + 1.0j), 2.0, 1.0, centers, weights, 3.0)
        assert estimate.value == pytest.approx(0.0, abs=1e-12)
        assert not estimate.divergent

    def test_bump_converges_under_refinement(self):
        values = []
        for h in (0.25, 0.125):
            centers, weights = center_grid(4.0, h)
            estimate = imo_norm(bump(), 2.0, 1.0, centers, weights, 4.0)
            assert not estimate.divergent
            field = mo_field(bump(), 1.0, centers, weights, 4.0)
            # the center grid is a lattice with cell area h^2
            assert estimate.value == pytest.approx(h * lattice_lp_sum(field.values, 2.0), rel=1e-12)
            values.append(estimate.value)
        assert 0.0 < values[0]
        assert values[1] == pytest.approx(values[0], rel=0.02)

    def test_zbar_diverges(self):
        centers, weights = center_grid(4.0, 0.5)
        for p in (1.0, 2.0, 4.0):
            assert imo_norm(zbar_symbol(), p, 1.0, centers, weights, 4.0).divergent
        sup = imo_norm(zbar_symbol(), np.inf, 1.0, centers, weights, 4.0)
        assert not sup.divergent
        assert sup.value == pytest.approx(1.0 / np.sqrt(2.0), rel=1e-10)


@pytest.mark.slow
class TestRadiusIndependence:
    @pytest.mark.parametrize("name", BOUNDED_SUITE)
    def test_ratio_of_radii_is_bounded(self, name):
        f = parse_symbol(name).build()
        centers, weights = center_grid(5.0, 0.25)
        small = g_field(f, 0.5, 10, centers, weights, 5.0)
        large = g_field(f, 1.0, 10, centers, weights, 5.0)
        for p in (1.0, 2.0, 4.0):
            ratio = ida_norm(small, p).value / ida_norm(large, p).value
            assert 0.1 <= ratio <= 10.0
