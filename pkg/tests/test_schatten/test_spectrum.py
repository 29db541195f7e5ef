"""Tests for schatten.spectrum."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fock_ida.core.errors import TruncationError
from fock_ida.operators.matrix import OperatorKind, OperatorMatrix
from fock_ida.schatten.spectrum import (
    SpectralReport,
    positive_spectrum,
    power_sum_norm,
    schatten_norm,
    singular_values,
)

spectra = st.lists(st.floats(min_value=0.0, max_value=1e3, allow_nan=False), min_size=1, max_size=30)


class TestPowerSumNorm:
    def test_values(self):
        assert power_sum_norm([3.0, 4.0], 2.0) == pytest.approx(5.0)
        assert power_sum_norm([3.0, 4.0], 1.0) == pytest.approx(7.0)
        assert power_sum_norm([3.0, 4.0], math.inf) == 4.0
        assert power_sum_norm([0.0, 0.0], 0.5) == 0.0

    def test_quasinorm(self):
        assert power_sum_norm([1.0, 1.0], 0.5) == pytest.approx(4.0)

    def test_rejects_non_positive_p(self):
        with pytest.raises(ValueError):
            power_sum_norm([1.0], 0.0)

    @given(spectra, st.floats(min_value=0.5, max_value=8.0), st.floats(min_value=0.0, max_value=4.0))
    def test_non_increasing_in_p(self, values, p, step):
        assert power_sum_norm(values, p + step) <= power_sum_norm(values, p) * (1.0 + 1e-12) + 1e-300

    @given(spectra, st.floats(min_value=0.5, max_value=8.0))
    def test_bounded_by_the_maximum(self, values, p):
        assert power_sum_norm(values, p) >= max(values) * (1.0 - 1e-12)


class TestSingularValues:
    def test_diagonal_gram(self):
        report = singular_values(np.diag([4.0, 1.0] + [0.0] * 10))
        np.testing.assert_allclose(report.singular_values[:2], [2.0, 1.0])
        assert report.N == 12
        assert report.reference is not None and report.reference.size == 2
        assert report.delta(2.0) == pytest.approx(0.0)
        assert report.divergent

    def test_decaying_spectrum_converges(self):
        report = singular_values(np.diag(np.exp(-np.arange(30.0))))
        assert not report.divergent
        assert report.tail_ratio == pytest.approx(np.exp(-9.5))
        assert report.delta(1.0) < 1e-2

    def test_small_negative_eigenvalues_are_clamped(self):
        report = singular_values(np.diag([1.0, -1e-12]))
        assert report.clamped == 1
        np.testing.assert_array_equal(report.singular_values, [1.0, 0.0])

    def test_large_negative_eigenvalue_raises(self):
        with pytest.raises(TruncationError):
            singular_values(np.diag([1.0, -0.1]))

    def test_norm_cache_and_to_dict(self):
        report = singular_values(np.diag(np.exp(-np.arange(20.0))))
        assert report.norm(2.0) is report.norm(2.0)
        info = report.to_dict([2.0])
        assert info["N"] == 20
        assert set(info["norms"]) == {"2.0"}


class TestSpectralReport:
    def test_must_be_sorted(self):
        with pytest.raises(ValueError):
            SpectralReport(np.array([1.0, 2.0]), 2)

    def test_delta_without_reference(self):
        assert math.isnan(SpectralReport(np.array([1.0]), 1).delta(2.0))

    def test_sup_is_never_divergent(self):
        report = singular_values(np.eye(12))
        assert report.divergent
        assert schatten_norm(report, 2.0).divergent
        assert not schatten_norm(report, math.inf).divergent
        assert schatten_norm(report, math.inf).value == pytest.approx(1.0)

    def test_plain_values(self):
        assert schatten_norm(np.array([3.0, 4.0]), 2.0).value == pytest.approx(5.0)


class TestPositiveSpectrum:
    def test_eigenvalues(self):
        op = OperatorMatrix(np.diag([3.0, 1.0, 2.0]).astype(np.complex128), OperatorKind.TOEPLITZ, "d", hermitian=True)
        np.testing.assert_allclose(positive_spectrum(op).singular_values, [3.0, 2.0, 1.0])

    def test_needs_hermitian(self):
        op = OperatorMatrix(np.eye(2, dtype=np.complex128), OperatorKind.TOEPLITZ, "d")
        with pytest.raises(ValueError):
            positive_spectrum(op)

    def test_rejects_negative_operator(self):
        op = OperatorMatrix(np.diag([1.0, -1.0]).astype(np.complex128), OperatorKind.TOEPLITZ, "d", hermitian=True)
        with pytest.raises(TruncationError):
            positive_spectrum(op)
