"""Tests for lattice.nets."""

import numpy as np
import pytest

from fock_ida.core.errors import UndefinedInputError
from fock_ida.lattice.nets import covering_radius, lattice_lp_sum, make_lattice, separation_constant, split_lattice


class TestMakeLattice:
    def test_point_count(self):
        lat = make_lattice(1.0, 0j, 3.0)
        assert len(lat) == 29
        assert lat.indices.shape == (29, 2)

    def test_points_match_indices(self):
        lat = make_lattice(0.5, 0.1 + 0.2j, 4.0)
        expected = lat.base + lat.spacing * (lat.indices[:, 0] + 1j * lat.indices[:, 1])
        np.testing.assert_allclose(lat.points, expected)
        assert np.all(np.abs(lat.points) <= 4.0)

    def test_rejects_bad_spacing(self):
        with pytest.raises(ValueError):
            make_lattice(0.0)


class TestSeparation:
    def test_lattice_separation_is_spacing(self):
        assert separation_constant(make_lattice(0.5, 0j, 3.0).points) == pytest.approx(0.5)

    def test_repeated_point(self):
        assert separation_constant([0j, 1j, 0j]) == 0.0

    def test_needs_two_points(self):
        with pytest.raises(UndefinedInputError):
            separation_constant([1 + 1j])

    def test_covering_radius(self):
        lat = make_lattice(1.0, 0j, 5.0)
        assert covering_radius(lat, 2.0) == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-2)


class TestSplit:
    @pytest.mark.parametrize("K", [1, 2, 3])
    def test_sublattices_are_sparser(self, K):
        lat = make_lattice(1.0, 0j, 6.0)
        split = split_lattice(lat, K)
        assert len(split.sublattices) == K * K
        assert sum(len(s) for s in split.sublattices) == len(lat)
        for points in split.sublattices:
            if len(points) > 1:
                assert separation_constant(points) >= K * lat.spacing - 1e-12

    def test_rejects_zero_k(self):
        with pytest.raises(ValueError):
            split_lattice(make_lattice(1.0), 0)


class TestLpSum:
    def test_finite_p(self):
        assert lattice_lp_sum([3.0, -4.0], 2.0) == pytest.approx(5.0)
        assert lattice_lp_sum([1.0, 1.0, 1.0], 1.0) == pytest.approx(3.0)

    def test_sup(self):
        assert lattice_lp_sum([3.0, -4.0], np.inf) == 4.0
