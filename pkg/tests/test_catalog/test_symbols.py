"""Tests for the symbol catalog and name parser."""

import numpy as np
import pytest

from fock_ida.catalog import DEFAULT_SUITE, catalog, parse_symbol
from fock_ida.core.errors import UndefinedInputError
from fock_ida.core.models import GrowthClass


class TestParseSymbol:
    def test_plain_names(self):
        spec = parse_symbol("zbar")
        assert spec.name == "zbar"
        assert spec.growth == GrowthClass.POLYNOMIAL
        assert not spec.bounded

    def test_arguments_are_normalized(self):
        spec = parse_symbol("bump( 1+1i , 0.50 )")
        assert spec.name == "bump(1+1j,0.5)"
        assert spec.params == {"center": 1 + 1j, "width": 0.5}
        assert spec.bounded

    def test_optional_arguments(self):
        assert parse_symbol("bump").params == {}
        assert parse_symbol("gauss(2)").params == {"scale": 2.0}

    def test_random_takes_the_run_seed(self):
        assert parse_symbol("random", seed=7).name == "random(7)"
        assert parse_symbol("random(3)", seed=7).name == "random(3)"

    def test_conjugates(self):
        spec = parse_symbol("conj(cbump(0,1,1))")
        assert spec.conjugate
        assert spec.name == "conj(cbump(0,1,1))"
        twice = parse_symbol("conj(conj(step(0,1,2)))")
        assert not twice.conjugate
        assert twice.name == "step(0,1,2)"

    @pytest.mark.parametrize("text", ["foo", "bump(0,1,2)", "bump(x,1)", "Bump(0,1)", "z(1)"])
    def test_undefined_names(self, text):
        with pytest.raises(UndefinedInputError):
            parse_symbol(text)


class TestSymbolSpec:
    def test_build_keeps_the_name(self):
        symbol = parse_symbol("conj(cbump(0,1,2))").build()
        assert symbol.name == "conj(cbump(0,1,2))"
        z = np.array([0.2 + 0.1j])
        expected = np.conj(parse_symbol("cbump(0,1,2)").build()(z))
        np.testing.assert_array_equal(symbol(z), expected)

    def test_to_dict(self):
        info = parse_symbol("bump(1,0.5)").to_dict()
        assert info["params"] == {"center": "(1+0j)", "width": 0.5}
        assert info["growth"] == "compactly-supported"
        assert info["conjugate"] is False


class TestCatalog:
    def test_default_suite(self):
        specs = catalog(seed=4)
        assert [s.name for s in specs][:3] == ["z", "zbar", "bump(0,1)"]
        assert len(specs) == len(DEFAULT_SUITE)
        assert "random(4)" in {s.name for s in specs}
        assert "conj(random(4))" in {s.name for s in specs}

    def test_every_entry_builds(self):
        for spec in catalog():
            assert spec.build().name == spec.name
