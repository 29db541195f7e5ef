"""Tests for statistical aggregation."""

import math

import pytest

from fock_ida.analyzer.statistics import (
    aggregate_values,
    column_values,
    percentile,
    summarize_columns,
    values_by_symbol,
)


class TestAggregateValues:
    def test_skips_undefined_values(self):
        stats = aggregate_values([1.0, 2.0, 3.0, None, math.nan, math.inf])
        assert stats == {"count": 3, "mean": 2.0, "median": 2.0, "std_dev": 1.0, "min": 1.0, "max": 3.0}

    def test_single_value(self):
        assert aggregate_values([4.0])["std_dev"] == 0.0

    def test_empty(self):
        assert aggregate_values([None])["count"] == 0
        assert aggregate_values([])["mean"] is None


class TestColumns:
    def test_column_values_skip_booleans(self, sample_rows):
        assert column_values(sample_rows, "extra") == [None, None, None]
        assert column_values(sample_rows, "ratio_a/b") == [1.5, None, None]

    def test_summarize_columns(self, sample_rows):
        summary = summarize_columns(sample_rows, ["schatten", "missing"])
        assert list(summary) == ["schatten"]
        assert summary["schatten"]["max"] == 7.0

    def test_values_by_symbol(self, sample_rows):
        grouped = values_by_symbol(sample_rows, "schatten")
        assert grouped["zbar"]["mean"] == 7.0
        assert grouped["bump(0,1)"]["count"] == 1


class TestPercentile:
    def test_interpolates(self):
        assert percentile([1.0, 2.0, 3.0, 4.0], 50) == pytest.approx(2.5)

    def test_empty(self):
        assert percentile([], 90) == 0.0
