"""Shared test fixtures."""

import pytest

from fock_ida.beurling.grid import PlaneGrid
from fock_ida.core.config import ExperimentConfig, parse_config
from fock_ida.core.models import AcceptanceCheck, CaseResult, ExperimentId
from fock_ida.plugins.base import (
    BaseExperimentPlugin,
    Case,
    ExperimentMetadata,
    ExperimentRegistry,
)
from fock_ida.space.basis import Basis, build_basis
from fock_ida.space.weights import Weight


class MockExperiment(BaseExperimentPlugin):
    """Mock experiment that computes nothing numerical."""

    experiment_id = ExperimentId.HS_IDENTITY

    def get_plugin_info(self) -> ExperimentMetadata:
        return ExperimentMetadata(
            name="Mock experiment",
            experiment_id=self.experiment_id,
            version="0.1.0",
            description="Mock experiment for testing",
            default_symbols=["bump(0,1)", "zbar"],
            default_p_values=[1.0, 2.0],
            checks=["mock-bound"],
            config_defaults={"r": 0.5},
        )

    def run_case(self, context, case: Case) -> dict:
        if case.symbol == "fail":
            raise RuntimeError("boom")
        return {
            "value": 2.0 * case.p,
            "value_divergent": False,
            "delta_value": 0.01,
            "r_used": context.config.r,
        }

    def acceptance(self, context, rows: list[CaseResult]) -> list[AcceptanceCheck]:
        return [self.bound_check("mock-bound", [r.values.get("value") for r in self.completed(rows)], 100.0)]


@pytest.fixture(scope="session")
def standard_weight() -> Weight:
    return Weight.standard(1.0)


@pytest.fixture(scope="session")
def codomain(standard_weight) -> Basis:
    """Order-80 basis: the N = 60 section plus the default codomain padding."""
    return build_basis(standard_weight, 80)


@pytest.fixture(scope="session")
def basis(codomain) -> Basis:
    return codomain.truncated(60)


@pytest.fixture(scope="session")
def plane_grid() -> PlaneGrid:
    return PlaneGrid(128, 8.0)


@pytest.fixture
def mock_experiment() -> MockExperiment:
    return MockExperiment()


@pytest.fixture
def mock_registry(mock_experiment) -> ExperimentRegistry:
    registry = ExperimentRegistry()
    registry.register(mock_experiment)
    return registry


@pytest.fixture
def mock_config(tmp_path) -> ExperimentConfig:
    return parse_config({"experiment": ExperimentId.HS_IDENTITY.value, "output": str(tmp_path / "out")})


@pytest.fixture
def sample_rows() -> list[CaseResult]:
    return [
        CaseResult(
            experiment="E1-equivalence",
            symbol="bump(0,1)",
            p=2.0,
            values={"schatten": 0.5, "schatten_divergent": False, "delta_schatten": 0.05, "ratio_a/b": 1.5},
        ),
        CaseResult(
            experiment="E1-equivalence",
            symbol="zbar",
            p=2.0,
            values={"schatten": 7.0, "schatten_divergent": True, "delta_schatten": 0.9, "ratio_a/b": None},
        ),
        CaseResult(
            experiment="E1-equivalence",
            symbol="cbump(0,1,1)",
            p=4.0,
            values={"schatten": 0.25, "schatten_divergent": False, "delta_schatten": 0.5, "extra": True},
        ),
    ]
