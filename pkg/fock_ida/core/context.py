"""Per-run analysis context: the weight, bases, center grid and memoized per-symbol artifacts.

Cases of one run share Gram matrices and oscillation fields through this
context. Workers may ask for the same artifact at once; each key has its
own lock, so the artifact is computed exactly once.
"""

import logging
import threading
from collections.abc import Callable
from functools import cached_property
from typing import Any, TypeVar

import numpy as np
from numpy.typing import NDArray

from fock_ida.catalog.symbols import SymbolSpec, parse_symbol
from fock_ida.core.config import ExperimentConfig
from fock_ida.core.models import FieldKind
from fock_ida.ida.fields import OscillationField, center_grid, oscillation_fields
from fock_ida.operators.hankel import clean_gram, hankel_gram, hankel_kernel_field
from fock_ida.operators.matrix import OperatorMatrix
from fock_ida.schatten.spectrum import SpectralReport, singular_values
from fock_ida.space.basis import Basis, build_basis
from fock_ida.space.symbols import Symbol
from fock_ida.space.weights import Weight

logger = logging.getLogger(__name__)

T = TypeVar("T")


class AnalysisContext:
    """Lazily built, thread-safe shared state for one experiment run."""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self._cache: dict[tuple[Any, ...], Any] = {}
        self._locks: dict[tuple[Any, ...], threading.Lock] = {}
        self._guard = threading.Lock()

    def memo(self, key: tuple[Any, ...], factory: Callable[[], T]) -> T:
        with self._guard:
            if key in self._cache:
                return self._cache[key]  # type: ignore[no-any-return]
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            with self._guard:
                if key in self._cache:
                    return self._cache[key]  # type: ignore[no-any-return]
            logger.debug(f"Building {key}")
            value = factory()
            with self._guard:
                self._cache[key] = value
            return value

    @cached_property
    def weight(self) -> Weight:
        perturbation = self.config.perturbation
        if perturbation is None:
            return Weight.standard(self.config.alpha)
        return Weight.sinusoidal(self.config.alpha, perturbation.amplitude, perturbation.frequency)

    def extended_basis(self, order: int | None = None) -> Basis:
        n = self.config.extended_order if order is None else order + self.config.codomain_pad
        return self.memo(("basis", n), lambda: build_basis(self.weight, n))

    def basis(self, order: int | None = None) -> Basis:
        n = self.config.N if order is None else order
        return self.extended_basis(n).truncated(n)

    @cached_property
    def centers(self) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
        return center_grid(self.config.grid_radius, self.config.center_spacing)

    def spec(self, name: str) -> SymbolSpec:
        return self.memo(("spec", name), lambda: parse_symbol(name, self.config.seed))

    def symbol(self, name: str) -> Symbol:
        return self.memo(("symbol", name), lambda: self.spec(name).build())

    def conjugate_name(self, name: str) -> str:
        spec = self.spec(name)
        if spec.kind == "z" and not spec.conjugate:
            return "zbar"
        if spec.kind == "zbar" and not spec.conjugate:
            return "z"
        return parse_symbol(f"conj({spec.name})", self.config.seed).name

    def canonical(self, name: str) -> str:
        """Real symbols share artifacts with their conjugates."""
        spec = self.spec(name)
        if spec.conjugate and self.symbol(name).real_valued:
            return self.conjugate_name(name)
        return spec.name

    def gram(self, name: str, order: int | None = None) -> OperatorMatrix:
        n = self.config.N if order is None else order
        key = self.canonical(name)
        psd = self.config.tolerances.psd
        return self.memo(
            ("gram", key, n),
            lambda: hankel_gram(self.symbol(key), self.basis(n), self.extended_basis(n), psd_tol=psd),
        )

    def spectrum(self, name: str, order: int | None = None) -> SpectralReport:
        tol = self.config.tolerances
        return self.memo(
            ("spectrum", self.canonical(name), order),
            lambda: singular_values(self.gram(name, order), psd_tol=tol.psd, spectral_tail=tol.spectral_tail),
        )

    def kernel_field(self, name: str, order: int | None = None) -> OscillationField:
        """||H_f k_z|| on the center grid; ``order`` selects a leading block of the order-N Gram."""
        centers, weights = self.centers
        n = self.config.N if order is None else order

        def build() -> OscillationField:
            gram = clean_gram(self.gram(name).leading(n), self.config.tolerances.psd)
            return hankel_kernel_field(gram, self.basis(), centers, weights, self.config.grid_radius)

        return self.memo(("kernel-field", self.canonical(name), n), build)

    def fields(self, name: str, r: float | None = None) -> dict[FieldKind, OscillationField]:
        """M_{2,r}, MO_{2,r} and G_r^{(d)} of the named symbol on the run's center grid."""
        radius = self.config.r if r is None else r
        centers, weights = self.centers
        key = self.canonical(name)
        return self.memo(
            ("fields", key, radius),
            lambda: oscillation_fields(
                self.symbol(key), radius, self.config.d, centers, weights, self.config.grid_radius
            ),
        )
