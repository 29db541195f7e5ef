"""Symbols f: pointwise evaluation plus growth and support metadata."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.errors import SymbolClassError
from fock_ida.core.models import GrowthClass, Smoothness

SymbolFunc = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]

_GROWTH_SAMPLE_RINGS = 33
_GROWTH_SAMPLE_ANGLES = 64


def bump_profile(t: ArrayLike) -> NDArray[np.float64]:
    """b as a function of t = |x|^2: exp(1 - 1/(1 - t)) on t < 1, zero elsewhere."""
    tt = np.asarray(t, dtype=np.float64)
    inside = tt < 1.0
    safe = np.where(inside, tt, 0.0)
    return np.where(inside, np.exp(1.0 - 1.0 / (1.0 - safe)), 0.0)


def smooth_transition(t: ArrayLike) -> NDArray[np.float64]:
    """C-infinity step: 1 for t <= 0, 0 for t >= 1."""
    tt = np.asarray(t, dtype=np.float64)

    def h(s: NDArray[np.float64]) -> NDArray[np.float64]:
        pos = s > 0
        return np.where(pos, np.exp(-1.0 / np.where(pos, s, 1.0)), 0.0)

    a, b = h(1.0 - tt), h(tt)
    return a / (a + b)


@dataclass(frozen=True)
class Symbol:
    """A symbol with declared growth class.

    ``degree`` is the polynomial growth order (zero for bounded symbols).
    Compactly supported symbols vanish outside the disk of ``support_radius``
    around ``support_center``; ``breaks`` lists radii about that center
    where the symbol is not analytic.
    """

    name: str
    func: SymbolFunc
    growth: GrowthClass
    smoothness: Smoothness = Smoothness.C2
    degree: int = 0
    support_center: complex = 0j
    support_radius: float | None = None
    breaks: tuple[float, ...] = ()
    real_valued: bool = False
    holomorphic: bool = False

    def __call__(self, z: ArrayLike) -> NDArray[np.complex128]:
        zz = np.asarray(z, dtype=np.complex128)
        values = np.asarray(self.func(zz), dtype=np.complex128)
        if values.shape != zz.shape:
            values = np.broadcast_to(values, zz.shape).copy()
        return values

    @property
    def bounded(self) -> bool:
        return self.growth in (GrowthClass.BOUNDED, GrowthClass.COMPACT)

    def conj(self) -> "Symbol":
        func = self.func
        return replace(
            self,
            name=f"conj({self.name})",
            func=lambda z: np.conj(func(z)),
            holomorphic=self.holomorphic and self.real_valued,
        )

    def translate(self, shift: complex) -> "Symbol":
        """f o tau_shift, i.e. w -> f(w + shift)."""
        func = self.func
        s = complex(shift)
        return replace(
            self,
            name=f"{self.name}@{s.real:g}{s.imag:+g}i",
            func=lambda z: func(z + s),
            support_center=self.support_center - s,
        )

    def scaled(self, factor: complex) -> "Symbol":
        func = self.func
        c = complex(factor)
        return replace(
            self,
            name=f"{c.real:g}{c.imag:+g}i*{self.name}" if c.imag else f"{c.real:g}*{self.name}",
            func=lambda z: c * func(z),
            real_valued=self.real_valued and c.imag == 0,
        )

    def __add__(self, other: "Symbol") -> "Symbol":
        f, g = self.func, other.func
        if self.support_radius is not None and other.support_radius is not None:
            center = self.support_center
            radius = max(self.support_radius, abs(other.support_center - center) + other.support_radius)
            growth = GrowthClass.COMPACT
        else:
            center, radius = 0j, None
            growth = GrowthClass.POLYNOMIAL if GrowthClass.POLYNOMIAL in (self.growth, other.growth) else (
                GrowthClass.BOUNDED
            )
        return Symbol(
            name=f"{self.name}+{other.name}",
            func=lambda z: f(z) + g(z),
            growth=growth,
            smoothness=Smoothness.C2 if Smoothness.MEASURABLE not in (self.smoothness, other.smoothness) else (
                Smoothness.MEASURABLE
            ),
            degree=max(self.degree, other.degree),
            support_center=center,
            support_radius=radius,
            real_valued=self.real_valued and other.real_valued,
            holomorphic=self.holomorphic and other.holomorphic,
        )


def constant(value: complex, name: str | None = None) -> Symbol:
    c = complex(value)
    return Symbol(
        name=name or f"const({c.real:g}{c.imag:+g}i)",
        func=lambda z: np.full(z.shape, c, dtype=np.complex128),
        growth=GrowthClass.BOUNDED,
        real_valued=c.imag == 0,
        holomorphic=True,
    )


def holomorphic_polynomial(coefficients: Sequence[complex], name: str | None = None) -> Symbol:
    """sum_k coefficients[k] z^k."""
    coeffs = np.asarray(coefficients, dtype=np.complex128)
    degree = int(np.max(np.nonzero(coeffs)[0])) if np.any(coeffs) else 0

    def func(z: NDArray[np.complex128]) -> NDArray[np.complex128]:
        out = np.zeros(z.shape, dtype=np.complex128)
        for c in coeffs[::-1]:
            out = out * z + c
        return out

    return Symbol(
        name=name or "poly(" + ",".join(f"{c:g}" for c in coeffs) + ")",
        func=func,
        growth=GrowthClass.POLYNOMIAL if degree > 0 else GrowthClass.BOUNDED,
        degree=degree,
        holomorphic=True,
        real_valued=degree == 0 and coeffs[0].imag == 0,
    )


def z_symbol() -> Symbol:
    return holomorphic_polynomial([0, 1], name="z")


def zbar_symbol() -> Symbol:
    return replace(z_symbol().conj(), name="zbar")


def abs_squared() -> Symbol:
    return Symbol(
        name="abs2",
        func=lambda z: (np.abs(z) ** 2).astype(np.complex128),
        growth=GrowthClass.POLYNOMIAL,
        degree=2,
        real_valued=True,
    )


def bump(center: complex = 0j, width: float = 1.0, amplitude: float = 1.0) -> Symbol:
    """amplitude * b((z - center)/width), supported on the closed disk of radius ``width``."""
    c = complex(center)

    def func(z: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return (amplitude * bump_profile(np.abs((z - c) / width) ** 2)).astype(np.complex128)

    return Symbol(
        name=f"bump({_fmt(c)},{width:g})" if amplitude == 1.0 else f"bump({_fmt(c)},{width:g},{amplitude:g})",
        func=func,
        growth=GrowthClass.COMPACT,
        support_center=c,
        support_radius=float(width),
        real_valued=True,
    )


def complex_bump(center: complex = 0j, width: float = 1.0, omega: float = 1.0) -> Symbol:
    """bump(center, width) * exp(i omega Re z)."""
    base = bump(center, width)

    def func(z: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return base.func(z) * np.exp(1j * omega * z.real)

    return replace(base, name=f"cbump({_fmt(complex(center))},{width:g},{omega:g})", func=func, real_valued=False)


def smooth_step(center: complex = 0j, inner: float = 1.0, outer: float = 2.0) -> Symbol:
    """Radial step: 1 on |z - center| <= inner, 0 beyond outer, C-infinity in between."""
    if not 0 < inner < outer:
        raise ValueError("smooth_step needs 0 < inner < outer")
    c = complex(center)

    def func(z: NDArray[np.complex128]) -> NDArray[np.complex128]:
        t = (np.abs(z - c) - inner) / (outer - inner)
        return smooth_transition(t).astype(np.complex128)

    return Symbol(
        name=f"step({_fmt(c)},{inner:g},{outer:g})",
        func=func,
        growth=GrowthClass.COMPACT,
        support_center=c,
        support_radius=float(outer),
        breaks=(float(inner),),
        real_valued=True,
    )


def random_field(
    seed: int = 0, n_waves: int = 8, band: float = 2.0, radius: float = 2.5, center: complex = 0j
) -> Symbol:
    """Seeded band-limited sum of plane waves times a smooth compact window."""
    rng = np.random.default_rng(seed)
    freq_radius = band * np.sqrt(rng.uniform(0.0, 1.0, n_waves))
    freq_angle = rng.uniform(0.0, 2.0 * np.pi, n_waves)
    xi = freq_radius * np.exp(1j * freq_angle)
    amplitudes = (rng.normal(size=n_waves) + 1j * rng.normal(size=n_waves)) / np.sqrt(2.0 * n_waves)
    c = complex(center)

    def func(z: NDArray[np.complex128]) -> NDArray[np.complex128]:
        window = bump_profile(np.abs((z - c) / radius) ** 2)
        x = z - c
        phase = np.multiply.outer(x.real, xi.real) + np.multiply.outer(x.imag, xi.imag)
        waves = np.exp(1j * phase) @ amplitudes
        return np.asarray(window * waves, dtype=np.complex128)

    return Symbol(
        name=f"random({seed})",
        func=func,
        growth=GrowthClass.COMPACT,
        support_center=c,
        support_radius=float(radius),
    )


def gaussian(scale: float = 1.0) -> Symbol:
    """exp(-scale |z|^2)."""
    return Symbol(
        name=f"gauss({scale:g})",
        func=lambda z: np.exp(-scale * np.abs(z) ** 2).astype(np.complex128),
        growth=GrowthClass.BOUNDED,
        real_valued=True,
    )


def growth_consistent(symbol: Symbol, radius: float = 8.0) -> bool:
    """Diagnostic: do sampled magnitudes on |z| <= radius match the declared growth class?"""
    rho = np.linspace(0.0, radius, _GROWTH_SAMPLE_RINGS)
    theta = 2.0 * np.pi * np.arange(_GROWTH_SAMPLE_ANGLES) / _GROWTH_SAMPLE_ANGLES
    z = np.outer(rho, np.exp(1j * theta))
    values = np.abs(symbol(z))
    if not np.all(np.isfinite(values)):
        return False
    if symbol.growth == GrowthClass.COMPACT:
        if symbol.support_radius is None:
            return False
        outside = np.abs(z - symbol.support_center) > symbol.support_radius * (1.0 + 1e-9)
        return bool(np.all(values[outside] == 0.0))
    if symbol.growth == GrowthClass.BOUNDED:
        return True
    ratio = values / (1.0 + rho[:, None]) ** symbol.degree
    half = _GROWTH_SAMPLE_RINGS // 2
    inner_max = float(ratio[: half + 1].max())
    outer_max = float(ratio[half:].max())
    return outer_max <= 2.0 * inner_max + 1e-12


def check_growth(symbol: Symbol, radius: float = 8.0) -> None:
    if not growth_consistent(symbol, radius):
        raise SymbolClassError(f"symbol {symbol.name} does not match growth class {symbol.growth.value}")


def _fmt(c: complex) -> str:
    if c.imag == 0:
        return f"{c.real:g}"
    return f"{c.real:g}{c.imag:+g}j"


def zbar_gaussian(scale: float = 1.0) -> Symbol:
    """conj(z) exp(-scale |z|^2), bounded and smooth."""
    return Symbol(
        name="zbar_gauss" if scale == 1.0 else f"zbar_gauss({scale:g})",
        func=lambda z: (np.conj(z) * np.exp(-scale * np.abs(z) ** 2)).astype(np.complex128),
        growth=GrowthClass.BOUNDED,
    )
