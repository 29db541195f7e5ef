"""Named symbol suite and the parser for symbol names used in configs and on the command line."""

import re
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from typing import Any

from fock_ida.core.errors import UndefinedInputError
from fock_ida.core.models import GrowthClass
from fock_ida.space.symbols import (
    Symbol,
    bump,
    check_growth,
    complex_bump,
    gaussian,
    random_field,
    smooth_step,
    z_symbol,
    zbar_gaussian,
    zbar_symbol,
)

_CALL = re.compile(r"^(?P<head>[a-z_]+)(?:\((?P<args>[^()]*)\))?$")
_CONJ = re.compile(r"^conj\((?P<inner>.*)\)$")


@dataclass(frozen=True)
class _Kind:
    factory: Callable[..., Symbol]
    growth: GrowthClass
    params: tuple[str, ...]
    complex_params: tuple[str, ...] = ()
    description: str = ""


_KINDS: dict[str, _Kind] = {
    "z": _Kind(lambda: z_symbol(), GrowthClass.POLYNOMIAL, (), description="holomorphic linear symbol"),
    "zbar": _Kind(lambda: zbar_symbol(), GrowthClass.POLYNOMIAL, (), description="anti-holomorphic linear symbol"),
    "bump": _Kind(
        bump, GrowthClass.COMPACT, ("center", "width"), ("center",), description="real smooth bump b((z-c)/w)"
    ),
    "cbump": _Kind(
        complex_bump,
        GrowthClass.COMPACT,
        ("center", "width", "omega"),
        ("center",),
        description="bump times exp(i omega Re z)",
    ),
    "step": _Kind(
        smooth_step,
        GrowthClass.COMPACT,
        ("center", "inner", "outer"),
        ("center",),
        description="mollified radial step",
    ),
    "random": _Kind(
        lambda seed: random_field(int(seed)),
        GrowthClass.COMPACT,
        ("seed",),
        description="seeded band-limited random field in a smooth window",
    ),
    "gauss": _Kind(gaussian, GrowthClass.BOUNDED, ("scale",), description="exp(-scale |z|^2)"),
    "zbar_gauss": _Kind(zbar_gaussian, GrowthClass.BOUNDED, (), description="conj(z) exp(-|z|^2)"),
}

DEFAULT_SUITE = (
    "z",
    "zbar",
    "bump(0,1)",
    "conj(bump(0,1))",
    "cbump(0,1,1)",
    "conj(cbump(0,1,1))",
    "step(0,1,2)",
    "conj(step(0,1,2))",
    "random",
    "conj(random)",
    "zbar_gauss",
)


@dataclass
class SymbolSpec:
    """A catalog entry: constructor, parameters and declared growth class."""

    name: str
    kind: str
    growth: GrowthClass
    params: dict[str, Any] = field(default_factory=dict)
    conjugate: bool = False
    description: str = ""

    def build(self) -> Symbol:
        """Construct the symbol and verify its growth class on samples."""
        symbol = _KINDS[self.kind].factory(**self.params)
        if self.conjugate:
            symbol = symbol.conj()
        symbol = replace(symbol, name=self.name)
        check_growth(symbol)
        return symbol

    @property
    def bounded(self) -> bool:
        return self.growth != GrowthClass.POLYNOMIAL

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind,
            "growth": self.growth.value,
            "params": {k: str(v) if isinstance(v, complex) else v for k, v in self.params.items()},
            "conjugate": self.conjugate,
            "description": self.description,
        }


def _fmt(value: Any) -> str:
    if isinstance(value, complex):
        if value.imag == 0:
            return f"{value.real:g}"
        return f"{value.real:g}{value.imag:+g}j"
    return f"{value:g}" if isinstance(value, float) else str(value)


def parse_symbol(text: str, seed: int = 0) -> SymbolSpec:
    """Parse names like ``bump(0,1)``, ``cbump(1+1j,0.5,2)``, ``random`` or ``conj(step(0,1,2))``.

    ``random`` without an argument takes the run seed.
    """
    compact = "".join(text.split())
    conj = _CONJ.match(compact)
    if conj:
        inner = parse_symbol(conj.group("inner"), seed)
        if inner.conjugate:
            return replace(inner, name=inner.name[len("conj(") : -1], conjugate=False)
        return replace(inner, name=f"conj({inner.name})", conjugate=True)

    match = _CALL.match(compact)
    if not match or match.group("head") not in _KINDS:
        raise UndefinedInputError(f"unknown symbol '{text}'; see `fock-ida catalog`")
    head = match.group("head")
    kind = _KINDS[head]
    raw = [a for a in (match.group("args") or "").split(",") if a]
    if len(raw) > len(kind.params):
        raise UndefinedInputError(f"symbol '{text}' takes at most {len(kind.params)} arguments")

    params: dict[str, Any] = {}
    try:
        for key, value in zip(kind.params, raw, strict=False):
            if key in kind.complex_params:
                params[key] = complex(value.replace("i", "j"))
            elif key == "seed":
                params[key] = int(value)
            else:
                params[key] = float(value)
    except ValueError as e:
        raise UndefinedInputError(f"bad argument in symbol '{text}': {e}") from e
    if head == "random" and "seed" not in params:
        params["seed"] = seed

    shown = [_fmt(params[k]) for k in kind.params if k in params]
    name = f"{head}({','.join(shown)})" if shown else head
    return SymbolSpec(name=name, kind=head, growth=kind.growth, params=params, description=kind.description)


def catalog(seed: int = 0) -> list[SymbolSpec]:
    """The default symbol suite, conjugate pairs included."""
    return [parse_symbol(name, seed) for name in DEFAULT_SUITE]
