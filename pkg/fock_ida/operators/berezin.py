"""Berezin transforms of operators, measures and function symbols."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.ida.measures import Measure, berezin_measure
from fock_ida.operators.matrix import OperatorMatrix
from fock_ida.space.basis import Basis
from fock_ida.space.kernel import kernel_coefficients
from fock_ida.space.quadrature import QuadratureGrid, grid_for_symbol
from fock_ida.space.symbols import Symbol


def berezin_field(operator: OperatorMatrix, basis: Basis, z: ArrayLike) -> NDArray[np.complex128]:
    """<T k_z, k_z> for every point of z."""
    section = basis.truncated(operator.N) if basis.N > operator.N else basis
    return operator.quadratic_form(kernel_coefficients(section, z))


def berezin(target: OperatorMatrix | Measure, basis: Basis, z: complex) -> complex:
    """T-tilde(z) for an operator matrix, mu-tilde(z) for a measure."""
    if isinstance(target, OperatorMatrix):
        return complex(berezin_field(target, basis, np.array([complex(z)]))[0])
    return complex(berezin_measure(target, basis, z))


def berezin_symbol(f: Symbol, basis: Basis, z: ArrayLike, grid: QuadratureGrid | None = None) -> NDArray[np.complex128]:
    """int f |k_z|^2 e^{-2 phi} dv, the Berezin transform of a function symbol."""
    grid = grid if grid is not None else grid_for_symbol(f, basis.weight, basis.N)
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    coeffs = kernel_coefficients(basis, zz)
    profile = np.abs(basis.weighted_values(grid.nodes) @ coeffs.T) ** 2
    return np.asarray((grid.weights * f(grid.nodes)) @ profile, dtype=np.complex128)
