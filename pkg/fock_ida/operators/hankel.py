"""Hankel operators H_f = (I - P) M_f through their Gram matrices.

H_f is never formed as a map into L^2(phi). On the order-N section,

    H_f^* H_f = T_{|f|^2} - B^* B,   B = P_{N'} M_f P_N,

where the codomain projection uses a longer basis of order N' so that
M_f e_k stays inside it for polynomial symbols.
"""

import logging
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fock_ida.core.models import FieldKind
from fock_ida.ida.fields import CHUNK, OscillationField
from fock_ida.operators.matrix import OperatorKind, OperatorMatrix, hermitian_part
from fock_ida.operators.toeplitz import compression
from fock_ida.space.basis import Basis
from fock_ida.space.kernel import kernel_coefficients
from fock_ida.space.quadrature import QuadratureGrid, grid_for_symbol
from fock_ida.space.symbols import Symbol, check_growth

logger = logging.getLogger(__name__)

PSD_TOL = 1e-10


def modulus_squared(f: Symbol) -> Symbol:
    func = f.func
    return replace(
        f,
        name=f"|{f.name}|^2",
        func=lambda z: (np.abs(func(z)) ** 2).astype(np.complex128),
        degree=2 * f.degree,
        real_valued=True,
        holomorphic=False,
    )


def hankel_grid(f: Symbol, codomain: Basis) -> QuadratureGrid:
    """One grid accurate for both T_{|f|^2} and the codomain compression."""
    return grid_for_symbol(modulus_squared(f), codomain.weight, codomain.N)


def zero_band(eigenvalues: NDArray[np.float64], tol: float = PSD_TOL) -> float:
    return tol * max(1.0, float(np.max(np.abs(eigenvalues), initial=0.0)))


def hankel_gram(
    f: Symbol,
    basis: Basis,
    codomain: Basis,
    grid: QuadratureGrid | None = None,
    psd_tol: float = PSD_TOL,
    check: bool = True,
) -> OperatorMatrix:
    """Hermitian Gram matrix H_f^* H_f on span{e_0, ..., e_{N-1}}.

    A negative eigenvalue beyond the zero band is logged as a truncation
    warning and recorded as ``psd_violation``; it is raised only when
    singular values are extracted.
    """
    if codomain.N < basis.N:
        raise ValueError(f"codomain order {codomain.N} is shorter than the domain order {basis.N}")
    if check:
        check_growth(f)
    grid = grid if grid is not None else hankel_grid(f, codomain)
    values = f(grid.nodes)
    modulus = compression(grid.nodes, grid.weights * np.abs(values) ** 2, basis, basis)
    lifted = compression(grid.nodes, grid.weights * values, codomain, basis)
    entries = hermitian_part(modulus - lifted.conj().T @ lifted)

    eigenvalues = np.linalg.eigvalsh(entries)
    band = zero_band(eigenvalues, psd_tol)
    violation = max(0.0, -float(eigenvalues[0]) - band) if eigenvalues.size else 0.0
    if violation > 0.0:
        logger.warning(f"hankel gram of {f.name}: eigenvalue {eigenvalues[0]:.3e} below the zero band ({band:.1e})")
    logger.debug(f"hankel gram of {f.name}: N={basis.N}, N'={codomain.N}, trace {float(np.trace(entries).real):.6g}")
    return OperatorMatrix(
        entries=entries,
        kind=OperatorKind.HANKEL_GRAM,
        symbol=f.name,
        codomain=f"F2({codomain.N})",
        hermitian=True,
        grid=grid.describe(),
        psd_violation=violation,
    )


def clean_gram(gram: OperatorMatrix, psd_tol: float = PSD_TOL) -> OperatorMatrix:
    """Gram matrix with eigenvalues in the zero band set to zero and small negatives clamped."""
    eigenvalues, vectors = np.linalg.eigh(gram.entries)
    band = zero_band(eigenvalues, psd_tol)
    cleaned = np.where(np.abs(eigenvalues) <= band, 0.0, np.maximum(eigenvalues, 0.0))
    entries = hermitian_part((vectors * cleaned) @ vectors.conj().T)
    return replace(gram, entries=entries)


def kernel_norms(gram: OperatorMatrix, basis: Basis, z: ArrayLike) -> NDArray[np.float64]:
    """||H_f k_z|| = <G k_z, k_z>^{1/2} for every point of z."""
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    out = np.empty(zz.size)
    section = basis.truncated(gram.N) if basis.N > gram.N else basis
    for start in range(0, zz.size, CHUNK):
        coeffs = kernel_coefficients(section, zz[start : start + CHUNK])
        out[start : start + CHUNK] = np.sqrt(np.maximum(gram.quadratic_form(coeffs).real, 0.0))
    return out


def hankel_kernel_field(
    gram: OperatorMatrix,
    basis: Basis,
    centers: ArrayLike,
    weights: ArrayLike | None = None,
    radius: float | None = None,
) -> OscillationField:
    cs = np.atleast_1d(np.asarray(centers, dtype=np.complex128))
    ws = np.ones(cs.size) if weights is None else np.asarray(weights, dtype=np.float64)
    rad = float(np.max(np.abs(cs), initial=0.0)) if radius is None else float(radius)
    return OscillationField(cs, kernel_norms(gram, basis, cs), ws, FieldKind.KERNEL_HANKEL, rad)


@dataclass
class KernelSplit:
    """||f k_z||^2 = berezin(T_{|f|^2}, z) and ||P(f k_z)||^2, computed on the grid."""

    total: float
    projected: float

    @property
    def norm(self) -> float:
        return float(np.sqrt(max(self.total - self.projected, 0.0)))


def kernel_split(
    f: Symbol, z: complex, basis: Basis, codomain: Basis, grid: QuadratureGrid | None = None
) -> KernelSplit:
    grid = grid if grid is not None else hankel_grid(f, codomain)
    coeffs = kernel_coefficients(basis, complex(z))
    modes = codomain.weighted_values(grid.nodes)
    product = f(grid.nodes) * (modes[:, : basis.N] @ coeffs)
    total = float(np.sum(grid.weights * np.abs(product) ** 2))
    projection = (grid.weights * product) @ np.conj(modes)
    return KernelSplit(total=total, projected=float(np.sum(np.abs(projection) ** 2)))


def hankel_apply_to_kernel(
    f: Symbol, z: complex, basis: Basis, codomain: Basis, grid: QuadratureGrid | None = None
) -> float:
    """||f k_z - P(f k_z)|| in L^2(phi), the projection taken in the codomain basis."""
    return kernel_split(f, z, basis, codomain, grid).norm
