"""Toeplitz finite sections T_g and T_mu."""

import logging

import numpy as np
from numpy.typing import NDArray

from fock_ida.ida.measures import Measure
from fock_ida.operators.matrix import OperatorKind, OperatorMatrix, hermitian_part
from fock_ida.space.basis import Basis
from fock_ida.space.quadrature import QuadratureGrid, grid_for_symbol
from fock_ida.space.symbols import Symbol, check_growth

logger = logging.getLogger(__name__)


def compression(
    nodes: NDArray[np.complex128],
    masses: NDArray[np.complex128] | NDArray[np.float64],
    rows: Basis,
    cols: Basis,
) -> NDArray[np.complex128]:
    """[j, k] = sum_n masses_n e_k(w_n) conj(e_j(w_n)) e^{-2 phi(w_n)} with j < rows.N, k < cols.N."""
    row_modes = rows.weighted_values(nodes)
    nested = rows.weight is cols.weight and rows.N >= cols.N
    nested = nested and bool(np.array_equal(rows.log_norms[: cols.N], cols.log_norms))
    col_modes = row_modes[:, : cols.N] if nested else cols.weighted_values(nodes)
    return np.asarray(np.conj(row_modes).T @ (masses[:, None] * col_modes), dtype=np.complex128)


def toeplitz_matrix(
    g: Symbol | Measure, basis: Basis, grid: QuadratureGrid | None = None, check: bool = True
) -> OperatorMatrix:
    """T_{jk} = <g e_k, e_j> by quadrature, or int e_k conj(e_j) e^{-2 phi} dmu for a measure."""
    if isinstance(g, Symbol):
        if check:
            check_growth(g)
        grid = grid if grid is not None else grid_for_symbol(g, basis.weight, basis.N)
        nodes, masses = grid.nodes, grid.weights * g(grid.nodes)
        hermitian = g.real_valued
        name, grid_info = g.name, grid.describe()
    else:
        nodes, masses = g.quadrature()
        hermitian = True
        name, grid_info = g.name, {"domain": "measure", "nodes": int(nodes.size)}
    entries = compression(nodes, masses, basis, basis)
    if hermitian:
        entries = hermitian_part(entries)
    logger.debug(f"toeplitz {name}: N={basis.N}, {grid_info.get('nodes')} nodes")
    return OperatorMatrix(
        entries=entries,
        kind=OperatorKind.TOEPLITZ,
        symbol=name,
        hermitian=hermitian,
        grid=grid_info,
    )
