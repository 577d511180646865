"""Adjoint matrices for the 52/78/133/248-dimensional algebras.

Two independent routes produce the matrix of ad(x) on flattened
coordinates:

* the column route applies the bracket to every coordinate unit and
  stacks the flattened results (the defining property of ad), and
* the assembled route composes the matrix from small action blocks
  (derivation actions, chart multiplications, coefficient rows) placed
  at fixed offsets.

Both routes must agree entry for entry; the test suite enforces that on
every coordinate unit and on random elements.  The module also carries
the labelled coordinate bases, including the 14-dimensional subalgebra
of the derivation block spanned by the S/L generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable, Iterable, Iterator, Union

from .brackets import (
    DIM_R4,
    DIM_R6,
    DIM_R7,
    DIM_R8,
    R4Element,
    R6Element,
    R7Element,
    R8Element,
    bracket4,
    bracket6,
    bracket7,
    bracket8,
    flatten,
    unflatten,
)
from .cayley import DIM_SO8, NU, NU2, Octonion, PAIRS, PAIR_INDEX, apply_so8, so8_bracket
from .exact import (
    ColumnEchelon,
    DenseVector,
    GaussianRational,
    ONE,
    ScalarLike,
    SparseMatrix,
    ZERO,
    gr,
)
from .jordan import AntiHermitianA, FreudenthalVector, JordanElement, jd_coords

__all__ = [
    "BasisLabel",
    "BasisSet",
    "LABELS",
    "LABEL_BY_NAME",
    "LEVEL_DIMS",
    "ad_matrix",
    "ad_matrix_assembled",
    "ad_matrix_level",
    "ad_matrix_level_assembled",
    "basis_element",
    "build_basis",
    "clip",
    "g2_generator",
    "g2_generator_names",
    "unit_element",
]

# ---------------------------------------------------------------------------
# Coordinate offsets of the flattened fields (0-based, 248-dim layout).

OFF_D, OFF_M, OFF_TAU, OFF_T = 0, 28, 52, 54
OFF_ALPHA, OFF_A, OFF_BETA, OFF_B, OFF_RHO = 78, 81, 105, 108, 132
OFF_CHI, OFF_X, OFF_GAMMA, OFF_Y, OFF_XI, OFF_ETA = 133, 136, 160, 163, 187, 188
OFF_MU, OFF_Z, OFF_PSI, OFF_W, OFF_ZETA, OFF_OMEGA = 189, 192, 216, 219, 243, 244
OFF_R, OFF_S, OFF_U = 245, 246, 247

LEVEL_DIMS = {2: DIM_SO8, 4: DIM_R4, 6: DIM_R6, 7: DIM_R7, 8: DIM_R8}

_HALF = Q(1, 2)
_THIRD = Q(1, 3)
_QUARTER = Q(1, 4)
_SIXTH = Q(1, 6)
_EIGHTH = Q(1, 8)
_TWO_THIRDS = Q(2, 3)
_FOUR_THIRDS = Q(4, 3)
_THREE_EIGHTHS = Q(3, 8)

# ---------------------------------------------------------------------------
# Rectangular sparse blocks: {(row, col): value} with 0-based local indices.

Block = dict

ChartLike = Union[JordanElement, AntiHermitianA]


def _from_columns(columns: Iterable[DenseVector]) -> Block:
    out: Block = {}
    for c, vec in enumerate(columns):
        for r, v in vec.support().items():
            out[(r, c)] = v
    return out


def _from_oct_columns(columns: Iterable[Octonion]) -> Block:
    out: Block = {}
    for c, o in enumerate(columns):
        for r, v in enumerate(o.coeffs):
            if v:
                out[(r, c)] = v
    return out


def _from_square(matrix: SparseMatrix) -> Block:
    return {(r - 1, c - 1): v for r, c, v in matrix.triplets}


def _bshift(block: Block, dr: int, dc: int) -> Block:
    return {(r + dr, c + dc): v for (r, c), v in block.items()}


def _bscale(block: Block, factor: ScalarLike) -> Block:
    f = GaussianRational.of(factor)
    if not f:
        return {}
    return {key: f * v for key, v in block.items()}


def _btrans(block: Block) -> Block:
    return {(c, r): v for (r, c), v in block.items()}


def _bmul(a: Block, b: Block) -> Block:
    by_row: dict[int, list[tuple[int, GaussianRational]]] = {}
    for (k, c), v in b.items():
        by_row.setdefault(k, []).append((c, v))
    out: Block = {}
    for (r, k), va in a.items():
        for c, vb in by_row.get(k, ()):
            key = (r, c)
            acc = out.get(key, ZERO) + va * vb
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


_NU_BLOCK = _from_square(NU)
_NU2_BLOCK = _from_square(NU2)


def block_matrix(block: Block, dim: int) -> SparseMatrix:
    """Materialize a block as a square matrix (tests and clip fixtures)."""
    return SparseMatrix.from_entries(dim, ((r + 1, c + 1, v) for (r, c), v in block.items()))


# ---------------------------------------------------------------------------
# Base action matrices, built column by column from the defining actions.


def ad_so8_block(D: DenseVector) -> Block:
    """28x28 matrix of bracketing with D on the pair coordinates."""
    return _from_columns(
        so8_bracket(D, DenseVector.unit(DIM_SO8, k)) for k in range(DIM_SO8)
    )


def act_oct_block(D: DenseVector) -> Block:
    """8x8 matrix of the derivation with coordinates D on one octonion."""
    return _from_oct_columns(apply_so8(D, Octonion.basis(j)) for j in range(8))


def act_pairs_block(m: Octonion) -> Block:
    """8x28 matrix: pair unit k maps to its derivation applied to m."""
    return _from_oct_columns(
        apply_so8(DenseVector.unit(DIM_SO8, k), m) for k in range(DIM_SO8)
    )


def deriv_coords_block(m: Octonion) -> Block:
    """28x8 matrix: octonion unit j maps to the derivation pair (m, e_j)."""
    return _from_columns(jd_coords(m, Octonion.basis(j)) for j in range(8))


def conj_rmul_block(m: Octonion) -> Block:
    """8x8 matrix of v -> conj(v * m)."""
    return _from_oct_columns((Octonion.basis(j) * m).conj() for j in range(8))


def conj_lmul_block(m: Octonion) -> Block:
    """8x8 matrix of v -> conj(m * v)."""
    return _from_oct_columns((m * Octonion.basis(j)).conj() for j in range(8))


def coeff_row_block(m: Octonion) -> Block:
    """1x8 coefficient row of m."""
    return {(0, j): v for j, v in enumerate(m.coeffs) if v}


# ---------------------------------------------------------------------------
# Chart decomposition: diagonal scalars plus three octonion slots.


def _chart_parts(
    obj: ChartLike,
) -> tuple[tuple[GaussianRational, ...], tuple[Octonion, ...]]:
    if isinstance(obj, JordanElement):
        return (obj.chi1, obj.chi2, obj.chi3), (obj.x1, obj.x2, obj.x3)
    return (ZERO, ZERO, ZERO), (obj.a1, obj.a2, obj.a3)


def act_slots_block(D: DenseVector) -> Block:
    """24x24 block-diagonal action of D on the three rotated chart slots."""
    out: Block = {}
    for i, coords in enumerate((D, NU.apply(D), NU2.apply(D))):
        out.update(_bshift(act_oct_block(coords), 8 * i, 8 * i))
    return out


def deriv_from_charts(obj: ChartLike) -> Block:
    """28x24: chart slots map into derivation coordinates, slots rotated."""
    _, (x1, x2, x3) = _chart_parts(obj)
    out: Block = {}
    out.update(deriv_coords_block(x1))
    out.update(_bshift(_bmul(_NU2_BLOCK, deriv_coords_block(x2)), 0, 8))
    out.update(_bshift(_bmul(_NU_BLOCK, deriv_coords_block(x3)), 0, 16))
    return out


def charts_from_pairs(obj: ChartLike) -> Block:
    """24x28: pair coordinates act on the three chart slots, rotated."""
    _, (x1, x2, x3) = _chart_parts(obj)
    out: Block = {}
    out.update(act_pairs_block(x1))
    out.update(_bshift(_bmul(act_pairs_block(x2), _NU_BLOCK), 8, 0))
    out.update(_bshift(_bmul(act_pairs_block(x3), _NU2_BLOCK), 16, 0))
    return out


def conj_mix_block(obj: ChartLike, plus: bool = False) -> Block:
    """24x24 off-diagonal grid of conjugated slot multiplications."""
    _, (x1, x2, x3) = _chart_parts(obj)
    s = 1 if plus else -1
    out: Block = {}
    out.update(_bshift(conj_rmul_block(x3), 0, 8))
    out.update(_bshift(_bscale(conj_lmul_block(x2), s), 0, 16))
    out.update(_bshift(_bscale(conj_lmul_block(x3), s), 8, 0))
    out.update(_bshift(conj_rmul_block(x1), 8, 16))
    out.update(_bshift(conj_rmul_block(x2), 16, 0))
    out.update(_bshift(_bscale(conj_lmul_block(x1), s), 16, 8))
    return out


def diag_scale_block(obj: ChartLike, mode: str) -> Block:
    """24x24 scalar scaling of each slot by a combination of the diagonal."""
    (c1, c2, c3), _ = _chart_parts(obj)
    if mode == "each":
        f = (c1, c2, c3)
    elif mode == "diff":
        f = (c2 - c3, c3 - c1, c1 - c2)
    elif mode == "sum":
        f = (c2 + c3, c3 + c1, c1 + c2)
    else:  # pragma: no cover - internal misuse
        raise ValueError(f"unknown mode {mode!r}")
    out: Block = {}
    for i in range(3):
        if f[i]:
            for j in range(8):
                out[(8 * i + j, 8 * i + j)] = f[i]
    return out


def diag3_block(obj: ChartLike) -> Block:
    """3x3 diagonal of the chart's diagonal scalars."""
    (c1, c2, c3), _ = _chart_parts(obj)
    return {(i, i): c for i, c in enumerate((c1, c2, c3)) if c}


def diag23_block(obj: ChartLike) -> Block:
    """2x3 matrix keeping the first two diagonal scalars."""
    (c1, c2, _), _ = _chart_parts(obj)
    out: Block = {}
    if c1:
        out[(0, 0)] = c1
    if c2:
        out[(1, 1)] = c2
    return out


def diag32_block(obj: ChartLike) -> Block:
    """3x2 matrix expanding two columns into the traceless diagonal."""
    (c1, c2, c3), _ = _chart_parts(obj)
    out: Block = {}
    if c1:
        out[(0, 0)] = c1
    if c2:
        out[(1, 1)] = c2
    if c3:
        out[(2, 0)] = -c3
        out[(2, 1)] = -c3
    return out


def offdiag_sym_block(obj: ChartLike) -> Block:
    """3x3 symmetric off-diagonal arrangement of the diagonal scalars."""
    (c1, c2, c3), _ = _chart_parts(obj)
    entries = {(0, 1): c3, (0, 2): c2, (1, 0): c3, (1, 2): c1, (2, 0): c2, (2, 1): c1}
    return {k: v for k, v in entries.items() if v}


def offdiag_cyc_block(obj: ChartLike) -> Block:
    """3x3 cyclic off-diagonal arrangement of the diagonal scalars."""
    (c1, c2, c3), _ = _chart_parts(obj)
    entries = {(0, 1): c2, (0, 2): c3, (1, 0): c1, (1, 2): c3, (2, 0): c1, (2, 1): c2}
    return {k: v for k, v in entries.items() if v}


def offdiag_cyc_top(obj: ChartLike) -> Block:
    """First two rows of the cyclic off-diagonal arrangement."""
    return {k: v for k, v in offdiag_cyc_block(obj).items() if k[0] < 2}


def coeff_rows_diag(obj: ChartLike) -> Block:
    """3x24 block-diagonal of slot coefficient rows."""
    _, xs = _chart_parts(obj)
    out: Block = {}
    for i, x in enumerate(xs):
        out.update(_bshift(coeff_row_block(x), i, 8 * i))
    return out


def coeff_rows_diag_top(obj: ChartLike) -> Block:
    """First two rows of the coefficient-row diagonal."""
    return {k: v for k, v in coeff_rows_diag(obj).items() if k[0] < 2}


def cross_coeff_block(obj: ChartLike, plus: bool = False) -> Block:
    """3x24 grid of coefficient rows pairing complementary slots."""
    _, (x1, x2, x3) = _chart_parts(obj)
    s = 1 if plus else -1
    out: Block = {}
    out.update(_bshift(coeff_row_block(x2), 0, 8))
    out.update(_bshift(_bscale(coeff_row_block(x3), s), 0, 16))
    out.update(_bshift(_bscale(coeff_row_block(x1), s), 1, 0))
    out.update(_bshift(coeff_row_block(x3), 1, 16))
    out.update(_bshift(coeff_row_block(x1), 2, 0))
    out.update(_bshift(_bscale(coeff_row_block(x2), s), 2, 8))
    return out


def cross_coeff_top(obj: ChartLike, plus: bool = False) -> Block:
    """First two rows of the cross coefficient grid."""
    return {k: v for k, v in cross_coeff_block(obj, plus).items() if k[0] < 2}


def cross_coeff_tall(obj: ChartLike, plus: bool = False) -> Block:
    """24x2 columns of slot coefficients against the traceless diagonal."""
    _, (x1, x2, x3) = _chart_parts(obj)
    out: Block = {}
    if plus:
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x1)), -1), 0, 0))
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x2)), -1), 8, 1))
        out.update(_bshift(_btrans(coeff_row_block(x3)), 16, 0))
        out.update(_bshift(_btrans(coeff_row_block(x3)), 16, 1))
    else:
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x1)), -1), 0, 0))
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x1)), -2), 0, 1))
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x2)), 2), 8, 0))
        out.update(_bshift(_btrans(coeff_row_block(x2)), 8, 1))
        out.update(_bshift(_bscale(_btrans(coeff_row_block(x3)), -1), 16, 0))
        out.update(_bshift(_btrans(coeff_row_block(x3)), 16, 1))
    return out


def coeff_concat_row(obj: ChartLike) -> Block:
    """1x24 concatenation of the three slot coefficient rows."""
    _, xs = _chart_parts(obj)
    out: Block = {}
    for i, x in enumerate(xs):
        out.update(_bshift(coeff_row_block(x), 0, 8 * i))
    return out


def coeff_concat_col(obj: ChartLike) -> Block:
    """24x1 stacked slot coefficients."""
    return _btrans(coeff_concat_row(obj))


def diag_col_block(obj: ChartLike) -> Block:
    """3x1 column of the diagonal scalars."""
    (c1, c2, c3), _ = _chart_parts(obj)
    return {(i, 0): c for i, c in enumerate((c1, c2, c3)) if c}


# ---------------------------------------------------------------------------
# Assembly helper.


class _MatrixBuilder:
    __slots__ = ("dim", "acc")

    def __init__(self, dim: int) -> None:
        self.dim = dim
        self.acc: Block = {}

    def put(self, row0: int, col0: int, block: Block, scale: ScalarLike = 1) -> None:
        f = GaussianRational.of(scale)
        if not f:
            return
        acc = self.acc
        for (r, c), v in block.items():
            key = (row0 + r, col0 + c)
            value = acc.get(key, ZERO) + f * v
            if value:
                acc[key] = value
            elif key in acc:
                del acc[key]

    def put_scalar(self, row: int, col: int, value: GaussianRational) -> None:
        if not value:
            return
        key = (row, col)
        acc = self.acc
        total = acc.get(key, ZERO) + value
        if total:
            acc[key] = total
        elif key in acc:
            del acc[key]

    def put_scaled_identity(self, row0: int, col0: int, size: int, value) -> None:
        f = GaussianRational.of(value)
        if not f:
            return
        for k in range(size):
            self.put_scalar(row0 + k, col0 + k, f)

    def build(self) -> SparseMatrix:
        return SparseMatrix.from_entries(
            self.dim, ((r + 1, c + 1, v) for (r, c), v in self.acc.items())
        )


# ---------------------------------------------------------------------------
# Assembled route, level 4 (52x52).


def _fill_level4(b: _MatrixBuilder, D: DenseVector, M: AntiHermitianA) -> None:
    dc_m = deriv_from_charts(M)
    b.put(OFF_D, OFF_D, ad_so8_block(D))
    b.put(OFF_D, OFF_M, dc_m, -1)
    b.put(OFF_M, OFF_D, _btrans(dc_m))
    b.put(OFF_M, OFF_M, act_slots_block(D))
    b.put(OFF_M, OFF_M, conj_mix_block(M), _HALF)


def ad_matrix_level_assembled_4(x: R4Element) -> SparseMatrix:
    b = _MatrixBuilder(DIM_R4)
    _fill_level4(b, x.D, x.M)
    return b.build()


# ---------------------------------------------------------------------------
# Assembled route, level 6 (78x78).


def _fill_level6(
    b: _MatrixBuilder, D: DenseVector, M: AntiHermitianA, T: JordanElement
) -> None:
    _fill_level4(b, D, M)
    dc_t = deriv_from_charts(T)
    b.put(OFF_D, OFF_T, dc_t)
    b.put(OFF_M, OFF_TAU, cross_coeff_tall(T), _HALF)
    b.put(OFF_M, OFF_T, diag_scale_block(T, "diff"), _HALF)
    b.put(OFF_M, OFF_T, conj_mix_block(T), _HALF)
    b.put(OFF_TAU, OFF_M, cross_coeff_top(T))
    b.put(OFF_TAU, OFF_T, cross_coeff_top(M), -1)
    b.put(OFF_T, OFF_D, _btrans(dc_t))
    b.put(OFF_T, OFF_M, diag_scale_block(T, "diff"), _HALF)
    b.put(OFF_T, OFF_M, conj_mix_block(T), -_HALF)
    b.put(OFF_T, OFF_TAU, cross_coeff_tall(M), _HALF)
    b.put(OFF_T, OFF_T, act_slots_block(D))
    b.put(OFF_T, OFF_T, conj_mix_block(M), -_HALF)


def ad_matrix_level_assembled_6(x: R6Element) -> SparseMatrix:
    b = _MatrixBuilder(DIM_R6)
    _fill_level6(b, x.D, x.M, x.T)
    return b.build()


# ---------------------------------------------------------------------------
# Assembled route, level 7 (133x133).


def _fill_level7(
    b: _MatrixBuilder,
    D: DenseVector,
    M: AntiHermitianA,
    T: JordanElement,
    A: JordanElement,
    B: JordanElement,
    rho: GaussianRational,
) -> None:
    _fill_level6(b, D, M, T)

    # Chart rows of the two Jordan columns.
    b.put(OFF_D, OFF_A, deriv_from_charts(B), 2)
    b.put(OFF_D, OFF_B, deriv_from_charts(A), 2)
    b.put(OFF_M, OFF_ALPHA, _btrans(cross_coeff_block(B)))
    b.put(OFF_M, OFF_A, diag_scale_block(B, "diff"))
    b.put(OFF_M, OFF_A, conj_mix_block(B))
    b.put(OFF_M, OFF_BETA, _btrans(cross_coeff_block(A)))
    b.put(OFF_M, OFF_B, diag_scale_block(A, "diff"))
    b.put(OFF_M, OFF_B, conj_mix_block(A))
    b.put(OFF_TAU, OFF_ALPHA, diag23_block(B), -_FOUR_THIRDS)
    b.put(OFF_TAU, OFF_ALPHA, offdiag_cyc_top(B), _TWO_THIRDS)
    b.put(OFF_TAU, OFF_A, coeff_rows_diag_top(B), _FOUR_THIRDS)
    b.put(OFF_TAU, OFF_A, cross_coeff_top(B, plus=True), -_TWO_THIRDS)
    b.put(OFF_TAU, OFF_BETA, diag23_block(A), _FOUR_THIRDS)
    b.put(OFF_TAU, OFF_BETA, offdiag_cyc_top(A), -_TWO_THIRDS)
    b.put(OFF_TAU, OFF_B, coeff_rows_diag_top(A), -_FOUR_THIRDS)
    b.put(OFF_TAU, OFF_B, cross_coeff_top(A, plus=True), _TWO_THIRDS)
    b.put(OFF_T, OFF_ALPHA, _btrans(cross_coeff_block(B, plus=True)), -1)
    b.put(OFF_T, OFF_A, diag_scale_block(B, "sum"), -1)
    b.put(OFF_T, OFF_A, conj_mix_block(B, plus=True), -1)
    b.put(OFF_T, OFF_BETA, _btrans(cross_coeff_block(A, plus=True)))
    b.put(OFF_T, OFF_B, diag_scale_block(A, "sum"))
    b.put(OFF_T, OFF_B, conj_mix_block(A, plus=True))

    # Jordan rows against the 78 chart columns.
    b.put(OFF_ALPHA, OFF_M, cross_coeff_block(A))
    b.put(OFF_ALPHA, OFF_TAU, diag32_block(A), -1)
    b.put(OFF_ALPHA, OFF_T, cross_coeff_block(A, plus=True), -1)
    b.put(OFF_A, OFF_D, _btrans(deriv_from_charts(A)))
    b.put(OFF_A, OFF_M, diag_scale_block(A, "diff"), _HALF)
    b.put(OFF_A, OFF_M, conj_mix_block(A), -_HALF)
    b.put(OFF_A, OFF_TAU, cross_coeff_tall(A, plus=True), -_HALF)
    b.put(OFF_A, OFF_T, diag_scale_block(A, "sum"), -_HALF)
    b.put(OFF_A, OFF_T, conj_mix_block(A, plus=True), -_HALF)
    b.put(OFF_BETA, OFF_M, cross_coeff_block(B))
    b.put(OFF_BETA, OFF_TAU, diag32_block(B))
    b.put(OFF_BETA, OFF_T, cross_coeff_block(B, plus=True))
    b.put(OFF_B, OFF_D, _btrans(deriv_from_charts(B)))
    b.put(OFF_B, OFF_M, diag_scale_block(B, "diff"), _HALF)
    b.put(OFF_B, OFF_M, conj_mix_block(B), -_HALF)
    b.put(OFF_B, OFF_TAU, cross_coeff_tall(B, plus=True), _HALF)
    b.put(OFF_B, OFF_T, diag_scale_block(B, "sum"), _HALF)
    b.put(OFF_B, OFF_T, conj_mix_block(B, plus=True), _HALF)

    # Jordan rows against the Jordan columns.
    b.put(OFF_ALPHA, OFF_A, cross_coeff_block(M), -1)
    b.put(OFF_A, OFF_ALPHA, _btrans(cross_coeff_block(M)), _HALF)
    b.put(OFF_A, OFF_A, act_slots_block(D))
    b.put(OFF_A, OFF_A, conj_mix_block(M), -_HALF)
    b.put(OFF_BETA, OFF_B, cross_coeff_block(M), -1)
    b.put(OFF_B, OFF_BETA, _btrans(cross_coeff_block(M)), _HALF)
    b.put(OFF_B, OFF_B, act_slots_block(D))
    b.put(OFF_B, OFF_B, conj_mix_block(M), -_HALF)

    b.put(OFF_ALPHA, OFF_ALPHA, diag3_block(T))
    b.put_scaled_identity(OFF_ALPHA, OFF_ALPHA, 3, rho * gr(_TWO_THIRDS))
    b.put(OFF_ALPHA, OFF_A, cross_coeff_block(T, plus=True))
    b.put(OFF_A, OFF_ALPHA, _btrans(cross_coeff_block(T, plus=True)), _HALF)
    b.put(OFF_A, OFF_A, diag_scale_block(T, "sum"), _HALF)
    b.put(OFF_A, OFF_A, conj_mix_block(T, plus=True), _HALF)
    b.put_scaled_identity(OFF_A, OFF_A, 24, rho * gr(_TWO_THIRDS))
    b.put(OFF_BETA, OFF_BETA, diag3_block(T), -1)
    b.put_scaled_identity(OFF_BETA, OFF_BETA, 3, -(rho * gr(_TWO_THIRDS)))
    b.put(OFF_BETA, OFF_B, cross_coeff_block(T, plus=True), -1)
    b.put(OFF_B, OFF_BETA, _btrans(cross_coeff_block(T, plus=True)), -_HALF)
    b.put(OFF_B, OFF_B, diag_scale_block(T, "sum"), -_HALF)
    b.put(OFF_B, OFF_B, conj_mix_block(T, plus=True), -_HALF)
    b.put_scaled_identity(OFF_B, OFF_B, 24, -(rho * gr(_TWO_THIRDS)))

    # Scalar column and row.
    b.put(OFF_ALPHA, OFF_RHO, diag_col_block(A), -_TWO_THIRDS)
    b.put(OFF_A, OFF_RHO, coeff_concat_col(A), -_TWO_THIRDS)
    b.put(OFF_BETA, OFF_RHO, diag_col_block(B), _TWO_THIRDS)
    b.put(OFF_B, OFF_RHO, coeff_concat_col(B), _TWO_THIRDS)
    b.put(OFF_RHO, OFF_ALPHA, _btrans(diag_col_block(B)), -1)
    b.put(OFF_RHO, OFF_A, coeff_concat_row(B), -2)
    b.put(OFF_RHO, OFF_BETA, _btrans(diag_col_block(A)))
    b.put(OFF_RHO, OFF_B, coeff_concat_row(A), 2)


def ad_matrix_level_assembled_7(x: R7Element) -> SparseMatrix:
    b = _MatrixBuilder(DIM_R7)
    _fill_level7(b, x.D, x.M, x.T, x.A, x.B, x.rho)
    return b.build()


# ---------------------------------------------------------------------------
# Assembled route, level 8 (248x248).


def _fill_pair_action(
    b: _MatrixBuilder,
    row_diag1: int,
    row_oct1: int,
    row_diag2: int,
    row_oct2: int,
    row_s1: int,
    row_s2: int,
    col_diag1: int,
    col_oct1: int,
    col_diag2: int,
    col_oct2: int,
    col_s1: int,
    col_s2: int,
    D: DenseVector,
    M: AntiHermitianA,
    T: JordanElement,
    A: JordanElement,
    B: JordanElement,
    rho: GaussianRational,
    shift: GaussianRational,
) -> None:
    """Action of (D, M, T, A, B, rho) plus a scalar shift on a 56-column pair.

    The first half transforms by the chart action, the second half by the
    sign-twisted action; the off-half blocks come from the Jordan columns.
    """
    third_rho = rho * gr(_THIRD)

    # first-half diagonal rows
    b.put(row_diag1, col_diag1, diag3_block(T))
    b.put_scaled_identity(row_diag1, col_diag1, 3, shift - third_rho)
    b.put(row_diag1, col_oct1, cross_coeff_block(M), -1)
    b.put(row_diag1, col_oct1, cross_coeff_block(T, plus=True))
    b.put(row_oct1, col_diag1, _btrans(cross_coeff_block(M)), _HALF)
    b.put(row_oct1, col_diag1, _btrans(cross_coeff_block(T, plus=True)), _HALF)
    b.put(row_oct1, col_oct1, act_slots_block(D))
    b.put(row_oct1, col_oct1, conj_mix_block(M), -_HALF)
    b.put(row_oct1, col_oct1, diag_scale_block(T, "sum"), _HALF)
    b.put(row_oct1, col_oct1, conj_mix_block(T, plus=True), _HALF)
    b.put_scaled_identity(row_oct1, col_oct1, 24, shift - third_rho)

    # second-half diagonal rows (twisted action)
    b.put(row_diag2, col_diag2, diag3_block(T), -1)
    b.put_scaled_identity(row_diag2, col_diag2, 3, shift + third_rho)
    b.put(row_diag2, col_oct2, cross_coeff_block(M), -1)
    b.put(row_diag2, col_oct2, cross_coeff_block(T, plus=True), -1)
    b.put(row_oct2, col_diag2, _btrans(cross_coeff_block(M)), _HALF)
    b.put(row_oct2, col_diag2, _btrans(cross_coeff_block(T, plus=True)), -_HALF)
    b.put(row_oct2, col_oct2, act_slots_block(D))
    b.put(row_oct2, col_oct2, conj_mix_block(M), -_HALF)
    b.put(row_oct2, col_oct2, diag_scale_block(T, "sum"), -_HALF)
    b.put(row_oct2, col_oct2, conj_mix_block(T, plus=True), -_HALF)
    b.put_scaled_identity(row_oct2, col_oct2, 24, shift + third_rho)

    # Jordan columns mixing the halves
    b.put(row_diag2, col_diag1, offdiag_sym_block(A))
    b.put(row_diag2, col_oct1, coeff_rows_diag(A), -2)
    b.put(row_oct2, col_diag1, _btrans(coeff_rows_diag(A)), -1)
    b.put(row_oct2, col_oct1, diag_scale_block(A, "each"), -1)
    b.put(row_oct2, col_oct1, conj_mix_block(A, plus=True))
    b.put(row_diag1, col_diag2, offdiag_sym_block(B))
    b.put(row_diag1, col_oct2, coeff_rows_diag(B), -2)
    b.put(row_oct1, col_diag2, _btrans(coeff_rows_diag(B)), -1)
    b.put(row_oct1, col_oct2, diag_scale_block(B, "each"), -1)
    b.put(row_oct1, col_oct2, conj_mix_block(B, plus=True))

    # scalar columns and rows
    b.put(row_diag2, col_s1, diag_col_block(B))
    b.put(row_oct2, col_s1, coeff_concat_col(B))
    b.put_scalar(row_s1, col_s1, rho + GaussianRational.of(shift))
    b.put(row_diag1, col_s2, diag_col_block(A))
    b.put(row_oct1, col_s2, coeff_concat_col(A))
    b.put_scalar(row_s2, col_s2, -rho + GaussianRational.of(shift))
    b.put(row_s2, col_oct1, coeff_concat_row(B), 2)
    b.put(row_s2, col_diag1, _btrans(diag_col_block(B)))
    b.put(row_s1, col_oct2, coeff_concat_row(A), 2)
    b.put(row_s1, col_diag2, _btrans(diag_col_block(A)))


def _fill_pair_rows_from_charts(
    b: _MatrixBuilder,
    row_diag1: int,
    row_oct1: int,
    row_diag2: int,
    row_oct2: int,
    row_s1: int,
    row_s2: int,
    X: JordanElement,
    Y: JordanElement,
    xi: GaussianRational,
    eta: GaussianRational,
) -> None:
    """Pair rows against the 133 chart columns, parameterized by the pair."""
    b.put(row_diag1, OFF_M, cross_coeff_block(X))
    b.put(row_diag1, OFF_TAU, diag32_block(X), -1)
    b.put(row_diag1, OFF_T, cross_coeff_block(X, plus=True), -1)
    b.put_scaled_identity(row_diag1, OFF_ALPHA, 3, -eta)
    b.put(row_diag1, OFF_BETA, offdiag_sym_block(Y), -1)
    b.put(row_diag1, OFF_B, coeff_rows_diag(Y), 2)
    b.put(row_diag1, OFF_RHO, diag_col_block(X), _THIRD)

    b.put(row_oct1, OFF_D, _btrans(deriv_from_charts(X)))
    b.put(row_oct1, OFF_M, diag_scale_block(X, "diff"), _HALF)
    b.put(row_oct1, OFF_M, conj_mix_block(X), -_HALF)
    b.put(row_oct1, OFF_TAU, cross_coeff_tall(X, plus=True), -_HALF)
    b.put(row_oct1, OFF_T, diag_scale_block(X, "sum"), -_HALF)
    b.put(row_oct1, OFF_T, conj_mix_block(X, plus=True), -_HALF)
    b.put_scaled_identity(row_oct1, OFF_A, 24, -eta)
    b.put(row_oct1, OFF_BETA, _btrans(coeff_rows_diag(Y)))
    b.put(row_oct1, OFF_B, diag_scale_block(Y, "each"))
    b.put(row_oct1, OFF_B, conj_mix_block(Y, plus=True), -1)
    b.put(row_oct1, OFF_RHO, coeff_concat_col(X), _THIRD)

    b.put(row_diag2, OFF_M, cross_coeff_block(Y))
    b.put(row_diag2, OFF_TAU, diag32_block(Y))
    b.put(row_diag2, OFF_T, cross_coeff_block(Y, plus=True))
    b.put(row_diag2, OFF_ALPHA, offdiag_sym_block(X), -1)
    b.put(row_diag2, OFF_A, coeff_rows_diag(X), 2)
    b.put_scaled_identity(row_diag2, OFF_BETA, 3, -xi)
    b.put(row_diag2, OFF_RHO, diag_col_block(Y), -_THIRD)

    b.put(row_oct2, OFF_D, _btrans(deriv_from_charts(Y)))
    b.put(row_oct2, OFF_M, diag_scale_block(Y, "diff"), _HALF)
    b.put(row_oct2, OFF_M, conj_mix_block(Y), -_HALF)
    b.put(row_oct2, OFF_TAU, cross_coeff_tall(Y, plus=True), _HALF)
    b.put(row_oct2, OFF_T, diag_scale_block(Y, "sum"), _HALF)
    b.put(row_oct2, OFF_T, conj_mix_block(Y, plus=True), _HALF)
    b.put(row_oct2, OFF_ALPHA, _btrans(coeff_rows_diag(X)))
    b.put(row_oct2, OFF_A, diag_scale_block(X, "each"))
    b.put(row_oct2, OFF_A, conj_mix_block(X, plus=True), -1)
    b.put_scaled_identity(row_oct2, OFF_B, 24, -xi)
    b.put(row_oct2, OFF_RHO, coeff_concat_col(Y), -_THIRD)

    b.put(row_s1, OFF_ALPHA, _btrans(diag_col_block(Y)), -1)
    b.put(row_s1, OFF_A, coeff_concat_row(Y), -2)
    b.put_scalar(row_s1, OFF_RHO, -xi)
    b.put(row_s2, OFF_BETA, _btrans(diag_col_block(X)), -1)
    b.put(row_s2, OFF_B, coeff_concat_row(X), -2)
    b.put_scalar(row_s2, OFF_RHO, eta)


def _fill_chart_rows_from_pair(
    b: _MatrixBuilder,
    col_diag1: int,
    col_oct1: int,
    col_diag2: int,
    col_oct2: int,
    col_s1: int,
    col_s2: int,
    Z: JordanElement,
    W: JordanElement,
    zeta: GaussianRational,
    omega: GaussianRational,
    sign: int,
) -> None:
    """Chart rows against one 56-column pair, parameterized by the other pair.

    ``sign`` is +1 when the parameters come from the second pair and -1
    when they come from the first.
    """
    s = sign
    b.put(OFF_D, col_oct1, deriv_from_charts(W), -s * _HALF)
    b.put(OFF_D, col_oct2, deriv_from_charts(Z), s * _HALF)

    b.put(OFF_M, col_diag1, _btrans(cross_coeff_block(W)), -s * _QUARTER)
    b.put(OFF_M, col_oct1, diag_scale_block(W, "diff"), -s * _QUARTER)
    b.put(OFF_M, col_oct1, conj_mix_block(W), -s * _QUARTER)
    b.put(OFF_M, col_diag2, _btrans(cross_coeff_block(Z)), s * _QUARTER)
    b.put(OFF_M, col_oct2, diag_scale_block(Z, "diff"), s * _QUARTER)
    b.put(OFF_M, col_oct2, conj_mix_block(Z), s * _QUARTER)

    b.put(OFF_TAU, col_diag1, diag23_block(W), s * _THIRD)
    b.put(OFF_TAU, col_diag1, offdiag_cyc_top(W), -s * _SIXTH)
    b.put(OFF_TAU, col_oct1, coeff_rows_diag_top(W), -s * _THIRD)
    b.put(OFF_TAU, col_oct1, cross_coeff_top(W, plus=True), s * _SIXTH)
    b.put(OFF_TAU, col_diag2, diag23_block(Z), s * _THIRD)
    b.put(OFF_TAU, col_diag2, offdiag_cyc_top(Z), -s * _SIXTH)
    b.put(OFF_TAU, col_oct2, coeff_rows_diag_top(Z), -s * _THIRD)
    b.put(OFF_TAU, col_oct2, cross_coeff_top(Z, plus=True), s * _SIXTH)

    b.put(OFF_T, col_diag1, _btrans(cross_coeff_block(W, plus=True)), s * _QUARTER)
    b.put(OFF_T, col_oct1, diag_scale_block(W, "sum"), s * _QUARTER)
    b.put(OFF_T, col_oct1, conj_mix_block(W, plus=True), s * _QUARTER)
    b.put(OFF_T, col_diag2, _btrans(cross_coeff_block(Z, plus=True)), s * _QUARTER)
    b.put(OFF_T, col_oct2, diag_scale_block(Z, "sum"), s * _QUARTER)
    b.put(OFF_T, col_oct2, conj_mix_block(Z, plus=True), s * _QUARTER)

    b.put_scaled_identity(
        OFF_ALPHA, col_diag1, 3, (-zeta if s > 0 else zeta) * gr(_QUARTER)
    )
    b.put(OFF_ALPHA, col_diag2, offdiag_sym_block(W), s * _QUARTER)
    b.put(OFF_ALPHA, col_oct2, coeff_rows_diag(W), -s * _HALF)
    b.put(OFF_ALPHA, col_s1, diag_col_block(Z), -s * _QUARTER)

    b.put_scaled_identity(OFF_A, col_oct1, 24, (-zeta if s > 0 else zeta) * gr(_QUARTER))
    b.put(OFF_A, col_diag2, _btrans(coeff_rows_diag(W)), -s * _QUARTER)
    b.put(OFF_A, col_oct2, diag_scale_block(W, "each"), -s * _QUARTER)
    b.put(OFF_A, col_oct2, conj_mix_block(W, plus=True), s * _QUARTER)
    b.put(OFF_A, col_s1, coeff_concat_col(Z), -s * _QUARTER)

    b.put(OFF_BETA, col_diag1, offdiag_sym_block(Z), -s * _QUARTER)
    b.put(OFF_BETA, col_oct1, coeff_rows_diag(Z), s * _HALF)
    b.put_scaled_identity(OFF_BETA, col_diag2, 3, (omega if s > 0 else -omega) * gr(_QUARTER))
    b.put(OFF_BETA, col_s2, diag_col_block(W), s * _QUARTER)

    b.put(OFF_B, col_diag1, _btrans(coeff_rows_diag(Z)), s * _QUARTER)
    b.put(OFF_B, col_oct1, diag_scale_block(Z, "each"), s * _QUARTER)
    b.put(OFF_B, col_oct1, conj_mix_block(Z, plus=True), -s * _QUARTER)
    b.put_scaled_identity(OFF_B, col_oct2, 24, (omega if s > 0 else -omega) * gr(_QUARTER))
    b.put(OFF_B, col_s2, coeff_concat_col(W), s * _QUARTER)

    b.put(OFF_RHO, col_diag1, _btrans(diag_col_block(W)), -s * _EIGHTH)
    b.put(OFF_RHO, col_oct1, coeff_concat_row(W), -s * _QUARTER)
    b.put(OFF_RHO, col_diag2, _btrans(diag_col_block(Z)), -s * _EIGHTH)
    b.put(OFF_RHO, col_oct2, coeff_concat_row(Z), -s * _QUARTER)
    b.put_scalar(OFF_RHO, col_s1, omega * gr(s * _THREE_EIGHTHS))
    b.put_scalar(OFF_RHO, col_s2, zeta * gr(s * _THREE_EIGHTHS))


def ad_matrix_assembled(x: R8Element) -> SparseMatrix:
    """248x248 block assembly of ad(x)."""
    b = _MatrixBuilder(DIM_R8)
    phi = x.Phi
    _fill_level7(b, phi.D, phi.M, phi.T, phi.A, phi.B, phi.rho)

    X, Yj, xi, eta = x.P.X, x.P.Y, x.P.xi, x.P.eta
    Z, W, zeta, omega = x.Q.X, x.Q.Y, x.Q.xi, x.Q.eta

    # chart rows against pair columns
    _fill_chart_rows_from_pair(
        b, OFF_CHI, OFF_X, OFF_GAMMA, OFF_Y, OFF_XI, OFF_ETA, Z, W, zeta, omega, +1
    )
    _fill_chart_rows_from_pair(
        b, OFF_MU, OFF_Z, OFF_PSI, OFF_W, OFF_ZETA, OFF_OMEGA, X, Yj, xi, eta, -1
    )

    # pair rows against chart columns
    _fill_pair_rows_from_charts(
        b, OFF_CHI, OFF_X, OFF_GAMMA, OFF_Y, OFF_XI, OFF_ETA, X, Yj, xi, eta
    )
    _fill_pair_rows_from_charts(
        b, OFF_MU, OFF_Z, OFF_PSI, OFF_W, OFF_ZETA, OFF_OMEGA, Z, W, zeta, omega
    )

    # pair rows against their own pair columns
    _fill_pair_action(
        b,
        OFF_CHI, OFF_X, OFF_GAMMA, OFF_Y, OFF_XI, OFF_ETA,
        OFF_CHI, OFF_X, OFF_GAMMA, OFF_Y, OFF_XI, OFF_ETA,
        phi.D, phi.M, phi.T, phi.A, phi.B, phi.rho, x.r,
    )
    _fill_pair_action(
        b,
        OFF_MU, OFF_Z, OFF_PSI, OFF_W, OFF_ZETA, OFF_OMEGA,
        OFF_MU, OFF_Z, OFF_PSI, OFF_W, OFF_ZETA, OFF_OMEGA,
        phi.D, phi.M, phi.T, phi.A, phi.B, phi.rho, -x.r,
    )

    # cross pair blocks and the three scalars
    b.put_scaled_identity(OFF_CHI, OFF_MU, 56, x.s)
    b.put_scaled_identity(OFF_MU, OFF_CHI, 56, x.u)

    # Scalar columns: the pair vectors (diag; coeffs; diag; coeffs; s1; s2)
    # of P and Q feed the r, s, u columns.
    pair_p = (
        (0, diag_col_block(X)),
        (3, coeff_concat_col(X)),
        (27, diag_col_block(Yj)),
        (30, coeff_concat_col(Yj)),
    )
    pair_q = (
        (0, diag_col_block(Z)),
        (3, coeff_concat_col(Z)),
        (27, diag_col_block(W)),
        (30, coeff_concat_col(W)),
    )
    for rel, blk in pair_p:
        b.put(OFF_CHI + rel, OFF_R, blk, -1)
        b.put(OFF_MU + rel, OFF_U, blk, -1)
    b.put_scalar(OFF_XI, OFF_R, -xi)
    b.put_scalar(OFF_ETA, OFF_R, -eta)
    b.put_scalar(OFF_ZETA, OFF_U, -xi)
    b.put_scalar(OFF_OMEGA, OFF_U, -eta)
    for rel, blk in pair_q:
        b.put(OFF_CHI + rel, OFF_S, blk, -1)
        b.put(OFF_MU + rel, OFF_R, blk, 1)
    b.put_scalar(OFF_XI, OFF_S, -zeta)
    b.put_scalar(OFF_ETA, OFF_S, -omega)
    b.put_scalar(OFF_ZETA, OFF_R, zeta)
    b.put_scalar(OFF_OMEGA, OFF_R, omega)

    # scalar rows
    b.put(OFF_R, OFF_CHI, _btrans(diag_col_block(W)), _EIGHTH)
    b.put(OFF_R, OFF_X, coeff_concat_row(W), _QUARTER)
    b.put(OFF_R, OFF_GAMMA, _btrans(diag_col_block(Z)), -_EIGHTH)
    b.put(OFF_R, OFF_Y, coeff_concat_row(Z), -_QUARTER)
    b.put_scalar(OFF_R, OFF_XI, omega * gr(_EIGHTH))
    b.put_scalar(OFF_R, OFF_ETA, -(zeta * gr(_EIGHTH)))
    b.put(OFF_R, OFF_MU, _btrans(diag_col_block(Yj)), _EIGHTH)
    b.put(OFF_R, OFF_Z, coeff_concat_row(Yj), _QUARTER)
    b.put(OFF_R, OFF_PSI, _btrans(diag_col_block(X)), -_EIGHTH)
    b.put(OFF_R, OFF_W, coeff_concat_row(X), -_QUARTER)
    b.put_scalar(OFF_R, OFF_ZETA, eta * gr(_EIGHTH))
    b.put_scalar(OFF_R, OFF_OMEGA, -(xi * gr(_EIGHTH)))
    b.put_scalar(OFF_R, OFF_S, -x.u)
    b.put_scalar(OFF_R, OFF_U, x.s)

    b.put(OFF_S, OFF_CHI, _btrans(diag_col_block(Yj)), -_QUARTER)
    b.put(OFF_S, OFF_X, coeff_concat_row(Yj), -_HALF)
    b.put(OFF_S, OFF_GAMMA, _btrans(diag_col_block(X)), _QUARTER)
    b.put(OFF_S, OFF_Y, coeff_concat_row(X), _HALF)
    b.put_scalar(OFF_S, OFF_XI, -(eta * gr(_QUARTER)))
    b.put_scalar(OFF_S, OFF_ETA, xi * gr(_QUARTER))
    b.put_scalar(OFF_S, OFF_R, -(x.s + x.s))
    b.put_scalar(OFF_S, OFF_S, x.r + x.r)

    b.put(OFF_U, OFF_MU, _btrans(diag_col_block(W)), _QUARTER)
    b.put(OFF_U, OFF_Z, coeff_concat_row(W), _HALF)
    b.put(OFF_U, OFF_PSI, _btrans(diag_col_block(Z)), -_QUARTER)
    b.put(OFF_U, OFF_W, coeff_concat_row(Z), -_HALF)
    b.put_scalar(OFF_U, OFF_ZETA, omega * gr(_QUARTER))
    b.put_scalar(OFF_U, OFF_OMEGA, -(zeta * gr(_QUARTER)))
    b.put_scalar(OFF_U, OFF_R, x.u + x.u)
    b.put_scalar(OFF_U, OFF_U, -(x.r + x.r))

    return b.build()


def ad_matrix_level_assembled(
    x: R4Element | R6Element | R7Element | R8Element, level: int
) -> SparseMatrix:
    """Assembled ad at the requested level."""
    if level == 4 and isinstance(x, R4Element):
        return ad_matrix_level_assembled_4(x)
    if level == 6 and isinstance(x, R6Element):
        return ad_matrix_level_assembled_6(x)
    if level == 7 and isinstance(x, R7Element):
        return ad_matrix_level_assembled_7(x)
    if level == 8 and isinstance(x, R8Element):
        return ad_matrix_assembled(x)
    raise ValueError(f"level {level} does not match element type {type(x).__name__}")


# ---------------------------------------------------------------------------
# Column route: the defining property, one bracket per coordinate unit.

_LEVEL_BRACKETS: dict[int, Callable] = {
    4: bracket4,
    6: bracket6,
    7: bracket7,
    8: bracket8,
}


def _columns_matrix(dim: int, columns: Iterable[DenseVector]) -> SparseMatrix:
    entries = []
    for c, vec in enumerate(columns):
        for r, v in vec.support().items():
            entries.append((r + 1, c + 1, v))
    return SparseMatrix.from_entries(dim, entries)


def ad_matrix(x: R8Element) -> SparseMatrix:
    """248x248 matrix with columns ad(x) applied to each coordinate unit."""
    return _columns_matrix(
        DIM_R8,
        (
            flatten(bracket8(x, unflatten(DenseVector.unit(DIM_R8, k), 8)))
            for k in range(DIM_R8)
        ),
    )


def _embed_r8(x: R4Element | R6Element | R7Element | R8Element) -> R8Element:
    if isinstance(x, R4Element):
        x = x.as_r6()
    if isinstance(x, R6Element):
        x = x.as_r7()
    if isinstance(x, R7Element):
        x = x.as_r8()
    if not isinstance(x, R8Element):
        raise TypeError(f"cannot embed a {type(x).__name__}")
    return x


def ad_matrix_level(
    x: R4Element | R6Element | R7Element | R8Element, level: int
) -> SparseMatrix:
    """Matrix of ad(x) on the coordinates of the given level.

    The element must not carry components outside the level; otherwise a
    ValueError is raised.
    """
    if level not in (4, 6, 7, 8):
        raise ValueError(f"unknown level {level}; expected one of 4, 6, 7, 8")
    dim = LEVEL_DIMS[level]
    full = flatten(_embed_r8(x))
    for idx in full.support():
        if idx >= dim:
            raise ValueError(
                f"element has a nonzero coordinate at position {idx}, "
                f"outside the {dim} coordinates of level {level}"
            )
    if level == 8:
        return ad_matrix(_embed_r8(x))
    elem = unflatten(DenseVector(dim, full.entries[:dim]), level)
    bracket = _LEVEL_BRACKETS[level]
    return _columns_matrix(
        dim,
        (
            flatten(bracket(elem, unflatten(DenseVector.unit(dim, k), level)))
            for k in range(dim)
        ),
    )


def clip(matrix: SparseMatrix, level: int) -> SparseMatrix:
    """Principal submatrix on the coordinates of the given level."""
    if level not in LEVEL_DIMS:
        raise ValueError(f"unknown level {level}")
    return matrix.principal_submatrix(LEVEL_DIMS[level])


# ---------------------------------------------------------------------------
# Labelled coordinate bases.


@dataclass(frozen=True, slots=True)
class BasisLabel:
    """A named coordinate unit: family, printable name, flat position."""

    family: str
    name: str
    position: int


def _build_labels() -> tuple[BasisLabel, ...]:
    labels: list[BasisLabel] = []

    def add(family: str, name: str) -> None:
        labels.append(BasisLabel(family, name, len(labels)))

    for i, j in PAIRS:
        add("d", f"Ud_{i}{j}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("m", f"Um_{slot}{j}")
    for k in (1, 2):
        add("tau", f"Utau_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("t", f"Ut_{slot}{j}")
    for k in (1, 2, 3):
        add("alpha", f"Ualpha_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("a", f"Ua_{slot}{j}")
    for k in (1, 2, 3):
        add("beta", f"Ubeta_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("b", f"Ub_{slot}{j}")
    add("rho", "Urho_1")
    for k in (1, 2, 3):
        add("chi", f"Uchi_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("x", f"Ux_{slot}{j}")
    for k in (1, 2, 3):
        add("gamma", f"Ugamma_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("y", f"Uy_{slot}{j}")
    add("xi", "Uxi_1")
    add("eta", "Ueta_1")
    for k in (1, 2, 3):
        add("mu", f"Umu_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("z", f"Uz_{slot}{j}")
    for k in (1, 2, 3):
        add("psi", f"Upsi_{k}")
    for slot in (1, 2, 3):
        for j in range(8):
            add("w", f"Uw_{slot}{j}")
    add("zeta", "Uzeta_1")
    add("omega", "Uomega_1")
    add("r", "Ur_1")
    add("s", "Us_1")
    add("u", "Uu_1")
    assert len(labels) == DIM_R8
    return tuple(labels)


LABELS: tuple[BasisLabel, ...] = _build_labels()
LABEL_BY_NAME: dict[str, BasisLabel] = {lab.name: lab for lab in LABELS}

_FAMILY_LEVEL = {
    "d": 4,
    "m": 4,
    "tau": 6,
    "t": 6,
    "alpha": 7,
    "a": 7,
    "beta": 7,
    "b": 7,
    "rho": 7,
}


def _family_level(family: str) -> int:
    return _FAMILY_LEVEL.get(family, 8)


def unit_element(position: int) -> R8Element:
    """Coordinate unit at a flat position, as a full element."""
    return unflatten(DenseVector.unit(DIM_R8, position), 8)


def basis_element(name: str) -> R8Element:
    """Coordinate unit by printable name, e.g. ``Ud_01`` or ``Urho_1``."""
    label = LABEL_BY_NAME.get(name)
    if label is None:
        raise KeyError(f"unknown basis element {name!r}")
    return unit_element(label.position)


# ---------------------------------------------------------------------------
# The 14 generators of the rank-2 subalgebra of the derivation block.

_G2_SPANS: dict[str, tuple[tuple[int, tuple[int, int]], ...]] = {
    "S1": ((2, (1, 2)), (-1, (4, 7)), (-1, (5, 6))),
    "S2": ((2, (1, 3)), (-1, (4, 6)), (1, (5, 7))),
    "S3": ((2, (1, 4)), (1, (2, 7)), (1, (3, 6))),
    "S4": ((2, (1, 5)), (1, (2, 6)), (-1, (3, 7))),
    "S5": ((2, (1, 6)), (-1, (2, 5)), (-1, (3, 4))),
    "S6": ((2, (1, 7)), (-1, (2, 4)), (1, (3, 5))),
    "L1": ((-1, (2, 3)), (1, (4, 5))),
    "L2": ((1, (2, 4)), (1, (3, 5))),
    "L3": ((-1, (2, 5)), (1, (3, 4))),
    "L4": ((1, (2, 6)), (1, (3, 7))),
    "L5": ((-1, (2, 7)), (1, (3, 6))),
    "L6": ((-1, (4, 5)), (1, (6, 7))),
    "L7": ((1, (4, 6)), (1, (5, 7))),
    "L8": ((-1, (4, 7)), (1, (5, 6))),
}

G2_GENERATOR_ORDER = ("S1", "S2", "S3", "S4", "S5", "S6",
                      "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8")


def g2_generator_names() -> tuple[str, ...]:
    return G2_GENERATOR_ORDER


def g2_generator_coords(name: str) -> DenseVector:
    """Pair coordinates (28) of one S/L generator."""
    try:
        span = _G2_SPANS[name]
    except KeyError:
        raise KeyError(f"unknown generator {name!r}") from None
    values = [ZERO] * DIM_SO8
    for coeff, pair in span:
        values[PAIR_INDEX[pair]] = gr(coeff)
    return DenseVector.from_values(values)


def g2_generator(name: str) -> R4Element:
    """One S/L generator as a level-4 element with an empty chart part."""
    return R4Element.of(D=g2_generator_coords(name))


# ---------------------------------------------------------------------------
# Basis sets per level.


@dataclass(frozen=True, slots=True)
class BasisSet:
    """An ordered, named, independence-checked basis at one level."""

    level: int
    ambient_dim: int
    names: tuple[str, ...]
    vectors: tuple[DenseVector, ...]

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def build_basis(level: int) -> BasisSet:
    """Construct the coordinate basis of a level and verify its rank."""
    if level not in LEVEL_DIMS:
        raise ValueError(f"unknown level {level}; expected one of 2, 4, 6, 7, 8")
    dim = LEVEL_DIMS[level]
    if level == 2:
        names = G2_GENERATOR_ORDER
        vectors = tuple(g2_generator_coords(n) for n in names)
    else:
        names = tuple(
            lab.name for lab in LABELS[:dim] if _family_level(lab.family) <= level
        )
        vectors = tuple(DenseVector.unit(dim, k) for k in range(dim))
        assert len(names) == dim
    rank = ColumnEchelon([v.support() for v in vectors]).rank
    if rank != len(vectors):
        raise ArithmeticError(
            f"basis for level {level} has rank {rank}, expected {len(vectors)}"
        )
    return BasisSet(level, dim, tuple(names), vectors)
