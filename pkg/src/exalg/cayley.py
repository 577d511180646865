"""The division Cayley algebra: octonions, derivations, triality.

Octonions are 8-vectors over the bases e0..e7 with the standard Fano
multiplication (21 basis triples).  The derivations G_ij and F_ij, the
triality automorphisms kappa, pi, nu of so(8), and the index/sign
tables used by the bracket rules all live here.

so(8) elements are handled in two interchangeable forms: as
antisymmetric 8x8 matrices, and as 28-coordinate vectors over the
ordered pair basis d01, d02, ..., d07, d12, ..., d67.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from exalg.exact import (
    ZERO,
    ONE,
    DenseVector,
    GaussianRational,
    ScalarLike,
    SparseMatrix,
    gr,
)

# The 21 multiplication triples: each (a, b, c) means e_a * e_b = e_c,
# cyclically.  Together with e0 = 1, e_i^2 = -1 and antisymmetry they
# determine the whole product.
_TRIPLES = (
    (1, 2, 3), (2, 3, 1), (3, 1, 2),
    (1, 4, 5), (4, 5, 1), (5, 1, 4),
    (3, 4, 7), (4, 7, 3), (7, 3, 4),
    (3, 5, 6), (5, 6, 3), (6, 3, 5),
    (6, 4, 2), (4, 2, 6), (2, 6, 4),
    (6, 7, 1), (7, 1, 6), (1, 6, 7),
    (2, 5, 7), (5, 7, 2), (7, 2, 5),
)


def _build_basis_products() -> tuple[tuple[tuple[int, int], ...], ...]:
    table: list[list[tuple[int, int] | None]] = [[None] * 8 for _ in range(8)]
    for j in range(8):
        table[0][j] = (j, 1)
        table[j][0] = (j, 1)
    for i in range(1, 8):
        table[i][i] = (0, -1)
    for a, b, c in _TRIPLES:
        table[a][b] = (c, 1)
        table[b][a] = (c, -1)
    for row in table:
        assert all(cell is not None for cell in row)
    return tuple(tuple(row) for row in table)  # type: ignore[arg-type]


#: BASIS_PRODUCTS[i][j] = (k, sign) with e_i * e_j = sign * e_k.
BASIS_PRODUCTS = _build_basis_products()

#: The 28 index pairs (i, j), i < j, in the coordinate order
#: d01, d02, ..., d07, d12, ..., d67.
PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(8) for j in range(i + 1, 8)
)

#: PAIR_INDEX[(i, j)] = 0-based position of the pair in PAIRS.
PAIR_INDEX = {pair: k for k, pair in enumerate(PAIRS)}

DIM_SO8 = 28


@dataclass(slots=True, unsafe_hash=True)
class Octonion:
    """Exact octonion with coordinates over e0..e7."""

    coeffs: tuple[GaussianRational, ...]

    @staticmethod
    def from_values(values: Iterable[ScalarLike]) -> "Octonion":
        coeffs = tuple(GaussianRational.of(v) for v in values)
        if len(coeffs) != 8:
            raise ValueError(f"octonion needs 8 coordinates, got {len(coeffs)}")
        return Octonion(coeffs)

    @staticmethod
    def zero() -> "Octonion":
        return _OCT_ZERO

    @staticmethod
    def basis(k: int) -> "Octonion":
        return _OCT_BASIS[k]

    @staticmethod
    def scalar(value: ScalarLike) -> "Octonion":
        v = GaussianRational.of(value)
        return Octonion((v,) + (ZERO,) * 7)

    def __add__(self, other: "Octonion") -> "Octonion":
        # the zero singleton short-circuits the sparse flows everywhere
        if self is _OCT_ZERO:
            return other
        if other is _OCT_ZERO:
            return self
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        if other is _OCT_ZERO:
            return self
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        if self is _OCT_ZERO:
            return self
        return Octonion(tuple(-a for a in self.coeffs))

    def scale(self, factor: ScalarLike) -> "Octonion":
        if self is _OCT_ZERO:
            return self
        f = GaussianRational.of(factor)
        if not (f.re.numerator or f.im.numerator):
            return _OCT_ZERO
        return Octonion(tuple(f * a for a in self.coeffs))

    def __mul__(self, other: "Octonion") -> "Octonion":
        if self is _OCT_ZERO or other is _OCT_ZERO:
            return _OCT_ZERO
        out = [ZERO] * 8
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = BASIS_PRODUCTS[i]
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k, sign = row[j]
                term = a * b
                out[k] = out[k] + (term if sign > 0 else -term)
        return Octonion(tuple(out))

    def conj(self) -> "Octonion":
        if self is _OCT_ZERO:
            return self
        c = self.coeffs
        return Octonion((c[0],) + tuple(-v for v in c[1:]))

    def inner(self, other: "Octonion") -> GaussianRational:
        if self is _OCT_ZERO or other is _OCT_ZERO:
            return ZERO
        total = ZERO
        for a, b in zip(self.coeffs, other.coeffs):
            if a and b:
                total = total + a * b
        return total

    def real_part(self) -> GaussianRational:
        return self.coeffs[0]

    def norm_sq(self) -> GaussianRational:
        return self.inner(self)

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.coeffs)


_OCT_ZERO = Octonion((ZERO,) * 8)
_OCT_BASIS = tuple(
    Octonion(tuple(ONE if i == k else ZERO for i in range(8))) for k in range(8)
)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return x * y


def oct_conj(x: Octonion) -> Octonion:
    return x.conj()


def oct_inner(x: Octonion, y: Octonion) -> GaussianRational:
    return x.inner(y)


def oct_real(x: Octonion) -> GaussianRational:
    return x.real_part()


@dataclass(frozen=True, slots=True)
class DerivationLabel:
    """G_ij or F_ij acting on octonions."""

    kind: str  # "G" or "F"
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in ("G", "F"):
            raise ValueError(f"unknown derivation kind {self.kind!r}")
        if not (0 <= self.i <= 7 and 0 <= self.j <= 7 and self.i != self.j):
            raise ValueError(f"bad index pair ({self.i},{self.j})")


def apply_derivation(label: DerivationLabel, x: Octonion) -> Octonion:
    if label.kind == "G":
        ei = Octonion.basis(label.i)
        ej = Octonion.basis(label.j)
        return ei.scale(ej.inner(x)) - ej.scale(ei.inner(x))
    # F_ij x = (1/2) e_i (conj(e_j) x)
    ei = Octonion.basis(label.i)
    ej = Octonion.basis(label.j)
    return (ei * (ej.conj() * x)).scale(Q(1, 2))


def derivation_matrix(label: DerivationLabel) -> SparseMatrix:
    """8x8 matrix of the derivation in the e0..e7 basis (1-based)."""
    entries = []
    for col in range(8):
        image = apply_derivation(label, Octonion.basis(col))
        for row, v in enumerate(image.coeffs):
            if v:
                entries.append((row + 1, col + 1, v))
    return SparseMatrix.from_entries(8, entries)


def so8_coords(matrix: SparseMatrix) -> DenseVector:
    """28-coordinates of an antisymmetric 8x8 matrix over the pair basis.

    The coefficient of the (i, j) pair is the matrix entry at row i+1,
    column j+1; antisymmetry is checked.
    """
    if matrix.dim != 8:
        raise ValueError(f"expected an 8x8 matrix, got dim {matrix.dim}")
    lookup = matrix.entry_map()
    out = [ZERO] * DIM_SO8
    for k, (i, j) in enumerate(PAIRS):
        upper = lookup.get((i + 1, j + 1), ZERO)
        lower = lookup.get((j + 1, i + 1), ZERO)
        if upper + lower:
            raise ValueError(f"matrix is not antisymmetric at pair ({i},{j})")
        out[k] = upper
    for (r, c), v in lookup.items():
        if r == c and v:
            raise ValueError("matrix has a nonzero diagonal entry")
    return DenseVector(DIM_SO8, tuple(out))


def so8_matrix(coords: DenseVector) -> SparseMatrix:
    """Antisymmetric 8x8 matrix from 28 pair coordinates."""
    if coords.dim != DIM_SO8:
        raise ValueError(f"expected 28 coordinates, got {coords.dim}")
    entries = []
    for k, (i, j) in enumerate(PAIRS):
        v = coords[k]
        if v:
            entries.append((i + 1, j + 1, v))
            entries.append((j + 1, i + 1, -v))
    return SparseMatrix.from_entries(8, entries)


def apply_so8(coords: DenseVector, x: Octonion) -> Octonion:
    """Apply an so(8) element given by pair coordinates to an octonion."""
    out = [ZERO] * 8
    for k, (i, j) in enumerate(PAIRS):
        c = coords[k]
        if not c:
            continue
        # G_ij: e_j -> e_i, e_i -> -e_j
        xi, xj = x.coeffs[i], x.coeffs[j]
        if xj:
            out[i] = out[i] + c * xj
        if xi:
            out[j] = out[j] - c * xi
    return Octonion(tuple(out))


def _build_so8_pair_brackets() -> tuple[tuple[tuple[int, int] | None, ...], ...]:
    # [G_ij, G_kl] = d_jk G_il + d_il G_jk - d_jl G_ik - d_ik G_jl.
    # Distinct pairs share at most one index, so at most one term
    # survives; equal pairs cancel to zero.
    table: list[tuple[tuple[int, int] | None, ...]] = []
    for i, j in PAIRS:
        row: list[tuple[int, int] | None] = []
        for k, l in PAIRS:
            candidates = []
            if j == k:
                candidates.append((i, l, 1))
            if i == l:
                candidates.append((j, k, 1))
            if j == l:
                candidates.append((i, k, -1))
            if i == k:
                candidates.append((j, l, -1))
            cell = None
            for a, b, sign in candidates:
                if a == b:
                    continue
                if a > b:
                    a, b, sign = b, a, -sign
                assert cell is None
                cell = (PAIR_INDEX[(a, b)], sign)
            row.append(cell)
        table.append(tuple(row))
    return tuple(table)


_PAIR_BRACKETS = _build_so8_pair_brackets()


def so8_bracket(u: DenseVector, v: DenseVector) -> DenseVector:
    """Commutator of two so(8) elements in pair coordinates."""
    if u.dim != DIM_SO8 or v.dim != DIM_SO8:
        raise ValueError(f"expected 28 coordinates, got {u.dim} and {v.dim}")
    out = [ZERO] * DIM_SO8
    for p, cu in enumerate(u.entries):
        if not cu:
            continue
        row = _PAIR_BRACKETS[p]
        for q, cv in enumerate(v.entries):
            if not cv:
                continue
            cell = row[q]
            if cell is None:
                continue
            k, sign = cell
            term = cu * cv
            out[k] = out[k] + (term if sign > 0 else -term)
    return DenseVector(DIM_SO8, tuple(out))


def _build_kappa() -> SparseMatrix:
    # kappa(G_ij) = -G_ij when i = 0, +G_ij when both indices are nonzero
    entries = []
    for k, (i, j) in enumerate(PAIRS):
        entries.append((k + 1, k + 1, -1 if i == 0 else 1))
    return SparseMatrix.from_entries(DIM_SO8, entries)


def _build_pi() -> SparseMatrix:
    # pi sends G_ij to F_ij; columns are the pair coordinates of F_ij
    entries = []
    for k, (i, j) in enumerate(PAIRS):
        coords = so8_coords(derivation_matrix(DerivationLabel("F", i, j)))
        for row, v in enumerate(coords):
            if v:
                entries.append((row + 1, k + 1, v))
    return SparseMatrix.from_entries(DIM_SO8, entries)


KAPPA: SparseMatrix = _build_kappa()
PI: SparseMatrix = _build_pi()
NU: SparseMatrix = PI @ KAPPA
NU2: SparseMatrix = NU @ NU

_TRIALITY = {"kappa": KAPPA, "pi": PI, "nu": NU, "nu2": NU2}


def triality_matrix(which: str) -> SparseMatrix:
    try:
        return _TRIALITY[which]
    except KeyError:
        raise ValueError(f"unknown triality map {which!r}") from None


def apply_triality(which: str, coords: DenseVector) -> DenseVector:
    return triality_matrix(which).apply(coords)


def _derive_mul_tables() -> tuple[tuple, tuple, tuple]:
    ca = []
    sn = []
    nu = []
    for i in range(8):
        ca_row = []
        sn_row = []
        nu_row = []
        for j in range(8):
            k, sign = BASIS_PRODUCTS[i][j]
            ca_row.append(k)
            # Sn gives the sign of conj(e_i * e_j) relative to e_Ca
            conj_sign = sign if k == 0 else -sign
            sn_row.append(conj_sign)
            if i == j:
                nu_row.append(0)
            else:
                pair = (i, j) if i < j else (j, i)
                nu_row.append(PAIR_INDEX[pair] + 1)
        ca.append(tuple(ca_row))
        sn.append(tuple(sn_row))
        nu.append(tuple(nu_row))
    return tuple(ca), tuple(sn), tuple(nu)


@dataclass(frozen=True, slots=True)
class MulTables:
    """Index and sign tables driving the closed bracket rules.

    Ca(i+1, j+1) is the basis index of e_i * e_j; Sn(i+1, j+1) is the
    sign of conj(e_i * e_j) relative to e_Ca; Nu(i+1, j+1) numbers the
    unordered pair {i, j} in the d01..d67 coordinate order (0 on the
    diagonal).  All three are stored 0-based here; use the accessors
    for the 1-based convention of the bracket rules.
    """

    Ca: tuple[tuple[int, ...], ...]
    Sn: tuple[tuple[int, ...], ...]
    Nu: tuple[tuple[int, ...], ...]

    def ca(self, i1: int, j1: int) -> int:
        return self.Ca[i1 - 1][j1 - 1]

    def sn(self, i1: int, j1: int) -> int:
        return self.Sn[i1 - 1][j1 - 1]

    def nu(self, i1: int, j1: int) -> int:
        return self.Nu[i1 - 1][j1 - 1]


_CA, _SN, _NU = _derive_mul_tables()
TABLES = MulTables(_CA, _SN, _NU)


def mul_tables() -> MulTables:
    return TABLES
