"""Exact scalars, vectors, sparse matrices and linear algebra over Q(i).

Every computation in this package runs over the field of Gaussian
rationals: complex numbers whose real and imaginary parts are
arbitrary-precision fractions.  Nothing here rounds, ever.

Conventions:
  * SparseMatrix triplets are 1-based, sorted by (row, col), zero-free.
  * DenseVector entries and the dict-shaped sparse columns used by the
    elimination kernel are 0-based.
  * Elimination picks the first nonzero entry of the reduced column as
    pivot (lowest row index), which makes every result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Iterator, Mapping, Sequence, Union

ScalarLike = Union["GaussianRational", int, Q]

_QZERO = Q(0)
_QONE = Q(1)


class GaussianRational:
    """Exact complex scalar re + im*i over the rationals.

    Hand-rolled rather than a dataclass: these objects are created and
    combined billions of times, so construction and the all-zero fast
    paths below are the performance floor of the whole package.
    Instances are immutable by convention.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Q = _QZERO, im: Q = _QZERO) -> None:
        self.re = re
        self.im = im

    @staticmethod
    def of(value: ScalarLike) -> "GaussianRational":
        if type(value) is GaussianRational:
            return value
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Q)):
            return GaussianRational(Q(value), _QZERO)
        raise TypeError(f"cannot interpret {value!r} as an exact scalar")

    def __eq__(self, other: object) -> bool:
        if type(other) is GaussianRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Q)):
            return not self.im.numerator and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational(re={self.re!r}, im={self.im!r})"

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        if type(other) is not GaussianRational:
            other = GaussianRational.of(other)
        a, b = self.re, self.im
        if not (a.numerator or b.numerator):
            return other
        c, d = other.re, other.im
        if not (c.numerator or d.numerator):
            return self
        return GaussianRational(
            a + c if a.numerator and c.numerator else (a if not c.numerator else c),
            b + d if b.numerator and d.numerator else (b if not d.numerator else d),
        )

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        if type(other) is not GaussianRational:
            other = GaussianRational.of(other)
        c, d = other.re, other.im
        if not (c.numerator or d.numerator):
            return self
        a, b = self.re, self.im
        return GaussianRational(
            a - c if a.numerator and c.numerator else (a if not c.numerator else -c),
            b - d if b.numerator and d.numerator else (b if not d.numerator else -d),
        )

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __neg__(self) -> "GaussianRational":
        if not (self.re.numerator or self.im.numerator):
            return self
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        if type(other) is not GaussianRational:
            other = GaussianRational.of(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b.numerator:
            if not a.numerator:
                return ZERO
            if not (c.numerator or d.numerator):
                return ZERO
            if a.numerator == 1 and a.denominator == 1:
                return other
            return GaussianRational(a * c, a * d)
        if not d.numerator:
            if not c.numerator:
                return ZERO
            if c.numerator == 1 and c.denominator == 1:
                return self
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            other = GaussianRational.of(other)
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.of(other) * self.inverse()

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero scalar")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conj(self) -> "GaussianRational":
        if not self.im.numerator:
            return self
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re.numerator or self.im.numerator)

    @property
    def is_zero(self) -> bool:
        return not (self.re.numerator or self.im.numerator)

    @property
    def is_real(self) -> bool:
        return not self.im.numerator

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"


ZERO = GaussianRational(_QZERO, _QZERO)
ONE = GaussianRational(_QONE, _QZERO)
I = GaussianRational(_QZERO, _QONE)
MINUS_ONE = GaussianRational(-_QONE, _QZERO)


def gr(re: Union[int, Q, str] = 0, im: Union[int, Q, str] = 0) -> GaussianRational:
    """Shorthand constructor: gr(1, 2) = 1 + 2i, gr('1/3') = 1/3."""
    return GaussianRational(Q(re), Q(im))


@dataclass(slots=True, unsafe_hash=True)
class DenseVector:
    """Immutable dense vector of exact scalars, 0-based entries."""

    dim: int
    entries: tuple[GaussianRational, ...]

    @staticmethod
    def from_values(values: Iterable[ScalarLike]) -> "DenseVector":
        entries = tuple(GaussianRational.of(v) for v in values)
        return DenseVector(len(entries), entries)

    @staticmethod
    def zero(dim: int) -> "DenseVector":
        return DenseVector(dim, (ZERO,) * dim)

    @staticmethod
    def unit(dim: int, index: int) -> "DenseVector":
        entries = [ZERO] * dim
        entries[index] = ONE
        return DenseVector(dim, tuple(entries))

    def __len__(self) -> int:
        return self.dim

    def __iter__(self) -> Iterator[GaussianRational]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> GaussianRational:
        return self.entries[index]

    def __add__(self, other: "DenseVector") -> "DenseVector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DenseVector(
            self.dim, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "DenseVector") -> "DenseVector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return DenseVector(
            self.dim, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "DenseVector":
        return DenseVector(self.dim, tuple(-a for a in self.entries))

    def scale(self, factor: ScalarLike) -> "DenseVector":
        f = GaussianRational.of(factor)
        return DenseVector(self.dim, tuple(f * a for a in self.entries))

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for a in self.entries)

    def support(self) -> "SparseColumn":
        """0-based {index: value} map of the nonzero entries."""
        return {i: v for i, v in enumerate(self.entries) if v}


# A sparse column for the elimination kernel: 0-based row index -> value.
SparseColumn = dict


Triplet = tuple[int, int, GaussianRational]


@dataclass(frozen=True, slots=True)
class SparseMatrix:
    """Exact sparse square matrix.

    Triplets are (row, col, value) with 1-based indices, sorted
    lexicographically, with no duplicate positions and no stored zeros.
    """

    dim: int
    triplets: tuple[Triplet, ...]

    @staticmethod
    def from_entries(
        dim: int, entries: Iterable[tuple[int, int, ScalarLike]]
    ) -> "SparseMatrix":
        acc: dict[tuple[int, int], GaussianRational] = {}
        for row, col, value in entries:
            if not (1 <= row <= dim and 1 <= col <= dim):
                raise ValueError(f"index ({row},{col}) outside 1..{dim}")
            v = GaussianRational.of(value)
            if not v:
                continue
            key = (row, col)
            if key in acc:
                v = acc[key] + v
                if v:
                    acc[key] = v
                else:
                    del acc[key]
            else:
                acc[key] = v
        trips = tuple(
            (row, col, acc[(row, col)]) for row, col in sorted(acc.keys())
        )
        return SparseMatrix(dim, trips)

    @staticmethod
    def zero(dim: int) -> "SparseMatrix":
        return SparseMatrix(dim, ())

    @staticmethod
    def identity(dim: int) -> "SparseMatrix":
        return SparseMatrix(dim, tuple((k, k, ONE) for k in range(1, dim + 1)))

    def validate(self) -> None:
        """Assert the representation invariants; used by tests and ingestion."""
        seen: set[tuple[int, int]] = set()
        previous: tuple[int, int] | None = None
        for row, col, value in self.triplets:
            assert 1 <= row <= self.dim and 1 <= col <= self.dim
            assert value, "stored zero value"
            assert (row, col) not in seen, "duplicate position"
            if previous is not None:
                assert previous < (row, col), "triplets not sorted"
            seen.add((row, col))
            previous = (row, col)

    @property
    def nnz(self) -> int:
        return len(self.triplets)

    @property
    def is_zero(self) -> bool:
        return not self.triplets

    def entry(self, row: int, col: int) -> GaussianRational:
        for r, c, v in self.triplets:
            if r == row and c == col:
                return v
            if (r, c) > (row, col):
                break
        return ZERO

    def entry_map(self) -> dict[tuple[int, int], GaussianRational]:
        return {(r, c): v for r, c, v in self.triplets}

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        acc = dict(self.entry_map())
        for r, c, v in other.triplets:
            key = (r, c)
            if key in acc:
                s = acc[key] + v
                if s:
                    acc[key] = s
                else:
                    del acc[key]
            else:
                acc[key] = v
        return SparseMatrix(
            self.dim, tuple((r, c, acc[(r, c)]) for r, c in sorted(acc.keys()))
        )

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(MINUS_ONE)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.dim, tuple((r, c, -v) for r, c, v in self.triplets))

    def scale(self, factor: ScalarLike) -> "SparseMatrix":
        f = GaussianRational.of(factor)
        if not f:
            return SparseMatrix.zero(self.dim)
        if f == ONE:
            return self
        return SparseMatrix(self.dim, tuple((r, c, f * v) for r, c, v in self.triplets))

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        rows_b: dict[int, list[tuple[int, GaussianRational]]] = {}
        for r, c, v in other.triplets:
            rows_b.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], GaussianRational] = {}
        for r, k, va in self.triplets:
            hits = rows_b.get(k)
            if hits is None:
                continue
            for c, vb in hits:
                key = (r, c)
                prod = va * vb
                if key in acc:
                    s = acc[key] + prod
                    if s:
                        acc[key] = s
                    else:
                        del acc[key]
                else:
                    if prod:
                        acc[key] = prod
        return SparseMatrix(
            self.dim, tuple((r, c, acc[(r, c)]) for r, c in sorted(acc.keys()))
        )

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.dim,
            tuple(
                (c, r, v)
                for c, r, v in sorted((c, r, v) for r, c, v in self.triplets)
            ),
        )

    def conj(self) -> "SparseMatrix":
        return SparseMatrix(
            self.dim, tuple((r, c, v.conj()) for r, c, v in self.triplets)
        )

    def trace(self) -> GaussianRational:
        total = ZERO
        for r, c, v in self.triplets:
            if r == c:
                total = total + v
        return total

    def apply(self, vector: DenseVector) -> DenseVector:
        if vector.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {vector.dim}")
        out = [ZERO] * self.dim
        entries = vector.entries
        for r, c, v in self.triplets:
            x = entries[c - 1]
            if x:
                out[r - 1] = out[r - 1] + v * x
        return DenseVector(self.dim, tuple(out))

    def apply_column(self, column: SparseColumn) -> SparseColumn:
        """Apply to a 0-based sparse column, returning a 0-based sparse column."""
        cols: dict[int, list[tuple[int, GaussianRational]]] = {}
        for r, c, v in self.triplets:
            cols.setdefault(c - 1, []).append((r - 1, v))
        out: SparseColumn = {}
        for j, x in column.items():
            for i, v in cols.get(j, ()):
                s = out.get(i, ZERO) + v * x
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def column_vector(self, col: int) -> DenseVector:
        """1-based column as a 0-based dense vector."""
        out = [ZERO] * self.dim
        for r, c, v in self.triplets:
            if c == col:
                out[r - 1] = v
        return DenseVector(self.dim, tuple(out))

    def column_map(self, col: int) -> SparseColumn:
        """1-based column as a {0-based row: value} map."""
        return {r - 1: v for r, c, v in self.triplets if c == col}

    def flatten_map(self) -> SparseColumn:
        """Row-major flattening to a {0-based index: value} map.

        Position (i, j) lands at index (i-1)*dim + (j-1), so that the
        resulting vector lists the matrix row by row.
        """
        n = self.dim
        return {(r - 1) * n + (c - 1): v for r, c, v in self.triplets}

    def flatten_vector(self) -> DenseVector:
        """Row-major flattening to a dense vector of length dim*dim."""
        n = self.dim
        out = [ZERO] * (n * n)
        for r, c, v in self.triplets:
            out[(r - 1) * n + (c - 1)] = v
        return DenseVector(n * n, tuple(out))

    def principal_submatrix(self, size: int) -> "SparseMatrix":
        """Upper-left size x size corner."""
        if not (1 <= size <= self.dim):
            raise ValueError(f"size {size} outside 1..{self.dim}")
        return SparseMatrix(
            size,
            tuple((r, c, v) for r, c, v in self.triplets if r <= size and c <= size),
        )

    def support_outside(self, size: int) -> tuple[Triplet, ...]:
        """Triplets lying outside the upper-left size x size corner."""
        return tuple(
            (r, c, v) for r, c, v in self.triplets if r > size or c > size
        )

    def embed(self, dim: int) -> "SparseMatrix":
        """Reinterpret as the upper-left corner of a larger zero matrix."""
        if dim < self.dim:
            raise ValueError(f"cannot embed dim {self.dim} into dim {dim}")
        return SparseMatrix(dim, self.triplets)


def mat_commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """a@b - b@a, fully normalized."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return (a @ b) - (b @ a)


class NoSolution(Exception):
    """The target vector is not in the span of the given columns."""


class AmbiguousSolution(Exception):
    """The columns are linearly dependent, so coefficients are not unique."""


ColumnLike = Union[DenseVector, Mapping[int, GaussianRational]]


def _as_column(column: ColumnLike) -> SparseColumn:
    if isinstance(column, DenseVector):
        return column.support()
    return {i: v for i, v in column.items() if v}


class ColumnEchelon:
    """Exact sparse column elimination with coefficient tracking.

    Columns are processed in the order given.  Each incoming column is
    reduced against the pivots found so far; the first nonzero entry of
    the reduced column (the lowest row index) becomes a new pivot.  The
    reduction ledger expresses every stored column as an exact linear
    combination of the original ones, which serves solve and kernel
    extraction alike.
    """

    def __init__(self, columns: Sequence[ColumnLike]):
        # pivot row -> (monic reduced column, combination ledger)
        self._pivots: dict[int, tuple[SparseColumn, SparseColumn]] = {}
        self._kernel: list[SparseColumn] = []
        self._ncols = len(columns)
        for j, column in enumerate(columns):
            vec = _as_column(column)
            ledger: SparseColumn = {j: ONE}
            vec, ledger = self._reduce(vec, ledger)
            if not vec:
                self._kernel.append(ledger)
                continue
            pivot_row = min(vec)
            pivot_value = vec[pivot_row]
            inv = pivot_value.inverse()
            vec = {r: inv * v for r, v in vec.items()}
            ledger = {k: inv * v for k, v in ledger.items()}
            self._pivots[pivot_row] = (vec, ledger)

    def _reduce(
        self, vec: SparseColumn, ledger: SparseColumn
    ) -> tuple[SparseColumn, SparseColumn]:
        while vec:
            row = min(vec)
            hit = self._pivots.get(row)
            if hit is None:
                break
            pivot_vec, pivot_ledger = hit
            factor = vec[row]
            for r, v in pivot_vec.items():
                s = vec.get(r, ZERO) - factor * v
                if s:
                    vec[r] = s
                else:
                    vec.pop(r, None)
            for k, v in pivot_ledger.items():
                s = ledger.get(k, ZERO) - factor * v
                if s:
                    ledger[k] = s
                else:
                    ledger.pop(k, None)
        return vec, ledger

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def dependent(self) -> bool:
        return bool(self._kernel)

    def residual(self, target: ColumnLike) -> tuple[SparseColumn, SparseColumn]:
        """Reduced remainder of target and the combination consumed by it."""
        vec = _as_column(target)
        ledger: SparseColumn = {}
        vec = dict(vec)
        while vec:
            row = min(vec)
            hit = self._pivots.get(row)
            if hit is None:
                break
            pivot_vec, pivot_ledger = hit
            factor = vec[row]
            for r, v in pivot_vec.items():
                s = vec.get(r, ZERO) - factor * v
                if s:
                    vec[r] = s
                else:
                    vec.pop(r, None)
            for k, v in pivot_ledger.items():
                s = ledger.get(k, ZERO) + factor * v
                if s:
                    ledger[k] = s
                else:
                    ledger.pop(k, None)
        return vec, ledger

    def solve(self, target: ColumnLike) -> DenseVector:
        remainder, ledger = self.residual(target)
        if remainder:
            raise NoSolution("target is outside the span of the columns")
        if self._kernel:
            raise AmbiguousSolution(
                "columns are dependent; coefficients are not unique"
            )
        out = [ZERO] * self._ncols
        for k, v in ledger.items():
            out[k] = v
        return DenseVector(self._ncols, tuple(out))

    def contains(self, target: ColumnLike) -> bool:
        remainder, _ = self.residual(target)
        return not remainder

    def kernel_vectors(self) -> list[DenseVector]:
        out = []
        for ledger in self._kernel:
            first = min(ledger)
            inv = ledger[first].inverse()
            entries = [ZERO] * self._ncols
            for k, v in ledger.items():
                entries[k] = inv * v
            out.append(DenseVector(self._ncols, tuple(entries)))
        return out


def solve_exact(columns: Sequence[ColumnLike], target: ColumnLike) -> DenseVector:
    """Exact coefficients expressing target in the given columns.

    Raises NoSolution when the target is outside the span and
    AmbiguousSolution when the columns are dependent (even if the target
    happens to lie in their span).
    """
    return ColumnEchelon(columns).solve(target)


def rank_exact(columns: Sequence[ColumnLike]) -> int:
    """Exact rank of the given columns."""
    return ColumnEchelon(columns).rank


def nullspace_exact(matrix: SparseMatrix) -> list[DenseVector]:
    """Exact kernel basis of a square matrix.

    Each basis vector is normalized so its first nonzero entry is 1.
    """
    columns = [matrix.column_map(j) for j in range(1, matrix.dim + 1)]
    return ColumnEchelon(columns).kernel_vectors()
