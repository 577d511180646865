"""Tests for the exact scalar / sparse matrix / elimination kernel."""

from __future__ import annotations

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exalg.exact import (
    AmbiguousSolution,
    ColumnEchelon,
    DenseVector,
    GaussianRational,
    NoSolution,
    SparseMatrix,
    gr,
    mat_commutator,
    nullspace_exact,
    rank_exact,
    solve_exact,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)

scalars = st.builds(GaussianRational, rationals, rationals)

nonzero_scalars = scalars.filter(bool)


def sparse_matrices(dim: int, max_entries: int = 6):
    entry = st.tuples(
        st.integers(1, dim), st.integers(1, dim), scalars
    )
    return st.lists(entry, max_size=max_entries).map(
        lambda es: SparseMatrix.from_entries(dim, es)
    )


class TestScalars:
    @given(scalars, scalars, scalars)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(scalars)
    def test_conjugation_involution(self, a):
        assert a.conj().conj() == a

    @given(nonzero_scalars)
    def test_inverse(self, a):
        assert a * a.inverse() == gr(1)
        assert a.inverse().inverse() == a

    @given(scalars, nonzero_scalars)
    def test_division_roundtrip(self, a, b):
        assert (a / b) * b == a

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            gr(0).inverse()

    def test_normal_form(self):
        assert gr(Q(2, 4)) == gr(Q(1, 2))
        assert gr(Q(-1, 2)).re.denominator == 2
        assert str(gr(Q(1, 2), Q(-1, 3))) == "1/2-1/3*i"
        assert str(gr(0, 1)) == "1*i"

    def test_coercion(self):
        assert gr(3) * 2 == gr(6)
        assert 2 * gr(3) == gr(6)
        assert 1 - gr(0, 1) == gr(1, -1)
        assert gr(1) + Q(1, 2) == gr(Q(3, 2))


class TestSparseMatrix:
    def test_from_entries_normalizes(self):
        m = SparseMatrix.from_entries(
            3, [(2, 1, 1), (1, 1, 2), (2, 1, -1), (3, 3, Q(1, 2))]
        )
        assert m.triplets == ((1, 1, gr(2)), (3, 3, gr(Q(1, 2))))
        m.validate()

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            SparseMatrix.from_entries(2, [(3, 1, 1)])

    def test_identity_and_zero(self):
        assert SparseMatrix.identity(3).nnz == 3
        assert SparseMatrix.zero(5).is_zero

    @given(sparse_matrices(4), sparse_matrices(4))
    def test_add_commutes(self, a, b):
        assert a + b == b + a
        (a + b).validate()

    @given(sparse_matrices(4))
    def test_scale_and_negate(self, a):
        assert a.scale(-1) == -a
        assert a.scale(0).is_zero
        assert (a - a).is_zero

    @given(sparse_matrices(4), sparse_matrices(4), sparse_matrices(4))
    @settings(max_examples=50)
    def test_product_associates(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @given(sparse_matrices(4))
    def test_transpose_involution(self, a):
        assert a.transpose().transpose() == a

    @given(sparse_matrices(4), sparse_matrices(4))
    def test_transpose_antihomomorphism(self, a, b):
        assert (a @ b).transpose() == b.transpose() @ a.transpose()

    @given(sparse_matrices(4))
    def test_identity_neutral(self, a):
        e = SparseMatrix.identity(4)
        assert e @ a == a
        assert a @ e == a

    def test_apply(self):
        m = SparseMatrix.from_entries(2, [(1, 2, 1), (2, 1, -1)])
        v = DenseVector.from_values([2, 3])
        assert m.apply(v) == DenseVector.from_values([3, -2])

    def test_apply_column_matches_apply(self):
        m = SparseMatrix.from_entries(3, [(1, 2, 2), (3, 1, -1), (2, 2, 5)])
        v = DenseVector.from_values([1, -1, 7])
        dense = m.apply(v)
        sparse = m.apply_column(v.support())
        assert dense.support() == sparse

    def test_flatten_rowmajor(self):
        m = SparseMatrix.from_entries(3, [(2, 3, 5)])
        # position (2,3) sits at (2-1)*3 + (3-1) = 5 in row-major order
        assert m.flatten_map() == {5: gr(5)}
        assert m.flatten_vector()[5] == gr(5)

    def test_principal_submatrix(self):
        m = SparseMatrix.from_entries(4, [(1, 1, 1), (2, 4, 2), (4, 4, 3)])
        clipped = m.principal_submatrix(2)
        assert clipped.dim == 2
        assert clipped.triplets == ((1, 1, gr(1)),)
        assert m.support_outside(2) == ((2, 4, gr(2)), (4, 4, gr(3)))
        assert m.support_outside(4) == ()

    def test_trace(self):
        m = SparseMatrix.from_entries(3, [(1, 1, 2), (2, 2, -1), (1, 3, 9)])
        assert m.trace() == gr(1)


class TestCommutator:
    def test_self_commutator_vanishes(self):
        m = SparseMatrix.from_entries(3, [(1, 2, 3), (2, 3, Q(1, 2))])
        assert mat_commutator(m, m).is_zero

    @given(sparse_matrices(4), sparse_matrices(4))
    def test_antisymmetric(self, a, b):
        assert mat_commutator(a, b) == -mat_commutator(b, a)

    @given(sparse_matrices(3), sparse_matrices(3), sparse_matrices(3))
    @settings(max_examples=50)
    def test_jacobi(self, a, b, c):
        total = (
            mat_commutator(a, mat_commutator(b, c))
            + mat_commutator(b, mat_commutator(c, a))
            + mat_commutator(c, mat_commutator(a, b))
        )
        assert total.is_zero

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            mat_commutator(SparseMatrix.zero(2), SparseMatrix.zero(3))


class TestSolve:
    def test_scaled_single_column(self):
        v = DenseVector.from_values([1, 2, 0, 5])
        assert solve_exact([v], v.scale(3)) == DenseVector.from_values([3])

    def test_standard_basis(self):
        basis = [DenseVector.unit(4, k) for k in range(4)]
        target = DenseVector.from_values([7, Q(-1, 3), 0, 2])
        assert solve_exact(basis, target) == target

    def test_no_solution(self):
        cols = [DenseVector.from_values([1, 0, 0])]
        with pytest.raises(NoSolution):
            solve_exact(cols, DenseVector.from_values([0, 1, 0]))

    def test_ambiguous(self):
        v = DenseVector.from_values([1, 2])
        with pytest.raises(AmbiguousSolution):
            solve_exact([v, v.scale(2)], v)

    @given(
        st.lists(
            st.lists(scalars, min_size=5, max_size=5).map(
                DenseVector.from_values
            ),
            min_size=1,
            max_size=4,
        ),
        st.lists(scalars, min_size=4, max_size=4),
    )
    @settings(max_examples=50)
    def test_recombination_is_exact(self, columns, weights):
        target = DenseVector.zero(5)
        for col, w in zip(columns, weights):
            target = target + col.scale(w)
        try:
            coeffs = solve_exact(columns, target)
        except AmbiguousSolution:
            return
        rebuilt = DenseVector.zero(5)
        for col, c in zip(columns, coeffs):
            rebuilt = rebuilt + col.scale(c)
        assert rebuilt == target


class TestRank:
    def test_dependent_pair(self):
        v = DenseVector.from_values([1, 2, 3])
        assert rank_exact([v, v.scale(2)]) == 1

    def test_independent(self):
        cols = [DenseVector.unit(3, k) for k in range(3)]
        assert rank_exact(cols) == 3

    @given(
        st.lists(
            st.lists(scalars, min_size=4, max_size=4).map(
                DenseVector.from_values
            ),
            min_size=1,
            max_size=4,
        ),
        st.randoms(use_true_random=False),
        nonzero_scalars,
    )
    @settings(max_examples=40)
    def test_rank_invariances(self, columns, rng, factor):
        base = rank_exact(columns)
        shuffled = list(columns)
        rng.shuffle(shuffled)
        assert rank_exact(shuffled) == base
        scaled = [c.scale(factor) for c in columns]
        assert rank_exact(scaled) == base


class TestNullspace:
    def test_identity_has_trivial_kernel(self):
        assert nullspace_exact(SparseMatrix.identity(4)) == []

    def test_zero_matrix_kernel_is_canonical(self):
        vectors = nullspace_exact(SparseMatrix.zero(3))
        assert vectors == [DenseVector.unit(3, k) for k in range(3)]

    def test_kernel_vectors_normalized(self):
        # rows: x + y = 0 twice; kernel = span{(1, -1)}
        m = SparseMatrix.from_entries(2, [(1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)])
        vectors = nullspace_exact(m)
        assert vectors == [DenseVector.from_values([1, -1])]
        assert vectors[0][0] == gr(1)

    @given(sparse_matrices(5, max_entries=10))
    @settings(max_examples=50)
    def test_kernel_members_annihilate(self, m):
        for vec in nullspace_exact(m):
            assert m.apply(vec).is_zero

    @given(sparse_matrices(5, max_entries=10))
    @settings(max_examples=30)
    def test_rank_nullity(self, m):
        kernel = nullspace_exact(m)
        cols = [m.column_map(j) for j in range(1, 6)]
        assert rank_exact(cols) + len(kernel) == 5


class TestEchelonReuse:
    def test_solver_reuse_matches_one_shot(self):
        cols = [
            DenseVector.from_values([1, 1, 0]),
            DenseVector.from_values([0, 1, 1]),
        ]
        solver = ColumnEchelon(cols)
        t1 = DenseVector.from_values([1, 2, 1])
        t2 = DenseVector.from_values([2, 3, 1])
        assert solver.solve(t1) == solve_exact(cols, t1)
        assert solver.solve(t2) == solve_exact(cols, t2)
        assert solver.contains(t1)
        assert not solver.contains(DenseVector.from_values([1, 0, 0]))
