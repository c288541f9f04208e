import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import GF, Matrix as SMatrix
from sympy.polys.matrices import DomainMatrix

from modclifford.errors import ContextMismatch, ShapeMismatch
from modclifford.field import make_field
from modclifford.linalg import (
    Matrix,
    Span,
    eigenspace_dim,
    inverse_codes,
    kernel_basis,
    kernel_codes,
    kron,
    rank_codes,
    rref_codes,
    spin_codes,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)]


def matrices(max_side=5):
    return st.tuples(st.sampled_from(FIELDS), st.integers(1, max_side), st.integers(1, max_side), st.integers(0, 2**32 - 1))


def build(spec):
    (p, k), r, c, seed = spec
    ctx = make_field(p, k)
    rng = np.random.default_rng(seed)
    return ctx, rng.integers(0, ctx.q, size=(r, c))


@given(matrices())
def test_rank_matches_sympy_over_prime_fields(spec):
    ctx, A = build(spec)
    if ctx.k != 1:
        return
    dm = DomainMatrix.from_Matrix(SMatrix(A.tolist())).convert_to(GF(ctx.p))
    assert rank_codes(ctx, A) == dm.rank()


@given(matrices())
def test_kernel_is_annihilated_and_complete(spec):
    ctx, A = build(spec)
    K = kernel_codes(ctx, A)
    if len(K):
        assert not ctx.amatmul(A, K.T).any()
    assert len(K) + rank_codes(ctx, A) == A.shape[1]
    assert rank_codes(ctx, K) == len(K)


@given(matrices())
def test_rref_is_idempotent(spec):
    ctx, A = build(spec)
    R, r, piv = rref_codes(ctx, A)
    R2, r2, piv2 = rref_codes(ctx, R)
    assert np.array_equal(R, R2) and r == r2 and piv == piv2
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and not np.delete(R[:, c], i).any()


@given(st.sampled_from(FIELDS), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_inverse(pk, n, seed):
    ctx = make_field(*pk)
    rng = np.random.default_rng(seed)
    A = rng.integers(0, ctx.q, size=(n, n))
    if rank_codes(ctx, A) < n:
        with pytest.raises(ZeroDivisionError):
            inverse_codes(ctx, A)
        return
    B = inverse_codes(ctx, A)
    assert np.array_equal(ctx.amatmul(A, B), np.eye(n, dtype=np.int64))


def test_kernel_basis_canonical():
    ctx = make_field(3)
    A = Matrix.from_rows(ctx, [[1, 2, 0], [2, 1, 0]])
    ks = kernel_basis(A)
    assert [k.data.tolist() for k in ks] == [[[1, 1, 0]], [[0, 0, 1]]]


def test_span_and_spin():
    ctx = make_field(2)
    s = Span(ctx, 3)
    assert s.add([1, 1, 0]) and s.add([0, 1, 1]) and not s.add([1, 0, 1])
    assert s.dim == 2 and s.contains([1, 0, 1])
    perm = np.array([[[0, 0, 1], [1, 0, 0], [0, 1, 0]]])
    span, vecs, tree = spin_codes(ctx, perm, [[1, 1, 0]])
    assert span.dim == 2
    for j, t in enumerate(tree):
        if t is not None:
            i, a = t
            assert np.array_equal(vecs[j], ctx.amatmul(perm[a], vecs[i][:, None])[:, 0])


def test_kron_and_eigenspace():
    ctx = make_field(5)
    A = Matrix.from_rows(ctx, [[1, 2], [3, 4]])
    B = Matrix.identity(ctx, 2)
    K = kron(A, B)
    assert K.shape == (4, 4) and K[0, 2] == ctx(2)
    assert eigenspace_dim(Matrix.identity(ctx, 3).scale(2), 2) == 3


def test_matrix_errors():
    A = Matrix.identity(make_field(3), 2)
    B = Matrix.identity(make_field(5), 2)
    with pytest.raises(ContextMismatch):
        A @ B
    with pytest.raises(ShapeMismatch):
        A @ Matrix.identity(make_field(3), 3)
