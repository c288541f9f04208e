"""Dense linear algebra over F_q.

The ``*_codes`` functions work directly on integer code arrays and are what
the rest of the package calls in inner loops.  :class:`Matrix` wraps a code
array together with its field for the public API.
"""

import numpy as np

from .errors import ContextMismatch, ShapeMismatch
from .field import FieldElement, embed


# -- code-array kernels -------------------------------------------------------

def rref_codes(ctx, M):
    """Reduced row echelon form of a code array.  Returns (R, rank, pivots)."""
    M = np.array(M, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ShapeMismatch("rref needs a 2-d array")
    r, c = M.shape
    pivots = []
    row = 0
    p = ctx.p
    for col in range(c):
        if row == r:
            break
        nz = np.flatnonzero(M[row:, col])
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            M[[row, piv]] = M[[piv, row]]
        lead = int(M[row, col])
        if lead != 1:
            M[row, col:] = ctx.amul(M[row, col:], ctx.inv(lead))
        f = M[:, col].copy()
        f[row] = 0
        others = np.flatnonzero(f)
        if others.size:
            if ctx.k == 1:
                M[others, col:] = (M[others, col:] - f[others, None] * M[row, col:]) % p
            else:
                M[others, col:] = ctx.asub(M[others, col:], ctx.amul(f[others, None], M[row, col:]))
        pivots.append(col)
        row += 1
    return M, row, pivots


def rank_codes(ctx, M):
    return rref_codes(ctx, M)[1]


def kernel_codes(ctx, M):
    """Canonical right-kernel basis as rows of a (nullity x cols) array."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, rank, pivots = rref_codes(ctx, M)
    free = [j for j in range(cols) if j not in set(pivots)]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        if rank:
            out[i, pivots] = ctx.aneg(R[:rank, f])
    return out


def inverse_codes(ctx, M):
    n = M.shape[0]
    aug = np.concatenate([np.asarray(M, dtype=np.int64), np.eye(n, dtype=np.int64)], axis=1)
    R, rank, pivots = rref_codes(ctx, aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return R[:, n:]


def kron_codes(ctx, A, B):
    rA, cA = A.shape
    rB, cB = B.shape
    return ctx.amul(A[:, None, :, None], B[None, :, None, :]).reshape(rA * rB, cA * cB)


def identity_codes(n):
    return np.eye(n, dtype=np.int64)


def scalar_identity(ctx, n, lam):
    return np.eye(n, dtype=np.int64) * int(lam)


def complement_columns(basis_rows, pivots, n):
    """Standard basis vectors completing an echelon basis to F^n."""
    piv = set(pivots)
    return [j for j in range(n) if j not in piv]


class Span:
    """Subspace of F^n kept in reduced row echelon form, grown one vector at a time."""

    def __init__(self, ctx, n):
        self.ctx = ctx
        self.n = n
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        v = np.asarray(v, dtype=np.int64)
        if not self.pivots:
            return v.copy()
        coeff = v[self.pivots]
        if not coeff.any():
            return v.copy()
        return self.ctx.asub(v, self.ctx.amatmul(coeff[None, :], self.rows)[0])

    def add(self, v):
        """Add v; return True if it enlarged the span."""
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        c = int(nz[0])
        lead = int(w[c])
        if lead != 1:
            w = self.ctx.amul(w, self.ctx.inv(lead))
        col = self.rows[:, c].copy()
        if col.any():
            self.rows = self.ctx.asub(self.rows, self.ctx.amul(col[:, None], w[None, :]))
        pos = np.searchsorted(self.pivots, c)
        self.rows = np.insert(self.rows, pos, w, axis=0)
        self.pivots.insert(pos, c)
        return True

    def contains(self, v):
        return not self.reduce(v).any()


def spin_codes(ctx, gens, vectors, limit=None):
    """Closure of ``vectors`` under the matrices ``gens`` (column action).

    Returns (span, vecs, tree) where ``vecs`` are the unreduced vectors that
    were added and ``tree[j] = (i, a)`` records ``vecs[j] = gens[a] @ vecs[i]``
    (``None`` for seeds).
    """
    gens = np.asarray(gens, dtype=np.int64)
    n = gens.shape[-1]
    span = Span(ctx, n)
    vecs, tree = [], []
    for v in vectors:
        if span.add(v):
            vecs.append(np.asarray(v, dtype=np.int64))
            tree.append(None)
    i = 0
    while i < len(vecs):
        images = ctx.amatmul(gens, vecs[i][:, None])[..., 0]
        for a, w in enumerate(images):
            if span.add(w):
                vecs.append(w)
                tree.append((i, a))
                if limit is not None and span.dim >= limit:
                    return span, vecs, tree
        i += 1
    return span, vecs, tree


# -- public Matrix wrapper ----------------------------------------------------

class Matrix:
    """A rows x cols matrix over a :class:`~modclifford.field.FieldCtx`."""

    __slots__ = ("ctx", "data")

    def __init__(self, ctx, data):
        self.ctx = ctx
        self.data = np.asarray(data, dtype=np.int64)
        if self.data.ndim != 2:
            raise ShapeMismatch("matrix data must be 2-d")

    @classmethod
    def from_rows(cls, ctx, rows):
        data = [[x.code if isinstance(x, FieldElement) else int(x) % ctx.p for x in row] for row in rows]
        if not data:
            return cls(ctx, np.zeros((0, 0), dtype=np.int64))
        return cls(ctx, np.array(data, dtype=np.int64).reshape(len(data), -1))

    @classmethod
    def identity(cls, ctx, n):
        return cls(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected Matrix")
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices over different fields")

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        return Matrix(self.ctx, self.ctx.amatmul(self.data, other.data))

    def __add__(self, other):
        self._check(other)
        return Matrix(self.ctx, self.ctx.aadd(self.data, other.data))

    def __sub__(self, other):
        self._check(other)
        return Matrix(self.ctx, self.ctx.asub(self.data, other.data))

    def __neg__(self):
        return Matrix(self.ctx, self.ctx.aneg(self.data))

    def scale(self, c):
        code = c.code if isinstance(c, FieldElement) else int(c) % self.ctx.p
        return Matrix(self.ctx, self.ctx.amul(self.data, code))

    def __getitem__(self, ij):
        i, j = ij
        return FieldElement(self.ctx, int(self.data[i, j]))

    @property
    def T(self):
        return Matrix(self.ctx, self.data.T.copy())

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.ctx == self.ctx
            and other.shape == self.shape
            and bool(np.array_equal(other.data, self.data))
        )

    def __hash__(self):
        return hash((self.ctx.key, self.shape, self.data.tobytes()))

    def rank(self):
        return rank_codes(self.ctx, self.data)

    def inverse(self):
        return Matrix(self.ctx, inverse_codes(self.ctx, self.data))

    def embed(self, dst):
        return Matrix(dst, embed(self.ctx, dst, self.data))

    def to_json(self):
        return [[self.ctx.element_text(int(x)) for x in row] for row in self.data]

    def __repr__(self):
        body = "\n ".join(" ".join(self.ctx.element_text(int(x)) for x in row) for row in self.data)
        return f"Matrix(F_{self.ctx.p}^{self.ctx.k}, {self.rows}x{self.cols},\n {body})"


def rref(A):
    R, rank, pivots = rref_codes(A.ctx, A.data)
    return Matrix(A.ctx, R), rank, pivots


def kernel_basis(A):
    """Canonical basis of the right null space, as a list of 1-d code vectors.

    Each vector has a 1 at its free column and zeros at the other free
    columns, which makes the output deterministic.
    """
    return [Matrix(A.ctx, row[None, :]) for row in kernel_codes(A.ctx, A.data)]


def kron(A, B):
    if A.ctx != B.ctx:
        raise ContextMismatch("kron over different fields")
    return Matrix(A.ctx, kron_codes(A.ctx, A.data, B.data))


def eigenspace_dim(A, lam):
    if A.rows != A.cols:
        raise ShapeMismatch("eigenspace of a non-square matrix")
    code = lam.code if isinstance(lam, FieldElement) else int(lam) % A.ctx.p
    shifted = A.ctx.asub(A.data, np.eye(A.rows, dtype=np.int64) * code)
    return A.rows - rank_codes(A.ctx, shifted)
