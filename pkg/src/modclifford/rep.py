"""Matrix representations and the functors between them.

Matrices act on column vectors.  A :class:`Representation` always holds the
full table of images (one matrix per group element, in the group's index
order); the groups in scope are small enough that this is the simplest exact
choice.
"""

import numpy as np

from .errors import (
    ContextMismatch,
    DegreeMismatch,
    DoesNotNormalize,
    GroupMismatch,
    NotAHomomorphism,
    QuotientMismatch,
)
from .field import embed, make_field
from .group import GroupElement, QuotientGroup, check_subgroup, coset_reps, encode
from .linalg import Matrix, inverse_codes


class Representation:
    def __init__(self, group, ctx, images, label=""):
        self.group = group
        self.ctx = ctx
        self.images = np.asarray(images, dtype=np.int64)
        self.degree = self.images.shape[1]
        self.label = label
        self.cache = {}

    @property
    def gen_images(self):
        return self.images[self.group.gens]

    def __call__(self, g):
        i = g if isinstance(g, (int, np.integer)) else self.group.index_of(g)
        return Matrix(self.ctx, self.images[i])

    def __repr__(self):
        return f"Representation({self.label or '?'}, deg={self.degree}, {self.group.name}, F_{self.ctx.p}^{self.ctx.k})"

    def relabel(self, label):
        self.label = label
        return self

    def is_homomorphism(self):
        G = self.group
        ctx = self.ctx
        table = G.mul_table
        for a in G.gens:
            lhs = ctx.amatmul(self.images[a][None], self.images)
            if not np.array_equal(lhs, self.images[table[a]]):
                return False
        return np.array_equal(self.images[0], np.eye(self.degree, dtype=np.int64))


def from_generator_images(G, ctx, gen_images, label="", check=True):
    """Extend generator images along the BFS words of G and validate.

    Raises NotAHomomorphism unless rho(g) rho(x) = rho(gx) holds for every
    generator g and every element x, which forces a homomorphism.
    """
    if isinstance(gen_images, dict):
        gen_images = [gen_images[g] for g in G.gens]
    arrs = []
    for m in gen_images:
        if isinstance(m, Matrix):
            if m.ctx != ctx:
                raise ContextMismatch("generator image over another field")
            m = m.data
        arrs.append(np.asarray(m, dtype=np.int64))
    if len(arrs) != len(G.gens):
        raise DegreeMismatch("one image per generator required")
    n = arrs[0].shape[0]
    if any(a.shape != (n, n) for a in arrs):
        raise DegreeMismatch("generator images of different degrees")
    gen_img = np.stack(arrs) if arrs else np.zeros((0, n, n), dtype=np.int64)
    images = np.zeros((len(G), n, n), dtype=np.int64)
    images[0] = np.eye(n, dtype=np.int64)
    gen_pos = {g: a for a, g in enumerate(G.gens)}
    # parent[i] = (a, j) means element i = gens_as_built[a] @ element j
    for layer in G.layers[1:]:
        par = G.parent[layer]
        for a in np.unique(par[:, 0]):
            sel = par[:, 0] == a
            images[layer[sel]] = ctx.amatmul(gen_img[a][None], images[par[sel, 1]])
    rho = Representation(G, ctx, images, label)
    # the generator indices recorded in parent follow the original generator order
    if check:
        for g, a in gen_pos.items():
            if not np.array_equal(images[g], gen_img[a]):
                raise NotAHomomorphism("generator relation violated")
        if not rho.is_homomorphism():
            raise NotAHomomorphism("images do not respect the group law")
    return rho


def trivial(G, ctx=None):
    ctx = ctx or G.ctx
    return Representation(G, ctx, np.ones((len(G), 1, 1), dtype=np.int64), "trivial")


def natural(G, ctx=None):
    ctx = ctx or G.ctx
    images = G.mats if ctx == G.ctx else embed(G.ctx, ctx, G.mats)
    return Representation(G, ctx, images.copy(), "natural")


def regular(G, ctx=None):
    ctx = ctx or G.ctx
    n = len(G)
    images = np.zeros((n, n, n), dtype=np.int64)
    table = G.mul_table
    images[np.arange(n)[:, None], table, np.arange(n)[None, :]] = 1
    return Representation(G, ctx, images, "regular")


def rebase(rho, ctx):
    """The same representation with entries embedded in a larger field."""
    if ctx == rho.ctx:
        return rho
    out = Representation(rho.group, ctx, embed(rho.ctx, ctx, rho.images), rho.label)
    return out


def _same_group(r1, r2):
    g1, g2 = r1.group, r2.group
    if g1 is g2:
        return
    if len(g1) != len(g2) or not np.array_equal(g1.codes, g2.codes) or g1.gens != g2.gens:
        raise GroupMismatch("representations of different groups")


def _same_ctx(r1, r2):
    if r1.ctx != r2.ctx:
        raise ContextMismatch("representations over different fields")


def restrict(rho, H, label=None):
    idx = check_subgroup(rho.group, H)
    return Representation(H, rho.ctx, rho.images[idx], label or f"Res({rho.label})")


def induce(sigma, G, cosets=None, label=None):
    """Ind_N^G sigma on coset blocks.

    With coset representatives t_1..t_m of N in G, block (i, j) of the image
    of g is sigma(t_i^-1 g t_j) when that lies in N and zero otherwise.
    """
    N = sigma.group
    cos = cosets or coset_reps(G, N)
    m, d = cos.index, sigma.degree
    reps = np.array(cos.reps)
    g_to_n = np.full(len(G), -1, dtype=np.int64)
    g_to_n[cos.sub_in_group] = np.arange(len(N))
    gt = G.mul_table[:, reps]  # (|G|, m): index of g t_j
    i_of = cos.coset_of[gt]
    n_of = g_to_n[cos.h_of[gt]]
    blocks = np.zeros((len(G), m, d, m, d), dtype=np.int64)
    gi = np.arange(len(G))[:, None]
    jj = np.arange(m)[None, :]
    blocks[gi, i_of, :, jj, :] = sigma.images[n_of]
    images = blocks.reshape(len(G), m * d, m * d)
    rho = Representation(G, sigma.ctx, images, label or f"Ind({sigma.label})")
    rho.cache["cosets"] = cos
    return rho


def conjugate(sigma, g, label=None):
    """n -> sigma(g^-1 n g) for g normalising N."""
    N = sigma.group
    if isinstance(g, GroupElement):
        gm = g.matrix.data
    elif isinstance(g, Matrix):
        gm = g.data
    else:
        gm = np.asarray(g, dtype=np.int64)
    p = N.p
    ctx_p = make_field(p)
    ginv = inverse_codes(ctx_p, gm)
    conj = (ginv[None] @ N.mats @ gm[None]) % p
    idx = N.lookup_codes(encode(p, conj), strict=False)
    if (idx < 0).any():
        raise DoesNotNormalize("g does not normalise the subgroup")
    return Representation(N, sigma.ctx, sigma.images[idx], label or f"^g({sigma.label})")


def tensor(r1, r2, label=None):
    _same_group(r1, r2)
    _same_ctx(r1, r2)
    A, B = r1.images, r2.images
    n1, n2 = r1.degree, r2.degree
    prod = r1.ctx.amul(A[:, :, None, :, None], B[:, None, :, None, :])
    return Representation(
        r1.group, r1.ctx, prod.reshape(len(A), n1 * n2, n1 * n2), label or f"({r1.label})x({r2.label})"
    )


def dual(rho, label=None):
    """g -> rho(g^-1)^T."""
    images = np.transpose(rho.images[rho.group.inverses], (0, 2, 1)).copy()
    return Representation(rho.group, rho.ctx, images, label or f"({rho.label})*")


def direct_sum(r1, r2, label=None):
    _same_group(r1, r2)
    _same_ctx(r1, r2)
    n1, n2 = r1.degree, r2.degree
    images = np.zeros((len(r1.images), n1 + n2, n1 + n2), dtype=np.int64)
    images[:, :n1, :n1] = r1.images
    images[:, n1:, n1:] = r2.images
    return Representation(r1.group, r1.ctx, images, label or f"({r1.label})+({r2.label})")


def inflate(psi, Q, G=None, label=None):
    if not isinstance(Q, QuotientGroup):
        raise QuotientMismatch("inflation needs a QuotientGroup")
    if psi.group is not Q.group:
        raise QuotientMismatch("representation is not of this quotient")
    if G is not None and G is not Q.parent:
        raise QuotientMismatch("quotient was built from another group")
    return Representation(Q.parent, psi.ctx, psi.images[Q.proj], label or f"Inf({psi.label})")


def change_basis(rho, P):
    """P^-1 rho P for an invertible code matrix P."""
    Pinv = inverse_codes(rho.ctx, P)
    imgs = rho.ctx.amatmul(rho.ctx.amatmul(Pinv[None], rho.images), P[None])
    return Representation(rho.group, rho.ctx, imgs, rho.label)


def det_power(G, r, ctx=None):
    """The one-dimensional representation g -> det(g)^r of a 2x2 matrix group."""
    ctx = ctx or G.ctx
    p = G.p
    m = G.mats
    det = (m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]) % p
    vals = np.array([pow(int(x), r, p) for x in det], dtype=np.int64)
    if ctx != G.ctx:
        vals = embed(G.ctx, ctx, vals)
    return Representation(G, ctx, vals[:, None, None], f"det^{r}")
