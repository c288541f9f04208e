"""Hom-spaces, the Meataxe, and composition factors.

Irreducibility is decided with the Holt-Rees form of the Meataxe: pick a
random element A of the group algebra, factor its characteristic polynomial,
and for an irreducible factor f look at ker f(A).  A vector there that spins
to a proper subspace proves reducibility.  If dim ker f(A) = deg f, the whole
kernel is one F[A]-orbit, so one vector suffices, and Norton's dual test on
the transposed module completes an irreducibility certificate.
"""

import random
from dataclasses import dataclass, field

import numpy as np

from . import polyq
from .errors import (
    ContextMismatch,
    InconclusiveAfterBudget,
    NotAbsolutelyIrreducible,
    SplittingFieldNotFoundInLadder,
)
from .field import LADDER, extension
from .linalg import Matrix, inverse_codes, kernel_codes, rref_codes, spin_codes
from .rep import Representation, _same_ctx, _same_group, rebase

MEATAXE_BUDGET = 200
MAX_WORD = 8


@dataclass
class HomSpace:
    src: Representation
    dst: Representation
    basis: list

    @property
    def dim(self):
        return len(self.basis)


@dataclass
class CompositionFactors:
    factors: list  # [(Representation, multiplicity)]
    total_degree: int

    def multiplicities(self):
        return [m for _, m in self.factors]

    def degrees(self):
        return [r.degree for r, _ in self.factors]

    def __len__(self):
        return len(self.factors)

    def multiplicity_of(self, rho, seed=0):
        for f, m in self.factors:
            if f.degree == rho.degree and are_isomorphic(f, rho, seed=seed):
                return m
        return 0


@dataclass
class IrreducibilityResult:
    irreducible: bool
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.irreducible


# -- Hom-spaces ---------------------------------------------------------------

def _cyclic_vector(rho):
    gens = rho.gen_images
    n = rho.degree
    for j in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[j] = 1
        span, vecs, tree = spin_codes(rho.ctx, gens, [v])
        if span.dim == n:
            return vecs, tree
    rng = np.random.default_rng(12345)
    for _ in range(8):
        v = rng.integers(0, rho.ctx.q, n)
        span, vecs, tree = spin_codes(rho.ctx, gens, [v])
        if span.dim == n:
            return vecs, tree
    return None


def _hom_cyclic(r1, r2, vecs, tree):
    """Hom(r1, r2) for cyclic r1, solving for the image of the cyclic vector."""
    ctx = r1.ctx
    n1, n2 = r1.degree, r2.degree
    g1, g2 = r1.gen_images, r2.gen_images
    B = np.stack(vecs, axis=1)  # columns b_j
    Binv = inverse_codes(ctx, B)
    W = np.zeros((n1, n2, n2), dtype=np.int64)
    W[0] = np.eye(n2, dtype=np.int64)
    for j in range(1, n1):
        i, a = tree[j]
        W[j] = ctx.amatmul(g2[a], W[i])
    Wflat = W.reshape(n1, n2 * n2)
    blocks = []
    for a in range(len(g1)):
        C = ctx.amatmul(Binv, ctx.amatmul(g1[a], B))  # g1 b_j = sum_i C[i,j] b_i
        lhs = ctx.amatmul(C.T, Wflat).reshape(n1, n2, n2)
        rhs = ctx.amatmul(g2[a][None], W)
        blocks.append(ctx.asub(lhs, rhs).reshape(n1 * n2, n2))
    system = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, n2), dtype=np.int64)
    sols = kernel_codes(ctx, system)
    out = []
    for m in sols:
        cols = ctx.amatmul(W, m[None, :, None])[..., 0]  # (n1, n2): T b_j
        T = ctx.amatmul(cols.T, Binv)
        out.append(T)
    return out


def _hom_kron(r1, r2):
    ctx = r1.ctx
    n1, n2 = r1.degree, r2.degree
    eye1 = np.eye(n1, dtype=np.int64)
    eye2 = np.eye(n2, dtype=np.int64)
    from .linalg import kron_codes

    rows = []
    for A, B in zip(r1.gen_images, r2.gen_images):
        # vec_row(T A) = (I (x) A^T) vec T ; vec_row(B T) = (B (x) I) vec T
        rows.append(ctx.asub(kron_codes(ctx, eye2, A.T), kron_codes(ctx, B, eye1)))
    system = np.concatenate(rows, axis=0) if rows else np.zeros((0, n1 * n2), dtype=np.int64)
    return [v.reshape(n2, n1) for v in kernel_codes(ctx, system)]


def hom_space(r1, r2):
    """All T with T r1(g) = r2(g) T, as a canonical echelon basis."""
    _same_group(r1, r2)
    _same_ctx(r1, r2)
    key = ("hom", id(r2))
    if key in r1.cache and r1.cache[key][0] is r2:
        return r1.cache[key][1]
    cyc = r1.cache.get("cyclic")
    if cyc is None:
        cyc = _cyclic_vector(r1) or False
        r1.cache["cyclic"] = cyc
    mats = _hom_cyclic(r1, r2, *cyc) if cyc else _hom_kron(r1, r2)
    n1, n2 = r1.degree, r2.degree
    if mats:
        flat = np.stack([m.reshape(-1) for m in mats])
        R, rank, _ = rref_codes(r1.ctx, flat)
        basis = [Matrix(r1.ctx, R[i].reshape(n2, n1)) for i in range(rank)]
    else:
        basis = []
    hs = HomSpace(r1, r2, basis)
    r1.cache[key] = (r2, hs)
    return hs


def hom_dim(r1, r2):
    return hom_space(r1, r2).dim


def end_dim(rho):
    return hom_dim(rho, rho)


def are_isomorphic(s1, s2, seed=0):
    """Isomorphism test for irreducible representations (Schur)."""
    if s1.degree != s2.degree:
        return False
    return hom_dim(s1, s2) > 0


# -- Meataxe --------------------------------------------------------------------

def _random_element(ctx, gens, rng):
    n = gens.shape[1]
    s = len(gens)
    out = np.zeros((n, n), dtype=np.int64)
    words = []
    for _ in range(rng.randint(1, 4)):
        length = rng.randint(1, MAX_WORD)
        word = [rng.randrange(s) for _ in range(length)]
        M = gens[word[0]]
        for a in word[1:]:
            M = ctx.amatmul(M, gens[a])
        c = rng.randrange(1, ctx.q)
        out = ctx.aadd(out, ctx.amul(M, c))
        words.append((c, word))
    return out, words


def is_irreducible(rho, seed=0, budget=None):
    """Meataxe verdict with a witness.

    The witness is ``{"subspace": rows}`` (an invariant subspace in echelon
    form) for a reducible module, or the certificate parameters for an
    irreducible one.  Raises InconclusiveAfterBudget rather than guess.
    """
    budget = budget or MEATAXE_BUDGET
    key = ("irr", seed)
    if key in rho.cache:
        return rho.cache[key]
    ctx = rho.ctx
    n = rho.degree
    if n == 1:
        res = IrreducibilityResult(True, {"reason": "dimension 1"})
        rho.cache[key] = res
        return res
    gens = rho.gen_images
    gens_t = np.transpose(gens, (0, 2, 1)).copy()
    if len(gens) == 0:
        gens = np.eye(n, dtype=np.int64)[None]
        gens_t = gens
    rng = random.Random(seed)
    for attempt in range(budget):
        A, words = _random_element(ctx, gens, rng)
        cp = polyq.charpoly(ctx, A)
        for f in polyq.irreducible_factors(ctx, cp, seed=rng.randrange(2**31)):
            B = polyq.evaluate_matrix(ctx, list(f), A)
            K = kernel_codes(ctx, B)
            span, _, _ = spin_codes(ctx, gens, [K[0]])
            if span.dim < n:
                res = IrreducibilityResult(False, {"subspace": span.rows, "attempt": attempt})
                rho.cache[key] = res
                return res
            if len(K) == len(f) - 1:
                Kt = kernel_codes(ctx, B.T)
                span_t, _, _ = spin_codes(ctx, gens_t, [Kt[0]])
                if span_t.dim < n:
                    sub = kernel_codes(ctx, span_t.rows)
                    sub, _, _ = rref_codes(ctx, sub)
                    res = IrreducibilityResult(False, {"subspace": sub, "attempt": attempt, "dual": True})
                    rho.cache[key] = res
                    return res
                res = IrreducibilityResult(
                    True,
                    {"attempt": attempt, "factor": list(f), "nullity": len(K), "words": words},
                )
                rho.cache[key] = res
                return res
    raise InconclusiveAfterBudget(f"no certificate after {budget} attempts for {rho.label}")


def submodule_quotient(rho, rows):
    """Actions on an invariant subspace (given by echelon rows) and on the quotient."""
    ctx = rho.ctx
    n = rho.degree
    R, d, pivots = rref_codes(ctx, rows)
    R = R[:d]
    comp = [j for j in range(n) if j not in set(pivots)]
    P = np.zeros((n, n), dtype=np.int64)
    P[:, :d] = R.T
    for c, j in enumerate(comp):
        P[j, d + c] = 1
    Pinv = inverse_codes(ctx, P)
    imgs = ctx.amatmul(ctx.amatmul(Pinv[None], rho.images), P[None])
    if imgs[:, d:, :d].any():
        raise AssertionError("subspace is not invariant")
    sub = Representation(rho.group, ctx, imgs[:, :d, :d].copy(), f"sub({rho.label})")
    quo = Representation(rho.group, ctx, imgs[:, d:, d:].copy(), f"quo({rho.label})")
    return sub, quo


def _irreducible_pieces(rho, seed):
    res = is_irreducible(rho, seed=seed)
    if res.irreducible:
        return [rho]
    sub, quo = submodule_quotient(rho, res.witness["subspace"])
    return _irreducible_pieces(sub, seed) + _irreducible_pieces(quo, seed)


def composition_factors(rho, seed=0, order=True):
    """Irreducible factors with multiplicities, grouped up to isomorphism.

    Output order is (degree, Brauer character key) when ``order`` is set.
    """
    key = ("cf", seed, order)
    if key in rho.cache:
        return rho.cache[key]
    classes = []
    for piece in _irreducible_pieces(rho, seed):
        for entry in classes:
            if are_isomorphic(entry[0], piece):
                entry[1] += 1
                break
        else:
            classes.append([piece, 1])
    if order:
        from .brauer import character_key

        classes.sort(key=lambda e: (e[0].degree, character_key(e[0])))
    out = CompositionFactors([(r, m) for r, m in classes], rho.degree)
    assert sum(m * r.degree for r, m in out.factors) == rho.degree
    rho.cache[key] = out
    return out


def is_absolutely_irreducible(rho, seed=0):
    return is_irreducible(rho, seed=seed).irreducible and end_dim(rho) == 1


def multiplicity_in_semisimple(sigma, M, check=True, seed=0):
    """dim Hom(sigma, M): the multiplicity of sigma when M is semisimple."""
    if not is_absolutely_irreducible(sigma, seed=seed):
        raise NotAbsolutelyIrreducible(f"{sigma.label} is not absolutely irreducible")
    if check and not is_semisimple(M, seed=seed):
        raise AssertionError(f"{M.label} is not semisimple")
    return hom_dim(sigma, M)


def socle_degree(M, seed=0):
    """Degree of the socle: sum over simple S of dim Hom(S, M) / dim End(S) * deg S."""
    total = 0
    for S, _ in composition_factors(M, seed=seed).factors:
        total += hom_dim(S, M) // end_dim(S) * S.degree
    return total


def is_semisimple(M, seed=0):
    return socle_degree(M, seed=seed) == M.degree


def ensure_splitting_field(reps, seed=0, ladder=LADDER):
    """Smallest ladder field over which every composition factor is absolutely irreducible.

    Returns (ctx, rebased reps).
    """
    reps = list(reps)
    if not reps:
        raise ValueError("no representations given")
    base = reps[0].ctx
    for r in reps:
        if r.ctx.p != base.p:
            raise ContextMismatch("different characteristics")
    k0 = max(r.ctx.k for r in reps)
    for k in ladder:
        if k % k0 or any(k % r.ctx.k for r in reps):
            continue
        ctx = extension(base, k)
        rebased = [rebase(r, ctx) for r in reps]
        if all(
            end_dim(f) == 1
            for r in rebased
            for f, _ in composition_factors(r, seed=seed, order=False).factors
        ):
            return ctx, rebased
    raise SplittingFieldNotFoundInLadder("no splitting field in the ladder")
