"""Finite matrix groups over prime fields, stored by full enumeration.

Elements are indexed 0..|G|-1 in BFS discovery order (identity at 0).  Each
element also has an integer code (its entries read as base-p digits, most
significant first), so sorting by code is the same as sorting by the
canonical byte key.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from .conway import is_prime
from .errors import BoundExceeded, NotASubgroup, NotNormal, NotPrime, SingularGenerator
from .field import make_field
from .linalg import Matrix, rank_codes

GROUP_BOUND = 20000


@dataclass(frozen=True)
class GroupElement:
    matrix: Matrix

    @property
    def canonical_key(self):
        return self.matrix.data.astype(np.uint8).tobytes()

    def __matmul__(self, other):
        return GroupElement(self.matrix @ other.matrix)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.canonical_key)


@dataclass
class ConjugacyClass:
    rep: int
    members: np.ndarray
    order: int

    @property
    def size(self):
        return len(self.members)


class Group:
    def __init__(self, ctx, mats, gens, parent, layers, name=""):
        self.ctx = ctx
        self.p = ctx.p
        self.mats = mats
        self.degree = mats.shape[1]
        self.gens = list(gens)
        self.parent = parent
        self.layers = layers
        self.name = name
        self.codes = encode(self.p, mats)
        self._sort = np.argsort(self.codes, kind="stable")
        self._sorted = self.codes[self._sort]

    def __len__(self):
        return len(self.mats)

    @property
    def order(self):
        return len(self.mats)

    def __repr__(self):
        return f"Group({self.name or '?'}, order={len(self)}, p={self.p})"

    # -- lookup ---------------------------------------------------------------
    def lookup_codes(self, codes, strict=True):
        codes = np.asarray(codes, dtype=np.int64)
        pos = np.searchsorted(self._sorted, codes)
        pos = np.minimum(pos, len(self._sorted) - 1)
        found = self._sorted[pos] == codes
        idx = np.where(found, self._sort[pos], -1)
        if strict and not found.all():
            raise NotASubgroup("element not in group")
        return idx

    def lookup(self, mats, strict=True):
        mats = np.asarray(mats, dtype=np.int64) % self.p
        return self.lookup_codes(encode(self.p, mats), strict=strict)

    def index_of(self, g):
        if isinstance(g, GroupElement):
            g = g.matrix.data
        elif isinstance(g, Matrix):
            g = g.data
        return int(self.lookup(np.asarray(g)[None])[0])

    def element(self, i):
        return GroupElement(Matrix(self.ctx, self.mats[i]))

    def contains_codes(self, codes):
        return self.lookup_codes(codes, strict=False) >= 0

    @property
    def gen_mats(self):
        return self.mats[self.gens]

    # -- multiplication -------------------------------------------------------
    def mul(self, i, j):
        return int(self.mul_table[i, j])

    def products(self, A, B):
        """Indices of mats[A] @ mats[B] for index arrays A, B (broadcast)."""
        A, B = np.broadcast_arrays(np.asarray(A), np.asarray(B))
        prod = (self.mats[A.ravel()] @ self.mats[B.ravel()]) % self.p
        return self.lookup(prod).reshape(A.shape)

    @cached_property
    def mul_table(self):
        n = len(self)
        if n > 4 * GROUP_BOUND:
            raise BoundExceeded("group too large for a multiplication table")
        table = np.empty((n, n), dtype=np.int64)
        idx = np.arange(n)
        for i in range(n):
            table[i] = self.products(np.full(n, i), idx)
        return table

    @cached_property
    def inverses(self):
        return np.argmax(self.mul_table == 0, axis=1)

    @cached_property
    def element_orders(self):
        n = len(self)
        idx = np.arange(n)
        cur = idx.copy()
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        e = 1
        while (orders == 0).any():
            e += 1
            cur = self.mul_table[cur, idx]
            hit = (cur == 0) & (orders == 0)
            orders[hit] = e
        return orders

    def conj(self, g, x):
        """Index of g x g^-1."""
        return self.mul_table[self.mul_table[g, x], self.inverses[g]]

    # -- structure --------------------------------------------------------------
    @cached_property
    def conjugacy_classes(self):
        """Classes sorted by (element order, size, representative code)."""
        n = len(self)
        label = np.full(n, -1, dtype=np.int64)
        conj_by_gen = [self.conj(g, np.arange(n)) for g in self.gens]
        classes = []
        for start in np.argsort(self.codes):
            if label[start] >= 0:
                continue
            cid = len(classes)
            label[start] = cid
            members = [int(start)]
            frontier = [int(start)]
            while frontier:
                nxt = []
                for table in conj_by_gen:
                    for y in table[frontier]:
                        if label[y] < 0:
                            label[y] = cid
                            members.append(int(y))
                            nxt.append(int(y))
                frontier = nxt
            members = np.array(sorted(members, key=lambda i: self.codes[i]))
            classes.append(members)
        out = [
            ConjugacyClass(rep=int(m[0]), members=m, order=int(self.element_orders[m[0]]))
            for m in classes
        ]
        out.sort(key=lambda c: (c.order, c.size, int(self.codes[c.rep])))
        return out

    @cached_property
    def class_of(self):
        lab = np.empty(len(self), dtype=np.int64)
        for i, c in enumerate(self.conjugacy_classes):
            lab[c.members] = i
        return lab

    def is_abelian(self):
        gm = self.gens
        return all(self.mul(a, b) == self.mul(b, a) for a in gm for b in gm)

    def is_p_group(self, p):
        n = len(self)
        while n % p == 0:
            n //= p
        return n == 1

    def describe(self):
        return {"name": self.name, "order": len(self), "p": self.p, "degree": self.degree}


def encode(p, mats):
    mats = np.asarray(mats, dtype=np.int64)
    flat = mats.reshape(mats.shape[0], -1)
    width = flat.shape[1]
    if p ** width >= 2**62:
        raise BoundExceeded("matrix too large for integer element codes")
    pw = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return flat @ pw


def generate(gens, p=None, bound=GROUP_BOUND, name=""):
    """BFS closure of generator matrices over F_p.

    Each BFS layer is sorted by element code before it is expanded, so the
    element order is a function of the generator list alone.
    """
    if isinstance(gens, np.ndarray) and gens.ndim == 3:
        gen_list = list(gens)
    else:
        gen_list = list(gens)
    if not gen_list:
        raise ValueError("need at least one generator (use the identity for the trivial group)")
    if p is None:
        p = gen_list[0].matrix.ctx.p if isinstance(gen_list[0], GroupElement) else None
    if p is None or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    ctx = make_field(p)
    arrs = []
    for g in gen_list:
        if isinstance(g, GroupElement):
            g = g.matrix.data
        elif isinstance(g, Matrix):
            g = g.data
        a = np.asarray(g, dtype=np.int64) % p
        if a.ndim != 2 or a.shape[0] != a.shape[1] or rank_codes(ctx, a) < a.shape[0]:
            raise SingularGenerator("generators must be invertible square matrices")
        arrs.append(a)
    n = arrs[0].shape[0]
    G = np.stack(arrs)
    ident = np.eye(n, dtype=np.int64)
    mats = [ident]
    seen = {int(encode(p, ident[None])[0]): 0}
    parent = [(-1, -1)]
    layers = [np.array([0])]
    frontier = np.array([0])
    stack = ident[None]
    while frontier.size:
        new_idx, new_mats, new_par = [], [], []
        for a in range(len(G)):
            prods = (G[a][None] @ stack[frontier]) % p
            codes = encode(p, prods)
            for j, c in enumerate(codes.tolist()):
                if c not in seen:
                    seen[c] = -1
                    new_mats.append(prods[j])
                    new_par.append((a, int(frontier[j])))
                    new_idx.append(c)
        if not new_idx:
            break
        order = np.argsort(np.array(new_idx), kind="stable")
        base = len(mats)
        for pos, o in enumerate(order):
            seen[new_idx[o]] = base + pos
            mats.append(new_mats[o])
            parent.append(new_par[o])
        frontier = np.arange(base, len(mats))
        layers.append(frontier)
        stack = np.stack(mats)
        if len(mats) > bound:
            raise BoundExceeded(f"group exceeds bound {bound}")
    mats = np.stack(mats)
    gen_idx = [seen[int(c)] for c in encode(p, G)]
    return Group(ctx, mats, gen_idx, np.array(parent, dtype=np.int64), layers, name=name)


def subgroup(G, gens, name=""):
    """Subgroup of G generated by element indices or matrices."""
    mats = [G.mats[g] if isinstance(g, (int, np.integer)) else g for g in gens]
    if not mats:
        mats = [G.mats[0]]
    H = generate(mats, p=G.p, name=name)
    if H.degree != G.degree or not G.contains_codes(H.codes).all():
        raise NotASubgroup("generators do not lie in G")
    return H


def check_subgroup(G, H):
    if H.p != G.p or H.degree != G.degree or not G.contains_codes(H.codes).all():
        raise NotASubgroup(f"{H.name or 'H'} is not a subgroup of {G.name or 'G'}")
    return G.lookup_codes(H.codes)


def is_normal(G, N):
    check_subgroup(G, N)
    for g in G.gens:
        gm = G.mats[g]
        ginv = G.mats[G.inverses[g]]
        conj = (gm[None] @ N.gen_mats @ ginv[None]) % G.p
        if not N.contains_codes(encode(G.p, conj)).all():
            return False
    return True


def p_regular_classes(G, p):
    return [c for c in G.conjugacy_classes if gcd(c.order, p) == 1]


@dataclass
class CosetData:
    """Left cosets g H of H in G.

    ``coset_of[g]`` is the coset number of element g and ``h_of[g]`` is the
    G-index of the unique h in H with g = reps[coset_of[g]] * h.
    """

    group: Group
    subgroup: Group
    reps: list
    coset_of: np.ndarray
    h_of: np.ndarray
    sub_in_group: np.ndarray = field(repr=False)

    @property
    def index(self):
        return len(self.reps)

    @property
    def member_to_rep(self):
        return {int(g): int(self.reps[c]) for g, c in enumerate(self.coset_of)}

    def rep_elements(self):
        return [self.group.element(r) for r in self.reps]


def coset_reps(G, H):
    """Left coset representatives; identity first, then greedy in code order."""
    sub = check_subgroup(G, H)
    n = len(G)
    coset_of = np.full(n, -1, dtype=np.int64)
    h_of = np.full(n, -1, dtype=np.int64)
    reps = []
    table = G.mul_table
    for g in [0] + [int(i) for i in np.argsort(G.codes) if i != 0]:
        if coset_of[g] >= 0:
            continue
        members = table[g, sub]
        coset_of[members] = len(reps)
        h_of[members] = sub
        reps.append(g)
    return CosetData(G, H, reps, coset_of, h_of, sub)


@dataclass
class QuotientGroup:
    """G/N realised as the permutation group of G acting on the cosets of N."""

    parent: Group
    normal: Group
    cosets: CosetData
    group: Group
    proj: np.ndarray

    @property
    def table(self):
        return self.group.mul_table

    @property
    def order(self):
        return len(self.group)


def permutation_matrix(perm):
    m = len(perm)
    P = np.zeros((m, m), dtype=np.int64)
    P[list(perm), list(range(m))] = 1
    return P


def quotient(G, N):
    if not is_normal(G, N):
        raise NotNormal(f"{N.name or 'N'} is not normal in {G.name or 'G'}")
    cos = coset_reps(G, N)
    m = cos.index
    reps = np.array(cos.reps)
    perms = G.mul_table[:, reps]
    perms = cos.coset_of[perms]
    gens = [permutation_matrix(perms[g]) for g in G.gens]
    Q = generate(gens, p=G.p, name=f"{G.name}/{N.name}")
    P = np.zeros((len(G), m, m), dtype=np.int64)
    P[np.arange(len(G))[:, None], perms, np.arange(m)[None, :]] = 1
    proj = Q.lookup(P)
    return QuotientGroup(G, N, cos, Q, proj)


def is_cyclic(G):
    return bool((G.element_orders == len(G)).any())


# -- named groups ---------------------------------------------------------------

def make_SL2(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    u = [[1, 1], [0, 1]]
    w = [[0, p - 1], [1, 0]]
    return generate([u, w], p=p, name=f"SL2(F{p})")


def make_GL2(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    ctx = make_field(p)
    g = ctx.primitive_code
    u = [[1, 1], [0, 1]]
    w = [[0, p - 1], [1, 0]]
    d = [[g, 0], [0, 1]]
    return generate([u, w, d], p=p, name=f"GL2(F{p})")


def make_from_permutations(perms, n, p, name=""):
    """Permutation group on n points as 0/1 matrices over F_p."""
    mats = []
    for perm in perms:
        perm = list(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation of {n} points: {perm}")
        mats.append(permutation_matrix(perm))
    if not mats:
        mats = [np.eye(n, dtype=np.int64)]
    return generate(mats, p=p, name=name)


def cycles_to_perm(cycles, n):
    perm = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    return perm


def named_group(name, p, degree=None):
    """Named groups of the test suite.

    ``degree`` selects the number of points for permutation groups so that a
    normal subgroup is built inside its ambient group (S3 inside C3xS3 acts
    on points 3..5 of 6).
    """
    key = name.upper().replace("×", "X")
    if key == "SL2":
        return make_SL2(p)
    if key == "GL2":
        return make_GL2(p)
    perm_groups = {
        "S4": (4, [[(0, 1)], [(0, 1, 2, 3)]]),
        "A4": (4, [[(0, 1, 2)], [(1, 2, 3)]]),
        "V4": (4, [[(0, 1), (2, 3)], [(0, 2), (1, 3)]]),
        "D8": (4, [[(0, 1, 2, 3)], [(1, 3)]]),
        "C4": (4, [[(0, 1, 2, 3)]]),
        "S3": (3, [[(0, 1)], [(0, 1, 2)]]),
        "C3": (3, [[(0, 1, 2)]]),
        "C2": (2, [[(0, 1)]]),
        "C3XS3": (6, [[(0, 1, 2)], [(3, 4)], [(3, 4, 5)]]),
    }
    if key == "TRIVIAL":
        return generate([np.eye(degree or 1, dtype=np.int64)], p=p, name="1")
    if key not in perm_groups:
        raise ValueError(f"unknown group {name!r}")
    n, gens = perm_groups[key]
    offset = 0
    if degree is not None and degree != n:
        if key == "S3" and degree == 6:
            offset = 3
        elif degree < n:
            raise ValueError(f"{name} cannot act on {degree} points")
    total = degree or n
    perms = [
        cycles_to_perm([tuple(x + offset for x in cyc) for cyc in cycles], total) for cycles in gens
    ]
    return make_from_permutations(perms, total, p, name=name)
