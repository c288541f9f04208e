"""Homogeneous polynomial representations of SL_2(F_p) and GL_2(F_p).

Pol_k is the space of degree-k forms in x, y with g = [[a, b], [c, d]] acting by
P(x, y) -> P(ax + cy, bx + dy).  This is a left action, and Pol_1 is the
natural representation.  The basis is x^k, x^(k-1) y, ..., y^k, which makes
the image of [[1, 1], [0, 1]] the upper unitriangular matrix of binomial
coefficients C(j, i) mod p.  Pol_k(r) is Pol_k twisted by det^r.
"""

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

from .brauer import brauer_character, brauer_table, character_key, enumerate_irreducibles
from .clifford import Check, ghat, inertia_group
from .conway import is_prime
from .cyclotomic import CyclotomicInt
from .errors import KOutOfRange, NotAHomomorphism, NotPrime, ROutOfRange, TableMismatch
from .field import make_field
from .group import make_GL2, make_SL2, p_regular_classes
from .linalg import rank_codes
from .rep import from_generator_images, induce, restrict
from .structure import (
    are_isomorphic,
    composition_factors,
    hom_dim,
    is_irreducible,
    is_semisimple,
    multiplicity_in_semisimple,
)

SUBSTITUTION = "P(x,y) -> P(ax+cy, bx+dy) for g=[[a,b],[c,d]]; basis x^k, x^(k-1)y, ..., y^k"


@lru_cache(maxsize=None)
def sl2(p):
    return make_SL2(p)


@lru_cache(maxsize=None)
def gl2(p):
    return make_GL2(p)


def _check_prime(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def _linear_power(u, v, e, p):
    """Coefficients of (u x + v y)^e on x^e, x^(e-1) y, ..., y^e."""
    out = np.zeros(e + 1, dtype=np.int64)
    for i in range(e + 1):
        # term x^(e-i) y^i
        out[i] = comb(e, i) * pow(u, e - i, p) * pow(v, i, p) % p
    return out


def substitution_matrix(g, k, p, transpose=False):
    """Matrix of P -> P(ax+cy, bx+dy) on the basis x^(k-i) y^i."""
    (a, b), (c, d) = np.asarray(g, dtype=np.int64) % p
    if transpose:
        b, c = c, b
    M = np.zeros((k + 1, k + 1), dtype=np.int64)
    for j in range(k + 1):
        # x^(k-j) y^j -> (ax+cy)^(k-j) (bx+dy)^j
        f = _linear_power(int(a), int(c), k - j, p)
        h = _linear_power(int(b), int(d), j, p)
        M[:, j] = np.convolve(f, h) % p
    return M


def _build(G, k, p, label, twist=None):
    ctx = make_field(p)
    gens = [G.mats[g] for g in G.gens]
    for transpose in (False, True):
        imgs = [substitution_matrix(m, k, p, transpose) for m in gens]
        if twist:
            imgs = [m * pow(_det(g, p), twist, p) % p for m, g in zip(imgs, gens)]
        try:
            rho = from_generator_images(G, ctx, imgs, label=label)
        except NotAHomomorphism:
            continue
        rho.cache["convention"] = "literal" if not transpose else "transposed"
        return rho
    raise NotAHomomorphism("neither substitution convention gives a representation")


def _det(g, p):
    return (int(g[0][0]) * int(g[1][1]) - int(g[0][1]) * int(g[1][0])) % p


def pol_k(p, k, allow_reducible=False):
    _check_prime(p)
    if k < 0 or (k > p - 1 and not allow_reducible):
        raise KOutOfRange(f"k={k} outside 0..{p - 1}")
    return _pol_k(p, k)


@lru_cache(maxsize=None)
def _pol_k(p, k):
    return _build(sl2(p), k, p, f"Pol_{k}")


def pol_k_r(p, k, r, allow_reducible=False):
    _check_prime(p)
    if k < 0 or (k > p - 1 and not allow_reducible):
        raise KOutOfRange(f"k={k} outside 0..{p - 1}")
    if not 0 <= r <= p - 2:
        raise ROutOfRange(f"r={r} outside 0..{p - 2}")
    return _pol_k_r(p, k, r)


@lru_cache(maxsize=None)
def _pol_k_r(p, k, r):
    return _build(gl2(p), k, p, f"Pol_{k}({r})", twist=r)


def unipotent_image(p, k):
    """Image of u = [[1,1],[0,1]] in Pol_k: entries C(j, i) mod p."""
    return substitution_matrix([[1, 1], [0, 1]], k, p)


# -- verification ---------------------------------------------------------------

@dataclass
class Section2Report:
    p: int
    checks: list = field(default_factory=list)
    seed: int = 0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, clause, ok, detail=""):
        self.checks.append(Check(clause, bool(ok), detail))
        return ok

    def to_json_obj(self):
        return {
            "p": self.p,
            "seed": self.seed,
            "conventions": {"substitution": SUBSTITUTION},
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
        }

    def to_text(self):
        lines = [f"SL2/GL2 polynomial representations at p={self.p} (seed {self.seed})", SUBSTITUTION]
        for c in self.checks:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.clause}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines) + "\n"


def _pairwise_distinct(reps):
    keys = [character_key(r) for r in reps]
    chars_ok = len(set(keys)) == len(keys)
    homs_ok = all(hom_dim(a, b) == 0 for i, a in enumerate(reps) for b in reps[i + 1:] if a.degree == b.degree)
    return chars_ok and homs_ok


def verify_section2(p, seed=0, gl2_checks=True, ks=None, allow_reducible=False):
    """Machine check of the Pol_k / Pol_k(r) statements at one prime."""
    _check_prime(p)
    rep = Section2Report(p, seed=seed)
    N, G = sl2(p), gl2(p)
    ks = list(range(p)) if ks is None else list(ks)
    pols = [pol_k(p, k, allow_reducible=allow_reducible) for k in ks]
    rep.add("substitution is a left action", all(r.cache["convention"] == "literal" for r in pols))
    for k, r in zip(ks, pols):
        res = is_irreducible(r, seed=seed)
        detail = "" if res.irreducible else f"invariant subspace of dim {len(res.witness['subspace'])}"
        rep.add(f"Pol_{k} irreducible", res.irreducible, detail)
        U = unipotent_image(p, k)
        rk = rank_codes(r.ctx, (U - np.eye(k + 1, dtype=np.int64)) % p)
        rep.add(f"rank(R_{k + 1} - I) = {k}", rk == k, f"rank {rk}")
        w = r.images[N.gens[1]]
        rep.add(f"w sends x^{k} to a multiple of y^{k}", bool(w[k, 0]) and not w[:k, 0].any())
    if ks != list(range(p)):
        return rep
    rep.add("Pol_k pairwise non-isomorphic", _pairwise_distinct(pols))
    nreg = len(p_regular_classes(N, p))
    rep.add("number of Pol_k = number of p-regular classes of SL2", nreg == p, f"{nreg} classes")
    if not gl2_checks:
        return rep

    twisted = {(k, r): pol_k_r(p, k, r) for k in range(p) for r in range(p - 1)}
    rep.add("all Pol_k(r) irreducible", all(is_irreducible(t, seed=seed).irreducible for t in twisted.values()))
    rep.add("Pol_k(r) pairwise non-isomorphic", _pairwise_distinct(list(twisted.values())))
    greg = len(p_regular_classes(G, p))
    rep.add("number of Pol_k(r) = number of p-regular classes of GL2", greg == p * (p - 1), f"{greg} classes")
    irr = enumerate_irreducibles(G, p, seed=seed)
    found = [any(t.ctx == i.ctx and are_isomorphic(t, i) for t in twisted.values()) for i in irr]
    rep.add("Pol_k(r) exhaust the irreducibles of GL2", all(found) and len(irr) == len(twisted), f"{len(irr)} found")

    for k, s in enumerate(pols):
        inert = inertia_group(s, G, seed=seed)
        rep.add(f"inertia group of Pol_{k} is GL2", inert.group is G)
        ind = induce(s, G)
        m = multiplicity_in_semisimple(s, restrict(ind, N), seed=seed)
        rep.add(f"Res Ind Pol_{k} = {p - 1} Pol_{k}", m == p - 1 and len(composition_factors(restrict(ind, N), seed=seed)) == 1, f"multiplicity {m}")
        exact = all(np.array_equal(restrict(twisted[k, r], N).images, s.images) for r in range(p - 1))
        rep.add(f"Res Pol_{k}(r) = Pol_{k} entrywise", exact)
        cf = composition_factors(ind, seed=seed)
        want = [twisted[k, r] for r in range(p - 1)]
        ok = len(cf) == p - 1 and all(m == 1 for m in cf.multiplicities())
        ok = ok and all(any(are_isomorphic(f, w) for f, _ in cf.factors) for w in want)
        rep.add(f"Ind Pol_{k} = sum of Pol_{k}(r), r=0..{p - 2}", ok and is_semisimple(ind, seed=seed))
        over = ghat(s, G, seed=seed)
        ok = len(over) == p - 1 and all(any(are_isomorphic(o, w) for w in want) for o in over)
        rep.add(f"irreducibles of GL2 over Pol_{k} are the Pol_{k}(r)", ok)
    return rep


def character_identity(p, k, r):
    """Brauer character of Pol_k(r) equals (lift of det)^r times that of Pol_k(0)."""
    chi = brauer_character(pol_k_r(p, k, r))
    chi0 = brauer_character(pol_k_r(p, k, 0))
    det = brauer_character(pol_k_r(p, 0, 1))
    return all(a == b * d**r for a, b, d in zip(chi.values, chi0.values, det.values))


# -- the two reference tables --------------------------------------------------------

S = CyclotomicInt.zeta(8, 1) + CyclotomicInt.zeta(8, 3)  # sqrt(2) i

EXPECTED_SL2_3 = {
    "columns": ["I2", "-I2", "c4(z)"],
    "sizes": [1, 1, 6],
    "orders": [1, 2, 4],
    "rows": {
        "sigma_0": [1, 1, 1],
        "sigma_1": [2, -2, 0],
        "sigma_2": [3, 3, -1],
    },
}

EXPECTED_GL2_3 = {
    "columns": ["I2", "-I2", "c3(1,-1)", "c4(z)", "c4(-z)", "c4(z^2)"],
    "sizes": [1, 1, 12, 6, 6, 6],
    "orders": [1, 2, 2, 8, 8, 4],
    "rows": {
        "theta_0,0": [1, 1, 1, 1, 1, 1],
        "theta_0,1": [1, 1, -1, -1, -1, 1],
        "theta_1,0": [2, -2, 0, S, -S, 0],
        "theta_1,1": [2, -2, 0, -S, S, 0],
        "theta_2,0": [3, 3, 1, -1, -1, -1],
        "theta_2,1": [3, 3, -1, 1, 1, -1],
    },
}


def _class_index(G, mat):
    return int(G.class_of[int(G.lookup(np.asarray([mat], dtype=np.int64))[0])])


def reference_columns(G, p):
    """Class indices in the reference layout.

    SL2(F3): I, -I, the order-4 class.  GL2(F3): I, -I, diag(1,-1), c4(z),
    c4(-z) = -c4(z), c4(z^2), where c4(z) is the class of least representative
    code among the order-8 classes.
    """
    neg = p - 1
    I = [[1, 0], [0, 1]]
    mI = [[neg, 0], [0, neg]]
    if len(G) == p * (p * p - 1):
        o4 = [c for c in G.conjugacy_classes if c.order == 4]
        return [_class_index(G, I), _class_index(G, mI), G.conjugacy_classes.index(o4[0])]
    o8 = sorted((c for c in G.conjugacy_classes if c.order == 8), key=lambda c: int(G.codes[c.rep]))
    z = G.mats[o8[0].rep]
    return [
        _class_index(G, I),
        _class_index(G, mI),
        _class_index(G, [[1, 0], [0, neg]]),
        _class_index(G, z),
        _class_index(G, (-z) % p),
        _class_index(G, (z @ z) % p),
    ]


def reference_table(name, seed=0):
    """The Brauer table of SL2(F3) or GL2(F3) in the reference row/column layout.

    Rows come from tensor-closure enumeration and are named by matching them
    against Pol_k (resp. Pol_k(r)).
    """
    p = 3
    if name.upper() == "SL2":
        G = sl2(p)
        named = {f"sigma_{k}": pol_k(p, k) for k in range(p)}
    else:
        G = gl2(p)
        named = {f"theta_{k},{r}": pol_k_r(p, k, r) for k in range(p) for r in range(p - 1)}
    table = brauer_table(G, p, seed=seed)
    irr = enumerate_irreducibles(G, p, seed=seed)
    cols = reference_columns(G, p)
    pos = [table.rows[0].classes.index(c) for c in cols]
    rows, labels = [], []
    for lab, ref in named.items():
        hit = [i for i, r in enumerate(irr) if r.degree == ref.degree and r.ctx == ref.ctx and are_isomorphic(r, ref)]
        if len(hit) != 1:
            raise TableMismatch(lab, "no unique matching irreducible")
        chi = table.rows[hit[0]]
        rows.append(type(chi)(lab, chi.degree, [chi.classes[i] for i in pos], [chi.values[i] for i in pos], chi.M))
        labels.append(lab)
    expected = EXPECTED_SL2_3 if G is sl2(p) else EXPECTED_GL2_3
    table.class_reps = [table.class_reps[i] for i in pos]
    table._rep_texts = [table._rep_texts[i] for i in pos]
    table.orders = [table.orders[i] for i in pos]
    table.sizes = [table.sizes[i] for i in pos]
    table.class_labels = list(expected["columns"])
    table.rows = rows
    table.row_labels = labels
    table.extra = {"class_rule": "c4(z): order-8 class of least representative code" if G is gl2(p) else "c4(z): the order-4 class"}
    return table


def compare_reference(table, name):
    """Cell-level diff against the expected table; returns a list of mismatches.

    Rational cells must match exactly.  Cells involving sqrt(2) i may differ
    by the Galois twist sqrt(2) i -> -sqrt(2) i applied to the whole table.
    """
    expected = EXPECTED_SL2_3 if name.upper() == "SL2" else EXPECTED_GL2_3
    diffs = []
    if table.sizes != expected["sizes"]:
        diffs.append(("sizes", table.sizes, expected["sizes"]))
    if table.orders != expected["orders"]:
        diffs.append(("orders", table.orders, expected["orders"]))
    got = {lab: row.values for lab, row in zip(table.row_labels, table.rows)}
    if set(got) != set(expected["rows"]):
        diffs.append(("rows", sorted(got), sorted(expected["rows"])))
        return diffs
    twist_needed = False
    for lab, want in expected["rows"].items():
        for j, (g, w) in enumerate(zip(got[lab], want)):
            w = w if isinstance(w, CyclotomicInt) else CyclotomicInt.integer(g.M, w)
            if g == w:
                continue
            if not w.is_rational() and g == w.galois(7):
                twist_needed = True
                continue
            diffs.append((f"{lab}[{expected['columns'][j]}]", g.display(), w.display()))
    if twist_needed:
        # the twist must be global: every irrational cell twisted consistently
        for lab, want in expected["rows"].items():
            for g, w in zip(got[lab], want):
                if isinstance(w, CyclotomicInt) and not w.is_rational() and g != w.galois(7):
                    diffs.append((lab, "inconsistent Galois twist", ""))
    return diffs


def irrational_multiset_matches(table):
    """The pair of degree-2 rows agrees with the expected pair as a multiset."""
    got = sorted(tuple(v.coeffs for v in r.values) for lab, r in zip(table.row_labels, table.rows) if lab.startswith("theta_1"))
    want = sorted(
        tuple((v if isinstance(v, CyclotomicInt) else CyclotomicInt.integer(8, v)).lift(8).coeffs for v in vals)
        for lab, vals in EXPECTED_GL2_3["rows"].items()
        if lab.startswith("theta_1")
    )
    got = sorted(tuple(CyclotomicInt(8, c).coeffs for c in row) for row in got)
    return got == want


def induction_identities(seed=0):
    """Ind sigma_k = theta_k,0 + theta_k,1 for SL2(F3) inside GL2(F3)."""
    p = 3
    out = []
    for k in range(p):
        ind = induce(pol_k(p, k), gl2(p))
        cf = composition_factors(ind, seed=seed)
        want = [pol_k_r(p, k, r) for r in range(p - 1)]
        ok = (
            len(cf) == 2
            and all(m == 1 for m in cf.multiplicities())
            and all(any(are_isomorphic(f, w) for f, _ in cf.factors) for w in want)
            and is_semisimple(ind, seed=seed)
        )
        out.append(Check(f"Ind sigma_{k} = theta_{k},0 + theta_{k},1", ok))
    return out


def emit_paper_tables(seed=0, fmt="text", strict=True):
    """Both reference tables, their diffs, and the induction identities."""
    t1 = reference_table("SL2", seed=seed)
    t2 = reference_table("GL2", seed=seed)
    d1 = compare_reference(t1, "SL2")
    d2 = compare_reference(t2, "GL2")
    ident = induction_identities(seed=seed)
    if strict and (d1 or d2):
        name, diffs = ("SL2", d1) if d1 else ("GL2", d2)
        raise TableMismatch(f"{name}(F3) table", "; ".join(f"{a}: got {b}, expected {c}" for a, b, c in diffs))
    if fmt == "json":
        obj = {
            "tables": [t1.to_json_obj(), t2.to_json_obj()],
            "diffs": {"SL2": [list(map(str, d)) for d in d1], "GL2": [list(map(str, d)) for d in d2]},
            "induction_identities": [c.to_json() for c in ident],
        }
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n", not (d1 or d2) and all(c.passed for c in ident)
    text = t1.to_text() + "\n" + t2.to_text() + "\n"
    text += "\n".join(f"[{'PASS' if c.passed else 'FAIL'}] {c.clause}" for c in ident) + "\n"
    return text, not (d1 or d2) and all(c.passed for c in ident)


def clear_caches():
    """Forget cached groups and representations (used for cold timings)."""
    for f in (sl2, gl2, _pol_k, _pol_k_r):
        f.cache_clear()
