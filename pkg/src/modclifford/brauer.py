"""Brauer characters and modular character tables.

Eigenvalue lifting convention: in F_q with q = p^K the Conway primitive
element is sent to exp(2 pi i / (q - 1)).  Conway moduli are norm-compatible,
so the choice is coherent across the whole tower of fields, and an eigenvalue
primitive^((q-1) j / m) lifts to zeta_m^j whatever K is used.
"""

import csv
import io
import json
import math
import struct
from dataclasses import dataclass

import numpy as np

from . import polyq
from .cyclotomic import CyclotomicInt
from .errors import ClosureStalled, NotSemisimple, OrderDoesNotDivide
from .field import embed, make_field, poly_to_text
from .group import p_regular_classes
from .linalg import rank_codes
from .rep import dual, natural, rebase, tensor, trivial

LIFT_CONVENTION = "Conway primitive of F_q -> exp(2*pi*i/(q-1))"
CLOSURE_DEPTH = 12


def _mult_order(p, m):
    if m == 1:
        return 1
    e, x = 1, p % m
    while x != 1:
        x = x * p % m
        e += 1
    return e


def conductor(G, p):
    """lcm of the orders of the p-regular elements of G."""
    return math.lcm(*(c.order for c in p_regular_classes(G, p)))


def eigen_field(ctx, m):
    """Smallest field over ctx that contains the m-th roots of unity."""
    K = math.lcm(ctx.k, _mult_order(ctx.p, m))
    return make_field(ctx.p, K, compute_conway=True)


def _root_multiplicity(ctx, f, lam):
    mult = 0
    while len(f) > 1:
        q, r = polyq.divmod_(ctx, f, [ctx.neg(lam), 1])
        if r:
            break
        f = q
        mult += 1
    return mult


def lift_eigenvalues(ctx, A, m):
    """Eigenvalues of A (with A^m = 1, p not dividing m) as a multiset of roots of unity.

    Returns a list of (j, multiplicity) with the eigenvalue lifting to zeta_m^j.
    """
    A = np.asarray(getattr(A, "data", A), dtype=np.int64)
    if m % ctx.p == 0:
        raise NotSemisimple(f"element order {m} divisible by p={ctx.p}")
    K = eigen_field(ctx, m)
    if (K.q - 1) % m:
        raise OrderDoesNotDivide(f"{m} does not divide {K.q - 1}")
    B = embed(ctx, K, A) if K != ctx else A
    n = B.shape[0]
    cp = polyq.charpoly(K, B)
    step = (K.q - 1) // m
    out = []
    total = 0
    eye = np.eye(n, dtype=np.int64)
    for j in range(m):
        lam = K.pow(K.primitive_code, step * j)
        if _root_multiplicity(K, cp, lam) == 0:
            continue
        d = n - rank_codes(K, K.asub(B, eye * lam))
        if d:
            out.append((j, d))
            total += d
    if total != n:
        raise NotSemisimple(f"eigenspaces span {total} of {n} dimensions")
    return out


@dataclass
class BrauerCharacter:
    rep_label: str
    degree: int
    classes: list  # class indices into group.conjugacy_classes
    values: list  # CyclotomicInt per class
    M: int

    def value_map(self):
        return dict(zip(self.classes, self.values))

    def __mul__(self, other):
        return BrauerCharacter(
            f"{self.rep_label}*{other.rep_label}",
            self.degree * other.degree,
            self.classes,
            [a * b for a, b in zip(self.values, other.values)],
            self.M,
        )

    def __add__(self, other):
        return BrauerCharacter(
            f"{self.rep_label}+{other.rep_label}",
            self.degree + other.degree,
            self.classes,
            [a + b for a, b in zip(self.values, other.values)],
            self.M,
        )

    def __eq__(self, other):
        return (
            isinstance(other, BrauerCharacter)
            and self.classes == other.classes
            and all(a == b for a, b in zip(self.values, other.values))
        )


def brauer_character(rho, spot_check=3):
    """Brauer character on the p-regular classes of rho's group."""
    if "brauer" in rho.cache:
        return rho.cache["brauer"]
    G = rho.group
    ctx = rho.ctx
    p = ctx.p
    M = conductor(G, p)
    classes = []
    values = []
    all_classes = G.conjugacy_classes
    for ci, c in enumerate(all_classes):
        if math.gcd(c.order, p) != 1:
            continue
        val = _class_value(rho, c.rep, c.order, M)
        for extra in c.members[1:spot_check]:
            if _class_value(rho, int(extra), c.order, M) != val:
                raise AssertionError("Brauer character is not a class function")
        classes.append(ci)
        values.append(val)
    chi = BrauerCharacter(rho.label, rho.degree, classes, values, M)
    rho.cache["brauer"] = chi
    return chi


def _class_value(rho, g, m, M):
    val = CyclotomicInt(M)
    for j, d in lift_eigenvalues(rho.ctx, rho.images[g], m):
        val = val + d * CyclotomicInt.zeta(M, j * (M // m))
    return val


def character_key(obj):
    """Canonical bytes for a Brauer character (or a representation's).

    Degree, conductor and the coefficient vectors in class order.  Larger
    coefficients sort first, which puts the trivial character at the front.
    """
    chi = obj if isinstance(obj, BrauerCharacter) else brauer_character(obj)
    parts = [struct.pack(">II", chi.degree, chi.M)]
    for v in chi.values:
        parts.append(b"".join(struct.pack(">I", (1 << 31) - c) for c in v.coeffs))
    return b"".join(parts)


# -- enumeration ------------------------------------------------------------------

def enumerate_irreducibles(G, p=None, faithful=None, seed=0, depth=CLOSURE_DEPTH):
    """All irreducible representations of G over a splitting field, by tensor closure.

    Starting from the trivial module and the composition factors of a faithful
    module and its dual, tensor every known irreducible with those seeds until the count
    reaches the number of p-regular classes.  Escalates the field whenever an
    irreducible turns out not to be absolutely irreducible.
    """
    from .field import LADDER, extension

    key = ("irreducibles", seed)
    if key in G.__dict__.setdefault("_cache", {}):
        return G._cache[key]
    p = p or G.p
    target = len(p_regular_classes(G, p))
    base = faithful.ctx if faithful is not None else make_field(p)
    faithful = faithful if faithful is not None else natural(G, base)
    for k in LADDER:
        if k % base.k:
            continue
        ctx = extension(base, k)
        found = _closure(G, rebase(faithful, ctx), target, seed, depth)
        if found is not None:
            for i, r in enumerate(found):
                r.label = f"irr{i}"
            G._cache[key] = found
            return found
    raise ClosureStalled(f"tensor closure did not reach {target} irreducibles")


def _closure(G, faithful, target, seed, depth):
    from .structure import are_isomorphic, composition_factors, end_dim

    ctx = faithful.ctx
    found = []
    index = {}

    def add(r):
        k = character_key(r)
        for other in index.get(k, []):
            if are_isomorphic(other, r):
                return False
        if end_dim(r) != 1:
            raise _Escalate
        index.setdefault(k, []).append(r)
        found.append(r)
        return True

    try:
        add(trivial(G, ctx))
        seeds = []
        for module in (faithful, dual(faithful)):
            for f, _ in composition_factors(module, seed=seed, order=False).factors:
                if add(f):
                    seeds.append(f)
        frontier = list(found)
        for _ in range(depth):
            if len(found) >= target:
                break
            new = []
            for a in frontier:
                for s in seeds:
                    for f, _ in composition_factors(tensor(a, s), seed=seed, order=False).factors:
                        if add(f):
                            new.append(f)
            if not new:
                break
            frontier = new
    except _Escalate:
        return None
    if len(found) != target:
        if len(found) < target:
            raise ClosureStalled(f"found {len(found)} of {target} irreducibles")
        raise AssertionError("more irreducibles than p-regular classes")
    for r in found:
        r.cache["ordered"] = True
    found.sort(key=lambda r: (r.degree, character_key(r)))
    return found


class _Escalate(Exception):
    pass


# -- tables -----------------------------------------------------------------------

@dataclass
class BrauerTable:
    group: str
    p: int
    field: str
    class_reps: list  # group indices
    class_labels: list
    orders: list
    sizes: list
    rows: list  # BrauerCharacter
    row_labels: list
    M: int
    convention: str = LIFT_CONVENTION
    seed: int = 0
    extra: dict = None

    def value_matrix(self):
        return [[v.to_int() if v.is_rational() else v for v in r.values] for r in self.rows]

    def to_json_obj(self):
        return {
            "schema": "brauer-table/1",
            "group": self.group,
            "p": self.p,
            "field": self.field,
            "seed": self.seed,
            "conventions": {
                "lift": self.convention,
                "conductor": self.M,
                "class_order": "element order, class size, representative code",
                **(self.extra or {}),
            },
            "classes": [
                {"label": lab, "rep": rep, "order": o, "size": s}
                for lab, rep, o, s in zip(self.class_labels, self.rep_texts(), self.orders, self.sizes)
            ],
            "rows": [
                {"label": lab, "degree": r.degree, "values": [v.to_json() for v in r.values]}
                for lab, r in zip(self.row_labels, self.rows)
            ],
        }

    def rep_texts(self):
        return self._rep_texts if hasattr(self, "_rep_texts") else [str(r) for r in self.class_reps]

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=False, sort_keys=False) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + self.class_labels)
        w.writerow(["order"] + self.orders)
        w.writerow(["size"] + self.sizes)
        for lab, r in zip(self.row_labels, self.rows):
            w.writerow([lab] + [v.display() for v in r.values])
        return buf.getvalue()

    def to_text(self):
        head = [
            f"Brauer character table of {self.group} at p={self.p}",
            f"field: {self.field}",
            f"lift: {self.convention}; conductor M={self.M}; seed={self.seed}",
        ]
        for k, v in (self.extra or {}).items():
            head.append(f"{k}: {v}")
        cells = [["", *self.class_labels], ["order", *map(str, self.orders)], ["size", *map(str, self.sizes)]]
        cells += [[lab, *(v.display() for v in r.values)] for lab, r in zip(self.row_labels, self.rows)]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
        lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
        lines.insert(3, "-" * len(lines[0]))
        return "\n".join(head + [""] + lines) + "\n"

    def render(self, fmt="text"):
        return {"text": self.to_text, "json": self.to_json, "csv": self.to_csv}[fmt]()


def brauer_table(G, p=None, seed=0, irreducibles=None):
    p = p or G.p
    irr = irreducibles if irreducibles is not None else enumerate_irreducibles(G, p, seed=seed)
    chars = [brauer_character(r) for r in irr]
    cls = [G.conjugacy_classes[i] for i in chars[0].classes] if chars else []
    table = BrauerTable(
        group=G.name,
        p=p,
        field=field_text(irr[0].ctx) if irr else "",
        class_reps=[c.rep for c in cls],
        class_labels=[f"c{i}" for i in range(len(cls))],
        orders=[c.order for c in cls],
        sizes=[c.size for c in cls],
        rows=chars,
        row_labels=[f"chi{i}" for i in range(len(chars))],
        M=chars[0].M if chars else 1,
        seed=seed,
    )
    table._rep_texts = [_matrix_text(G, c.rep) for c in cls]
    return table


def field_text(ctx):
    if ctx.k == 1:
        return f"F_{ctx.p}"
    return f"F_{ctx.q} = F_{ctx.p}[t]/({poly_to_text(ctx.modulus)})"


def _matrix_text(G, i):
    m = G.mats[i]
    return "[" + ",".join("[" + ",".join(str(int(x)) for x in row) + "]" for row in m) + "]"
