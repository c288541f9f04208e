"""Finite fields F_{p^k} with Conway-polynomial conventions.

An element is stored as an integer *code* ``sum(a_i * p**i)`` where ``a_i``
is its coordinate on ``t**i`` in the power basis of the modulus.  Scalar
helpers on :class:`FieldCtx` work on codes; the ``a*`` helpers work on numpy
arrays of codes and are what the linear algebra layer uses.
:class:`FieldElement` is a thin user-facing wrapper.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .conway import conway_polynomial, is_prime, is_primitive, prime_factors
from .errors import (
    FieldTooLarge,
    IncompatibleFields,
    NotPrime,
    OrderDoesNotDivide,
    ReducibleModulus,
    ZeroElement,
)

LOG_TABLE_BOUND = 2**20
FIELD_BOUND = 2**20


def poly_to_text(coeffs, var="t"):
    """``(2, 2, 1)`` -> ``"2+2*t+1*t^2"``."""
    terms = []
    for i, c in enumerate(coeffs):
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*{var}")
        else:
            terms.append(f"{c}*{var}^{i}")
    return "+".join(terms)


def text_to_poly(text, var="t"):
    coeffs = {}
    for term in text.replace(" ", "").split("+"):
        if not term:
            continue
        if var not in term:
            coeffs[0] = coeffs.get(0, 0) + int(term)
            continue
        c, _, rest = term.partition(f"*{var}") if "*" in term else ("1", "", term[len(var):])
        e = int(rest[1:]) if rest.startswith("^") else 1
        coeffs[e] = coeffs.get(e, 0) + int(c)
    n = max(coeffs) + 1 if coeffs else 1
    return tuple(coeffs.get(i, 0) for i in range(n))


class FieldCtx:
    """Arithmetic context for F_{p^k}.  Immutable after construction."""

    def __init__(self, p, k, modulus, conway=False):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(int(c) % p for c in modulus)
        self.is_conway = conway
        self._pw = p ** np.arange(k, dtype=np.int64)
        self._mod_low = np.array(self.modulus[:k], dtype=np.int64)
        if not is_primitive(self.modulus, p):
            if not _is_irreducible(self.modulus, p):
                raise ReducibleModulus(poly_to_text(self.modulus))
        self.exp_table = None
        self.log_table = None
        self.primitive_code = self._find_primitive()
        if self.q <= LOG_TABLE_BOUND:
            self._build_tables()
        self.key = (p, k, self.modulus)
        self._embed_cache = {}

    # -- construction helpers ------------------------------------------------
    def _find_primitive(self):
        if self.k == 1:
            for g in range(1, self.p):
                if self._order_is_full(g):
                    return g
        # the root t of a primitive modulus (e.g. a Conway polynomial)
        if self._order_is_full(self.p):
            return self.p
        for c in range(2, self.q):
            if self._order_is_full(c):
                return c
        raise AssertionError("no primitive element")

    def _order_is_full(self, c):
        n = self.q - 1
        if self.slow_pow(c, n) != 1:
            return False
        return all(self.slow_pow(c, n // r) != 1 for r in prime_factors(n)) if n > 1 else True

    def _build_tables(self):
        n = self.q - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        g = self.primitive_code
        for e in range(n):
            exp[e] = x
            log[x] = e
            x = self.slow_mul(x, g)
        self.exp_table = exp
        self.log_table = log

    # -- digit conversion --------------------------------------------------------
    def digits(self, c):
        out = []
        for _ in range(self.k):
            out.append(c % self.p)
            c //= self.p
        return out

    def from_digits(self, ds):
        c = 0
        for d in reversed(list(ds)):
            c = c * self.p + int(d) % self.p
        return c

    def adigits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def afrom_digits(self, d):
        return (d % self.p * self._pw).sum(axis=-1)

    # -- scalar arithmetic on codes ----------------------------------------------
    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self.from_digits(-d for d in self.digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def slow_mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for d in range(2 * self.k - 2, self.k - 1, -1):
            c = prod[d] % self.p
            if c:
                for i in range(self.k):
                    prod[d - self.k + i] -= c * self.modulus[i]
        return self.from_digits(prod[: self.k])

    def slow_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self.slow_mul(result, a)
            a = self.slow_mul(a, a)
            e >>= 1
        return result

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self.log_table is not None:
            return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)])
        return self.slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(int(a), self.p - 2, self.p)
        if self.log_table is not None:
            return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])
        return self.slow_pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.log_table is not None:
            return int(self.exp_table[(self.log_table[a] * e) % (self.q - 1)])
        return self.slow_pow(a, e)

    def from_int(self, n):
        return n % self.p

    # -- array arithmetic ----------------------------------------------------------
    def aadd(self, a, b):
        if self.k == 1:
            return (np.asarray(a) + b) % self.p
        return self.afrom_digits(self.adigits(a) + self.adigits(b))

    def asub(self, a, b):
        if self.k == 1:
            return (np.asarray(a) - b) % self.p
        return self.afrom_digits(self.adigits(a) - self.adigits(b))

    def aneg(self, a):
        if self.k == 1:
            return (-np.asarray(a)) % self.p
        return self.afrom_digits(-self.adigits(a))

    def amul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return a * b % self.p
        if self.log_table is not None:
            la, lb = self.log_table[a], self.log_table[b]
            out = self.exp_table[(la + lb) % (self.q - 1)]
            return np.where((a == 0) | (b == 0), 0, out)
        da, db = self.adigits(a), self.adigits(b)
        shape = np.broadcast_shapes(a.shape, b.shape)
        prod = np.zeros(shape + (2 * self.k - 1,), dtype=np.int64)
        for i in range(self.k):
            for j in range(self.k):
                prod[..., i + j] += da[..., i] * db[..., j]
        return self._reduce(prod)

    def _reduce(self, prod):
        prod %= self.p
        for d in range(prod.shape[-1] - 1, self.k - 1, -1):
            c = prod[..., d]
            prod[..., d - self.k: d] -= c[..., None] * self._mod_low
            prod[..., d - self.k: d] %= self.p
        return self.afrom_digits(prod[..., : self.k])

    def amatmul(self, A, B):
        """Matrix product over F_q on code arrays (supports batching)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return (A @ B) % self.p
        da, db = self.adigits(A), self.adigits(B)
        out = None
        for i in range(self.k):
            for j in range(self.k):
                term = da[..., i] @ db[..., j]
                if out is None:
                    out = np.zeros(term.shape + (2 * self.k - 1,), dtype=np.int64)
                out[..., i + j] += term
        return self._reduce(out)

    # -- misc ----------------------------------------------------------------------
    @property
    def primitive(self):
        return FieldElement(self, self.primitive_code)

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise IncompatibleFields("element from another field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_digits(value))
        return FieldElement(self, int(value) % self.p)

    def element_text(self, code):
        return poly_to_text(self.digits(code)) if self.k > 1 else str(code)

    def describe(self):
        return {
            "p": self.p,
            "k": self.k,
            "modulus": poly_to_text(self.modulus),
            "primitive": self.element_text(self.primitive_code),
            "conway": self.is_conway,
        }

    def __repr__(self):
        return f"FieldCtx(F_{self.p}^{self.k}, modulus={poly_to_text(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def _is_irreducible(f, p):
    """Trial division by monic polynomials of degree <= n/2 (n <= 4 in scope)."""
    from itertools import product as _product

    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in _product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_polyrem(list(f), g, p)):
                return False
    return True


def _polyrem(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, x in enumerate(b):
            a[shift + i] = (a[shift + i] - c * x) % p
        a.pop()
    return a


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    code: int

    @property
    def coeffs(self):
        return tuple(self.ctx.digits(self.code))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise IncompatibleFields("mixed fields")
            return other.code
        return self.ctx.from_int(int(other))

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub(self._other(other), self.code))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def inverse(self):
        if self.code == 0:
            raise ZeroElement("zero has no inverse")
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def __truediv__(self, other):
        return self * FieldElement(self.ctx, self._other(other)).inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def frobenius(self):
        return self ** self.ctx.p

    def is_zero(self):
        return self.code == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.key, self.code))

    def __str__(self):
        return self.ctx.element_text(self.code)

    def __repr__(self):
        return f"FieldElement({self}, F_{self.ctx.p}^{self.ctx.k})"


_FIELDS = {}


def make_field(p, k=1, override_modulus=None, bound=FIELD_BOUND, compute_conway=False):
    """Context for F_{p^k}.

    Without ``override_modulus`` the modulus is the stored Conway polynomial;
    ``compute_conway`` allows a search from the definition outside the table.
    Contexts are cached on ``(p, k, modulus)``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > bound:
        raise FieldTooLarge(f"p^k = {p**k} exceeds bound {bound}")
    if override_modulus is None:
        modulus = conway_polynomial(p, k, compute=compute_conway)
        conway = True
    else:
        modulus = tuple(int(c) % p for c in override_modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus("override modulus must be monic of degree k")
        conway = _stored().get((p, k)) == modulus
    key = (p, k, modulus)
    if key not in _FIELDS:
        _FIELDS[key] = FieldCtx(p, k, modulus, conway=conway)
    return _FIELDS[key]


def _stored():
    from .conway import CONWAY

    return CONWAY


def root_of_unity(ctx, m):
    """The canonical primitive m-th root of unity ``primitive^((q-1)/m)``."""
    if m <= 0 or (ctx.q - 1) % m:
        raise OrderDoesNotDivide(f"{m} does not divide {ctx.q - 1}")
    return ctx.primitive ** ((ctx.q - 1) // m)


def discrete_log(ctx, x):
    code = x.code if isinstance(x, FieldElement) else int(x)
    if code == 0:
        raise ZeroElement("discrete log of zero")
    if ctx.log_table is not None:
        return int(ctx.log_table[code])
    # baby-step giant-step
    n = ctx.q - 1
    m = isqrt(n) + 1
    baby = {}
    e = 1
    for j in range(m):
        baby.setdefault(e, j)
        e = ctx.mul(e, ctx.primitive_code)
    giant = ctx.pow(ctx.primitive_code, -m)
    y = code
    for i in range(m):
        if y in baby:
            return (i * m + baby[y]) % n
        y = ctx.mul(y, giant)
    raise AssertionError("discrete log not found")


def _embedding_table(src, dst):
    key = dst.key
    if key in src._embed_cache:
        return src._embed_cache[key]
    if src.p != dst.p or dst.k % src.k:
        raise IncompatibleFields(f"cannot embed {src!r} into {dst!r}")
    e = (dst.q - 1) // (src.q - 1)
    table = np.zeros(src.q, dtype=np.int64)
    g = dst.pow(dst.primitive_code, e)
    x = 1
    c = 1
    for _ in range(src.q - 1):
        table[c] = x
        c = src.mul(c, src.primitive_code)
        x = dst.mul(x, g)
    # the map must be additive: the image of t has to satisfy src's modulus
    if src.k > 1:
        t_img = int(table[src.p])
        acc = 0
        for coeff in reversed(src.modulus):
            acc = dst.add(dst.mul(acc, t_img), coeff)
        if acc != 0:
            raise IncompatibleFields("primitive elements are not tower-compatible")
    src._embed_cache[key] = table
    return table


def embed(src, dst, x):
    """Image of ``x`` under the Conway-compatible embedding F_{p^a} -> F_{p^b}."""
    table = _embedding_table(src, dst)
    if isinstance(x, FieldElement):
        if x.ctx != src:
            raise IncompatibleFields("element not in source field")
        return FieldElement(dst, int(table[x.code]))
    return table[np.asarray(x, dtype=np.int64)]


LADDER = (1, 2, 3, 4, 6, 8, 12)


def extension(ctx, k):
    """The field F_{p^k} containing ``ctx`` (k a multiple of ctx.k)."""
    if k % ctx.k:
        raise IncompatibleFields(f"F_{ctx.p}^{ctx.k} is not a subfield of F_{ctx.p}^{k}")
    return make_field(ctx.p, k, compute_conway=True)


def common_field(ctxs):
    from math import lcm

    ctxs = list(ctxs)
    p = ctxs[0].p
    if any(c.p != p for c in ctxs):
        raise IncompatibleFields("different characteristics")
    k = lcm(*(c.k for c in ctxs))
    return make_field(p, k, compute_conway=True)
