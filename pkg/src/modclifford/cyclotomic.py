"""Exact arithmetic in Z[zeta_M].

Elements are integer coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(M)-1), reduced modulo the M-th cyclotomic polynomial.
Since that basis is a Z-basis, an element is a rational integer exactly when
only its constant coefficient is nonzero.
"""

import cmath
import math
from functools import lru_cache


def _polydivmod(a, b):
    """Integer polynomial division by a monic b (lowest degree first)."""
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for s in range(len(a) - len(b), -1, -1):
        c = a[s + len(b) - 1]
        if c:
            q[s] = c
            for i, x in enumerate(b):
                a[s + i] -= c * x
    return q, a[: len(b) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(M):
    """Coefficients of Phi_M, lowest degree first."""
    num = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            num, r = _polydivmod(num, cyclotomic_poly(d))
            assert not any(r)
    return tuple(num)


def totient(M):
    return len(cyclotomic_poly(M)) - 1


class CyclotomicInt:
    __slots__ = ("M", "coeffs")

    def __init__(self, M, coeffs=()):
        self.M = int(M)
        phi = cyclotomic_poly(self.M)
        c = [int(x) for x in coeffs]
        if len(c) >= len(phi):
            _, c = _polydivmod(c, phi)
        c = c + [0] * (len(phi) - 1 - len(c))
        self.coeffs = tuple(c)

    @classmethod
    def integer(cls, M, n):
        return cls(M, [n])

    @classmethod
    def zeta(cls, M, j=1):
        j %= M
        c = [0] * (j + 1)
        c[j] = 1
        return cls(M, c)

    # -- ring structure ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.M != self.M:
                L = math.lcm(self.M, other.M)
                return self.lift(L), other.lift(L)
            return self, other
        if isinstance(other, int):
            return self, CyclotomicInt(self.M, [other])
        return NotImplemented

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        return CyclotomicInt(a.M, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.M, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return pair
        a, b = pair
        out = [0] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return CyclotomicInt(a.M, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = CyclotomicInt(self.M, [1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt(self.M, [other])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.M, self.coeffs))

    def lift(self, L):
        """The same number written in Z[zeta_L] for a multiple L of M."""
        if L % self.M:
            raise ValueError(f"{L} is not a multiple of {self.M}")
        s = L // self.M
        c = [0] * (s * len(self.coeffs))
        for j, x in enumerate(self.coeffs):
            c[j * s] = x
        return CyclotomicInt(L, c)

    def galois(self, a):
        """Image under zeta -> zeta^a, a coprime to M."""
        if math.gcd(a, self.M) != 1:
            raise ValueError("Galois exponent must be a unit")
        out = CyclotomicInt(self.M)
        for j, x in enumerate(self.coeffs):
            if x:
                out = out + x * CyclotomicInt.zeta(self.M, a * j)
        return out

    def conjugate(self):
        return self.galois(self.M - 1) if self.M > 2 else self

    # -- views --------------------------------------------------------------------
    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_int(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0] if self.coeffs else 0

    def __complex__(self):
        z = cmath.exp(2j * math.pi / self.M)
        return sum((x * z**j for j, x in enumerate(self.coeffs)), 0j)

    def zeta_form(self):
        terms = []
        for j, x in enumerate(self.coeffs):
            if not x:
                continue
            mono = "1" if j == 0 else (f"z{self.M}" if j == 1 else f"z{self.M}^{j}")
            if j == 0:
                terms.append(str(x))
            elif x == 1:
                terms.append(mono)
            elif x == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{x}*{mono}")
        s = "+".join(terms).replace("+-", "-")
        return s or "0"

    def display(self):
        """Integers as integers, c*sqrt(n) and c*sqrt(n)*i when exact, else zeta form."""
        if self.is_rational():
            return str(self.to_int())
        v = complex(self)
        for part, suffix in ((v.real, ""), (v.imag, "·i")):
            other = v.imag if suffix == "" else v.real
            if abs(other) > 1e-9:
                continue
            n = round(part * part)
            if n > 0 and abs(part * part - n) < 1e-9:
                c, m = _sqrt_parts(n)
                sign = "-" if part < 0 else ""
                coef = "" if c == 1 else str(c)
                body = f"{coef}√{m}" if m != 1 else str(c)
                if suffix and body == "1":
                    return f"{sign}i"
                return f"{sign}{body}{suffix}"
        return self.zeta_form()

    def to_json(self):
        return {"M": self.M, "coeffs": list(self.coeffs), "display": self.display()}

    def __repr__(self):
        return f"CyclotomicInt({self.display()})"

    def __str__(self):
        return self.display()


def _sqrt_parts(n):
    """n = c^2 * m with m squarefree."""
    c = 1
    m = n
    d = 2
    while d * d <= m:
        while m % (d * d) == 0:
            m //= d * d
            c *= d
        d += 1
    return c, m
