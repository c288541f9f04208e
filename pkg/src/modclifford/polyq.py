"""Univariate polynomials over F_q as lists of codes (lowest degree first).

Just enough for the Meataxe: characteristic polynomials, and splitting them
into distinct irreducible factors.
"""

import random

import numpy as np


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f):
    return len(f) - 1


def add(ctx, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return trim(ctx.add(a, b) for a, b in zip(f, g))


def sub(ctx, f, g):
    return add(ctx, f, [ctx.neg(b) for b in g])


def mul(ctx, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return trim(out)


def scale(ctx, f, c):
    return trim(ctx.mul(a, c) for a in f)


def monic(ctx, f):
    f = trim(f)
    if not f:
        return f
    return scale(ctx, f, ctx.inv(f[-1]))


def divmod_(ctx, f, g):
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = ctx.inv(g[-1])
    q = [0] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g):
        c = ctx.mul(r[-1], inv_lead)
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = ctx.sub(r[shift + i], ctx.mul(c, b))
        r = trim(r)
    return trim(q), r


def mod(ctx, f, g):
    return divmod_(ctx, f, g)[1]


def gcd(ctx, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(ctx, f, g)
    return monic(ctx, f)


def powmod(ctx, f, e, m):
    result = [1]
    base = mod(ctx, f, m)
    while e:
        if e & 1:
            result = mod(ctx, mul(ctx, result, base), m)
        base = mod(ctx, mul(ctx, base, base), m)
        e >>= 1
    return result


def derivative(ctx, f):
    return trim(ctx.mul(ctx.from_int(i), a) for i, a in enumerate(f) if i > 0)


def pth_root(ctx, f):
    """f(x) = g(x)^p with all exponents divisible by p."""
    p = ctx.p
    root = lambda a: ctx.pow(a, ctx.q // p)  # noqa: E731
    return trim(root(f[i]) for i in range(0, len(f), p))


def squarefree_part_factors(ctx, f):
    """Distinct squarefree pieces whose product has the same radical as f."""
    f = monic(ctx, f)
    if deg(f) <= 0:
        return []
    d = derivative(ctx, f)
    if not d:
        return squarefree_part_factors(ctx, pth_root(ctx, f))
    g = gcd(ctx, f, d)
    radical_part = divmod_(ctx, f, g)[0]
    out = [monic(ctx, radical_part)]
    if deg(g) > 0:
        out += squarefree_part_factors(ctx, g)
    return out


def distinct_degree(ctx, f):
    """[(d, product of the degree-d irreducible factors)] for squarefree monic f."""
    out = []
    h = [0, 1]
    x = [0, 1]
    d = 0
    f = list(f)
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(ctx, h, ctx.q, f)
        g = gcd(ctx, f, sub(ctx, h, x))
        if deg(g) > 0:
            out.append((d, g))
            f = divmod_(ctx, f, g)[0]
            h = mod(ctx, h, f)
    if deg(f) > 0:
        out.append((deg(f), monic(ctx, f)))
    return out


def equal_degree(ctx, f, d, rng):
    """Split squarefree f, all of whose factors have degree d (Cantor-Zassenhaus)."""
    n = deg(f)
    if n == d:
        return [monic(ctx, f)]
    while True:
        a = trim([rng.randrange(ctx.q) for _ in range(n)])
        if deg(a) < 1:
            continue
        if ctx.p == 2:
            # trace map a + a^2 + ... + a^(2^(k d - 1))
            t = list(a)
            b = list(a)
            for _ in range(ctx.k * d - 1):
                b = mod(ctx, mul(ctx, b, b), f)
                t = add(ctx, t, b)
            cand = t
        else:
            cand = sub(ctx, powmod(ctx, a, (ctx.q**d - 1) // 2, f), [1])
        g = gcd(ctx, f, cand)
        if 0 < deg(g) < n:
            return equal_degree(ctx, g, d, rng) + equal_degree(ctx, divmod_(ctx, f, g)[0], d, rng)


def irreducible_factors(ctx, f, seed=0):
    """Distinct monic irreducible factors of f, sorted by (degree, coefficients)."""
    rng = random.Random(seed)
    found = set()
    for piece in squarefree_part_factors(ctx, f):
        for d, g in distinct_degree(ctx, piece):
            for h in equal_degree(ctx, g, d, rng):
                found.add(tuple(h))
    return sorted(found, key=lambda h: (len(h), h[::-1]))


def charpoly(ctx, A):
    """Characteristic polynomial via reduction to upper Hessenberg form."""
    H = np.array(A, dtype=np.int64, copy=True)
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        inv = ctx.inv(int(H[m, m - 1]))
        u = ctx.amul(H[m + 1:, m - 1], inv)
        if u.any():
            H[m + 1:, :] = ctx.asub(H[m + 1:, :], ctx.amul(u[:, None], H[m][None, :]))
            H[:, m] = ctx.aadd(H[:, m], ctx.amatmul(H[:, m + 1:], u[:, None])[:, 0])
    h = [[int(x) for x in row] for row in H]
    polys = [[1]]
    for m in range(1, n + 1):
        pm = mul(ctx, [ctx.neg(h[m - 1][m - 1]), 1], polys[m - 1])
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = ctx.mul(prod, h[i][i - 1])
            if prod == 0:
                break
            c = ctx.mul(h[i - 1][m - 1], prod)
            if c:
                pm = sub(ctx, pm, scale(ctx, polys[i - 1], c))
        polys.append(pm)
    return polys[n]


def evaluate_matrix(ctx, f, A):
    """f(A) by Horner's rule."""
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in reversed(f):
        out = ctx.amatmul(out, A)
        if c:
            out = ctx.aadd(out, eye * c)
    return out
