import numpy as np
import sympy
from hypothesis import given, strategies as st

from modclifford import polyq
from modclifford.field import make_field

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)]


def random_matrix(pk, n, seed):
    ctx = make_field(*pk)
    return ctx, np.random.default_rng(seed).integers(0, ctx.q, size=(n, n))


@given(st.sampled_from([(2, 1), (3, 1), (5, 1), (7, 1)]), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_charpoly_matches_sympy(pk, n, seed):
    ctx, A = random_matrix(pk, n, seed)
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.Matrix(A.tolist()).charpoly(x).as_expr(), x, modulus=ctx.p)
    got = [int(c) % ctx.p for c in reversed(want.all_coeffs())]
    assert polyq.charpoly(ctx, A) == [c % ctx.p for c in got]


@given(st.sampled_from(FIELDS), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_cayley_hamilton(pk, n, seed):
    ctx, A = random_matrix(pk, n, seed)
    cp = polyq.charpoly(ctx, A)
    assert len(cp) == n + 1 and cp[-1] == 1
    assert not polyq.evaluate_matrix(ctx, cp, A).any()


@given(st.sampled_from([(2, 1), (3, 1), (5, 1)]), st.lists(st.integers(0, 6), min_size=2, max_size=9), st.integers(0, 99))
def test_factors_match_sympy(pk, coeffs, seed):
    ctx = make_field(*pk)
    f = polyq.trim([c % ctx.p for c in coeffs])
    if len(f) < 2:
        return
    x = sympy.Symbol("x")
    sp = sympy.Poly(list(reversed(f)), x, modulus=ctx.p)
    want = set()
    for g, _ in sp.factor_list()[1]:
        g = g.monic()
        want.add(tuple(int(c) % ctx.p for c in reversed(g.all_coeffs())))
    assert set(polyq.irreducible_factors(ctx, f, seed=seed)) == want


@given(st.sampled_from([(2, 2), (3, 2), (2, 3)]), st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_factors_over_extension_fields(pk, n, seed):
    ctx, A = random_matrix(pk, n, seed)
    cp = polyq.charpoly(ctx, A)
    facs = polyq.irreducible_factors(ctx, cp, seed=seed)
    radical = [1]
    for f in facs:
        assert not polyq.divmod_(ctx, cp, list(f))[1]
        # degree 2 or 3 with no root means irreducible
        if 2 <= len(f) - 1 <= 3:
            assert all(polyq.mod(ctx, list(f), [ctx.neg(a), 1]) for a in range(ctx.q))
        radical = polyq.mul(ctx, radical, list(f))
    # the product of the distinct factors is nilpotent on A
    nil = polyq.evaluate_matrix(ctx, radical, A)
    power = nil
    for _ in range(len(cp)):
        power = ctx.amatmul(power, nil)
    assert not power.any()
