import numpy as np
import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from modclifford.errors import NotASubgroup, NotNormal, NotPrime
from modclifford.group import (
    coset_reps,
    is_cyclic,
    is_normal,
    make_GL2,
    make_SL2,
    named_group,
    p_regular_classes,
    quotient,
    subgroup,
)

PERM = {
    "S4": [[1, 0, 2, 3], [1, 2, 3, 0]],
    "A4": [[1, 2, 0, 3], [0, 2, 3, 1]],
    "D8": [[1, 2, 3, 0], [0, 3, 2, 1]],
    "S3": [[1, 0, 2], [1, 2, 0]],
}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_matrix_group_orders(p):
    assert len(make_SL2(p)) == p * (p * p - 1)
    assert len(make_GL2(p)) == p * (p * p - 1) * (p - 1)


@pytest.mark.parametrize("p,sl,gl", [(3, 3, 6), (5, 5, 20), (7, 7, 42)])
def test_p_regular_class_counts(p, sl, gl):
    assert len(p_regular_classes(make_SL2(p), p)) == sl
    assert len(p_regular_classes(make_GL2(p), p)) == gl


@pytest.mark.parametrize("name", sorted(PERM))
def test_class_structure_matches_sympy(name):
    G = named_group(name, 2)
    oracle = PermutationGroup([Permutation(g) for g in PERM[name]])
    assert len(G) == oracle.order()
    ours = sorted((c.size, c.order) for c in G.conjugacy_classes)
    theirs = sorted((len(c), next(iter(c)).order()) for c in oracle.conjugacy_classes())
    assert ours == theirs


def test_classes_partition_and_are_conjugation_closed():
    G = make_GL2(3)
    seen = np.concatenate([c.members for c in G.conjugacy_classes])
    assert sorted(seen) == list(range(len(G)))
    for c in G.conjugacy_classes:
        members = set(c.members.tolist())
        for g in G.gens:
            assert {int(G.conj(g, x)) for x in members} == members
        assert all(G.element_orders[m] == c.order for m in members)


def test_group_law():
    G = make_SL2(3)
    t = G.mul_table
    assert (t[0] == np.arange(len(G))).all()
    assert (t[np.arange(len(G)), G.inverses] == 0).all()
    a, b, c = 5, 11, 17
    assert t[t[a, b], c] == t[a, t[b, c]]
    assert np.array_equal(G.mats[t[a, b]], (G.mats[a] @ G.mats[b]) % 3)


def test_cosets_and_quotient():
    G, N = make_GL2(3), make_SL2(3)
    assert is_normal(G, N)
    cos = coset_reps(G, N)
    assert cos.index == 2 and cos.reps[0] == 0
    for g in range(len(G)):
        r = cos.reps[cos.coset_of[g]]
        assert G.mul_table[r, cos.h_of[g]] == g
    Q = quotient(G, N)
    assert Q.order == 2 and is_cyclic(Q.group)


def test_named_pairs_and_errors():
    assert is_normal(named_group("C3xS3", 3), named_group("S3", 3, degree=6))
    assert is_normal(named_group("A4", 2), named_group("V4", 2))
    S4 = named_group("S4", 2)
    H = subgroup(S4, [np.eye(4, dtype=np.int64)[[1, 0, 2, 3]]])
    assert not is_normal(S4, H)
    with pytest.raises(NotNormal):
        quotient(S4, H)
    with pytest.raises(NotASubgroup):
        is_normal(make_SL2(3), named_group("S3", 3))
    with pytest.raises(NotPrime):
        make_SL2(4)
