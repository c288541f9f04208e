from math import comb

import numpy as np
import pytest

from modclifford.brauer import brauer_character
from modclifford.errors import KOutOfRange, NotPrime, ROutOfRange
from modclifford.rep import natural
from modclifford.sl2gl2 import (
    character_identity,
    compare_reference,
    gl2,
    pol_k,
    pol_k_r,
    reference_table,
    sl2,
    substitution_matrix,
    unipotent_image,
    verify_section2,
)


@pytest.mark.parametrize("p,k", [(3, 2), (5, 3), (7, 6)])
def test_unipotent_image_is_binomial(p, k):
    U = unipotent_image(p, k)
    want = np.array([[comb(j, i) % p for j in range(k + 1)] for i in range(k + 1)])
    assert np.array_equal(U, want)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_w_swaps_extreme_monomials(p):
    for k in range(p):
        w = pol_k(p, k).images[sl2(p).gens[1]]
        assert w[k, 0] and not np.delete(w[:, 0], k).any()


def test_substitution_is_a_left_action():
    # P(ax+cy, bx+dy): x -> a x + c y
    g = np.array([[1, 2], [0, 1]])
    assert np.array_equal(substitution_matrix(g, 1, 3), g)
    for p in (3, 5):
        assert pol_k(p, 0).is_homomorphism() and pol_k(p, p - 1).is_homomorphism()
        assert pol_k(p, 1).cache["convention"] == "literal"


def test_pol_1_is_natural():
    for p in (3, 5):
        assert np.array_equal(pol_k(p, 1).images, natural(sl2(p)).images)


@pytest.mark.parametrize("p", [3, 5])
def test_character_identity(p):
    for k in range(p):
        for r in range(p - 1):
            assert character_identity(p, k, r)


def test_twist_is_det_power():
    p = 5
    G = gl2(p)
    for g in range(0, len(G), 37):
        d = round(np.linalg.det(G.mats[g])) % p
        assert np.array_equal(pol_k_r(p, 2, 3).images[g], pol_k_r(p, 2, 0).images[g] * pow(d, 3, p) % p)


def test_range_errors():
    with pytest.raises(KOutOfRange):
        pol_k(3, 3)
    with pytest.raises(ROutOfRange):
        pol_k_r(3, 1, 2)
    with pytest.raises(NotPrime):
        verify_section2(4)


def test_reference_tables_match():
    for name in ("SL2", "GL2"):
        assert compare_reference(reference_table(name), name) == []


def test_section2_report_at_3():
    rep = verify_section2(3)
    assert rep.passed, [c.clause for c in rep.checks if not c.passed]


def test_degrees_of_brauer_characters():
    for k in range(5):
        assert brauer_character(pol_k(5, k)).degree == k + 1
