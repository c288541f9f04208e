import pytest

from modclifford.brauer import enumerate_irreducibles
from modclifford.clifford import (
    SUITE,
    check_brauer_restriction,
    clifford_correspondence,
    extension_search,
    green_verify,
    inertia_group,
    induced_irreducibility_check,
    nakayama_checks,
    orbit_representatives,
    partition_check,
    suite_pair,
)
from modclifford.errors import HypothesisViolation, NotNormal
from modclifford.group import named_group
from modclifford.rep import induce, natural
from modclifford.sl2gl2 import gl2, pol_k
from modclifford.structure import end_dim

IDS = [f"{g}/{n}-p{p}" for g, n, p, _ in SUITE]


def suite_sigmas():
    for gname, nname, p, deg in SUITE:
        G, N = suite_pair(gname, nname, p, deg)
        for s in enumerate_irreducibles(N, p):
            yield pytest.param(G, s, id=f"{gname}/{nname}-p{p}-{s.label}")


@pytest.mark.parametrize("G,sigma", list(suite_sigmas()))
def test_correspondence_report_passes(G, sigma):
    rep = clifford_correspondence(sigma, G)
    assert rep.passed, [c.clause for c in rep.failures()]
    assert rep.inertia["order"] * len(rep.orbit) == len(G)


@pytest.mark.parametrize("G,sigma", list(suite_sigmas()))
def test_naive_inertia_agrees_with_coset_inertia(G, sigma):
    a = inertia_group(sigma, G)
    b = inertia_group(sigma, G, naive=True)
    assert len(a.group) == len(b.group) and a.index == b.index


@pytest.mark.parametrize("G,sigma", list(suite_sigmas()))
def test_end_of_induced_equals_inertia_index(G, sigma):
    assert end_dim(induce(sigma, G)) == inertia_group(sigma, G).index


@pytest.mark.parametrize("G,sigma", list(suite_sigmas()))
def test_corollary_biconditional(G, sigma):
    # raises if the two sides disagree
    induced_irreducibility_check(sigma, G)


@pytest.mark.parametrize("spec", SUITE, ids=IDS)
def test_partition_and_nakayama(spec):
    gname, nname, p, deg = spec
    G, N = suite_pair(gname, nname, p, deg)
    assert partition_check(G, N)
    for s in orbit_representatives(G, N):
        for t in enumerate_irreducibles(G, p):
            if t.ctx == s.ctx:
                assert all(c.passed for c in nakayama_checks(t, s))
    for t in enumerate_irreducibles(G, p):
        assert check_brauer_restriction(t, N)


def test_sl2_pol_k_invariant_in_gl2():
    for k in range(3):
        assert inertia_group(pol_k(3, k), gl2(3)).group is gl2(3)


def test_green_on_c3xs3():
    G, N = suite_pair("C3xS3", "S3", 3, 6)
    for theta in enumerate_irreducibles(G, 3):
        ok, checks = green_verify(G, N, theta)
        assert ok, [c.clause for c in checks if not c.passed]


def test_green_hypotheses_enforced():
    G, N = suite_pair("S4", "A4", 3)
    with pytest.raises(HypothesisViolation):
        green_verify(G, N, enumerate_irreducibles(G, 3)[0])
    G, N = suite_pair("GL2", "SL2", 3)
    with pytest.raises(HypothesisViolation):
        # [G:N] = 2 is not a power of 3
        green_verify(G, N, enumerate_irreducibles(G, 3)[0])


def test_extension_search_hypotheses():
    with pytest.raises(HypothesisViolation):
        extension_search(pol_k(3, 1), gl2(3), "ii")
    out = extension_search(pol_k(3, 1), gl2(3), "i")
    assert out.found is not None
    with pytest.raises(ValueError):
        extension_search(pol_k(3, 1), gl2(3), "iii")


def test_non_normal_rejected():
    G = named_group("S4", 3)
    H = named_group("S3", 3, degree=4)
    with pytest.raises(NotNormal):
        clifford_correspondence(natural(H), G)


def test_report_json_is_deterministic():
    G, N = suite_pair("S4", "A4", 2)
    s = enumerate_irreducibles(N, 2)[1]
    assert clifford_correspondence(s, G).to_json() == clifford_correspondence(s, G).to_json()
