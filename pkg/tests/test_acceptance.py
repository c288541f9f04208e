"""Acceptance criteria, one test each.  Every test prints a [PASS]/[FAIL] line."""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from modclifford.brauer import brauer_character, enumerate_irreducibles
from modclifford.clifford import (
    SUITE,
    clifford_correspondence,
    clifford_restrict,
    extension_search,
    ghat,
    green_verify,
    inertia_group,
    nakayama_checks,
    res_ind_decompose,
    suite_pair,
)
from modclifford.cyclotomic import CyclotomicInt
from modclifford.errors import HypothesisViolation
from modclifford.group import p_regular_classes
from modclifford.rep import induce, restrict
from modclifford.sl2gl2 import clear_caches, gl2, pol_k, pol_k_r, reference_columns, sl2, verify_section2
from modclifford.structure import (
    are_isomorphic,
    composition_factors,
    end_dim,
    hom_dim,
    is_irreducible,
    multiplicity_in_semisimple,
)

# sqrt(2) i as an element of Z[zeta_8]
SQRT2I = CyclotomicInt.zeta(8, 1) + CyclotomicInt.zeta(8, 3)

SL2_ROWS = [[1, 1, 1], [2, -2, 0], [3, 3, -1]]
GL2_ROWS = {
    (0, 0): [1, 1, 1, 1, 1, 1],
    (0, 1): [1, 1, -1, -1, -1, 1],
    (1, 0): [2, -2, 0, SQRT2I, -SQRT2I, 0],
    (1, 1): [2, -2, 0, -SQRT2I, SQRT2I, 0],
    (2, 0): [3, 3, 1, -1, -1, -1],
    (2, 1): [3, 3, -1, 1, 1, -1],
}


@pytest.fixture
def report(capsys):
    def emit(n, ok, text, elapsed=None):
        t = "" if elapsed is None else f" [{elapsed:.2f}s]"
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}{t}")
        return ok

    return emit


def cli_json(*args):
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "modclifford", *args, "--format", "json"], capture_output=True, text=True)
    return proc, time.perf_counter() - t0


def as_cyclotomic(cell):
    return CyclotomicInt(cell["M"], cell["coeffs"])


def suite_items():
    for gname, nname, p, deg in SUITE:
        G, N = suite_pair(gname, nname, p, deg)
        yield gname, nname, p, G, N


def test_criterion_01_sl2_table(report):
    proc, dt = cli_json("table", "--group", "SL2", "--p", "3", "--expect", "paper")
    obj = json.loads(proc.stdout) if proc.returncode == 0 else {"rows": [], "classes": []}
    values = [[as_cyclotomic(v) for v in r["values"]] for r in obj["rows"]]
    ok = (
        proc.returncode == 0
        and len(values) == 3
        and all(v.is_rational() for row in values for v in row)
        and [[v.to_int() for v in row] for row in values] == SL2_ROWS
        and [c["size"] for c in obj["classes"]] == [1, 1, 6]
        and [c["order"] for c in obj["classes"]] == [1, 2, 4]
        and dt < 5
    )
    assert report(1, ok, f"SL2(F3) Brauer table exact, exit {proc.returncode}", dt)


def test_criterion_02_gl2_table(report):
    proc, dt = cli_json("table", "--group", "GL2", "--p", "3", "--expect", "paper")
    obj = json.loads(proc.stdout)
    rows = {r["label"]: [as_cyclotomic(v) for v in r["values"]] for r in obj["rows"]}
    degrees = sorted(r["degree"] for r in obj["rows"])
    rational_ok = all(
        rows[f"theta_{k},{r}"][i] == want
        for (k, r), vals in GL2_ROWS.items()
        for i, want in enumerate(vals)
        if isinstance(want, int)
    )
    irr = [rows[f"theta_1,{r}"][i] for r in (0, 1) for i in (3, 4)]
    pm = all(v == SQRT2I or v == -SQRT2I for v in irr)
    got = sorted(tuple(rows[f"theta_1,{r}"][i].lift(8).coeffs for i in range(6)) for r in (0, 1))
    want = sorted(
        tuple((v if isinstance(v, CyclotomicInt) else CyclotomicInt.integer(8, v)).lift(8).coeffs for v in GL2_ROWS[1, r])
        for r in (0, 1)
    )
    ok = proc.returncode == 0 and degrees == [1, 1, 2, 2, 3, 3] and rational_ok and pm and got == want and dt < 10
    assert report(2, ok, f"GL2(F3) table: rational cells exact, sqrt(2)i multiset {'matches' if got == want else 'differs'}", dt)


def test_criterion_03_induction_identities(report):
    clear_caches()
    t0 = time.perf_counter()
    G = gl2(3)
    cols = reference_columns(G, 3)
    ok = True
    for k in range(3):
        cf = composition_factors(induce(pol_k(3, k), G))
        chars = []
        for f, m in cf.factors:
            vm = brauer_character(f).value_map()
            chars.append(([vm[c] for c in cols], m))
        ok &= len(chars) == 2 and all(m == 1 for _, m in chars)
        for r in (0, 1):
            ok &= any(all(a == b for a, b in zip(vals, GL2_ROWS[k, r])) for vals, _ in chars)
    dt = time.perf_counter() - t0
    ok = ok and dt < 10
    assert report(3, ok, "Ind sigma_k = theta_k,0 + theta_k,1 for k = 0,1,2", dt)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_criterion_04_pol_k_irreducible(report, p):
    clear_caches()
    t0 = time.perf_counter()
    rep = verify_section2(p, gl2_checks=False)
    dt = time.perf_counter() - t0
    irreducible = all(c.passed for c in rep.checks if c.clause.endswith("irreducible"))
    distinct = all(c.passed for c in rep.checks if "non-isomorphic" in c.clause)
    count = len(p_regular_classes(sl2(p), p))
    ok = irreducible and distinct and count == p and dt < 60
    assert report(4, ok, f"p={p}: Pol_0..Pol_{p - 1} irreducible, distinct, {count} p-regular classes", dt)


@pytest.mark.parametrize("p", [3, 5])
def test_criterion_05_pol_k_r(report, p):
    clear_caches()
    t0 = time.perf_counter()
    twisted = [pol_k_r(p, k, r) for k in range(p) for r in range(p - 1)]
    irreducible = all(is_irreducible(t).irreducible for t in twisted)
    distinct = all(hom_dim(a, b) == 0 for i, a in enumerate(twisted) for b in twisted[i + 1:] if a.degree == b.degree)
    irr = enumerate_irreducibles(gl2(p), p)
    exhaust = len(irr) == len(twisted) and all(any(are_isomorphic(t, i) for t in twisted if t.ctx == i.ctx) for i in irr)
    dt = time.perf_counter() - t0
    ok = irreducible and distinct and exhaust and dt < 120
    assert report(5, ok, f"p={p}: {len(twisted)} Pol_k(r) irreducible, distinct, exhaustive ({len(irr)} found)", dt)


@pytest.mark.parametrize("p", [3, 5])
def test_criterion_06_restriction_and_induction(report, p):
    clear_caches()
    t0 = time.perf_counter()
    G, N = gl2(p), sl2(p)
    ok = True
    for k in range(p):
        s = pol_k(p, k)
        ind = induce(s, G)
        ok &= multiplicity_in_semisimple(s, restrict(ind, N)) == p - 1
        ok &= all(np.array_equal(restrict(pol_k_r(p, k, r), N).images, s.images) for r in range(p - 1))
        cf = composition_factors(ind)
        ok &= len(cf) == p - 1 and all(m == 1 for m in cf.multiplicities())
        ok &= all(any(are_isomorphic(f, pol_k_r(p, k, r)) for f, _ in cf.factors) for r in range(p - 1))
    dt = time.perf_counter() - t0
    ok = ok and dt < 60
    assert report(6, ok, f"p={p}: Res Ind Pol_k = (p-1) Pol_k, Res Pol_k(r) = Pol_k, Ind Pol_k = sum Pol_k(r)", dt)


def test_criterion_07_restriction_of_induced(report):
    t0 = time.perf_counter()
    ok = True
    count = 0
    for gname, nname, p, G, N in suite_items():
        for s in enumerate_irreducibles(N, p):
            rid = res_ind_decompose(s, G)
            d = rid["d"]
            ok &= all(c.passed for c in rid["checks"])
            ok &= end_dim(rid["induced"]) == d
            for t in ghat(s, G):
                orbit, ell = clifford_restrict(t, N)
                ok &= ell >= 1 and len(orbit) == len(G) // (d * len(N))
            count += 1
    dt = time.perf_counter() - t0
    ok = ok and dt < 300
    assert report(7, ok, f"Res Ind sigma = d sum of conjugates, dim End = d, common ell ({count} sigma)", dt)


def test_criterion_08_correspondence(report, capsys):
    t0 = time.perf_counter()
    ok = True
    lines = []
    for gname, nname, p, G, N in suite_items():
        for s in enumerate_irreducibles(N, p):
            rep = clifford_correspondence(s, G)
            wanted = [
                c
                for c in rep.checks
                if c.clause.startswith(("Res_N", "Ind_I^G", "inertia index", "correspondence"))
            ]
            ok &= bool(wanted) and all(c.passed for c in wanted)
            for c in rep.correspondence:
                lines.append(
                    f"  {gname}/{nname} {s.label} {c['phi']}: m={c['m']} comp.mult={c['composition_multiplicity']}"
                    f" semisimple={rep.inertia['ind_semisimple']}"
                )
    dt = time.perf_counter() - t0
    with capsys.disabled():
        print("\n" + "\n".join(lines))
    assert report(8, ok, "phi -> Ind phi bijective, inertia indices = m_phi, Res phi = m_phi sigma", dt)


def test_criterion_09_induced_irreducible(report):
    """The stated example: a nontrivial irreducible of V4 at p=2, induced to A4."""
    t0 = time.perf_counter()
    G, N = suite_pair("A4", "V4", 2)
    nontrivial = [s for s in enumerate_irreducibles(N, 2) if not _is_trivial(s)]
    example = False
    if nontrivial:
        s = nontrivial[0]
        example = is_irreducible(induce(s, G)).irreducible and inertia_group(s, G).group is N
    both = _biconditional_everywhere()
    dt = time.perf_counter() - t0
    ok = example and both
    detail = (
        f"{len(nontrivial)} nontrivial irreducibles of V4 over F_2; example {'holds' if example else 'unavailable'};"
        f" biconditional on all suite sigma {'holds' if both else 'fails'}"
    )
    report(9, ok, detail, dt)
    assert ok


def _is_trivial(s):
    return s.degree == 1 and all(int(x) == 1 for x in s.images[:, 0, 0])


def _biconditional_everywhere():
    ok = True
    for gname, nname, p, G, N in suite_items():
        for s in enumerate_irreducibles(N, p):
            lhs = is_irreducible(induce(s, G)).irreducible
            rhs = len(inertia_group(s, G).group) == len(N)
            ok &= lhs == rhs
    return ok


def test_criterion_09_supplement_inertia_equals_normal(report):
    """The I = N case where it actually occurs: A4 in S4 at p=2, V4 in A4 at p=3."""
    t0 = time.perf_counter()
    cases = 0
    ok = True
    for gname, nname, p in (("S4", "A4", 2), ("A4", "V4", 3)):
        G, N = suite_pair(gname, nname, p)
        for s in enumerate_irreducibles(N, p):
            if _is_trivial(s):
                continue
            ok &= inertia_group(s, G).group is N and is_irreducible(induce(s, G)).irreducible
            cases += 1
    dt = time.perf_counter() - t0
    ok = ok and cases > 0
    assert report("9 (supplement)", ok, f"Ind sigma irreducible with I = N in {cases} cases", dt)


def test_criterion_10_green(report):
    t0 = time.perf_counter()
    G, N = suite_pair("C3xS3", "S3", 3, 6)
    ok = True
    sigmas = enumerate_irreducibles(N, 3)
    for s in sigmas:
        ext = [t for t in enumerate_irreducibles(G, 3) if t.degree == s.degree and are_isomorphic(restrict(t, N), s)]
        ok &= len(ext) == 1
        passed, _ = green_verify(G, N, ext[0])
        cf = composition_factors(induce(s, G))
        ok &= passed and len(cf) == 1 and cf.factors[0][1] == 3 and are_isomorphic(cf.factors[0][0], ext[0])
    dt = time.perf_counter() - t0
    ok = ok and len(sigmas) == 2
    assert report(10, ok, f"Ind sigma = 3 theta with theta unique, for {len(sigmas)} sigma of S3", dt)


def test_criterion_11_extension_experiments(report):
    t0 = time.perf_counter()
    tried = {"i": 0, "ii": 0}
    found = {"i": 0, "ii": 0}
    for gname, nname, p, G, N in suite_items():
        for s in enumerate_irreducibles(N, p):
            for case in ("i", "ii"):
                try:
                    out = extension_search(s, G, case)
                except HypothesisViolation:
                    continue
                tried[case] += 1
                found[case] += out.found is not None
    dt = time.perf_counter() - t0
    ok = tried == found and tried["i"] > 0 and tried["ii"] > 0
    assert report(11, ok, f"extensions found: case i {found['i']}/{tried['i']}, case ii {found['ii']}/{tried['ii']}", dt)


def test_criterion_12_cross_cutting(report):
    t0 = time.perf_counter()
    naka = degrees = orbit = True
    pairs = 0
    for gname, nname, p, G, N in suite_items():
        irrG = enumerate_irreducibles(G, p)
        for s in enumerate_irreducibles(N, p):
            inert = inertia_group(s, G)
            orbit &= len(inert.orbit) * len(inert.group) == len(G)
            ind = induce(s, G)
            for t in irrG:
                if t.ctx != s.ctx:
                    continue
                naka &= all(c.passed for c in nakayama_checks(t, s, induced=ind))
                pairs += 1
            for rho in (ind, restrict(ind, N)):
                cf = composition_factors(rho)
                degrees &= sum(m * f.degree for f, m in cf.factors) == rho.degree
    args = ("clifford", "--group", "S4", "--normal", "A4", "--p", "2", "--seed", "5")
    a, _ = cli_json(*args)
    b, _ = cli_json(*args)
    determinism = a.returncode == 0 and a.stdout.encode() == b.stdout.encode()
    dt = time.perf_counter() - t0
    ok = naka and degrees and orbit and determinism and pairs > 0
    assert report(
        12,
        ok,
        f"Nakayama on {pairs} pairs {naka}, degree accounting {degrees}, orbit-stabilizer {orbit}, byte-identical JSON {determinism}",
        dt,
    )
