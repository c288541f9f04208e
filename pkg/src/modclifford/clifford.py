"""Clifford theory for a normal subgroup N of G in characteristic p.

Conventions: ^g sigma (n) = sigma(g^-1 n g); inertia groups are computed on
coset representatives of N, since N always fixes sigma.

The multiplicity m_phi attached to an irreducible phi of the inertia group I
is dim Hom_I(Ind_N^I sigma, phi), which by Frobenius reciprocity is the
multiplicity of sigma in Res phi.  When p divides [I:N] the induced module
need not be semisimple; its composition multiplicities are reported
separately and used for degree bookkeeping.
"""

import json
import logging
from dataclasses import dataclass, field
from math import gcd

from .brauer import brauer_character, enumerate_irreducibles
from .errors import (
    HypothesisViolation,
    NotIrreducible,
    NotNormal,
    OrbitMismatch,
    PaperCheckFailure,
)
from .field import common_field
from .group import coset_reps, is_cyclic, is_normal, named_group, quotient, subgroup
from .rep import conjugate, induce, inflate, rebase, restrict, tensor
from .structure import (
    are_isomorphic,
    composition_factors,
    end_dim,
    hom_dim,
    is_irreducible,
    is_semisimple,
)

log = logging.getLogger(__name__)

# (G, N, p, points of N's action)
SUITE = [
    ("GL2", "SL2", 3, None),
    ("S4", "A4", 2, None),
    ("A4", "V4", 2, None),
    ("D8", "C4", 2, None),
    ("C3xS3", "S3", 3, 6),
]


def suite_pair(gname, nname, p, degree=None):
    G = named_group(gname, p)
    N = named_group(nname, p, degree=degree)
    if not is_normal(G, N):
        raise NotNormal(f"{nname} is not normal in {gname}")
    return G, N


@dataclass
class Inertia:
    group: object
    R: list  # coset reps of I in G (G-indices)
    Q: list  # coset reps of N in I (G-indices)
    orbit: list  # conjugates ^r sigma for r in R
    index: int  # d = [I:N]

    @property
    def orbit_size(self):
        return len(self.orbit)


@dataclass
class Check:
    clause: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"clause": self.clause, "passed": bool(self.passed), "detail": self.detail}


def _check(checks, clause, ok, detail=""):
    checks.append(Check(clause, bool(ok), detail))
    return ok


# -- helpers ----------------------------------------------------------------------

def _same_field(*reps):
    ctx = common_field([r.ctx for r in reps])
    return [rebase(r, ctx) for r in reps]


def irreducibles_over(G, ctx, seed=0):
    """Irreducibles of G re-based into ``ctx`` (cached on the group)."""
    base = enumerate_irreducibles(G, ctx.p, seed=seed)
    target = common_field([ctx, base[0].ctx])
    key = ("irr_over", target.key, seed)
    cache = G.__dict__.setdefault("_cache", {})
    if key not in cache:
        out = []
        for r in base:
            s = rebase(r, target)
            if s is r:
                out.append(r)
            else:
                s.label = r.label
                out.append(s)
        cache[key] = out
    return cache[key]


def _require_irreducible(sigma, seed):
    if not is_irreducible(sigma, seed=seed).irreducible:
        raise NotIrreducible(f"{sigma.label} is not irreducible")


def _find(reps, rho):
    for i, r in enumerate(reps):
        if r.degree == rho.degree and are_isomorphic(r, rho):
            return i
    return None


# -- inertia ------------------------------------------------------------------------

def inertia_group(sigma, G, seed=0, naive=False):
    """I_G(sigma), coset reps R of I in G, Q of N in I, and the orbit of sigma."""
    N = sigma.group
    if not is_normal(G, N):
        raise NotNormal(f"{N.name} is not normal in {G.name}")
    _require_irreducible(sigma, seed)
    cos = coset_reps(G, N)
    candidates = range(len(G)) if naive else cos.reps
    stab = [g for g in candidates if hom_dim(sigma, conjugate(sigma, G.mats[g])) > 0]
    if naive:
        fixed = sorted({int(cos.coset_of[g]) for g in stab})
        stab = [cos.reps[c] for c in fixed]
    if len(stab) == cos.index:
        I = G
    elif len(stab) == 1:
        I = N
    else:
        gens = [N.mats[g] for g in N.gens] + [G.mats[g] for g in stab]
        I = subgroup(G, gens, name=f"I({sigma.label})")
    R = coset_reps(G, I).reps
    if I is G:
        Q = list(cos.reps)
    else:
        Q = [int(i) for i in G.lookup(I.mats[coset_reps(I, N).reps])]
    orbit = []
    for j, r in enumerate(R):
        c = sigma if r == 0 else conjugate(sigma, G.mats[r], label=f"{sigma.label}^r{j}")
        orbit.append(c)
    return Inertia(I, R, Q, orbit, len(I) // len(N))


# -- structural checks --------------------------------------------------------------

def res_ind_decompose(sigma, G, seed=0, inertia=None):
    """Res Ind sigma against the orbit of sigma; also dim End(Ind sigma) = [I:N]."""
    N = sigma.group
    inert = inertia or inertia_group(sigma, G, seed=seed)
    d = inert.index
    ind = induce(sigma, G)
    res = restrict(ind, N)
    cf = composition_factors(res, seed=seed, order=False)
    checks = []
    matched = {}
    ok = True
    for f, m in cf.factors:
        j = _find(inert.orbit, f)
        if j is None or m != d:
            ok = False
        matched[j] = m
    distinct = all(
        not are_isomorphic(a, b) for i, a in enumerate(inert.orbit) for b in inert.orbit[i + 1:]
    )
    _check(checks, "orbit members pairwise non-isomorphic", distinct)
    _check(
        checks,
        "Res Ind sigma = d * sum of conjugates",
        ok and len(matched) == len(inert.orbit),
        f"d={d}, factors={[m for _, m in cf.factors]}, orbit={len(inert.orbit)}",
    )
    e = end_dim(ind)
    _check(checks, "dim End(Ind sigma) = d", e == d, f"{e} vs {d}")
    _check(checks, "Res Ind sigma semisimple", is_semisimple(res, seed=seed))
    return {"induced": ind, "restricted": res, "factors": cf, "d": d, "end_dim": e, "checks": checks}


def clifford_restrict(theta, N, seed=0):
    """Factor Res theta; it must be ell copies of one conjugation orbit.

    Returns (orbit representatives as representations, ell).
    """
    G = theta.group
    res = restrict(theta, N)
    cf = composition_factors(res, seed=seed, order=False)
    sigma = cf.factors[0][0]
    inert = inertia_group(sigma, G, seed=seed)
    mults = set()
    seen = set()
    for f, m in cf.factors:
        j = _find(inert.orbit, f)
        if j is None:
            raise OrbitMismatch("restriction factors", f"{f.label} not conjugate to {sigma.label}")
        seen.add(j)
        mults.add(m)
    if len(mults) != 1 or len(seen) != len(inert.orbit):
        raise OrbitMismatch("restriction multiplicities", f"multiplicities {sorted(mults)}")
    ell = mults.pop()
    # the restriction is semisimple, so each factor is also a submodule
    if hom_dim(sigma, res) != ell:
        raise OrbitMismatch("restriction semisimple", f"{hom_dim(sigma, res)} vs {ell}")
    return inert.orbit, ell


def lies_over(theta, sigma):
    """Does sigma occur in Res theta (equivalently, as a submodule)?"""
    res = restrict(theta, sigma.group)
    return hom_dim(sigma, res) > 0


def ghat(sigma, G, seed=0):
    """Irreducibles of G lying over sigma, from the full list of irreducibles."""
    irr = irreducibles_over(G, sigma.ctx, seed=seed)
    sigma = rebase(sigma, irr[0].ctx) if irr[0].ctx != sigma.ctx else sigma
    return [t for t in irr if lies_over(t, sigma)]


def induced_irreducibility_check(sigma, G, seed=0):
    """Ind sigma irreducible  <=>  I_G(sigma) = N, both sides computed independently."""
    ind = induce(sigma, G)
    lhs = is_irreducible(ind, seed=seed).irreducible
    inert = inertia_group(sigma, G, seed=seed)
    rhs = inert.group is sigma.group or len(inert.group) == len(sigma.group)
    if lhs != rhs:
        raise PaperCheckFailure(
            "induced irreducible iff inertia equals N",
            f"Meataxe says {lhs}, inertia says {rhs} for {sigma.label}",
        )
    return lhs


# -- correspondence -------------------------------------------------------------------

@dataclass
class CliffordReport:
    group: str
    normal: str
    p: int
    sigma: str
    sigma_degree: int
    inertia: dict
    orbit: list
    ghat_sigma: list
    inertia_indices: dict
    correspondence: list
    checks: list = field(default_factory=list)
    seed: int = 0
    field: str = ""

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def raise_on_failure(self):
        bad = self.failures()
        if bad:
            raise PaperCheckFailure(bad[0].clause, bad[0].detail)

    def to_json_obj(self):
        return {
            "schema": "clifford-report/1",
            "group": self.group,
            "normal": self.normal,
            "p": self.p,
            "seed": self.seed,
            "field": self.field,
            "conventions": {
                "conjugation": "^g sigma(n) = sigma(g^-1 n g)",
                "coset_reps": "identity first, then least code in each new coset",
                "m_phi": "dim Hom_I(Ind_N^I sigma, phi)",
            },
            "sigma": {"label": self.sigma, "degree": self.sigma_degree},
            "inertia": self.inertia,
            "orbit": self.orbit,
            "ghat_sigma": self.ghat_sigma,
            "inertia_indices": self.inertia_indices,
            "correspondence": self.correspondence,
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_json_obj(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self):
        lines = [
            f"sigma = {self.sigma} (degree {self.sigma_degree}) of {self.normal} in {self.group}, p={self.p}",
            f"field: {self.field}; seed={self.seed}",
            f"inertia group: order {self.inertia['order']}, [I:N] = {self.inertia['index']}",
            f"orbit: {', '.join(o['label'] for o in self.orbit)}",
            f"Ghat(sigma): {', '.join(self.ghat_sigma) or '-'}",
        ]
        for c in self.correspondence:
            lines.append(
                f"  {c['phi']} (deg {c['phi_degree']}, m={c['m']}, comp. mult {c['composition_multiplicity']})"
                f" -> {c['induced']} = {c['matches']}"
            )
        for ch in self.checks:
            mark = "PASS" if ch.passed else "FAIL"
            lines.append(f"[{mark}] {ch.clause}" + (f"  ({ch.detail})" if ch.detail else ""))
        return "\n".join(lines) + "\n"


def _matrix_text(G, i):
    m = G.mats[i]
    return "[" + ",".join("[" + ",".join(str(int(x)) for x in row) + "]" for row in m) + "]"


def clifford_correspondence(sigma, G, seed=0):
    """Build and check the correspondence phi -> Ind_I^G phi for one sigma."""
    N = sigma.group
    if not is_normal(G, N):
        raise NotNormal(f"{N.name} is not normal in {G.name}")
    irrG = irreducibles_over(G, sigma.ctx, seed=seed)
    ctx = irrG[0].ctx
    if sigma.ctx != ctx:
        sigma = rebase(sigma, ctx)
    checks = []
    inert = inertia_group(sigma, G, seed=seed)
    I = inert.group
    _check(
        checks,
        "orbit-stabilizer",
        inert.orbit_size * len(I) == len(G),
        f"{inert.orbit_size} * {len(I)} vs {len(G)}",
    )

    rid = res_ind_decompose(sigma, G, seed=seed, inertia=inert)
    checks += rid["checks"]

    # Ghat(sigma) independently, and the inertia index of each member
    gh = [t for t in irrG if lies_over(t, sigma)]
    ells = {}
    for t in gh:
        try:
            _, ell = clifford_restrict(t, N, seed=seed)
            ells[t.label] = ell
        except OrbitMismatch as exc:
            _check(checks, "restriction is one orbit with common multiplicity", False, str(exc))
    _check(checks, "restriction is one orbit with common multiplicity", len(ells) == len(gh))
    _check(
        checks,
        "deg theta = ell * |orbit| * deg sigma",
        all(t.degree == ells.get(t.label, 0) * inert.orbit_size * sigma.degree for t in gh),
    )

    # Ihat(sigma): composition factors of Ind_N^I sigma
    ind_NI = induce(sigma, I) if I is not N else sigma
    cf = composition_factors(ind_NI, seed=seed, order=True)
    _check(checks, "factors of Ind_N^I sigma absolutely irreducible", all(end_dim(f) == 1 for f, _ in cf.factors))
    corr = []
    induced = []
    for i, (phi, c_phi) in enumerate(cf.factors):
        name = f"phi{i}"
        m_phi = hom_dim(ind_NI, phi)
        res_phi = restrict(phi, N) if I is not N else phi
        res_ok = (
            m_phi * sigma.degree == phi.degree
            and hom_dim(sigma, res_phi) == m_phi
            and all(are_isomorphic(f, sigma) for f, _ in composition_factors(res_phi, seed=seed, order=False).factors)
        )
        _check(checks, f"Res_N {name} = m * sigma", res_ok, f"m={m_phi}")
        ind_phi = induce(phi, G) if I is not G else phi
        irr_ok = is_irreducible(ind_phi, seed=seed).irreducible
        _check(checks, f"Ind_I^G {name} irreducible", irr_ok)
        j = _find(gh, ind_phi)
        label = gh[j].label if j is not None else None
        ell = ells.get(label)
        _check(checks, f"inertia index of Ind {name} = m", ell == m_phi, f"ell={ell}, m={m_phi}")
        corr.append(
            {
                "phi": name,
                "phi_degree": phi.degree,
                "m": m_phi,
                "composition_multiplicity": c_phi,
                "induced": f"Ind({name})",
                "induced_degree": ind_phi.degree,
                "matches": label,
            }
        )
        induced.append((j, ind_phi, c_phi, m_phi))
    js = [j for j, *_ in induced]
    _check(checks, "correspondence injective", None not in js and len(set(js)) == len(js))
    _check(checks, "correspondence surjective", set(js) == set(range(len(gh))), f"{len(set(js))} of {len(gh)}")
    deg_total = sum(c * ind.degree for _, ind, c, _ in induced)
    _check(
        checks,
        "sum of composition multiplicity * deg Ind phi = [G:N] deg sigma",
        deg_total == len(G) // len(N) * sigma.degree,
        f"{deg_total}",
    )
    # composition factors of Ind_N^G sigma are the Ind phi with the same multiplicities
    full = composition_factors(rid["induced"], seed=seed, order=False)
    comp_ok = len(full) == len(induced) and all(
        any(are_isomorphic(f, ind) and m == c for _, ind, c, _ in induced) for f, m in full.factors
    )
    _check(checks, "factors of Ind_N^G sigma = Ind phi with multiplicities", comp_ok)
    semisimple = is_semisimple(ind_NI, seed=seed)
    for t in irrG:
        checks += nakayama_checks(t, sigma, induced=rid["induced"])

    return CliffordReport(
        group=G.name,
        normal=N.name,
        p=G.p,
        sigma=sigma.label,
        sigma_degree=sigma.degree,
        inertia={
            "order": len(I),
            "index": inert.index,
            "is_G": I is G,
            "is_N": I is N,
            "ind_semisimple": semisimple,
        },
        orbit=[{"label": o.label, "r": _matrix_text(G, r)} for o, r in zip(inert.orbit, inert.R)],
        ghat_sigma=[t.label for t in gh],
        inertia_indices=ells,
        correspondence=corr,
        checks=checks,
        seed=seed,
        field=_field_text(ctx),
    )


def _field_text(ctx):
    from .brauer import field_text

    return field_text(ctx)


def nakayama_checks(theta, sigma, induced=None):
    """Both reciprocity dimension equalities for one (theta, sigma) pair."""
    N = sigma.group
    ind = induced if induced is not None else induce(sigma, theta.group)
    res = restrict(theta, N)
    a, b = hom_dim(theta, ind), hom_dim(res, sigma)
    c, d = hom_dim(ind, theta), hom_dim(sigma, res)
    return [
        Check(f"Hom_G({theta.label}, Ind) = Hom_N(Res, sigma)", a == b, f"{a} vs {b}"),
        Check(f"Hom_G(Ind, {theta.label}) = Hom_N(sigma, Res)", c == d, f"{c} vs {d}"),
    ]


def orbit_representatives(G, N, seed=0):
    """One irreducible of N from each G-conjugation orbit."""
    irr = enumerate_irreducibles(N, N.p, seed=seed)
    reps = []
    covered = set()
    for i, s in enumerate(irr):
        if i in covered:
            continue
        reps.append(s)
        for c in inertia_group(s, G, seed=seed).orbit:
            j = _find(irr, c)
            if j is not None:
                covered.add(j)
    return reps


def partition_check(G, N, seed=0):
    """Ghat over orbit representatives partitions the irreducibles of G."""
    reps = orbit_representatives(G, N, seed=seed)
    irrG = enumerate_irreducibles(G, G.p, seed=seed)
    seen = []
    for s in reps:
        for t in ghat(s, G, seed=seed):
            seen.append(t.label)
    return sorted(seen) == sorted(t.label for t in irrG)


# -- Green's theorem and extension experiments ------------------------------------

def green_verify(G, N, theta, p=None, seed=0):
    """Ind_N^G Res theta has [G:N] composition factors all equal to theta (x) psi.

    psi is the unique irreducible of the p-group G/N, inflated to G.  Also
    checks that theta (x) psi is the only irreducible of G restricting to sigma.
    """
    p = p or G.p
    index = len(G) // len(N)
    if not is_normal(G, N):
        raise NotNormal(f"{N.name} is not normal in {G.name}")
    if not _is_power(index, p):
        raise HypothesisViolation(f"G/N has order {index}, not a power of {p}")
    if len(N) % p:
        raise HypothesisViolation(f"p={p} does not divide |N|={len(N)}")
    sigma = restrict(theta, N)
    if not is_irreducible(sigma, seed=seed).irreducible:
        raise HypothesisViolation("Res theta is not irreducible")
    Q = quotient(G, N)
    qirr = enumerate_irreducibles(Q.group, p, seed=seed)
    checks = []
    _check(checks, "G/N has a unique irreducible", len(qirr) == 1, f"{len(qirr)} found")
    psi = inflate(rebase(qirr[0], theta.ctx) if qirr[0].ctx != theta.ctx else qirr[0], Q)
    target = tensor(theta, psi)
    ind = induce(sigma, G)
    cf = composition_factors(ind, seed=seed, order=False)
    _check(
        checks,
        "Ind Res theta = [G:N] copies of theta (x) psi",
        len(cf) == 1 and cf.factors[0][1] == index and are_isomorphic(cf.factors[0][0], target),
        f"factors {[(f.degree, m) for f, m in cf.factors]}",
    )
    unique = True
    for tau in irreducibles_over(G, theta.ctx, seed=seed):
        tau, th = _same_field(tau, target)
        if tau.degree == sigma.degree and are_isomorphic(restrict(tau, N), rebase(sigma, tau.ctx)):
            unique &= are_isomorphic(tau, th)
    _check(checks, "extension of sigma is unique", unique)
    return all(c.passed for c in checks), checks


def _is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


@dataclass
class ExtensionOutcome:
    case: str
    sigma: str
    found: str | None
    group: str
    normal: str

    def to_json(self):
        return {"case": self.case, "group": self.group, "normal": self.normal, "sigma": self.sigma, "extension": self.found}


CONJECTURE_LOG = []


def extension_search(sigma, G, case, seed=0):
    """Look for an irreducible theta of G with Res theta = sigma.

    Case "i": G/N cyclic.  Case "ii": gcd(|N|, [G:N]) = 1.  Both require
    I_G(sigma) = G.  The outcome is logged as an experiment.
    """
    N = sigma.group
    if case not in ("i", "ii"):
        raise ValueError("case must be 'i' or 'ii'")
    if not is_normal(G, N):
        raise NotNormal(f"{N.name} is not normal in {G.name}")
    index = len(G) // len(N)
    if case == "i" and not is_cyclic(quotient(G, N).group):
        raise HypothesisViolation("G/N is not cyclic")
    if case == "ii" and gcd(len(N), index) != 1:
        raise HypothesisViolation(f"gcd(|N|, [G:N]) = gcd({len(N)}, {index}) != 1")
    if inertia_group(sigma, G, seed=seed).group is not G:
        raise HypothesisViolation("sigma is not G-invariant")
    found = None
    for t in irreducibles_over(G, sigma.ctx, seed=seed):
        t2, s2 = _same_field(t, sigma)
        if t2.degree == s2.degree and are_isomorphic(restrict(t2, N), s2):
            found = t.label
            break
    outcome = ExtensionOutcome(case, sigma.label, found, G.name, N.name)
    CONJECTURE_LOG.append(outcome)
    log.info("extension search case %s: %s in %s/%s -> %s", case, sigma.label, G.name, N.name, found)
    return outcome


def check_brauer_restriction(theta, N):
    """Brauer character of Res theta agrees with theta on the p-regular classes of N."""
    G = theta.group
    res = restrict(theta, N)
    chi_t = brauer_character(theta)
    chi_r = brauer_character(res)
    idx = G.lookup(N.mats)
    for ci, v in zip(chi_r.classes, chi_r.values):
        g = int(idx[N.conjugacy_classes[ci].rep])
        gi = int(G.class_of[g])
        if chi_t.value_map()[gi] != v:
            return False
    return True
