"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 a verification clause failed,
64 usage error.
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import structure
from .brauer import brauer_table, enumerate_irreducibles
from .clifford import SUITE, clifford_correspondence, orbit_representatives, suite_pair
from .errors import InputError, ModCliffordError, PaperCheckFailure
from .field import FIELD_BOUND, make_field
from .group import generate, is_normal, named_group
from .rep import from_generator_images, natural, trivial
from .sl2gl2 import (
    compare_reference,
    emit_paper_tables,
    pol_k,
    reference_table,
    verify_section2,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 64


@dataclass
class RunConfig:
    command: str
    seed: int = 0
    field_bound: int = FIELD_BOUND
    budget: int = structure.MEATAXE_BUDGET
    suite: str = ""
    format: str = "text"
    out: str = ""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


# -- descriptors -------------------------------------------------------------------

def parse_group(desc, p, degree=None):
    """SL2, GL2, S4, A4, V4, D8, C4, S3, C3xS3, or file:<json with "generators">."""
    if desc.startswith("file:"):
        with open(desc[5:]) as fh:
            data = json.load(fh)
        return generate([np.asarray(g, dtype=np.int64) for g in data["generators"]], p=p, name=data.get("name", desc[5:]))
    try:
        return named_group(desc, p, degree=degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_sigma(desc, N, p, seed=0):
    """polk:<k>, trivial, natural, irr:<i>, or file:<json with "generator_images">."""
    if desc == "trivial":
        return trivial(N, make_field(p))
    if desc == "natural":
        return natural(N)
    if desc.startswith("polk:"):
        if N.name != f"SL2(F{p})":
            raise InputError("polk:<k> needs the normal subgroup SL2")
        return pol_k(p, int(desc[5:]))
    if desc.startswith("irr:"):
        irr = enumerate_irreducibles(N, p, seed=seed)
        i = int(desc[4:])
        if not 0 <= i < len(irr):
            raise InputError(f"irr:{i} out of range (0..{len(irr) - 1})")
        return irr[i]
    if desc.startswith("file:"):
        with open(desc[5:]) as fh:
            data = json.load(fh)
        ctx = make_field(p, data.get("k", 1))
        return from_generator_images(N, ctx, data["generator_images"], label=data.get("label", desc[5:]))
    raise InputError(f"unknown representation descriptor {desc!r}")


# -- commands ---------------------------------------------------------------------

def _emit(text, cfg):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _with_config(obj, cfg):
    obj = dict(obj)
    obj["run_config"] = asdict(cfg)
    return obj


def cmd_table(args, cfg):
    G = parse_group(args.group, args.p)
    if args.expect == "paper":
        key = args.group.upper()
        if args.p != 3 or key not in ("SL2", "GL2"):
            raise InputError("reference tables exist for SL2 and GL2 at p=3 only")
        table = reference_table(key, seed=cfg.seed)
        diffs = compare_reference(table, key)
    else:
        table = brauer_table(G, args.p, seed=cfg.seed)
        diffs = []
    if cfg.format == "json":
        text = json.dumps(_with_config(table.to_json_obj(), cfg), indent=2, ensure_ascii=False) + "\n"
    else:
        text = table.render(cfg.format)
    _emit(text, cfg)
    if diffs:
        for d in diffs:
            sys.stderr.write(f"mismatch {d[0]}: got {d[1]}, expected {d[2]}\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _clifford_reports(G, N, p, sigma_desc, seed):
    if sigma_desc:
        sigmas = [parse_sigma(sigma_desc, N, p, seed=seed)]
    else:
        sigmas = orbit_representatives(G, N, seed=seed)
    return [clifford_correspondence(s, G, seed=seed) for s in sigmas]


def cmd_clifford(args, cfg):
    G = parse_group(args.group, args.p)
    N = parse_group(args.normal, args.p, degree=G.degree if not args.normal.startswith("file:") and args.normal.upper() not in ("SL2", "GL2") else None)
    if not is_normal(G, N):
        from .errors import NotNormal

        raise NotNormal(f"{N.name} is not normal in {G.name}")
    reports = _clifford_reports(G, N, args.p, args.sigma, cfg.seed)
    if cfg.format == "json":
        obj = _with_config({"schema": "clifford-report/1", "reports": [r.to_json_obj() for r in reports]}, cfg)
        text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    else:
        text = "\n".join(r.to_text() for r in reports)
    _emit(text, cfg)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def run_suite(name, seed=0):
    """Every registered check of a suite as (check, statement, passed, detail) records."""
    records = []

    def rec(check, statement, passed, detail=""):
        records.append({"check": check, "statement": statement, "passed": bool(passed), "detail": detail})

    primes = (3, 5) if name == "paper" else (3,)
    _, ok = emit_paper_tables(seed=seed, strict=False)
    for key in ("SL2", "GL2"):
        diffs = compare_reference(reference_table(key, seed=seed), key)
        rec(f"table:{key}(F3)", "Brauer character table matches the reference", not diffs, "; ".join(map(str, diffs)))
    rec("table:induction", "Ind sigma_k = theta_k,0 + theta_k,1", ok)
    for p in primes:
        rep = verify_section2(p, seed=seed)
        for c in rep.checks:
            rec(f"section2:p={p}", c.clause, c.passed, c.detail)
    for gname, nname, p, deg in SUITE:
        if name == "quick" and p != 3:
            continue
        G, N = suite_pair(gname, nname, p, deg)
        for r in _clifford_reports(G, N, p, None, seed):
            for c in r.checks:
                rec(f"clifford:{gname}/{nname}:{r.sigma}", c.clause, c.passed, c.detail)
    return records


def cmd_verify(args, cfg):
    if not args.suite:
        sys.stderr.write("verify: empty selection; use --suite paper or --suite quick\n")
        return EXIT_USAGE
    records = run_suite(args.suite, seed=cfg.seed)
    passed = all(r["passed"] for r in records)
    if cfg.format == "json":
        obj = _with_config(
            {"schema": "verify-summary/1", "suite": args.suite, "checks": records, "passed": passed, "count": len(records)},
            cfg,
        )
        text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    else:
        lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']}  {r['statement']}" for r in records]
        lines.append(f"{sum(r['passed'] for r in records)}/{len(records)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg)
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_verify_section2(args, cfg):
    ks = None if args.k is None else [args.k]
    rep = verify_section2(args.p, seed=cfg.seed, ks=ks, allow_reducible=args.allow_reducible)
    if cfg.format == "json":
        text = json.dumps(_with_config(rep.to_json_obj(), cfg), indent=2, ensure_ascii=False) + "\n"
    else:
        text = rep.to_text()
    _emit(text, cfg)
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def cmd_emit_tables(args, cfg):
    try:
        text, ok = emit_paper_tables(seed=cfg.seed, fmt="json" if cfg.format == "json" else "text")
    except PaperCheckFailure as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_MISMATCH
    _emit(text, cfg)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser ----------------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="modclifford", description="Exact modular representation theory and Clifford correspondence checks.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", default="")
        sp.add_argument("--budget", type=int, default=structure.MEATAXE_BUDGET, help="Meataxe attempts")
        return sp

    t = common(sub.add_parser("table", help="Brauer character table"))
    t.add_argument("--group", required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--expect", choices=("paper",), default=None, help="compare with the reference tables")

    c = common(sub.add_parser("clifford", help="Clifford correspondence reports"))
    c.add_argument("--group", required=True)
    c.add_argument("--normal", required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--sigma", default="")
    c.add_argument("--json", dest="json_out", default="", help="write the JSON report to this path")

    v = common(sub.add_parser("verify", help="run a verification suite"))
    v.add_argument("--suite", choices=("paper", "quick"), default="")

    s = common(sub.add_parser("verify-section2", help="Pol_k and Pol_k(r) checks at one prime"))
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--allow-reducible", action="store_true")

    common(sub.add_parser("emit-tables", help="both reference tables with diffs"))
    return parser


COMMANDS = {
    "table": cmd_table,
    "clifford": cmd_clifford,
    "verify": cmd_verify,
    "verify-section2": cmd_verify_section2,
    "emit-tables": cmd_emit_tables,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "json_out", ""):
        args.format, args.out = "json", args.json_out
    cfg = RunConfig(
        command=args.command,
        seed=args.seed,
        budget=args.budget,
        suite=getattr(args, "suite", ""),
        format=args.format,
        out=args.out,
    )
    structure.MEATAXE_BUDGET = cfg.budget
    try:
        return COMMANDS[args.command](args, cfg)
    except PaperCheckFailure as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_MISMATCH
    except InputError as exc:
        sys.stderr.write(f"input error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except ModCliffordError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
