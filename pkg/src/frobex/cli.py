"""Command-line front end.

Commands: verify, gram, nakayama, dual-bases, centre-check, report-schema.
One config file = one algebra instance = one JSON report.  Exit codes:
0 all requested checks passed, 1 a verification failed (the report carries
the failing identity), 2 config errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import verifier as V
from .claims import run_claims
from .config import ConfigError, build_characters, build_instance, load_config
from .graded_hecke import OmegaInvalidError
from .report import (
    REPORT_SCHEMA_DOC,
    assemble,
    write_matrix_csv,
    write_report,
)


def _centre_section(alg, max_degree: int) -> dict:
    degrees = list(range(max_degree + 1))
    dims = []
    expected = []
    for d in degrees:
        _basis, vectors = alg.centre_in_degree(d)
        dims.append(len(vectors))
        expected.append(
            sum(len(alg.coinv_v.inv_monomials_of_degree(t)) for t in range(d + 1))
        )
    # the found centre slice must contain a central lift for every invariant
    lifts_central = True
    gens = [alg.gen_x(i) for i in range(alg.group.dim)]
    gens.extend(alg.gen_w(g) for g in alg.group.generator_indices)
    for mu_deg in range(max_degree + 1):
        for mu in alg.coinv_v.inv_monomials_of_degree(mu_deg):
            z = alg.central_monomial(mu)
            for g in gens:
                if alg.multiply(z, g) != alg.multiply(g, z):
                    lifts_central = False
    return {
        "degrees": degrees,
        "dimensions": dims,
        "expected": expected,
        "invariant_lifts_central": lifts_central,
        "ok": dims == expected and lifts_central,
    }


def run_config(cfg, threads=None, out_dir=None, csv=None):
    """Execute one config; returns (exit_code, report dict)."""
    threads = cfg.threads if threads is None else threads
    out_dir = cfg.out_dir if out_dir is None else out_dir
    csv = cfg.csv if csv is None else csv
    t_start = time.time()
    timing = {}

    alg, inst, unit_vars = build_instance(cfg)
    characters = build_characters(cfg, inst, unit_vars)
    rng = random.Random(cfg.seed)

    instance_summary = dict(inst.summary)
    instance_summary["dimension"] = inst.dim
    instance_summary["free_rank_declared"] = inst.declared_rank

    hypothesis_section = None
    if "hypothesis" in cfg.checks:
        t0 = time.time()
        wl = V.check_hypothesis(inst, rng, n_random=cfg.hypothesis_samples)
        timing["hypothesis_s"] = round(time.time() - t0, 3)
        hypothesis_section = {
            "checked": wl.checked,
            "failures": len(wl.failures),
            "failure_log": wl.failures[:10],
            "log": wl.entries[:20],
        }

    centre_section = None
    if "centre" in cfg.checks:
        if cfg.algebra != "graded-hecke":
            raise ConfigError("the 'centre' check applies to graded-hecke only")
        t0 = time.time()
        centre_section = _centre_section(alg, cfg.centre_check_degree)
        timing["centre_s"] = round(time.time() - t0, 3)

    sections = []
    for label, chi in characters:
        t0 = time.time()
        sec = {
            "label": label,
            "assignment": {v: str(x) for v, x in sorted(chi.items())},
        }
        passed = True
        g = None
        need_gram = any(c in cfg.checks for c in ("gram", "nakayama", "dual"))
        if need_gram:
            g = V.gram(inst, chi, threads=threads)
            rank = g.rank()
            sym = g.is_symmetric()
            sec["gram"] = {
                "rank": rank,
                "symmetric": sym,
                "full_rank": rank == inst.declared_rank,
            }
            if rank != inst.declared_rank:
                passed = False
        if "nakayama" in cfg.checks and g is not None:
            try:
                nres = V.nakayama(
                    inst, chi, g, rng=rng, reduce_fn=V.make_reduce(inst, chi)
                )
                sec["nakayama"] = {
                    "is_identity": nres.is_identity,
                    "round_trip": nres.round_trip_ok,
                    "multiplicative": nres.multiplicative_ok,
                    "generator_images": nres.generator_images,
                    "failures": nres.failures,
                }
                if nres.failures:
                    passed = False
                nak_matrix = nres.matrix
            except V.VerificationFailure as exc:
                sec["nakayama"] = {"failures": [str(exc)]}
                passed = False
                nak_matrix = None
        else:
            nak_matrix = None
        if "dual" in cfg.checks and g is not None:
            entry = {}
            ok = True
            if inst.dual_pair_mode is not None:
                pair_ok, fails, units = V.dual_pair_check(inst, g, chi)
                entry["pair_diagonal"] = pair_ok
                entry["units"] = sorted(set(units))
                entry["failures"] = fails[:10]
                ok = pair_ok
            if inst.dim <= 64:
                try:
                    V.dual_basis(inst, g)
                    entry["inverse_verified"] = True
                except V.VerificationFailure as exc:
                    entry["inverse_verified"] = False
                    entry.setdefault("failures", []).append(str(exc))
                    ok = False
            sec["dual"] = entry
            if not ok:
                passed = False
        if hypothesis_section is not None:
            sec["hypothesis"] = hypothesis_section
            if hypothesis_section["failures"]:
                passed = False
        if "claims" in cfg.checks:
            cl = run_claims(alg, inst, rng, chi=chi)
            sec["claims"] = cl
            if not cl["ok"]:
                passed = False
        if csv and g is not None:
            paths = {}
            paths["gram"] = write_matrix_csv(out_dir, f"{cfg.name}.{label}.gram", g)
            if nak_matrix is not None:
                paths["nakayama"] = write_matrix_csv(
                    out_dir, f"{cfg.name}.{label}.nakayama", nak_matrix
                )
            sec["csv"] = paths
        sec["passed"] = passed
        timing[f"chi[{label}]_s"] = round(time.time() - t0, 3)
        sections.append(sec)

    report = assemble(
        cfg.name,
        cfg.seed,
        cfg.checks,
        instance_summary,
        sections,
        timing,
    )
    if centre_section is not None:
        report["centre"] = centre_section
        if not centre_section["ok"]:
            report["passed"] = False
    timing["total_s"] = round(time.time() - t_start, 3)
    path = write_report(out_dir, cfg.name, report)
    report["_path"] = path
    return (0 if report["passed"] else 1), report


def _add_common(p):
    p.add_argument("--config", required=True, help="TOML config path")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default=None, help="report output directory")
    p.add_argument("--csv", action="store_true", default=None)


CHECK_OVERRIDES = {
    "verify": None,
    "gram": ("gram",),
    "nakayama": ("gram", "nakayama"),
    "dual-bases": ("gram", "dual"),
    "centre-check": ("centre",),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="frobex",
        description="Exact Frobenius-extension verification for PBW algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in ("verify", "gram", "nakayama", "dual-bases", "centre-check"):
        _add_common(sub.add_parser(cmd))
    sub.add_parser("report-schema")
    args = parser.parse_args(argv)

    if args.command == "report-schema":
        print(REPORT_SCHEMA_DOC)
        return 0

    try:
        cfg = load_config(args.config)
        override = CHECK_OVERRIDES[args.command]
        if override is not None:
            cfg.checks = override
        code, report = run_config(
            cfg, threads=args.threads, out_dir=args.out, csv=args.csv
        )
    except (ConfigError, FileNotFoundError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OmegaInvalidError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    print(f"{report['name']}: {'PASS' if code == 0 else 'FAIL'} -> {report['_path']}")
    return code


if __name__ == "__main__":
    sys.exit(main())
