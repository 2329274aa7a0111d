"""Command-line interface.

Subcommands: verify, dual, monodromy, shephard, sw, mirror, build,
list-checks.  Exit codes: 0 all checks pass, 1 at least one check failed,
2 usage errors (unknown manifold or type).  Reports are JSON, written
atomically; identical configurations and seeds give byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .report import Report
from .registry import list_checks as registry_dump

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MANIFOLDS = ("a1", "a2", "a3", "a4", "a5", "a6", "cp1", "trivial2")
ROOTSYSTEMS = ("a1", "a2", "a3", "a4", "b2", "b3", "g2",
               "i2-3", "i2-4", "i2-5", "i2-6", "i2-7", "i2-8", "i2-9", "i2-10",
               "h3")


class UsageError(Exception):
    pass


def _build_manifold(name: str, qorder: int = 8):
    from .constructors import an_orbit_space, qh_cp1, trivial_manifold, FrobeniusAlgebra
    name = name.lower()
    if name.startswith("a") and name[1:].isdigit():
        return an_orbit_space(int(name[1:]))
    if name == "cp1":
        return qh_cp1(qorder)
    if name == "trivial2":
        alg = FrobeniusAlgebra(
            mult=[[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
            pairing=[[1, 0], [0, 1]],
            unity=[1, 0])
        return trivial_manifold(alg)
    raise UsageError(f"unknown manifold {name!r} (choose from {MANIFOLDS})")


def _root_system(name: str):
    from .constructors import root_system
    try:
        return root_system(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _jobs(args) -> int:
    if getattr(args, "jobs", None):
        return max(1, args.jobs)
    env = os.environ.get("FROBENIUS_JOBS")
    return max(1, int(env)) if env else 1


def cmd_verify(args) -> Report:
    from .core import (wdvv_check, quasihomogeneity_check, grading_checks,
                       intersection_form, flat_pencil_check)
    from .dual import rational_samples
    M = _build_manifold(args.manifold)
    rep = Report("verify", {"manifold": args.manifold, "seed": args.seed,
                            "samples": args.samples})
    w = wdvv_check(M)
    rep.add("wdvv", "exact-pass" if not w.data["associativity_residuals"] else "fail",
            data={"nonzero_components": sorted(
                str(k) for k in w.data["associativity_residuals"])})
    rep.add("wdvv-normalization",
            "exact-pass" if not w.data["normalization_residuals"] else "fail")
    q = quasihomogeneity_check(M)
    rep.add("quasihomogeneity", "exact-pass" if q.ok else "fail",
            data={"excess_degree": q.data["excess"].total_degree()})
    g = grading_checks(M)
    rep.add("grading-antisymmetry", "exact-pass" if g.ok else "fail")
    i = intersection_form(M)
    rep.add("intersection-form", "exact-pass" if i.ok else "fail")
    pts = rational_samples(M.n, args.samples, args.seed, denom_max=5, lo=1, hi=4)
    if M.exp_var:
        pts = [tuple(list(p[:-1]) + [Fraction(1, 3)]) for p in pts]
    pr = flat_pencil_check(M, pts, [Fraction(0), Fraction(1), Fraction(-2)])
    rep.add("flat-pencil", "numeric-pass" if pr.ok else "fail",
            residual=pr.max_curvature,
            data={"samples": len(pr.samples), "skipped": len(pr.skipped)})
    return rep


def cmd_dual(args) -> Report:
    from .dual import (dual_wdvv_check, homogeneity_check, an_law_check,
                       epd_specialization)
    R = _root_system(args.type)
    rep = Report("dual", {"type": args.type, "samples": args.samples,
                          "seed": args.seed, "checks": args.check})
    wanted = args.check.split(",")
    jobs = _jobs(args)
    if "wdvv" in wanted:
        if jobs > 1:
            from .dual import rational_samples, coxeter_dual_potential, MirrorHitError, _assoc_residual
            samples = rational_samples(R.dim, args.samples, args.seed)
            D = coxeter_dual_potential(R)

            def one(x):
                try:
                    return _assoc_residual(D.third_derivatives(x), R.dim) is None
                except MirrorHitError:
                    return None
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(one, samples))
            checked = sum(1 for r in results if r is not None)
            okall = all(r for r in results if r is not None) and checked > 0
            rep.add("dual-wdvv", "exact-pass" if okall else "fail",
                    data={"checked": checked,
                          "skipped": len(results) - checked})
        else:
            r = dual_wdvv_check(R, count=args.samples, seed=args.seed)
            rep.add("dual-wdvv", "exact-pass" if r.ok else "fail",
                    data={"checked": r.checked, "skipped": r.skipped})
    if "homogeneity" in wanted:
        h = homogeneity_check(R)
        rep.add("dual-homogeneity",
                "exact-pass" if h["root_sum_ok"] and h["matches_stated"] else "fail",
                data={"constant": h["constant"]})
    if "epd" in wanted and R.tag.startswith("A"):
        e = epd_specialization(R.rank)
        rep.add("euler-poisson-darboux", "exact-pass" if e["ok"] else "fail")
        law = an_law_check(R.rank)
        rep.add("dual-law", "exact-pass" if law["ok"] else "fail",
                data={"displayed_coefficient": law["displayed_coefficient"],
                      "true_coefficient": law["true_coefficient"]})
    return rep


def cmd_monodromy(args) -> Report:
    import numpy as np
    from .core import canonical_frame
    from .monodromy import assemble_fuchsian, monodromy_matrices
    name = args.manifold.lower()
    if not (name.startswith("a") and name[1:].isdigit()):
        raise UsageError("monodromy runs on the polynomial manifolds a1..a4")
    M = _build_manifold(name)
    R = _root_system(name)
    nu = Fraction(args.nu)
    t0 = tuple([Fraction(0)] * (M.n - 1) + [Fraction(1)])
    frame = canonical_frame(M, t0, phi_angle=args.phi)
    P = assemble_fuchsian(frame, nu)
    res = monodromy_matrices(P, rootsys=R, min_steps=args.loop_steps)
    rep = Report("monodromy", {"manifold": args.manifold, "nu": str(nu),
                               "phi": args.phi, "loop_steps": args.loop_steps,
                               "base_point": complex(P.base_point)})
    rd = res.residuals
    rep.add("monodromy-spectrum",
            "numeric-pass" if rd["spectrum"] < 1e-6 else "fail",
            residual=rd["spectrum"])
    rep.add("monodromy-reflection",
            "numeric-pass" if rd["reflection"] < 1e-5 else "fail",
            residual=rd["reflection"],
            data={"gauge": [complex(g) for g in res.gauge]})
    rep.add("monodromy-total",
            "numeric-pass" if rd["total_monodromy"] < 1e-5 else "fail",
            residual=rd["total_monodromy"])
    if "gram_preserved" in rd:
        rep.add("gram-preserved",
                "numeric-pass" if rd["gram_preserved"] < 1e-6 else "fail",
                residual=rd["gram_preserved"])
    rep.add("fuchsian-residues", "exact-pass")
    data = {"M": [[[complex(x) for x in row] for row in Mi] for Mi in res.M],
            "q": complex(res.q)}
    rep.checks[-1]["data"] = {"matrices": "see data", "q": str(res.q)}
    del data
    return rep


def cmd_shephard(args) -> Report:
    from .monodromy import (shephard_group, nu_for_kappa, ClosureCapError,
                            DegenerateQFormError)
    R = _root_system(args.type)
    kappa = Fraction(args.kappa)
    rep = Report("shephard", {"type": args.type, "kappa": str(kappa),
                              "cap": args.cap})
    try:
        grp = shephard_group(R, kappa, cap=args.cap)
    except ClosureCapError as exc:
        rep.add("shephard-closure", "fail",
                data={"reason": "closure exceeded the cap; finiteness undecided",
                      "cap": exc.cap})
        return rep
    except DegenerateQFormError as exc:
        rep.add("shephard-closure", "fail", data={"reason": str(exc)})
        return rep
    nu = nu_for_kappa(R.h, kappa)
    gen_order = None
    hist = grp.element_order_histogram()
    rep.add("shephard-closure", "exact-pass",
            data={"order": grp.order, "nu": str(nu),
                  "conductor": grp.conductor,
                  "element_order_histogram": {str(k): v for k, v in sorted(hist.items())},
                  "note": "group order computed by closure, not quoted"})
    rep.add("shephard-quadratic", "exact-pass")
    del gen_order
    return rep


def cmd_sw(args) -> Report:
    from .constructors import an_orbit_space
    from .sw import (sw_x_series, invert_series, composition_check,
                     sw_prepotential, canonical_bracket_check, lim_y_check,
                     cross_system_checks, golden_a1_check)
    from .dual import rational_samples
    name = args.type.lower()
    if not (name.startswith("a") and name[1:].isdigit()):
        raise UsageError("instanton expansions ship for a1..a4")
    n = int(name[1:])
    M = an_orbit_space(n)
    order = args.order
    rep = Report("sw", {"type": args.type, "order": order, "seed": args.seed})
    E = sw_x_series(M, order)
    if n == 1:
        g = golden_a1_check(E)
        rep.add("a1-golden-series", "exact-pass" if g["ok"] else "fail",
                data={"orders": order})
    cs = cross_system_checks(M, K=min(order, 3))
    rep.add("varpi-system", "exact-pass" if cs["ok"] else "fail", data=cs)
    invert_series(E)
    pt = _sw_sample(M, args.seed)
    comp = composition_check(E, pt)
    prep = sw_prepotential(E)
    rep.add("hamilton-jacobi",
            "exact-pass" if prep["hj_residual_zero"] and comp else "fail",
            data={"composition": comp, "H0_quadratic": prep["H0_is_quadratic"]})
    br = canonical_bracket_check(E, pt)
    rep.add("canonical-brackets", "exact-pass" if br["ok"] else "fail",
            data={"XX": br["XX"], "XY": br["XY"], "YY": br["YY"]})
    ly = lim_y_check(E, pt)
    rep.add("y-asymptotics", "exact-pass" if ly["ok"] else "fail")
    if args.emit:
        payload = {
            "type": args.type, "order": order,
            "X_series": [[_detrat_json(E.x_coeff(k, a)) for k in range(order + 1)]
                          for a in range(M.n)],
        }
        _write_json(args.emit, payload)
    return rep


def _sw_sample(M, seed):
    from .dual import rational_samples
    chart = M.chart
    for cand in rational_samples(M.n, 50, seed, denom_max=3, lo=1, hi=6):
        pt = {v: x for v, x in zip(chart.zvars, cand)}
        vals = list(cand) + [-sum(cand)]
        if len(set(vals)) == len(vals) and chart.jac_det.eval(pt) != 0:
            return pt
    raise RuntimeError("no generic sample found")


def _detrat_json(f):
    return {"num": f.num.to_json(), "det_power": f.e}


def cmd_mirror(args) -> Report:
    from .mirror import quintic_pf_check, cp_period_series
    rep = Report("mirror", {"order": args.order})
    if args.quintic:
        r = quintic_pf_check(args.order)
        rep.add("quintic-coefficients", "exact-pass" if r["ok"] else "fail",
                data={"c1": r["c1"], "c2": r["c2"], "note": r["note"]})
        rep.add("cp-period-recursion",
                "exact-pass" if r["back_substitution_ok"] else "fail")
        if args.csv:
            from .mirror import quintic_recursion_series
            rows = quintic_recursion_series(args.order)
            with open(args.csv, "w") as fh:
                fh.write("k,coefficient\n")
                for k, c in enumerate(rows):
                    fh.write(f"{k},{c}\n")
    else:
        coeffs = cp_period_series(args.dim, Fraction(args.nu), 0, args.order,
                                  t1=Fraction(args.t1))
        rep.add("cp-period-recursion", "exact-pass",
                data={"coefficients": [str(c) for c in coeffs]})
    return rep


def cmd_build(args) -> Report:
    M = _build_manifold(args.type)
    rep = Report("build", {"type": args.type, "emit": args.emit})
    payload = {
        "name": M.name,
        "dimension": M.n,
        "charge": str(M.d),
        "potential": M.F.to_json(),
        "eta": [[str(x) for x in row] for row in M.eta],
        "euler_linear": [[str(x) for x in row] for row in M.euler_a],
        "euler_const": [str(x) for x in M.euler_b],
    }
    if args.emit:
        _write_json(args.emit, payload)
    rep.add("series-inversion", "exact-pass", data={"emitted": bool(args.emit)})
    return rep


def _write_json(path, payload):
    import tempfile
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frobenius",
        description="exact and numerical checks for Frobenius manifolds and "
                    "their almost-dual structures")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="axioms and flat-pencil checks")
    p.add_argument("--manifold", required=True)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("dual", help="dual potential and associativity checks")
    p.add_argument("--type", required=True)
    p.add_argument("--check", default="wdvv,homogeneity,epd")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("monodromy", help="twisted-period monodromy continuation")
    p.add_argument("--manifold", required=True)
    p.add_argument("--nu", default="1/6")
    p.add_argument("--phi", type=float, default=0.08)
    p.add_argument("--loop-steps", type=int, default=720)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("shephard", help="exact reflection-group closure")
    p.add_argument("--type", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("sw", help="instanton-expansion identities")
    p.add_argument("--type", required=True)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit")
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("mirror", help="projective-space period series")
    p.add_argument("--quintic", action="store_true")
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--nu", default="1/2")
    p.add_argument("--t1", default="-1")
    p.add_argument("--csv")
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("build", help="emit a manifold as canonical JSON")
    p.add_argument("--type", required=True)
    p.add_argument("--emit")
    p.add_argument("--report")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("list-checks", help="dump the check registry")
    p.add_argument("--report")

    return ap


COMMANDS = {
    "verify": cmd_verify,
    "dual": cmd_dual,
    "monodromy": cmd_monodromy,
    "shephard": cmd_shephard,
    "sw": cmd_sw,
    "mirror": cmd_mirror,
    "build": cmd_build,
}


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    if args.command == "list-checks":
        rows = registry_dump()
        for row in rows:
            print(f"{row['check_id']:28s} {row['equation_tag']:12s} {row['anchor']}")
        if args.report:
            _write_json(args.report, {"checks": rows})
        return EXIT_OK
    try:
        rep = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for c in rep.checks:
        mark = {"exact-pass": "PASS (exact)", "numeric-pass": "PASS (numeric)",
                "fail": "FAIL", "skipped": "SKIP"}[c["status"]]
        resid = f"  residual={c.get('residual')}" if "residual" in c else ""
        print(f"{c['check_id']:28s} [{c['equation_tag']:10s}] {mark}{resid}")
    if getattr(args, "report", None):
        rep.write(args.report)
        print(f"report written to {args.report}")
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
