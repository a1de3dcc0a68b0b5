"""Command line front end.

Usage::

    chisini invariants --d 10 --g 51 --c 108 --N 5
    chisini chisini --d 9 --g 28 --c 72 --N 6
    chisini family --family general-type --enumerate-exceptions
    chisini family --family enriques --k 2
    chisini search --d-max 6 --g-max 3
    chisini homcount presentations/br3.yaml --N 3
    chisini lemma9 3 4 --format json

Exit status: 0 on success, 2 when the input fails a validity condition (the
condition or exception name goes to stderr), 1 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from .criterion import chisini_check, fiber_product_numbers
from .errors import BudgetExceeded, InvariantError, PresentationError
from .families import (
    Family,
    abelian_double_cover,
    ample_power_curve,
    ample_power_margin,
    ample_power_threshold,
    complete_intersection,
    del_pezzo,
    dual_of_nodal,
    enumerate_dual_nodal_exceptions,
    enumerate_general_type_exceptions,
    general_type_impossible_cases,
    general_type_mk,
    minimal_persson_p,
    quadric,
    trivial_canonical,
    zariski_triple,
)
from .invariants import (
    CurveInvariants,
    complete_morphism_invariants,
    dual_plane_curve,
    hodge_degree_bound,
    line_degree_bound,
    plucker_dual,
    validate_discriminant_candidate,
)
from .lattice import verify_product_orbits
from .perm import Permutation
from .presentation import enumerate_admissible, load_presentation, local_model_suite
from .records import OutputRecord
from .search import (
    SearchConstraintProfile,
    canonical_conditions,
    find_potential_counterexamples,
    singular_divisor_degree_check,
)

# defaults for the exception sweeps; every known exception is well inside
SWEEP_DEFAULTS = {"m_max": 8, "k_max": 20, "pa_max": 20, "delta_max": 12}


class UsageError(Exception):
    pass


class ValidationFailed(Exception):
    """Raised after the record is built when the input violates a condition."""

    def __init__(self, record: OutputRecord, reasons: Sequence[str]):
        super().__init__(", ".join(reasons))
        self.record = record
        self.reasons = list(reasons)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _curve(args) -> CurveInvariants:
    if args.n is None:
        return CurveInvariants.from_dgc(args.d, args.g, args.c)
    return CurveInvariants(args.d, args.g, args.c, args.n)


def _curve_params(args) -> dict:
    return {k: getattr(args, k) for k in ("d", "g", "c", "n") if getattr(args, k, None) is not None}


def _verdict_dict(v) -> dict:
    return {
        "N": v.N,
        "threshold": v.threshold,
        "unique": v.unique,
        "max_competing_degree": v.max_competing_degree,
    }


def _case_dict(case) -> dict:
    out = {"family": case.family, "params": case.params}
    if case.curve is not None:
        cv = case.curve
        out["curve"] = {"degree": cv.degree, "d": cv.d, "g": cv.g, "c": cv.c, "n": cv.n}
    out["N"] = case.N
    if case.verdict is not None:
        out["verdict"] = _verdict_dict(case.verdict)
    out["unique"] = case.unique
    if case.extra:
        out["extra"] = case.extra
    out["flag"] = case.flag
    out["notes"] = list(case.notes)
    return out


# -- subcommands -------------------------------------------------------------


def cmd_invariants(args) -> OutputRecord:
    inv = _curve(args)
    report = validate_discriminant_candidate(inv)
    result: dict = {
        "curve": {"degree": inv.degree, "d": inv.d, "g": inv.g, "c": inv.c, "n": inv.n},
        "checks": [{"name": ch.name, "passed": ch.passed, "detail": ch.detail} for ch in report.checks],
        "smooth_double_plane": report.smooth_double_plane,
        "dual": report.dual,
        "hodge_degree_bound": hodge_degree_bound(inv.d, inv.g),
        "line_degree_bound": line_degree_bound(inv.d),
    }
    params = _curve_params(args)
    notes = []
    if args.N is not None:
        params["N"] = args.N
        result["verdict"] = _verdict_dict(chisini_check(inv, args.N))
        try:
            result["morphism"] = complete_morphism_invariants(inv, args.N)
        except InvariantError as exc:
            notes.append(f"{type(exc).__name__}: {exc}")
    rec = OutputRecord("invariants", params, result, notes + report.violations)
    if not report.ok:
        raise ValidationFailed(rec, report.violations)
    return rec


def cmd_dual(args) -> OutputRecord:
    if args.degree is not None:
        if args.d is not None:
            raise UsageError("give either --d or --degree, not both")
        if args.n is None:
            raise UsageError("--degree needs --n (nodes)")
        delta, genus, gamma, nu = dual_plane_curve(args.degree, args.g, args.c, args.n)
        params = {"degree": args.degree, "g": args.g, "c": args.c, "n": args.n}
        return OutputRecord("dual", params, {"delta": delta, "genus": genus, "gamma": gamma, "nu": nu})
    if args.d is None:
        raise UsageError("one of --d or --degree is required")
    inv = _curve(args)
    dual = plucker_dual(inv)
    return OutputRecord("dual", _curve_params(args), {"delta": dual.delta, "genus": inv.g, "gamma": dual.gamma, "nu": dual.nu})


def cmd_chisini(args) -> OutputRecord:
    inv = _curve(args)
    result = _verdict_dict(chisini_check(inv, args.N))
    notes = []
    try:
        result["morphism"] = complete_morphism_invariants(inv, args.N)
    except InvariantError as exc:
        notes.append(f"no cover of degree {args.N}: {type(exc).__name__}")
    return OutputRecord("chisini", {**_curve_params(args), "N": args.N}, result, notes)


def cmd_fiber(args) -> OutputRecord:
    inv = _curve(args)
    nums = fiber_product_numbers(inv, args.N1, args.N2)
    return OutputRecord("fiber", {**_curve_params(args), "N1": args.N1, "N2": args.N2}, nums)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return [getattr(args, n) for n in names]


def cmd_family(args) -> OutputRecord:
    fam = Family(args.family)
    sweep = {k: getattr(args, k) for k in SWEEP_DEFAULTS}
    if args.enumerate_exceptions:
        if fam is Family.GeneralTypeMK:
            cases = enumerate_general_type_exceptions(sweep["k_max"], sweep["pa_max"], sweep["m_max"])
            params = {"family": fam, "enumerate_exceptions": True, "m_max": sweep["m_max"],
                      "k_max": sweep["k_max"], "pa_max": sweep["pa_max"]}
            notes = []
            if args.impossible:
                for p, reason in general_type_impossible_cases(sweep["k_max"], sweep["pa_max"], sweep["m_max"]):
                    notes.append(f"m={p['m']} k={p['k']} p_a={p['p_a']}: {reason}")
        elif fam is Family.DualOfNodal:
            cases = enumerate_dual_nodal_exceptions(3, sweep["delta_max"])
            params = {"family": fam, "enumerate_exceptions": True, "delta_max": sweep["delta_max"]}
            notes = []
        else:
            raise UsageError("--enumerate-exceptions is available for general-type and dual-nodal")
        result = {
            "count": len(cases),
            "cases": [_case_dict(c) for c in cases],
            "max_competing_degree": max((c.verdict.max_competing_degree for c in cases), default=None),
        }
        return OutputRecord("family", params, result, notes)

    if fam is Family.GeneralTypeMK:
        m, k, p_a = _need(args, "m", "k", "p_a")
        case = general_type_mk(m, k, p_a)
    elif fam is Family.DelPezzo:
        case = del_pezzo(*_need(args, "m", "k"))
    elif fam is Family.QuadricP1xP1:
        case = quadric(*_need(args, "a", "b"))
    elif fam in (Family.K3, Family.Enriques, Family.Abelian):
        case = trivial_canonical(*_need(args, "k"), fam)
    elif fam is Family.CompleteIntersection:
        case = complete_intersection(_need(args, "degrees")[0])
    elif fam is Family.DualOfNodal:
        case = dual_of_nodal(*_need(args, "delta", "g"))
    elif fam is Family.AmpleLPower:
        a, b, k, e = _need(args, "a", "b", "k", "euler")
        params = {"family": fam, "a": a, "b": b, "k": k, "euler": e}
        if args.m is None:
            result = {
                "m0": ample_power_threshold(a, b, k, e),
                "m0_realizable": ample_power_threshold(a, b, k, e, realizable_only=True),
            }
        else:
            params["m"] = args.m
            curve = ample_power_curve(args.m, a, b, k, e)
            margin = ample_power_margin(args.m, a, b, k, e)
            result = {"margin": margin, "unique": margin > 0, "curve": curve}
        return OutputRecord("family", params, result)
    elif fam is Family.ZariskiTriple:
        (m,) = _need(args, "m")
        deg, g, c = zariski_triple(m)
        return OutputRecord("family", {"family": fam, "m": m}, {"degree": deg, "g": g, "c": c})
    elif fam is Family.AbelianDoubleCover:
        if args.p is None:
            p = minimal_persson_p()
            return OutputRecord("family", {"family": fam}, {"minimal_p": p, "K2": 4 * p, "chi": p})
        K2, chi = abelian_double_cover(args.p)
        return OutputRecord("family", {"family": fam, "p": args.p}, {"K2": K2, "chi": chi})
    else:  # pragma: no cover - Family is closed
        raise UsageError(f"unknown family {fam}")
    return OutputRecord("family", {"family": fam, **case.params}, _case_dict(case))


def cmd_search(args) -> OutputRecord:
    profile = SearchConstraintProfile(
        d_range=(args.d_min, args.d_max),
        g_range=(args.g_min, args.g_max),
        N_min=args.N_min,
        require_genus_formula=not args.no_genus_formula,
        require_dual_bounds=not args.no_dual_bounds,
        require_nori_bound=not args.no_nori,
        require_congruences=not args.no_congruences,
        require_dual_nonneg=not args.no_dual_nonneg,
    )
    res = find_potential_counterexamples(profile, workers=args.workers)
    counts: dict[str, int] = {}
    for p in res.eliminated:
        counts[p.reason] = counts.get(p.reason, 0) + 1
    result = {
        "survivors": [
            {"d": p.d, "g": p.g, "c": p.c, "n": p.n, "N_interval": p.N_interval} for p in res.survivors
        ],
        "eliminated_total": len(res.eliminated),
        "eliminated_by": dict(sorted(counts.items())),
    }
    if args.show_eliminated:
        result["eliminated"] = [{"d": p.d, "g": p.g, "c": p.c, "n": p.n, "reason": p.reason} for p in res.eliminated]
    return OutputRecord("search", profile, result)


def cmd_canonical(args) -> OutputRecord:
    inv = _curve(args)
    check = canonical_conditions(inv)
    result = {
        "m": check.m, "k": check.k, "N": check.N, "p_a": check.p_a,
        "all_integral": check.all_integral, "h0_dims": check.h0_dims,
    }
    if check.all_integral:
        result["singular_divisor_degree_ok"] = singular_divisor_degree_check(inv, int(check.m), int(check.k))
    return OutputRecord("canonical", _curve_params(args), result)


def cmd_homcount(args) -> OutputRecord:
    pres = load_presentation(args.presentation)
    classes = enumerate_admissible(pres, args.N, budget=args.budget, require_epimorphism=not args.all)
    result = {
        "classes": len(classes),
        "representatives": [
            {"images": h.describe(pres.generators), "class_size": h.class_size} for h in classes
        ],
    }
    params = {"presentation": args.presentation, "N": args.N, "require_epimorphism": not args.all}
    return OutputRecord("homcount", params, result)


def cmd_lemma9(args) -> OutputRecord:
    rep = verify_product_orbits(args.N1, args.N2, budget=args.budget)
    result = {
        "group_order": rep.group_order,
        "subgroups_containing_t": rep.subgroups_containing_t,
        "qualifying": len(rep.qualifying),
        "case_counts": rep.case_counts(),
        "diagonal": rep.diagonal_count,
        "violations": len(rep.violations),
        "ok": rep.ok,
        "subgroups": [
            {"order": q.order, "kernels": "/".join(q.kernel_types), "origin_orbit": q.origin_orbit,
             "orbit_sizes": q.orbit_sizes, "diagonal": q.diagonal_conjugate}
            for q in rep.qualifying
        ],
    }
    rec = OutputRecord("lemma9", {"N1": args.N1, "N2": args.N2}, result)
    if not rep.ok:
        raise ValidationFailed(rec, ["orbit_violation"])
    return rec


def _perm(n: int, text: str | None) -> Permutation | None:
    if text is None:
        return None
    try:
        return Permutation.parse(n, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_localmodels(args) -> OutputRecord:
    suite = local_model_suite(_perm(3, args.a), _perm(3, args.b))
    params = {"a": args.a or "(1 2)", "b": args.b or "(2 3)"}
    result = {"ok": suite.ok, "checks": [{"name": i.name, "passed": i.passed, "detail": i.detail} for i in suite.items]}
    rec = OutputRecord("localmodels", params, result)
    if not suite.ok:
        raise ValidationFailed(rec, [i.name for i in suite.items if not i.passed])
    return rec


# -- parser ------------------------------------------------------------------


def _add_curve(p, *, required=True):
    p.add_argument("--d", type=int, required=required, help="half the degree of the branch curve")
    p.add_argument("--g", type=int, required=True, help="geometric genus")
    p.add_argument("--c", type=int, required=True, help="number of cusps")
    p.add_argument("--n", type=int, help="number of nodes (default: from the genus formula)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")

    parser = _Parser(prog="chisini", description="Invariants and uniqueness checks for generic covers of the plane.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func: Callable, help_: str):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("invariants", cmd_invariants, "validity report for a curve (d, g, c[, n])")
    _add_curve(p)
    p.add_argument("--N", type=int, help="also compute the surface invariants of a degree-N cover")

    p = add("dual", cmd_dual, "Pluecker dual of a curve")
    _add_curve(p, required=False)
    p.add_argument("--degree", type=int, help="full degree (allows odd degrees; needs --n)")

    p = add("chisini", cmd_chisini, "uniqueness verdict for a degree-N cover")
    _add_curve(p)
    p.add_argument("--N", type=int, required=True)

    p = add("fiber", cmd_fiber, "intersection numbers on the fiber product of two covers")
    _add_curve(p)
    p.add_argument("--N1", type=int, required=True)
    p.add_argument("--N2", type=int, required=True)

    p = add("family", cmd_family, "branch curves of a surface family")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    for flag in ("m", "k", "a", "b", "p", "delta", "g", "euler"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--p-a", dest="p_a", type=int)
    p.add_argument("--degrees", type=int, nargs="+")
    p.add_argument("--enumerate-exceptions", action="store_true")
    p.add_argument("--impossible", action="store_true", help="list parameters rejected outright (general-type)")
    for key, default in SWEEP_DEFAULTS.items():
        p.add_argument("--" + key.replace("_", "-"), dest=key, type=int, default=default)

    p = add("search", cmd_search, "lattice search for curves allowing two covers")
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--g-min", type=int, default=0)
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--N-min", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--show-eliminated", action="store_true")
    for flag in ("genus-formula", "dual-bounds", "nori", "congruences", "dual-nonneg"):
        p.add_argument(f"--no-{flag}", action="store_true", help=f"drop the {flag} constraint")

    p = add("canonical", cmd_canonical, "checks for an m-canonical branch curve")
    _add_curve(p)

    p = add("homcount", cmd_homcount, "admissible monodromy classes for a presentation")
    p.add_argument("presentation", help="YAML presentation file")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--all", action="store_true", help="do not require the image to be all of S_N")

    p = add("lemma9", cmd_lemma9, "orbit of (1,1) for subgroups of S_N1 x S_N2")
    p.add_argument("N1", type=int)
    p.add_argument("N2", type=int)
    p.add_argument("--budget", type=int, default=200_000)

    p = add("localmodels", cmd_localmodels, "checks on the three-sheeted cusp model")
    p.add_argument("--a", help="image of a, e.g. '(1 2)'")
    p.add_argument("--b", help="image of b, e.g. '(2 3)'")
    return parser


def _emit(rec: OutputRecord, fmt: str, out) -> None:
    out.write((rec.to_json() if fmt == "json" else rec.to_table()) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        rec = args.func(args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 1
    except ValidationFailed as exc:
        _emit(exc.record, args.format, stdout)
        stderr.write(f"validation failed: {', '.join(exc.reasons)}\n")
        return 2
    except (InvariantError, PresentationError, BudgetExceeded) as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    _emit(rec, args.format, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
