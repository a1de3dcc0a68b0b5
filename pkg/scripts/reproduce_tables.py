"""Print every exceptional-case table the library can enumerate.

    python scripts/reproduce_tables.py            # text
    python scripts/reproduce_tables.py --json     # one JSON record per table
"""

import argparse

from chisini.families import (
    Family,
    enumerate_dual_nodal_exceptions,
    enumerate_general_type_exceptions,
    general_type_impossible_cases,
    trivial_canonical,
)
from chisini.records import OutputRecord
from chisini.search import SearchConstraintProfile, find_potential_counterexamples


def case_row(case):
    cv = case.curve
    return {
        "params": case.params,
        "deg B": cv.degree, "g": cv.g, "c": cv.c, "n": cv.n, "N": case.N,
        "threshold": case.verdict.threshold,
        "max N'": case.verdict.max_competing_degree,
        "flag": case.flag,
    }


def tables():
    yield "general_type_exceptions", [case_row(c) for c in enumerate_general_type_exceptions()]
    yield "general_type_rejected", [
        {**p, "reason": r} for p, r in general_type_impossible_cases(k_max=4, pa_max=3)
    ]
    yield "trivial_canonical_exceptions", [
        case_row(c)
        for kind in (Family.K3, Family.Enriques, Family.Abelian)
        for k in range(2, 21)
        for c in _safe(trivial_canonical, k, kind)
        if not c.unique
    ]
    yield "dual_nodal_exceptions", [case_row(c) for c in enumerate_dual_nodal_exceptions(3, 12)]
    res = find_potential_counterexamples(SearchConstraintProfile((1, 6), (0, 3)))
    yield "low_genus_search", [{"d": p.d, "g": p.g, "c": p.c, "n": p.n, "N": p.N_interval} for p in res.survivors]


def _safe(fn, *args):
    try:
        return [fn(*args)]
    except ValueError:
        return []


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    for name, rows in tables():
        if args.json:
            print(OutputRecord(name, {}, {"rows": rows}).to_json())
            continue
        print(f"## {name} ({len(rows)})")
        for row in rows:
            print("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        print()


if __name__ == "__main__":
    main()
