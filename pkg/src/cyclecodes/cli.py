"""Command-line interface.

Subcommands: enumerate, card, ideal, groebner-check, hilbert,
regularity, betas, code, selftest.  Exit codes: 0 success, 1 a
cross-check failed, 2 usage error, 3 budget exceeded.  Output is
deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, hilbert
from .cyclegraph import (
    DEFAULT_ENUM_BUDGET,
    CycleFamilySpec,
    cardinality_formula,
    enumerate_toric_set,
    enumerated_cardinality,
    parse_spec_string,
)
from .errors import (
    BudgetExceeded,
    CycleCodesError,
    OddityError,
    ParseError,
    UnsupportedField,
    UnsupportedSpec,
)
from .gf import field_new
from .ideal import build_generators
from .poly import buchberger_is_groebner

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _add_common(sp, *, spec=True, formats=("plain", "json"),
                enum_budget=False, dist_budget=False):
    sp.add_argument("--q", type=int, required=True,
                    help="field size (odd prime or power of two)")
    if spec:
        sp.add_argument("--spec", required=True,
                        help="cycle spec: comma-separated k or kxm, "
                             "e.g. '5' or '3x2,5'")
    sp.add_argument("--format", choices=list(formats), default="plain",
                    help="output format")
    sp.add_argument("--out", help="write the report to this file "
                                  "instead of stdout")
    if enum_budget:
        sp.add_argument("--enum-budget", type=int,
                        default=DEFAULT_ENUM_BUDGET,
                        help="max enumeration / matrix work "
                             f"(default {DEFAULT_ENUM_BUDGET})")
    if dist_budget:
        sp.add_argument("--dist-budget", type=int,
                        default=codes.DEFAULT_DIST_BUDGET,
                        help="max codewords for exact min distance "
                             f"(default {codes.DEFAULT_DIST_BUDGET})")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cyclecodes",
        description="Vanishing ideals, Hilbert functions and evaluation "
                    "codes of point sets parameterized by odd cycles over "
                    "small finite fields.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="list the points of X*")
    _add_common(sp, enum_budget=True)

    sp = sub.add_parser("card", help="enumerated vs closed-form |X*|")
    _add_common(sp, formats=("plain", "csv", "json"), enum_budget=True)

    sp = sub.add_parser("ideal", help="dump the generator set")
    _add_common(sp)

    sp = sub.add_parser("groebner-check",
                        help="verify the generators form a Groebner basis")
    _add_common(sp)

    sp = sub.add_parser("hilbert", help="Hilbert function table")
    _add_common(sp, formats=("plain", "csv", "json"), enum_budget=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--d", type=int, help="single degree")
    g.add_argument("--dmax", type=int,
                   help="table for d = 0..dmax (default regularity+1)")
    sp.add_argument("--with-rank", action="store_true",
                    help="also compute the evaluation-matrix rank column "
                         "(requires enumerating X*)")

    sp = sub.add_parser("regularity",
                        help="regularity by formula and by brute force")
    _add_common(sp)

    sp = sub.add_parser("betas",
                        help="beta decomposition of a single-cycle "
                             "Hilbert function")
    _add_common(sp)

    sp = sub.add_parser("code", help="evaluation code parameters")
    _add_common(sp, enum_budget=True, dist_budget=True)
    sp.add_argument("--d", type=int, required=True, help="code degree")

    sp = sub.add_parser("selftest",
                        help="run the built-in reference checks "
                             "(q=5, one 5-cycle)")
    sp.add_argument("--out", help="write the report to this file")

    return p


# -- individual commands -----------------------------------------------------

def _cmd_enumerate(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    X = enumerate_toric_set(spec, field, args.enum_budget)
    if args.format == "json":
        out = json.dumps({"q": args.q, "spec": spec.to_string(),
                          "cardinality": len(X),
                          "points": [list(pt) for pt in X]}, indent=2)
    else:
        out = X.serialize()
    return out, True


def _cmd_card(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    enumerated = enumerated_cardinality(spec, field, args.enum_budget)
    formula = cardinality_formula(spec, args.q)
    agree = enumerated == formula
    if args.format == "json":
        out = json.dumps({"q": args.q, "spec": spec.to_string(),
                          "enumerated": enumerated, "formula": formula,
                          "agree": agree}, indent=2)
    elif args.format == "csv":
        out = "enumerated,formula,agree\n" \
              f"{enumerated},{formula},{str(agree).lower()}"
    else:
        out = (f"enumerated |X*| = {enumerated}\n"
               f"closed-form |X*| = {formula}\n"
               f"agree = {str(agree).lower()}")
    return out, agree


def _generator_lines(spec: CycleFamilySpec, field) -> list[str]:
    gens = build_generators(spec, field)
    return [g.to_text() for g in gens]


def _cmd_ideal(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    lines = _generator_lines(spec, field)
    if args.format == "json":
        out = json.dumps({"q": args.q, "spec": spec.to_string(),
                          "generators": lines}, indent=2)
    else:
        out = "\n".join(lines)
    return out, True


def _cmd_groebner(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    gens = build_generators(spec, field)
    ok = buchberger_is_groebner(gens.all_generators())
    if args.format == "json":
        out = json.dumps({"q": args.q, "spec": spec.to_string(),
                          "groebner": ok}, indent=2)
    else:
        out = f"groebner basis check: {'pass' if ok else 'FAIL'}"
    return out, ok


def _hilbert_rows(args, spec, field, degrees):
    """Per-degree (footprint, union-or-None, rank-or-None) triples."""
    footprints = [hilbert.hilbert_footprint(spec, field, d) for d in degrees]
    single = len(spec.components) == 1 and spec.components[0][1] == 1
    unions = []
    for d in degrees:
        if single:
            try:
                unions.append(hilbert.hilbert_union_formula(
                    spec.components[0][0], field, d))
                continue
            except UnsupportedSpec:
                pass
        unions.append(None)
    ranks: list[int | None] = [None] * len(degrees)
    if args.with_rank:
        X = enumerate_toric_set(spec, field, args.enum_budget)
        if degrees == list(range(len(degrees))):
            table = codes.rank_table(X, degrees[-1], args.enum_budget)
            ranks = [table[d] for d in degrees]
        else:
            ranks = [codes.code_dimension(X, d, args.enum_budget)
                     for d in degrees]
    return list(zip(degrees, footprints, unions, ranks))


def _cmd_hilbert(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    if args.d is not None:
        degrees = [args.d]
    else:
        dmax = args.dmax if args.dmax is not None \
            else hilbert.regularity_formula(spec, field) + 1
        degrees = list(range(dmax + 1))
    rows = _hilbert_rows(args, spec, field, degrees)
    ok = all(u in (None, fp) and r in (None, fp)
             for _, fp, u, r in rows)
    if args.format == "json":
        out = json.dumps(
            {"q": args.q, "spec": spec.to_string(),
             "rows": [{"d": d, "footprint": fp, "union": u, "rank": r}
                      for d, fp, u, r in rows],
             "agree": ok}, indent=2)
    elif args.format == "csv":
        lines = ["d,footprint,union,rank"]
        for d, fp, u, r in rows:
            lines.append(f"{d},{fp},{'' if u is None else u},"
                         f"{'' if r is None else r}")
        out = "\n".join(lines)
    else:
        lines = ["d\tfootprint\tunion\trank"]
        for d, fp, u, r in rows:
            lines.append(f"{d}\t{fp}\t{'-' if u is None else u}"
                         f"\t{'-' if r is None else r}")
        if not ok:
            lines.append("WARNING: the routes disagree")
        out = "\n".join(lines)
    return out, ok


def _cmd_regularity(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    formula = hilbert.regularity_formula(spec, field)
    brute = hilbert.regularity_bruteforce(spec, field)
    agree = formula == brute
    if args.format == "json":
        out = json.dumps({"q": args.q, "spec": spec.to_string(),
                          "formula": formula, "bruteforce": brute,
                          "agree": agree}, indent=2)
    else:
        out = (f"regularity formula = {formula}\n"
               f"regularity brute force = {brute}\n"
               f"agree = {str(agree).lower()}")
    return out, agree


def _single_cycle_k(spec: CycleFamilySpec) -> int:
    if len(spec.components) != 1 or spec.components[0][1] != 1:
        raise UnsupportedSpec(
            "this command needs a single-cycle spec such as '5'")
    return spec.components[0][0]


def _cmd_betas(args) -> tuple[str, bool]:
    field = field_new(args.q)
    k = _single_cycle_k(parse_spec_string(args.spec))
    deco = hilbert.solve_betas(k, field)
    if args.format == "json":
        out = json.dumps({"k": k, "q": args.q, "betas": list(deco.betas),
                          "verified_through": deco.verified_through},
                         indent=2)
    else:
        out = (f"betas = {' '.join(str(b) for b in deco.betas)}\n"
               f"sample degrees = "
               f"{' '.join(str(d) for d in deco.sample_degrees)}\n"
               f"identity verified through d = {deco.verified_through}")
    return out, True


def _cmd_code(args) -> tuple[str, bool]:
    field = field_new(args.q)
    spec = parse_spec_string(args.spec)
    X = enumerate_toric_set(spec, field, args.enum_budget)
    params = codes.code_params(X, args.d, args.dist_budget, args.enum_budget)
    if params.min_distance is not None:
        ok = codes.singleton_check(params)
        singleton_ok: bool | None = ok
    else:
        ok, singleton_ok = True, None
    if args.format == "json":
        payload: dict = {"q": args.q, "spec": spec.to_string(), "d": args.d,
                         "n": params.n, "dimension": params.dimension}
        if params.min_distance is not None:
            payload["min_distance"] = params.min_distance
        else:
            payload["min_distance_bracket"] = list(
                params.min_distance_bracket)
        payload["singleton_ok"] = singleton_ok
        out = json.dumps(payload, indent=2)
    else:
        lines = [f"n = {params.n}", f"dimension = {params.dimension}"]
        if params.min_distance is not None:
            lines.append(f"min distance = {params.min_distance}")
            lines.append(f"singleton ok = {str(singleton_ok).lower()}")
        else:
            lo, hi = params.min_distance_bracket
            lines.append(f"min distance in [{lo}, {hi}] (not computed: "
                         "message count exceeds --dist-budget)")
        out = "\n".join(lines)
    return out, ok


def _cmd_selftest(args) -> tuple[str, bool]:
    field = field_new(5)
    spec = CycleFamilySpec.single(5)
    lines = []
    ok = True

    def check(label, got, want):
        nonlocal ok
        if got == want:
            lines.append(f"PASS {label}: {got}")
        else:
            lines.append(f"FAIL {label}: expected {want}, got {got}")
            ok = False

    X = enumerate_toric_set(spec, field)
    check("|X*| enumerated", len(X), 512)
    check("|X*| closed form", cardinality_formula(spec, 5), 512)
    probe = (1, 2, 9)
    check("H footprint at d=1,2,9",
          tuple(hilbert.hilbert_footprint(spec, field, d) for d in probe),
          (6, 21, 512))
    check("H union formula at d=1,2,9",
          tuple(hilbert.hilbert_union_formula(5, field, d) for d in probe),
          (6, 21, 512))
    check("H rank oracle at d=1,2,9",
          tuple(codes.code_dimension(X, d) for d in probe),
          (6, 21, 512))
    for i, want in ((2, (6, 18, 128)), (1, (6, 17, 64)), (0, (6, 16, 32))):
        check(f"degenerate torus i={i} at d=1,2,9",
              tuple(hilbert.degenerate_torus_hilbert(i, 5, field, d)
                    for d in probe), want)
    check("regularity formula", hilbert.regularity_formula(spec, field), 9)
    check("regularity brute force",
          hilbert.regularity_bruteforce(spec, field), 9)
    check("betas", hilbert.solve_betas(5, field).betas, (6, -15, 10))
    gens = build_generators(spec, field)
    check("generator count", len(gens), 15)
    check("groebner basis check",
          buchberger_is_groebner(gens.all_generators()), True)
    passed = sum(1 for line in lines if line.startswith("PASS"))
    lines.append(f"selftest: {passed}/{len(lines)} checks passed")
    return "\n".join(lines), ok


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "card": _cmd_card,
    "ideal": _cmd_ideal,
    "groebner-check": _cmd_groebner,
    "hilbert": _cmd_hilbert,
    "regularity": _cmd_regularity,
    "betas": _cmd_betas,
    "code": _cmd_code,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, ok = _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, OddityError, UnsupportedField,
            UnsupportedSpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycleCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
