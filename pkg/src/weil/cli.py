"""Command-line surface: validate, check, eval, flat, report.

Exit codes: 0 success, 1 validation or identity failure, 2 usage error.
All output is deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, flat
from .expr import ExprError, evaluate, render
from .lie import builtin, load_algebra_file, validate_form, validate_lie, validate_rep

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _load(args):
    if getattr(args, "builtin", None) and getattr(args, "file", None):
        raise UsageError("pass either --builtin or --file, not both")
    if getattr(args, "builtin", None):
        try:
            return builtin(args.builtin)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if getattr(args, "file", None):
        try:
            return load_algebra_file(args.file)
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load {args.file}: {exc}") from exc
    raise UsageError("an algebra is required: --builtin NAME or --file PATH")


def _context(args):
    if args.classical and args.quantum:
        raise UsageError("pass either --classical or --quantum, not both")
    if args.quantum:
        return "quantum"
    return "classical"


def _validate_all(alg, rep_names=None):
    """Print validation reports; returns True when everything is valid."""
    ok = True
    report = validate_lie(alg.lie)
    print("\n".join(report.lines()))
    ok &= report.ok
    if alg.form is not None:
        freport = validate_form(alg.lie, alg.form)
        lines = freport.lines()
        if freport.ok:
            lines[0] += " (orthonormal)" if freport.orthonormal else " (not orthonormal)"
        print("\n".join(lines))
        ok &= freport.ok
    if report.ok:
        for name in rep_names if rep_names is not None else sorted(alg.reps):
            rreport = validate_rep(alg.lie, alg.reps[name])
            print("\n".join(rreport.lines()))
            ok &= rreport.ok
    return ok


def _require_rep(alg, args):
    name = getattr(args, "rep", None) or "adjoint"
    try:
        return alg.rep(name)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc


def _require_quantum_ok(alg):
    if alg.form is None or not alg.form.is_orthonormal:
        raise UsageError(
            f"algebra {alg.name!r} has no orthonormal invariant form; "
            "the quantum algebra is not available for it"
        )


def cmd_validate(args) -> int:
    alg = _load(args)
    return EXIT_OK if _validate_all(alg) else EXIT_FAIL


def cmd_check(args) -> int:
    alg = _load(args)
    context = _context(args)
    if context == "quantum":
        _require_quantum_ok(alg)
    rep = _require_rep(alg, args)
    if not _validate_all(alg, rep_names=[rep.name]):
        return EXIT_FAIL
    if context == "classical":
        results = checks.classical_suite(alg.lie, rep, samples=args.samples, seed=args.seed)
    else:
        results = checks.quantum_suite(alg.lie, rep, samples=args.samples, seed=args.seed)
    ok = True
    for r in results:
        status = "pass" if r.passed else "FAIL"
        detail = f"  [{r.detail}]" if (r.detail and not r.passed) else ""
        print(f"{status}  {r.name}{detail}")
        ok &= r.passed
    print(f"{'all identities hold' if ok else 'identity failures detected'} "
          f"({alg.name}, rep {rep.name}, {context})")
    return EXIT_OK if ok else EXIT_FAIL


def _quiet_valid(alg, rep) -> bool:
    if not validate_lie(alg.lie).ok or not validate_rep(alg.lie, rep).ok:
        return False
    return alg.form is None or validate_form(alg.lie, alg.form).ok


def cmd_eval(args) -> int:
    alg = _load(args)
    context = _context(args)
    if context == "quantum":
        _require_quantum_ok(alg)
    rep = _require_rep(alg, args)
    if not _quiet_valid(alg, rep):
        print("algebra failed validation; run `weil validate`", file=sys.stderr)
        return EXIT_FAIL
    try:
        element = evaluate(args.expression, alg.lie, rep, context)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(render(element))
    return EXIT_OK


def flat_report_data(alg, rep, context, max_degree, samples, seed) -> dict:
    inclusion = flat.inclusion_report(context, alg.lie, rep, max_degree, seed=seed)
    decomposition = flat.decomposition_report(context, alg.lie, rep, max_degree)
    closure = flat.closure_report(context, alg.lie, rep, max_degree,
                                  samples=samples, seed=seed)
    return {
        "schema": SCHEMA_VERSION,
        "algebra": context,
        "lie": alg.name,
        "rep": rep.name,
        "N": max_degree,
        "seed": seed,
        "degree_semantics": inclusion["degree_semantics"],
        "per_degree": inclusion["per_degree"],
        "decomposition": decomposition,
        "closure": closure,
    }


def _print_flat_text(data):
    print(f"flat/basic subspaces: {data['lie']} rep {data['rep']} "
          f"({data['algebra']}), degree <= {data['N']}")
    observed = " (observed)" if data["algebra"] == "quantum" else ""
    print(f"  degree semantics: {data['degree_semantics']}")
    print(f"  {'deg':>3}  {'dim_basic':>9}  {'dim_flat':>8}  "
          f"{'basic<flat' + observed:>20}  {'S.basic=flat':>12}")
    for row in data["per_degree"]:
        print(f"  {row['deg']:>3}  {row['dim_basic']:>9}  {row['dim_flat']:>8}  "
              f"{str(row['basic_subset_flat']):>20}  {str(row['s_basic_equals_flat']):>12}")
    dec = data["decomposition"]
    print(f"  decomposition factor 2^n = {dec['factor']}, "
          f"all degrees match: {dec['all_match']}")
    for row in dec["per_degree"]:
        print(f"    deg {row['deg']}: full {row['dim_full_flat']} "
              f"= {dec['factor']} x hor {row['dim_hor_flat']}: {row['match']}")
    clo = data["closure"]
    print(f"  closure (seed {clo['seed']}, {clo['samples']} samples): "
          f"{'closed' if clo['all_closed'] else 'FAILURES'} {clo['checked']}")


def cmd_flat(args) -> int:
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    alg = _load(args)
    context = _context(args)
    if context == "quantum":
        _require_quantum_ok(alg)
    rep = _require_rep(alg, args)
    if not _quiet_valid(alg, rep):
        print("algebra failed validation; run `weil validate`", file=sys.stderr)
        return EXIT_FAIL
    data = flat_report_data(alg, rep, context, args.max_degree, args.samples, args.seed)
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        _print_flat_text(data)
    return EXIT_OK


def cmd_report(args) -> int:
    names = ["abelian(2)", "heisenberg3", "so3", "sl2"] if args.all_builtins else []
    if getattr(args, "builtin", None):
        names = [args.builtin]
    if not names:
        raise UsageError("pass --all-builtins or --builtin NAME")
    ok = True
    for name in names:
        alg = builtin(name)
        print(f"== {name} ==")
        valid = _validate_all(alg)
        ok &= valid
        if not valid:
            continue
        contexts = ["classical"]
        if alg.form is not None and alg.form.is_orthonormal:
            contexts.append("quantum")
        for rep_name in sorted(alg.reps):
            rep = alg.reps[rep_name]
            for context in contexts:
                if context == "classical":
                    results = checks.classical_suite(alg.lie, rep,
                                                     samples=args.samples, seed=args.seed)
                else:
                    results = checks.quantum_suite(alg.lie, rep,
                                                   samples=args.samples, seed=args.seed)
                bad = [r for r in results if not r.passed]
                status = "pass" if not bad else "FAIL"
                print(f"{status}  {name} rep {rep_name} ({context}): "
                      f"{len(results) - len(bad)}/{len(results)} identities")
                for r in bad:
                    print(f"      {r.name}: {r.detail}")
                ok &= not bad
        for context in contexts:
            rep = alg.reps["adjoint"]
            data = flat_report_data(alg, rep, context, args.max_degree,
                                    args.samples, args.seed)
            _print_flat_text(data)
    print("report: all pass" if ok else "report: failures detected")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weil",
        description="Exact verification and exploration of covariant Weil algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra_flags(p):
        p.add_argument("--builtin", help="catalog algebra: abelian(n), heisenberg3, so3, sl2")
        p.add_argument("--file", help="JSON algebra definition file")

    def add_session_flags(p):
        p.add_argument("--rep", default="adjoint", help="representation name (default adjoint)")
        p.add_argument("--classical", action="store_true", help="classical algebra (default)")
        p.add_argument("--quantum", action="store_true", help="quantum algebra")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p_validate = sub.add_parser("validate", help="run the validation reports")
    add_algebra_flags(p_validate)
    p_validate.add_argument("file_pos", nargs="?", metavar="FILE",
                            help="algebra definition file")
    p_validate.set_defaults(fn=cmd_validate)

    p_check = sub.add_parser("check", help="verify every operator identity")
    add_algebra_flags(p_check)
    add_session_flags(p_check)
    p_check.add_argument("--samples", type=int, default=50,
                         help="random elements per identity (default 50)")
    p_check.set_defaults(fn=cmd_check)

    p_eval = sub.add_parser("eval", help="evaluate an expression to normal form")
    add_algebra_flags(p_eval)
    add_session_flags(p_eval)
    p_eval.add_argument("expression", help="expression, e.g. 'd(C)' or 'comm(QC, u1)'")
    p_eval.set_defaults(fn=cmd_eval)

    p_flat = sub.add_parser("flat", help="basic/flat subspace tables up to a degree")
    add_algebra_flags(p_flat)
    add_session_flags(p_flat)
    p_flat.add_argument("--max-degree", type=int, default=2, dest="max_degree",
                        help="truncation degree N (default 2)")
    p_flat.add_argument("--samples", type=int, default=20,
                        help="closure samples (default 20)")
    p_flat.add_argument("--json", action="store_true", help="emit JSON")
    p_flat.set_defaults(fn=cmd_flat)

    p_report = sub.add_parser("report", help="run check + flat over the catalog")
    p_report.add_argument("--all-builtins", action="store_true", dest="all_builtins")
    p_report.add_argument("--builtin", help="restrict to one catalog algebra")
    p_report.add_argument("--max-degree", type=int, default=1, dest="max_degree")
    p_report.add_argument("--samples", type=int, default=10)
    p_report.add_argument("--seed", type=int, default=0)
    p_report.set_defaults(fn=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; normalize other exits
        return int(exc.code) if exc.code else EXIT_OK
    if args.command == "validate" and getattr(args, "file_pos", None):
        if args.file or args.builtin:
            print("error: FILE conflicts with --file/--builtin", file=sys.stderr)
            return EXIT_USAGE
        args.file = args.file_pos
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
