"""Command-line interface for batch enumeration, search, and verification.

Exit codes: 0 success / verified, 1 verification failed (a witness is
printed), 2 usage error (bad flags, malformed forms, unreadable files).
"""

import argparse
import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .equivalence import equivalent_over_Z
from .families import FAMILY_NAMES, family_pair, verify_family_identity
from .forms import FormPair, IntForm, RatForm, parse_form
from .pairs import canonical_pair, generator_char_poly, resolvent, transition_matrices
from .repsets import rep_equal_up_to, representations_up_to
from .search import search_region_driver
from .tables import table_dataset, verify_table_set


def _rat_row(row):
    return " ".join(str(Fraction(x)) for x in row)


def _matrix_lines(mat):
    return [_rat_row(row) for row in mat]


def _matrix_json(mat):
    return [[str(Fraction(x)) for x in row] for row in mat]


def _parse_rationals(text, count, what):
    parts = text.replace(",", " ").split()
    if len(parts) != count:
        raise ValueError(f"{what}: expected {count} rational numbers, got {len(parts)}")
    return tuple(Fraction(p) for p in parts)


def _gram_from_coeffs(coeffs):
    n = {1: 1, 3: 2, 6: 3, 10: 4}[len(coeffs)]
    gram = [[Fraction(0)] * n for _ in range(n)]
    k = n
    for i in range(n):
        gram[i][i] = Fraction(coeffs[i])
    for i in range(n):
        for j in range(i + 1, n):
            gram[i][j] = gram[j][i] = Fraction(coeffs[k], 2)
            k += 1
    return gram


def _read_pair_file(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) != 2:
        raise ValueError(f"{path}: expected two coefficient lines")
    forms = []
    for ln in lines:
        coeffs = _parse_rationals(ln, 6, path)
        forms.append(RatForm(_gram_from_coeffs(coeffs)))
    return FormPair(forms[0], forms[1])


def _cmd_reps(args):
    form = parse_form(args.form)
    reps = representations_up_to(form, args.max, with_witnesses=args.json)
    if args.json:
        for v in reps.values:
            print(json.dumps({"value": v, "witness": [int(x) for x in reps.witnesses[v]]}))
    else:
        for v in reps.values:
            print(v)
    return 0


def _cmd_search(args):
    if args.n != 3:
        print("error: the search driver covers ternary forms only (--n 3)", file=sys.stderr)
        return 2
    report = search_region_driver(
        args.s33_max, m_cap=args.m_cap, verify_bound=args.verify_bound, jobs=args.jobs
    )
    for s in report.sets:
        print(
            json.dumps(
                {
                    "forms": [list(f.coeffs) for f in s.forms],
                    "verified_to": s.verified_to,
                    "complete": s.complete,
                }
            )
        )
    print(
        f"scanned {report.seeds_scanned} seed forms, "
        f"{report.distinct_value_sets} distinct value sets, "
        f"{len(report.sets)} sets found",
        file=sys.stderr,
    )
    return 0


def _cmd_verify_pair(args):
    f = parse_form(args.form_a)
    g = parse_form(args.form_b)
    cmp = rep_equal_up_to(f, g, args.bound)
    if args.json:
        out = {"equal": cmp.equal, "bound": args.bound}
        if not cmp.equal:
            out["value"] = cmp.value
            out["missing_from"] = cmp.missing_from
            out["witness"] = [int(x) for x in cmp.witness]
        print(json.dumps(out))
    elif cmp.equal:
        print(f"EQUAL up to {args.bound}")
    else:
        misser = (f, g)[cmp.missing_from - 1]
        print(
            f"DIFFER at {cmp.value}: {misser.coeffs} misses it, "
            f"the other takes it at {tuple(int(x) for x in cmp.witness)}"
        )
    return 0 if cmp.equal else 1


def _cmd_verify_table(args):
    if args.set is not None:
        numbers = [args.set]
    else:
        numbers = [s.number for s in table_dataset(args.data)]
    if args.jobs > 1 and len(numbers) > 1:
        work = functools.partial(verify_table_set, bound=args.bound, path=args.data)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(work, numbers))
    else:
        reports = [verify_table_set(n, args.bound, args.data) for n in numbers]
    failed = 0
    for r in reports:
        if args.json:
            out = {"set": r.number, "ok": r.ok, "pairs": r.pairs_checked, "bound": r.bound}
            if not r.ok:
                i, j, cmp = r.mismatch
                out["mismatch"] = {"members": [i, j], "value": cmp.value}
            print(json.dumps(out))
        elif r.ok:
            print(f"set {r.number} ok ({r.pairs_checked} pairs, bound {r.bound})")
        else:
            i, j, cmp = r.mismatch
            print(
                f"set {r.number} MISMATCH members {i},{j} at value {cmp.value}: "
                f"member {(i, j)[cmp.missing_from - 1]} misses it, "
                f"witness {tuple(int(x) for x in cmp.witness)}"
            )
        failed += 0 if r.ok else 1
    if not args.json:
        print(f"{len(reports) - failed}/{len(reports)} sets verified")
    return 0 if failed == 0 else 1


def _cmd_equiv(args):
    f = parse_form(args.form_a)
    g = parse_form(args.form_b)
    w = equivalent_over_Z(f, g)
    if args.json:
        print(json.dumps({"equivalent": w is not None, "witness": w and [list(r) for r in w]}))
        return 0 if w is not None else 1
    if w is None:
        print("INEQUIVALENT")
        return 1
    for row in w:
        print(" ".join(str(x) for x in row))
    return 0


def _cmd_canonical(args):
    pair = _read_pair_file(args.pair)
    h0, h1, h2, h3 = _parse_rationals(args.h, 4, "--h")
    h = (h1, h2, h3)
    data = generator_char_poly(pair, h0, h)
    if not data.is_basis:
        print(f"NOT A BASIS: powers of the element are dependent (scale {data.scale})")
        return 1
    w, v = transition_matrices(pair, h0, h)
    target = canonical_pair(data.poly)
    res = resolvent(data.poly)
    if args.json:
        print(
            json.dumps(
                {
                    "ch": [str(Fraction(c)) for c in data.poly.coeffs],
                    "resolvent": [str(c) for c in res.coeffs],
                    "atilde": _matrix_json(target.a.gram),
                    "btilde": _matrix_json(target.b.gram),
                    "w": _matrix_json(w),
                    "v": _matrix_json(v),
                }
            )
        )
        return 0
    print("ch:", _rat_row(data.poly.coeffs))
    print("resolvent:", _rat_row(res.coeffs))
    for label, mat in (("Atilde", target.a.gram), ("Btilde", target.b.gram), ("W", w), ("V", v)):
        print(f"{label}:")
        for line in _matrix_lines(mat):
            print(line)
    return 0


def _cmd_family(args):
    tag = args.family
    c, d = Fraction(args.c), Fraction(args.d)
    forms = family_pair(tag, c, d)
    ok = verify_family_identity(tag, c, d, args.bound)
    if args.json:
        desc = [
            list(f.coeffs) if isinstance(f, IntForm) else _matrix_json(f.gram) for f in forms
        ]
        print(json.dumps({"family": tag, "c": str(c), "d": str(d), "forms": desc, "verified": ok}))
        return 0 if ok else 1
    for f in forms:
        if isinstance(f, IntForm):
            print(" ".join(str(x) for x in f.coeffs))
        else:
            print("; ".join(_matrix_lines(f.gram)))
    print(f"IDENTITY {'VERIFIED' if ok else 'FAILED'} up to {args.bound}")
    return 0 if ok else 1


def _build_parser():
    top = argparse.ArgumentParser(
        prog="repforms",
        description="Positive-definite quadratic forms: representations, search, verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reps", help="list the values a form represents up to a bound")
    p.add_argument("form", help='coefficients, e.g. "1 1 1 0 0 0"')
    p.add_argument("--max", "-M", type=int, required=True, help="largest value to include")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reps)

    p = sub.add_parser("search", help="scan all reduced ternary seeds and emit discovered sets")
    p.add_argument("--n", type=int, default=3, help="number of variables (only 3)")
    p.add_argument("--s33-max", type=int, required=True, help="largest leading diagonal entry")
    p.add_argument("--verify-bound", type=int, default=100_000)
    p.add_argument("--m-cap", type=int, default=3000, help="value-set cap for the recursion")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify-pair", help="compare the represented values of two forms")
    p.add_argument("form_a")
    p.add_argument("form_b")
    p.add_argument("--bound", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_pair)

    p = sub.add_parser("verify-table", help="re-verify the bundled dataset")
    p.add_argument("--set", type=int, default=None, help="set number 1..53 (default: all)")
    p.add_argument("--bound", type=int, default=10_000)
    p.add_argument("--data", default=None, metavar="FILE", help="override the bundled data file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("equiv", help="find a unimodular change of basis between two forms")
    p.add_argument("form_a")
    p.add_argument("form_b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("canonical", help="canonical form of a ternary pair at a ring generator")
    p.add_argument("--pair", required=True, metavar="FILE", help="two lines of 6 coefficients")
    p.add_argument("--h", required=True, metavar="H0,H1,H2,H3", help="generator coordinates")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("family", help="build and verify one parametric family pair")
    p.add_argument("family", choices=FAMILY_NAMES)
    p.add_argument("c", help="first parameter (positive rational)")
    p.add_argument("d", help="second parameter (positive rational)")
    p.add_argument("--bound", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_family)

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
