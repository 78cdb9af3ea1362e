"""Command-line interface.

Subcommands: ``compute`` (closed forms, univariate or multivariate),
``oracle`` (chain-counting cross-check), ``census`` (Schubert-matroid table,
optionally verified against the counting formula and the coefficient
identities), ``sequences`` (coefficient tables over a range of ground
sizes), and ``matroid`` (JSON import/export of explicit matroids).

All numeric output in json/csv formats uses decimal strings so big integers
survive downstream tools.  Exit status is 0 only when every requested
verification passes; domain and resource errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from .forms import (
    METHODS,
    MULTIVARIATE_BASES,
    closed_form,
    coefficient_formula,
    multivariate_closed_form,
)
from .matroid import (
    INFINITY,
    MatroidError,
    chain_chow,
    matroid_from_json,
    matroid_invariants,
    matroid_to_json,
    uniform,
)
from .polynomial import SqfMultiPoly, UniPoly
from .schubert import (
    ResourceLimitError,
    census,
    census_matches_formula,
    max_ground_size,
    verify_coefficient_counts,
)

FORMATS = ("text", "json", "csv")

_METHOD_FLAGS = {m.replace("_", "-"): m for m in METHODS}


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chowpoly",
        description="Exact Chow and augmented Chow polynomials of uniform matroids.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("compute", help="evaluate the closed forms")
    p.add_argument("--k", type=int, required=True, help="rank of the uniform matroid")
    p.add_argument("--n", type=int, required=True, help="ground-set size")
    p.add_argument(
        "--method",
        default="all",
        choices=("all", "gamma") + tuple(_METHOD_FLAGS),
        help="expansion to use; 'all' compares every applicable one",
    )
    p.add_argument("--augmented", action="store_true")
    p.add_argument(
        "--multivariate",
        action="store_true",
        help="emit the multivariate refinement (methods: monomial, gamma, all)",
    )
    add_format(p)

    p = sub.add_parser("oracle", help="compare the chain oracle with the closed forms")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--augmented", action="store_true")
    add_format(p)

    p = sub.add_parser("census", help="census of Schubert matroids on {1..n}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check counting formula and coefficients")
    p.add_argument("--jobs", type=int, default=1, help="parallel chunks (output is identical for any value)")
    add_format(p)

    p = sub.add_parser("sequences", help="coefficient values over a range of n")
    p.add_argument("--coeff", type=int, choices=(1, 2), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--augmented", action="store_true")
    add_format(p)

    p = sub.add_parser("matroid", help="import/export matroids in the JSON exchange format")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--uniform", action="store_true", help="build a uniform matroid from --k/--n")
    group.add_argument("--input", help="read a matroid from a JSON file ('-' for stdin)")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--output", help="write the canonical JSON form to a file")
    add_format(p)

    return top


def _poly_terms_csv(label: str, poly: UniPoly) -> list[str]:
    return [f"{label},{i},{c}" for i, c in enumerate(poly.coeffs)]


def _multipoly_terms_csv(label: str, poly: SqfMultiPoly) -> list[str]:
    out = []
    for key, c in poly.sorted_terms():
        mono = " ".join(str(i) for i in key) if key else "-"
        out.append(f"{label},{mono},{c}")
    return out


def _cmd_compute(args) -> int:
    augmented = args.augmented
    if args.multivariate:
        if args.method == "all":
            methods = list(MULTIVARIATE_BASES)
        elif args.method in MULTIVARIATE_BASES:
            methods = [args.method]
        else:
            print(
                f"error: method {args.method!r} has no multivariate form "
                f"(choose from {MULTIVARIATE_BASES} or all)",
                file=sys.stderr,
            )
            return 2
        results = {
            m: multivariate_closed_form(args.k, args.n, m, augmented) for m in methods
        }
    else:
        if args.method == "all":
            methods = list(METHODS)
        elif args.method == "gamma":
            print(
                "error: 'gamma' is a multivariate basis; univariate gamma methods are "
                "gamma-eulerian and gamma-perm",
                file=sys.stderr,
            )
            return 2
        else:
            methods = [_METHOD_FLAGS[args.method]]
        results = {m: closed_form(args.k, args.n, m, augmented) for m in methods}
    agree = len(set(results.values())) == 1

    if args.format == "json":
        payload = {
            "k": args.k,
            "n": args.n,
            "augmented": augmented,
            "multivariate": args.multivariate,
            "results": {m: p.to_json() for m, p in results.items()},
        }
        if len(results) > 1:
            payload["agree"] = agree
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        if args.multivariate:
            print("method,variables,coefficient")
            for m, p in results.items():
                print("\n".join(_multipoly_terms_csv(m, p)))
        else:
            print("method,power,coefficient")
            for m, p in results.items():
                print("\n".join(_poly_terms_csv(m, p)))
    else:
        for m, p in results.items():
            print(f"{m}: {p.render()}")
        if len(results) > 1:
            if agree:
                print("AGREE")
            else:
                print(f"DISAGREE: {_first_difference(results)}")
    return 0 if agree else 1


def _first_difference(results: dict) -> str:
    names = list(results)
    ref_name, ref = names[0], results[names[0]]
    for name in names[1:]:
        got = results[name]
        if got == ref:
            continue
        if isinstance(ref, UniPoly):
            for i in range(max(ref.degree, got.degree) + 1):
                if ref[i] != got[i]:
                    return f"{name} vs {ref_name} at x^{i}: {got[i]} vs {ref[i]}"
        else:
            keys = sorted(
                set(ref.terms) | set(got.terms), key=lambda k: (len(k), k)
            )
            for key in keys:
                a, b = got.terms.get(key, 0), ref.terms.get(key, 0)
                if a != b:
                    return f"{name} vs {ref_name} at {key}: {a} vs {b}"
    return "no coefficient difference found"


def _cmd_oracle(args) -> int:
    limit = max_ground_size()
    if args.n > limit:
        print(
            f"error: oracle(n={args.n}) exceeds the resource guard n <= {limit}; "
            "set CHOW_MAX_N to raise it (unsupported territory)",
            file=sys.stderr,
        )
        return 2
    oracle_poly = chain_chow(uniform(args.k, args.n), augmented=args.augmented)
    closed = {m: closed_form(args.k, args.n, m, args.augmented) for m in METHODS}
    reference = closed["monomial"]
    equal = all(p == oracle_poly for p in closed.values())
    width = max(oracle_poly.degree, reference.degree) + 1
    diffs = [
        (i, oracle_poly[i], reference[i]) for i in range(width)
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "k": args.k,
                    "n": args.n,
                    "augmented": args.augmented,
                    "oracle": oracle_poly.to_json(),
                    "closed_forms": {m: p.to_json() for m, p in closed.items()},
                    "equal": equal,
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print("power,oracle,closed_form,equal")
        for i, a, b in diffs:
            print(f"{i},{a},{b},{str(a == b).lower()}")
    else:
        print(f"oracle:      {oracle_poly.render()}")
        for m, p in closed.items():
            print(f"{m}: {p.render()}")
        if equal:
            print("EQUAL")
        else:
            i, a, b = next((i, a, b) for i, a, b in diffs if a != b)
            print(f"MISMATCH at x^{i}: oracle {a} vs closed form {b}")
    return 0 if equal else 1


def _verification_report(n: int, table) -> tuple[bool, list[str]]:
    lines = []
    formula_ok = census_matches_formula(table)
    lines.append(f"counting formula cells: {'PASS' if formula_ok else 'FAIL'}")
    all_ok = formula_ok
    for k in range(1, n + 1):
        rep = verify_coefficient_counts(k, n, table)
        if rep.passed:
            lines.append(f"coefficient counts k={k}: PASS")
        else:
            bad = rep.first_mismatch()
            lines.append(
                f"coefficient counts k={k}: FAIL at "
                f"{'augmented ' if bad.augmented else ''}x^{bad.power}: "
                f"coefficient {bad.coefficient} vs census {bad.census_count}"
            )
            all_ok = False
    return all_ok, lines


def _cmd_census(args) -> int:
    try:
        table = census(args.n, jobs=args.jobs)
    except (ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = True
    report_lines: list[str] = []
    if args.verify:
        ok, report_lines = _verification_report(args.n, table)

    if args.format == "json":
        payload = table.to_json()
        if args.verify:
            payload["verification"] = {"passed": ok, "report": report_lines}
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
        for line in report_lines:
            print(line, file=sys.stderr)
    else:
        print(f"distinct Schubert matroids on 1..{args.n}: {table.total}")
        print("rank loops cogirth count")
        for r, l, g, c in table.rows():
            cg = "inf" if g == INFINITY else str(g)
            print(f"{r:4d} {l:5d} {cg:>7s} {c:5d}")
        for line in report_lines:
            print(line)
    return 0 if ok else 1


def _cmd_sequences(args) -> int:
    if args.k > args.n_from:
        print("error: need k <= n-from", file=sys.stderr)
        return 2
    if args.n_to < args.n_from:
        print("error: need n-from <= n-to", file=sys.stderr)
        return 2
    rows = [
        (n, coefficient_formula(args.k, n, args.coeff, args.augmented))
        for n in range(args.n_from, args.n_to + 1)
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "k": args.k,
                    "coeff": args.coeff,
                    "augmented": args.augmented,
                    "values": [{"n": n, "value": str(v)} for n, v in rows],
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print("n,value")
        for n, v in rows:
            print(f"{n},{v}")
    else:
        for n, v in rows:
            print(f"n={n}: {v}")
    return 0


def _cmd_matroid(args) -> int:
    try:
        if args.uniform:
            if args.k is None or args.n is None:
                print("error: --uniform requires --k and --n", file=sys.stderr)
                return 2
            m = uniform(args.k, args.n)
        else:
            if args.input == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.input) as fh:
                    data = json.load(fh)
            m = matroid_from_json(data)
    except (MatroidError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = matroid_to_json(m)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    inv = matroid_invariants(m)
    if args.format == "json":
        print(
            json.dumps(
                {
                    **payload,
                    "loops": list(inv.loops),
                    "coloops": list(inv.coloops),
                    "girth": "inf" if inv.girth == INFINITY else inv.girth,
                    "cogirth": "inf" if inv.cogirth == INFINITY else inv.cogirth,
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print("n,rank,bases,loops,coloops,girth,cogirth")
        girth = "inf" if inv.girth == INFINITY else inv.girth
        cogirth = "inf" if inv.cogirth == INFINITY else inv.cogirth
        print(
            f"{m.n},{m.rank},{len(m.bases)},{len(inv.loops)},{len(inv.coloops)},"
            f"{girth},{cogirth}"
        )
    else:
        print(f"matroid on 1..{m.n}, rank {m.rank}, {len(m.bases)} bases")
        print(f"loops: {list(inv.loops)}  coloops: {list(inv.coloops)}")
        print(f"girth: {inv.girth}  cogirth: {inv.cogirth}")
    return 0


_DISPATCH = {
    "compute": _cmd_compute,
    "oracle": _cmd_oracle,
    "census": _cmd_census,
    "sequences": _cmd_sequences,
    "matroid": _cmd_matroid,
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (MatroidError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
