"""Command line front end.

Exit codes: 0 success, 2 argument or input errors, 3 enumeration refused
by the resource cap, 4 a verification mismatch, 5 no closed form applies.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import replace
from time import perf_counter

from .code import build_code, ghw_prop1, hierarchy_prop1
from .config import DEFAULT_MAX_ENUM, ResourceCapError
from .field import Field, field_new
from .formulas import NotApplicable, hierarchy_formula
from .linalg import gaussian_binomial
from .reference import run_reference_checks
from .simplicial import cardinality, normalize, normalize_sets, parse_sets


class CLIError(Exception):
    def __init__(self, message: str, code: int = 2):
        self.code = code
        super().__init__(message)


def _prime_power(n: int):
    """(p, e) with p^e = n, or None when n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return (n, 1)


def _resolve_field(args) -> Field:
    pe = _prime_power(args.q)
    if pe is None:
        raise CLIError(f"--q {args.q} is not a prime power")
    p, e = pe
    if args.e is None:
        return field_new(p, e)
    if args.e == e:
        return field_new(p, e)  # --q gave the full field size
    if e == 1:
        return field_new(p, args.e)  # --q gave the prime
    raise CLIError(f"--q {args.q} with --e {args.e} is ambiguous; pass the prime")


def _resolve_spec(args, verbose_to=None):
    try:
        raw = parse_sets(args.sets)
        spec = normalize(args.m, raw, args.complement)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    if verbose_to is not None:
        _, dropped = normalize_sets(raw)
        for s in dropped:
            print(
                f"note: generator {{{','.join(map(str, s))}}} is contained "
                "in another and was dropped",
                file=verbose_to,
            )
    return spec


def _base_payload(field: Field, spec) -> dict:
    return {
        "q": field.q,
        "e": field.e,
        "m": spec.m,
        "sets": [list(s) for s in spec.sets],
        "complement": spec.complement,
    }


def _print_hierarchy_text(field, spec, h, elapsed_ms):
    print(f"[{h.n}, {h.k}] code over GF({field.q}), {spec.describe()}")
    width = max(len(str(h.n)), 3)
    for r, (d, prov) in enumerate(zip(h.values, h.provenance), start=1):
        print(f"  r={r:<2} d_r={d:<{width}} {prov}")
    print(f"method: {h.method}  elapsed_ms: {elapsed_ms}")


def cmd_params(args) -> int:
    field = _resolve_field(args)
    spec = _resolve_spec(args, sys.stderr if args.verbose else None)
    start = perf_counter()
    try:
        h = hierarchy_formula(field.q, spec)
        n, k, d1 = h.n, h.k, h.values[0]
        method = "formula"
    except NotApplicable as exc:
        if args.verbose:
            print(f"note: no closed form ({exc.reason}); searching", file=sys.stderr)
        value, _ = ghw_prop1(field, spec, 1, threads=args.threads, max_enum=args.max_enum)
        code = build_code(field, spec, max_enum=args.max_enum)
        n, k, d1 = code.n, code.k, value
        method = "prop1-search"
    elapsed = int(round((perf_counter() - start) * 1000))
    if args.format == "json":
        payload = _base_payload(field, spec)
        payload.update(
            {"n": n, "k": k, "d1": d1, "method": method, "elapsed_ms": elapsed}
        )
        print(json.dumps(payload))
    else:
        print(f"[{n}, {k}, {d1}] code over GF({field.q}), {spec.describe()}")
        print(f"method: {method}  elapsed_ms: {elapsed}")
    return 0


def cmd_hierarchy(args) -> int:
    field = _resolve_field(args)
    spec = _resolve_spec(args, sys.stderr if args.verbose else None)
    start = perf_counter()
    if args.method == "formula":
        h = hierarchy_formula(field.q, spec)
    elif args.method == "brute":
        h = hierarchy_prop1(field, spec, threads=args.threads, max_enum=args.max_enum)
    else:
        closed = hierarchy_formula(field.q, spec)
        searched = hierarchy_prop1(
            field, spec, threads=args.threads, max_enum=args.max_enum
        )
        if closed.values != searched.values:
            bad = next(
                r
                for r, (x, y) in enumerate(zip(closed.values, searched.values), 1)
                if x != y
            )
            record = _base_payload(field, spec)
            record.update(
                {
                    "r": bad,
                    "formula": closed.values[bad - 1],
                    "search": searched.values[bad - 1],
                }
            )
            print(
                "verification mismatch: " + json.dumps(record),
                file=sys.stderr,
            )
            return 4
        h = replace(closed, method="both")
    elapsed = int(round((perf_counter() - start) * 1000))
    if args.format == "json":
        payload = _base_payload(field, spec)
        payload.update(
            {
                "n": h.n,
                "k": h.k,
                "hierarchy": list(h.values),
                "provenance": list(h.provenance),
                "method": h.method,
                "elapsed_ms": elapsed,
            }
        )
        print(json.dumps(payload))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["r", "d_r", "provenance", "method"])
        for r, (d, prov) in enumerate(zip(h.values, h.provenance), start=1):
            writer.writerow([r, d, prov, h.method])
    else:
        _print_hierarchy_text(field, spec, h, elapsed)
        if args.verbose and args.method != "formula":
            for r in range(1, h.k + 1):
                _, witness = ghw_prop1(
                    field, spec, r, threads=args.threads, max_enum=args.max_enum
                )
                rows = " ".join("".join(map(str, row)) for row in witness.basis)
                print(f"  witness r={r}: [{rows}]")
    return 0


def _jsonable(row: dict) -> dict:
    out = {}
    for key in (
        "id",
        "ok",
        "q",
        "m",
        "expected",
        "formula",
        "prop1",
        "definitional",
        "elapsed_ms",
        "detail",
    ):
        val = row.get(key)
        if isinstance(val, tuple):
            val = list(val)
        out[key] = val
    return out


def cmd_verify_paper(args) -> int:
    rows = run_reference_checks(
        only=args.only, threads=args.threads, max_enum=args.max_enum
    )
    if not rows:
        raise CLIError(f"no reference case matches --only {args.only!r}")
    failed = [row for row in rows if not row["ok"]]
    if args.format == "json":
        print(json.dumps([_jsonable(row) for row in rows]))
    else:
        for row in rows:
            status = "PASS" if row["ok"] else "FAIL"
            expected = row["expected"]
            print(
                f"{status}  {row['id']:<8} q={row['q']} m={row['m']} "
                f"expected={expected}  ({row['elapsed_ms']} ms)"
            )
            if not row["ok"]:
                for tag in ("formula", "prop1", "definitional"):
                    print(f"      {tag:<12} = {row[tag]}")
                print(f"      detail: {row['detail']}")
        print(f"{len(rows)} cases: {len(rows) - len(failed)} passed, {len(failed)} failed")
    return 4 if failed else 0


def cmd_count(args) -> int:
    field = _resolve_field(args)
    q, m = field.q, args.m
    small = None
    if args.sets:
        try:
            union_spec = normalize(args.m, parse_sets(args.sets), False)
        except ValueError as exc:
            raise CLIError(str(exc)) from exc
        inside = cardinality(union_spec, q)
        small = min(inside, q**m - inside)
    ranks = [args.r] if args.r is not None else list(range(1, m + 1))
    rows = []
    for r in ranks:
        count = gaussian_binomial(m, r, q)
        ops = count * small * m if small is not None else None
        rows.append((r, count, ops))
    total = sum(c for _, c, _ in rows)
    if args.format == "json":
        payload = {"q": q, "e": field.e, "m": m, "rows": [], "total": total}
        for r, count, ops in rows:
            entry = {"r": r, "count": count}
            if ops is not None:
                entry["search_ops"] = ops
            payload["rows"].append(entry)
        print(json.dumps(payload))
    else:
        print(f"subspaces of F_{q}^{m}" + (f" (defining side size {small})" if small else ""))
        for r, count, ops in rows:
            line = f"  r={r:<2} count={count}"
            if ops is not None:
                line += f"  est_search_ops={ops}"
            print(line)
        print(f"total candidates: {total}")
        if total > DEFAULT_MAX_ENUM:
            print(
                f"note: exceeds the default enumeration cap {DEFAULT_MAX_ENUM}; "
                "a search needs --max-enum or GHW_MAX_ENUM raised"
            )
    return 0


def _add_field_options(sub, need_sets=True):
    sub.add_argument("--q", type=int, required=True, help="field size, or prime with --e")
    sub.add_argument("--e", type=int, default=None, help="extension degree over the prime")
    sub.add_argument("--m", type=int, required=True, help="ambient dimension")
    if need_sets:
        sub.add_argument(
            "--sets",
            required=True,
            help='generators as 1-based lists, e.g. "1,2,3;3,4,5"',
        )
        sub.add_argument(
            "--complement",
            action="store_true",
            help="use the complement of the union as the defining set",
        )


def _add_run_options(sub):
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument(
        "--max-enum",
        type=int,
        default=None,
        help=f"enumeration cap (overrides GHW_MAX_ENUM; default {DEFAULT_MAX_ENUM})",
    )
    sub.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghw",
        description="Generalized Hamming weights of codes whose defining sets "
        "are unions of coordinate subspaces, or complements of such unions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("params", help="length, dimension, and minimum distance")
    _add_field_options(p)
    _add_run_options(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_params)

    p = subs.add_parser("hierarchy", help="full weight hierarchy")
    _add_field_options(p)
    _add_run_options(p)
    p.add_argument(
        "--method",
        choices=["formula", "brute", "both"],
        default="both",
        help="closed form, subspace search, or both with cross-checking",
    )
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_hierarchy)

    p = subs.add_parser(
        "verify-paper",
        help="run the built-in reference suite (pinned hierarchies, three methods)",
    )
    p.add_argument("--only", default=None, help="substring filter on case ids")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--max-enum", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify_paper)

    p = subs.add_parser(
        "count-subspaces",
        help="subspace counts and the implied search cost before running one",
    )
    _add_field_options(p, need_sets=False)
    p.add_argument("--r", type=int, default=None)
    p.add_argument(
        "--sets", default=None, help="optional generators for a cost estimate"
    )
    p.add_argument("--complement", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotApplicable as exc:
        print(f"no closed form applies: {exc.reason}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
