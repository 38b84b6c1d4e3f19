"""Command-line front end: verification campaigns, tables, decompositions.

Exit codes: 0 all checks pass, 1 an identity comparison failed, 2 usage or
input error.  All output is deterministic; --out redirects it to a file.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import oracle
from . import series as qs
from .bijection import Mode, decompose, decomposition_to_dict
from .partitions import Partition, schur_violation

VERIFY_DEFAULTS = {
    "main": 200,
    "cor-schur": 200,
    "mod2": 100,
    "mod3": 100,
    "cor-ab": 60,
    "oracle-vs-series": 60,
}

TABLE_DEFAULTS = {"s": 100, "sp": 60, "st": 60}


@dataclass
class VerifyReport:
    identity: str
    max_n: int
    status: str  # "pass" | "fail"
    first_discrepancy: dict | None
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "max_n": self.max_n,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
            "elapsed": round(self.elapsed, 3),
        }

    def render(self) -> str:
        line = f"identity={self.identity} max_n={self.max_n} status={self.status} elapsed={self.elapsed:.2f}s"
        if self.first_discrepancy is not None:
            line += f"\nfirst discrepancy: {json.dumps(self.first_discrepancy, sort_keys=True)}"
        return line


def _discrepancy(names: tuple[str, ...], key: tuple[int, ...], lhs: int, rhs: int) -> dict:
    return {
        "exponents": dict(zip(names, key)),
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def _compare_maps(
    lhs: dict, rhs: dict, names: tuple[str, ...]
) -> dict | None:
    """First key (sorted) where two exponent->coefficient maps differ."""
    for key in sorted(set(lhs) | set(rhs)):
        a = lhs.get(key, 0)
        b = rhs.get(key, 0)
        if a != b:
            return _discrepancy(names, key, a, b)
    return None


def _series_map(s: qs.Series, max_n: int) -> dict:
    return {k: c for k, c in s.terms.items() if k[0] <= max_n}


def _verify_main(max_n: int) -> dict | None:
    got = _series_map(qs.sum_main(max_n), max_n)
    want = {(n, m): c for (m, n), c in oracle.count_by_length(max_n).items()}
    return _compare_maps(got, want, ("q", "x"))


def _verify_cor_schur(max_n: int) -> dict | None:
    cmp = qs.series_equal(qs.sum_main(max_n).at_one(), qs.product_schur(max_n), max_n)
    if cmp.equal:
        return None
    key, lhs, rhs = cmp.first_discrepancy
    return _discrepancy(("q",), key, lhs, rhs)


def _verify_mod2(max_n: int) -> dict | None:
    got = _series_map(qs.sum_mod2(max_n), max_n)
    tables = oracle.count_tables(max_n)
    want = {(n, m1, m0): c for (m1, m0, n), c in tables.sp.items()}
    return _compare_maps(got, want, ("q", "a", "b"))


def _verify_mod3(max_n: int) -> dict | None:
    got = _series_map(qs.sum_mod3(max_n), max_n)
    tables = oracle.count_tables(max_n)
    want = {(n, m1, m2, m0): c for (m1, m2, m0, n), c in tables.st.items()}
    return _compare_maps(got, want, ("q", "a", "b", "c"))


def _verify_cor_ab(max_n: int) -> dict | None:
    specialized = qs.sum_mod3(max_n).map_markers(
        {"a": {"a": 1}, "b": {"b": 1}, "c": {"a": 1, "b": 1}}, ("a", "b")
    )
    cmp = qs.series_equal(specialized, qs.product_alladi(max_n), max_n)
    if cmp.equal:
        return None
    key, lhs, rhs = cmp.first_discrepancy
    return _discrepancy(("q", "a", "b"), key, lhs, rhs)


def _verify_oracle_vs_series(max_n: int) -> dict | None:
    tables = oracle.count_tables(max_n)
    tables.check_marginals()
    want_s = oracle.count_product_side(max_n)
    for n in range(max_n + 1):
        if tables.s.get(n, 0) != want_s[n]:
            return _discrepancy(("q",), (n,), tables.s.get(n, 0), want_s[n])
    checks = [
        (qs.sum_main(max_n), {(n, m): c for (m, n), c in tables.sm.items()}, ("q", "x")),
        (qs.sum_mod2(max_n), {(n, m1, m0): c for (m1, m0, n), c in tables.sp.items()}, ("q", "a", "b")),
        (
            qs.sum_mod3(max_n),
            {(n, m1, m2, m0): c for (m1, m2, m0, n), c in tables.st.items()},
            ("q", "a", "b", "c"),
        ),
    ]
    for series, want, names in checks:
        found = _compare_maps(_series_map(series, max_n), want, names)
        if found is not None:
            return found
    return None


VERIFIERS = {
    "main": _verify_main,
    "cor-schur": _verify_cor_schur,
    "mod2": _verify_mod2,
    "mod3": _verify_mod3,
    "cor-ab": _verify_cor_ab,
    "oracle-vs-series": _verify_oracle_vs_series,
}


def run_verify(identity: str, max_n: int) -> VerifyReport:
    t0 = time.perf_counter()
    discrepancy = VERIFIERS[identity](max_n)
    elapsed = time.perf_counter() - t0
    status = "pass" if discrepancy is None else "fail"
    return VerifyReport(identity, max_n, status, discrepancy, elapsed)


# ---------------------------------------------------------------------------
# subcommand handlers


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_verify(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n is not None else VERIFY_DEFAULTS[args.identity]
    if max_n < 0:
        print("--max-n must be nonnegative", file=sys.stderr)
        return 2
    report = run_verify(args.identity, max_n)
    text = json.dumps(report.to_dict(), sort_keys=True) if args.json else report.render()
    _emit(text, args.out)
    return 0 if report.status == "pass" else 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    try:
        parts = tuple(sorted(int(x) for x in args.parts.split(",") if x.strip()))
        lam = Partition(parts)
    except ValueError as exc:
        print(f"invalid partition: {exc}", file=sys.stderr)
        return 2
    violation = schur_violation(lam)
    if violation is not None:
        print(f"not a Schur partition: {violation}", file=sys.stderr)
        return 2
    mode = Mode.MOD2 if args.mod2 else Mode.MOD3 if args.mod3 else Mode.MAIN
    d, trace = decompose(lam, mode)
    payload = decomposition_to_dict(d, lam)
    if args.json:
        text = json.dumps(payload, sort_keys=True)
        if args.trace:
            text = json.dumps(
                {**payload, "trace": trace.render().splitlines()}, sort_keys=True
            )
    else:
        lines = [f"mode: {mode.value}"]
        for key in [k for k in payload if k not in ("mode", "weights", "trace")]:
            values = payload[key]
            shown = ", ".join(str(v) for v in values) if values else "(empty)"
            lines.append(f"{key}: {shown}")
        weights = payload["weights"]
        companions = [k for k in weights if k not in ("lambda",)]
        total = " + ".join(str(weights[k]) for k in companions)
        lines.append(f"weights: {weights['lambda']} = {total}")
        if args.trace:
            lines.append("trace (backward moves):")
            lines.append(trace.render() or "(no moves)")
        text = "\n".join(lines)
    _emit(text, args.out)
    return 0


def _table_rows(which: str, max_n: int) -> tuple[list[str], list[tuple[int, ...]]]:
    if which == "s":
        counts = oracle.count_schur(max_n)
        return ["n", "s"], [(n, counts[n]) for n in range(max_n + 1)]
    tables = oracle.count_tables(max_n)
    if which == "sp":
        rows = sorted((n, m1, m0, c) for (m1, m0, n), c in tables.sp.items())
        return ["m1", "m0", "n", "count"], [(m1, m0, n, c) for n, m1, m0, c in rows]
    rows = sorted((n, m1, m2, m0, c) for (m1, m2, m0, n), c in tables.st.items())
    return ["m1", "m2", "m0", "n", "count"], [
        (m1, m2, m0, n, c) for n, m1, m2, m0, c in rows
    ]


def _cmd_table(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n is not None else TABLE_DEFAULTS[args.which]
    if max_n < 0:
        print("--max-n must be nonnegative", file=sys.stderr)
        return 2
    header, rows = _table_rows(args.which, max_n)
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(v) for v in row) for row in rows]
        text = "\n".join(lines)
    else:
        text = json.dumps(
            {
                "table": args.which,
                "max_n": max_n,
                "rows": [dict(zip(header, row)) for row in rows],
            },
            sort_keys=True,
        )
    _emit(text, args.out)
    return 0


SERIES_BUILDERS = {
    "main": qs.sum_main,
    "mod2": qs.sum_mod2,
    "mod3": qs.sum_mod3,
    "schur-product": qs.product_schur,
    "alladi-product": qs.product_alladi,
}


def _cmd_series(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n is not None else 40
    if max_n < 0:
        print("--max-n must be nonnegative", file=sys.stderr)
        return 2
    s = SERIES_BUILDERS[args.which](max_n)
    text = json.dumps(
        {
            "series": args.which,
            "truncation": s.truncation,
            "markers": list(s.markers),
            "terms": s.to_json_rows(),
        },
        sort_keys=True,
    )
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurkit",
        description="Exact verification tools for Schur partition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify",
        help="compare a multiple series against its product or brute-force side",
    )
    p_verify.add_argument("identity", choices=sorted(VERIFIERS))
    p_verify.add_argument("--max-n", type=int, default=None, help="q-degree to check")
    p_verify.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_verify.add_argument("--out", default=None, help="write output to a file")
    p_verify.set_defaults(func=_cmd_verify)

    p_dec = sub.add_parser(
        "decompose", help="decompose a Schur partition into base plus companions"
    )
    p_dec.add_argument("parts", help="comma-separated parts, e.g. 2,5,9")
    group = p_dec.add_mutually_exclusive_group()
    group.add_argument("--mod2", action="store_true", help="parity refinement (stride 2)")
    group.add_argument("--mod3", action="store_true", help="mod-3 refinement (stride 3)")
    p_dec.add_argument("--trace", action="store_true", help="print the move trace")
    p_dec.add_argument("--json", action="store_true")
    p_dec.add_argument("--out", default=None)
    p_dec.set_defaults(func=_cmd_decompose)

    p_table = sub.add_parser(
        "table",
        help="dump oracle count tables",
        description=(
            "CSV columns: s -> n,s; sp -> m1,m0,n,count; st -> m1,m2,m0,n,count. "
            "Rows are sorted by n, then by the part-count statistics."
        ),
    )
    p_table.add_argument("which", choices=["s", "sp", "st"])
    p_table.add_argument("--max-n", type=int, default=None)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=_cmd_table)

    p_series = sub.add_parser("series", help="dump a series as JSON rows")
    p_series.add_argument("which", choices=sorted(SERIES_BUILDERS))
    p_series.add_argument("--max-n", type=int, default=None)
    p_series.add_argument("--out", default=None)
    p_series.set_defaults(func=_cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
