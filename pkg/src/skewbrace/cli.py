"""Command-line interface.

Subcommands: groups, count, table, oracle, verify, brace.  Exit codes:
0 success/agreement, 1 verification mismatch, 2 usage or input error,
3 bound refusal.  All output is deterministic for a fixed invocation.
"""

import argparse
import csv
import json
import re
import sys

from . import config
from .counting import count_matrix, count_skew_braces
from .errors import BoundExceeded, SkewbraceError
from .groups import GroupDescriptor, aut_group_order, canonicalize, enumerate_groups, structure_params
from .kernels import BACKEND
from .oracle import (
    aut_orbits,
    build_skew_brace,
    enumerate_regular_subgroups,
    oracle_counts,
    verify_order,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


class SelectorError(SkewbraceError):
    pass


def parse_group_selector(text: str, groups) -> GroupDescriptor:
    """A selector is a position in the canonical listing, 'd:e:k', or
    'G(d,e,k)'."""
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        idx = int(text)
        if not 0 <= idx < len(groups):
            raise SelectorError(f"group index {idx} out of range [0, {len(groups)})")
        return groups[idx]
    m = re.fullmatch(r"(?:G\()?(\d+)[:,](\d+)[:,](\d+)\)?", text)
    if not m:
        raise SelectorError(f"cannot parse group selector {text!r}")
    desc = canonicalize(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    if desc not in groups:
        raise SelectorError(f"{desc} is not a group of this order")
    return desc


def _emit_rows(header, rows, fmt, out):
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(header)
    ]
    out.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def cmd_groups(args, out) -> int:
    groups = enumerate_groups(args.n)
    rows = []
    for G in groups:
        sp = structure_params(G)
        rows.append((str(G), G.d, G.e, G.k, sp.z, sp.g, aut_group_order(G)))
    if args.format == "json":
        json.dump(
            {
                "n": args.n,
                "groups": [
                    {"name": r[0], "d": r[1], "e": r[2], "k": r[3],
                     "z": r[4], "g": r[5], "aut_order": r[6]}
                    for r in rows
                ],
            },
            out, indent=2)
        out.write("\n")
    else:
        _emit_rows(("group", "d", "e", "k", "z", "g", "|Aut|"), rows, args.format, out)
    return EXIT_OK


def _matrix_payload(mat) -> dict:
    return {
        "n": mat.n,
        "groups": [str(G) for G in mat.groups],
        "matrix": [list(row) for row in mat.entries],
        "total": mat.total,
    }


def _emit_matrix(mat, fmt, out):
    if fmt == "json":
        json.dump(_matrix_payload(mat), out, indent=2)
        out.write("\n")
        return
    labels = [str(G) for G in mat.groups]
    header = ["M\\A"] + labels + ["row total"]
    rows = [
        [labels[i]] + list(row) + [sum(row)]
        for i, row in enumerate(mat.entries)
    ]
    _emit_rows(header, rows, fmt, out)
    if fmt == "text":
        out.write(f"total {mat.total}\n")


def cmd_count(args, out, always_matrix=False) -> int:
    groups = enumerate_groups(args.n)
    if not always_matrix and args.m is not None and args.a is not None:
        M = parse_group_selector(args.m, groups)
        A = parse_group_selector(args.a, groups)
        b = count_skew_braces(M, A)
        if args.format == "json":
            json.dump({"n": args.n, "m": str(M), "a": str(A), "b": b}, out, indent=2)
            out.write("\n")
        else:
            out.write(f"{b}\n")
        return EXIT_OK
    _emit_matrix(count_matrix(args.n), args.format, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    return cmd_count(args, out, always_matrix=True)


def cmd_oracle(args, out) -> int:
    groups = enumerate_groups(args.n)
    selected = [
        (M, A)
        for M in ([parse_group_selector(args.m, groups)] if args.m else groups)
        for A in ([parse_group_selector(args.a, groups)] if args.a else groups)
    ]
    payload = []
    agree = True
    for M, A in selected:
        strategies = ["quintuple", "generic"] if args.strategy == "both" else [args.strategy]
        entry = {"m": str(M), "a": str(A), "b_formula": count_skew_braces(M, A)}
        for strat in strategies:
            rep = oracle_counts(
                M, A, strat, workers=args.workers,
                quintuple_bound=args.max_quintuple_n, generic_bound=args.max_generic_n,
            )
            entry[f"b_oracle_{strat}"] = rep.b_oracle
            entry[f"subgroups_{strat}"] = rep.e_prime
            entry[f"hopf_galois_{strat}"] = rep.e
            entry[f"orbit_sizes_{strat}"] = list(rep.orbit_sizes)
            agree = agree and rep.b_oracle == entry["b_formula"]
        payload.append(entry)
    if args.format == "json":
        json.dump({"n": args.n, "pairs": payload}, out, indent=2)
        out.write("\n")
    else:
        cols = sorted({k for e in payload for k in e})
        cols.remove("m"); cols.remove("a")
        header = ["m", "a"] + cols
        rows = [[e["m"], e["a"]] + [e.get(c, "") for c in cols] for e in payload]
        _emit_rows(header, rows, args.format, out)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    report = verify_order(
        args.n,
        strategy=args.strategy,
        workers=args.workers,
        quintuple_bound=args.max_quintuple_n,
        generic_bound=args.max_generic_n,
    )
    if args.format == "json":
        json.dump(
            {
                "n": args.n,
                "strategy": args.strategy,
                "kernel": BACKEND,
                "ok": report.ok,
                "total_formula": report.total_formula,
                "total_oracle": report.total_oracle,
                "failures": report.failures(),
                "pairs": [
                    {
                        "m": str(p.M), "a": str(p.A),
                        "b_formula": p.b_formula, "b_oracle": p.b_oracle,
                        "subgroups": p.e_prime,
                        "checks": {c.name: c.ok for c in p.checks},
                    }
                    for p in report.pairs
                ],
            },
            out, indent=2)
        out.write("\n")
    else:
        for p in report.pairs:
            status = "ok" if p.ok else "FAIL"
            out.write(f"{p.M} x {p.A}: b = {p.b_formula}, oracle = {p.b_oracle}, "
                      f"subgroups = {p.e_prime} [{status}]\n")
        for c in report.order_checks:
            out.write(f"{c.name}: {'ok' if c.ok else 'FAIL ' + c.detail}\n")
        out.write(f"order {args.n}: total braces {report.total_formula}, "
                  f"{'all checks passed' if report.ok else 'MISMATCH'}\n")
        for line in report.failures():
            out.write(f"  {line}\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_brace(args, out) -> int:
    groups = enumerate_groups(args.n)
    if args.m is None or args.a is None:
        raise SelectorError("brace requires both --m and --a")
    M = parse_group_selector(args.m, groups)
    A = parse_group_selector(args.a, groups)
    subs = enumerate_regular_subgroups(
        M, A, "quintuple",
        workers=args.workers, quintuple_bound=args.max_quintuple_n,
    )
    od = aut_orbits(subs, A)
    reps = od.representatives()
    if not 0 <= args.index < len(reps):
        raise SelectorError(
            f"brace index {args.index} out of range: b({M}, {A}) = {len(reps)}"
        )
    brace = build_skew_brace(subs[reps[args.index]], A)
    payload = {"n": args.n, "m": str(M), "a": str(A), "index": args.index}
    payload.update(brace.to_dict())
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--strategy", choices=("quintuple", "generic", "both"),
                        default="quintuple")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--max-generic-n", type=int, default=config.GENERIC_N_BOUND)
    common.add_argument("--max-quintuple-n", type=int, default=config.QUINTUPLE_N_BOUND)

    parser = argparse.ArgumentParser(
        prog="skewbrace",
        description="Count and verify skew braces of squarefree order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_groups = sub.add_parser("groups", parents=[common],
                              help="list the groups of order n")
    p_groups.add_argument("n", type=int)

    for name, help_text in (
        ("count", "closed-form counts (single entry or full matrix)"),
        ("table", "full closed-form count matrix"),
        ("oracle", "brute-force counts from the holomorph"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("n", type=int)
        p.add_argument("--m", help="multiplicative group selector (index, d:e:k, or G(d,e,k))")
        p.add_argument("--a", help="additive group selector")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="differential battery: oracle vs closed forms")
    p_verify.add_argument("n", type=int)

    p_brace = sub.add_parser("brace", parents=[common],
                             help="dump one skew brace as JSON tables")
    p_brace.add_argument("n", type=int)
    p_brace.add_argument("--m", required=True)
    p_brace.add_argument("--a", required=True)
    p_brace.add_argument("--index", type=int, default=0)
    return parser


_HANDLERS = {
    "groups": cmd_groups,
    "count": cmd_count,
    "table": cmd_table,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "brace": cmd_brace,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args, sys.stdout)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except SkewbraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
