"""Command-line front end.

Subcommands: analyze, certify, scan, enumerate, search, verify.
Every flag can also be set through an environment variable with the
SEQCERT_ prefix (flag --time-cap becomes SEQCERT_TIME_CAP); explicit flags
win.  Exit codes: 0 = ran to a verdict (open included), 1 = usage error,
2 = internal error.  Verdicts are data, not exit codes: scripts should read
the JSON output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .certifier import Certificate, certify
from .config import DEFAULT_CONFIG, RunConfig
from .families import ScanRow, family_scan, format_scan_table, scan_json_lines
from .oracle import exhaustive_cds_search, exhaustive_sequence_search
from .pell import Form, enumerate_solutions
from .seqcore import (
    BinarySequence,
    DifferenceViolation,
    autocorrelation,
    format_element_set,
    parse_element_set,
    support_set,
    verify_cds,
)

ENV_PREFIX = "SEQCERT_"


class UsageError(Exception):
    pass


def _env_default(flag: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + flag.upper().replace("-", "_"))
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError as exc:
        raise UsageError(f"bad value for {ENV_PREFIX}{flag.upper()}: {raw!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcert",
        description="Two-level autocorrelation sequences, cyclic difference "
                    "sets, and re-checkable nonexistence certificates.",
        epilog=f"Every flag has an environment override: {ENV_PREFIX}<FLAG> "
               f"(e.g. {ENV_PREFIX}TIME_CAP); explicit flags win.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"),
                       default=_env_default("format", str, "text"))
        p.add_argument("--budget", type=int,
                       default=_env_default("budget", int, DEFAULT_CONFIG.rho_budget),
                       help="rho iteration budget for factorizations")
        p.add_argument("--seed", type=int,
                       default=_env_default("seed", int, DEFAULT_CONFIG.seed))
        p.add_argument("--time-cap", type=float,
                       default=_env_default("time-cap", float, DEFAULT_CONFIG.oracle_time_cap),
                       help="oracle wall-clock cap in seconds")

    p = sub.add_parser("analyze", help="autocorrelation profile of a sequence")
    p.add_argument("--sequence", help="string over {+,-}, e.g. '-++++'")
    p.add_argument("--file", help="file with one {+,-} string per line")
    add_common(p)

    p = sub.add_parser("certify", help="run the nonexistence test battery")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--all-rules", action="store_true",
                   default=_env_default("all-rules", lambda s: s == "1", False))
    add_common(p)

    p = sub.add_parser("scan", help="certify a parameter family row by row")
    p.add_argument("--family", type=int, choices=(1, 2, 3, 0), required=True)
    p.add_argument("--max-i", type=int, help="Pell index bound (families 2, 0)")
    p.add_argument("--max-u", type=int, help="u bound (family 1)")
    p.add_argument("--max-a", type=int, help="A bound (family 3)")
    add_common(p)

    p = sub.add_parser("enumerate", help="list a family's Pell-driven rows")
    p.add_argument("--family", type=int, choices=(2, 0), required=True)
    p.add_argument("--max-i", type=int, required=True)
    add_common(p)

    p = sub.add_parser("search", help="exhaustive difference-set search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    add_common(p)

    p = sub.add_parser("verify", help="verify a difference set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", dest="elements", required=True,
                   help="comma-separated residues")
    add_common(p)
    return parser


def _config_from(args) -> RunConfig:
    return DEFAULT_CONFIG.with_(rho_budget=args.budget, seed=args.seed,
                                oracle_time_cap=args.time_cap,
                                output_format=args.format)


def _analyze_one(text: str, fmt: str, out) -> None:
    seq = BinarySequence.from_text(text)
    profile = autocorrelation(seq)
    support = support_set(seq)
    res = verify_cds(seq.n, support)
    if fmt == "json":
        obj = {
            "n": str(seq.n),
            "sequence": seq.to_text(),
            "c": [str(v) for v in profile.c],
            "two_level": profile.two_level,
            "d": str(profile.d) if profile.d is not None else None,
            "support": [str(e) for e in support],
            "support_params": (None if isinstance(res, DifferenceViolation)
                               else {"n": str(res.n), "k": str(res.k),
                                     "lambda": str(res.lam)}),
        }
        print(json.dumps(obj, separators=(", ", ": ")), file=out)
        return
    print(f"sequence  {seq.to_text()}   (n = {seq.n})", file=out)
    print("t    : " + " ".join(f"{t:>4d}" for t in range(seq.n)), file=out)
    print("C(t) : " + " ".join(f"{v:>4d}" for v in profile.c), file=out)
    if profile.two_level:
        print(f"two-level: yes, d = {profile.d}", file=out)
    else:
        print("two-level: no", file=out)
    print(f"support  : {format_element_set(support) or '(empty)'}", file=out)
    if isinstance(res, DifferenceViolation):
        print(f"support is not a difference set: residue {res.residue} "
              f"occurs {res.count} times (expected {res.expected})", file=out)
    else:
        print(f"support parameters: ({res.n}, {res.k}, {res.lam})", file=out)


def _print_certificate(cert: Certificate, fmt: str, out) -> None:
    if fmt == "json":
        print(cert.to_json(), file=out)
        return
    p = cert.params
    print(f"params   : (n, k, lambda) = ({p.n}, {p.k}, {p.lam});"
          f" order {p.order}; d = {cert.d}", file=out)
    print(f"verdict  : {cert.verdict}", file=out)
    if cert.rule:
        print(f"rule     : {cert.rule}", file=out)
    if cert.witnesses:
        pairs = ", ".join(f"{k}={v}" for k, v in cert.witnesses)
        print(f"witnesses: {pairs}", file=out)
    if cert.witness_set is not None:
        print(f"set      : {format_element_set(cert.witness_set) or '(empty)'}",
              file=out)
    if cert.reason:
        print(f"reason   : {cert.reason}", file=out)


def _cmd_analyze(args, out) -> int:
    texts = []
    if args.sequence:
        texts.append(args.sequence)
    if args.file:
        with open(args.file) as fh:
            texts.extend(line.strip() for line in fh if line.strip())
    if not texts:
        raise UsageError("analyze needs --sequence or --file")
    for i, text in enumerate(texts):
        if i and args.format == "text":
            print(file=out)
        _analyze_one(text, args.format, out)
    return 0


def _cmd_certify(args, out) -> int:
    if args.d is None and (args.k is None or args.lam is None):
        raise UsageError("certify needs --d or both --k and --lambda")
    config = _config_from(args)
    if args.d is None:
        order = args.k - args.lam
        d = args.n - 4 * order
    else:
        d = args.d
        if args.k is not None or args.lam is not None:
            raise UsageError("give either --d or --k/--lambda, not both")
    certs = certify(args.n, d, config, all_rules=args.all_rules)
    if isinstance(certs, Certificate):
        certs = [certs]
    for i, cert in enumerate(certs):
        if i and args.format == "text":
            print(file=out)
        _print_certificate(cert, args.format, out)
    return 0


def _scan_bound(args) -> int:
    bounds = {2: args.max_i, 0: args.max_i, 1: args.max_u, 3: args.max_a}
    bound = bounds[args.family]
    if bound is None:
        flag = {2: "--max-i", 0: "--max-i", 1: "--max-u", 3: "--max-a"}[args.family]
        raise UsageError(f"scan --family {args.family} needs {flag}")
    return bound


def _cmd_scan(args, out) -> int:
    config = _config_from(args)
    rows = family_scan(args.family, _scan_bound(args), config)
    if args.format == "json":
        print(scan_json_lines(rows), file=out)
    else:
        print(format_scan_table(rows), file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    d, form = (3, Form.UNIT1) if args.family == 2 else (5, Form.UNIT4)
    from .families import family0_member, family2_member

    member = family2_member if args.family == 2 else family0_member
    rows = []
    for sol in enumerate_solutions(d, form, max_index=args.max_i):
        _, params = member(sol.index, sol.A, sol.B)
        rows.append((sol.index, sol.A, sol.B, params))
    if args.format == "json":
        for i, a, b, p in rows:
            print(json.dumps({"i": str(i), "A": str(a), "B": str(b),
                              "n": str(p.n), "k": str(p.k),
                              "lambda": str(p.lam)},
                             separators=(", ", ": ")), file=out)
    else:
        header = ("i", "A_i", "B_i", "n", "k", "lambda", "k-lambda")
        table = [tuple(str(x) for x in (i, a, b, p.n, p.k, p.lam, p.order))
                 for i, a, b, p in rows]
        widths = [max(len(h), *(len(r[j]) for r in table)) for j, h in enumerate(header)]
        print("  ".join(h.rjust(widths[j]) for j, h in enumerate(header)), file=out)
        for r in table:
            print("  ".join(r[j].rjust(widths[j]) for j in range(len(header))), file=out)
    return 0


def _cmd_search(args, out) -> int:
    if args.d is not None:
        result = exhaustive_sequence_search(args.n, args.d, time_cap=args.time_cap)
        if args.format == "json":
            obj = {"n": str(args.n), "d": str(args.d),
                   "sequences": [s.to_text() for s in result.sequences],
                   "complete": result.complete}
            print(json.dumps(obj, separators=(", ", ": ")), file=out)
        else:
            print(f"(n, d) = ({args.n}, {args.d}): "
                  f"{len(result.sequences)} sequence(s)"
                  + ("" if result.complete else "  [time cap hit: partial]"),
                  file=out)
            for s in result.sequences:
                print(f"  {s.to_text()}", file=out)
        return 0
    if args.k is None or args.lam is None:
        raise UsageError("search needs --d or both --k and --lambda")
    result = exhaustive_cds_search(args.n, args.k, args.lam, time_cap=args.time_cap)
    if args.format == "json":
        obj = {"n": str(args.n), "k": str(args.k), "lambda": str(args.lam),
               "sets": [[str(e) for e in s] for s in result.sets],
               "complete": result.complete, "nodes": str(result.nodes)}
        print(json.dumps(obj, separators=(", ", ": ")), file=out)
    else:
        status = "" if result.complete else "  [time cap hit: partial]"
        print(f"({args.n}, {args.k}, {args.lam}): {len(result.sets)} set(s) "
              f"containing 0 ({result.nodes} nodes){status}", file=out)
        for s in result.sets:
            print(f"  {format_element_set(s) or '(empty)'}", file=out)
    return 0


def _cmd_verify(args, out) -> int:
    elements = parse_element_set(args.elements)
    res = verify_cds(args.n, elements)
    if args.format == "json":
        if isinstance(res, DifferenceViolation):
            obj = {"valid": False, "residue": str(res.residue),
                   "count": str(res.count),
                   "expected": str(res.expected) if res.expected is not None else None}
        else:
            obj = {"valid": True, "n": str(res.n), "k": str(res.k),
                   "lambda": str(res.lam)}
        print(json.dumps(obj, separators=(", ", ": ")), file=out)
    elif isinstance(res, DifferenceViolation):
        print(f"not a difference set: residue {res.residue} occurs "
              f"{res.count} times (expected {res.expected})", file=out)
    else:
        print(f"valid ({res.n}, {res.k}, {res.lam}) difference set", file=out)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
    "enumerate": _cmd_enumerate,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
