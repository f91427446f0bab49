"""Command-line front end: point checks, sieving scans, the claim
harness, and Goldbach partition/certificate sweeps.

Text output goes to stdout for humans; JSON (stable key order) and CSV
are the machine interfaces.  Every machine payload is wrapped in an
envelope carrying the tool version, the echoed invocation, and a
timestamp.  Exit codes: 0 affirmative/success, 1 negative result or
claim failure, 2 usage error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from typing import Any

from . import __version__
from .arith import DEFAULT_BUDGET_BITS, ResourceBudgetError, prime_table
from .claims import CLAIMS, ClaimReport, Verdict, run_claim
from .counting import build_sieve, summarize_sieve
from .ramification import (
    admits_strong_ramifier,
    character,
    goldbach_partitions,
    index_of,
    ramifier_witnesses,
    strong_witnesses,
)

LIST_CAP = 10_000  # scan payloads above this many ramifiers are truncated


@dataclass(frozen=True)
class OutputEnvelope:
    """Stable wrapper around every machine-readable payload."""

    tool_version: str
    command: str
    generated_at: str
    payload: Any

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _envelope(argv: list[str], payload: Any) -> OutputEnvelope:
    return OutputEnvelope(
        tool_version=__version__,
        command="ramify " + " ".join(argv),
        generated_at=datetime.now(timezone.utc).isoformat(),
        payload=payload,
    )


def _deliver(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _emit(
    args: argparse.Namespace,
    argv: list[str],
    payload: Any,
    text_lines: list[str],
    csv_rows: list[list] | None,
) -> None:
    fmt = args.format
    if getattr(args, "json", False):
        fmt = "json"
    if fmt == "json" or (args.out and fmt == "text"):
        _deliver(_envelope(argv, payload).to_json(), args.out)
    elif fmt == "csv":
        if csv_rows is None:
            raise ValueError("csv output is not defined for this subcommand")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        _deliver(buf.getvalue().rstrip("\n"), args.out)
    else:
        _deliver("\n".join(text_lines), args.out)


# --- subcommands -------------------------------------------------------------


def _cmd_check(args: argparse.Namespace, argv: list[str]) -> int:
    n, m = args.n, args.m
    record = index_of(n, m)
    if args.strong:
        witnesses = strong_witnesses(n, m, prime_table(m))
        wdicts = [
            {"m": w.m, "n": w.n, "p1": w.p1, "r": w.r, "p2": w.p2} for w in witnesses
        ]
    else:
        witnesses = ramifier_witnesses(n, m)
        wdicts = [
            {"m": w.m, "n": w.n, "a1": w.a1, "r": w.r, "a2": w.a2} for w in witnesses
        ]
    payload = {
        "n": n,
        "m": m,
        "strong": args.strong,
        "character": character(n, m),
        "is_ramifier": bool(witnesses),
        "index": record.index if record else None,
        "all_indices": list(record.all_indices) if record else [],
        "witnesses": wdicts,
    }
    kind = "strong ramifier" if args.strong else "ramifier"
    lines = [
        f"n={n} mod m={m}: character {payload['character']}, "
        + (f"{kind}" if witnesses else f"not a {kind}")
    ]
    if record:
        lines.append(f"index {record.index}, all indices {list(record.all_indices)}")
    for w in wdicts:
        lines.append("witness " + " ".join(f"{k}={v}" for k, v in w.items()))
    header = ["m", "n", "p1", "r", "p2"] if args.strong else ["m", "n", "a1", "r", "a2"]
    csv_rows = [header] + [list(d.values()) for d in wdicts]
    _emit(args, argv, payload, lines, csv_rows)
    return 0 if witnesses else 1


def _cmd_scan(args: argparse.Namespace, argv: list[str]) -> int:
    sieve = build_sieve(args.m, args.x, budget_bits=args.budget_bits)
    summary = summarize_sieve(sieve)
    ns = sieve.ramifiers()
    truncated = len(ns) > LIST_CAP
    payload = {
        "summary": asdict(summary),
        "ramifiers": None if truncated else ns,
        "truncated": truncated,
    }
    lines = [
        f"m={summary.m} x={summary.x}: {summary.count} ramifiers, "
        f"radius {summary.radius}",
        f"upper main term {summary.upper_main:.4f}, "
        f"lower main term {summary.lower_main:.4f}",
        "ramifiers: " + (f"(truncated, {len(ns)} > {LIST_CAP})" if truncated else str(ns)),
    ]
    csv_rows = [["n", "character"]]
    csv_rows += [[n, 1 if sieve.bit(n) else 0] for n in range(2, args.x + 1)]
    _emit(args, argv, payload, lines, csv_rows)
    return 0


def _claim_params(claim_id: str, m_max: int, x: int) -> dict[str, Any]:
    if claim_id == "C1":
        return {"m_max": m_max}
    if claim_id == "C2":
        return {"m_max": m_max, "x": x}
    if claim_id == "C3":
        return {"p_max": m_max}
    if claim_id in ("C4", "C6", "C12"):
        return {"m_values": (m_max,), "x_values": (x,)}
    if claim_id == "C5":
        return {"m_max": max(m_max, 4)}
    if claim_id == "C7":
        return {"x_values": (x,)}
    if claim_id == "C8":
        return {"x": x}
    if claim_id == "C9":
        return {"m_max": m_max, "x": x}
    if claim_id == "C10":
        return {"m_max": m_max, "x_values": (x,)}
    if claim_id == "C11":
        return {"m_max": m_max, "n_max": x}
    return {"x_values": (x,)}  # C13


def _claims_csv(reports: list[ClaimReport]) -> list[list]:
    rows: list[list] = [
        ["claim_id", "param_m", "param_x", "claimed", "actual", "discrepancy", "verdict"]
    ]
    for r in reports:
        cells = r.params.get("cells")
        if cells:
            for cell, c, a, d in zip(cells, r.claimed, r.actual, r.discrepancy):
                rows.append(
                    [
                        r.claim_id,
                        cell.get("m", ""),
                        cell.get("x", ""),
                        "" if c is None else c,
                        a,
                        "" if d is None else d,
                        r.verdict.value,
                    ]
                )
        else:
            p = r.params
            rows.append(
                [
                    r.claim_id,
                    p.get("m_max", p.get("p_max", p.get("m", ""))),
                    p.get("x", p.get("n_max", "")),
                    "" if r.claimed is None else r.claimed,
                    r.actual,
                    "" if r.discrepancy is None else r.discrepancy,
                    r.verdict.value,
                ]
            )
    return rows


def _cmd_claims(args: argparse.Namespace, argv: list[str]) -> int:
    if args.ids:
        ids = [s.strip() for s in args.ids.split(",") if s.strip()]
        unknown = [cid for cid in ids if cid not in CLAIMS]
        if unknown:
            print(f"unknown claim id(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
        ids = [cid for cid in CLAIMS if cid in ids]
    else:
        ids = list(CLAIMS)
    jobs = [(cid, _claim_params(cid, args.m_max, args.x)) for cid in ids]
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(lambda j: run_claim(j[0], **j[1]), jobs))
    else:
        reports = [run_claim(cid, **params) for cid, params in jobs]
    failing = [
        r.claim_id
        for r in reports
        if r.verdict == Verdict.FAILS_WITH_COUNTEREXAMPLE
        and CLAIMS[r.claim_id].affects_exit
    ]
    payload = {
        "reports": [r.to_dict() for r in reports],
        "failing_asserted_claims": failing,
    }
    lines = []
    for r in reports:
        info = CLAIMS[r.claim_id]
        lines.append(
            f"{r.claim_id} {info.title} [{info.kind}]: {r.verdict.value}"
            + (f" ({len(r.counterexamples)} counterexamples)" if r.counterexamples else "")
        )
    if failing:
        lines.append(f"asserted claims failing: {', '.join(failing)}")
    _emit(args, argv, payload, lines, _claims_csv(reports))
    return 1 if failing else 0


def _cmd_goldbach(args: argparse.Namespace, argv: list[str]) -> int:
    if args.m_max < 4:
        print("--m-max must be >= 4", file=sys.stderr)
        return 2
    primes = prime_table(args.m_max)
    rows = []
    mismatches = 0
    for m in range(4, args.m_max + 1, 2):
        partitions = goldbach_partitions(m, primes)
        cert = admits_strong_ramifier(m, primes)
        if bool(partitions) != (cert is not None):
            mismatches += 1
        rows.append(
            {
                "m": m,
                "partitions": len(partitions),
                "certificate": None
                if cert is None
                else {"n": cert.n, "p1": cert.p1, "r": cert.r, "p2": cert.p2},
            }
        )
    payload = {"rows": rows, "checked": len(rows), "mismatches": mismatches}
    lines = []
    for row in rows:
        cert = row["certificate"]
        cert_text = (
            "NONE"
            if cert is None
            else f"n={cert['n']} p1={cert['p1']} r={cert['r']} p2={cert['p2']}"
        )
        lines.append(f"m={row['m']}: {row['partitions']} partitions, {cert_text}")
    lines.append(f"equivalence counterexamples: {mismatches}")
    csv_rows: list[list] = [
        ["m", "partitions", "certificate_n", "certificate_p1", "certificate_r", "certificate_p2"]
    ]
    for row in rows:
        cert = row["certificate"] or {}
        csv_rows.append(
            [
                row["m"],
                row["partitions"],
                cert.get("n", ""),
                cert.get("p1", ""),
                cert.get("r", ""),
                cert.get("p2", ""),
            ]
        )
    _emit(args, argv, payload, lines, csv_rows)
    return 1 if mismatches else 0


# --- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument(
        "--budget-bits", type=int, default=DEFAULT_BUDGET_BITS, metavar="N",
        help="bitmap memory budget in bits",
    )
    common.add_argument(
        "--threads", type=int, default=1, metavar="N",
        help="worker threads for independent claim jobs",
    )

    parser = argparse.ArgumentParser(
        prog="ramify",
        description="Ramifier queries, sieving scans, and the claim harness.",
    )
    parser.add_argument("--version", action="version", version=f"ramify {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("check", parents=[common], help="witnesses for one (n, m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--strong", action="store_true", help="require prime residues")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("scan", parents=[common], help="sieve all n <= x for one m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(func=_cmd_scan, json=False)

    p = sub.add_parser("claims", parents=[common], help="run the claim registry")
    p.add_argument("--ids", metavar="C1,C2,...", help="claims to run (default: all)")
    p.add_argument("--m-max", type=int, default=20, metavar="N")
    p.add_argument("--x", type=int, default=500, metavar="N")
    p.set_defaults(func=_cmd_claims, json=False)

    p = sub.add_parser("goldbach", parents=[common], help="even-modulus sweep")
    p.add_argument("--m-max", type=int, required=True, metavar="N")
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.set_defaults(func=_cmd_goldbach)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "check" and (args.n < 2 or args.m < 2):
        parser.error("n and m must both be >= 2")
    if args.subcommand == "scan" and (args.m < 2 or args.x < 2):
        parser.error("--m and --x must both be >= 2")
    try:
        return args.func(args, argv)
    except ResourceBudgetError as exc:
        print(f"resource budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
