"""Command-line runner for the claim registry.

    leechlab verify-all --json --out report.json
    leechlab leech
    leechlab list

Exit status: 0 when every selected claim passes, 1 when any fails, 2 for
usage errors (including an unknown subcommand).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import claims

COMMANDS = claims.GROUPS + ("verify-all",)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leechlab", description="Exact checks of the A6.mu4 K3 construction.")
    sub = p.add_subparsers(dest="command", metavar="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name, help=f"run the {name} claims" if name != "verify-all" else "run every claim")
        s.add_argument("--json", action="store_true", help="emit a JSON array of results")
        s.add_argument("--out", metavar="PATH", help="also write the report to PATH")
        s.add_argument("--filter", metavar="GLOB", help="only claims whose id matches GLOB")
        s.add_argument("--threads", type=int, default=1, metavar="N", help="run claims on N threads")
    sub.add_parser("list", help="list claim ids with their anchors")
    return p


def run_claims(selected, threads: int = 1) -> list[claims.ClaimResult]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(claims.run_claim, selected))
    else:
        results = [claims.run_claim(c) for c in selected]
    return sorted(results, key=lambda r: r.claim)


def render_json(results) -> str:
    return json.dumps([r.as_dict() for r in results], indent=2, ensure_ascii=False) + "\n"


def render_text(results) -> str:
    lines = []
    for r in results:
        tag = "PASS" if r.passed else "FAIL"
        lines.append(f"{tag}  {r.claim:<24} {r.computed}")
        if not r.passed:
            lines.append(f"      expected: {r.expected}")
    n_ok = sum(r.passed for r in results)
    lines.append(f"{n_ok}/{len(results)} claims pass")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "list":
        sys.stdout.write("\n".join(claims.list_claims()) + "\n")
        return 0

    selected = claims.select(args.command, args.filter)
    if not selected:
        print(f"no claims match {args.filter!r}", file=sys.stderr)
        return 2
    results = run_claims(selected, max(1, args.threads))
    report = render_json(results) if args.json else render_text(results)
    sys.stdout.write(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report)
    failed = [r.claim for r in results if not r.passed]
    if failed:
        print("failing claims: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
