"""``verify``: run named checks and print a report.

Exit status is 0 when every requested check passes, 1 otherwise, and 2 for
usage errors such as an unknown check id.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _u64(text: str) -> int:
    n = int(text)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description=__doc__.splitlines()[0])
    p.add_argument("ids", nargs="*", metavar="CHECK", help="check ids, or 'all'")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--has-omega", type=_bool, default=False, metavar="BOOL",
                   help="treat omega as a field element for rep-lemma")
    p.add_argument("--list", action="store_true", help="list registered checks")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.list:
        for cid, (anchor, _) in checks.REGISTRY.items():
            print(f"{cid:18} {anchor}")
        return 0

    ids = checks.check_ids() if args.ids == ["all"] else args.ids
    if not ids:
        parser.print_usage(sys.stderr)
        print("verify: error: give 'all' or at least one check id", file=sys.stderr)
        return 2
    unknown = [i for i in ids if i not in checks.REGISTRY]
    if unknown:
        print(f"verify: error: unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    if args.samples < 1:
        print("verify: error: --samples must be positive", file=sys.stderr)
        return 2

    config = checks.Config(has_omega=args.has_omega, seed=args.seed, samples=args.samples)
    report = checks.run(ids, config)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    else:
        print(checks.render_text(report))
    return 0 if report.overall == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
