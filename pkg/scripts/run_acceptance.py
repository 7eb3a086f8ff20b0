"""Run the acceptance batteries and print one line per criterion.

    python scripts/run_acceptance.py --max-order 400 --trials 1000 --json results.json
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from fusiontransfer.suite import run_all


@dataclass(frozen=True)
class AcceptanceConfig:
    max_order: int = 400
    trials: int = 1000
    json_path: str | None = None


def parse_args(argv: list[str] | None = None) -> AcceptanceConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=400)
    ap.add_argument("--trials", type=int, default=1000, help="random trials for the ring battery")
    ap.add_argument("--json", dest="json_path", default=None, help="write results to this file")
    args = ap.parse_args(argv)
    return AcceptanceConfig(args.max_order, args.trials, args.json_path)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    results = run_all(cfg.max_order, cfg.trials)
    for r in results:
        print(r.line())
        for note in r.notes:
            print(f"    {note}")
    if cfg.json_path:
        payload = {
            "config": asdict(cfg),
            "results": [
                {
                    "criterion": r.number,
                    "title": r.title,
                    "passed": r.passed,
                    "checks": r.checks,
                    "elapsed": r.elapsed,
                    "budget": r.budget,
                    "failures": r.failures,
                }
                for r in results
            ],
        }
        with open(cfg.json_path, "w") as fh:
            json.dump(payload, fh, indent=2)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
