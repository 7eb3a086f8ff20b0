"""Tabulate fusion invariants for every catalog group and prime.

For each instance prints |S|, the orders of the focal, hyperfocal and
elementary focal subgroups, |T_F|, whether the normalizer subsystem controls
transfer, the wreath-quotient kernel when it does not, and the number of
terms of the characteristic idempotent (|S| <= 32 only).
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import asdict, dataclass, fields

from fusiontransfer.burnside import IDEMPOTENT_ORDER_BOUND, characteristic_idempotent
from fusiontransfer.fusion import (
    controls_transfer,
    elementary_focal_subgroup,
    focal_subgroup,
    hyperfocal_subgroup,
    normalizer_subsystem,
)
from fusiontransfer.suite import instances
from fusiontransfer.theorems import yoshida_check
from fusiontransfer.transfer import transfer_image_subgroup


@dataclass
class Row:
    instance: str
    sylow: int
    focal: int
    hyperfocal: int
    elementary_focal: int
    T_F: int
    controls: bool
    wreath_kernel: int | None
    idempotent_terms: int | None


def survey(max_order: int) -> list[Row]:
    rows = []
    for label, F in instances(max_order):
        control = controls_transfer(F, normalizer_subsystem(F))
        kernel = None
        if not control:
            kernel = yoshida_check(F).witness["kernel"].order
        terms = None
        if F.S.order <= IDEMPOTENT_ORDER_BOUND:
            terms = len(characteristic_idempotent(F).coeffs)
        rows.append(
            Row(
                label,
                F.S.order,
                focal_subgroup(F).order,
                hyperfocal_subgroup(F).order,
                elementary_focal_subgroup(F).order,
                transfer_image_subgroup(F).order,
                control,
                kernel,
                terms,
            )
        )
    return rows


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description="Fusion invariants across the catalog.")
    ap.add_argument("--max-order", type=int, default=400)
    ap.add_argument("--csv", default=None, help="write the table as CSV")
    args = ap.parse_args(argv)
    rows = survey(args.max_order)
    names = [f.name for f in fields(Row)]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=names)
            w.writeheader()
            w.writerows(asdict(r) for r in rows)
    width = max(len(r.instance) for r in rows)
    print(f"{'instance':<{width}}  " + "  ".join(n for n in names[1:]))
    for r in rows:
        cells = [str(getattr(r, n)) if getattr(r, n) is not None else "-" for n in names[1:]]
        print(f"{r.instance:<{width}}  " + "  ".join(f"{c:>{len(n)}}" for c, n in zip(cells, names[1:])))
    return 0


if __name__ == "__main__":
    sys.exit(main())
