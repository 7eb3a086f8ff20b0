"""Command-line interface.

Exit status is 0 when every assertion holds, 1 when a theorem check fails and
2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from .burnside import (
    IDEMPOTENT_ORDER_BOUND,
    BurnsideError,
    characteristic_idempotent,
    default_precision,
    format_element,
)
from .catalog import CATALOG, parse_group
from .fusion import (
    AmbientFusionSystem,
    controls_transfer,
    elementary_focal_subgroup,
    focal_subgroup,
    fusion_system,
    hyperfocal_subgroup,
    normalizer_subsystem,
)
from .groups import MAX_ORDER, FiniteGroup, GroupError, Subgroup, is_prime, prime_divisors
from .suite import run_all
from .theorems import tate_suite, yoshida_check
from .transfer import TransferError, transfer_image_subgroup

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
COMMANDS = ("analyze", "tate", "yoshida", "idempotent", "verify-suite", "catalog")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: str | None = None
    p: int | None = None
    precision: int | None = None
    max_order: int = MAX_ORDER
    fmt: str = "text"
    full: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.p is not None and not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if self.precision is not None and self.precision < 1:
            raise InputError("precision must be at least 1")
        if not 1 <= self.max_order <= MAX_ORDER:
            raise InputError(f"order bound must lie between 1 and {MAX_ORDER}")
        if self.fmt not in ("text", "json"):
            raise InputError("format must be text or json")


def subgroup_summary(H: Subgroup, full: bool = False) -> dict[str, Any]:
    G = H.group
    out: dict[str, Any] = {
        "generators": sorted(G.label(x) for x in H.generators),
        "order": H.order,
    }
    if full:
        out["members"] = [G.label(x) for x in H.elements]
    return out


def _load(cfg: RunConfig) -> tuple[FiniteGroup, AmbientFusionSystem]:
    if cfg.source is None:
        raise InputError("a group source is required")
    try:
        G = parse_group(cfg.source)
    except (GroupError, OSError) as exc:
        raise InputError(str(exc)) from None
    if G.order > cfg.max_order:
        raise InputError(f"group order {G.order} exceeds the bound {cfg.max_order}")
    p = cfg.p if cfg.p is not None else (prime_divisors(G.order) or [2])[0]
    if G.order % p:
        print(f"warning: {p} does not divide {G.order}; the Sylow subgroup is trivial", file=sys.stderr)
    return G, fusion_system(G, p)


def _tate_rows(F: AmbientFusionSystem) -> tuple[list[dict[str, Any]], bool]:
    rows = []
    ok = True
    for rep in tate_suite(F):
        ok &= rep.verdict
        rows.append(
            {
                "H0_order": rep.witness["H0_order"],
                "verdict": rep.verdict,
                "state": rep.summary,
                "equalities": rep.witness["equalities"],
            }
        )
    return rows, ok


def _yoshida_row(F: AmbientFusionSystem, full: bool) -> tuple[dict[str, Any], bool]:
    rep = yoshida_check(F)
    row: dict[str, Any] = {"verdict": rep.verdict, "summary": rep.summary}
    if "kernel" in rep.witness:
        row["kernel"] = subgroup_summary(rep.witness["kernel"], full)
    return row, rep.verdict


def analyze(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    G, F = _load(cfg)
    omega = None
    if cfg.precision is not None:
        if F.S.order > IDEMPOTENT_ORDER_BOUND:
            raise InputError(f"|S| = {F.S.order} is too large for idempotent arithmetic")
        omega = characteristic_idempotent(F, cfg.precision)
    try:
        T = transfer_image_subgroup(F, omega)
    except TransferError as exc:
        raise InputError(str(exc)) from None
    tate, tate_ok = _tate_rows(F)
    yoshida, yoshida_ok = _yoshida_row(F, cfg.full)
    report = {
        "group": G.name or cfg.source,
        "p": F.p,
        "sylow_order": F.S.order,
        "focal": subgroup_summary(focal_subgroup(F), cfg.full),
        "hyperfocal": subgroup_summary(hyperfocal_subgroup(F), cfg.full),
        "elementary_focal": subgroup_summary(elementary_focal_subgroup(F), cfg.full),
        "T_F": subgroup_summary(T, cfg.full),
        "controls_NFS": controls_transfer(F, normalizer_subsystem(F)),
        "yoshida": yoshida,
        "tate": tate,
    }
    return report, tate_ok and yoshida_ok


def tate(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    G, F = _load(cfg)
    rows, ok = _tate_rows(F)
    return {"group": G.name or cfg.source, "p": F.p, "tate": rows}, ok


def yoshida(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    G, F = _load(cfg)
    row, ok = _yoshida_row(F, cfg.full)
    return {"group": G.name or cfg.source, "p": F.p, "yoshida": row}, ok


def idempotent(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    G, F = _load(cfg)
    k = cfg.precision if cfg.precision is not None else default_precision(F)
    try:
        w = characteristic_idempotent(F, k)
    except BurnsideError as exc:
        raise InputError(str(exc)) from None
    return {
        "group": G.name or cfg.source,
        "p": F.p,
        "precision": k,
        "modulus": w.modulus,
        "terms": len(w.coeffs),
        "idempotent": format_element(w),
    }, True


def verify_suite(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    results = run_all(cfg.max_order)
    rows = [
        {
            "criterion": r.number,
            "title": r.title,
            "passed": r.passed,
            "checks": r.checks,
            "seconds": round(r.elapsed, 3),
            "failures": r.failures[:5],
        }
        for r in results
    ]
    return {"max_order": cfg.max_order, "results": rows}, all(r.passed for r in results)


def list_catalog(cfg: RunConfig) -> tuple[dict[str, Any], bool]:
    from .catalog import catalog_group

    rows = [{"name": n, "order": catalog_group(n).order} for n in CATALOG]
    return {"catalog": [r for r in rows if r["order"] <= cfg.max_order]}, True


HANDLERS = {
    "analyze": analyze,
    "tate": tate,
    "yoshida": yoshida,
    "idempotent": idempotent,
    "verify-suite": verify_suite,
    "catalog": list_catalog,
}


def run(cfg: RunConfig) -> tuple[int, dict[str, Any]]:
    try:
        report, ok = HANDLERS[cfg.command](cfg)
    except InputError as exc:
        return EXIT_INPUT, {"error": str(exc)}
    return (EXIT_OK if ok else EXIT_FAIL), report


def _render_text(report: dict[str, Any], indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            if set(value) >= {"generators", "order"}:
                gens = ", ".join(value["generators"]) or "1"
                lines.append(f"{pad}{key}: <{gens}> of order {value['order']}")
                if "members" in value:
                    lines.append(f"{pad}  members: {', '.join(value['members'])}")
            else:
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + "; ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {row}" for row in value.splitlines())
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusiontransfer",
        description="Fusion systems, double Burnside arithmetic and transfer checks on finite groups.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, help="the prime (default: least prime divisor)")
    common.add_argument("--precision", type=int, default=None, help="work modulo p^precision")
    common.add_argument("--max-order", type=int, default=MAX_ORDER, help="largest group order accepted")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    common.add_argument("--full", action="store_true", help="list subgroup members")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "tate", "yoshida", "idempotent"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("source", help="catalog name, inline 'perm'/'table' text, or a file path")
    sub.add_parser("verify-suite", parents=[common])
    sub.add_parser("catalog", parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = RunConfig(
            command=args.command,
            source=getattr(args, "source", None),
            p=args.p,
            precision=args.precision,
            max_order=args.max_order,
            fmt=args.fmt,
            full=args.full,
        )
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    code, report = run(cfg)
    if code == EXIT_INPUT:
        print(f"error: {report['error']}", file=sys.stderr)
        return code
    if cfg.fmt == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
