"""Command-line front end.

Single-case commands emit one JSON object; sweeps emit JSON-lines plus a
CSV summary next to --out.  Identical invocations produce identical bytes
unless --timestamp is given (and even then the timestamp goes to stderr).

Exit codes: 0 success, 1 a VIOLATION verdict or a failed bound, 2 invalid
flags or configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields as dataclass_fields
from datetime import datetime, timezone
from pathlib import Path

from .cayley import ExactBudgetExceeded, GraphKind, make_graph
from .charsum import epsilon_star, half_circle_points, katz_bound_check, unit_root
from .ff import DEFAULT_CAP, build_field
from .verify import (
    SweepConfig,
    conjecture_r,
    make_case,
    report_lines,
    summary_csv,
    sweep,
    verify_case,
    verify_conjecture_case,
)

ENV_CAP = "CAYLEY_CLIQUE_CAP"


@dataclass(frozen=True)
class CliConfig:
    command: str
    p: int | None = None
    s: int | None = None
    n: int | None = None
    d: int | None = None
    kind: str = "paley"
    max_order: int | None = None
    n_min: int = 2
    n_max: int = 6
    d_max: int | None = None
    max_base: int | None = None
    workers: int = 1
    cap: int = DEFAULT_CAP
    exact_budget: int = 2000
    strategy: str = "exact"
    format: str = "json"
    out: Path | None = None
    timestamp: bool = False


def _resolve_cap(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(ENV_CAP)
    if env is None:
        return DEFAULT_CAP
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{ENV_CAP} must be an integer, got {env!r}") from None


def _config_from(args: argparse.Namespace) -> CliConfig:
    known = {f.name for f in dataclass_fields(CliConfig)}
    picked = {k: v for k, v in vars(args).items() if k in known and v is not None}
    picked["cap"] = _resolve_cap(getattr(args, "cap", None))
    return CliConfig(**picked)


# --------------------------------------------------------------------------
# output plumbing

def _text_lines(doc: dict, prefix: str = "") -> list[str]:
    lines: list[str] = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.extend(_text_lines(value, f"{prefix}{key}."))
        elif isinstance(value, (list, tuple)) or value is None:
            lines.append(f"{prefix}{key}: {json.dumps(value)}")
        else:
            lines.append(f"{prefix}{key}: {value}")
    return lines


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _emit(doc: dict, cfg: CliConfig) -> None:
    if cfg.format == "json":
        _write(json.dumps(doc, sort_keys=True, indent=2) + "\n", cfg.out)
    elif cfg.format == "text":
        _write("\n".join(_text_lines(doc)) + "\n", cfg.out)
    else:
        raise ValueError("--format csv is only available for the sweep command")


def _stamp(cfg: CliConfig) -> None:
    if cfg.timestamp:
        print(f"# generated {datetime.now(timezone.utc).isoformat()}", file=sys.stderr)


# --------------------------------------------------------------------------
# command handlers

def _cmd_field(cfg: CliConfig) -> int:
    table = build_field(cfg.p, cfg.s, cap=cfg.cap)
    _emit(table.to_json(), cfg)
    return 0


def _cmd_graph_info(cfg: CliConfig) -> int:
    table = build_field(cfg.p, cfg.s * cfg.n, cap=cfg.cap)
    graph = make_graph(table, GraphKind.from_name(cfg.kind, cfg.d))
    _emit(graph.to_json(), cfg)
    return 0


def _cmd_verify(cfg: CliConfig) -> int:
    case = make_case(cfg.p, cfg.s, cfg.n, cfg.d, cfg.kind)
    report = verify_case(case, cap=cfg.cap, exact_budget=cfg.exact_budget)
    _emit(report.to_json(), cfg)
    return 1 if report.verdict == "VIOLATION" else 0


def _cmd_conjecture(cfg: CliConfig) -> int:
    q = cfg.p**cfg.s
    r = conjecture_r(q, cfg.d)
    if r is None:
        # No qualifying subfield: reported, not fatal.
        _emit({"q": q, "d": cfg.d, "r": None, "verdict": "no_qualifying_r"}, cfg)
        return 0
    report = verify_conjecture_case(q, cfg.d, cap=cfg.cap)
    _emit({"q": q, "d": cfg.d, "r": r, "report": report.to_json()}, cfg)
    return 1 if report.verdict == "VIOLATION" else 0


def _cmd_sweep(cfg: CliConfig) -> int:
    if cfg.max_order is None:
        raise ValueError("--max-order is required for sweep")
    kinds = ("paley", "peisert") if cfg.kind == "both" else (cfg.kind,)
    config = SweepConfig(
        max_order=cfg.max_order,
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        d_max=cfg.d_max,
        max_base=cfg.max_base,
        kinds=kinds,
        workers=cfg.workers,
        cap=cfg.cap,
        exact_budget=cfg.exact_budget,
    )
    reports = sweep(config)
    violations = sum(1 for r in reports if r.verdict == "VIOLATION")
    _stamp(cfg)
    if cfg.out is not None:
        cfg.out.write_text(report_lines(reports))
        csv_path = cfg.out.with_suffix(".csv")
        csv_path.write_text(summary_csv(reports))
        print(f"{len(reports)} reports -> {cfg.out} (summary {csv_path}), {violations} violations")
    elif cfg.format == "csv":
        sys.stdout.write(summary_csv(reports))
    elif cfg.format == "text":
        for r in reports:
            c = r.case
            size = "" if r.extended_clique_size is None else f" extended={r.extended_clique_size}"
            print(f"p={c.p} s={c.s} n={c.n} d={c.d} kind={c.kind.name} verdict={r.verdict}{size}")
    else:
        sys.stdout.write(report_lines(reports))
    return 1 if violations else 0


def _cmd_katz(cfg: CliConfig) -> int:
    table = build_field(cfg.p, cfg.s * cfg.n, cap=cfg.cap)
    report = katz_bound_check(table, cfg.s, cfg.d)
    _emit(report.to_json(), cfg)
    return 0 if report.bound_satisfied else 1


def _cmd_epsilon(cfg: CliConfig) -> int:
    if cfg.d < 2 or cfg.d % 2 != 0:
        raise ValueError(f"--d must be even and >= 2, got {cfg.d}")
    j = list(range(cfg.d // 2))
    result = epsilon_star([unit_root(cfg.d, k) for k in j])
    doc = {
        "d": cfg.d,
        "J": j,
        "epsilon_star": result.epsilon_star,
        "weights": list(result.weights),
        "paper_bound": math.pi / cfg.d - math.pi / cfg.d**2,
        "analytic": math.sin(math.pi / cfg.d),
    }
    _emit(doc, cfg)
    return 0


def _cmd_clique_extend(cfg: CliConfig) -> int:
    table = build_field(cfg.p, cfg.s * cfg.n, cap=cfg.cap)
    graph = make_graph(table, GraphKind.from_name(cfg.kind, cfg.d))
    subfield = table.subfield_elements(cfg.s)
    report = graph.extend_to_maximal_clique(subfield, cfg.strategy, cfg.exact_budget)
    _emit(report.to_json(), cfg)
    return 0


_HANDLERS = {
    "field": _cmd_field,
    "graph-info": _cmd_graph_info,
    "verify": _cmd_verify,
    "conjecture": _cmd_conjecture,
    "sweep": _cmd_sweep,
    "katz": _cmd_katz,
    "epsilon": _cmd_epsilon,
    "clique-extend": _cmd_clique_extend,
}


# --------------------------------------------------------------------------
# parser

def _add_output_flags(sp: argparse.ArgumentParser, formats=("json", "text")) -> None:
    sp.add_argument("--format", choices=formats, default="json", help="output format")
    sp.add_argument("--out", type=Path, default=None, help="write to this path instead of stdout")
    sp.add_argument("--cap", type=int, default=None,
                    help=f"field-size cap (default 2^24; env {ENV_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-cliques",
        description="Exact Paley/Peisert graph construction and subfield-clique verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="build GF(p^s) and print modulus and generator")
    sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("--s", type=int, required=True, help="extension degree")
    _add_output_flags(sp)

    def graph_flags(sp: argparse.ArgumentParser, n_required: bool) -> None:
        sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
        sp.add_argument("--s", type=int, required=True, help="base subfield degree over F_p")
        sp.add_argument("--n", type=int, required=n_required, default=None if n_required else 1,
                        help="extension degree over the base subfield")
        sp.add_argument("--d", type=int, required=True, help="residue-class order")
        sp.add_argument("--kind", choices=("paley", "peisert"), default="paley")

    sp = sub.add_parser("graph-info", help="connection-set parameters of GP/GP* on GF(p^(s*n))")
    graph_flags(sp, n_required=False)
    _add_output_flags(sp)

    sp = sub.add_parser("verify", help="full verdict for one (p, s, n, d, kind) case")
    graph_flags(sp, n_required=True)
    sp.add_argument("--exact-budget", type=int, default=2000,
                    help="max common-neighbor count for exact extension")
    _add_output_flags(sp)

    sp = sub.add_parser("conjecture", help="predicted maximal subfield r for GP(p^s, d), then verify")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    _add_output_flags(sp)

    sp = sub.add_parser("sweep", help="verify every admissible case with q^n <= --max-order")
    sp.add_argument("--max-order", type=int, required=True)
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--d-max", type=int, default=None)
    sp.add_argument("--max-base", type=int, default=None, help="only bases q = p^s up to this")
    sp.add_argument("--kind", choices=("paley", "peisert", "both"), default="both")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--exact-budget", type=int, default=2000)
    sp.add_argument("--timestamp", action="store_true", help="log a timestamp line to stderr")
    _add_output_flags(sp, formats=("json", "csv", "text"))

    sp = sub.add_parser("katz", help="character-sum bound over GF(p^(s*n)) with base degree s")
    graph_flags(sp, n_required=True)
    _add_output_flags(sp)

    sp = sub.add_parser("epsilon", help="epsilon* of the half-circle root-of-unity set for even d")
    sp.add_argument("--d", type=int, required=True, help="even residue-class order")
    _add_output_flags(sp)

    sp = sub.add_parser("clique-extend", help="extend the base subfield to a maximal clique")
    graph_flags(sp, n_required=True)
    sp.add_argument("--strategy", choices=("exact", "greedy"), default="exact")
    sp.add_argument("--exact-budget", type=int, default=2000)
    _add_output_flags(sp)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        cfg = _config_from(args)
        return _HANDLERS[cfg.command](cfg)
    except (ValueError, ExactBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
