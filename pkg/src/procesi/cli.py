"""Command line entry point: ``procesi <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .macdonald import FiberCache, macdonald
from .partitions import core_quotient, format_partition, parse_partition
from .rootlattice import components_report, dihedral_census, mckay_graph, parse_group
from .verify import verify_edge_cases, verify_type_A, verify_type_D

CACHE_ENV = "PROCESI_CACHE"


@dataclass
class RunConfig:
    max_n: int
    ell_list: list[int] = field(default_factory=list)
    l_list: list[int] = field(default_factory=list)
    cache_dir: Path | None = None
    output: Path | None = None
    format: str = "json"
    sweep: bool = False
    jobs: int = 0

    def sizes(self) -> list[int]:
        return list(range(self.max_n + 1)) if self.sweep else [self.max_n]


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not out or any(x < 1 for x in out):
        raise argparse.ArgumentTypeError("every value must be a positive integer")
    return out


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def resolve_cache_dir(args) -> Path | None:
    """``--no-cache`` beats ``--cache-dir``, which beats the environment, which beats the default."""
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    output = getattr(args, "output", None)
    if output:
        return Path(output).resolve().parent / "procesi-cache"
    return None


def _config(args, ell_attr: str = "ell") -> RunConfig:
    cfg = RunConfig(
        max_n=args.n,
        cache_dir=resolve_cache_dir(args),
        output=Path(args.output) if args.output else None,
        format=args.format,
        sweep=args.sweep,
        jobs=args.jobs,
    )
    if ell_attr == "ell":
        cfg.ell_list = args.ell
    else:
        cfg.l_list = args.l
    return cfg


# ---------------------------------------------------------------------------
# report emission


def _rows(report: dict):
    """Flatten a sweep report into one row per (lambda, check)."""
    for run in report["runs"]:
        params = run["params"]
        entries = list(run.get("per_lambda", []))
        for key in ("P_o", "P_lt_ell"):
            entries += [dict(e, _section=key) for e in run.get(key, [])]
        for e in entries:
            checks = e.get("checks") or {"decomposition": e["pass"]}
            for name, ok in sorted(checks.items()):
                yield {
                    "check": params["check"],
                    "n": params["n"],
                    "ell": params.get("ell", params.get("l")),
                    "section": e.get("_section", ""),
                    "lambda": e["lambda"],
                    "core": e["core"],
                    "name": name,
                    "pass": int(bool(ok)),
                }
        for b in run.get("BLM", []):
            yield {
                "check": params["check"],
                "n": params["n"],
                "ell": params["ell"],
                "section": "BLM",
                "lambda": "",
                "core": "",
                "name": f"g={b['g']}",
                "pass": int(b["pass"]),
            }


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    cols = ["check", "n", "ell", "section", "lambda", "core", "name", "pass"]
    w = csv.DictWriter(buf, fieldnames=cols, delimiter="\t", lineterminator="\n")
    w.writeheader()
    for row in _rows(report):
        w.writerow(row)
    return buf.getvalue()


def emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text, encoding="utf-8")


def _sweep(runs: list[dict]) -> dict:
    failed = sum(r["summary"]["failed"] + r["summary"].get("blm_failed", 0) for r in runs)
    total = sum(r["summary"]["total"] for r in runs)
    return {"runs": runs, "summary": {"total": total, "failed": failed, "passed": total - failed}}


# ---------------------------------------------------------------------------
# commands


def cmd_core(args) -> int:
    cq = core_quotient(args.partition, args.ell)
    quotient = " ".join(format_partition(p) for p in cq.quotient)
    print(f"core={format_partition(cq.core)}")
    print(f"quotient={quotient}")
    print(f"g={cq.g}")
    print(f"r={cq.r}")
    return 0


def cmd_macdonald(args) -> int:
    cache = resolve_cache_dir(args)
    f = macdonald(args.partition, cache=FiberCache(cache) if cache else None)
    if args.format == "json":
        emit(json.dumps(f.to_json(), sort_keys=True, indent=2) + "\n", None)
    else:
        print(f)
    return 0


def cmd_verify_typeA(args) -> int:
    cfg = _config(args)
    runs = [
        verify_type_A(n, ell, cfg.cache_dir, cfg.jobs) for ell in cfg.ell_list for n in cfg.sizes()
    ]
    report = _sweep(runs)
    emit(render(report, cfg.format), cfg.output)
    return 1 if report["summary"]["failed"] else 0


def cmd_verify_typeD(args) -> int:
    cfg = _config(args, "l")
    runs = [verify_type_D(n, l, cfg.cache_dir, cfg.jobs) for l in cfg.l_list for n in cfg.sizes()]
    report = _sweep(runs)
    emit(render(report, cfg.format), cfg.output)
    return 1 if report["summary"]["failed"] else 0


def cmd_edge_cases(args) -> int:
    cfg = _config(args)
    runs = [
        verify_edge_cases(n, ell, cfg.cache_dir, cfg.jobs) for ell in cfg.ell_list for n in cfg.sizes()
    ]
    report = _sweep(runs)
    emit(render(report, cfg.format), cfg.output)
    return 1 if report["summary"]["failed"] else 0


def cmd_components(args) -> int:
    try:
        kind, p = parse_group(args.group)
    except ValueError as exc:
        print(f"procesi: {exc}", file=sys.stderr)
        return 2
    report = components_report(args.group, args.n)
    if kind == "binary_dihedral":
        report["census"] = dihedral_census(p, args.n)
    output = Path(args.output) if args.output else None
    if args.format == "json":
        emit(json.dumps(report, sort_keys=True, indent=2) + "\n", output)
    else:
        buf = io.StringIO()
        names = list(mckay_graph(args.group).vertices)
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(names + ["wt"])
        for c in report["components"]:
            w.writerow([c["d"][k] for k in names] + [c["wt"]])
        emit(buf.getvalue(), output)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_run_flags(p: argparse.ArgumentParser, *, type_d: bool = False) -> None:
    p.add_argument("--n", type=_nonneg, required=True, help="partition size")
    p.add_argument("--sweep", action="store_true", help="run every size from 0 to --n")
    if type_d:
        p.add_argument("--l", type=_int_list, default=[1, 2], help="comma separated l values")
    else:
        p.add_argument("--ell", type=_int_list, required=True, help="comma separated ell values")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (0 = all cores)")
    p.add_argument("--cache-dir", help=f"fiber cache directory (overrides ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true", help="recompute every fiber")
    p.add_argument("--output", help="report file (default stdout)")
    p.add_argument("--format", choices=("json", "tsv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="procesi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="core, quotient and weight of a partition")
    p.add_argument("partition", type=_partition_arg, help='e.g. "[2,2,1]"')
    p.add_argument("ell", type=int)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("macdonald", help="Schur expansion of a fiber")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("verify-type-a", help="mod ell decomposition for every partition of n")
    _add_run_flags(p)
    p.set_defaults(func=cmd_verify_typeA)

    p = sub.add_parser("verify-type-d", help="binary dihedral decomposition for symmetric partitions")
    _add_run_flags(p, type_d=True)
    p.set_defaults(func=cmd_verify_typeD)

    p = sub.add_parser("edge-cases", help="independent checks for small cores")
    _add_run_flags(p)
    p.set_defaults(func=cmd_edge_cases)

    p = sub.add_parser("components", help="root vectors of nonnegative weight")
    p.add_argument("--group", required=True, help="cyclic:ELL or binary_dihedral:L")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--output")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_components)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "core" and args.ell < 1:
        parser.error("ell must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
