"""Command-line interface: analyze, tableaux, generators, chain, count, sweep, instances."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable

from . import __version__
from .config import Config, load_config
from .core import BrillNoetherParams, RamificationSequence, ValidationError, build_diagram
from .instances import sweep_instances
from .permgroup import all_generators, moved_count, parity
from .report import EXIT_INTERNAL, EXIT_OK, analyze, dumps, error_kind, exit_code_for, render_text
from .schubert import chain_from_tableau
from .tableaux import count_oracle, enumerate_tableaux


def _sequence(text: str) -> RamificationSequence:
    try:
        return RamificationSequence.parse(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_params(p: argparse.ArgumentParser) -> None:
    grp = p.add_argument_group("instance")
    grp.add_argument("--g", type=int, required=True, help="genus")
    grp.add_argument("--r", type=int, required=True, help="rank")
    grp.add_argument("--d", type=int, required=True, help="degree")
    grp.add_argument("--alpha", type=_sequence, required=True, help="ramification at the first point, e.g. 1,0")
    grp.add_argument("--beta", type=_sequence, required=True, help="ramification at the second point, e.g. 2,0")


def _add_config(p: argparse.ArgumentParser) -> None:
    grp = p.add_argument_group("configuration (flags > BNM_* env > --config file > defaults)")
    grp.add_argument("--config", type=Path, default=None, help="JSON file with config keys")
    grp.add_argument("--enumeration-bound", type=int, default=None)
    grp.add_argument("--degree-bound", type=int, default=None, help="largest N for exact BSGS orders")
    grp.add_argument("--bochert-depth", type=int, default=None, help="longest generator product searched")
    grp.add_argument("--pair-orbit-bound", type=int, default=None, help="largest N for the pair-orbit check")
    grp.add_argument("--interpretation", choices=["corrected", "literal"], default=None)
    grp.add_argument("--jobs", type=int, default=None, help="sweep workers (default: available CPUs)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnm",
        description="Tableaux, Schubert chains and EH-group classification for rho = 0 instances.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one instance")
    _add_params(p)
    _add_config(p)
    p.add_argument("--json", action="store_true", help="machine report instead of text")

    p = sub.add_parser("tableaux", help="list standard tableaux in canonical order")
    _add_params(p)
    _add_config(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generators", help="list nontrivial pi_{t,a} in cycle notation")
    _add_params(p)
    _add_config(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("chain", help="Schubert chain of one tableau")
    _add_params(p)
    _add_config(p)
    p.add_argument("--index", type=int, required=True, help="canonical tableau index")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="oracle tableau count (no enumeration)")
    _add_params(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sweep", help="analyze every instance of an NDJSON parameter file")
    p.add_argument("file", type=Path, help="one JSON record {g, r, d, alpha, beta} per line")
    p.add_argument("--output", "-o", type=Path, default=None, help="NDJSON file to append to (default stdout)")
    _add_config(p)

    p = sub.add_parser("instances", help="write the scripted sweep parameter file")
    p.add_argument("--output", "-o", type=Path, default=None)
    p.add_argument("--full-g", type=int, default=6, help="include every instance up to this genus")
    p.add_argument("--max-g", type=int, default=12)
    p.add_argument("--sample", type=int, default=60, help="seeded sample size above --full-g")
    p.add_argument("--max-tableaux", type=int, default=1000)
    p.add_argument("--seed", type=int, default=20240)
    return parser


def _params(args) -> BrillNoetherParams:
    return BrillNoetherParams(args.g, args.r, args.d, args.alpha, args.beta)


def _config(args) -> Config:
    flags = {
        key: getattr(args, key, None)
        for key in ("enumeration_bound", "degree_bound", "bochert_depth", "pair_orbit_bound", "interpretation", "jobs")
    }
    return load_config(flags, config_file=getattr(args, "config", None))


def _emit(payload, as_json: bool, text: str) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True) if as_json else text)


def cmd_analyze(args) -> int:
    report = analyze(_params(args), _config(args))
    _emit(report, args.json, render_text(report))
    return EXIT_OK


def cmd_tableaux(args) -> int:
    tabs = enumerate_tableaux(build_diagram(_params(args)), _config(args).enumeration_bound)
    records = [{"index": i, **tab.to_record()} for i, tab in enumerate(tabs)]
    blocks = [f"[{i}]\n{tab.pretty()}" for i, tab in enumerate(tabs)]
    _emit(records, args.json, "\n".join(blocks))
    return EXIT_OK


def cmd_generators(args) -> int:
    tabs = enumerate_tableaux(build_diagram(_params(args)), _config(args).enumeration_bound)
    gens = all_generators(tabs)
    records = [
        {"t": g.t, "a": g.a, "moved": moved_count(g.perm), "parity": parity(g.perm), "cycles": str(g.perm)}
        for g in gens
    ]
    text = "\n".join(f"{g.label}  moved={r['moved']} {r['parity']}  {r['cycles']}" for g, r in zip(gens, records))
    _emit(records, args.json, text)
    return EXIT_OK


def cmd_chain(args) -> int:
    params = _params(args)
    tabs = enumerate_tableaux(build_diagram(params), _config(args).enumeration_bound)
    if not 0 <= args.index < len(tabs):
        raise ValidationError(f"index {args.index} outside 0..{len(tabs) - 1}")
    tab = tabs[args.index]
    chain = chain_from_tableau(tab, params)
    payload = {"index": args.index, "tableau": tab.to_record(), "chain": chain.to_record()}
    _emit(payload, args.json, f"{tab.pretty()}\n{chain.sigma_notation()}")
    return EXIT_OK


def cmd_count(args) -> int:
    n = count_oracle(build_diagram(_params(args)))
    _emit({"oracle": n}, args.json, str(n))
    return EXIT_OK


def _sweep_one(item: tuple[int, str, Config]) -> dict:
    line_no, raw, config = item
    try:
        try:
            record = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed JSON: {exc}") from None
        if not isinstance(record, dict):
            raise ValidationError("each line must be a JSON object")
        report = analyze(BrillNoetherParams.from_record(record), config)
        return {"line": line_no, "status": "ok", **report}
    except Exception as exc:  # recorded, the sweep goes on
        return {
            "line": line_no,
            "status": "error",
            "input": raw,
            "error": {"kind": error_kind(exc), "exit_code": exit_code_for(exc), "message": str(exc)},
        }


def run_sweep(lines: Iterable[str], out, config: Config) -> tuple[int, int]:
    """Analyze each non-blank line, writing one flushed NDJSON record per instance in input order."""
    items = [(i, raw.strip(), config) for i, raw in enumerate(lines, start=1) if raw.strip()]
    ok = failed = 0
    workers = min(config.workers, max(len(items), 1))
    if workers <= 1:
        results = map(_sweep_one, items)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_sweep_one, items)
    try:
        for rec in results:
            out.write(dumps(rec) + "\n")
            out.flush()
            if rec["status"] == "ok":
                ok += 1
            else:
                failed += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return ok, failed


def cmd_sweep(args) -> int:
    config = _config(args)
    try:
        lines = args.file.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ValidationError(f"cannot read {args.file}: {exc}") from None
    if args.output is None:
        ok, failed = run_sweep(lines, sys.stdout, config)
    else:
        with args.output.open("a", encoding="utf-8", newline="\n") as out:
            ok, failed = run_sweep(lines, out, config)
    print(f"sweep: {ok} ok, {failed} failed", file=sys.stderr)
    return EXIT_OK


def cmd_instances(args) -> int:
    params = sweep_instances(
        full_g=args.full_g, max_g=args.max_g, sample=args.sample, max_tableaux=args.max_tableaux, seed=args.seed
    )
    text = "".join(dumps(p.as_record()) + "\n" for p in params)
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text, encoding="utf-8")
        print(f"wrote {len(params)} instances to {args.output}", file=sys.stderr)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "tableaux": cmd_tableaux,
    "generators": cmd_generators,
    "chain": cmd_chain,
    "count": cmd_count,
    "sweep": cmd_sweep,
    "instances": cmd_instances,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except Exception as exc:
        code = exit_code_for(exc)
        label = error_kind(exc)
        print(f"bnm: {label} error: {exc}", file=sys.stderr)
        return code if code else EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
