"""The per-instance analysis pipeline and its report (machine and human forms)."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager

from .config import Config
from .core import (
    BrillNoetherParams,
    DomainError,
    ValidationError,
    build_diagram,
    compute_rho,
    diagram_stats,
)
from .criteria import (
    INTERPRETATIONS,
    BoundViolation,
    check_alter_hypotheses,
    check_dt_conditions,
    check_catalan_parity,
    movefew_element,
    movefew_indices,
)
from .permgroup import DegreeBoundExceeded, all_generators, classify_group, parity
from .tableaux import TooLargeToEnumerate, count_oracle, enumerate_tableaux

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_VALIDATION = 2
EXIT_SCALE = 3


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (ValidationError, DomainError)):
        return EXIT_VALIDATION
    if isinstance(exc, (TooLargeToEnumerate, DegreeBoundExceeded)):
        return EXIT_SCALE
    return EXIT_INTERNAL


def error_kind(exc: BaseException) -> str:
    return {EXIT_VALIDATION: "validation", EXIT_SCALE: "scale_limit"}.get(exit_code_for(exc), "internal")


class _Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - t0) * 1000, 3)


def analyze(params: BrillNoetherParams, config: Config | None = None) -> dict:
    """Run the full pipeline on one instance and return the report record.

    Raises ``DomainError`` when rho != 0 and ``TooLargeToEnumerate`` when the
    tableau count exceeds the enumeration bound.
    """
    config = config or Config()
    timer = _Timer()
    rho = compute_rho(params)
    if rho != 0:
        raise DomainError(f"rho = {rho} != 0; every analysis assumes rho = 0")

    with timer.phase("diagram"):
        diag = build_diagram(params)
        if diag.size:
            st = diagram_stats(diag, params)
            stats = {"s": st.s, "t": st.t, "L": st.L, "d_max": st.d_max}
        else:
            stats = {"s": None, "t": None, "L": None, "d_max": None}
    with timer.phase("count"):
        oracle = count_oracle(diag)
    with timer.phase("enumerate"):
        tabs = enumerate_tableaux(diag, config.enumeration_bound)
    with timer.phase("generators"):
        gens = all_generators(tabs)
    with timer.phase("classify"):
        cls = classify_group(
            gens.generators,
            len(tabs),
            degree_bound=config.degree_bound,
            bochert_depth=config.bochert_depth,
            pair_orbit_bound=config.pair_orbit_bound,
        )
    with timer.phase("criteria"):
        criteria = _criteria(params, tabs, config)

    return {
        "params": params.as_record(),
        "rho": rho,
        "diagram": {"rows": [list(iv) for iv in diag.row_intervals], **stats},
        "counts": {"oracle": oracle, "enumerated": len(tabs)},
        "generators_summary": {
            "count": len(gens),
            "odd_count": sum(parity(gen.perm) == "odd" for gen in gens),
        },
        "classification": cls.to_record(),
        "criteria": criteria,
        "timing_ms": timer.ms,
    }


def _criteria(params: BrillNoetherParams, tabs, config: Config) -> dict:
    chosen = check_dt_conditions(params, config.interpretation)
    dt = chosen.to_record()
    # both readings of condition 3 are reported so disagreements are visible
    dt["other_interpretations"] = {
        name: check_dt_conditions(params, name).passed
        for name in INTERPRETATIONS
        if name != config.interpretation
    }
    alter = check_alter_hypotheses(params, config.interpretation)
    movefew = None
    if alter:
        try:
            movefew = movefew_element(params, tabs, config.interpretation).to_record()
        except BoundViolation as exc:
            t, a = movefew_indices(params)
            movefew = {"t": t, "a": a, "moved": None, "bound": len(tabs) // 4, "discrepancy": str(exc)}
    return {
        "dt_conditions": dt,
        "alter_hypotheses": alter,
        "catalan_parity": check_catalan_parity(params).to_record(),
        "movefew": movefew,
    }


def dumps(report: dict) -> str:
    """Canonical single-line JSON (sorted keys) used for files and NDJSON."""
    return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def render_text(report: dict) -> str:
    p = report["params"]
    dg = report["diagram"]
    cls = report["classification"]
    cert = cls["certificates"]
    crit = report["criteria"]
    lines = [
        f"instance     g={p['g']} r={p['r']} d={p['d']} alpha={tuple(p['alpha'])} beta={tuple(p['beta'])}",
        f"rho          {report['rho']}",
        f"diagram      rows {dg['rows']}  s={dg['s']} t={dg['t']} L={dg['L']} D_max={dg['d_max']}",
        f"tableaux     N = {report['counts']['enumerated']} (oracle {report['counts']['oracle']})",
        f"generators   {report['generators_summary']['count']} nontrivial, "
        f"{report['generators_summary']['odd_count']} odd",
        f"verdict      {cls['verdict']}",
        f"  transitive {cert['transitive']}  doubly transitive {cert['doubly_transitive']}",
    ]
    w = cert["bochert_witness"]
    if w is not None:
        word = " * ".join(f"pi_{{{t},{a}}}" for t, a in w["word"])
        lines.append(f"  bochert    {word} moves {w['moved']} < {w['threshold']}")
    if cert["order"] is not None:
        order = cert["order"]
        shown = order if len(order) <= 40 else f"{order[:12]}...({len(order)} digits)"
        lines.append(f"  order      {shown}")
    for note in cert["notes"]:
        lines.append(f"  note       {note}")
    dt = crit["dt_conditions"]
    lines.append(f"dt conds     {dt['passed']} ({dt['interpretation']}{', vacuous' if dt['vacuous'] else ''})")
    for c in dt["conditions"]:
        rhs = "-" if c["rhs"] is None else c["rhs"]
        lines.append(f"  ({c['id']}) {c['lhs']} {c['relation']} {rhs}: {'ok' if c['passed'] else 'fails'}")
    lines.append(f"alternating hypotheses  {crit['alter_hypotheses']}")
    mf = crit["movefew"]
    if mf is not None:
        if "discrepancy" in mf:
            lines.append(f"few-mover    pi_{{{mf['t']},{mf['a']}}} DISCREPANCY: {mf['discrepancy']}")
        else:
            lines.append(
                f"few-mover    pi_{{{mf['t']},{mf['a']}}} moves {mf['moved']} <= {mf['bound']} ({mf['parity']})"
            )
    pr = crit["catalan_parity"]
    lines.append(
        f"catalan test applies={pr['applies']} L'={pr['L_prime']} predicted odd pairs={pr['predicted_odd_pairs']}"
    )
    lines.append("timing_ms    " + " ".join(f"{k}={v}" for k, v in report["timing_ms"].items()))
    return "\n".join(lines)
