"""Run the deciders on an instance and assemble a JSON-ready report."""

from __future__ import annotations

import time
from typing import Dict, Iterable, Optional

from . import errors
from .derivative import INCONCLUSIVE, NO, YES, decide_approximable
from .geometry import fmt_rational
from .obstruction import (
    ObstructionReport,
    component_sums,
    decide_by_obstruction,
    obstruction_report,
    pair_obstruction_report,
)
from .oracle import DEFAULT_BUDGET, oracle_approximable, oracle_disjoinable
from .planegraph import Instance
from .pushoff import geometric_parities

SCHEMA = "planewalk-report/1"
METHODS = ("derivative", "obstruction", "geom", "oracle")

EXIT_CODES = {YES: 0, NO: 1, INCONCLUSIVE: 2}
EXIT_ERROR = 3
EXIT_THEOREM_VIOLATION = 4


def resolve_methods(requested: Optional[Iterable[str]], inst_has_coords: bool) -> list:
    requested = list(requested or [])
    if not requested:
        out = ["derivative", "obstruction"]
        if inst_has_coords:
            out.append("geom")
        return out
    if "all" in requested:
        return [m for m in METHODS if m != "geom" or inst_has_coords]
    return [m for m in METHODS if m in requested]


def instance_summary(inst: Instance) -> dict:
    out = {
        "closed": inst.walk.closed,
        "walk": list(inst.walk.vertices),
        "steps": inst.walk.n_steps,
        "graph": {"vertices": len(inst.graph.vertices), "edges": len(inst.graph.edges)},
    }
    if inst.graph.coords is not None:
        out["coordinates"] = {v: [fmt_rational(x), fmt_rational(y)] for v, (x, y) in sorted(inst.graph.coords.items())}
    return out


def obstruction_table(rep: ObstructionReport) -> dict:
    painted = rep.painted
    return {
        "cells": [
            {"cell": list(c), "black": c in painted.black_cells, "parity": rep.parities.get(c, 0)}
            for c in painted.complex.cells
        ],
        "components": [
            {"cells": [list(c) for c in comp.cells], "contributes": comp.contributes, "parity": comp.parity}
            for comp in rep.components
        ],
        "vector": list(rep.vector.coordinates),
    }


def _witness_json(w) -> dict:
    return {"positions": list(w.positions), "vertex": w.vertex, "edges": [list(e) for e in w.edges]}


def _derivative_json(dec) -> dict:
    out = {"verdict": dec.approximable, "reason": dec.reason, "level": dec.level}
    if dec.degree is not None:
        out["degree"] = dec.degree
    if dec.witness is not None:
        out["witness"] = _witness_json(dec.witness)
    tower = []
    for lvl, (inst, note) in enumerate(zip(dec.trace.levels, dec.trace.notes)):
        origin = dec.trace.origins[lvl]
        entry = {"level": lvl, "walk": list(inst.walk.vertices), "note": note}
        if origin:
            entry["origin"] = {k: list(v) for k, v in sorted(origin.items())}
        tower.append(entry)
    out["tower"] = tower
    return out


def analyze(inst: Instance, methods=None, oracle_budget: int = DEFAULT_BUDGET, timings: bool = True) -> dict:
    methods = resolve_methods(methods, inst.graph.coords is not None)
    res: Dict[str, dict] = {}
    times: Dict[str, float] = {}
    witnesses: Dict[str, dict] = {}
    notes = []
    violations = []
    dec = obs = None
    vk: Optional[ObstructionReport] = None

    def timed(name, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        finally:
            times[name] = round(time.perf_counter() - t0, 6)

    if "derivative" in methods:
        dec = timed("derivative", lambda: decide_approximable(inst))
        res["derivative"] = _derivative_json(dec)
        if dec.witness is not None:
            witnesses["transversal"] = dict(_witness_json(dec.witness), level=dec.level)
    if "obstruction" in methods or "geom" in methods:
        vk = timed("obstruction", lambda: obstruction_report(inst))
        obs = decide_by_obstruction(inst)
    if "obstruction" in methods:
        res["obstruction"] = {"verdict": obs.approximable, "vector": list(vk.vector.coordinates), "zero": vk.vector.is_zero}
    if "geom" in methods:
        gp = timed("geom", lambda: geometric_parities(inst))
        sums_geo = component_sums(vk.components, gp)
        sums_comb = component_sums(vk.components, vk.parities)
        agree = sums_geo == sums_comb
        res["geom"] = {"component_sums": sums_geo, "agrees": agree}
        if not agree:
            violations.append("geometric and combinatorial push-offs give different component sums")
    if "oracle" in methods:
        try:
            orc = timed("oracle", lambda: oracle_approximable(inst, oracle_budget))
            entry = {"verdict": orc.verdict, "explored": orc.explored}
            if orc.orders is not None:
                entry["corridor_orders"] = {f"{a}-{b}": list(o) for (a, b), o in sorted(orc.orders.items())}
                witnesses["corridor_orders"] = entry["corridor_orders"]
            res["oracle"] = entry
        except errors.BudgetExceeded as exc:
            res["oracle"] = {"verdict": "budget-exceeded", "bound": exc.bound}

    if dec is not None:
        verdict = dec.approximable
    elif "oracle" in res and res["oracle"]["verdict"] in (YES, NO):
        verdict = res["oracle"]["verdict"]
    elif obs is not None and "obstruction" in res:
        verdict = obs.approximable
    else:
        verdict = INCONCLUSIVE

    if dec is not None and "obstruction" in res:
        if not inst.walk.closed and dec.approximable != obs.approximable:
            violations.append("derivative and obstruction verdicts differ on an open walk")
        if obs.approximable == NO and dec.approximable != NO:
            violations.append("nonzero obstruction but the derivative criterion says approximable")
        if inst.walk.closed and obs.approximable == INCONCLUSIVE and dec.approximable == NO:
            notes.append("completeness gap: the obstruction vanishes but the closed walk is not approximable")
    if dec is not None and res.get("oracle", {}).get("verdict") in (YES, NO):
        if res["oracle"]["verdict"] != dec.approximable:
            violations.append("oracle and derivative verdicts differ")

    report = {
        "schema": SCHEMA,
        "instance": instance_summary(inst),
        "methods": res,
        "verdict": verdict,
        "witnesses": witnesses,
        "notes": notes,
        "consistency": {"ok": not violations, "violations": violations},
    }
    if vk is not None:
        report["obstruction"] = obstruction_table(vk)
    if timings:
        report["timings"] = times
    return report


def analyze_pair(k: Instance, l: Instance, methods=None, oracle_budget: int = DEFAULT_BUDGET, timings: bool = True) -> dict:
    requested = set(methods or ["obstruction"])
    if "all" in requested:
        requested = {"obstruction", "oracle"}
    requested.add("obstruction")
    times = {}
    t0 = time.perf_counter()
    rep = pair_obstruction_report(k, l)
    times["obstruction"] = round(time.perf_counter() - t0, 6)
    res = {"obstruction": {"vector": list(rep.vector.coordinates), "zero": rep.vector.is_zero}}
    verdict = NO if not rep.vector.is_zero else INCONCLUSIVE
    res["obstruction"]["verdict"] = verdict
    violations = []
    if "oracle" in requested:
        t0 = time.perf_counter()
        try:
            orc = oracle_disjoinable(k, l, oracle_budget)
            res["oracle"] = {"verdict": orc.verdict, "explored": orc.explored}
            if orc.verdict == YES and not rep.vector.is_zero:
                violations.append("oracle finds a disjoint approximation despite a nonzero obstruction")
            verdict = orc.verdict
        except errors.BudgetExceeded as exc:
            res["oracle"] = {"verdict": "budget-exceeded", "bound": exc.bound}
        times["oracle"] = round(time.perf_counter() - t0, 6)
    report = {
        "schema": SCHEMA,
        "pair": {"K": instance_summary(k), "L": instance_summary(l)},
        "methods": res,
        "verdict": verdict,
        "obstruction": obstruction_table(rep),
        "consistency": {"ok": not violations, "violations": violations},
    }
    if timings:
        report["timings"] = times
    return report


def exit_code(report: dict) -> int:
    if not report["consistency"]["ok"]:
        return EXIT_THEOREM_VIOLATION
    return EXIT_CODES.get(report["verdict"], EXIT_ERROR)
