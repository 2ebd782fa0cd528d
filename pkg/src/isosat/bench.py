"""Benchmark runs over (instance x configuration) and par-2 aggregation."""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

DEFAULT_TIMEOUT = 1800.0


class ManifestError(ValueError):
    pass


@dataclass
class BenchRow:
    config: str
    instances: int
    timed_out: int
    mean_time: float
    mean_par2: float
    mean_conflicts: float
    mean_eclauses: float
    mean_overhead: float
    active_e: Optional[float]
    active_c: Optional[float]


def load_manifest(path: str) -> dict:
    """Manifest layout (JSON)::

        {"timeout": 60,
         "configs": [{"name": "native", "flags": []},
                     {"name": "waerden", "flags": ["--waerden"]}],
         "instances": [{"name": "vdw_3_3_9", "cnf": "vdw_3_3_9.cnf",
                        "sidecar": "vdw_3_3_9.meta", "generators": "vdw_3_3_9.sym"}]}

    Relative paths are resolved against the manifest's directory.
    """
    with open(path) as fh:
        m = json.load(fh)
    base = os.path.dirname(os.path.abspath(path))
    configs = m.get("configs", [])
    names = [c["name"] for c in configs]
    dups = sorted({n for n in names if names.count(n) > 1})
    if dups:
        raise ManifestError(f"duplicate config names: {', '.join(dups)}")
    instances = []
    for inst in m.get("instances", []):
        inst = dict(inst)
        for key in ("cnf", "sidecar", "generators", "nonsym"):
            if inst.get(key):
                inst[key] = os.path.join(base, inst[key])
                if not os.path.exists(inst[key]):
                    raise ManifestError(f"missing file {inst[key]}")
        if "cnf" not in inst:
            raise ManifestError(f"instance without cnf: {inst}")
        inst.setdefault("name", os.path.basename(inst["cnf"]))
        instances.append(inst)
    return {"timeout": float(m.get("timeout", DEFAULT_TIMEOUT)),
            "configs": configs, "instances": instances}


def _run_one(task):
    from .cli import run_solve_from_flags
    inst, conf, timeout = task
    report = run_solve_from_flags(inst, conf["flags"], timeout)
    return {
        "instance": inst["name"], "config": conf["name"],
        "outcome": report.outcome, "time": report.total_time,
        "conflicts": report.conflicts, "eclauses": report.eclauses_added,
        "overhead": report.eclause_overhead_time,
        "e_total": report.eclauses_added + report.e_derived,
        "e_live": report.eclauses_live + report.e_derived_live,
        "c_total": report.conflict_clauses, "c_live": report.conflict_clauses_live,
    }


def run_bench(manifest: dict, jobs: int = 1) -> list[dict]:
    tasks = [(inst, conf, manifest["timeout"])
             for conf in manifest["configs"] for inst in manifest["instances"]]
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))


def aggregate(records: Sequence[dict], timeout: float) -> list[BenchRow]:
    """One row per configuration, sorted by mean par-2 time.  Timed-out runs
    contribute their counters at the cutoff and twice the timeout to par-2."""
    by_config: dict[str, list[dict]] = {}
    for r in records:
        by_config.setdefault(r["config"], []).append(r)
    rows = []
    for name, rs in by_config.items():
        k = len(rs)
        timed_out = sum(r["outcome"] == "TIMEOUT" for r in rs)
        par2 = [2 * timeout if r["outcome"] == "TIMEOUT" else r["time"] for r in rs]
        e_total = sum(r["e_total"] for r in rs)
        c_total = sum(r["c_total"] for r in rs)
        rows.append(BenchRow(
            config=name, instances=k, timed_out=timed_out,
            mean_time=sum(r["time"] for r in rs) / k,
            mean_par2=sum(par2) / k,
            mean_conflicts=sum(r["conflicts"] for r in rs) / k,
            mean_eclauses=sum(r["eclauses"] for r in rs) / k,
            mean_overhead=sum(r["overhead"] for r in rs) / k,
            active_e=sum(r["e_live"] for r in rs) / e_total if e_total else None,
            active_c=sum(r["c_live"] for r in rs) / c_total if c_total else None,
        ))
    rows.sort(key=lambda row: (row.mean_par2, row.config))
    return rows


def format_table(rows: Sequence[BenchRow]) -> str:
    head = ("config", "timed-out", "time", "par-2", "conflicts",
            "eclauses", "overhead", "active-E", "active-C")
    lines = [head]

    def ratio(x):
        return "" if x is None else f"{x:.3f}"

    for r in rows:
        lines.append((r.config, str(r.timed_out), f"{r.mean_time:.2f}", f"{r.mean_par2:.2f}",
                      f"{r.mean_conflicts:.1f}", f"{r.mean_eclauses:.1f}",
                      f"{r.mean_overhead:.3f}", ratio(r.active_e), ratio(r.active_c)))
    widths = [max(len(l[i]) for l in lines) for i in range(len(head))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(l, widths)).rstrip()
                     for l in lines) + "\n"


def rows_to_json(rows: Sequence[BenchRow]) -> list[dict]:
    return [asdict(r) for r in rows]
