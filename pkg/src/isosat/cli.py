"""Command-line interface: gen, solve, bench, verify."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import bench as benchmod
from .eclauses import parse_generators
from .formula import Formula, parse_clause_lines, parse_dimacs, write_dimacs
from .generators import (gen_pythagorean, gen_vdw, pythagorean_generators,
                         vdw_generators, write_generators)
from .meta import NONSYMMETRIC, parse_sidecar, write_sidecar
from .solver import SAT, UNSAT, SolveReport, SolverConfig, solve
from .verify import IMPLIED, check_implied, check_model

EXIT_SAT, EXIT_UNSAT, EXIT_UNKNOWN = 10, 20, 0


class UsageError(Exception):
    pass


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def load_problem(cnf: str, sidecar: Optional[str] = None,
                 nonsym: Optional[str] = None) -> Formula:
    f = parse_dimacs(_read(cnf))
    if sidecar:
        metas = parse_sidecar(_read(sidecar))
        if len(metas) != len(f.clauses):
            raise UsageError(f"sidecar has {len(metas)} rows for {len(f.clauses)} clauses")
        f = f.with_meta(metas)
    if nonsym:
        f = f.extended(parse_clause_lines(_read(nonsym)), NONSYMMETRIC)
    return f


def read_model(text: str) -> list[int]:
    """One literal per line, or DIMACS 'v' lines terminated by 0."""
    lits = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "s"):
            continue
        if tokens[0] == "v":
            tokens = tokens[1:]
        lits.extend(int(t) for t in tokens if t != "0")
    return lits


# -- gen ---------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family == "waerden":
        f = gen_vdw(args.j, args.k, args.n)
        gens = vdw_generators(args.j, args.k, args.n)
        stem = f"vdw_{args.j}_{args.k}_{args.n}"
    else:
        f = gen_pythagorean(args.n)
        gens = pythagorean_generators(args.n)
        stem = f"pyth_{args.n}"
    out = args.output or stem + ".cnf"
    sidecar = args.sidecar or os.path.splitext(out)[0] + ".meta"
    _write(out, write_dimacs(f))
    _write(sidecar, write_sidecar(f.meta))
    if args.generators:
        _write(args.generators, write_generators(gens))
    print(f"wrote {out} ({f.num_vars} vars, {len(f.clauses)} clauses) and {sidecar}")
    return 0


# -- solve -------------------------------------------------------------------

def add_solve_flags(p: argparse.ArgumentParser):
    p.add_argument("--sidecar", help="per-clause metadata file")
    p.add_argument("--waerden", action="store_true", help="gliding E-clauses")
    p.add_argument("--pythagorean", action="store_true", help="scaling E-clauses")
    p.add_argument("--dyn-sym-exploit", action="store_true",
                   help="images of learned clauses under --generators")
    p.add_argument("--generators", help="cycle-form symmetry generators")
    p.add_argument("--nonsym", help="headerless DIMACS clauses marked non-symmetric")
    p.add_argument("--filter-x", type=int, default=3)
    p.add_argument("--max-size", type=int, default=20)
    p.add_argument("--lbd-cap", type=int)
    p.add_argument("--max-eclauses", type=int)
    p.add_argument("--examine-cap", type=int)
    p.add_argument("--eclause-activity", type=float, default=0.8)
    p.add_argument("--deletion-ratio", type=float, default=0.8)
    p.add_argument("--restart-base", type=int, default=100)
    p.add_argument("--no-filtering", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timeout", type=float, default=benchmod.DEFAULT_TIMEOUT)
    p.add_argument("--conflict-limit", type=int)


def config_from_args(args) -> SolverConfig:
    if args.waerden and args.pythagorean:
        raise UsageError("--waerden and --pythagorean are mutually exclusive")
    plugins = []
    if args.waerden:
        plugins.append("gliding")
    if args.pythagorean:
        plugins.append("pythagorean")
    if args.dyn_sym_exploit:
        if not args.generators:
            raise UsageError("--dyn-sym-exploit needs --generators")
        plugins.append("dyn-sym")
    if (args.waerden or args.pythagorean) and not args.sidecar:
        raise UsageError("metadata plugins need --sidecar")
    return SolverConfig(
        restart_base=args.restart_base, deletion_ratio=args.deletion_ratio,
        eclause_initial_activity=args.eclause_activity, filter_x=args.filter_x,
        lbd_cap=args.lbd_cap, size_cap=args.max_size, total_cap=args.max_eclauses,
        examine_cap=args.examine_cap, filtering=not args.no_filtering,
        plugins=tuple(plugins), generators_file=args.generators,
        nonsym_file=args.nonsym, seed=args.seed)


def run_solve(cnf: str, args) -> SolveReport:
    cfg = config_from_args(args)
    f = load_problem(cnf, args.sidecar, args.nonsym)
    gens = parse_generators(_read(args.generators)) if args.generators else None
    return solve(f, cfg, gens, time_limit=args.timeout, conflict_limit=args.conflict_limit)


def run_solve_from_flags(instance: dict, flags: Sequence[str], timeout: float) -> SolveReport:
    """Bench entry point: instance files plus a configuration's flag list."""
    p = argparse.ArgumentParser(prog="bench-config")
    add_solve_flags(p)
    argv = list(flags)
    for key in ("sidecar", "generators", "nonsym"):
        if instance.get(key) and f"--{key}" not in argv:
            argv += [f"--{key}", instance[key]]
    args = p.parse_args(argv)
    args.timeout = timeout
    return run_solve(instance["cnf"], args)


def format_report(r: SolveReport) -> str:
    d = r.to_dict()
    lines = []
    for key, val in d.items():
        if key in ("model", "restart_points", "reduce_points"):
            continue
        if isinstance(val, float):
            val = f"{val:.6f}"
        lines.append(f"{key}={val}")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    report = run_solve(args.cnf, args)
    sys.stdout.write(format_report(report))
    if report.model is not None:
        sys.stdout.write("v " + " ".join(map(str, report.model)) + " 0\n")
        if args.model_out:
            _write(args.model_out, "v " + " ".join(map(str, report.model)) + " 0\n")
    if args.report_json:
        _write(args.report_json, json.dumps(report.to_dict(), indent=1) + "\n")
    return {SAT: EXIT_SAT, UNSAT: EXIT_UNSAT}.get(report.outcome, EXIT_UNKNOWN)


# -- bench -------------------------------------------------------------------

def cmd_bench(args) -> int:
    if args.from_records:
        saved = json.loads(_read(args.from_records))
        records, timeout = saved["records"], saved["timeout"]
    else:
        manifest = benchmod.load_manifest(args.manifest)
        if args.timeout is not None:
            manifest["timeout"] = args.timeout
        timeout = manifest["timeout"]
        records = benchmod.run_bench(manifest, args.jobs)
    rows = benchmod.aggregate(records, timeout)
    sys.stdout.write(benchmod.format_table(rows))
    if args.records:
        _write(args.records, json.dumps({"timeout": timeout, "records": records}, indent=1) + "\n")
    if args.table_json:
        _write(args.table_json, json.dumps(benchmod.rows_to_json(rows), indent=1) + "\n")
    return 0


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    f = load_problem(args.cnf, None, None)
    failures = 0
    if args.model:
        ok = check_model(f, read_model(_read(args.model)))
        print(f"model {'PASS' if ok else 'FAIL'}")
        failures += not ok
    if args.eclauses:
        for clause in parse_clause_lines(_read(args.eclauses)):
            verdict = check_implied(f, clause, args.budget)
            ok = verdict == IMPLIED
            print(f"{'PASS' if ok else 'FAIL'} {' '.join(map(str, clause))} 0 ({verdict})")
            failures += not ok
    if not args.model and not args.eclauses:
        raise UsageError("verify needs --model and/or --eclauses")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isosat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a benchmark CNF with metadata sidecar")
    g.add_argument("family", choices=("waerden", "pythagorean"))
    g.add_argument("-j", type=int, default=3)
    g.add_argument("-k", type=int, default=3)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-o", "--output")
    g.add_argument("--sidecar")
    g.add_argument("--generators", help="also write the known symmetry generators here")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="solve a CNF")
    s.add_argument("cnf")
    add_solve_flags(s)
    s.add_argument("--report-json")
    s.add_argument("--model-out")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="run a manifest and print the summary table")
    b.add_argument("manifest", nargs="?")
    b.add_argument("--timeout", type=float)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--records", help="write per-run records (JSON)")
    b.add_argument("--table-json")
    b.add_argument("--from-records", help="re-aggregate saved records instead of running")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="check a model or E-clauses against a CNF")
    v.add_argument("cnf")
    v.add_argument("--model")
    v.add_argument("--eclauses")
    v.add_argument("--budget", type=int, default=10**6)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and not (args.manifest or args.from_records):
        parser.error("bench needs a manifest or --from-records")
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
