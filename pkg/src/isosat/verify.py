"""Independent checks: models, clause implication, exhaustive SAT, gliding bounds."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .eclauses import glide_clause
from .formula import EvalResult, Formula, evaluate
from .solver import SAT, UNSAT, SolverConfig, solve

IMPLIED, NOT_IMPLIED, UNKNOWN = "implied", "not_implied", "unknown"

DEFAULT_IMPLICATION_BUDGET = 10**6
BRUTE_FORCE_MAX_VARS = 24

ModelLike = Union[Mapping[int, bool], Iterable[int]]


def as_assignment(model: ModelLike) -> dict[int, bool]:
    if isinstance(model, Mapping):
        return dict(model)
    return {abs(l): l > 0 for l in model}


def check_model(f: Formula, model: ModelLike) -> bool:
    assignment = as_assignment(model)
    missing = [v for v in range(1, f.num_vars + 1) if v not in assignment]
    if missing:
        raise ValueError(f"partial assignment: {len(missing)} variables unassigned")
    return evaluate(f, assignment) is EvalResult.SATISFIED


def check_implied(f: Formula, clause: Sequence[int],
                  budget: int = DEFAULT_IMPLICATION_BUDGET) -> str:
    """Whether every model of ``f`` satisfies ``clause``: ``f`` plus the
    negation of each literal must be unsatisfiable.  Runs a plugin-free solver."""
    negated = Formula(max([f.num_vars] + [abs(l) for l in clause]), f.clauses)
    try:
        negated = negated.extended([(-l,) for l in set(clause)])
    except ValueError:
        # clause is tautological: trivially implied
        return IMPLIED
    report = solve(negated, SolverConfig(), conflict_limit=budget)
    if report.outcome == UNSAT:
        return IMPLIED
    if report.outcome == SAT:
        return NOT_IMPLIED
    return UNKNOWN


@dataclass
class BruteForceResult:
    satisfiable: bool
    model: Optional[list[int]] = None


def brute_force_sat(f: Formula, chunk_bits: int = 16) -> BruteForceResult:
    """Truth-table search over all 2^n assignments (n <= 24)."""
    n = f.num_vars
    if n > BRUTE_FORCE_MAX_VARS:
        raise ValueError(f"{n} variables is too many for exhaustive search")
    if any(len(c) == 0 for c in f.clauses):
        return BruteForceResult(False)
    total = 1 << n
    step = min(total, 1 << chunk_bits)
    for lo in range(0, total, step):
        xs = np.arange(lo, min(lo + step, total), dtype=np.int64)
        bits = [None] + [((xs >> (v - 1)) & 1).astype(bool) for v in range(1, n + 1)]
        ok = np.ones(len(xs), dtype=bool)
        for c in f.clauses:
            sat = np.zeros(len(xs), dtype=bool)
            for lit in c:
                sat |= bits[lit] if lit > 0 else ~bits[-lit]
            ok &= sat
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            x = int(xs[hits[0]])
            return BruteForceResult(True, [v if (x >> (v - 1)) & 1 else -v for v in range(1, n + 1)])
    return BruteForceResult(False)


def brute_force_implied(f: Formula, clause: Sequence[int]) -> bool:
    negated = f.extended([(-l,) for l in set(clause)])
    return not brute_force_sat(negated).satisfiable


@dataclass(frozen=True)
class GlideViolation:
    index: int
    clause: tuple
    shift: int
    problem: str


def glide_membership_oracle(f: Formula) -> list[GlideViolation]:
    """Check each clause's gliding bounds are exactly maximal by set lookup."""
    if not any(m is not None and m.glide is not None for m in f.meta):
        raise ValueError("formula carries no gliding metadata")
    members = f.clause_set()

    def shifted_in(clause, s):
        try:
            return frozenset(glide_clause(clause, s)) in members
        except ValueError:
            return False

    out = []
    for idx, (clause, m) in enumerate(zip(f.clauses, f.meta)):
        if m is None or m.glide is None:
            continue
        z, nb = m.glide
        for s in range(1, z + 1):
            if not shifted_in(clause, -s):
                out.append(GlideViolation(idx, clause, -s, "shift within bound leaves the formula"))
        for s in range(1, nb + 1):
            if not shifted_in(clause, s):
                out.append(GlideViolation(idx, clause, s, "shift within bound leaves the formula"))
        if shifted_in(clause, -(z + 1)):
            out.append(GlideViolation(idx, clause, -(z + 1), "bound toward zero is not maximal"))
        if shifted_in(clause, nb + 1):
            out.append(GlideViolation(idx, clause, nb + 1, "bound away from zero is not maximal"))
    return out
