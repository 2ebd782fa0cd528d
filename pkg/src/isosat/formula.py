"""Literals, clauses and formulas in DIMACS integer notation.

Literals are nonzero ints (negative = negated variable), clauses are tuples of
literals and a Formula bundles them with a variable count and an optional
metadata slot per clause.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .meta import ClauseMeta

Clause = tuple[int, ...]


class DimacsError(ValueError):
    pass


class TautologyError(ValueError):
    pass


class ResolutionError(ValueError):
    pass


def negate(lit: int) -> int:
    if lit == 0:
        raise ValueError("0 is not a literal")
    return -lit


def make_clause(lits: Iterable[int]) -> Clause:
    """Drop repeated literals (keeping first occurrence); reject tautologies."""
    seen = set()
    out = []
    for lit in lits:
        if lit == 0:
            raise ValueError("0 is not a literal")
        if -lit in seen:
            raise TautologyError(f"clause contains both {lit} and {-lit}")
        if lit not in seen:
            seen.add(lit)
            out.append(lit)
    return tuple(out)


def clause_key(clause: Iterable[int]) -> Clause:
    """Order-insensitive identity of a clause."""
    return tuple(sorted(clause))


@dataclass(frozen=True)
class Formula:
    num_vars: int
    clauses: tuple[Clause, ...]
    meta: tuple[Optional[ClauseMeta], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if not self.meta:
            object.__setattr__(self, "meta", (None,) * len(self.clauses))
        else:
            object.__setattr__(self, "meta", tuple(self.meta))
        if len(self.meta) != len(self.clauses):
            raise ValueError(
                f"{len(self.meta)} metadata rows for {len(self.clauses)} clauses")
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")

    def __len__(self):
        return len(self.clauses)

    def with_meta(self, meta: Sequence[Optional[ClauseMeta]]) -> "Formula":
        return Formula(self.num_vars, self.clauses, tuple(meta))

    def extended(self, clauses: Iterable[Iterable[int]],
                 meta: Optional[ClauseMeta] = None) -> "Formula":
        """Append clauses, all sharing the same metadata slot."""
        extra = [make_clause(c) for c in clauses]
        nv = max([self.num_vars] + [abs(lit) for c in extra for lit in c])
        return Formula(nv, self.clauses + tuple(extra),
                       self.meta + (meta,) * len(extra))

    def clause_set(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.clauses}


def parse_dimacs(text: str) -> Formula:
    num_vars = num_clauses = None
    clauses: list[Clause] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("c") or tokens[0] == "%":
            continue
        if tokens[0] == "p":
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars, num_clauses = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 0 or num_clauses < 0:
                raise DimacsError(f"line {lineno}: negative header counts")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause before header")
        for tok in tokens:
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {tok!r}") from None
            if lit == 0:
                try:
                    clauses.append(make_clause(current))
                except TautologyError as e:
                    raise DimacsError(f"line {lineno}: tautological clause: {e}") from None
                current = []
            elif abs(lit) > num_vars:
                raise DimacsError(f"line {lineno}: literal {lit} exceeds {num_vars} variables")
            else:
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise DimacsError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return Formula(num_vars, tuple(clauses))


def parse_clause_lines(text: str) -> list[Clause]:
    """Headerless DIMACS: zero-terminated clauses, 'c' comments allowed."""
    clauses = []
    current: list[int] = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0].startswith("c") or tokens[0] == "p":
            continue
        for tok in tokens:
            lit = int(tok)
            if lit == 0:
                clauses.append(make_clause(current))
                current = []
            else:
                current.append(lit)
    if current:
        raise DimacsError("last clause is not terminated by 0")
    return clauses


def write_dimacs(f: Formula, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    lines.extend(" ".join(map(str, c + (0,))) for c in f.clauses)
    return "\n".join(lines) + "\n"


def resolve(c1: Sequence[int], c2: Sequence[int], pivot: int) -> Clause:
    pivot = abs(pivot)
    if pivot in c1 and -pivot in c2:
        pos, neg = c1, c2
    elif -pivot in c1 and pivot in c2:
        pos, neg = c2, c1
    else:
        raise ResolutionError(f"variable {pivot} is not a clashing pivot")
    lits = [lit for lit in pos if lit != pivot] + [lit for lit in neg if lit != -pivot]
    try:
        return make_clause(lits)
    except TautologyError as e:
        raise ResolutionError(f"tautological resolvent: {e}") from None


class EvalResult(str, enum.Enum):
    SATISFIED = "satisfied"
    FALSIFIED = "falsified"
    UNDETERMINED = "undetermined"


def eval_clause(clause: Iterable[int], assignment: Mapping[int, bool]) -> EvalResult:
    undetermined = False
    for lit in clause:
        val = assignment.get(abs(lit))
        if val is None:
            undetermined = True
        elif val == (lit > 0):
            return EvalResult.SATISFIED
    return EvalResult.UNDETERMINED if undetermined else EvalResult.FALSIFIED


def evaluate(f: Formula, assignment: Mapping[int, bool]) -> EvalResult:
    """Three-valued evaluation; unassigned variables are simply absent."""
    result = EvalResult.SATISFIED
    for c in f.clauses:
        r = eval_clause(c, assignment)
        if r is EvalResult.FALSIFIED:
            return r
        if r is EvalResult.UNDETERMINED:
            result = r
    return result
