"""Sources of E-clauses: clauses implied by the formula because a resolution
derivation can be replayed on an isomorphic set of input clauses.

Each source knows how to fold the metadata of the clauses consulted while a
clause is learned (``combine``) and how to turn a learned clause plus its
metadata into E-clause candidates (``emit``).  The solver owns the symmetric
bit and the E-status flag; sources only deal with their own fields.

Hooks exist for conflict analysis, clause minimization and level-0
propagation.  There is no variable elimination in this solver, so there is no
hook for it; a source added for an inprocessing solver would need one.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Optional, Sequence

from .formula import Clause, TautologyError, make_clause
from .meta import ClauseMeta

# the clause is None for a candidate that degenerated (tautological image)
Candidate = tuple[Optional[Clause], ClauseMeta]


class MetadataError(RuntimeError):
    """A clause's metadata contradicts its literals."""


# -- gliding -----------------------------------------------------------------

def combine_glide(metas: Iterable[ClauseMeta]) -> Optional[tuple[int, int]]:
    z = nb = None
    for m in metas:
        if m.glide is None:
            return None
        mz, mn = m.glide
        z = mz if z is None else min(z, mz)
        nb = mn if nb is None else min(nb, mn)
    if z is None:
        return None
    return z, nb


def glide_clause(clause: Sequence[int], shift: int) -> Clause:
    """Move every variable index by ``shift``, keeping polarities."""
    out = []
    for lit in clause:
        mag = abs(lit) + shift
        if mag < 1:
            raise ValueError(f"gliding {lit} by {shift} leaves the variable range")
        out.append(mag if lit > 0 else -mag)
    return tuple(out)


def emit_gliding(clause: Sequence[int], meta: ClauseMeta) -> Iterator[Candidate]:
    z, nb = meta.glide
    for s in range(1, z + 1):
        yield glide_clause(clause, -s), ClauseMeta(glide=(z - s, nb + s))
    for s in range(1, nb + 1):
        yield glide_clause(clause, s), ClauseMeta(glide=(z + s, nb - s))


class GlidingSource:
    name = "gliding"

    def combine(self, metas: Sequence[ClauseMeta], out: ClauseMeta) -> None:
        out.glide = combine_glide(metas)

    def emit(self, clause: Sequence[int], meta: ClauseMeta) -> Iterator[Candidate]:
        if meta.glide is None:
            return iter(())
        return emit_gliding(clause, meta)


# -- pythagorean scaling -----------------------------------------------------

def combine_pyth(metas: Iterable[ClauseMeta]) -> Optional[tuple[int, int]]:
    g = mx = None
    for m in metas:
        if m.pyth is None:
            return None
        mg, mm = m.pyth
        g = mg if g is None else math.gcd(g, mg)
        mx = mm if mx is None else max(mx, mm)
    if g is None:
        return None
    return g, mx


def scale_bound(n: int, gcd: int, maxvar: int) -> int:
    return n * gcd // maxvar


def emit_pythagorean(clause: Sequence[int], meta: ClauseMeta, n: int) -> Iterator[Candidate]:
    g, mx = meta.pyth
    for lit in clause:
        if abs(lit) % g:
            raise MetadataError(f"gcd {g} does not divide literal {lit} of {tuple(clause)}")
    if mx % g:
        raise MetadataError(f"gcd {g} does not divide maxvar {mx}")
    base = [lit // g for lit in clause]   # exact: g divides every magnitude
    for i in range(1, scale_bound(n, g, mx) + 1):
        if i == g:
            continue
        yield tuple(lit * i for lit in base), ClauseMeta(pyth=(i, mx // g * i))


class PythagoreanSource:
    name = "pythagorean"

    def __init__(self, n: int):
        self.n = n

    def combine(self, metas: Sequence[ClauseMeta], out: ClauseMeta) -> None:
        out.pyth = combine_pyth(metas)

    def emit(self, clause: Sequence[int], meta: ClauseMeta) -> Iterator[Candidate]:
        if meta.pyth is None:
            return iter(())
        return emit_pythagorean(clause, meta, self.n)


# -- permutations (dynamic symmetry exploitation) ----------------------------

class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Propositionally consistent literal map; literals off the support are fixed."""
    mapping: dict

    def __post_init__(self):
        images = set()
        for src, dst in self.mapping.items():
            if src == 0 or dst == 0:
                raise PermutationError("0 is not a literal")
            if self.mapping.get(-src, -src) != -dst:
                raise PermutationError(f"{src}->{dst} is not propositionally consistent")
            if dst in images:
                raise PermutationError(f"literal {dst} has two preimages")
            images.add(dst)
        if images != set(self.mapping):
            raise PermutationError("map is not a bijection on its support")

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        mapping: dict = {}

        def put(src, dst):
            if mapping.get(src, dst) != dst:
                raise PermutationError(f"literal {src} is mapped twice")
            mapping[src] = dst

        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise PermutationError(f"literal repeated in cycle {list(cycle)}")
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                put(a, b)
                put(-a, -b)
        return cls(mapping)

    def __call__(self, lit: int) -> int:
        return self.mapping.get(lit, lit)

    def cycles(self) -> list[list[int]]:
        done, out = set(), []
        for start in sorted(self.mapping, key=lambda l: (abs(l), l < 0)):
            if start in done or self.mapping[start] == start:
                continue
            cyc, lit = [], start
            while lit not in done:
                done.add(lit)
                cyc.append(lit)
                lit = self.mapping[lit]
            # the negated twin cycle is implied
            done.update(-l for l in cyc)
            out.append(cyc)
        return out

    def format(self) -> str:
        return " ".join("( " + " ".join(map(str, c)) + " )" for c in self.cycles())


_CYCLE = re.compile(r"[\[(]([^\])]*)[\])]")


def parse_generators(text: str) -> list[Permutation]:
    """Read cycle-form generators, one permutation per line.

    Both ``[ 1 7 ] [ 2 6 ]`` and BreakID's ``( 1 7 ) ( 2 6 )`` are accepted.
    Lines without any cycle (comments, BreakID's row-interchangeability
    blocks) are skipped.
    """
    perms = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.lstrip().startswith(("c", "#")):
            continue
        cycles = []
        for body in _CYCLE.findall(line):
            try:
                cyc = [int(t) for t in body.replace(",", " ").split()]
            except ValueError:
                raise PermutationError(f"line {lineno}: bad cycle {body!r}") from None
            if cyc:
                cycles.append(cyc)
        if cycles:
            try:
                perms.append(Permutation.from_cycles(cycles))
            except PermutationError as e:
                raise PermutationError(f"line {lineno}: {e}") from None
    return perms


def apply_permutation(perm: Permutation, clause: Sequence[int]) -> Optional[Clause]:
    """Literal-wise image, or None if the image is tautological."""
    try:
        return make_clause(perm(lit) for lit in clause)
    except TautologyError:
        return None


class DynSymSource:
    """Each generator applied once to each learned clause (no composition)."""
    name = "dyn-sym"

    def __init__(self, generators: Sequence[Permutation]):
        self.generators = list(generators)

    def combine(self, metas: Sequence[ClauseMeta], out: ClauseMeta) -> None:
        pass

    def emit(self, clause: Sequence[int], meta: ClauseMeta) -> Iterator[Candidate]:
        for perm in self.generators:
            image = apply_permutation(perm, clause)
            # an arbitrary generator says nothing about gliding or scaling
            # structure, so images carry no plugin metadata
            yield image, ClauseMeta()


def fold_metas(metas: Sequence[ClauseMeta], sources: Sequence) -> ClauseMeta:
    out = ClauseMeta(symmetric=all(m.symmetric for m in metas),
                     is_e=any(m.is_e for m in metas))
    if out.symmetric:
        for src in sources:
            src.combine(metas, out)
    return out


def gcd_of(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)
