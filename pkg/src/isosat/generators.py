"""Benchmark families with structural metadata attached to every clause."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .eclauses import Permutation, gcd_of
from .formula import Formula
from .meta import ClauseMeta


@dataclass(frozen=True)
class VdwParams:
    j: int
    k: int
    n: int

    def __post_init__(self):
        if self.j < 2 or self.k < 2 or self.n < 1:
            raise ValueError(f"invalid Van der Waerden parameters {self}")


@dataclass(frozen=True)
class PythParams:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"invalid universe size {self.n}")


def _progressions(length: int, n: int):
    """(base, gap, bases_available) for every progression of ``length`` in 1..n."""
    d = 1
    while n - (length - 1) * d >= 1:
        last_base = n - (length - 1) * d
        for i in range(1, last_base + 1):
            yield i, d, last_base
        d += 1


def gen_vdw(j: int, k: int, n: int) -> Formula:
    """Formula satisfiable iff 1..n has a 2-coloring avoiding a j-progression of
    color 1 and a k-progression of color 2, with gliding bounds per clause."""
    VdwParams(j, k, n)
    clauses, metas = [], []
    for length, sign in ((j, 1), (k, -1)):
        for i, d, last_base in _progressions(length, n):
            clauses.append(tuple(sign * (i + t * d) for t in range(length)))
            metas.append(ClauseMeta(glide=(i - 1, last_base - i)))
    return Formula(n, tuple(clauses), tuple(metas))


def vdw_clause_count(j: int, k: int, n: int) -> int:
    return sum(max(0, n - (j - 1) * d) for d in range(1, n + 1)) + \
        sum(max(0, n - (k - 1) * d) for d in range(1, n + 1))


def enumerate_triples(n: int) -> list[tuple[int, int, int]]:
    """All (a, b, c) with a < b < c <= n and a^2 + b^2 = c^2, sorted."""
    out = set()
    m = 2
    while m * m + 1 <= n:
        for q in range(1, m):
            if (m - q) % 2 == 1 and math.gcd(m, q) == 1:
                a, b, c = m * m - q * q, 2 * m * q, m * m + q * q
                if a > b:
                    a, b = b, a
                for t in range(1, n // c + 1):
                    out.add((a * t, b * t, c * t))
        m += 1
    return sorted(out)


def gen_pythagorean(n: int) -> Formula:
    PythParams(n)
    clauses, metas = [], []
    for t in enumerate_triples(n):
        g = gcd_of(t)
        for sign in (1, -1):
            clauses.append(tuple(sign * x for x in t))
            metas.append(ClauseMeta(pyth=(g, max(t))))
    return Formula(n, tuple(clauses), tuple(metas))


def vdw_generators(j: int, k: int, n: int) -> list[Permutation]:
    """The index reversal, plus the color swap when j == k.

    These are the symmetries a static detector reports for these formulas;
    emitting them directly saves running one.
    """
    gens = []
    rev = [[i, n + 1 - i] for i in range(1, n // 2 + 1)]
    if rev:
        gens.append(Permutation.from_cycles(rev))
    if j == k and n >= 1:
        gens.append(Permutation.from_cycles([[i, -i] for i in range(1, n + 1)]))
    return gens


def pythagorean_generators(n: int) -> list[Permutation]:
    """Color swap over 1..n."""
    return [Permutation.from_cycles([[i, -i] for i in range(1, n + 1)])]


def write_generators(perms) -> str:
    return "".join(p.format() + "\n" for p in perms)
