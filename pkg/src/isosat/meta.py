"""Per-clause derivation metadata and the sidecar file format.

A sidecar file carries one line per clause of a CNF, in the same order:

    g <z> <nb>        gliding bounds (steps toward zero / away from zero)
    p <gcd> <maxvar>  pythagorean scaling data
    -                 no metadata; the clause is non-symmetric
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

CORE = "core"
TIER2 = "tier2"
LOCAL = "local"


def tier_for_lbd(lbd: int) -> str:
    if lbd <= 3:
        return CORE
    if lbd <= 6:
        return TIER2
    return LOCAL


@dataclass
class ClauseMeta:
    symmetric: bool = True
    glide: Optional[tuple[int, int]] = None
    pyth: Optional[tuple[int, int]] = None
    # set on E-clauses and on clauses learned from at least one E-clause
    is_e: bool = False
    lbd: int = 0
    activity: float = 0.0
    tier: str = CORE

    def derivation(self) -> "ClauseMeta":
        """Copy holding only the derivation fields (no database bookkeeping)."""
        return ClauseMeta(self.symmetric, self.glide, self.pyth, self.is_e)


NONSYMMETRIC = ClauseMeta(symmetric=False)


class SidecarError(ValueError):
    pass


def format_sidecar_line(meta: Optional[ClauseMeta]) -> str:
    if meta is None or not meta.symmetric:
        return "-"
    if meta.glide is not None:
        return "g %d %d" % meta.glide
    if meta.pyth is not None:
        return "p %d %d" % meta.pyth
    return "-"


def write_sidecar(metas: Iterable[Optional[ClauseMeta]]) -> str:
    return "".join(format_sidecar_line(m) + "\n" for m in metas)


def parse_sidecar(text: str) -> list[ClauseMeta]:
    metas = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        tag = parts[0]
        try:
            if tag == "-" and len(parts) == 1:
                metas.append(ClauseMeta(symmetric=False))
            elif tag == "g" and len(parts) == 3:
                z, nb = int(parts[1]), int(parts[2])
                if z < 0 or nb < 0:
                    raise SidecarError(f"line {lineno}: negative gliding bound")
                metas.append(ClauseMeta(glide=(z, nb)))
            elif tag == "p" and len(parts) == 3:
                g, mx = int(parts[1]), int(parts[2])
                if g < 1 or mx < 1:
                    raise SidecarError(f"line {lineno}: gcd and maxvar must be positive")
                metas.append(ClauseMeta(pyth=(g, mx)))
            else:
                raise SidecarError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as e:
            if isinstance(e, SidecarError):
                raise
            raise SidecarError(f"line {lineno}: {e}") from None
    return metas
