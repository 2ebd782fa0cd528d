"""CDCL SAT solving with E-clauses derived from isomorphic resolution sequences."""
from .formula import Formula, parse_dimacs, write_dimacs, resolve, evaluate
from .generators import gen_vdw, gen_pythagorean, enumerate_triples
from .meta import ClauseMeta
from .solver import Solver, SolverConfig, SolveReport, solve

__all__ = [
    "Formula", "parse_dimacs", "write_dimacs", "resolve", "evaluate",
    "gen_vdw", "gen_pythagorean", "enumerate_triples", "ClauseMeta",
    "Solver", "SolverConfig", "SolveReport", "solve",
]
