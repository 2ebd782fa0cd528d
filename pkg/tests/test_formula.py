import itertools

import pytest
from hypothesis import given, settings, strategies as st

from isosat.formula import (DimacsError, EvalResult, Formula, ResolutionError,
                            TautologyError, evaluate, make_clause, negate,
                            parse_clause_lines, parse_dimacs, resolve, write_dimacs)
from isosat.generators import gen_pythagorean, gen_vdw

EXAMPLE_1 = """p cnf 7 18
1 2 3 0
2 3 4 0
3 4 5 0
4 5 6 0
5 6 7 0
1 3 5 0
2 4 6 0
3 5 7 0
1 4 7 0
-1 -2 -3 0
-2 -3 -4 0
-3 -4 -5 0
-4 -5 -6 0
-5 -6 -7 0
-1 -3 -5 0
-2 -4 -6 0
-3 -5 -7 0
-1 -4 -7 0
"""


def truth_table_implies(premises, conclusion):
    vs = sorted({abs(l) for c in list(premises) + [conclusion] for l in c})
    for bits in itertools.product((False, True), repeat=len(vs)):
        a = dict(zip(vs, bits))
        holds = lambda c: any(a[abs(l)] == (l > 0) for l in c)
        if all(holds(c) for c in premises) and not holds(conclusion):
            return False
    return True


def test_parse_small():
    f = parse_dimacs("p cnf 3 2\n1 -3 0\n2 -3 0\n")
    assert f.num_vars == 3
    assert f.clauses == ((1, -3), (2, -3))


def test_parse_example_formula():
    f = parse_dimacs(EXAMPLE_1)
    assert (f.num_vars, len(f.clauses)) == (7, 18)


def test_parse_comments_and_multiline_clause():
    f = parse_dimacs("c hello\np cnf 4 2\n1 2\n 3 0 -4\n0\n")
    assert f.clauses == ((1, 2, 3), (-4,))


@pytest.mark.parametrize("text", [
    "p cnf 1 1\n1 -1 0",
    "p cnf 2 1\n1 3 0\n",
    "p cnf 2 2\n1 2 0\n",
    "1 2 0\n",
    "p cnf 2 1\n1 2\n",
    "p cnf x 1\n1 0\n",
    "p cnf 2 1\n1 a 0\n",
])
def test_parse_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs(text)


def test_tautology_error_mentions_tautology():
    with pytest.raises(DimacsError, match="tautolog"):
        parse_dimacs("p cnf 1 1\n1 -1 0")


def test_write_small():
    assert write_dimacs(Formula(3, ((1, -3),))) == "p cnf 3 1\n1 -3 0\n"


@pytest.mark.parametrize("f", [gen_vdw(3, 3, 7), gen_pythagorean(17)])
def test_round_trip_families(f):
    g = parse_dimacs(write_dimacs(f))
    assert g.num_vars == f.num_vars
    assert g.clause_set() == f.clause_set()


clause_st = st.lists(st.integers(1, 8), min_size=1, max_size=5, unique=True).flatmap(
    lambda vs: st.tuples(*[st.sampled_from((v, -v)) for v in vs]))
formula_st = st.lists(clause_st, max_size=12).map(lambda cs: Formula(8, tuple(cs)))


@given(formula_st)
def test_round_trip_property(f):
    assert parse_dimacs(write_dimacs(f)).clauses == f.clauses


def test_parse_clause_lines():
    assert parse_clause_lines("c x\n2 3 -6 7 0\n1 0\n") == [(2, 3, -6, 7), (1,)]


def test_negate():
    assert negate(3) == -3 and negate(-3) == 3
    with pytest.raises(ValueError):
        negate(0)


@given(st.integers(-10**6, 10**6).filter(bool))
def test_negate_involution(lit):
    assert negate(negate(lit)) == lit


def test_make_clause():
    assert make_clause([1, 2, 1]) == (1, 2)
    with pytest.raises(TautologyError):
        make_clause([1, -1])


def test_resolve_examples():
    r = resolve((1, 2, 3), (-3, -4, -5), 3)
    assert r == (1, 2, -4, -5)
    assert truth_table_implies([(1, 2, 3), (-3, -4, -5)], r)
    assert set(resolve(r, (2, 4, 6), 4)) == {1, 2, -5, 6}
    assert resolve((1, 2), (-2, 1), 2) == (1,)


def test_resolve_errors():
    with pytest.raises(ResolutionError):
        resolve((1, 2), (1, 3), 1)
    with pytest.raises(ResolutionError):
        resolve((1, 2), (-1, -2), 1)


@settings(max_examples=200)
@given(clause_st, clause_st, st.integers(1, 8))
def test_resolvent_is_implied(c1, c2, v):
    c1 = tuple(l for l in c1 if abs(l) != v) + (v,)
    c2 = tuple(l for l in c2 if abs(l) != v) + (-v,)
    try:
        r = resolve(c1, c2, v)
    except ResolutionError:
        return
    assert v not in r and -v not in r
    assert truth_table_implies([c1, c2], r)


def test_evaluate_examples():
    f = parse_dimacs(EXAMPLE_1)
    assert evaluate(f, {v: True for v in range(1, 8)}) is EvalResult.FALSIFIED
    ones = {5, 8, 9}
    assert evaluate(gen_pythagorean(17), {v: v in ones for v in range(1, 18)}) \
        is EvalResult.SATISFIED
    assert evaluate(Formula(0, ()), {}) is EvalResult.SATISFIED
    assert evaluate(f, {1: True}) is EvalResult.UNDETERMINED


def test_formula_rejects_out_of_range():
    with pytest.raises(ValueError):
        Formula(2, ((1, 3),))


def test_extended_grows_vars():
    f = Formula(2, ((1, 2),)).extended([(5,)])
    assert f.num_vars == 5 and f.clauses[-1] == (5,)
