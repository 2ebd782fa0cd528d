import pytest
from hypothesis import given, strategies as st

from isosat.eclauses import (DynSymSource, GlidingSource, MetadataError, Permutation,
                             PermutationError, PythagoreanSource, apply_permutation,
                             combine_glide, combine_pyth, emit_gliding, emit_pythagorean,
                             fold_metas, glide_clause, parse_generators)
from isosat.generators import gen_vdw
from isosat.meta import ClauseMeta
from isosat.verify import brute_force_implied

SIGMA1 = "[ 1 7 ] [ 2 6 ] [ 3 5 ]"
SIGMA2 = " ".join(f"[ {i} -{i} ]" for i in range(1, 8))


def G(z, nb):
    return ClauseMeta(glide=(z, nb))


def P(g, mx):
    return ClauseMeta(pyth=(g, mx))


def test_combine_glide():
    assert combine_glide([G(2, 0), G(2, 2), G(4, 2)]) == (2, 0)
    assert combine_glide([G(5, 7)]) == (5, 7)
    assert combine_glide([G(0, 9), G(9, 0)]) == (0, 0)
    assert combine_glide([G(1, 1), ClauseMeta()]) is None


def test_glide_clause():
    assert glide_clause((-7, -5, 10), -1) == (-6, -4, 9)
    assert glide_clause((1, 2, 3), 1) == (2, 3, 4)
    with pytest.raises(ValueError):
        glide_clause((1, 2), -1)


def test_emit_gliding_example():
    out = list(emit_gliding((-7, -5, 10), G(2, 0)))
    assert [(c, m.glide) for c, m in out] == [((-6, -4, 9), (1, 1)), ((-5, -3, 8), (0, 2))]


def test_emit_gliding_zero_bounds():
    assert list(emit_gliding((1, 2, 3), G(0, 0))) == []


def test_emit_gliding_example_formula_clause():
    # antecedents of (1 2 -5 6) in vdw(3,3,7): (1 2 3), (-3 -4 -5), (2 4 6)
    f = gen_vdw(3, 3, 7)
    metas = [f.meta[f.clauses.index(c)] for c in [(1, 2, 3), (-3, -4, -5), (2, 4, 6)]]
    assert [m.glide for m in metas] == [(0, 4), (2, 2), (1, 1)]
    bounds = combine_glide(metas)
    assert bounds == (0, 1)
    # every shift the bounds license keeps all antecedents inside the formula
    members = f.clause_set()
    for c in [(1, 2, 3), (-3, -4, -5), (2, 4, 6)]:
        assert frozenset(glide_clause(c, 1)) in members
        assert frozenset(glide_clause(c, 2)) not in members or c != (2, 4, 6)
    out = [c for c, _ in emit_gliding((1, 2, -5, 6), G(*bounds))]
    assert out == [(2, 3, -6, 7)]
    assert brute_force_implied(f, (2, 3, -6, 7))


def test_gliding_source_ignores_missing_meta():
    assert list(GlidingSource().emit((1, 2), ClauseMeta())) == []


def test_combine_pyth():
    assert combine_pyth([P(1, 13), P(1, 13)]) == (1, 13)
    assert combine_pyth([P(6, 30), P(4, 20)]) == (2, 30)
    assert combine_pyth([P(3, 9)]) == (3, 9)
    assert combine_pyth([]) is None


def test_emit_pythagorean_example():
    out = list(emit_pythagorean((3, 4, -12, -13), P(1, 13), 26))
    assert [(c, m.pyth) for c, m in out] == [((6, 8, -24, -26), (2, 26))]


def test_emit_pythagorean_skips_own_scale():
    out = [c for c, _ in emit_pythagorean((6, 8, -10), P(2, 10), 15)]
    assert out == [(3, 4, -5), (9, 12, -15)]


def test_emit_pythagorean_bound_below_one():
    assert list(emit_pythagorean((3, 4, 5), P(1, 5), 4)) == []


def test_emit_pythagorean_bad_meta():
    with pytest.raises(MetadataError):
        list(emit_pythagorean((3, 4, 6), P(2, 6), 30))


def test_pythagorean_source():
    src = PythagoreanSource(26)
    assert list(src.emit((1,), ClauseMeta())) == []
    assert len(list(src.emit((3, 4, 5), P(1, 5)))) == 4


def test_parse_generators_examples():
    (s1,) = parse_generators(SIGMA1)
    assert s1(1) == 7 and s1(-2) == -6 and s1(4) == 4 and s1(5) == 3
    (s2,) = parse_generators(SIGMA2)
    assert all(s2(i) == -i for i in range(1, 8))
    assert parse_generators("") == []
    assert list(DynSymSource([]).emit((1, 2), ClauseMeta())) == []


def test_parse_generators_breakid_style():
    text = "c comment\n( 1 7 ) ( 2 6 )\nrows 2 columns 2\n( 3 -3 )\n"
    perms = parse_generators(text)
    assert len(perms) == 2
    assert perms[0](2) == 6 and perms[1](-3) == 3


def test_parse_generators_errors():
    with pytest.raises(PermutationError):
        parse_generators("[ 1 2 ] [ 1 3 ]")
    with pytest.raises(PermutationError):
        parse_generators("[ 1 x ]")


def test_apply_permutation_examples():
    (s1,) = parse_generators(SIGMA1)
    (s2,) = parse_generators(SIGMA2)
    assert apply_permutation(s1, (1, 2, -5, 6)) == (7, 6, -3, 2)
    assert apply_permutation(s2, (1, 2, -5, 6)) == (-1, -2, 5, -6)
    assert apply_permutation(Permutation({}), (1, 2, -5, 6)) == (1, 2, -5, 6)


def test_dyn_sym_images_carry_no_plugin_meta():
    p = Permutation.from_cycles([[1, -2]])
    ((img, m),) = DynSymSource([p]).emit((1, 2), G(3, 3))
    assert img == (-2, -1)
    assert m.glide is None and m.pyth is None


def test_permutation_format_round_trip():
    p = Permutation.from_cycles([[1, 7, 3], [2, -2]])
    (q,) = parse_generators(p.format())
    assert q == p


def test_permutation_inconsistent():
    with pytest.raises(PermutationError):
        Permutation({1: 2, -1: 3, 2: 1, -2: -1, 3: -1})


def test_fold_metas():
    m = fold_metas([G(2, 0), ClauseMeta(glide=(1, 5), is_e=True)], [GlidingSource()])
    assert m.symmetric and m.is_e and m.glide == (1, 0)
    m = fold_metas([G(2, 0), ClauseMeta(symmetric=False)], [GlidingSource()])
    assert not m.symmetric and m.glide is None


@given(st.lists(st.tuples(st.integers(0, 20), st.integers(0, 20)), min_size=1, max_size=6))
def test_combine_glide_is_componentwise_min(bounds):
    z, nb = combine_glide([G(*b) for b in bounds])
    assert z == min(b[0] for b in bounds) and nb == min(b[1] for b in bounds)


@given(st.lists(st.integers(1, 20), min_size=1, max_size=5, unique=True),
       st.integers(0, 6), st.integers(0, 6))
def test_gliding_bounds_shift_consistently(vs, z, nb):
    """An emitted clause's bounds reach exactly the same range of positions."""
    vs = [v + z for v in vs]
    for c, m in emit_gliding(vs, G(z, nb)):
        s = c[0] - vs[0]
        assert m.glide == (z + s, nb - s)
        assert all(l >= 1 for l in c)
