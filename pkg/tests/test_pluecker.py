"""Plücker vectors: closed forms against minors, invariants, recovery."""

import itertools
import random
import warnings

import pytest
from hypothesis import given, strategies as st

from goppa_levels.codes import from_generator, full_space
from goppa_levels.errors import (
    DegreeOutOfRange,
    FirstCoordinateZero,
    FullSpace,
    NotInFiber,
    ShapeMismatch,
    ZeroCoordinateObstruction,
)
from goppa_levels.exact_linalg import Matrix, det, matmul, maximal_minors
from goppa_levels.fields import parse_field
from goppa_levels.level_structures import LevelStructure, code, make_structure, parity_check_matrix
from goppa_levels.pluecker import (
    PlueckerVector,
    fiber_residual,
    invariants_y,
    normalize,
    pluecker_closed_form,
    pluecker_of_code,
    recover_scalars,
)

F7 = parse_field("7")
G0 = make_structure(F7, 5, 2, [2, 3])
PINNED = (1, 4, 3, 6, 4, 6, 4, 5, 6, 4)


def random_invertible(F, m, rng):
    while True:
        rows = [[rng.choice(F.elements()) for _ in range(m)] for _ in range(m)]
        M = Matrix._raw(F, rows, m)
        if det(M) != F.zero:
            return M


def test_small_code_example():
    C = from_generator(Matrix.from_rows(F7, [[1, 0]]))
    v = pluecker_of_code(C)
    assert v.tuples == ((1,), (2,)) and v.coords == (0, 1)


def test_pinned_vector_both_ways():
    assert pluecker_of_code(code(G0)).coords == PINNED
    assert pluecker_closed_form(G0).coords == PINNED
    assert pluecker_closed_form(G0).as_dict()[(2, 3)] == 4


def test_minors_of_displayed_h():
    raw = [v for _, v in maximal_minors(parity_check_matrix(G0))]
    assert normalize(F7, 5, 3, [t for t, _ in maximal_minors(parity_check_matrix(G0))], raw).coords == PINNED


def test_parity_check_choice_is_irrelevant():
    rng = random.Random(1)
    H = parity_check_matrix(G0)
    for _ in range(10):
        H2 = matmul(H, random_invertible(F7, 2, rng))
        minors = maximal_minors(H2)
        assert normalize(F7, 5, 3, [t for t, _ in minors], [v for _, v in minors]).coords == PINNED


def test_errors():
    with pytest.raises(FullSpace):
        pluecker_of_code(full_space(F7, 3))
    with pytest.raises(DegreeOutOfRange):
        pluecker_closed_form(make_structure(F7, 5, 4, [2, 3]))
    with pytest.raises(ShapeMismatch):
        fiber_residual(code(G0), make_structure(F7, 5, 1, [2, 3]))


def test_invariants_y():
    v = pluecker_closed_form(G0)
    assert invariants_y(v) == list(PINNED)
    assert invariants_y(pluecker_of_code(code(G0))) == invariants_y(v)


def test_invariants_y_first_zero():
    v = PlueckerVector(F7, 3, 1, ((1, 2), (1, 3), (2, 3)), (0, 1, 3))
    with pytest.raises(FirstCoordinateZero):
        invariants_y(v, strict=True)
    with pytest.warns(UserWarning):
        assert invariants_y(v) == [0, 1, 3]


def test_fiber_residual():
    assert all(r == 0 for r in fiber_residual(code(G0), G0))
    g = make_structure(F7, 5, 2, [2, 3], [1, 2, 1, 1])
    assert any(r != 0 for r in fiber_residual(code(g), G0))


def test_recover_examples():
    g = make_structure(F7, 5, 1, [2, 3], [1, 6, 3, 4])
    assert recover_scalars(code(g), [2, 3], 1) == (1, 6, 3, 4)
    assert recover_scalars(code(G0), [2, 3], 2) == (1, 1, 1, 1)


def test_recover_rejects_non_image_code():
    rng = random.Random(7)
    rejected = 0
    for _ in range(20):
        rows = [[rng.randrange(7) for _ in range(5)] for _ in range(3)]
        C = from_generator(Matrix.from_rows(F7, rows))
        if C.k != 3:
            continue
        try:
            scalars = recover_scalars(C, [2, 3], 2)
        except NotInFiber:
            rejected += 1
        else:
            assert code(LevelStructure(F7, 5, 2, (2, 3), scalars)) == C
    assert rejected > 0


def test_json_round_trip():
    v = pluecker_closed_form(G0)
    assert PlueckerVector.from_json(v.to_json()) == v


@pytest.mark.parametrize("spec,n,alphas", [("7", 5, (2, 3)), ("8", 6, (3, 4, 6)), ("9", 6, (5, 2, 7)),
                                           ("11", 7, (2, 5, 9, 10))])
@given(data=st.data())
def test_closed_form_matches_minors(spec, n, alphas, data):
    F = parse_field(spec)
    d = data.draw(st.integers(0, n - 2))
    ls = data.draw(st.lists(st.sampled_from(F.elements()[1:]), min_size=n - 1, max_size=n - 1))
    g = LevelStructure(F, n, d, alphas, tuple(ls))
    assert pluecker_closed_form(g) == pluecker_of_code(code(g))


@given(st.lists(st.integers(1, 6), min_size=4, max_size=4), st.permutations([2, 3, 4, 5, 6]))
def test_three_term_relation(ls, perm):
    # codes of codimension 2 in F^4: p12 p34 - p13 p24 + p14 p23 = 0
    g = LevelStructure(F7, 5, 2, tuple(perm[:2]), tuple(ls))
    p = pluecker_of_code(code(g)).as_dict()
    for drop in range(1, 6):
        a, b, c, e = [i for i in range(1, 6) if i != drop]
        lhs = F7.sub(F7.mul(p[(a, b)], p[(c, e)]), F7.mul(p[(a, c)], p[(b, e)]))
        assert F7.add(lhs, F7.mul(p[(a, e)], p[(b, c)])) == 0


def test_recover_round_trip_exhaustive_small():
    F = parse_field("8")
    for alphas in itertools.permutations(F.elements()[2:], 3):
        for ls in [(1,) * 5, (2, 3, 4, 5, 6), (7, 7, 2, 3, 1)]:
            g = LevelStructure(F, 6, 2, alphas, ls)
            assert recover_scalars(code(g), alphas, 2) == ls


def test_no_warning_on_regular_vectors():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        invariants_y(pluecker_closed_form(G0))


def test_zero_coordinate_obstruction():
    # e_1 in C makes every coordinate through index 1 vanish
    C = from_generator(Matrix.from_rows(F7, [[1, 0, 0, 0, 0], [0, 1, 2, 3, 4], [0, 0, 1, 5, 2]]))
    with pytest.raises(ZeroCoordinateObstruction):
        recover_scalars(C, [2, 3], 2)
    assert issubclass(ZeroCoordinateObstruction, NotInFiber)
