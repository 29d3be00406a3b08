"""Linear codes: canonical form, duality, trace codes and subfield subcodes."""

import itertools

import pytest
from hypothesis import given, strategies as st

from goppa_levels.codes import (
    LinearCode,
    dual,
    enumerate_subspaces,
    from_generator,
    full_space,
    is_degenerate,
    subfield_subcode,
    trace_code,
    zero_code,
)
from goppa_levels.errors import UnsupportedField
from goppa_levels.exact_linalg import Matrix
from goppa_levels.fields import parse_field, trace_raw
from goppa_levels.level_structures import code, make_structure, parity_check_matrix

F2 = parse_field("2")
F4 = parse_field("4")
F7 = parse_field("7")
W = F4.coerce([0, 1])  # omega


def words_over_prime(F, C):
    """Subfield subcode oracle: scan every codeword for F_p coordinates."""
    return {w for w in C.codewords() if all(x < F.p for x in w)}


def trace_words(F, C):
    return {tuple(trace_raw(F, x) for x in w) for w in C.codewords()}


def as_set(C):
    return set(C.codewords())


def test_from_generator_examples():
    assert from_generator(Matrix.identity(F7, 4)) == full_space(F7, 4)
    assert from_generator(Matrix.zeros(F7, 2, 3)).k == 0
    assert from_generator(Matrix.from_rows(F2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])).k == 2


def test_dual_examples():
    assert dual(full_space(F7, 3)) == zero_code(F7, 3)
    rep = from_generator(Matrix.from_rows(F2, [[1, 1]]))
    assert dual(rep) == rep


def test_dual_of_goppa_code_is_h_transpose():
    g = make_structure(F7, 5, 2, [2, 3])
    assert dual(code(g)) == from_generator(parity_check_matrix(g).T)


def test_trace_code_examples():
    assert trace_code(zero_code(F4, 2)) == zero_code(F2, 2)
    C = from_generator(Matrix._raw(F4, [[W, W]], 2))
    assert trace_code(C) == from_generator(Matrix.from_rows(F2, [[1, 1]]))
    assert trace_code(full_space(F4, 2)) == full_space(F2, 2)


def test_subfield_subcode_examples():
    assert subfield_subcode(full_space(F4, 3)) == full_space(F2, 3)
    C = from_generator(Matrix._raw(F4, [[W, W]], 2))
    assert subfield_subcode(C) == from_generator(Matrix.from_rows(F2, [[1, 1]]))
    assert subfield_subcode(zero_code(F4, 2)) == zero_code(F2, 2)


def test_trace_unsupported_over_ratfun():
    Fz = parse_field("ratfun(2)")
    with pytest.raises(UnsupportedField):
        trace_code(full_space(Fz, 2))
    with pytest.raises(UnsupportedField):
        subfield_subcode(full_space(Fz, 2))


def test_degeneracy():
    assert not is_degenerate(full_space(F7, 3))
    assert is_degenerate(from_generator(Matrix.from_rows(F2, [[1, 0]])))


def test_goppa_codes_nondegenerate():
    for alphas in itertools.permutations(range(2, 7), 2):
        for d in range(5):
            assert not is_degenerate(code(make_structure(F7, 5, d, alphas, [3, 1, 5, 2])))


@pytest.mark.parametrize("spec,n", [("4", 3), ("8", 2), ("9", 2)])
def test_trace_and_subfield_match_scan_oracles(spec, n):
    F = parse_field(spec)
    for k in range(n + 1):
        for C in enumerate_subspaces(F, n, k):
            assert as_set(subfield_subcode(C)) == words_over_prime(F, C)
            assert as_set(trace_code(C)) == trace_words(F, C)


def test_enumerate_subspaces_counts():
    # [3 choose 1]_4 = 21, [3 choose 2]_4 = 21
    assert [sum(1 for _ in enumerate_subspaces(F4, 3, k)) for k in range(4)] == [1, 21, 21, 1]


def test_code_json_round_trip():
    C = from_generator(Matrix._raw(F4, [[W, 1, 0], [0, W, 1]], 3))
    assert LinearCode.from_json(C.to_json()) == C


def test_contains():
    C = from_generator(Matrix.from_rows(F7, [[1, 2, 3]]))
    assert C.contains([2, 4, 6]) and not C.contains([1, 1, 1])


def _codes(F, max_n=5):
    els = st.sampled_from(F.elements())
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(0, n).flatmap(
            lambda k: st.lists(st.lists(els, min_size=n, max_size=n), min_size=k, max_size=k)
            .map(lambda rows: from_generator(Matrix.from_rows(F, rows, n)) if rows
                 else zero_code(F, n))))


@pytest.mark.parametrize("spec", ["7", "8", "9"])
@given(data=st.data())
def test_dual_is_involution_and_orthogonal(spec, data):
    F = parse_field(spec)
    C = data.draw(_codes(F))
    D = dual(C)
    assert D.k == C.n - C.k
    assert dual(D) == C
    for a in C.gen.rows:
        for b in D.gen.rows:
            assert F.sum(F.mul(x, y) for x, y in zip(a, b)) == F.zero
