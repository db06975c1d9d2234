import pytest
from hypothesis import given, strategies as st

from dstriples.descartes import (
    CurvatureTriple,
    DSQuintuple,
    NotDS,
    ParityClass,
    degenerate_c3,
    descartes_residual,
    enumerate_primitive_ds,
    enumerate_primitive_ds_naive,
    is_primitive,
    parity_class,
    q_squared,
    quintuple,
)


def test_triple_236():
    q5 = quintuple((2, 3, 6))
    assert (q5.q, q5.c4_minus, q5.c4_plus) == (6, -1, 23)


def test_triple_8_9_17():
    q5 = quintuple((8, 9, 17))
    assert (q5.q, q5.c4_minus, q5.c4_plus) == (19, -4, 72)


def test_triple_123_is_not_ds():
    r = quintuple((1, 2, 3))
    assert isinstance(r, NotDS) and r.q_squared == 11


def test_triple_is_sorted_by_of():
    assert CurvatureTriple.of(6, 2, 3) == CurvatureTriple(2, 3, 6)
    with pytest.raises(ValueError):
        CurvatureTriple(3, 2, 6)
    with pytest.raises(ValueError):
        CurvatureTriple(0, 1, 1)


def test_quintuple_rejects_inconsistent_values():
    with pytest.raises(ValueError):
        DSQuintuple(CurvatureTriple(2, 3, 6), 6, -1, 22)


def test_no_equal_triple_is_ds():
    assert all(isinstance(quintuple((c, c, c)), NotDS) for c in range(1, 300))


def test_residual_vanishes_for_both_fourth_curvatures():
    for q5 in enumerate_primitive_ds(80):
        c1, c2, c3 = q5.triple.as_tuple()
        assert descartes_residual((c1, c2, c3, q5.c4_minus)) == 0
        assert descartes_residual((c1, c2, c3, q5.c4_plus)) == 0


def test_divisor_enumeration_equals_naive_loop():
    assert enumerate_primitive_ds(60) == enumerate_primitive_ds_naive(60)


def test_enumeration_small_bound():
    assert [str(q.triple) for q in enumerate_primitive_ds(4)] == ["[2,2,3]", "[1,1,4]"]


def test_enumeration_sorted_and_primitive():
    out = enumerate_primitive_ds(120)
    keys = [(q.c3, q.c1, q.c2) for q in out]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(is_primitive(q.triple) for q in out)


def test_every_primitive_triple_has_an_admissible_parity_pattern():
    for q5 in enumerate_primitive_ds(150):
        assert parity_class(q5.triple) in (ParityClass.EVEN_EVEN_ODD, ParityClass.ODD_ODD_EVEN)


def test_parity_class_rejects_three_odd():
    with pytest.raises(ValueError):
        parity_class((1, 3, 5))


def test_degenerate_c3():
    assert degenerate_c3(1, 4).value == 9
    assert degenerate_c3(4, 9).value == 25
    d = degenerate_c3(1, 2)
    assert d.value is None and d.radicand == 2


@given(st.integers(1, 60), st.integers(1, 60), st.integers(1, 60))
def test_q_squared_symmetric(a, b, c):
    assert q_squared((a, b, c)) == q_squared((c, a, b)) == a * b + a * c + b * c
