"""Tests for the partition codec and the category operations"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

import errors
from errors import (
    BlockCoverError,
    EmptyRowError,
    NotComposableError,
    PartitionSyntaxError,
    PointIndexError,
    UnknownBlockError,
    UnknownPointError,
)
from partition import (
    EMPTY,
    Color,
    Corner,
    CyclicInterval,
    Direction,
    Openness,
    compose,
    color_invert,
    connected_components,
    crossing,
    cup,
    cyclic_rotate,
    enumerate_p2nb,
    erase,
    from_line,
    identity,
    involution,
    is_connected,
    is_noncrossing,
    lower,
    orientation_order,
    parse,
    reflect,
    rotate,
    serialize,
    tensor,
    to_line,
    upper,
    verticolor_reflect,
)
from strategies import P2NB_POOL, PAIR_POOL, p2nb_partitions, pair_partitions

HALF_LIBERATION = "U[wbw] L[wbw] B{l1,u3;l2,u2;l3,u1}"
FIGURE = "U[wwwbbb] L[wwwbbb] B{l1,l6;l2,l5;l3,u3;l4,u4;u1,u6;u2,u5}"


# ---------------------------------------------------------------------------
# Codec
# ---------------------------------------------------------------------------

def test_parse_normalizes_block_order():
    p = parse("U[wb]  L[wb] B{u2,l2; u1,l1}")
    assert serialize(p) == "U[wb] L[wb] B{l1,u1;l2,u2}"
    assert p == identity([Color.WHITE, Color.BLACK])


def test_parse_empty_partition():
    assert parse("U[] L[] B{}") == EMPTY
    assert EMPTY.size == 0


@given(pair_partitions())
def test_serialization_is_stable(p):
    assert parse(serialize(p)) == p


@pytest.mark.parametrize('text, error', [
    ("X[w] L[w] B{l1,u1}", PartitionSyntaxError),
    ("U[w] L[w] B{l1,u1", PartitionSyntaxError),
    ("U[w] L[w] B{l1,x1}", PartitionSyntaxError),
    ("U[w] L[w] B{l1,u1} extra", PartitionSyntaxError),
    ("U[w] L[w] B{l1}", BlockCoverError),
    ("U[w] L[w] B{l1,u1;l1}", BlockCoverError),
    ("U[w] L[w] B{l1,u2}", PointIndexError),
])
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse(text)


def test_syntax_error_reports_position():
    with pytest.raises(PartitionSyntaxError) as info:
        parse("U[w] L[w] C{}")
    assert info.value.position == 10


# ---------------------------------------------------------------------------
# Category operations
# ---------------------------------------------------------------------------

def test_tensor_shifts_second_operand():
    p = tensor(identity(Color.WHITE), cup(Color.BLACK, Color.WHITE))
    assert serialize(p) == "U[w] L[wbw] B{l1,u1;l2,l3}"


def test_involution_swaps_rows():
    assert involution(cup(Color.WHITE, Color.BLACK)) == parse("U[wb] L[] B{u1,u2}")


@given(p2nb_partitions())
def test_involution_is_an_involution(p):
    assert involution(involution(p)) == p


@given(p2nb_partitions())
def test_identity_is_neutral_for_composition(p):
    assert compose(p, identity(p.upper)) == (p, 0)
    assert compose(identity(p.lower), p) == (p, 0)


def test_compose_counts_loops():
    cap = involution(cup(Color.WHITE, Color.BLACK))
    result, loops = compose(cap, cup(Color.WHITE, Color.BLACK))
    assert result == EMPTY
    assert loops == 1


def test_compose_joins_through_middle_points():
    p = parse("U[wbb] L[w] B{l1,u1;u2,u3}")
    q = parse("U[w] L[wbb] B{l1,u1;l2,l3}")
    result, loops = compose(p, q)
    assert result == identity(Color.WHITE)
    assert loops == 1


def test_compose_rejects_row_mismatch():
    with pytest.raises(NotComposableError) as info:
        compose(identity([Color.WHITE, Color.WHITE]), identity([Color.WHITE, Color.BLACK]))
    assert info.value.position == 2


def composable_with(p):
    """Pool partitions that can be stacked on top of p"""
    return st.sampled_from([q for q in P2NB_POOL if q.lower == p.upper])


@given(st.data())
def test_composition_is_associative_with_additive_loops(data):
    p = data.draw(p2nb_partitions())
    q = data.draw(composable_with(p))
    r = data.draw(composable_with(q))
    pq, first = compose(p, q)
    left, second = compose(pq, r)
    qr, third = compose(q, r)
    right, fourth = compose(p, qr)
    assert left == right
    assert first + second == third + fourth


@given(st.data())
def test_involution_reverses_composition(data):
    p = data.draw(p2nb_partitions())
    q = data.draw(composable_with(p))
    pq, loops = compose(p, q)
    assert compose(involution(q), involution(p)) == (involution(pq), loops)


@given(p2nb_partitions(), p2nb_partitions(), p2nb_partitions())
def test_tensor_is_associative_with_unit(p, q, r):
    assert tensor(tensor(p, q), r) == tensor(p, tensor(q, r))
    assert tensor(p, EMPTY) == p
    assert tensor(EMPTY, p) == p



def test_color_invert_and_reflect():
    p = parse(HALF_LIBERATION)
    assert color_invert(p) == parse("U[bwb] L[bwb] B{l1,u3;l2,u2;l3,u1}")
    assert reflect(p) == p
    assert verticolor_reflect(cup(Color.WHITE, Color.BLACK)) == cup(Color.WHITE, Color.BLACK)


@pytest.mark.parametrize('operation', [color_invert, reflect, verticolor_reflect])
def test_reflections_are_involutions(operation):
    for p in PAIR_POOL + P2NB_POOL:
        assert operation(operation(p)) == p


def test_error_classes_are_documented():
    classes = [c for c in vars(errors).values() if isinstance(c, type) and issubclass(c, errors.PartitionError)]
    assert len(classes) > 20
    assert all(c.__doc__ for c in classes)



def test_rotate_inverts_moved_color():
    p = identity(Color.WHITE)
    assert rotate(p, Corner.UPPER_LEFT_DOWN) == cup(Color.BLACK, Color.WHITE)
    assert rotate(p, Corner.UPPER_RIGHT_DOWN) == cup(Color.WHITE, Color.BLACK)


@given(p2nb_partitions())
def test_rotations_undo_each_other(p):
    for corner in Corner:
        source = p.upper if corner in (Corner.UPPER_LEFT_DOWN, Corner.UPPER_RIGHT_DOWN) else p.lower
        if source:
            assert rotate(rotate(p, corner), corner.inverse) == p


def test_rotate_from_empty_row():
    with pytest.raises(EmptyRowError):
        rotate(cup(Color.WHITE, Color.BLACK), Corner.UPPER_LEFT_DOWN)


@given(p2nb_partitions())
def test_full_cyclic_rotation_is_identity(p):
    if p.lower:
        assert cyclic_rotate(p, Direction.CLOCKWISE, p.size) == p
    if p.upper and p.lower:
        once = cyclic_rotate(p, Direction.CLOCKWISE)
        assert cyclic_rotate(once, Direction.COUNTER_CLOCKWISE) == p


def test_erase_merges_touched_blocks():
    p = parse("U[] L[wbwb] B{l1,l2;l3,l4}")
    assert erase(p, [lower(2), lower(3)]) == parse("U[] L[wb] B{l1,l2}")
    assert erase(p, []) == p


def test_erase_unknown_point():
    with pytest.raises(UnknownPointError):
        erase(identity(Color.WHITE), [upper(2)])


# ---------------------------------------------------------------------------
# Orientation, crossings, intervals
# ---------------------------------------------------------------------------

def test_orientation_runs_lower_then_upper_reversed():
    p = parse("U[wb] L[wbw] B{l1,u1;l2,l3;u2}")
    assert [str(pt) for pt in orientation_order(p)] == ['l1', 'l2', 'l3', 'u2', 'u1']


def test_crossing_blocks():
    p = parse(HALF_LIBERATION)
    assert crossing(p, [lower(1), upper(3)], [lower(2), upper(2)])
    assert not is_noncrossing(p)
    assert is_connected(p)
    with pytest.raises(UnknownBlockError):
        crossing(p, [lower(1), lower(2)], [lower(3), upper(1)])


@given(pair_partitions())
def test_crossing_is_symmetric_and_irreflexive(p):
    for first in p.blocks:
        assert not crossing(p, first, first)
        for second in p.blocks:
            assert crossing(p, first, second) == crossing(p, second, first)


def test_connected_components():
    assert is_connected(parse(FIGURE))
    strings = identity([Color.WHITE, Color.BLACK])
    assert len(connected_components(strings)) == 2
    assert not is_connected(strings)


def test_cyclic_interval_wraps_around():
    p = parse(HALF_LIBERATION)
    interval = CyclicInterval(upper(1), lower(2))
    assert [str(pt) for pt in interval.points(p)] == ['u1', 'l1', 'l2']
    opened = CyclicInterval(upper(1), lower(2), Openness.OPEN_CLOSED)
    assert not opened.contains(p, upper(1))
    assert str(opened) == ']u1,l2]'


# ---------------------------------------------------------------------------
# One-line forms and enumeration
# ---------------------------------------------------------------------------

@given(p2nb_partitions())
def test_from_line_inverts_to_line(p):
    assert from_line(to_line(p), len(p.upper)) == p


@pytest.mark.parametrize('n, count', [(0, 1), (2, 6), (4, 60), (6, 840)])
def test_p2nb_counts(n, count):
    assert sum(1 for _ in enumerate_p2nb(n)) == count
