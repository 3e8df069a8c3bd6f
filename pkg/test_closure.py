"""Tests for bounded category generation"""
import time

import pytest

from brackets import FOUR_POINT_BRACKETS, HALF_LIBERATION, associated_bracket, build_bracket_from_pattern, s_w_generator
from closure import (
    BASE_LINE,
    EMPTY_LINE,
    ClosureConfig,
    Membership,
    bracket_patterns_of,
    canonical,
    cap_turns,
    class_of,
    complement_pattern,
    contains,
    cumulative_s0_generators,
    generate,
    glue,
    line_key,
    parse_line_key,
    reflect_line,
    rotations,
    theorem_generators,
)
from color_metrics import SemigroupSpec, in_i_d, in_s_w, is_noncrossing, is_pair_neutral, sectors
from errors import BoundTooSmallError, EmptyRowError, PartitionError, TooLargeError
from partition import Color, Corner, cup, enumerate_p2nb, from_line, identity, involution, parse, rotate, to_line
from patterns import BracketPattern, PatternCategory, all_patterns, generated_category_characterization


def bracket(*elements):
    return build_bracket_from_pattern(Color.BLACK, BracketPattern.of(elements))


# ---------------------------------------------------------------------------
# Line forms
# ---------------------------------------------------------------------------

def test_rotations_are_distinct_shifts():
    assert rotations(('wbwb', (0, 0, 1, 1))) == (('wbwb', (0, 0, 1, 1)), ('bwbw', (0, 1, 1, 0)))
    assert rotations(EMPTY_LINE) == (EMPTY_LINE,)


def test_canonical_picks_one_rotation_per_class():
    assert canonical(BASE_LINE) == ('bw', (0, 0))
    assert class_of(cup(Color.WHITE, Color.BLACK)) == class_of(involution(cup(Color.WHITE, Color.BLACK)))
    line = to_line(HALF_LIBERATION)
    assert {canonical(rotated) for rotated in rotations(line)} == {canonical(line)}
    assert canonical(('bwwb', (7, 3, 3, 7))) == canonical(('wbbw', (0, 1, 1, 0)))


def test_class_of_ignores_row_split():
    p = identity([Color.WHITE, Color.BLACK])
    line = to_line(p)
    assert {class_of(from_line(line, k)) for k in range(len(line[0]) + 1)} == {class_of(p)}


def test_reflect_line():
    assert reflect_line(('wb', (0, 0))) == ('wb', (0, 0))
    assert reflect_line(('wwbb', (0, 1, 1, 0))) == ('wwbb', (0, 1, 1, 0))
    assert reflect_line(('wbbw', (0, 0, 1, 1))) == ('bwwb', (0, 0, 1, 1))


def test_glue_tensor_and_caps():
    base = canonical(BASE_LINE)
    found = glue(base, base, 4)
    assert base in found
    assert canonical(('wbwb', (0, 0, 1, 1))) in found
    assert EMPTY_LINE in found
    assert all(len(line[0]) in (0, 2, 4) for line in found)
    assert glue(base, base, 2) == {EMPTY_LINE, base}


LINES = [
    canonical(BASE_LINE),
    canonical(('wbwb', (0, 1, 1, 0))),
    canonical(('wwbb', (0, 1, 0, 1))),
    class_of(HALF_LIBERATION),
    class_of(FOUR_POINT_BRACKETS[0]),
]


@pytest.mark.parametrize('first', LINES)
@pytest.mark.parametrize('second', LINES)
def test_glue_is_symmetric(first, second):
    assert glue(first, second, 8) == glue(second, first, 8)


@pytest.mark.parametrize('line', LINES)
def test_cap_turns_is_glue_with_base(line):
    n = len(line[0])
    expected = {found for found in glue(line, canonical(BASE_LINE), n) if len(found[0]) == n - 2}
    assert cap_turns(line) == expected



def test_line_key_text():
    line = ('wbwb', (0, 1, 1, 0))
    assert line_key(line) == "wbwb|0,1,1,0"
    assert parse_line_key("wbwb|0,1,1,0") == line
    assert parse_line_key(line_key(EMPTY_LINE)) == EMPTY_LINE


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

def test_config_validation():
    with pytest.raises(PartitionError):
        ClosureConfig(0, 4)
    with pytest.raises(PartitionError):
        ClosureConfig(8, 6)
    assert ClosureConfig(4, 6).escalated(4) == ClosureConfig(4, 10)


def test_empty_generators_give_noncrossing_partitions():
    cs = generate([], ClosureConfig(4, 6))
    assert cs.saturated
    assert len(cs.classes) == 5
    expected = {p for n in (0, 2, 4) for p in enumerate_p2nb(n) if is_noncrossing(p)}
    assert cs.members == expected
    assert len(cs.members) == 47


def test_closure_is_deterministic():
    cfg = ClosureConfig(6, 6)
    first = generate([HALF_LIBERATION], cfg)
    second = generate([HALF_LIBERATION, HALF_LIBERATION], cfg)
    assert first == second
    assert first.iterations == second.iterations


def test_membership_queries():
    cs = generate([HALF_LIBERATION], ClosureConfig(6, 6))
    assert contains(cs, HALF_LIBERATION) is Membership.YES
    assert cs.contains(involution(HALF_LIBERATION)) is Membership.YES
    assert contains(cs, cup(Color.WHITE, Color.WHITE)) is Membership.NO_WITHIN_BOUNDS
    with pytest.raises(TooLargeError):
        contains(cs, bracket(1))


def test_closure_members_are_pair_neutral():
    cs = generate([HALF_LIBERATION], ClosureConfig(6, 6))
    assert all(is_pair_neutral(p) for p in cs.members)
    assert len(cs) == len(cs.classes)


def test_s_w_generator_closure_is_sound():
    cs = generate([s_w_generator(2)], ClosureConfig(8, 8))
    assert all(in_s_w(p, 2) for p in cs.members)


def test_i_d_generators_are_sound():
    d = SemigroupSpec.parse("D{gens=2,3; zero=1}")
    cs = generate(theorem_generators(d, 8), ClosureConfig(8, 8))
    assert contains(cs, bracket(1)) is Membership.YES
    assert all(in_i_d(p, d) for p in cs.members)


def test_bracket_patterns_of_closure():
    cs = generate([bracket(1)], ClosureConfig(8, 8))
    assert bracket_patterns_of(cs, 1) == PatternCategory(frozenset({BracketPattern.of([1])}))
    with pytest.raises(BoundTooSmallError):
        bracket_patterns_of(cs, 2)


def test_bracket_patterns_match_characterization():
    for w in all_patterns(1):
        cs = generate([build_bracket_from_pattern(Color.BLACK, w)], ClosureConfig(8, 8))
        assert bracket_patterns_of(cs, 1) == generated_category_characterization(w)
    assert bracket_patterns_of(generate([], ClosureConfig(8, 8)), 1) == PatternCategory(frozenset())


def glue_closure(gens, limit):
    """Fixpoint of reflection and glue over all pairs, without rounds or indexing"""
    known = {EMPTY_LINE, canonical(BASE_LINE)} | {class_of(g) for g in gens}
    while True:
        found = {canonical(reflect_line(line)) for line in known}
        for first in known:
            for second in known:
                if first[0] and second[0]:
                    found |= glue(first, second, limit)
        if found <= known:
            return known
        known |= found


@pytest.mark.parametrize('gens, limit', [
    ([], 6),
    ([HALF_LIBERATION], 6),
    ([parse("U[] L[wwbb] B{l1,l3;l2,l4}")], 4),
])
def test_generate_matches_glue_fixpoint(gens, limit):
    cs = generate(gens, ClosureConfig(limit, limit))
    assert cs.saturated
    assert cs.classes == glue_closure(gens, limit)


def test_noncrossing_closure_finishes_quickly():
    start = time.perf_counter()
    cs = generate([], ClosureConfig(6, 10))
    elapsed = time.perf_counter() - start
    assert cs.saturated
    assert all(is_noncrossing(p) for p in cs.members)
    assert elapsed < 60


def test_larger_bounds_keep_every_class():
    small = generate([HALF_LIBERATION], ClosureConfig(4, 6))
    assert small.classes <= generate([HALF_LIBERATION], ClosureConfig(6, 6)).classes
    assert small.classes <= generate([HALF_LIBERATION], ClosureConfig(4, 8)).classes


def test_members_are_closed_under_rotation():
    cs = generate([HALF_LIBERATION], ClosureConfig(6, 6))
    rotated = 0
    for p in cs.members:
        for corner in Corner:
            try:
                assert rotate(p, corner) in cs.members
                rotated += 1
            except EmptyRowError:
                continue
    assert rotated > len(cs.members)


@pytest.mark.parametrize('p', [*FOUR_POINT_BRACKETS, bracket(1)])
def test_associated_brackets_are_generated(p):
    cs = generate([p], ClosureConfig(8, 8))
    associated = [associated_bracket(p, s) for s in sectors(p) if 2 * len(s.points(p)) <= 8]
    assert associated
    for b in associated:
        assert contains(cs, b) is Membership.YES


def test_figure_partition_is_generated_by_brackets():
    figure = parse("U[wwwbbb] L[wwwbbb] B{l1,l6;l2,l5;l3,u3;l4,u4;u1,u6;u2,u5}")
    cs = generate([bracket(1), bracket(2)], ClosureConfig(12, 12, max_iterations=1))
    assert contains(cs, figure) is Membership.YES
    assert class_of(figure) == class_of(bracket(2))



# ---------------------------------------------------------------------------
# Generators of I_D
# ---------------------------------------------------------------------------

def test_complement_pattern():
    assert complement_pattern(SemigroupSpec.parse("D{gens=3,5; zero=1}")) == BracketPattern.of([1, 2, 4, 7])
    assert complement_pattern(SemigroupSpec.parse("D{gens=1; zero=1}")) is None
    assert complement_pattern(SemigroupSpec.parse("D{gens=2; zero=1}")) is None


@pytest.mark.parametrize('text, expected', [
    ("D{gens=2,3; zero=1}", [bracket(1)]),
    ("D{gens=1; zero=0}", [HALF_LIBERATION]),
    ("D{gens=1; zero=1}", []),
    ("D{gens=; zero=1}", sorted([bracket(1), bracket(1, 2)], key=str)),
    ("D{gens=2; zero=1}", [bracket(1)]),
    ("D{gens=2,3; zero=0}", sorted([bracket(1), HALF_LIBERATION], key=str)),
])
def test_theorem_generators(text, expected):
    assert theorem_generators(SemigroupSpec.parse(text), 12) == expected


def test_cumulative_s0_generators():
    gens = cumulative_s0_generators(12)
    assert gens == [HALF_LIBERATION, bracket(1), bracket(2)]
    assert FOUR_POINT_BRACKETS[0] not in gens
