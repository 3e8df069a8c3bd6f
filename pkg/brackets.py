"""Brackets: projective partitions whose lower row is a sector"""
import logging
from enum import Enum
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from color_metrics import is_pair_neutral, is_s0, is_sector
from errors import (
    NotABracketError,
    NotASectorError,
    NotDualizableError,
    NotInP2nbError,
    NotProjectiveError,
)
from partition import (
    Color,
    CyclicInterval,
    Direction,
    Partition,
    Point,
    color_invert,
    compose,
    cyclic_rotate,
    erase,
    identity,
    involution,
    is_connected,
    lower,
    tensor_all,
    upper,
    verticolor_reflect,
)
from patterns import BracketPattern, all_patterns

logger = logging.getLogger(__name__)


class BracketKind(Enum):
    NOT_A_BRACKET = 'not-a-bracket'
    RESIDUAL_FIRST_KIND = 'residual-first-kind'
    RESIDUAL_SECOND_KIND_NONMINIMAL = 'residual-second-kind-nonminimal'
    MINIMAL = 'minimal'
    PLAIN_BRACKET = 'plain-bracket'

    @property
    def is_residual(self) -> bool:
        return self in (
            BracketKind.RESIDUAL_FIRST_KIND,
            BracketKind.RESIDUAL_SECOND_KIND_NONMINIMAL,
            BracketKind.MINIMAL,
        )


def is_projective(p: Partition) -> bool:
    """p equals its involution and its own square"""
    if involution(p) != p or p.lower != p.upper:
        return False
    return compose(p, p)[0] == p


def is_bracket(p: Partition) -> bool:
    if not p.lower or not is_projective(p):
        return False
    boundary = {lower(1), lower(len(p.lower))}
    return set(p.block_of(lower(1))) == boundary


def _require_bracket(p: Partition):
    if not is_bracket(p):
        raise NotABracketError(f"{p} is not a bracket")


def associated_bracket(p: Partition, sector: CyclicInterval) -> Partition:
    """
    B(p, S): the bracket whose lower row copies the sector S of p.

    Pairs inside S are drawn on both rows; a point of S whose partner lies
    outside S becomes a vertical through-string.
    """
    if not is_pair_neutral(p):
        raise NotInP2nbError(f"{p} is not a pair partition with neutral blocks")
    if not is_sector(p, sector):
        raise NotASectorError(f"{sector} is not a sector of {p}")

    inside = sector.points(p)
    slot = {pt: i for i, pt in enumerate(inside, 1)}
    colors = tuple(p.normalized_color(pt) for pt in inside)
    k = len(inside)

    blocks = [(lower(1), lower(k)), (upper(1), upper(k))]
    done = set()
    for pt in inside[1:-1]:
        i = slot[pt]
        if i in done:
            continue
        partner = next(q for q in p.block_of(pt) if q != pt)
        j = slot.get(partner)
        if j is None:
            blocks.append((lower(i), upper(i)))
        else:
            blocks.extend([(lower(i), lower(j)), (upper(i), upper(j))])
            done.add(j)
        done.add(i)
    return Partition(colors, colors, blocks)


def bracket_argument(p: Partition) -> Partition:
    """p with the outermost points of both rows erased"""
    _require_bracket(p)
    corners = {lower(1), lower(len(p.lower)), upper(1), upper(len(p.upper))}
    return erase(p, corners)


def make_bracket(c: Color, a: Partition) -> Partition:
    """Br(c | a | c̄): wrap a in an outer pair of color c ... c̄ on each row"""
    if not is_pair_neutral(a) or not is_projective(a):
        raise NotProjectiveError(f"{a} is not a projective partition with neutral blocks")
    m, k = len(a.lower), len(a.upper)
    shifted = [tuple(Point(pt.row, pt.index + 1) for pt in block) for block in a.blocks]
    blocks = [(lower(1), lower(m + 2)), (upper(1), upper(k + 2))] + shifted
    return Partition((c,) + a.upper + (c.inverse,), (c,) + a.lower + (c.inverse,), blocks)


def start_color(p: Partition) -> Color:
    _require_bracket(p)
    return p.lower[0]


def weak_inversion(p: Partition) -> Partition:
    c = start_color(p)
    return make_bracket(c.inverse, p)


def strong_inversion(p: Partition) -> Partition:
    c = start_color(p)
    inner = tensor_all([identity(c), bracket_argument(p), identity(c.inverse)])
    return make_bracket(c.inverse, inner)


def lower_turns(p: Partition, first: int, last: int) -> int:
    """Adjacent lower pairs (l_i, l_i+1) with first <= i < last that differ in color"""
    return sum(1 for i in range(first, last) if p.lower[i - 1] != p.lower[i])


def interior_turns(p: Partition) -> int:
    return lower_turns(p, 2, len(p.lower) - 1)


def is_dualizable(p: Partition) -> bool:
    if not is_bracket(p) or not is_s0(p) or verticolor_reflect(p) != p:
        return False
    m = len(p.lower)
    if m < 4 or m % 2:
        return False
    middle = (lower(m // 2), lower(m // 2 + 1))
    if p.color(middle[0]) == p.color(middle[1]):
        return False
    return all(Partition.is_through(p.block_of(pt)) for pt in middle)


def dual_bracket(p: Partition) -> Partition:
    """p†: counter-clockwise cyclic rotation by a quarter of the points"""
    if not is_dualizable(p) or p.size % 4:
        raise NotDualizableError(f"{p} is not a dualizable bracket")
    return cyclic_rotate(p, Direction.COUNTER_CLOCKWISE, p.size // 4)


def classify_bracket(p: Partition) -> BracketKind:
    if not is_bracket(p):
        return BracketKind.NOT_A_BRACKET
    connected = is_connected(p)
    turns_inside = interior_turns(p)
    if connected and turns_inside == 0:
        return BracketKind.RESIDUAL_FIRST_KIND
    if connected and turns_inside == 1 and is_dualizable(p):
        if lower_turns(p, 1, len(p.lower)) == 1 and p.lower[0] is Color.BLACK:
            return BracketKind.MINIMAL
        return BracketKind.RESIDUAL_SECOND_KIND_NONMINIMAL
    return BracketKind.PLAIN_BRACKET


def build_bracket_from_pattern(c: Color, w: BracketPattern) -> Partition:
    """
    Br_c(w): 2(‖w‖+1) points per row, the left half colored c and the right half c̄.

    Position k counts outwards from the vertical axis; k ∈ w joins the mirrored
    points on each row, k ∉ w draws two through-strings.
    """
    frame = w.frame
    half = frame + 1
    row = (c,) * half + (c.inverse,) * half
    blocks = []
    for k in range(half):
        left, right = half - k, half + 1 + k
        if k in w:
            blocks.extend([(lower(left), lower(right)), (upper(left), upper(right))])
        else:
            blocks.extend([(lower(left), upper(left)), (lower(right), upper(right))])
    return Partition(row, row, blocks)


def recover_pattern(p: Partition) -> BracketPattern:
    """The pattern w with p = Br_c(w) for a bracket laid out like Br_c"""
    m = len(p.lower)
    if m < 4 or m % 2 or not is_bracket(p):
        raise NotABracketError(f"{p} is not of the form Br_c(w)")
    half = m // 2
    elements = [k for k in range(1, half) if p.block_of(lower(half - k)) == (lower(half - k), lower(half + 1 + k))]
    pattern = BracketPattern.of(elements)
    if build_bracket_from_pattern(p.lower[0], pattern) != p:
        raise NotABracketError(f"{p} is not of the form Br_c(w)")
    return pattern


def s_w_generator(w: int) -> Partition:
    """Br(• | Id(∘)^⊗w | ∘): an outer pair enclosing w parallel white strings"""
    return make_bracket(Color.BLACK, identity([Color.WHITE] * w))


def _inner_matchings(positions: List[int], colors: Tuple[Color, ...]) -> Iterator[Dict[int, Optional[int]]]:
    """Partial matchings of lower positions into opposite-colored pairs; unmatched map to None"""
    if not positions:
        yield {}
        return
    first, rest = positions[0], positions[1:]
    for matching in _inner_matchings(rest, colors):
        yield {first: None, **matching}
    for i, partner in enumerate(rest):
        if colors[first - 1] == colors[partner - 1]:
            continue
        for matching in _inner_matchings(rest[:i] + rest[i + 1:], colors):
            yield {first: partner, partner: first, **matching}


def enumerate_brackets(lower_size: int) -> Iterator[Partition]:
    """
    Every bracket with neutral pair blocks and `lower_size` points per row.

    Through blocks of a bracket are vertical strings and the same-row pairs of
    the upper row mirror those of the lower row.
    """
    if lower_size < 2:
        return
    found = []
    for colors in product((Color.WHITE, Color.BLACK), repeat=lower_size):
        if colors[0] == colors[-1]:
            continue
        for matching in _inner_matchings(list(range(2, lower_size)), colors):
            blocks = [(lower(1), lower(lower_size)), (upper(1), upper(lower_size))]
            for i, j in matching.items():
                if j is None:
                    blocks.append((lower(i), upper(i)))
                elif i < j:
                    blocks.extend([(lower(i), lower(j)), (upper(i), upper(j))])
            found.append(Partition(colors, colors, blocks))
    found.sort(key=str)
    yield from found


FOUR_POINT_BRACKETS = (
    Partition(
        (Color.BLACK, Color.WHITE, Color.BLACK, Color.WHITE),
        (Color.BLACK, Color.WHITE, Color.BLACK, Color.WHITE),
        [(lower(1), lower(4)), (lower(2), upper(2)), (lower(3), upper(3)), (upper(1), upper(4))],
    ),
    Partition(
        (Color.WHITE, Color.BLACK, Color.WHITE, Color.BLACK),
        (Color.WHITE, Color.BLACK, Color.WHITE, Color.BLACK),
        [(lower(1), lower(4)), (lower(2), upper(2)), (lower(3), upper(3)), (upper(1), upper(4))],
    ),
)


def residual_forms(p: Partition) -> Tuple[Partition, ...]:
    """The residual brackets of S_0 attached to a minimal bracket p"""
    inverted = color_invert(p)
    return FOUR_POINT_BRACKETS + (
        p,
        inverted,
        weak_inversion(p),
        weak_inversion(inverted),
        strong_inversion(p),
        strong_inversion(inverted),
    )


def minimal_brackets(max_frame: int) -> List[Partition]:
    return [build_bracket_from_pattern(Color.BLACK, w) for w in all_patterns(max_frame)]


HALF_LIBERATION = Partition(
    (Color.WHITE, Color.BLACK, Color.WHITE),
    (Color.WHITE, Color.BLACK, Color.WHITE),
    [(lower(1), upper(3)), (lower(2), upper(2)), (lower(3), upper(1))],
)
