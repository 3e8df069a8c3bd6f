"""Two-colored partitions: canonical representation, text codec and structural operations"""
import logging
from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from disjoint_set import DisjointSet
from errors import (
    BlockCoverError,
    EmptyRowError,
    NotComposableError,
    PartitionError,
    PartitionSyntaxError,
    PointIndexError,
    UnknownBlockError,
    UnknownPointError,
)

logger = logging.getLogger(__name__)


class Color(Enum):
    WHITE = 'w'
    BLACK = 'b'

    @property
    def inverse(self) -> 'Color':
        return Color.BLACK if self is Color.WHITE else Color.WHITE

    @property
    def sign(self) -> int:
        """Density in color sums: white counts +1, black counts -1"""
        return 1 if self is Color.WHITE else -1

    @property
    def symbol(self) -> str:
        return '∘' if self is Color.WHITE else '•'

    @classmethod
    def from_text(cls, text: str) -> 'Color':
        aliases = {
            'w': cls.WHITE, 'white': cls.WHITE, '∘': cls.WHITE,
            'b': cls.BLACK, 'black': cls.BLACK, '•': cls.BLACK,
        }
        key = text.strip().lower()
        if key not in aliases:
            raise PartitionSyntaxError(f"Unknown color '{text}'")
        return aliases[key]


class Row(IntEnum):
    LOWER = 0
    UPPER = 1

    @property
    def tag(self) -> str:
        return 'l' if self is Row.LOWER else 'u'


class Point(NamedTuple):
    """A point of a partition: row plus 1-based index from the left"""
    row: Row
    index: int

    def __str__(self) -> str:
        return f"{self.row.tag}{self.index}"

    @classmethod
    def parse(cls, text: str) -> 'Point':
        text = text.strip()
        digits = text[1:]
        if len(text) < 2 or text[0] not in 'lu' or not digits.isdecimal() or int(digits) < 1:
            raise PartitionSyntaxError(f"Invalid point '{text}'")
        return cls(Row.LOWER if text[0] == 'l' else Row.UPPER, int(digits))


def lower(index: int) -> Point:
    return Point(Row.LOWER, index)


def upper(index: int) -> Point:
    return Point(Row.UPPER, index)


Block = Tuple[Point, ...]
ColorRow = Tuple[Color, ...]
# Normalized colors along the orientation ('w'/'b') and first-occurrence block labels
LineForm = Tuple[str, Tuple[int, ...]]


@dataclass(frozen=True)
class Partition:
    """
    Two-colored partition of an upper and a lower row of points.

    Blocks are stored canonically: points sorted lower-before-upper by index,
    blocks sorted by their first point. Two partitions are equal exactly when
    their serializations agree.
    """
    upper: ColorRow
    lower: ColorRow
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        upper_row = tuple(Color(c) for c in self.upper)
        lower_row = tuple(Color(c) for c in self.lower)
        lengths = {Row.LOWER: len(lower_row), Row.UPPER: len(upper_row)}

        seen = set()
        canonical = []
        for block in self.blocks:
            points = []
            for raw in block:
                point = Point(Row(raw[0]), int(raw[1]))
                if not 1 <= point.index <= lengths[point.row]:
                    raise PointIndexError(
                        f"Point {point} outside its row of length {lengths[point.row]}"
                    )
                if point in seen:
                    raise BlockCoverError(f"Point {point} appears in more than one place")
                seen.add(point)
                points.append(point)
            if not points:
                raise BlockCoverError("Blocks must be non-empty")
            canonical.append(tuple(sorted(points)))

        if len(seen) != lengths[Row.LOWER] + lengths[Row.UPPER]:
            missing = next(
                pt for pt in _row_points(lengths[Row.LOWER], lengths[Row.UPPER]) if pt not in seen
            )
            raise BlockCoverError(f"Point {missing} belongs to no block")

        object.__setattr__(self, 'upper', upper_row)
        object.__setattr__(self, 'lower', lower_row)
        object.__setattr__(self, 'blocks', tuple(sorted(canonical)))

    def __str__(self) -> str:
        return serialize(self)

    @property
    def size(self) -> int:
        return len(self.upper) + len(self.lower)

    @property
    def points(self) -> Tuple[Point, ...]:
        return _row_points(len(self.lower), len(self.upper))

    def has_point(self, point: Point) -> bool:
        row = self.lower if point.row is Row.LOWER else self.upper
        return 1 <= point.index <= len(row)

    def color(self, point: Point) -> Color:
        row = self.lower if point.row is Row.LOWER else self.upper
        return row[point.index - 1]

    def normalized_color(self, point: Point) -> Color:
        """Native color on the lower row, inverted color on the upper row"""
        native = self.color(point)
        return native if point.row is Row.LOWER else native.inverse

    @cached_property
    def block_index(self) -> Dict[Point, int]:
        return {pt: i for i, block in enumerate(self.blocks) for pt in block}

    def block_of(self, point: Point) -> Block:
        if point not in self.block_index:
            raise UnknownPointError(f"{point} is not a point of {self}")
        return self.blocks[self.block_index[point]]

    @cached_property
    def orientation(self) -> Tuple[Point, ...]:
        return tuple(lower(i) for i in range(1, len(self.lower) + 1)) + tuple(
            upper(j) for j in range(len(self.upper), 0, -1)
        )

    @cached_property
    def position(self) -> Dict[Point, int]:
        return {pt: i for i, pt in enumerate(self.orientation)}

    @property
    def is_pair(self) -> bool:
        return all(len(block) == 2 for block in self.blocks)

    @staticmethod
    def is_through(block: Block) -> bool:
        rows = {pt.row for pt in block}
        return len(rows) == 2


def _row_points(lower_count: int, upper_count: int) -> Tuple[Point, ...]:
    return tuple(lower(i) for i in range(1, lower_count + 1)) + tuple(
        upper(j) for j in range(1, upper_count + 1)
    )


EMPTY = Partition((), (), ())


def identity(colors: Union[Color, Iterable[Color]]) -> Partition:
    """Vertical strings, one per color: Id(c1) ⊗ ... ⊗ Id(cn)"""
    row = (colors,) if isinstance(colors, Color) else tuple(colors)
    return Partition(row, row, [(lower(i), upper(i)) for i in range(1, len(row) + 1)])


def cup(left: Color, right: Color) -> Partition:
    return Partition((), (left, right), [(lower(1), lower(2))])


# ---------------------------------------------------------------------------
# Text codec
# ---------------------------------------------------------------------------

def serialize(p: Partition) -> str:
    colors = lambda row: ''.join(c.value for c in row)
    blocks = ';'.join(','.join(str(pt) for pt in block) for block in p.blocks)
    return f"U[{colors(p.upper)}] L[{colors(p.lower)}] B{{{blocks}}}"


class _Parser:
    """Recursive-descent reader for the partition grammar"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def _expect(self, char: str):
        if self._peek() != char:
            raise PartitionSyntaxError(f"Expected '{char}'", self.pos)
        self.pos += 1

    def _colors(self) -> ColorRow:
        colors = []
        while self._peek() in ('w', 'b'):
            colors.append(Color(self.text[self.pos]))
            self.pos += 1
        return tuple(colors)

    def _point(self) -> Point:
        tag = self._peek()
        if tag not in ('l', 'u'):
            raise PartitionSyntaxError("Expected a point such as 'l1' or 'u2'", self.pos)
        self.pos += 1
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in '0123456789':
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits or int(digits) < 1:
            raise PartitionSyntaxError("Expected a positive point index", start)
        return Point(Row.LOWER if tag == 'l' else Row.UPPER, int(digits))

    def _blocks(self) -> List[List[Point]]:
        blocks: List[List[Point]] = []
        if self._peek() == '}':
            return blocks
        while True:
            block = [self._point()]
            while self._peek() == ',':
                self.pos += 1
                block.append(self._point())
            blocks.append(block)
            if self._peek() != ';':
                return blocks
            self.pos += 1

    def parse(self) -> Partition:
        self._expect('U')
        self._expect('[')
        upper_row = self._colors()
        self._expect(']')
        self._expect('L')
        self._expect('[')
        lower_row = self._colors()
        self._expect(']')
        self._expect('B')
        self._expect('{')
        blocks = self._blocks()
        self._expect('}')
        if self._peek():
            raise PartitionSyntaxError("Unexpected trailing text", self.pos)
        return Partition(upper_row, lower_row, blocks)


def parse(text: str) -> Partition:
    """
    Read a partition from its text form, e.g. "U[wbw] L[wbw] B{l1,u3;l2,u2;l3,u1}".

    Raises:
        PartitionSyntaxError: text does not follow the grammar
        BlockCoverError: a point is missing from the blocks or repeated
        PointIndexError: a point index exceeds its row
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Category operations
# ---------------------------------------------------------------------------

def _remap(p: Partition, upper_row: Sequence[Color], lower_row: Sequence[Color], move) -> Partition:
    return Partition(tuple(upper_row), tuple(lower_row), [tuple(move(pt) for pt in b) for b in p.blocks])


def tensor(p: Partition, q: Partition) -> Partition:
    """Place q to the right of p"""
    shift = {Row.LOWER: len(p.lower), Row.UPPER: len(p.upper)}
    shifted = [tuple(Point(pt.row, pt.index + shift[pt.row]) for pt in b) for b in q.blocks]
    return Partition(p.upper + q.upper, p.lower + q.lower, list(p.blocks) + shifted)


def tensor_all(parts: Iterable[Partition]) -> Partition:
    result = EMPTY
    for part in parts:
        result = tensor(result, part)
    return result


def involution(p: Partition) -> Partition:
    swap = lambda pt: Point(Row.UPPER if pt.row is Row.LOWER else Row.LOWER, pt.index)
    return _remap(p, p.lower, p.upper, swap)


def compose(p: Partition, q: Partition) -> Tuple[Partition, int]:
    """
    Stack q on top of p and join them along p's upper row.

    Returns:
        The composite (lower row of p, upper row of q) and the number of
        closed loops formed entirely by middle points, which are dropped.

    Raises:
        NotComposableError: q's lower row differs from p's upper row
    """
    if q.lower != p.upper:
        position = next(
            (i for i, (a, b) in enumerate(zip(p.upper, q.lower), 1) if a != b),
            min(len(p.upper), len(q.lower)) + 1,
        )
        raise NotComposableError(
            f"Upper row of {p} does not match lower row of {q}", position
        )

    m, k, r = len(p.lower), len(p.upper), len(q.upper)
    forest = DisjointSet(m + k + r)

    def join(nodes: List[int]):
        for node in nodes[1:]:
            forest.unite(nodes[0], node)

    for block in p.blocks:
        join([pt.index - 1 if pt.row is Row.LOWER else m + pt.index - 1 for pt in block])
    for block in q.blocks:
        join([m + pt.index - 1 if pt.row is Row.LOWER else m + k + pt.index - 1 for pt in block])

    blocks = []
    loops = 0
    for group in forest.to_list():
        kept = [lower(i + 1) for i in group if i < m] + [upper(i - m - k + 1) for i in group if i >= m + k]
        if kept:
            blocks.append(kept)
        else:
            loops += 1
    return Partition(q.upper, p.lower, blocks), loops


def color_invert(p: Partition) -> Partition:
    return Partition(
        tuple(c.inverse for c in p.upper), tuple(c.inverse for c in p.lower), p.blocks
    )


def reflect(p: Partition) -> Partition:
    """Reverse both rows"""
    lengths = {Row.LOWER: len(p.lower), Row.UPPER: len(p.upper)}
    mirror = lambda pt: Point(pt.row, lengths[pt.row] - pt.index + 1)
    return _remap(p, p.upper[::-1], p.lower[::-1], mirror)


def verticolor_reflect(p: Partition) -> Partition:
    return color_invert(reflect(p))


class Corner(Enum):
    UPPER_LEFT_DOWN = 'upper-left-down'
    UPPER_RIGHT_DOWN = 'upper-right-down'
    LOWER_LEFT_UP = 'lower-left-up'
    LOWER_RIGHT_UP = 'lower-right-up'

    @property
    def inverse(self) -> 'Corner':
        return _INVERSE_CORNER[self]


_INVERSE_CORNER = {
    Corner.UPPER_LEFT_DOWN: Corner.LOWER_LEFT_UP,
    Corner.LOWER_LEFT_UP: Corner.UPPER_LEFT_DOWN,
    Corner.UPPER_RIGHT_DOWN: Corner.LOWER_RIGHT_UP,
    Corner.LOWER_RIGHT_UP: Corner.UPPER_RIGHT_DOWN,
}


class Direction(Enum):
    CLOCKWISE = 'clockwise'
    COUNTER_CLOCKWISE = 'counter-clockwise'


def rotate(p: Partition, corner: Corner) -> Partition:
    """
    Move the point at a corner to the other row, inverting its color.

    Raises:
        EmptyRowError: the row the point leaves is empty
    """
    m, k = len(p.lower), len(p.upper)
    source_empty = k == 0 if corner in (Corner.UPPER_LEFT_DOWN, Corner.UPPER_RIGHT_DOWN) else m == 0
    if source_empty:
        raise EmptyRowError(f"Cannot rotate {corner.value}: source row of {p} is empty")

    if corner is Corner.UPPER_LEFT_DOWN:
        def move(pt: Point) -> Point:
            if pt.row is Row.LOWER:
                return lower(pt.index + 1)
            return lower(1) if pt.index == 1 else upper(pt.index - 1)
        return _remap(p, p.upper[1:], (p.upper[0].inverse,) + p.lower, move)

    if corner is Corner.UPPER_RIGHT_DOWN:
        move = lambda pt: lower(m + 1) if pt == upper(k) else pt
        return _remap(p, p.upper[:-1], p.lower + (p.upper[-1].inverse,), move)

    if corner is Corner.LOWER_LEFT_UP:
        def move(pt: Point) -> Point:
            if pt.row is Row.UPPER:
                return upper(pt.index + 1)
            return upper(1) if pt.index == 1 else lower(pt.index - 1)
        return _remap(p, (p.lower[0].inverse,) + p.upper, p.lower[1:], move)

    move = lambda pt: upper(k + 1) if pt == lower(m) else pt
    return _remap(p, p.upper + (p.lower[-1].inverse,), p.lower[:-1], move)


def cyclic_rotate(p: Partition, direction: Direction, steps: int = 1) -> Partition:
    """Shift the row split one point along the orientation per step"""
    if steps < 0:
        raise PartitionError("steps must be non-negative")
    for _ in range(steps):
        if direction is Direction.CLOCKWISE:
            p = rotate(rotate(p, Corner.LOWER_LEFT_UP), Corner.UPPER_RIGHT_DOWN)
        else:
            p = rotate(rotate(p, Corner.UPPER_LEFT_DOWN), Corner.LOWER_RIGHT_UP)
    return p


def erase(p: Partition, points: Iterable[Point]) -> Partition:
    """
    Remove `points`, merging what is left of every block they touched into one block.

    Raises:
        UnknownPointError: a point does not belong to p
    """
    removed = set(points)
    unknown = sorted(pt for pt in removed if not p.has_point(pt))
    if unknown:
        raise UnknownPointError(f"{unknown[0]} is not a point of {p}")
    if not removed:
        return p

    touched = [b for b in p.blocks if any(pt in removed for pt in b)]
    blocks = [b for b in p.blocks if b not in touched]
    merged = tuple(pt for b in touched for pt in b if pt not in removed)
    if merged:
        blocks.append(merged)

    renumber: Dict[Point, Point] = {}
    for row, colors in ((Row.LOWER, p.lower), (Row.UPPER, p.upper)):
        survivors = [i for i in range(1, len(colors) + 1) if Point(row, i) not in removed]
        renumber.update({Point(row, old): Point(row, new) for new, old in enumerate(survivors, 1)})

    keep = lambda row, colors: tuple(c for i, c in enumerate(colors, 1) if Point(row, i) not in removed)
    return Partition(
        keep(Row.UPPER, p.upper),
        keep(Row.LOWER, p.lower),
        [tuple(renumber[pt] for pt in b) for b in blocks],
    )


# ---------------------------------------------------------------------------
# Orientation and crossings
# ---------------------------------------------------------------------------

def orientation_order(p: Partition) -> Tuple[Point, ...]:
    """Cyclic order l1..lm, uk..u1; the first point follows the last"""
    return p.orientation


def as_block(p: Partition, block: Iterable[Point]) -> Block:
    candidate = tuple(sorted(Point(Row(pt[0]), int(pt[1])) for pt in block))
    if candidate not in p.blocks:
        raise UnknownBlockError(f"{{{','.join(map(str, candidate))}}} is not a block of {p}")
    return candidate


def positions_cross(cuts: Sequence[int], others: Iterable[int]) -> bool:
    """Whether `others` meets two different arcs of the circle cut at sorted `cuts`"""
    arcs = {bisect_right(cuts, x) % len(cuts) for x in others}
    return len(arcs) > 1


def crossing(p: Partition, b1: Iterable[Point], b2: Iterable[Point]) -> bool:
    first = as_block(p, b1)
    second = as_block(p, b2)
    if first == second:
        return False
    position = p.position
    return positions_cross(sorted(position[pt] for pt in first), [position[pt] for pt in second])


def crossing_pairs(p: Partition) -> Iterator[Tuple[int, int]]:
    """Index pairs (i, j), i < j, of crossing blocks"""
    position = p.position
    cuts = [sorted(position[pt] for pt in block) for block in p.blocks]
    for i, j in combinations(range(len(p.blocks)), 2):
        if positions_cross(cuts[i], cuts[j]):
            yield i, j


def connected_components(p: Partition) -> Tuple[Tuple[Block, ...], ...]:
    """Classes of blocks under the transitive closure of crossing"""
    forest = DisjointSet(len(p.blocks))
    for i, j in crossing_pairs(p):
        forest.unite(i, j)
    return tuple(tuple(p.blocks[i] for i in group) for group in forest.to_list())


def is_connected(p: Partition) -> bool:
    return len(connected_components(p)) == 1


def is_noncrossing(p: Partition) -> bool:
    return next(crossing_pairs(p), None) is None


class Openness(Enum):
    CLOSED_CLOSED = 'closed-closed'
    OPEN_OPEN = 'open-open'
    OPEN_CLOSED = 'open-closed'
    CLOSED_OPEN = 'closed-open'

    @property
    def includes_start(self) -> bool:
        return self in (Openness.CLOSED_CLOSED, Openness.CLOSED_OPEN)

    @property
    def includes_end(self) -> bool:
        return self in (Openness.CLOSED_CLOSED, Openness.OPEN_CLOSED)


@dataclass(frozen=True)
class CyclicInterval:
    """Interval from `start` to `end` following the orientation of a partition"""
    start: Point
    end: Point
    openness: Openness = Openness.CLOSED_CLOSED

    def __str__(self) -> str:
        left = '[' if self.openness.includes_start else ']'
        right = ']' if self.openness.includes_end else '['
        return f"{left}{self.start},{self.end}{right}"

    def points(self, p: Partition) -> Tuple[Point, ...]:
        for pt in (self.start, self.end):
            if not p.has_point(pt):
                raise UnknownPointError(f"{pt} is not a point of {p}")
        order = p.orientation
        i = p.position[self.start]
        length = (p.position[self.end] - i) % len(order)
        span = [order[(i + t) % len(order)] for t in range(length + 1)]
        if not self.openness.includes_start:
            span = span[1:]
        if not self.openness.includes_end:
            span = span[:-1]
        return tuple(span)

    def contains(self, p: Partition, point: Point) -> bool:
        return point in self.points(p)


# ---------------------------------------------------------------------------
# One-line forms and enumeration
# ---------------------------------------------------------------------------

def relabel(labels: Sequence[int]) -> Tuple[int, ...]:
    """Renumber labels by first occurrence"""
    names: Dict[int, int] = {}
    return tuple(names.setdefault(label, len(names)) for label in labels)


def to_line(p: Partition) -> LineForm:
    """All points rotated onto one row: normalized colors along the orientation"""
    colors = ''.join(p.normalized_color(pt).value for pt in p.orientation)
    return colors, relabel(p.block_index[pt] for pt in p.orientation)


def from_line(line: LineForm, upper_count: int = 0) -> Partition:
    """Inverse of to_line for a chosen number of upper points"""
    colors, labels = line
    n = len(colors)
    m = n - upper_count
    if not 0 <= upper_count <= n:
        raise PartitionError(f"Cannot place {upper_count} of {n} points on the upper row")

    groups: Dict[int, List[Point]] = {}
    for t, label in enumerate(labels):
        groups.setdefault(label, []).append(lower(t + 1) if t < m else upper(n - t))
    lower_row = tuple(Color(c) for c in colors[:m])
    upper_row = tuple(Color(colors[t]).inverse for t in range(n - 1, m - 1, -1))
    return Partition(upper_row, lower_row, list(groups.values()))


def perfect_matchings(items: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], list(items[1:])
    for i, partner in enumerate(rest):
        for matching in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + matching


def _pair_lines(total_points: int, neutral: bool) -> Iterator[LineForm]:
    if total_points < 0 or total_points % 2:
        raise PartitionError(f"total_points must be even and non-negative, got {total_points}")
    for matching in perfect_matchings(list(range(total_points))):
        labels = [0] * total_points
        for label, (a, b) in enumerate(matching):
            labels[a] = labels[b] = label
        labels = relabel(labels)
        if neutral:
            for choice in product('wb', repeat=total_points // 2):
                colors = [''] * total_points
                for (a, b), c in zip(matching, choice):
                    colors[a] = c
                    colors[b] = 'b' if c == 'w' else 'w'
                yield ''.join(colors), labels
        else:
            for colors in product('wb', repeat=total_points):
                yield ''.join(colors), labels


def _enumerate(total_points: int, neutral: bool) -> Iterator[Partition]:
    found = [
        from_line(line, k)
        for line in _pair_lines(total_points, neutral)
        for k in range(total_points + 1)
    ]
    found.sort(key=serialize)
    logger.debug(f"Enumerated {len(found)} pair partitions on {total_points} points")
    yield from found


def enumerate_p2nb(total_points: int) -> Iterator[Partition]:
    """Every pair partition with neutral blocks on `total_points` points, by serialization"""
    return _enumerate(total_points, neutral=True)


def enumerate_pair_partitions(total_points: int) -> Iterator[Partition]:
    """Every two-colored pair partition on `total_points` points, by serialization"""
    return _enumerate(total_points, neutral=False)
