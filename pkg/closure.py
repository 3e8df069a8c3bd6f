"""
Bounded generation of partition categories.

Partitions are searched as one-line forms (every point rotated onto the lower
row), one canonical representative per rotation class. A category contains a
partition iff it contains every rotation of it, so the class decides membership.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import config
from brackets import HALF_LIBERATION, build_bracket_from_pattern
from color_metrics import SemigroupSpec
from disjoint_set import DisjointSet
from errors import BoundTooSmallError, PartitionError, TooLargeError
from partition import Color, LineForm, Partition, from_line, relabel, to_line
from patterns import BracketPattern, PatternCategory, all_patterns

logger = logging.getLogger(__name__)

EMPTY_LINE: LineForm = ('', ())
BASE_LINE: LineForm = ('wb', (0, 0))


@dataclass(frozen=True)
class ClosureConfig:
    max_points: int = config.MAX_POINTS
    intermediate_points: int = config.INTERMEDIATE_POINTS
    max_iterations: int = config.MAX_ITERATIONS

    def __post_init__(self):
        if min(self.max_points, self.intermediate_points, self.max_iterations) < 1:
            raise PartitionError(f"Closure bounds must be positive: {self}")
        if self.intermediate_points < self.max_points:
            raise PartitionError(
                f"intermediate_points ({self.intermediate_points}) must be at least max_points ({self.max_points})"
            )

    def escalated(self, step: int) -> 'ClosureConfig':
        return ClosureConfig(self.max_points, self.intermediate_points + step, self.max_iterations)


# ---------------------------------------------------------------------------
# Operations on one-line forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def rotations(line: LineForm) -> Tuple[LineForm, ...]:
    """Distinct cyclic shifts of a line, labels renumbered"""
    colors, labels = line
    seen = []
    for s in range(max(len(colors), 1)):
        shifted = (colors[s:] + colors[:s], relabel(labels[s:] + labels[:s]))
        if shifted not in seen:
            seen.append(shifted)
    return tuple(seen)


def _successor_distances(labels: Sequence[int]) -> Tuple[int, ...]:
    """For every point, the cyclic distance to the next point of its block"""
    n = len(labels)
    first: Dict[int, int] = {}
    last: Dict[int, int] = {}
    successor = [0] * n
    for t, label in enumerate(labels):
        if label in last:
            successor[last[label]] = t - last[label]
        else:
            first[label] = t
        last[label] = t
    for label, t in last.items():
        successor[t] = first[label] + n - t
    return tuple(successor)


def canonical(line: LineForm) -> LineForm:
    """
    Representative of the rotation class of a line: the rotation with the
    least colors, ties broken by the successor distances. Labels may be any
    integers; the result is renumbered by first occurrence.
    """
    colors, labels = line
    if not colors:
        return EMPTY_LINE
    successor = _successor_distances(labels)
    best = min(
        range(len(colors)),
        key=lambda s: (colors[s:] + colors[:s], successor[s:] + successor[:s]),
    )
    return colors[best:] + colors[:best], relabel(tuple(labels[best:]) + tuple(labels[:best]))


def class_of(p: Partition) -> LineForm:
    return canonical(to_line(p))


def reflect_line(line: LineForm) -> LineForm:
    """Reverse and invert colors: the one-line form of the involution"""
    colors, labels = line
    inverted = ''.join('b' if c == 'w' else 'w' for c in reversed(colors))
    return inverted, relabel(labels[::-1])


def glue(first: LineForm, second: LineForm, limit: int) -> Set[LineForm]:
    """
    Classes obtained by joining `first` and `second` along k >= 0 points.

    The last k points of a rotation of `first` are capped against the first k
    points of a rotation of `second`, innermost pair first; every pair must be
    a turn. k = 0 is the tensor product, k >= 1 a composition of rotated
    partitions. Results with more than `limit` points are dropped.

    The result is symmetric: glue(a, b) == glue(b, a), since capping the
    junction of b·a is capping the junction of a·b after rotating both.
    """
    found = set()
    for a_colors, a_labels in rotations(first):
        offset = max(a_labels, default=-1) + 1
        na = len(a_colors)
        for b_colors, b_labels in rotations(second):
            colors = a_colors + b_colors
            labels = a_labels + tuple(x + offset for x in b_labels)
            total = len(colors)
            if total <= limit:
                found.add(canonical((colors, labels)))
            forest = DisjointSet(max(labels, default=-1) + 1)
            for k in range(1, min(na, len(b_colors)) + 1):
                i, j = na - k, na + k - 1
                if colors[i] == colors[j]:
                    break
                forest.unite(labels[i], labels[j])
                if total - 2 * k <= limit:
                    keep = list(range(i)) + list(range(j + 1, total))
                    found.add(canonical((
                        ''.join(colors[t] for t in keep),
                        relabel([forest.find(labels[t]) for t in keep]),
                    )))
    return found


def cap_turns(line: LineForm) -> Set[LineForm]:
    """
    Classes obtained by capping one cyclically adjacent turn: both points are
    removed and their blocks merged. Same as glue(line, base) at k = 2.
    """
    colors, labels = line
    n = len(colors)
    found = set()
    for i in range(n):
        j = (i + 1) % n
        if i == j or colors[i] == colors[j]:
            continue
        order = [(j + 1 + t) % n for t in range(n - 2)]
        found.add(canonical((
            ''.join(colors[t] for t in order),
            [labels[i] if labels[t] == labels[j] else labels[t] for t in order],
        )))
    return found


def _cap_junction(a_line: LineForm, b_line: LineForm, k: int) -> LineForm:
    """a·b with its k innermost junction pairs capped; the caller checked they are turns"""
    a_colors, a_labels = a_line
    b_colors, b_labels = b_line
    na = len(a_colors)
    offset = max(a_labels) + 1
    labels = list(a_labels) + [x + offset for x in b_labels]
    forest = DisjointSet(offset + max(b_labels) + 1)
    for t in range(1, k + 1):
        forest.unite(labels[na - t], labels[na + t - 1])
    return canonical((
        a_colors[:na - k] + b_colors[k:],
        [forest.find(x) for x in labels[:na - k] + labels[na + k:]],
    ))


_INVERT = str.maketrans('wb', 'bw')


def _inverted(colors: str) -> str:
    return colors.translate(_INVERT)


class _ClassIndex:
    """Known classes, their rotations by size and by leading colors"""

    def __init__(self):
        self.known: Set[LineForm] = set()
        self.by_size: Dict[int, List[Tuple[LineForm, LineForm]]] = defaultdict(list)
        self.by_prefix: Dict[Tuple[int, str], List[Tuple[LineForm, LineForm]]] = defaultdict(list)

    def add(self, line: LineForm):
        self.known.add(line)
        n = len(line[0])
        if not n:
            return
        for rotated in rotations(line):
            self.by_size[n].append((line, rotated))
            for k in range(1, n + 1):
                self.by_prefix[(n, rotated[0][:k])].append((line, rotated))

    def joins(self, line: LineForm, limit: int, skip: Set[LineForm]) -> Set[LineForm]:
        """
        Glue `line` with every known class outside `skip`, capping only as
        many junction pairs as needed to get within `limit`: a tensor product
        when both fit together, otherwise k = ceil((a + b - limit) / 2) caps.
        Larger k follow from cap_turns on the result.
        """
        found = set()
        na = len(line[0])
        for rotated in rotations(line):
            a_colors, a_labels = rotated
            offset = max(a_labels) + 1
            for nb in range(1, limit - na + 1):
                for other, (b_colors, b_labels) in self.by_size.get(nb, ()):
                    if other not in skip:
                        found.add(canonical((a_colors + b_colors, a_labels + tuple(x + offset for x in b_labels))))
            for k in range(1, na + 1):
                wanted = _inverted(a_colors[na - k:][::-1])
                for nb in (limit + 2 * k - 1 - na, limit + 2 * k - na):
                    if not k <= nb <= limit:
                        continue
                    for other, b_line in self.by_prefix.get((nb, wanted), ()):
                        if other not in skip:
                            found.add(_cap_junction(rotated, b_line, k))
        return found


def line_key(line: LineForm) -> str:
    """Text form of a line, e.g. "wbwb|0,1,1,0" """
    colors, labels = line
    return f"{colors}|{','.join(map(str, labels))}"


def parse_line_key(text: str) -> LineForm:
    colors, _, labels = text.partition('|')
    return colors, tuple(int(x) for x in labels.split(',') if x)


# ---------------------------------------------------------------------------
# Closure sets
# ---------------------------------------------------------------------------

class Membership(Enum):
    YES = 'yes'
    NO_WITHIN_BOUNDS = 'no-within-bounds'


@dataclass
class ClosureSet:
    """
    Rotation classes reached by a bounded search.

    `classes` holds every class with at most max_points points; `members`
    materializes all their partitions on demand.
    """
    classes: FrozenSet[LineForm]
    saturated: bool
    config: ClosureConfig
    iterations: int = 0
    generators: Tuple[Partition, ...] = ()
    intermediate_classes: int = field(default=0, compare=False)

    @cached_property
    def members(self) -> FrozenSet[Partition]:
        found = set()
        for line in self.classes:
            for rotated in rotations(line):
                found.update(from_line(rotated, k) for k in range(len(rotated[0]) + 1))
        return frozenset(found)

    def contains(self, p: Partition) -> Membership:
        return contains(self, p)

    def __len__(self) -> int:
        return len(self.classes)


def _seed(gens: Iterable[Partition]) -> Set[LineForm]:
    return {EMPTY_LINE, canonical(BASE_LINE)} | {class_of(g) for g in gens}


def generate(gens: Iterable[Partition], cfg: Optional[ClosureConfig] = None) -> ClosureSet:
    """
    Breadth-first closure under involution, tensor products and compositions.

    Classes up to `intermediate_points` stay in the search as operands; only
    those up to `max_points` are retained. Each round reflects and caps the
    frontier and glues it against everything known. Gluing is symmetric, so
    each unordered pair of classes is glued once, in the round the later of
    the two appears. The fixpoint equals the closure under `glue` for every
    k; only the round count differs.
    """
    cfg = cfg or ClosureConfig()
    gens = tuple(sorted(set(gens), key=str))
    limit = cfg.intermediate_points

    index = _ClassIndex()
    for line in _seed(gens):
        index.add(line)
    frontier = sorted(index.known)
    iterations = 0
    while frontier and iterations < cfg.max_iterations:
        iterations += 1
        found: Set[LineForm] = set()
        done: Set[LineForm] = set()
        for line in frontier:
            found.add(canonical(reflect_line(line)))
            if line[0]:
                if len(line[0]) - 2 <= limit:
                    found |= cap_turns(line)
                found |= index.joins(line, limit, done)
            done.add(line)
        fresh = sorted(found - index.known)
        for line in fresh:
            index.add(line)
        frontier = fresh
        logger.debug(f"Round {iterations}: {len(fresh)} new classes, {len(index.known)} known")

    saturated = not frontier
    classes = frozenset(line for line in index.known if len(line[0]) <= cfg.max_points)
    logger.info(
        f"Closure of {len(gens)} generators: {len(classes)} classes within {cfg.max_points} points "
        f"after {iterations} rounds (saturated={saturated})"
    )
    return ClosureSet(classes, saturated, cfg, iterations, gens, len(index.known))


def contains(cs: ClosureSet, p: Partition) -> Membership:
    """
    Raises:
        TooLargeError: p has more points than the closure retained
    """
    if p.size > cs.config.max_points:
        raise TooLargeError(f"{p} has {p.size} points, closure retains at most {cs.config.max_points}")
    return Membership.YES if class_of(p) in cs.classes else Membership.NO_WITHIN_BOUNDS


def bracket_patterns_of(cs: ClosureSet, frame_bound: int) -> PatternCategory:
    """Patterns w with ‖w‖ <= frame_bound whose minimal bracket Br_•(w) was generated"""
    needed = 4 * (frame_bound + 1)
    if needed > cs.config.max_points:
        raise BoundTooSmallError(
            f"Frame bound {frame_bound} needs max_points >= {needed}, closure has {cs.config.max_points}"
        )
    found = frozenset(
        w for w in all_patterns(frame_bound)
        if contains(cs, build_bracket_from_pattern(Color.BLACK, w)) is Membership.YES
    )
    category = PatternCategory(found)
    if not category.is_closed():
        logger.warning(f"Bracket patterns {category} are not closed within frame bound {frame_bound}")
    return category


# ---------------------------------------------------------------------------
# Generators of the categories I_D
# ---------------------------------------------------------------------------

def complement_pattern(d: SemigroupSpec) -> Optional[BracketPattern]:
    """ℕ \\ D as a pattern when it is finite and non-empty"""
    if not d.complement_is_finite:
        return None
    gaps = d.gaps()
    return BracketPattern.of(gaps) if gaps else None


def theorem_generators(d: SemigroupSpec, size_bound: int) -> List[Partition]:
    """
    Generators of I_D: Br_•(ℕ \\ D) (or its finite truncations Br_•({1..v} \\ D)
    when the complement is infinite) plus the half-liberation iff 0 ∉ D.
    """
    gens = []
    if d.complement_is_finite:
        pattern = complement_pattern(d)
        if pattern is not None:
            gens.append(build_bracket_from_pattern(Color.BLACK, pattern))
    else:
        v = 1
        while 4 * (v + 1) <= size_bound:
            elements = [i for i in range(1, v + 1) if not d.member(i)]
            if elements:
                gens.append(build_bracket_from_pattern(Color.BLACK, BracketPattern.of(elements)))
            v += 1
    if not d.contains_zero:
        gens.append(HALF_LIBERATION)
    return sorted(set(gens), key=str)


def cumulative_s0_generators(size_bound: int) -> List[Partition]:
    """The half-liberation and Br_•({v}) for every v with 4(v+1) <= size_bound"""
    gens = [HALF_LIBERATION]
    v = 1
    while 4 * (v + 1) <= size_bound:
        gens.append(build_bracket_from_pattern(Color.BLACK, BracketPattern.of([v])))
        v += 1
    return gens
