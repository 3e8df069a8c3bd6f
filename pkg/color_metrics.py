"""Color sums, color distances, sectors and membership predicates for P2nb, S_0, S_w and I_D"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from errors import NotInP2nbError, NotInS0Error, SemigroupSyntaxError, UnknownPointError
from partition import (
    CyclicInterval,
    Partition,
    Point,
    as_block,
    crossing_pairs,
    is_noncrossing,
)

logger = logging.getLogger(__name__)

_SEMIGROUP_PATTERN = re.compile(r'^\s*D\s*\{\s*gens\s*=\s*([0-9,\s]*?)\s*;\s*zero\s*=\s*([01])\s*\}\s*$')


@lru_cache(maxsize=256)
def _sums_table(generators: Tuple[int, ...], limit: int) -> np.ndarray:
    """reachable[n] iff n is a sum of at least one generator (n > 0)"""
    reachable = np.zeros(limit + 1, dtype=bool)
    reachable[0] = True
    for g in generators:
        for n in range(g, limit + 1):
            if reachable[n - g]:
                reachable[n] = True
    reachable[0] = False
    reachable.setflags(write=False)
    return reachable


@dataclass(frozen=True)
class SemigroupSpec:
    """
    Finite description of an additive subsemigroup D of the non-negative integers.

    D is every sum of at least one generator, plus 0 when `contains_zero`.
    No generators with contains_zero=False describes the empty semigroup.
    """
    generators: Tuple[int, ...] = ()
    contains_zero: bool = False

    def __post_init__(self):
        gens = tuple(sorted(set(int(g) for g in self.generators)))
        if any(g < 1 for g in gens):
            raise SemigroupSyntaxError(f"Generators must be positive integers, got {gens}")
        object.__setattr__(self, 'generators', gens)
        object.__setattr__(self, 'contains_zero', bool(self.contains_zero))

    def __str__(self) -> str:
        return f"D{{gens={','.join(map(str, self.generators))}; zero={int(self.contains_zero)}}}"

    @classmethod
    def parse(cls, text: str) -> 'SemigroupSpec':
        """Read the text form "D{gens=3,5; zero=1}" """
        match = _SEMIGROUP_PATTERN.match(text)
        if not match:
            raise SemigroupSyntaxError(f"Invalid semigroup description '{text}'")
        gens_text, zero = match.groups()
        items = [item.strip() for item in gens_text.split(',') if item.strip()]
        return cls(tuple(int(item) for item in items), zero == '1')

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> 'SemigroupSpec':
        """The monoid with the given finite set of positive gaps, by its minimal generators"""
        gap_set = set(gaps)
        frobenius = max(gap_set, default=0)
        members = [n for n in range(1, 2 * frobenius + 2) if n not in gap_set]
        generators: List[int] = []
        for n in members:
            if not _sums_table(tuple(generators), n)[n]:
                generators.append(n)
        return cls(tuple(generators), True)

    def as_monoid(self) -> 'SemigroupSpec':
        return SemigroupSpec(self.generators, True)

    def member(self, n: int) -> bool:
        if n < 0:
            return False
        if n == 0:
            return self.contains_zero
        return bool(_sums_table(self.generators, n)[n])

    def members_up_to(self, limit: int) -> FrozenSet[int]:
        table = _sums_table(self.generators, limit)
        found = {int(n) for n in np.flatnonzero(table)}
        if self.contains_zero:
            found.add(0)
        return frozenset(found)

    @property
    def complement_is_finite(self) -> bool:
        return bool(self.generators) and reduce(gcd, self.generators) == 1

    def gaps(self, limit: Optional[int] = None) -> Tuple[int, ...]:
        """
        Positive integers outside D.

        Without `limit` the complement must be finite; the search runs up to
        min(gens) * max(gens), past the largest gap.
        """
        if limit is None:
            if not self.complement_is_finite:
                raise ValueError(f"{self} has infinitely many gaps; pass a limit")
            limit = self.generators[0] * self.generators[-1]
        table = _sums_table(self.generators, limit)
        return tuple(n for n in range(1, limit + 1) if not table[n])

    def frobenius(self) -> Optional[int]:
        """Largest positive gap, 0 when there is none, None for infinite complements"""
        if not self.complement_is_finite:
            return None
        return max(self.gaps(), default=0)


class OrientationProfile:
    """Normalized color signs along the orientation with their prefix sums"""

    def __init__(self, p: Partition):
        self.partition = p
        self.position = p.position
        self.signs = np.array([p.normalized_color(pt).sign for pt in p.orientation], dtype=int)
        self.prefix = np.concatenate(([0], np.cumsum(self.signs))).astype(int)
        self.total = int(self.prefix[-1])

    def half_open_sum(self, i: int, j: int) -> int:
        """σ over ]i, j] in orientation positions"""
        if i == j:
            return 0
        value = int(self.prefix[j + 1] - self.prefix[i + 1])
        return value + self.total if j < i else value

    def open_sum(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self.half_open_sum(i, j) - int(self.signs[j])

    def delta(self, i: int, j: int) -> int:
        """Signed color distance between orientation positions i and j"""
        return self.half_open_sum(i, j) + (int(self.signs[i]) - int(self.signs[j])) // 2

    def matrix(self) -> np.ndarray:
        """δ for all position pairs at once"""
        n = len(self.signs)
        tail = self.prefix[1:]
        half_open = tail[None, :] - tail[:, None] + self.total * np.tri(n, n, -1, dtype=int)
        return half_open + (self.signs[:, None] - self.signs[None, :]) // 2


def _check_points(p: Partition, points: Iterable[Point]):
    for pt in points:
        if not p.has_point(pt):
            raise UnknownPointError(f"{pt} is not a point of {p}")


def color_sum(p: Partition, points: Iterable[Point]) -> int:
    points = list(points)
    _check_points(p, points)
    return sum(p.normalized_color(pt).sign for pt in points)


def total_color_sum(p: Partition) -> int:
    return sum(p.normalized_color(pt).sign for pt in p.points)


def is_pair_neutral(p: Partition) -> bool:
    """Membership in P°•_{2,nb}: every block is a pair of opposite normalized colors"""
    return all(
        len(block) == 2 and p.normalized_color(block[0]) != p.normalized_color(block[1])
        for block in p.blocks
    )


def _require_p2nb(p: Partition):
    if not is_pair_neutral(p):
        raise NotInP2nbError(f"{p} is not a pair partition with neutral blocks")


def distance_matrix(p: Partition) -> np.ndarray:
    """δ between all points, indexed by orientation position; defined on any partition"""
    return OrientationProfile(p).matrix()


def signed_distance(p: Partition, a: Point, b: Point) -> int:
    _require_p2nb(p)
    _check_points(p, (a, b))
    profile = OrientationProfile(p)
    return profile.delta(profile.position[a], profile.position[b])


def absolute_distance(p: Partition, a: Point, b: Point) -> int:
    return abs(signed_distance(p, a, b))


def _leg_sums(p: Partition, profile: OrientationProfile) -> List[int]:
    """σ strictly between the two legs of every block, following the orientation"""
    return [
        profile.open_sum(profile.position[block[0]], profile.position[block[1]])
        for block in p.blocks
    ]


def sectors(p: Partition) -> Tuple[CyclicInterval, ...]:
    """Closed intervals whose two boundary points form a block: two per pair block"""
    found = []
    for block in p.blocks:
        if len(block) == 2:
            a, b = block
            found.extend([CyclicInterval(a, b), CyclicInterval(b, a)])
        elif len(block) == 1:
            found.append(CyclicInterval(block[0], block[0]))
    return tuple(found)


def is_sector(p: Partition, interval: CyclicInterval) -> bool:
    if not (interval.openness.includes_start and interval.openness.includes_end):
        return False
    if not (p.has_point(interval.start) and p.has_point(interval.end)):
        return False
    return set(p.block_of(interval.start)) == {interval.start, interval.end}


def is_s0(p: Partition) -> bool:
    if not is_pair_neutral(p):
        return False
    return all(s == 0 for s in _leg_sums(p, OrientationProfile(p)))


def in_s_w(p: Partition, w: int) -> bool:
    """Between the legs of every block the color sum is a multiple of w (w = 0: equal to 0)"""
    if w < 0:
        raise ValueError(f"w must be non-negative, got {w}")
    if not is_pair_neutral(p):
        return False
    sums = _leg_sums(p, OrientationProfile(p))
    if w == 0:
        return all(s == 0 for s in sums)
    return all(s % w == 0 for s in sums)


def block_distance(p: Partition, b1: Iterable[Point], b2: Iterable[Point]) -> int:
    """
    Signed color distance between two blocks of a partition in S_0.

    Raises:
        NotInS0Error: representatives would not agree outside S_0
        UnknownBlockError: b1 or b2 is not a block of p
    """
    if not is_s0(p):
        raise NotInS0Error(f"{p} is not in S_0")
    first, second = as_block(p, b1), as_block(p, b2)
    profile = OrientationProfile(p)
    return profile.delta(profile.position[first[0]], profile.position[second[0]])


def crossing_distances(p: Partition) -> FrozenSet[int]:
    """A(p): absolute color distances of all crossing block pairs"""
    if not is_s0(p):
        raise NotInS0Error(f"{p} is not in S_0")
    profile = OrientationProfile(p)
    position = profile.position
    return frozenset(
        abs(profile.delta(position[p.blocks[i][0]], position[p.blocks[j][0]]))
        for i, j in crossing_pairs(p)
    )


def semigroup_member(d: SemigroupSpec, n: int) -> bool:
    return d.member(n)


def in_i_d(p: Partition, d: SemigroupSpec) -> bool:
    """p is in S_0 and no two crossing blocks lie at a distance in D"""
    if not is_s0(p):
        return False
    return not any(d.member(distance) for distance in crossing_distances(p))


def is_nc_p2nb(p: Partition) -> bool:
    return is_pair_neutral(p) and is_noncrossing(p)
