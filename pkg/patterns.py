"""Bracket patterns, their categories and the correspondence with submonoids of (ℕ₀,+)"""
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from color_metrics import SemigroupSpec
from errors import (
    EmptyPatternError,
    NotAMonoidError,
    NotClosedError,
    PatternIndexError,
    PatternSyntaxError,
)

logger = logging.getLogger(__name__)

_PATTERN_TEXT = re.compile(r'^\s*\{?\s*([0-9,\s]*?)\s*\}?\s*$')


@dataclass(frozen=True, order=True)
class BracketPattern:
    """
    Non-empty finite set of positive integers, stored as a bitmask.

    Bit i is set iff i belongs to the pattern, so ordering by mask orders by
    frame first.
    """
    mask: int

    def __post_init__(self):
        if self.mask & 1:
            raise EmptyPatternError("Bracket patterns contain positive integers only")
        if self.mask <= 0:
            raise EmptyPatternError("Bracket patterns are non-empty")

    @classmethod
    def of(cls, elements: Iterable[int]) -> 'BracketPattern':
        mask = 0
        for element in elements:
            if element < 1:
                raise EmptyPatternError(f"Bracket patterns contain positive integers only, got {element}")
            mask |= 1 << element
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> 'BracketPattern':
        """Read "{1,2,5}" (braces optional)"""
        match = _PATTERN_TEXT.match(text)
        if not match:
            raise PatternSyntaxError(f"Invalid pattern '{text}'")
        items = [item.strip() for item in match.group(1).split(',') if item.strip()]
        if not all(item.isdecimal() for item in items):
            raise PatternSyntaxError(f"Invalid pattern '{text}'")
        return cls.of(int(item) for item in items)

    @property
    def frame(self) -> int:
        return self.mask.bit_length() - 1

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.frame + 1) if self.mask >> i & 1)

    def __contains__(self, element: int) -> bool:
        return element >= 0 and bool(self.mask >> element & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return bin(self.mask).count('1')

    def __str__(self) -> str:
        return '{' + ','.join(map(str, self.elements)) + '}'

    def issubset(self, other: 'BracketPattern') -> bool:
        return self.mask & ~other.mask == 0


def all_patterns(frame_bound: int) -> List[BracketPattern]:
    """Every pattern with frame at most `frame_bound`, ascending"""
    return [BracketPattern(mask) for mask in range(2, 1 << (frame_bound + 1), 2)]


def superpose(w: BracketPattern, v: BracketPattern) -> BracketPattern:
    return BracketPattern(w.mask | v.mask)


def project(w: BracketPattern, j: int) -> BracketPattern:
    """The j-projection {i ∈ w : i <= j}"""
    if j not in w or j < 1:
        raise PatternIndexError(f"{j} is not an element of {w}")
    return BracketPattern(w.mask & ((1 << (j + 1)) - 1))


def dual(w: BracketPattern) -> BracketPattern:
    """{‖w‖ - i : 0 <= i < ‖w‖, i ∉ w}"""
    frame = w.frame
    mask = 0
    for i in range(frame):
        if i not in w:
            mask |= 1 << (frame - i)
    return BracketPattern(mask)


def completion_mask(mask: int) -> int:
    """Bitmask of {j - i : j ∈ w, i ∉ w, 0 <= i < j}"""
    frame = mask.bit_length() - 1
    result = 0
    for j in range(1, frame + 1):
        if mask >> j & 1:
            for i in range(j):
                if not mask >> i & 1:
                    result |= 1 << (j - i)
    return result


def completion(w: BracketPattern) -> BracketPattern:
    return BracketPattern(completion_mask(w.mask))


@dataclass(frozen=True)
class PatternCategory:
    """Finite set of bracket patterns, possibly empty"""
    patterns: FrozenSet[BracketPattern] = field(default_factory=frozenset)

    def __contains__(self, w: BracketPattern) -> bool:
        return w in self.patterns

    def __iter__(self) -> Iterator[BracketPattern]:
        return iter(sorted(self.patterns))

    def __len__(self) -> int:
        return len(self.patterns)

    def __str__(self) -> str:
        return '{' + ', '.join(str(w) for w in self) + '}'

    @property
    def frames(self) -> FrozenSet[int]:
        return frozenset(w.frame for w in self.patterns)

    def union_completion(self) -> FrozenSet[int]:
        """∪A(𝔚)"""
        mask = 0
        for w in self.patterns:
            mask |= completion_mask(w.mask)
        return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)

    def union(self) -> Optional[BracketPattern]:
        mask = 0
        for w in self.patterns:
            mask |= w.mask
        return BracketPattern(mask) if mask else None

    def is_closed(self) -> bool:
        """Closed under duals, projections and pairwise superposition"""
        patterns = self.patterns
        for w in patterns:
            if dual(w) not in patterns:
                return False
            if any(project(w, j) not in patterns for j in w):
                return False
        masks = {w.mask for w in patterns}
        return all(a | b in masks for a in masks for b in masks if a < b)


def pattern_closure(gens: Iterable[BracketPattern]) -> PatternCategory:
    """⟨⟨gens⟩⟩ by fixed-point iteration; frames never grow, so this terminates"""
    known = set()
    queue = deque(sorted(set(gens)))
    while queue:
        w = queue.popleft()
        if w in known:
            continue
        partners = list(known)
        known.add(w)
        candidates = [dual(w)] + [project(w, j) for j in w] + [superpose(w, v) for v in partners]
        queue.extend(c for c in candidates if c not in known)
    return PatternCategory(frozenset(known))


def generated_category_characterization(w: BracketPattern) -> PatternCategory:
    """{w' : A(w') ⊆ A(w)} over all frames up to ‖w‖"""
    target = completion_mask(w.mask)
    return PatternCategory(frozenset(
        v for v in all_patterns(w.frame) if completion_mask(v.mask) & ~target == 0
    ))


def category_of_monoid(m: SemigroupSpec, frame_bound: int) -> PatternCategory:
    """W_M cut at `frame_bound`: patterns whose completion avoids M"""
    if not m.contains_zero:
        raise NotAMonoidError(f"{m} does not contain 0")
    members = m.members_up_to(frame_bound)
    mask = sum(1 << n for n in members)
    return PatternCategory(frozenset(
        w for w in all_patterns(frame_bound) if completion_mask(w.mask) & mask == 0
    ))


@dataclass(frozen=True)
class MonoidDescription:
    """
    Submonoid of (ℕ₀,+) given by its gap set.

    Exact up to `bound`; beyond it every integer is taken to be a member.
    """
    gaps: FrozenSet[int]
    bound: Optional[int] = None

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def __str__(self) -> str:
        frobenius = max(self.gaps, default=0)
        listed = [n for n in range(frobenius + 4) if n not in self.gaps]
        return '{' + ','.join(map(str, listed)) + ',…}'

    @property
    def frobenius(self) -> int:
        return max(self.gaps, default=0)

    def minimal_generators(self) -> Tuple[int, ...]:
        return minimal_generators(self)

    def to_semigroup_spec(self) -> SemigroupSpec:
        return SemigroupSpec(self.minimal_generators(), True)


def minimal_generators(monoid: MonoidDescription) -> Tuple[int, ...]:
    """Members that are not sums of two smaller non-zero members"""
    return SemigroupSpec.from_gaps(monoid.gaps).generators


def infer_monoid(cat: PatternCategory, bound: Optional[int] = None) -> MonoidDescription:
    """
    ℕ₀ minus the union of completions of a pattern category.

    Raises:
        NotClosedError: cat is not closed under the pattern operations
    """
    if not cat.is_closed():
        raise NotClosedError(f"{cat} is not a bracket pattern category")
    gaps = cat.union_completion()
    monoid = MonoidDescription(gaps, bound)
    limit = 2 * monoid.frobenius + 1
    if not is_additively_closed(gaps, limit):
        raise NotClosedError(f"Complement of {sorted(gaps)} is not additively closed")
    return monoid


def is_additively_closed(gaps: Iterable[int], limit: int) -> bool:
    """ℕ₀ minus `gaps` is closed under sums up to `limit`"""
    gap_set = set(gaps)
    members = [n for n in range(limit + 1) if n not in gap_set]
    return all(
        a + b > limit or a + b not in gap_set
        for i, a in enumerate(members) for b in members[i:]
    )


class NumericalSemigroupData(NamedTuple):
    gap_set: FrozenSet[int]
    genus: int
    frobenius: int


def numerical_semigroup_data(w: BracketPattern) -> NumericalSemigroupData:
    gaps = completion(w)
    gap_set = frozenset(gaps.elements)
    if not is_additively_closed(gap_set, 3 * w.frame):
        raise NotClosedError(f"Complement of A({w}) is not additively closed")
    return NumericalSemigroupData(gap_set, len(gap_set), w.frame)
