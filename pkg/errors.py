"""Error types raised by the partition toolkit"""
from typing import Optional


class PartitionError(ValueError):
    """Base class for every error raised by the toolkit"""


class PartitionSyntaxError(PartitionError):
    """Partition text does not follow the grammar"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class BlockCoverError(PartitionError):
    """Blocks miss a point or name one twice"""


class PointIndexError(PartitionError):
    """A point index lies outside its row"""


class NotComposableError(PartitionError):
    """Upper row of one partition and lower row of the other differ"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (first mismatch at position {position})")
        self.position = position


class EmptyRowError(PartitionError):
    """A rotation was asked to move a point out of an empty row"""


class UnknownPointError(PartitionError):
    """A named point does not belong to the partition"""


class UnknownBlockError(PartitionError):
    """A set of points is not a block of the partition"""


class NotInP2nbError(PartitionError):
    """Partition is not a pair partition with neutral blocks"""


class NotInS0Error(PartitionError):
    """Partition is outside S_0, so its crossing distances are undefined"""


class NotASectorError(PartitionError):
    """An interval is not a sector: its boundary is not a block"""


class NotABracketError(PartitionError):
    """Partition is not a bracket"""


class NotProjectiveError(PartitionError):
    """Partition is not projective"""


class NotDualizableError(PartitionError):
    """Bracket has no dual"""


class EmptyPatternError(PartitionError):
    """Bracket patterns are non-empty subsets of the positive integers"""


class PatternIndexError(PartitionError):
    """Projection index is not an element of the pattern"""


class PatternSyntaxError(PartitionError):
    """Pattern text does not follow the grammar"""


class SemigroupSyntaxError(PartitionError):
    """Semigroup text does not follow the grammar"""


class NotAMonoidError(PartitionError):
    """Semigroup does not contain 0"""


class NotClosedError(PartitionError):
    """A set of patterns failed the category closure check"""


class TooLargeError(PartitionError):
    """Partition has more points than the closure retained"""


class BoundTooSmallError(PartitionError):
    """Closure bounds are too small for the requested frame bound"""


class UnknownSuiteError(PartitionError):
    """No verification suite is registered under the name"""
