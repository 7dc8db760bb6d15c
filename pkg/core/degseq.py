"""
Degree sequence primitives: abbreviated sequences, split partitions and
the four split relatives.

An abbreviated sequence is a strictly decreasing list of (degree,
multiplicity) entries. A paired sequence carries the clique part and the
stable part of a split partition separately.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import groupby
from typing import Dict, Iterable, List, Tuple, Union

from core.errors import InvalidInput

logger = logging.getLogger(__name__)

Entries = Tuple[Tuple[int, int], ...]


class RelativeTag(Enum):
    IDENTITY = "identity"
    COMPLEMENT = "complement"
    INVERSE = "inverse"
    COMPLEMENT_INVERSE = "complement_inverse"


RELATIVE_ORDER = (
    RelativeTag.IDENTITY,
    RelativeTag.COMPLEMENT,
    RelativeTag.INVERSE,
    RelativeTag.COMPLEMENT_INVERSE,
)


def _check_entries(entries: Entries, what: str) -> None:
    previous = None
    for entry in entries:
        if len(entry) != 2:
            raise InvalidInput(f"{what}: malformed entry {entry!r}")
        d, r = entry
        if d < 0:
            raise InvalidInput(f"{what}: negative degree {d}")
        if r < 1:
            raise InvalidInput(f"{what}: multiplicity {r} for degree {d} must be >= 1")
        if previous is not None and d >= previous:
            raise InvalidInput(f"{what}: degrees must be strictly decreasing, got {previous} then {d}")
        previous = d


def format_entries(entries: Entries) -> str:
    if not entries:
        return "-"
    return ",".join(str(d) if r == 1 else f"{d}^{r}" for d, r in entries)


@dataclass(frozen=True)
class DegreeSequence:
    """Non-empty abbreviated degree sequence of a simple graph candidate."""

    entries: Entries

    def __post_init__(self):
        entries = tuple((int(d), int(r)) for d, r in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidInput("degree sequence must be non-empty")
        _check_entries(entries, "degree sequence")
        n = sum(r for _, r in entries)
        if entries[0][0] > n - 1:
            raise InvalidInput(f"degree {entries[0][0]} exceeds n - 1 = {n - 1}")

    @cached_property
    def n(self) -> int:
        return sum(r for _, r in self.entries)

    @property
    def distinct(self) -> int:
        return len(self.entries)

    def degrees(self) -> List[int]:
        return expand(self)

    def __str__(self) -> str:
        return format_entries(self.entries)


@dataclass(frozen=True)
class PairedDegreeSequence:
    """Degree sequence split into a clique part and a stable part."""

    k_part: Entries
    s_part: Entries

    def __post_init__(self):
        k_part = tuple((int(d), int(r)) for d, r in self.k_part)
        s_part = tuple((int(d), int(r)) for d, r in self.s_part)
        object.__setattr__(self, "k_part", k_part)
        object.__setattr__(self, "s_part", s_part)
        if not k_part and not s_part:
            raise InvalidInput("paired degree sequence must have at least one vertex")
        _check_entries(k_part, "clique part")
        _check_entries(s_part, "stable part")

    @cached_property
    def a(self) -> int:
        return sum(r for _, r in self.k_part)

    @cached_property
    def b(self) -> int:
        return sum(r for _, r in self.s_part)

    @cached_property
    def n(self) -> int:
        return self.a + self.b

    def k_degrees(self) -> List[int]:
        return _expand_entries(self.k_part)

    def s_degrees(self) -> List[int]:
        return _expand_entries(self.s_part)

    def flatten(self) -> DegreeSequence:
        """The unpaired sequence of the same vertices."""
        return abbreviate(self.k_degrees() + self.s_degrees())

    def __str__(self) -> str:
        return f"{format_entries(self.k_part)};{format_entries(self.s_part)}"


@dataclass(frozen=True)
class NotSplit:
    pass


@dataclass(frozen=True)
class Split:
    h: int
    paired: PairedDegreeSequence


SplitCheckResult = Union[Split, NotSplit]


@dataclass(frozen=True)
class SwingInfo:
    k_side_swing: bool
    s_side_swing: bool


def _expand_entries(entries: Entries) -> List[int]:
    out: List[int] = []
    for d, r in entries:
        out.extend([d] * r)
    return out


def run_entries(values: Iterable[int]) -> Entries:
    """Abbreviates values that are already in non-increasing order."""
    return tuple((d, sum(1 for _ in group)) for d, group in groupby(values))


def abbreviate(degrees: Iterable[int]) -> DegreeSequence:
    """
    Sorts a multiset of degrees descending and groups equal values.

    Raises:
        InvalidInput: on an empty input or a negative degree.
    """
    counts = Counter(degrees)
    if not counts:
        raise InvalidInput("cannot abbreviate an empty degree list")
    if min(counts) < 0:
        raise InvalidInput(f"negative degree {min(counts)}")
    return DegreeSequence(tuple(sorted(counts.items(), reverse=True)))


def expand(seq: DegreeSequence) -> List[int]:
    return _expand_entries(seq.entries)


def determine_split(seq: DegreeSequence) -> SplitCheckResult:
    """
    Decides whether a sequence is the degree sequence of a split graph.

    Uses h = max{i : d_i >= i - 1} and the equality
    sum(d_1..d_h) = h(h - 1) + sum(d_{h+1}..d_n).

    Returns:
        Split with the partition where the first h vertices form the clique,
        otherwise NotSplit.
    """
    degrees = expand(seq)
    n = len(degrees)
    if n < 2:
        raise InvalidInput("split test needs at least 2 vertices")
    h = 1
    while h <= n - 1 and degrees[h] >= h:
        h += 1
    left = sum(degrees[:h])
    right = sum(degrees[h:])
    if left != h * (h - 1) + right:
        return NotSplit()
    paired = PairedDegreeSequence(run_entries(degrees[:h]), run_entries(degrees[h:]))
    logger.debug("split at h=%d: %s", h, paired)
    return Split(h, paired)


def complement_sequence(seq: DegreeSequence) -> DegreeSequence:
    n = seq.n
    return DegreeSequence(tuple((n - 1 - d, r) for d, r in reversed(seq.entries)))


def _complement_paired(pseq: PairedDegreeSequence) -> PairedDegreeSequence:
    n = pseq.n
    return PairedDegreeSequence(
        tuple((n - 1 - d, r) for d, r in reversed(pseq.s_part)),
        tuple((n - 1 - d, r) for d, r in reversed(pseq.k_part)),
    )


def _inverse_paired(pseq: PairedDegreeSequence) -> PairedDegreeSequence:
    a, b = pseq.a, pseq.b
    return PairedDegreeSequence(
        tuple((d + b - 1, r) for d, r in pseq.s_part),
        tuple((d - (a - 1), r) for d, r in pseq.k_part),
    )


def relatives(pseq: PairedDegreeSequence) -> Dict[RelativeTag, PairedDegreeSequence]:
    """
    Paired sequences of the complement, inverse and complement-inverse.

    Raises:
        InvalidInput: when pseq is not the sequence of a split partition, so
            that inverting produces negative degrees.
    """
    inverse = _inverse_paired(pseq)
    return {
        RelativeTag.IDENTITY: pseq,
        RelativeTag.COMPLEMENT: _complement_paired(pseq),
        RelativeTag.INVERSE: inverse,
        RelativeTag.COMPLEMENT_INVERSE: _complement_paired(inverse),
    }


def swing_info(pseq: PairedDegreeSequence) -> SwingInfo:
    """A clique vertex of degree a - 1 or a stable vertex of degree a may switch sides."""
    a = pseq.a
    return SwingInfo(
        k_side_swing=any(d == a - 1 for d, _ in pseq.k_part),
        s_side_swing=any(d == a for d, _ in pseq.s_part),
    )


def is_balanced(pseq: PairedDegreeSequence) -> bool:
    info = swing_info(pseq)
    return not (info.k_side_swing or info.s_side_swing)

