"""
Recognition of indecomposable unigraph families and their distinguishing
numbers.

Every indecomposable unigraph is, up to a relative, one of a handful of
parametrized families. Each family here knows its own degree sequence and
distinguishing number, so recognition is: guess parameters from the
shape of a sequence, rebuild the family's sequence, compare.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar, Dict, List, Optional, Tuple, Union

from config.settings import settings
from core.decomposition import (
    Component,
    DecompositionResult,
    SplitComponent,
    TailComponent,
    decompose,
    decompose_compact,
)
from core.degseq import (
    RELATIVE_ORDER,
    DegreeSequence,
    PairedDegreeSequence,
    RelativeTag,
    Split,
    complement_sequence,
    determine_split,
    relatives,
)
from core.errors import InternalError, InvalidInput, NotThreshold, NotUnigraph

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Distinguishing numbers of the two base families
# ---------------------------------------------------------------------------

def find_dist_mk2(m: int, warm_start: Optional[bool] = None) -> int:
    """
    Distinguishing number of m disjoint copies of K_2.

    The smallest c with C(c, 2) >= m. With warm_start the scan begins near
    sqrt(2m), which gives the same answer without walking from 2.
    """
    if m < 1:
        raise InvalidInput(f"mK2 needs m >= 1, got {m}")
    if warm_start is None:
        warm_start = settings.mk2_warm_start
    curr, val = 2, 1
    if warm_start:
        curr = max(2, math.isqrt(2 * m) - 1)
        val = curr * (curr - 1) // 2
        while curr > 2 and val >= m:
            curr -= 1
            val = curr * (curr - 1) // 2
    while val < m:
        curr += 1
        val += curr - 1
    return curr


def find_dist_s_state(p: int, q: int) -> Tuple[int, int]:
    """
    Runs the search for the distinguishing number of S(p, q).

    Returns:
        (curr, val) where curr is the answer and val = curr * C(curr, p),
        the number of inequivalent distinguishing colorings of one star
        K_{1,p} with curr colors.
    """
    if p < 1 or q < 1:
        raise InvalidInput(f"S(p, q) needs p >= 1 and q >= 1, got p={p} q={q}")
    curr, val = p, p
    while val < q:
        curr += 1
        val *= curr * curr
        val, rem = divmod(val, curr - 1)
        if rem:
            raise InternalError(f"inexact division at curr={curr}")
        val, rem = divmod(val, curr - p)
        if rem:
            raise InternalError(f"inexact division at curr={curr}")
    return curr, val


def find_dist_s(p: int, q: int) -> int:
    """Distinguishing number of q stars K_{1,p} whose centers form a clique."""
    return find_dist_s_state(p, q)[0]


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

FamilySequence = Union[DegreeSequence, PairedDegreeSequence]


@dataclass(frozen=True)
class UnigraphKind:
    """Base class of the indecomposable unigraph families."""

    family: ClassVar[str] = ""
    split: ClassVar[bool] = True

    def params(self) -> Dict[str, object]:
        return {k: v for k, v in self.__dict__.items()}

    def label(self) -> str:
        values = ",".join(str(v) for v in self.params().values())
        return f"{self.family}({values})" if values else self.family

    def is_valid(self) -> bool:
        return True

    def sequence(self) -> FamilySequence:
        raise NotImplementedError

    def vertex_count(self) -> int:
        return self.sequence().n

    def dist_number(self) -> int:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class C5(UnigraphKind):
    family: ClassVar[str] = "C5"
    split: ClassVar[bool] = False

    def sequence(self) -> DegreeSequence:
        return DegreeSequence(((2, 5),))

    def dist_number(self) -> int:
        return 3


@dataclass(frozen=True)
class MK2(UnigraphKind):
    m: int
    family: ClassVar[str] = "mK2"
    split: ClassVar[bool] = False

    def is_valid(self) -> bool:
        return self.m >= 2

    def sequence(self) -> DegreeSequence:
        return DegreeSequence(((1, 2 * self.m),))

    def dist_number(self) -> int:
        return find_dist_mk2(self.m)


@dataclass(frozen=True)
class U2(UnigraphKind):
    """A star K_{1,l} next to m copies of K_2."""

    m: int
    l: int
    family: ClassVar[str] = "U2"
    split: ClassVar[bool] = False

    def is_valid(self) -> bool:
        return self.m >= 1 and self.l >= 2

    def sequence(self) -> DegreeSequence:
        return DegreeSequence(((self.l, 1), (1, 2 * self.m + self.l)))

    def dist_number(self) -> int:
        return max(find_dist_mk2(self.m), self.l)


@dataclass(frozen=True)
class U3(UnigraphKind):
    """A center joined to m copies of K_2 and to both ends of a 3-vertex path."""

    m: int
    family: ClassVar[str] = "U3"
    split: ClassVar[bool] = False

    def is_valid(self) -> bool:
        return self.m >= 1

    def sequence(self) -> DegreeSequence:
        return DegreeSequence(((2 * self.m + 2, 1), (2, 2 * self.m + 3)))

    def dist_number(self) -> int:
        return find_dist_mk2(self.m)


@dataclass(frozen=True)
class TrivialK(UnigraphKind):
    family: ClassVar[str] = "K1"

    def sequence(self) -> PairedDegreeSequence:
        return PairedDegreeSequence(((0, 1),), ())

    def dist_number(self) -> int:
        return 1


@dataclass(frozen=True)
class TrivialS(UnigraphKind):
    family: ClassVar[str] = "S1"

    def sequence(self) -> PairedDegreeSequence:
        return PairedDegreeSequence((), ((0, 1),))

    def dist_number(self) -> int:
        return 1


@dataclass(frozen=True)
class KComplete(UnigraphKind):
    size: int
    family: ClassVar[str] = "K"

    def is_valid(self) -> bool:
        return self.size >= 1

    def sequence(self) -> PairedDegreeSequence:
        return PairedDegreeSequence(((self.size - 1, self.size),), ())

    def dist_number(self) -> int:
        return self.size


@dataclass(frozen=True)
class SIsolated(UnigraphKind):
    size: int
    family: ClassVar[str] = "E"

    def is_valid(self) -> bool:
        return self.size >= 1

    def sequence(self) -> PairedDegreeSequence:
        return PairedDegreeSequence((), ((0, self.size),))

    def dist_number(self) -> int:
        return self.size


@dataclass(frozen=True)
class S(UnigraphKind):
    """q stars K_{1,p} whose centers form a clique."""

    p: int
    q: int
    family: ClassVar[str] = "S"

    def is_valid(self) -> bool:
        return self.p >= 1 and self.q >= 2

    def sequence(self) -> PairedDegreeSequence:
        return PairedDegreeSequence(((self.p + self.q - 1, self.q),), ((1, self.p * self.q),))

    def vertex_count(self) -> int:
        return self.q * (self.p + 1)

    def dist_number(self) -> int:
        return find_dist_s(self.p, self.q)


@dataclass(frozen=True)
class S2(UnigraphKind):
    """Stars of several sizes with clique-joined centers: q_i stars K_{1,p_i}."""

    pairs: Tuple[Tuple[int, int], ...]
    family: ClassVar[str] = "S2"

    def params(self) -> Dict[str, object]:
        return {"pairs": [list(pair) for pair in self.pairs]}

    def label(self) -> str:
        return "S2(" + ",".join(f"{p}x{q}" for p, q in self.pairs) + ")"

    def is_valid(self) -> bool:
        if len(self.pairs) < 2:
            return False
        ps = [p for p, _ in self.pairs]
        if any(q < 1 for _, q in self.pairs) or ps[-1] < 1:
            return False
        return all(a > b for a, b in zip(ps, ps[1:]))

    def sequence(self) -> PairedDegreeSequence:
        total = sum(q for _, q in self.pairs)
        return PairedDegreeSequence(
            tuple((p + total - 1, q) for p, q in self.pairs),
            ((1, sum(p * q for p, q in self.pairs)),),
        )

    def vertex_count(self) -> int:
        return sum(q * (p + 1) for p, q in self.pairs)

    def dist_number(self) -> int:
        return max(find_dist_s(p, q) for p, q in self.pairs)


@dataclass(frozen=True)
class S3(UnigraphKind):
    """S(p, q1) and S(p+1, q2) with joined centers, plus a vertex on the S(p, q1) centers."""

    p: int
    q1: int
    q2: int
    family: ClassVar[str] = "S3"

    def is_valid(self) -> bool:
        return self.p >= 1 and self.q1 >= 2 and self.q2 >= 1

    def sequence(self) -> PairedDegreeSequence:
        p, q1, q2 = self.p, self.q1, self.q2
        return PairedDegreeSequence(
            ((p + q1 + q2, q1 + q2),),
            ((q1, 1), (1, p * q1 + (p + 1) * q2)),
        )

    def vertex_count(self) -> int:
        return self.q1 * (self.p + 1) + self.q2 * (self.p + 2) + 1

    def dist_number(self) -> int:
        return max(find_dist_s(self.p, self.q1), find_dist_s(self.p + 1, self.q2))


@dataclass(frozen=True)
class S4(UnigraphKind):
    """S3(p, 2, q) plus a clique vertex adjacent to everything but the extra stable vertex."""

    p: int
    q: int
    family: ClassVar[str] = "S4"

    def is_valid(self) -> bool:
        return self.p >= 1 and self.q >= 1

    def sequence(self) -> PairedDegreeSequence:
        p, q = self.p, self.q
        return PairedDegreeSequence(
            ((2 * (p + q + 1) + q * p, 1), (p + q + 3, q + 2)),
            ((2, q * p + 2 * p + q + 1),),
        )

    def vertex_count(self) -> int:
        return (self.p + 2) * (self.q + 2)

    def dist_number(self) -> int:
        return max(find_dist_s(self.p, 2), find_dist_s(self.p + 1, self.q))


@dataclass(frozen=True)
class ClassifiedComponent:
    kind: UnigraphKind
    relative: RelativeTag
    dist_number: int


@dataclass(frozen=True)
class UnigraphReport:
    components: Tuple[ClassifiedComponent, ...]
    dist_number: int
    decomposition: DecompositionResult


# ---------------------------------------------------------------------------
# Shape matching
# ---------------------------------------------------------------------------

def _confirm(kind: UnigraphKind, seq: FamilySequence) -> Optional[UnigraphKind]:
    if not kind.is_valid():
        return None
    try:
        expected = kind.sequence()
    except InvalidInput:
        return None
    return kind if expected == seq else None


def _match_nonsplit(seq: DegreeSequence) -> Optional[UnigraphKind]:
    entries = seq.entries
    if len(entries) == 1:
        d, r = entries[0]
        if (d, r) == (2, 5):
            return C5()
        if d == 1 and r % 2 == 0:
            return _confirm(MK2(r // 2), seq)
        return None
    if len(entries) == 2:
        (d1, r1), (d2, r2) = entries
        if r1 != 1:
            return None
        if d2 == 1 and (r2 - d1) % 2 == 0:
            return _confirm(U2((r2 - d1) // 2, d1), seq)
        if d2 == 2 and d1 % 2 == 0:
            return _confirm(U3((d1 - 2) // 2), seq)
    return None


def _match_s(pseq: PairedDegreeSequence) -> Optional[UnigraphKind]:
    k_part, s_part = pseq.k_part, pseq.s_part
    if len(k_part) != 1 or len(s_part) != 1 or s_part[0][0] != 1:
        return None
    r1, r2 = k_part[0][1], s_part[0][1]
    if r2 % r1:
        return None
    return _confirm(S(r2 // r1, r1), pseq)


def _match_s2(pseq: PairedDegreeSequence) -> Optional[UnigraphKind]:
    k_part, s_part = pseq.k_part, pseq.s_part
    if len(k_part) < 2 or len(s_part) != 1 or s_part[0][0] != 1:
        return None
    total = sum(r for _, r in k_part)
    return _confirm(S2(tuple((d - total + 1, r) for d, r in k_part)), pseq)


def _match_s3(pseq: PairedDegreeSequence) -> Optional[UnigraphKind]:
    k_part, s_part = pseq.k_part, pseq.s_part
    if len(k_part) != 1 or len(s_part) != 2 or s_part[0][1] != 1 or s_part[1][0] != 1:
        return None
    d1, r1 = k_part[0]
    d2 = s_part[0][0]
    return _confirm(S3(d1 - r1, d2, r1 - d2), pseq)


def _match_s4(pseq: PairedDegreeSequence) -> Optional[UnigraphKind]:
    k_part, s_part = pseq.k_part, pseq.s_part
    if len(k_part) != 2 or k_part[0][1] != 1 or len(s_part) != 1 or s_part[0][0] != 2:
        return None
    d2, r2 = k_part[1]
    return _confirm(S4(d2 - r2 - 1, r2 - 2), pseq)


SPLIT_MATCHERS = (_match_s, _match_s2, _match_s3, _match_s4)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def classify_split(pseq: PairedDegreeSequence) -> ClassifiedComponent:
    """
    Identifies an indecomposable split component up to its relatives.

    Forms are tried in the order S, S2, S3, S4; for each form the relatives
    are tried in the order identity, complement, inverse, complement-inverse.

    Raises:
        NotUnigraph: when no relative matches any form.
    """
    if pseq.n < 2:
        raise InvalidInput("split classification needs at least 2 vertices")
    candidates = relatives(pseq)
    for matcher in SPLIT_MATCHERS:
        for tag in RELATIVE_ORDER:
            kind = matcher(candidates[tag])
            if kind is not None:
                logger.debug("component %s is %s of %s", pseq, tag.value, kind)
                return ClassifiedComponent(kind, tag, kind.dist_number())
    raise NotUnigraph(str(pseq))


def find_dist_split(pseq: PairedDegreeSequence) -> int:
    return classify_split(pseq).dist_number


def classify_nonsplit(seq: DegreeSequence) -> ClassifiedComponent:
    """
    Identifies a non-split indecomposable tail as C5, mK2, U2 or U3 or a complement.

    Raises:
        NotUnigraph: on three or more distinct degrees or an unmatched shape.
    """
    if seq.n < 2:
        raise InvalidInput("non-split classification needs at least 2 vertices")
    if seq.distinct <= 2:
        for tag, candidate in ((RelativeTag.IDENTITY, seq), (RelativeTag.COMPLEMENT, complement_sequence(seq))):
            kind = _match_nonsplit(candidate)
            if kind is not None:
                return ClassifiedComponent(kind, tag, kind.dist_number())
    raise NotUnigraph(str(seq))


@lru_cache(maxsize=4096)
def _classify_block(block: str, size: int) -> ClassifiedComponent:
    if block == "K":
        kind = TrivialK() if size == 1 else KComplete(size)
    else:
        kind = TrivialS() if size == 1 else SIsolated(size)
    return ClassifiedComponent(kind, RelativeTag.IDENTITY, size)


def classify_component(component: Component) -> ClassifiedComponent:
    """Classifies one component of a compact decomposition."""
    if isinstance(component, SplitComponent):
        block = component.block_type()
        if block is not None:
            return _classify_block(block, component.vertex_count)
        return classify_split(component.pseq)
    seq = component.seq
    if seq.n == 1:
        return ClassifiedComponent(TrivialK(), RelativeTag.IDENTITY, 1)
    result = determine_split(seq)
    if isinstance(result, Split):
        return classify_split(result.paired)
    return classify_nonsplit(seq)


def find_dist_unigraph(seq: DegreeSequence) -> UnigraphReport:
    """
    Distinguishing number of the unigraph with this degree sequence.

    Returns:
        Report with the compact decomposition, one classification per
        component and the overall maximum

    Raises:
        NotUnigraph: when some component is not a unigraph.
    """
    compact = decompose_compact(decompose(seq, record_steps=False))
    classified = tuple(classify_component(c) for c in compact.components)
    dist = max(c.dist_number for c in classified)
    logger.info("unigraph n=%d: %d components, D=%d", seq.n, len(classified), dist)
    return UnigraphReport(classified, dist, compact)


def threshold_dist(seq: DegreeSequence) -> int:
    """
    Distinguishing number of a threshold graph: its largest block.

    Raises:
        NotThreshold: when a compact component is not a complete or isolated block.
    """
    compact = decompose_compact(decompose(seq, record_steps=False))
    best = 0
    for comp in compact.components:
        if comp.block_type() is None and not (isinstance(comp, TailComponent) and comp.vertex_count == 1):
            raise NotThreshold(f"component {comp} is not a complete or isolated block")
        best = max(best, comp.vertex_count)
    return best


def unigraphs_isomorphic(a: DegreeSequence, b: DegreeSequence) -> bool:
    """
    Two unigraphs are isomorphic exactly when their sequences agree.

    Raises:
        NotUnigraph: when either sequence is not a unigraph.
    """
    find_dist_unigraph(a)
    find_dist_unigraph(b)
    return a == b


def family_kinds(max_vertices: int, split_only: bool = False) -> List[UnigraphKind]:
    """Every family member with at most max_vertices vertices, excluding blocks."""
    kinds: List[UnigraphKind] = []
    if not split_only:
        if max_vertices >= 5:
            kinds.append(C5())
        kinds.extend(MK2(m) for m in range(2, max_vertices // 2 + 1))
        for m in range(1, max_vertices):
            kinds.extend(U2(m, l) for l in range(2, max_vertices - 2 * m))
        kinds.extend(U3(m) for m in range(1, (max_vertices - 4) // 2 + 1))
    for q in range(2, max_vertices // 2 + 1):
        kinds.extend(S(p, q) for p in range(1, max_vertices // q))
    # Every loop stops once its smallest member is over budget.
    for q1 in range(2, max_vertices):
        if 2 * q1 + 4 > max_vertices:
            break
        for q2 in range(1, max_vertices):
            if 2 * q1 + 3 * q2 + 1 > max_vertices:
                break
            for p in range(1, max_vertices):
                kind = S3(p, q1, q2)
                if kind.vertex_count() > max_vertices:
                    break
                kinds.append(kind)
    for q in range(1, max_vertices):
        if 3 * (q + 2) > max_vertices:
            break
        kinds.extend(S4(p, q) for p in range(1, max_vertices // (q + 2) - 1))
    for p1 in range(2, max_vertices):
        if p1 + 3 > max_vertices:
            break
        for p2 in range(1, p1):
            if p1 + p2 + 2 > max_vertices:
                break
            for q1 in range(1, max_vertices):
                if q1 * (p1 + 1) + p2 + 1 > max_vertices:
                    break
                for q2 in range(1, (max_vertices - q1 * (p1 + 1)) // (p2 + 1) + 1):
                    kinds.append(S2(((p1, q1), (p2, q2))))
    return kinds
