"""
Exhaustive reference computations on small graphs.

Everything here is exponential in the worst case and refuses graphs larger
than the configured vertex cap. Symmetry questions share one engine: color
refinement followed by backtracking over color-preserving bijections.
"""
import logging
from dataclasses import dataclass
from itertools import accumulate
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from config.settings import settings
from core.decomposition import GoodPair
from core.degseq import DegreeSequence, expand
from core.errors import InternalError, InvalidInput, TooLarge
from graphs.graph_model import Graph, disjoint_union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise InvalidInput(f"not a permutation: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(tuple(self.mapping[other.mapping[v]] for v in range(len(self.mapping))))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            out[w] = v
        return Permutation(tuple(out))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.mapping))


@dataclass(frozen=True)
class Labeling:
    """Vertex colors 1..color_count."""

    colors: Tuple[int, ...]
    color_count: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.color_count < 1 and self.colors:
            raise InvalidInput("a labeling needs at least one color")
        if any(not 1 <= c <= self.color_count for c in self.colors):
            raise InvalidInput(f"colors must lie in 1..{self.color_count}")


class SplitWitness(NamedTuple):
    is_split: bool
    a_set: Optional[FrozenSet[int]] = None
    b_set: Optional[FrozenSet[int]] = None


def _check_cap(g: Graph, cap: Optional[int]) -> None:
    limit = settings.effective_cap(cap)
    if g.n > limit:
        raise TooLarge(g.n, limit)


# ---------------------------------------------------------------------------
# Refinement and backtracking
# ---------------------------------------------------------------------------

def _refine(g: Graph, colors: Sequence[int]) -> List[int]:
    """Stable coloring; names are canonical, so equal inputs on isomorphic graphs agree."""
    current = list(colors)
    classes = len(set(current))
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        names = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [names[sig] for sig in signatures]
        if len(names) == classes:
            return refined
        current, classes = refined, len(names)


def _refine_pair(g: Graph, cg: Sequence[int], h: Graph, ch: Sequence[int]) -> Tuple[List[int], List[int]]:
    joint = _refine(disjoint_union(g, h), list(cg) + list(ch))
    return joint[:g.n], joint[g.n:]


def _individualize(colors: Sequence[int], v: int) -> List[int]:
    out = list(colors)
    out[v] = max(colors) + 1
    return out


def _iter_maps(g: Graph, h: Graph, cg: Sequence[int], ch: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Every bijection g -> h that preserves colors and adjacency."""
    if g.n != h.n or sorted(cg) != sorted(ch):
        return
    n = g.n
    by_color: Dict[int, List[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)
    sizes = {c: len(ws) for c, ws in by_color.items()}
    order = sorted(range(n), key=lambda v: (sizes[cg[v]], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> Iterator[Tuple[int, ...]]:
        if k == n:
            yield tuple(mapping)
            return
        v = order[k]
        for w in by_color[cg[v]]:
            if used[w]:
                continue
            if any(g.has_edge(u, v) != h.has_edge(mapping[u], w) for u in order[:k]):
                continue
            mapping[v] = w
            used[w] = True
            yield from extend(k + 1)
            used[w] = False
            mapping[v] = -1

    yield from extend(0)


def _maps_exist(g: Graph, h: Graph, cg: Sequence[int], ch: Sequence[int]) -> bool:
    cg, ch = _refine_pair(g, cg, h, ch)
    return next(_iter_maps(g, h, cg, ch), None) is not None


def _moving_candidates(g: Graph, colors: List[int]) -> Tuple[Optional[int], List[int]]:
    """First vertex of the smallest non-singleton class, and that class."""
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    open_classes = [members for members in classes.values() if len(members) > 1]
    if not open_classes:
        return None, []
    members = min(open_classes, key=lambda ms: (len(ms), ms[0]))
    return members[0], members


def _group_order(g: Graph, colors: Sequence[int]) -> int:
    """Size of the color-preserving automorphism group, by orbit times stabilizer."""
    colors = _refine(g, colors)
    v, members = _moving_candidates(g, colors)
    if v is None:
        return 1
    fixed = _individualize(colors, v)
    orbit = 1 + sum(1 for w in members if w != v and _maps_exist(g, g, fixed, _individualize(colors, w)))
    return orbit * _group_order(g, fixed)


def _has_nontrivial_automorphism(g: Graph, colors: Sequence[int]) -> bool:
    colors = _refine(g, colors)
    v, members = _moving_candidates(g, colors)
    if v is None:
        return False
    fixed = _individualize(colors, v)
    if any(w != v and _maps_exist(g, g, fixed, _individualize(colors, w)) for w in members):
        return True
    return _has_nontrivial_automorphism(g, fixed)


# ---------------------------------------------------------------------------
# Automorphisms and isomorphism
# ---------------------------------------------------------------------------

def automorphisms(g: Graph, cap: Optional[int] = None) -> List[Permutation]:
    """Every automorphism of g, identity included."""
    _check_cap(g, cap)
    colors = _refine(g, [0] * g.n)
    return [Permutation(m) for m in _iter_maps(g, g, colors, colors)]


def automorphism_count(g: Graph, cap: Optional[int] = None) -> int:
    _check_cap(g, cap)
    return _group_order(g, [0] * g.n)


def brute_isomorphic(g: Graph, h: Graph, cap: Optional[int] = None) -> bool:
    _check_cap(g, cap)
    _check_cap(h, cap)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return _maps_exist(g, h, [0] * g.n, [0] * h.n)


def is_distinguishing(g: Graph, labeling: Labeling) -> bool:
    """True when only the identity automorphism preserves every vertex color."""
    if len(labeling.colors) != g.n:
        raise InvalidInput(f"labeling has {len(labeling.colors)} colors for {g.n} vertices")
    return not _has_nontrivial_automorphism(g, labeling.colors)


# ---------------------------------------------------------------------------
# Distinguishing labelings
# ---------------------------------------------------------------------------

def _twin_pairs(g: Graph) -> List[List[int]]:
    """For each vertex, the earlier vertices with the same neighborhood apart from each other."""
    earlier: List[List[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for u in range(v):
            if g.adjacency[u] - {v} == g.adjacency[v] - {u}:
                earlier[v].append(u)
    return earlier


def _restricted_growth(g: Graph, max_colors: int, exact: bool) -> Iterator[Tuple[int, ...]]:
    """
    Labelings up to renaming colors: vertex v may only use a color already
    seen or the next fresh one. Twins are forced apart, since swapping two
    twins is an automorphism.
    """
    n = g.n
    twins = _twin_pairs(g)
    colors = [0] * n

    def extend(v: int, used: int) -> Iterator[Tuple[int, ...]]:
        if v == n:
            if not exact or used == max_colors:
                yield tuple(colors)
            return
        if exact and used + (n - v) < max_colors:
            return
        for c in range(1, min(used + 1, max_colors) + 1):
            if any(colors[u] == c for u in twins[v]):
                continue
            colors[v] = c
            yield from extend(v + 1, max(used, c))
        colors[v] = 0

    yield from extend(0, 0)


def distinguishing_labeling(g: Graph, cap: Optional[int] = None) -> Labeling:
    """A distinguishing labeling with the fewest colors."""
    _check_cap(g, cap)
    if g.n == 0:
        return Labeling((), 0)
    for c in range(1, g.n + 1):
        for colors in _restricted_growth(g, c, exact=True):
            if not _has_nontrivial_automorphism(g, colors):
                logger.debug("distinguishing labeling with %d colors: %s", c, colors)
                return Labeling(colors, c)
    raise InternalError("coloring every vertex differently must be distinguishing")


def brute_dist_number(g: Graph, cap: Optional[int] = None) -> int:
    return distinguishing_labeling(g, cap).color_count


def _falling(c: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= c - i
    return out


def count_inequivalent(g: Graph, c: int, cap: Optional[int] = None) -> int:
    """
    Number of distinguishing c-colorings counted up to automorphisms.

    Each distinguishing labeling using k of the c colors stands for
    c(c-1)...(c-k+1) colorings, and automorphisms act freely on
    distinguishing colorings.
    """
    _check_cap(g, cap)
    if c < 1:
        raise InvalidInput(f"color count must be >= 1, got {c}")
    total = 0
    for colors in _restricted_growth(g, c, exact=False):
        if not _has_nontrivial_automorphism(g, colors):
            total += _falling(c, max(colors, default=0))
    order = _group_order(g, [0] * g.n)
    count, rem = divmod(total, order)
    if rem:
        raise InternalError(f"{total} distinguishing colorings do not split into orbits of size {order}")
    return count


def disjoint_copies(h: Graph, m: int) -> Graph:
    if m < 1:
        raise InvalidInput(f"need at least one copy, got {m}")
    g = h
    for _ in range(m - 1):
        g = disjoint_union(g, h)
    return g


def component_product_count(graphs: Sequence[Graph], c: int, cap: Optional[int] = None) -> int:
    """Product of the per-graph counts of inequivalent distinguishing c-colorings."""
    product = 1
    for g in graphs:
        product *= count_inequivalent(g, c, cap)
    return product


# ---------------------------------------------------------------------------
# Split graphs and good pairs
# ---------------------------------------------------------------------------

def brute_is_split(g: Graph, cap: Optional[int] = None) -> SplitWitness:
    """Tries every vertex subset as the clique part."""
    _check_cap(g, cap)
    everyone = frozenset(range(g.n))
    for mask in range(1 << g.n):
        a_set = frozenset(v for v in range(g.n) if mask >> v & 1)
        b_set = everyone - a_set
        if all((a_set - {v}) <= g.adjacency[v] for v in a_set) and all(
            not (g.adjacency[v] & b_set) for v in b_set
        ):
            return SplitWitness(True, a_set, b_set)
    return SplitWitness(False)


def brute_good_pairs(seq: DegreeSequence) -> List[GoodPair]:
    """
    Every (p, q) with 0 < p + q < n and
    d_1 + ... + d_p = p(n - q - 1) + d_{n-q+1} + ... + d_n, sorted.
    """
    degrees = expand(seq)
    n = len(degrees)
    prefix = [0] + list(accumulate(degrees))
    pairs = []
    for p in range(n):
        for q in range(n - p):
            if p + q == 0:
                continue
            back = prefix[n] - prefix[n - q]
            if prefix[p] == p * (n - q - 1) + back:
                pairs.append(GoodPair(p, q))
    return pairs
