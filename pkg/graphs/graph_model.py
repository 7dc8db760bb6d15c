"""
Small explicit graphs for generators, the brute-force oracle and tests.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from core.degseq import DegreeSequence, PairedDegreeSequence, abbreviate, run_entries
from core.errors import InvalidInput


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput(f"vertex count must be >= 0, got {self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidInput(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if u == v:
                    raise InvalidInput(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise InvalidInput(f"vertex {u} out of range 0..{self.n - 1}")
                if v not in self.adjacency[u]:
                    raise InvalidInput(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Builds a graph from an edge list; repeated edges collapse."""
        rows: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge {u}-{v} out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(row) for row in rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(frozenset() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        everyone = frozenset(range(n))
        return cls(n, tuple(everyone - {v} for v in range(n)))

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Returns the graph with vertex v renamed mapping[v]."""
        if sorted(mapping) != list(range(self.n)):
            raise InvalidInput("relabel mapping must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class SplitGraphWithPartition:
    """A split graph with a fixed clique part A and stable part B."""

    graph: Graph
    a_set: FrozenSet[int]
    b_set: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "a_set", frozenset(self.a_set))
        object.__setattr__(self, "b_set", frozenset(self.b_set))
        if not is_split_partition(self.graph, self.a_set, self.b_set):
            raise InvalidInput("A must be a clique and B an independent set covering all vertices")

    def paired_sequence(self) -> PairedDegreeSequence:
        g = self.graph
        k = sorted((g.degree(v) for v in self.a_set), reverse=True)
        s = sorted((g.degree(v) for v in self.b_set), reverse=True)
        return PairedDegreeSequence(run_entries(k), run_entries(s))


def is_split_partition(g: Graph, a_set: FrozenSet[int], b_set: FrozenSet[int]) -> bool:
    if a_set & b_set or (a_set | b_set) != frozenset(range(g.n)):
        return False
    for v in a_set:
        if not (a_set - {v}) <= g.adjacency[v]:
            return False
    return all(not (g.adjacency[v] & b_set) for v in b_set)


def degree_sequence_of(g: Graph) -> DegreeSequence:
    return abbreviate(g.degrees())


def complement(g: Graph) -> Graph:
    everyone = frozenset(range(g.n))
    return Graph(g.n, tuple(everyone - nbrs - {v} for v, nbrs in enumerate(g.adjacency)))


def complement_split(sg: SplitGraphWithPartition) -> SplitGraphWithPartition:
    return SplitGraphWithPartition(complement(sg.graph), sg.b_set, sg.a_set)


def split_inverse(sg: SplitGraphWithPartition) -> SplitGraphWithPartition:
    """
    Swaps the roles of A and B: A becomes stable and B a clique. Edges
    between A and B are kept.
    """
    g, a_set, b_set = sg.graph, sg.a_set, sg.b_set
    rows = []
    for v in range(g.n):
        if v in a_set:
            rows.append(g.adjacency[v] & b_set)
        else:
            rows.append((b_set - {v}) | g.adjacency[v])
    return SplitGraphWithPartition(Graph(g.n, tuple(rows)), b_set, a_set)


def _shifted(g: Graph, offset: int) -> List[FrozenSet[int]]:
    return [frozenset(u + offset for u in nbrs) for nbrs in g.adjacency]


def compose(sg: SplitGraphWithPartition, h: Graph) -> Graph:
    """
    Disjoint union of sg and h plus every edge between A and V(h).

    sg keeps its vertex ids; h's ids are shifted past them.
    """
    offset = sg.graph.n
    h_ids = frozenset(range(offset, offset + h.n))
    rows = [
        nbrs | h_ids if v in sg.a_set else nbrs
        for v, nbrs in enumerate(sg.graph.adjacency)
    ]
    a_set = sg.a_set
    rows.extend(nbrs | a_set for nbrs in _shifted(h, offset))
    return Graph(offset + h.n, tuple(rows))


def compose_partitioned(sg: SplitGraphWithPartition, sh: SplitGraphWithPartition) -> SplitGraphWithPartition:
    """Composition of two split graphs keeps the union of the partitions."""
    offset = sg.graph.n
    graph = compose(sg, sh.graph)
    return SplitGraphWithPartition(
        graph,
        sg.a_set | {v + offset for v in sh.a_set},
        sg.b_set | {v + offset for v in sh.b_set},
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, tuple(list(g.adjacency) + _shifted(h, g.n)))

