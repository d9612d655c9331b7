"""Interlacement (circle) graphs of chord diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .codec import ChordDiagram, GaussCode, label_order
from .gf2 import Gf2Matrix, square

Edge = Tuple[int, int]


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class InterlacementGraph:
    """Simple graph on chords; ``rows[i]`` is the neighbour bitset of ``i``."""

    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ValueError("need one row per vertex")
        for i, r in enumerate(rows):
            if r >> i & 1:
                raise ValueError(f"self loop at {i}")
            for j in range(self.n):
                if (r >> j & 1) != (rows[j] >> i & 1):
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")

    @property
    def display_labels(self) -> Tuple[str, ...]:
        return self.labels or tuple(str(i + 1) for i in range(self.n))

    @property
    def adj(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    @property
    def edges(self) -> List[Edge]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.rows[i] >> j & 1]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> List[int]:
        return [j for j in range(self.n) if self.rows[i] >> j & 1]

    def degree(self, i: int) -> int:
        return _popcount(self.rows[i])

    def permuted(self, order) -> "InterlacementGraph":
        """Graph whose vertex ``k`` is vertex ``order[k]`` of this one."""
        where = {v: k for k, v in enumerate(order)}
        rows = []
        for v in order:
            r = 0
            for u in range(self.n):
                if self.rows[v] >> u & 1:
                    r |= 1 << where[u]
            rows.append(r)
        names = self.display_labels
        return InterlacementGraph(self.n, tuple(rows), tuple(names[v] for v in order))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in range(self.n):
                if frontier >> v & 1:
                    grow |= self.rows[v]
            frontier = grow & ~seen
            seen |= grow
        return seen == (1 << self.n) - 1


def interlacement_graph(d, by_label: bool = False) -> InterlacementGraph:
    """Chords ``i`` and ``j`` are adjacent when exactly one end of ``j`` lies
    strictly between the ends of ``i``.

    Accepts a :class:`ChordDiagram`, a :class:`GaussCode` or a raw word.  With
    ``by_label`` the vertices of a code's graph follow its label order, so
    ``"432156346215"`` yields vertex 0 for symbol ``1``.
    """
    if by_label and isinstance(d, GaussCode):
        return interlacement_graph(d).permuted(label_order(d))
    labels = None
    if isinstance(d, GaussCode):
        labels = d.labels
        word = d.symbols
    elif isinstance(d, ChordDiagram):
        word = d.word()
    else:
        word = tuple(d)
    n = len(word) // 2
    first = [-1] * n
    rows = [0] * n
    for p, s in enumerate(word):
        if first[s] < 0:
            first[s] = p
            continue
        # symbols seen once between the two occurrences of s
        inside = 0
        for t in word[first[s] + 1:p]:
            inside ^= 1 << t
        rows[s] = inside
    return InterlacementGraph(n, tuple(rows), labels)


def adjacency_matrix(g: InterlacementGraph) -> Gf2Matrix:
    return Gf2Matrix(g.n, g.rows)


def common_neighbor_parity(g: InterlacementGraph, i: int, j: int) -> int:
    """``<m_i, m_j>`` mod 2, the parity of the shared neighbourhood."""
    return _popcount(g.rows[i] & g.rows[j]) & 1


@dataclass(frozen=True)
class WeightedInterlacementGraph:
    base: InterlacementGraph
    omega: Dict[Edge, int]

    def weight(self, i: int, j: int) -> int:
        return self.omega[(i, j) if i < j else (j, i)]

    @property
    def odd_edges(self) -> List[Edge]:
        return [e for e in self.base.edges if self.omega[e]]


def weighted_graph(g: InterlacementGraph) -> WeightedInterlacementGraph:
    m2 = square(adjacency_matrix(g))
    return WeightedInterlacementGraph(g, {(i, j): m2[i, j] for i, j in g.edges})


def _dot_id(label: str) -> str:
    return '"' + label.replace('"', r"\"") + '"'


def to_dot(g, name: str = "interlacement") -> str:
    """Graphviz text for an interlacement graph; for a weighted graph the
    edges of weight 1 are drawn bold."""
    weighted = isinstance(g, WeightedInterlacementGraph)
    base = g.base if weighted else g
    names = base.display_labels
    lines = [f"graph {name} {{"]
    for v in range(base.n):
        lines.append(f"  {_dot_id(names[v])};")
    for i, j in base.edges:
        attrs = ""
        if weighted:
            w = g.omega[(i, j)]
            attrs = f' [label="{w}"' + (", style=bold, penwidth=3]" if w else "]")
        lines.append(f"  {_dot_id(names[i])} -- {_dot_id(names[j])}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
