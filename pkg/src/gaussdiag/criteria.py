"""Realizability criteria for Gauss diagrams.

Every check returns a :class:`CriterionReport` whose ``witness`` can be
verified against the input by hand: an offending vertex or pair, an
inconsistent set of equations, an odd cycle, a 2-colouring or a solution
vector.  Vertices in witnesses are 0-based chord ids; ``detail`` renders them
with the code's display labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .bipartite import two_color
from .codec import GaussCode
from .gf2 import Equation, Gf2System, solve, stz_bruteforce
from .interlace import (
    InterlacementGraph,
    WeightedInterlacementGraph,
    adjacency_matrix,
    common_neighbor_parity,
    interlacement_graph,
    weighted_graph,
)


class Criterion(str, Enum):
    EVENNESS = "Evenness"
    GAUSS_PARITY = "GaussParity"
    GL123 = "GL123"
    STZ_LINEAR = "StzLinearSystem"
    CYCLE_WEIGHT = "CycleWeight"
    DEHN = "DehnUntangling"
    TOUCH = "TouchBipartite"
    MAIN = "BipartiteModified"
    STZ_BRUTEFORCE = "StzBruteforce"


# Criteria that decide realizability exactly; they must always agree.
EXACT = (Criterion.STZ_LINEAR, Criterion.CYCLE_WEIGHT, Criterion.DEHN,
         Criterion.MAIN, Criterion.STZ_BRUTEFORCE)


class CriteriaDisagree(RuntimeError):
    """Two exact criteria gave different verdicts; always a bug."""


@dataclass(frozen=True)
class CriterionReport:
    criterion: Criterion
    verdict: bool
    witness: Optional[dict] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"criterion": self.criterion.value, "verdict": self.verdict,
                "witness": self.witness, "detail": self.detail}


def _graph(x) -> InterlacementGraph:
    if isinstance(x, InterlacementGraph):
        return x
    if isinstance(x, WeightedInterlacementGraph):
        return x.base
    return interlacement_graph(x)


def _code(x) -> GaussCode:
    if isinstance(x, GaussCode):
        return x
    return GaussCode.from_word(x)


def _names(vs, labels) -> str:
    return "(" + ", ".join(labels[v] for v in vs) + ")"


def check_evenness(g) -> CriterionReport:
    """Even degrees, and an even number of common neighbours for every
    non-adjacent pair."""
    g = _graph(g)
    names = g.display_labels
    for i in range(g.n):
        if g.degree(i) % 2:
            return CriterionReport(Criterion.EVENNESS, False,
                                   {"kind": "odd_degree", "vertex": i},
                                   f"chord {names[i]} has odd degree {g.degree(i)}")
    for i, j in combinations(range(g.n), 2):
        if not g.has_edge(i, j) and common_neighbor_parity(g, i, j):
            return CriterionReport(Criterion.EVENNESS, False,
                                   {"kind": "odd_common_neighbors", "pair": [i, j]},
                                   f"non-adjacent chords {names[i]}, {names[j]} share "
                                   "an odd number of neighbours")
    return CriterionReport(Criterion.EVENNESS, True)


def check_gauss_parity(c) -> CriterionReport:
    """Each symbol's two occurrences enclose an even number of positions."""
    c = _code(c)
    names = c.display_labels
    for s, (p, q) in enumerate(c.positions()):
        if (q - p - 1) % 2:
            return CriterionReport(Criterion.GAUSS_PARITY, False,
                                   {"kind": "odd_gap", "symbol": s, "positions": [p, q]},
                                   f"{q - p - 1} symbols between the two {names[s]}s")
    return CriterionReport(Criterion.GAUSS_PARITY, True)


def check_gl123(g) -> CriterionReport:
    """Three parity conditions on ``M^2``, derived from Conway smoothing.

    The diagonal is zero, non-edges get zero, and the three entries over the
    edges of any triangle add up to 1.  Necessary, not sufficient.
    """
    g = _graph(g)
    names = g.display_labels
    p = lambda i, j: common_neighbor_parity(g, i, j)
    for i in range(g.n):
        if p(i, i):
            return CriterionReport(Criterion.GL123, False,
                                   {"kind": "odd_degree", "vertex": i},
                                   f"chord {names[i]} has odd degree")
    for i, j in combinations(range(g.n), 2):
        if not g.has_edge(i, j) and p(i, j):
            return CriterionReport(Criterion.GL123, False,
                                   {"kind": "non_edge", "pair": [i, j]},
                                   f"non-adjacent {_names((i, j), names)} share an odd number of neighbours")
    for i, j, k in combinations(range(g.n), 3):
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k):
            if (p(i, j) + p(i, k) + p(j, k)) % 2 != 1:
                return CriterionReport(Criterion.GL123, False,
                                       {"kind": "triangle", "triangle": [i, j, k]},
                                       f"triangle {_names((i, j, k), names)} has even M^2 weight")
    return CriterionReport(Criterion.GL123, True)


def realizability_system(g) -> Gf2System:
    """``m_ij X_i + m_ij X_j = <m_i, m_j> + m_ij`` for all ``i <= j``.

    Diagonal and non-edge pairs give constant equations ``0 = parity``; each
    equation is tagged ``("diag", i)``, ``("pair", i, j)`` or ``("edge", i, j)``.
    """
    g = _graph(g)
    eqs = []
    for i in range(g.n):
        eqs.append(Equation(0, common_neighbor_parity(g, i, i), ("diag", i)))
        for j in range(i + 1, g.n):
            p = common_neighbor_parity(g, i, j)
            if g.has_edge(i, j):
                eqs.append(Equation((1 << i) | (1 << j), p ^ 1, ("edge", i, j)))
            else:
                eqs.append(Equation(0, p, ("pair", i, j)))
    return Gf2System(g.n, tuple(eqs))


def edge_equations(system: Gf2System) -> List[Equation]:
    """The non-constant equations of a realizability system."""
    return [e for e in system.equations if e.support]


def _format_equation(e: Equation, names) -> str:
    if e.support:
        return e.format(names)
    if e.tag[0] == "diag":
        return f"0 = {e.rhs} (degree of {names[e.tag[1]]})"
    return f"0 = {e.rhs} (common neighbours of {names[e.tag[1]]}, {names[e.tag[2]]})"


def check_stz_linear(g) -> CriterionReport:
    g = _graph(g)
    names = g.display_labels
    system = realizability_system(g)
    sol = solve(system)
    if sol.consistent:
        return CriterionReport(Criterion.STZ_LINEAR, True,
                               {"kind": "solution", "x": list(sol.particular),
                                "free_vars": list(sol.free_vars), "rank": sol.rank},
                               f"{sol.count} solution(s)")
    bad = [system.equations[k] for k in sol.witness]
    text = [_format_equation(e, names) for e in bad]
    return CriterionReport(Criterion.STZ_LINEAR, False,
                           {"kind": "inconsistent", "equations": list(sol.witness),
                            "tags": [list(e.tag) for e in bad], "text": text},
                           "inconsistent: " + ", ".join(text))


def cycle_condition(w: WeightedInterlacementGraph, cycle: Sequence[int]) -> bool:
    """Sum of edge weights along a closed ``cycle`` is congruent to its length."""
    total = 0
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        total += w.weight(a, b)
    return total % 2 == len(cycle) % 2


def check_cycle_weight(w) -> CriterionReport:
    """Evenness conditions plus the weighted cycle condition on a fundamental
    cycle basis.

    Even degrees alone are not enough: the cycle condition only constrains
    edges, so non-adjacent pairs with an odd common neighbourhood must be
    rejected separately.  A BFS forest assigns ``X``; a non-tree edge breaking
    ``X_i + X_j = w(i, j) + 1`` closes a fundamental cycle that violates the
    condition, and if none does every cycle satisfies it.
    """
    if not isinstance(w, WeightedInterlacementGraph):
        w = weighted_graph(_graph(w))
    g = w.base
    names = g.display_labels
    even = check_evenness(g)
    if not even.verdict:
        return CriterionReport(Criterion.CYCLE_WEIGHT, False, even.witness, even.detail)
    x: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    for root in range(g.n):
        if root in x:
            continue
        x[root], parent[root] = 0, None
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.neighbors(u):
                if v not in x:
                    x[v] = x[u] ^ w.weight(u, v) ^ 1
                    parent[v] = u
                    queue.append(v)
    for i, j in g.edges:
        if x[i] ^ x[j] != w.weight(i, j) ^ 1:
            cycle = _tree_cycle(i, j, parent)
            total = sum(w.weight(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1]))
            return CriterionReport(Criterion.CYCLE_WEIGHT, False,
                                   {"kind": "cycle", "cycle": cycle,
                                    "length": len(cycle), "weight": total},
                                   f"cycle {_names(cycle, names)} has length {len(cycle)} "
                                   f"but weight {total}")
    return CriterionReport(Criterion.CYCLE_WEIGHT, True,
                           {"kind": "solution", "x": [x[i] for i in range(g.n)]})


def _tree_cycle(i: int, j: int, parent) -> List[int]:
    up_i = [i]
    while parent[up_i[-1]] is not None:
        up_i.append(parent[up_i[-1]])
    up_j = [j]
    while parent[up_j[-1]] is not None:
        up_j.append(parent[up_j[-1]])
    common = set(up_i) & set(up_j)
    while len(up_i) > 1 and up_i[-2] in common:
        up_i.pop()
    while up_j[-1] != up_i[-1]:
        up_j.pop()
    return up_i + up_j[-2::-1]


@dataclass(frozen=True)
class DehnResult:
    """Final word and every intermediate word, in the input code's symbol ids."""

    source: GaussCode
    word: Tuple[int, ...]
    trace: Tuple[Tuple[int, ...], ...]

    @property
    def code(self) -> GaussCode:
        return GaussCode.from_word(self.word, labels=self.source.display_labels)

    def format(self, word=None) -> str:
        names = self.source.display_labels
        sep = "" if all(len(t) == 1 for t in names) else " "
        return sep.join(names[s] for s in (self.word if word is None else word))

    def format_trace(self) -> List[str]:
        return [self.format(w) for w in self.trace]


def dehn_transform(c) -> DehnResult:
    """For each symbol in ascending order reverse the subword running from
    its first to its second occurrence (inclusive); one pass.

    ``trace`` starts with the input and has one entry per symbol.
    """
    c = _code(c)
    word = list(c.symbols)
    trace = [tuple(word)]
    for s in range(c.n):
        p = word.index(s)
        q = word.index(s, p + 1)
        word[p:q + 1] = word[p:q + 1][::-1]
        trace.append(tuple(word))
    return DehnResult(c, tuple(word), tuple(trace))


def _bipartite_report(criterion, g: InterlacementGraph, extra=None) -> CriterionReport:
    names = g.display_labels
    vertices = list(range(g.n))
    coloring, cycle = two_color(vertices, {v: g.neighbors(v) for v in vertices})
    if coloring is None:
        return CriterionReport(criterion, False, {"kind": "odd_cycle", "cycle": cycle, **(extra or {})},
                               f"odd cycle {_names(cycle, names)}")
    parts = [[v for v in vertices if coloring[v] == k] for k in (0, 1)]
    return CriterionReport(criterion, True,
                           {"kind": "coloring", "color": [coloring[v] for v in vertices],
                            "parts": parts, **(extra or {})},
                           "parts " + " / ".join(_names(p, names) for p in parts))


def check_dehn(c) -> CriterionReport:
    """Gauss parity plus a bipartite interlacement graph after the Dehn pass."""
    c = _code(c)
    parity = check_gauss_parity(c)
    if not parity.verdict:
        return CriterionReport(Criterion.DEHN, False, parity.witness, parity.detail)
    result = dehn_transform(c)
    g = interlacement_graph(result.word)
    g = InterlacementGraph(g.n, g.rows, c.display_labels)
    return _bipartite_report(Criterion.DEHN, g, {"transformed": list(result.word)})


def check_touch(c) -> CriterionReport:
    """Touch-realizable iff the interlacement graph is 2-colourable.

    Colour 0 means the chord is drawn inside the circle, colour 1 outside.
    """
    return _bipartite_report(Criterion.TOUCH, _graph(c))


@dataclass(frozen=True)
class ModifiedGraph:
    """Interlacement graph with every odd-weight edge subdivided.

    Original vertices are ``0..n-1``; the vertex subdividing edge ``(i, j)``
    is ``("u", i, j)``.
    """

    n: int
    subdivisions: Tuple[Tuple[int, int], ...]
    edges: Tuple[Tuple[Hashable, Hashable], ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False, repr=False)

    @property
    def vertices(self) -> List[Hashable]:
        return list(range(self.n)) + [("u", i, j) for i, j in self.subdivisions]

    def neighbors(self) -> Dict[Hashable, List[Hashable]]:
        out: Dict[Hashable, List[Hashable]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            out[a].append(b)
            out[b].append(a)
        return out

    def vertex_name(self, v) -> str:
        names = self.labels or tuple(str(i + 1) for i in range(self.n))
        if isinstance(v, tuple):
            return f"u{names[v[1]]}_{names[v[2]]}"
        return names[v]


def build_modified_graph(w) -> ModifiedGraph:
    if not isinstance(w, WeightedInterlacementGraph):
        w = weighted_graph(_graph(w))
    g = w.base
    subdivided = []
    edges: List[Tuple[Hashable, Hashable]] = []
    for i, j in g.edges:
        if w.omega[(i, j)]:
            u = ("u", i, j)
            subdivided.append((i, j))
            edges.extend([(i, u), (u, j)])
        else:
            edges.append((i, j))
    return ModifiedGraph(g.n, tuple(subdivided), tuple(edges), g.labels)


def check_main_theorem(c) -> CriterionReport:
    """Evenness conditions plus bipartiteness of the subdivided graph.

    On success the colours of the original vertices solve the
    realizability system.
    """
    g = _graph(c)
    even = check_evenness(g)
    if not even.verdict:
        return CriterionReport(Criterion.MAIN, False, even.witness, even.detail)
    mg = build_modified_graph(weighted_graph(g))
    coloring, cycle = two_color(mg.vertices, mg.neighbors())
    if coloring is None:
        return CriterionReport(Criterion.MAIN, False, {"kind": "odd_cycle", "cycle": [
            list(v) if isinstance(v, tuple) else v for v in cycle]},
            "odd cycle " + "(" + ", ".join(mg.vertex_name(v) for v in cycle) + ")")
    x = [coloring[v] for v in range(g.n)]
    return CriterionReport(Criterion.MAIN, True, {"kind": "solution", "x": x},
                           f"{len(mg.subdivisions)} subdivided edge(s)")


def check_stz_bruteforce(g, limit: int = 24) -> CriterionReport:
    g = _graph(g)
    k = stz_bruteforce(adjacency_matrix(g), limit)
    if k is None:
        return CriterionReport(Criterion.STZ_BRUTEFORCE, False, None,
                               "no diagonal D makes M + D idempotent")
    return CriterionReport(Criterion.STZ_BRUTEFORCE, True, {"kind": "diagonal", "K": sorted(k)})


CHECKS = {
    Criterion.EVENNESS: lambda c: check_evenness(c),
    Criterion.GAUSS_PARITY: check_gauss_parity,
    Criterion.GL123: lambda c: check_gl123(c),
    Criterion.STZ_LINEAR: lambda c: check_stz_linear(c),
    Criterion.CYCLE_WEIGHT: lambda c: check_cycle_weight(c),
    Criterion.DEHN: check_dehn,
    Criterion.TOUCH: check_touch,
    Criterion.MAIN: check_main_theorem,
    Criterion.STZ_BRUTEFORCE: lambda c: check_stz_bruteforce(c),
}


def check_all(c, bruteforce_limit: int = 24) -> List[CriterionReport]:
    """Run every criterion; raise :class:`CriteriaDisagree` if the exact ones split."""
    c = _code(c)
    reports = []
    for crit, fn in CHECKS.items():
        if crit is Criterion.STZ_BRUTEFORCE and c.n > bruteforce_limit:
            continue
        reports.append(fn(c))
    verdicts = {r.criterion: r.verdict for r in reports if r.criterion in EXACT}
    if len(set(verdicts.values())) > 1:
        raise CriteriaDisagree(f"{c}: " + ", ".join(f"{k.value}={v}" for k, v in verdicts.items()))
    return reports


def is_realizable(c) -> bool:
    return check_stz_linear(c).verdict
