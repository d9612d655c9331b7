"""Two-colouring by breadth-first search, with an odd cycle on failure."""

from __future__ import annotations

from collections import deque
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple


def two_color(vertices: Sequence[Hashable],
              neighbors: Dict[Hashable, Iterable[Hashable]]
              ) -> Tuple[Optional[Dict[Hashable, int]], Optional[List[Hashable]]]:
    """Return ``(coloring, None)`` for a bipartite graph, else ``(None, cycle)``.

    Components are rooted at their first vertex in ``vertices`` order and the
    root gets colour 0.  The odd cycle is a closed walk without repeated
    vertices, listed without repeating its start.
    """
    color: Dict[Hashable, int] = {}
    parent: Dict[Hashable, Optional[Hashable]] = {}
    depth: Dict[Hashable, int] = {}
    for root in vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return None, _cycle_through(u, v, parent, depth)
    return color, None


def _cycle_through(u, v, parent, depth) -> List[Hashable]:
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor, right repeats it
    return left + right[-2::-1]


def is_bipartite(vertices, neighbors) -> bool:
    return two_color(vertices, neighbors)[0] is not None
