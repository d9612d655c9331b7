"""DOT and TikZ output for diagrams, interlacement graphs and their variants."""

from __future__ import annotations

import math

from .codec import GaussCode
from .criteria import ModifiedGraph, build_modified_graph, dehn_transform
from .interlace import interlacement_graph, to_dot, weighted_graph

WHAT = ("diagram", "graph", "weighted", "modified", "dehn")
FORMATS = ("dot", "tikz")


def _angle(k: int, count: int) -> float:
    # first position at the top, counterclockwise
    return 90.0 + 360.0 * k / count


def diagram_tikz(code: GaussCode, radius: float = 3.0) -> str:
    names = code.display_labels
    size = len(code.symbols)
    lines = ["\\begin{tikzpicture}[scale=0.6]",
             f"  \\draw[line width=2] (0,0) circle ({radius:g});"]
    for k, s in enumerate(code.symbols):
        a = _angle(k, size)
        lines.append(f"  \\fill ({a:g}:{radius:g}) circle (3pt);")
        lines.append(f"  \\node at ({a:g}:{radius + 0.5:g}) {{${names[s]}$}};")
    for p, q in code.positions():
        lines.append(f"  \\draw[line width=2] ({_angle(p, size):g}:{radius:g}) -- "
                     f"({_angle(q, size):g}:{radius:g});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def diagram_dot(code: GaussCode) -> str:
    """Circle positions joined in order, chords dashed; meant for ``circo``."""
    names = code.display_labels
    size = len(code.symbols)
    lines = ["graph diagram {", "  layout=circo;", "  node [shape=circle];"]
    for k, s in enumerate(code.symbols):
        lines.append(f'  p{k} [label="{names[s]}"];')
    for k in range(size):
        if size > 1:
            lines.append(f"  p{k} -- p{(k + 1) % size};")
    for p, q in code.positions():
        lines.append(f"  p{p} -- p{q} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _graph_tikz(names, edges, bold=(), radius: float = 3.0) -> str:
    count = len(names)
    lines = ["\\begin{tikzpicture}[scale=0.6]"]
    for k, name in enumerate(names):
        a = 90.0 + 360.0 * k / max(count, 1)
        lines.append(f"  \\node[circle, fill, inner sep=2pt, label={a:g}:${name}$] "
                     f"(v{k}) at ({a:g}:{radius:g}) {{}};")
    for i, j in edges:
        style = "line width=2" if (i, j) in bold else "thin"
        lines.append(f"  \\draw[{style}] (v{i}) -- (v{j});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def modified_dot(mg: ModifiedGraph) -> str:
    lines = ["graph modified {"]
    for v in mg.vertices:
        shape = ", shape=point" if isinstance(v, tuple) else ""
        lines.append(f'  "{mg.vertex_name(v)}" [label="{mg.vertex_name(v)}"{shape}];')
    for a, b in mg.edges:
        lines.append(f'  "{mg.vertex_name(a)}" -- "{mg.vertex_name(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def modified_tikz(mg: ModifiedGraph) -> str:
    names = [mg.vertex_name(v) for v in mg.vertices]
    index = {v: k for k, v in enumerate(mg.vertices)}
    return _graph_tikz(names, [(index[a], index[b]) for a, b in mg.edges])


def render(code: GaussCode, what: str = "graph", fmt: str = "dot") -> str:
    if what not in WHAT:
        raise ValueError(f"unknown object {what!r}")
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if what in ("diagram", "dehn"):
        if what == "dehn":
            code = dehn_transform(code).code
        return diagram_dot(code) if fmt == "dot" else diagram_tikz(code)
    g = interlacement_graph(code, by_label=True)
    if what == "modified":
        mg = build_modified_graph(weighted_graph(g))
        return modified_dot(mg) if fmt == "dot" else modified_tikz(mg)
    if what == "weighted":
        w = weighted_graph(g)
        if fmt == "dot":
            return to_dot(w, "weighted")
        return _graph_tikz(g.display_labels, g.edges, set(w.odd_edges))
    if fmt == "dot":
        return to_dot(g)
    return _graph_tikz(g.display_labels, g.edges)
