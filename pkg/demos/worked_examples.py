"""Two six-chord diagrams, one realizable and one not, taken apart step by step."""

from __future__ import annotations

# %%
from gaussdiag import parse_code
from gaussdiag.criteria import check_all, check_stz_linear, realizability_system
from gaussdiag.gf2 import solve, square
from gaussdiag.interlace import adjacency_matrix, interlacement_graph, weighted_graph

good = parse_code("432156346215")
bad = parse_code("123451632546")

# %% The interlacement matrix and its square, vertices in label order.
for code in (good, bad):
    g = interlacement_graph(code, by_label=True)
    m = adjacency_matrix(g)
    print(code, "edges:", len(g.edges))
    print(m)
    print("M^2 =")
    print(square(m))
    print()

# %% Entries of M^2 on edges are the weights; odd ones get subdivided later.
w = weighted_graph(interlacement_graph(good, by_label=True))
print("odd edges:", [(w.base.display_labels[i], w.base.display_labels[j]) for i, j in w.odd_edges])

# %% The linear system. Every edge contributes X_i + X_j = <m_i, m_j> + 1.
g = interlacement_graph(good, by_label=True)
system = realizability_system(g)
for e in system.equations:
    if e.support:
        print(" ", e.format(g.display_labels))
sol = solve(system)
print("rank", sol.rank, "free", [g.display_labels[k] for k in sol.free_vars])
for x in sol.solutions():
    print("  X =", x)

# %% The other diagram: its system has no solution, and the solver says why.
report = check_stz_linear(interlacement_graph(bad, by_label=True))
print(report.verdict, report.detail)

# %% All criteria side by side.
for code in (good, bad):
    print(code)
    for r in check_all(code):
        print(f"  {r.criterion.value:18} {'yes' if r.verdict else 'no ':3}  {r.detail}")
