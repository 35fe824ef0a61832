# Line graphs: every edge becomes a node, two nodes touch when their edges share an endpoint.
# Run: python demos/01_line_graphs.py

from math import comb

from linewl import generators as gen
from linewl.iso import are_isomorphic
from linewl.line import iterated_line_graph, line_degree_check, line_graph
from linewl.structure import contains_claw, is_line_graph

# %% the small example: a triangle abc with a pendant edge bd
from linewl.graph import build_graph

g = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
m = line_graph(g)
print("edges of G   ->", m.edge_of)
print("edges of L(G) ->", [(m.edge_of[x], m.edge_of[y]) for x, y in m.result.edges])
print("degree identity d(u)+d(v)-2 holds:", line_degree_check(g, m))

# %% sizes: |V(L)| = |E|, |E(L)| = sum C(d, 2)
for name, h in [("K4", gen.complete(4)), ("petersen", gen.petersen()), ("P6", gen.path(6))]:
    lh = line_graph(h).result
    print(f"{name:9s} n={h.node_count:2d} m={h.edge_count:2d} -> L: n={lh.node_count:2d} m={lh.edge_count:2d}",
          "sum C(d,2) =", sum(comb(d, 2) for d in h.degrees))

# %% Whitney's one exception: the triangle and the claw share a line graph
print("L(C3) ~ L(K1,3):", bool(are_isomorphic(line_graph(gen.cycle(3)).result, line_graph(gen.star(3)).result)))

# %% iterating: paths shrink, cycles stay put, anything else grows
for name, h in [("P5", gen.path(5)), ("C5", gen.cycle(5)), ("K1,3", gen.star(3)), ("K4", gen.complete(4))]:
    print(f"{name:5s}", [iterated_line_graph(h, j).node_count for j in range(5)])

# %% line graphs never contain an induced claw, and the recognizer agrees
lp = line_graph(gen.petersen()).result
print("claw in L(petersen):", contains_claw(lp), " is_line_graph:", is_line_graph(lp))
print("claw in petersen:   ", contains_claw(gen.petersen()), " is_line_graph:", is_line_graph(gen.petersen()))
