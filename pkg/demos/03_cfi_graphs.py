# CFI graphs: gadgets glued along a base graph, with one edge twisted.
# Run: python demos/03_cfi_graphs.py

from linewl import generators as gen
from linewl.iso import are_isomorphic
from linewl.structure import find_claw, is_line_graph
from linewl.wl import wl_distinguishes_pair

# %% the gadget X_3: 3 a-ports, 3 b-ports, one middle node per even subset
x = gen.cfi_gadget(3)
print("X_3 nodes/edges:", x.graph.node_count, x.graph.edge_count)
for m, s in zip(x.m_nodes, x.m_subsets):
    print(f"  m{sorted(s)} ->", x.graph.neighbors(m))
print("an induced claw:", find_claw(x.graph))

# %% the pair over K4 is not isomorphic, yet looks the same to 1-WL
p = gen.cfi_pair(gen.complete(4))
print("nodes:", p.untwisted.node_count, " same degrees:", p.untwisted.degree_sequence == p.twisted.degree_sequence)
print("isomorphic:", bool(are_isomorphic(p.untwisted, p.twisted)))

# %% the line transform cannot help here: CFI members are not line graphs,
# and the verdict of 3-WL is the same before and after
for base in gen.cfi_bases():
    q = gen.cfi_pair(base)
    v = [wl_distinguishes_pair(q.untwisted, q.twisted, k, d).distinguished for k, d in [(1, 0), (3, 0), (3, 1)]]
    print(f"{base.name:9s} line graph: {is_line_graph(q.untwisted)!s:5s}  1-WL: {v[0]!s:5s}  3-WL: {v[1]!s:5s}  3-WL on L: {v[2]}")
