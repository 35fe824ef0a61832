# Strongly regular graphs: the line transform breaks their symmetry.
# Run: python demos/04_strongly_regular.py

from linewl import generators as gen
from linewl.line import iterated_line_graph, line_graph
from linewl.structure import srg_params
from linewl.wl import wl_distinguishes_pair

# %% parameters of the built-in instances
for name, g in gen.srg_instances():
    print(f"{name:14s} {srg_params(g)}")

# %% L(G) of a connected srg with triangles is no longer strongly regular
for g in (gen.rook(4), gen.shrikhande(), gen.paley(13)):
    print(f"{g.name:11s} L(G) srg? {srg_params(line_graph(g).result)}")

# %% only the short cycles survive every transform
for n in (3, 4, 5, 6):
    c = gen.cycle(n)
    print(f"C{n}:", [str(srg_params(iterated_line_graph(c, j))) for j in range(3)])

# %% and that is what lets 3-WL separate the pairs after one transform
for name, a, b in gen.srg_pairs():
    before = wl_distinguishes_pair(a, b, 3, 0).distinguished
    after = wl_distinguishes_pair(a, b, 3, 1).distinguished
    print(f"{name:28s} 3-WL on G: {before!s:5s}  on L(G): {after}")
