# The Weisfeiler-Leman hierarchy on a few classic hard pairs.
# Run: python demos/02_wl_hierarchy.py

from linewl import generators as gen
from linewl.graph import disjoint_union
from linewl.wl import color_refinement, wl_refine

# %% color refinement on one graph: a path splits by distance to its ends
print("P5 colors:", color_refinement(gen.path(5)).tolist())
print("petersen colors:", color_refinement(gen.petersen()).tolist())

pairs = [
    ("C6 vs 2C3", gen.cycle(6), disjoint_union([gen.cycle(3), gen.cycle(3)])),
    ("prism vs K3,3", gen.prism(3), gen.complete_bipartite(3, 3)),
    ("rook 4x4 vs shrikhande", gen.rook(4), gen.shrikhande()),
]

# %% which k separates each pair, and at which round
for name, a, b in pairs:
    row = []
    for k in (1, 2, 3, 4):
        part, v = wl_refine(a, b, k)
        row.append(f"k={k}: {'yes @' + str(v.decided_at_round) if v.distinguished else 'no'}")
    print(f"{name:24s}", "  ".join(row))

# %% joint partition sizes per round for 3-WL on the srg pair
part, v = wl_refine(gen.rook(4), gen.shrikhande(), 3, early_exit=False)
print("3-WL classes per round:", part.class_counts(), "stable:", part.stable)
