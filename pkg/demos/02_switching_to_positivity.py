"""Neutralize the negative inverse edges by switching on fundamental cuts.

The involution image phi(T) is a spanning tree of the inverse graph.
Every non-spanning inverse edge closes a cycle through some fundamental
cuts of phi(T); switching the signed graph on the cuts whose sign
product is negative turns every edge positive.  A non-spanning edge vw
at tree distance 2m-1 lies in exactly m-1 negative cuts.
"""

from invtrees import (fundamental_cut, inverse_signed_graph,
                      negative_cut_count, negative_fundamental_cuts,
                      path_tree, switch, tree_path, underlying_graph)

t = path_tree(6)
sg = inverse_signed_graph(t)
print("signed inverse of P6:")
for e, s in sorted(dict(sg.signs).items()):
    print(f"  {e}: {s:+d}")

cuts = negative_fundamental_cuts(t)
print(f"\nnegative fundamental cuts of phi(T): "
      f"{[sorted(c.side) for c in cuts]}")

for e in underlying_graph(sg).sorted_edges():
    dist = len(tree_path(t, e[0], e[1])) - 1
    k = negative_cut_count(t, e)
    if dist > 1:
        print(f"edge {e}: tree distance {dist} = 2*{(dist + 1) // 2} - 1, "
              f"lies in {k} negative cuts")

fixed = sg
for c in cuts:
    fixed = switch(fixed, c)
print(f"\nafter switching on every negative cut: "
      f"{sorted(dict(fixed.signs).items())}")
assert all(s == 1 for _, s in fixed.signs)
print("every sign is +1: the inverse graph is switching-equivalent to "
      "an ordinary graph.")
