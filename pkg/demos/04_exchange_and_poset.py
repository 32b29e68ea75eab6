"""Tree exchanges and the partial order they generate.

One exchange adds the involution image of an inverse-graph edge and
deletes a non-matching edge on the resulting cycle.  The new tree's
inverse graph is a proper subgraph of the old one and its median
eigenvalue strictly increases, so iterated exchanges order the
invertible trees of each size.  Maximal elements are exactly the
self-inverse trees (rooted products with an edge); the path is the
unique minimum.
"""

from invtrees import (build_poset, exchange_candidates, inverse_graph,
                      maximal_elements, minimal_elements, mobius_function,
                      path_tree, poset_to_dot, tree_exchange,
                      verify_exchange_lemma, witness_non_minimal)

t = path_tree(6)
moves = exchange_candidates(t)
print(f"P6 admits {len(moves)} exchange moves; taking {moves[0]}")
new = tree_exchange(t, moves[0])
print(f"result: {new.sorted_edges()}")
print(f"inverse edges: {len(inverse_graph(t).edges)} -> "
      f"{len(inverse_graph(new).edges)} (proper subgraph)")
report = verify_exchange_lemma(t, moves[0])
print(f"lemma clauses: { {name: ok for name, ok, _ in report.clauses} }")

back = witness_non_minimal(new)
print(f"\nwitness that the result is not minimal: exchange "
      f"{back[1]} applied to {back[0].sorted_edges()}")

for n in (3, 4):
    p = build_poset(n)
    print(f"\norder on {2 * n}-vertex invertible trees: "
          f"{len(p.nodes)} classes, {len(p.covers)} covers")
    print(f"  maximal: {maximal_elements(p)}, "
          f"minimal: {minimal_elements(p)}")
    mu = mobius_function(p)
    nonzero = {(i, j): v for (i, j), v in sorted(mu.items())
               if v and i != j}
    print(f"  Moebius values off the diagonal: {nonzero}")

print("\nGraphviz source for the 8-vertex Hasse diagram:\n")
print(poset_to_dot(build_poset(4)))
