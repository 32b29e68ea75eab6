"""Shared test helpers: independent oracles kept deliberately naive."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from invtrees.trees import Tree, edge, tree


def prufer_to_tree(seq: list[int]) -> Tree:
    """Decode a Prufer sequence into the labeled tree on len(seq)+2
    vertices.  Independent of the package's own generators."""
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return tree(n, edges)


def labeled_trees(n: int):
    """All labeled trees on n vertices via the Prufer correspondence."""
    if n == 1:
        yield tree(1, [])
        return
    if n == 2:
        yield tree(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_to_tree(list(seq))


def all_perfect_matchings(t: Tree) -> list[frozenset]:
    """Brute-force enumeration of every perfect matching of a tree."""
    edges = t.sorted_edges()

    def rec(covered: frozenset, chosen: tuple, start: int):
        if len(covered) == t.n:
            yield frozenset(chosen)
            return
        free = min(v for v in range(t.n) if v not in covered)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if free not in (u, v):
                continue
            if u in covered or v in covered:
                continue
            yield from rec(covered | {u, v}, chosen + (edges[i],), i + 1)

    if t.n % 2:
        return []
    return list(rec(frozenset(), (), 0))


@st.composite
def random_trees(draw, min_n: int = 1, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return tree(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2,
                        max_size=n - 2))
    return prufer_to_tree(seq)


def edges_of(t: Tree) -> set:
    return {edge(u, v) for u, v in t.edges}
