"""Exact inverses of invertible trees.

Two independent routes to the inverse are kept side by side: the
combinatorial one (signed alternating-path entries) and an integer
linear-algebra oracle (fraction-free elimination).  Everything here is
exact integer arithmetic; there is no floating point in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import polynomials as pol
from .errors import NotInvertible, NotSpanningTreeEdge, Singular
from .trees import (Edge, Matching, Tree, apply_involution, edge,
                    involution, is_alternating, perfect_matching,
                    tree_path, _rooted_code, _strip_to_centers)


@dataclass(frozen=True)
class Graph:
    """A simple graph; used for inverse graphs, which may have cycles."""

    n: int
    edges: frozenset  # of Edge

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class SignedGraph:
    """A simple graph with edge signs in {+1, -1}."""

    n: int
    signs: tuple  # sorted tuple of (Edge, sign)

    @staticmethod
    def from_dict(n: int, signs: dict) -> "SignedGraph":
        return SignedGraph(n, tuple(sorted(signs.items())))

    def sign_map(self) -> dict:
        return dict(self.signs)

    def edge_set(self) -> frozenset:
        return frozenset(e for e, _ in self.signs)

    def matrix(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for (u, v), s in self.signs:
            a[u][v] = a[v][u] = s
        return a


# ---------------------------------------------------------------------------
# characteristic polynomial


def char_poly(t: Tree) -> list[int]:
    """Exact integer characteristic polynomial of A(T), ascending
    coefficients, monic of degree n.

    Uses the leaf recurrence phi(T) = t*phi(T-v) - phi(T-v-u) for a leaf
    v with neighbour u; forests factor over components.  Components are
    memoized by canonical code, so isomorphic subtrees are computed once.
    """
    adj = [set(a) for a in t.adjacency()]
    return _forest_charpoly(adj, frozenset(range(t.n)))


_CHARPOLY_CACHE: dict = {}


def _forest_charpoly(adj, verts: frozenset) -> list[int]:
    result = [1]
    seen = set()
    for start in sorted(verts):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        sub = [a & comp for a in adj]
        code = _ahu_code(sub, comp)
        part = _CHARPOLY_CACHE.get(code)
        if part is None:
            part = tuple(_component_charpoly(sub, frozenset(comp)))
            _CHARPOLY_CACHE[code] = part
        result = pol.mul(result, list(part))
    return result


def _component_charpoly(adj, verts: frozenset) -> list[int]:
    if len(verts) == 1:
        return [0, 1]
    leaf = min(v for v in verts if len(adj[v] & verts) == 1)
    nbr = next(iter(adj[leaf] & verts))
    without_leaf = _forest_charpoly(adj, verts - {leaf})
    without_both = _forest_charpoly(adj, verts - {leaf, nbr})
    return pol.sub(pol.mul([0, 1], without_leaf), without_both)


def _ahu_code(adj, verts) -> bytes:
    centers = _strip_to_centers(len(adj), [sorted(a) for a in adj], verts)
    allowed = set(verts)
    return min(_rooted_code(c, [sorted(a) for a in adj], allowed)
               for c in centers)


# ---------------------------------------------------------------------------
# combinatorial inverse


def inverse_entry(t: Tree, m: Matching, a: int, b: int) -> int:
    """Entry (a, b) of A(T)^{-1}: (-1)^(1-k) when the a-b path is
    alternating with 2k vertices, else 0."""
    if a == b:
        return 0
    path = tree_path(t, a, b)
    if not is_alternating(path, m):
        return 0
    k = len(path) // 2
    return 1 if k % 2 == 1 else -1


def inverse_signed_graph(t: Tree) -> SignedGraph:
    """The signed graph whose signed adjacency matrix is A(T)^{-1}."""
    m = perfect_matching(t)
    if m is None:
        raise NotInvertible("no perfect matching")
    signs = {}
    for a in range(t.n):
        for b in range(a + 1, t.n):
            s = inverse_entry(t, m, a, b)
            if s:
                signs[(a, b)] = s
    return SignedGraph.from_dict(t.n, signs)


def underlying_graph(g: SignedGraph) -> Graph:
    """Forget the signs."""
    return Graph(g.n, g.edge_set())


def inverse_graph(t: Tree) -> Graph:
    """The inverse graph T^{-1} (underlying graph of the signed
    inverse)."""
    return underlying_graph(inverse_signed_graph(t))


def signed_tree_image(t: Tree, m: Matching) -> SignedGraph:
    """T-plus-minus: phi(T) with matching edges positive and all other
    edges negative."""
    phi = involution(t, m)
    signs = {}
    for e in t.edges:
        u, v = e
        img = edge(phi[u], phi[v])
        signs[img] = 1 if e in m else -1
    return SignedGraph.from_dict(t.n, signs)


# ---------------------------------------------------------------------------
# integer-matrix oracle


def adjacency_matrix(t: Tree) -> list[list[int]]:
    a = [[0] * t.n for _ in range(t.n)]
    for u, v in t.edges:
        a[u][v] = a[v][u] = 1
    return a


def exact_inverse(t: Tree) -> list[list[int]]:
    """Exact integer inverse of A(T) by fraction-free elimination.

    Valid because det A(T) = +-1 for invertible trees; raises Singular
    when the determinant is 0 (no perfect matching).
    """
    return invert_unimodular(adjacency_matrix(t))


def invert_unimodular(a: list[list[int]]) -> list[list[int]]:
    """Invert an integer matrix with det = +-1, fraction-free.

    Bareiss forward elimination on [A | I] keeps every intermediate value
    an integer; back substitution divides only by the (+-1) determinant
    and earlier pivots, all of which are exact.
    """
    n = len(a)
    m = [list(row) + [int(i == j) for j in range(n)]
         for i, row in enumerate(a)]
    sign = 1
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                raise Singular("matrix is singular")
        for i in range(k + 1, n):
            for j in range(k + 1, 2 * n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    det = sign * m[n - 1][n - 1]
    if det not in (1, -1):
        raise Singular(f"determinant {det} is not a unit")
    # rational back substitution; integrality is guaranteed by det = +-1
    inv = [[Fraction(0)] * n for _ in range(n)]
    for col in range(n):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = Fraction(m[i][n + col])
            for j in range(i + 1, n):
                s -= m[i][j] * x[j]
            x[i] = s / m[i][i]
        for i in range(n):
            assert x[i].denominator == 1
            inv[i][col] = int(x[i])
    return inv


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def is_identity(a: list[list[int]]) -> bool:
    return all(a[i][j] == int(i == j)
               for i in range(len(a)) for j in range(len(a)))


# ---------------------------------------------------------------------------
# fundamental cuts and switching


@dataclass(frozen=True)
class Cut:
    """An edge cut, stored by one vertex side.

    Canonical side: the smaller of the two sides, ties broken by the
    side containing the smaller-labeled endpoint of the defining edge.
    """

    side: frozenset

    def crosses(self, e: Edge) -> bool:
        return (e[0] in self.side) != (e[1] in self.side)


def fundamental_cut(g: Graph, spanning_edges: frozenset, e: Edge) -> Cut:
    """The unique cut of g containing spanning-tree edge e and no other
    spanning-tree edge."""
    e = edge(*e)
    if e not in spanning_edges:
        raise NotSpanningTreeEdge(f"{e} not in the spanning tree")
    adj = [[] for _ in range(g.n)]
    for u, v in spanning_edges:
        if (u, v) != e:
            adj[u].append(v)
            adj[v].append(u)
    side = {e[0]}
    stack = [e[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in side:
                side.add(w)
                stack.append(w)
    other = set(range(g.n)) - side
    if len(other) < len(side) or (len(other) == len(side) and e[0] not in side):
        side = other
    return Cut(frozenset(side))


def switch(g: SignedGraph, cut: Cut) -> SignedGraph:
    """Negate the signs of all edges crossing the cut."""
    signs = {e: (-s if cut.crosses(e) else s) for e, s in g.signs}
    return SignedGraph.from_dict(g.n, signs)


def negative_fundamental_cuts(t: Tree) -> list[Cut]:
    """Fundamental cuts of the inverse graph for the negative edges of
    phi(T) (the images of the non-matching edges of T)."""
    m = perfect_matching(t)
    if m is None:
        raise NotInvertible("no perfect matching")
    g = inverse_graph(t)
    phi_t = apply_involution(t, involution(t, m))
    cuts = []
    for e, s in signed_tree_image(t, m).signs:
        if s == -1:
            cuts.append(fundamental_cut(g, phi_t.edges, e))
    return cuts


def negative_cut_count(t: Tree, e: Edge) -> int:
    """Number of negative fundamental cuts containing the non-spanning
    edge e of the inverse graph."""
    return sum(1 for c in negative_fundamental_cuts(t) if c.crosses(e))


# ---------------------------------------------------------------------------
# Godsil reconstruction report


@dataclass
class GodsilReport:
    clauses: list  # of (name, ok, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.clauses)

    @property
    def first_failure(self) -> Optional[str]:
        for name, ok, detail in self.clauses:
            if not ok:
                return f"{name}: {detail}"
        return None


def verify_godsil(t: Tree) -> GodsilReport:
    """Check the inverse-reconstruction clauses on one tree.

    (a) oracle inverse has entries in {0, +-1};
    (b) the combinatorial signed inverse matches the oracle entrywise;
    (c) the signed image of T is a signed subgraph of the inverse;
    (d) switching on all negative fundamental cuts makes every sign +1;
    (e) phi(T) is a spanning tree of the inverse graph.
    """
    m = perfect_matching(t)
    if m is None:
        raise NotInvertible("no perfect matching")
    clauses = []

    inv = exact_inverse(t)
    ok_a = all(inv[i][j] in (-1, 0, 1)
               for i in range(t.n) for j in range(t.n))
    clauses.append(("a:entries", ok_a, "oracle inverse not a (0,+-1) matrix"))

    sg = inverse_signed_graph(t)
    ok_b = sg.matrix() == inv
    clauses.append(("b:entrywise", ok_b,
                    "signed graph disagrees with oracle inverse"))

    image = signed_tree_image(t, m)
    gmap = sg.sign_map()
    bad = [e for e, s in image.signs if gmap.get(e) != s]
    clauses.append(("c:subgraph", not bad,
                    f"image edges missing or mis-signed: {bad}"))

    h = sg
    for cut in negative_fundamental_cuts(t):
        h = switch(h, cut)
    ok_d = all(s == 1 for _, s in h.signs)
    clauses.append(("d:switching", ok_d,
                    "negative signs remain after switching"))

    phi_t = apply_involution(t, involution(t, m))
    ok_e = phi_t.edges <= sg.edge_set()
    clauses.append(("e:spanning", ok_e,
                    "phi(T) is not contained in the inverse graph"))
    return GodsilReport(clauses)


# ---------------------------------------------------------------------------
# serialization


def signed_graph_to_json(g: SignedGraph) -> str:
    return json.dumps(
        {"n": g.n,
         "edges": [{"u": u, "v": v, "sign": s} for (u, v), s in g.signs]},
        indent=2)


def signed_graph_to_dot(g: SignedGraph,
                        matching: Optional[Matching] = None,
                        name: str = "inverse") -> str:
    """DOT text: negative edges dashed, positive solid, matching-image
    edges bold."""
    matching = matching or frozenset()
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v), s in g.signs:
        style = "solid" if s == 1 else "dashed"
        if (u, v) in matching:
            style += ",bold"
        lines.append(f'  {u} -- {v} [style="{style}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_to_json(a: list[list[int]]) -> str:
    return json.dumps(a)
