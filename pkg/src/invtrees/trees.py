"""Labeled trees, perfect matchings, the matching involution, paths and
canonical forms.

Vertices are the integers 0..n-1.  Edges are stored as sorted tuples
(u, v) with u < v.  All values are immutable; every operation is a pure
function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import NotATree, NotPerfect, ParseError, SameVertex

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to a sorted tuple."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertex set {0..n-1}."""

    n: int
    edges: frozenset  # of Edge

    def __post_init__(self):
        if self.n < 1:
            raise NotATree("vertex count must be positive")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise NotATree(f"bad edge {e} for n={self.n}")
        if len(self.edges) != self.n - 1:
            raise NotATree(
                f"{len(self.edges)} edges, expected {self.n - 1}")
        if _component(self.n, self.edges, 0) != set(range(self.n)):
            raise NotATree("graph is disconnected")

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return _adjacency(self.n, self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def tree(n: int, edges: Iterable[Iterable[int]]) -> Tree:
    """Build a Tree from any iterable of vertex pairs."""
    return Tree(n, frozenset(edge(u, v) for u, v in edges))


def path_tree(n: int) -> Tree:
    """The path 0-1-...-(n-1)."""
    return tree(n, ((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> Tree:
    """The star with center 0."""
    return tree(n, ((0, i) for i in range(1, n)))


def _component(n: int, edges: frozenset, start: int) -> set:
    adj = _adjacency(n, edges)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@lru_cache(maxsize=None)
def _adjacency(n: int, edges: frozenset) -> tuple[tuple[int, ...], ...]:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return tuple(tuple(sorted(a)) for a in adj)


# ---------------------------------------------------------------------------
# edge-list text format


def parse_tree(text: str) -> Tree:
    """Parse the `.elist` format: first line n, then one "u v" per line.

    Lines starting with '#' and blank lines are ignored; edge order is
    irrelevant.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count: {lines[0]!r}")
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range in {ln!r}")
        if u == v:
            raise NotATree(f"self-loop {ln!r}")
        if edge(u, v) in edges:
            raise NotATree(f"duplicate edge {ln!r}")
        edges.add(edge(u, v))
    return Tree(n, frozenset(edges))


def format_tree(t: Tree) -> str:
    """Serialize a tree back to `.elist` text (deterministic order)."""
    lines = [str(t.n)]
    lines += [f"{u} {v}" for u, v in t.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# perfect matchings and the involution

Matching = frozenset  # of Edge


def perfect_matching(t: Tree) -> Optional[Matching]:
    """The unique perfect matching of a tree, or None.

    Leaves are forced: a leaf must be matched to its only neighbour.
    Repeatedly matching leaves (ascending vertex index per round) and
    deleting both ends either covers every vertex or proves no perfect
    matching exists.
    """
    if t.n % 2 == 1:
        return None
    deg = [t.degree(v) for v in range(t.n)]
    adj = [set(a) for a in t.adjacency()]
    alive = [True] * t.n
    pairs = []
    remaining = t.n
    leaves = deque(sorted(v for v in range(t.n) if deg[v] == 1))
    while leaves:
        v = leaves.popleft()
        if not alive[v]:
            continue
        if deg[v] == 0:
            return None  # stranded isolated vertex
        u = next(iter(adj[v]))
        pairs.append(edge(u, v))
        for x in (v, u):
            alive[x] = False
            remaining -= 1
            for w in list(adj[x]):
                adj[w].discard(x)
                adj[x].discard(w)
                deg[w] -= 1
                if alive[w] and deg[w] <= 1:
                    leaves.append(w)
            deg[x] = 0
    if remaining:
        return None
    return frozenset(pairs)


Involution = tuple  # perm as tuple, perm[v] = matched partner of v


def involution(t: Tree, m: Matching) -> Involution:
    """The fixed-point-free involution swapping the ends of every
    matching edge."""
    perm = [-1] * t.n
    for u, v in m:
        perm[u] = v
        perm[v] = u
    if -1 in perm:
        raise NotPerfect("matching does not cover every vertex")
    return tuple(perm)


def apply_perm(t: Tree, perm: Sequence[int]) -> Tree:
    """Relabel a tree by a vertex permutation."""
    return tree(t.n, ((perm[u], perm[v]) for u, v in t.edges))


def apply_involution(t: Tree, phi: Involution) -> Tree:
    """The relabeled tree phi(T); isomorphic to T and fixes the matching
    edges setwise."""
    return apply_perm(t, phi)


# ---------------------------------------------------------------------------
# paths and alternation

VertexPath = tuple  # ordered vertex sequence


def tree_path(t: Tree, a: int, b: int) -> VertexPath:
    """The unique a-b path, as a vertex sequence."""
    if a == b:
        raise SameVertex(f"path endpoints coincide: {a}")
    adj = t.adjacency()
    parent = {a: None}
    q = deque([a])
    while q:
        v = q.popleft()
        if v == b:
            break
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                q.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def path_edges(path: VertexPath) -> list[Edge]:
    return [edge(path[i], path[i + 1]) for i in range(len(path) - 1)]


def is_alternating(path: VertexPath, m: Matching) -> bool:
    """True iff the path has 2k-1 edges alternating in/out of the
    matching, starting and ending with matching edges."""
    es = path_edges(path)
    if len(es) % 2 == 0:
        return False
    for i, e in enumerate(es):
        if (e in m) != (i % 2 == 0):
            return False
    return True


# ---------------------------------------------------------------------------
# canonical form (AHU)


def _strip_to_centers(n: int, adj: Sequence[Sequence[int]],
                      vertices: Iterable[int]) -> list[int]:
    """Centers of the subtree induced by `vertices` (1 or 2 of them)."""
    verts = set(vertices)
    deg = {v: sum(1 for w in adj[v] if w in verts) for v in verts}
    layer = [v for v in verts if deg[v] <= 1]
    remaining = len(verts)
    while remaining > 2:
        nxt = []
        for v in layer:
            verts.discard(v)
            remaining -= 1
            for w in adj[v]:
                if w in verts:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(verts)


def _rooted_code(root: int, adj: Sequence[Sequence[int]],
                 allowed: Optional[set] = None) -> bytes:
    """AHU encoding of the subtree reachable from `root`."""

    def code(v: int, parent: int) -> bytes:
        subs = sorted(
            code(w, v) for w in adj[v]
            if w != parent and (allowed is None or w in allowed))
        return b"(" + b"".join(subs) + b")"

    return code(root, -1)


def canonical_code(t: Tree) -> bytes:
    """Canonical code of the isomorphism class: AHU code rooted at the
    center, taking the lexicographically smaller code for bicentral
    trees."""
    adj = t.adjacency()
    centers = _strip_to_centers(t.n, adj, range(t.n))
    return min(_rooted_code(c, adj) for c in centers)


def trees_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


# ---------------------------------------------------------------------------
# rooted products


def rooted_product_k2(base: Tree) -> Tree:
    """Attach one pendant vertex to every vertex of the base tree.

    Vertex i gets pendant n+i; the pendant edges form the unique perfect
    matching of the result.
    """
    n = base.n
    edges = set(base.edges)
    edges.update(edge(i, n + i) for i in range(n))
    return Tree(2 * n, frozenset(edges))


def elongated_caterpillar(n: int) -> Tree:
    """The rooted product of the n-vertex path with n pendant edges."""
    if n < 1:
        raise ValueError("n must be positive")
    return rooted_product_k2(path_tree(n))
