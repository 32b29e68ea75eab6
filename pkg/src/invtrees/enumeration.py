"""Exhaustive generation of unlabeled trees and the invertible classes.

Rooted trees are generated as level sequences (Beyer-Hedetniemi
successor rule), deduplicated to free trees by canonical code.  At the
default bound of 14 vertices this is a few tens of thousands of rooted
trees, well under a second.
"""

from __future__ import annotations

import json
import os
from typing import Iterator

from .errors import BoundExceeded, OddOrder
from .trees import Tree, canonical_code, perfect_matching, tree

DEFAULT_BOUND = 14
ENV_BOUND = "INVTREE_MAX_VERTICES"


def configured_bound() -> int:
    raw = os.environ.get(ENV_BOUND)
    return int(raw) if raw else DEFAULT_BOUND


def _level_sequences(n: int) -> Iterator[list[int]]:
    """All rooted trees on n vertices as level sequences, root level 1;
    the parent of position i is the nearest j < i with level[i] - 1."""
    s = list(range(1, n + 1))
    while True:
        yield s
        p = max((i for i in range(n) if s[i] > 2), default=-1)
        if p < 0:
            return
        q = max(i for i in range(p) if s[i] == s[p] - 1)
        s = s[:p] + [s[i - (p - q)] for i in range(p, n)]


def _tree_from_levels(levels: list[int]) -> Tree:
    edges = []
    stack = []  # stack[d] = most recent vertex at level d+1
    for i, lvl in enumerate(levels):
        if lvl > 1:
            edges.append((stack[lvl - 2], i))
        if lvl - 1 < len(stack):
            stack[lvl - 1] = i
        else:
            stack.append(i)
    return tree(len(levels), edges)


# TreeClassSet: canonical code -> representative Tree


def enumerate_trees(n: int, bound: int | None = None) -> dict:
    """One labeled representative per unlabeled tree on n vertices."""
    bound = bound if bound is not None else configured_bound()
    if n < 1 or n > bound:
        raise BoundExceeded(f"n={n} outside 1..{bound}")
    classes: dict = {}
    for levels in _level_sequences(n):
        t = _tree_from_levels(levels)
        code = canonical_code(t)
        prev = classes.get(code)
        if prev is None or t.sorted_edges() < prev.sorted_edges():
            classes[code] = t
    return dict(sorted(classes.items()))


def enumerate_invertible(two_n: int, bound: int | None = None) -> dict:
    """The invertible classes: trees on two_n vertices with a perfect
    matching."""
    if two_n % 2 == 1:
        raise OddOrder("no tree on an odd vertex count is invertible")
    classes = enumerate_trees(two_n, bound)
    return {code: t for code, t in classes.items()
            if perfect_matching(t) is not None}


def classes_to_json(classes: dict) -> str:
    return json.dumps(
        [{"code": code.decode(), "n": t.n, "edges": t.sorted_edges()}
         for code, t in sorted(classes.items())],
        indent=2)
