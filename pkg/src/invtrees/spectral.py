"""Eigenvalues of trees with certified accuracy.

All eigenvalues are roots of the exact integer characteristic
polynomial, isolated by Sturm sequences and refined by bisection.
Strict comparisons between eigenvalues of different trees are decided by
interval refinement with an exact gcd fallback, never by floating-point
rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import polynomials as pol
from .errors import OddOrder
from .inverse import char_poly
from .trees import Tree

DEFAULT_TOL = 1e-12


@dataclass
class Spectrum:
    """Sorted eigenvalues with certified isolating intervals."""

    roots: list  # RealRoot per distinct eigenvalue, ascending
    tol: float = DEFAULT_TOL

    @property
    def values(self) -> list[float]:
        """All eigenvalues (with multiplicity), ascending floats."""
        out = []
        for r in self.roots:
            out.extend([r.value(self.tol)] * r.multiplicity)
        return out

    def __len__(self) -> int:
        return sum(r.multiplicity for r in self.roots)


def spectrum(t: Tree, tol: float = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues of A(T), isolated and refined to width <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    roots = pol.real_roots(char_poly(t))
    width = Fraction(tol)
    for r in roots:
        r.refine(width)
    return Spectrum(roots, tol)


def median_root(t: Tree) -> pol.RealRoot:
    """The median eigenvalue as a certified root object."""
    if t.n % 2 == 1:
        raise OddOrder("median eigenvalue defined for even order only")
    half = t.n // 2
    count = 0
    for r in spectrum(t).roots:
        count += r.multiplicity
        if count > half:
            return r
    raise AssertionError("root count below vertex count")


def median_eigenvalue(t: Tree, tol: float = DEFAULT_TOL) -> float:
    """The n-th largest eigenvalue of a tree on 2n vertices (the
    positive median; equals minus the (n+1)-th by bipartite symmetry)."""
    return median_root(t).value(tol)


def compare_medians(a: Tree, b: Tree) -> int:
    """Certified comparison of the two median eigenvalues (-1, 0, +1)."""
    return pol.compare_roots(median_root(a), median_root(b))


def path_eigenvalues(n: int) -> list[float]:
    """Closed form for the n-vertex path: 2 cos(pi j / (n+1))."""
    return sorted(2 * math.cos(math.pi * j / (n + 1))
                  for j in range(1, n + 1))


def rooted_product_spectrum(base: Tree, tol: float = DEFAULT_TOL) -> list[float]:
    """Eigenvalues of the rooted product of a base tree with pendant
    edges: (theta +- sqrt(theta^2 + 4)) / 2 over eigenvalues theta of the
    base."""
    out = []
    for theta in spectrum(base, tol).values:
        d = math.sqrt(theta * theta + 4)
        out.extend([(theta - d) / 2, (theta + d) / 2])
    return sorted(out)


def rooted_product_char_poly(base: Tree) -> list[int]:
    """Exact expansion of t^n * phi(base, (t^2 - 1)/t): substitute the
    rational function and clear denominators."""
    coeffs = char_poly(base)
    n = base.n
    result = []
    s = [-1, 0, 1]  # t^2 - 1
    power = [1]
    for k, c in enumerate(coeffs):
        # c * (t^2-1)^k * t^(n-k)
        term = pol.scale(power, c)
        term = pol.mul(term, [0] * (n - k) + [1]) if n - k else term
        result = pol.add(result, term)
        power = pol.mul(power, s)
    return result


def caterpillar_median_bound(n: int, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Median eigenvalue of the elongated caterpillar on 2n vertices and
    the universal lower bound 1/(1 + sqrt(2)) = sqrt(2) - 1."""
    from .trees import elongated_caterpillar

    median = median_eigenvalue(elongated_caterpillar(n), tol)
    bound = math.sqrt(2) - 1
    assert median >= bound - tol
    return median, bound
