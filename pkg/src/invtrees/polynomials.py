"""Exact univariate polynomial arithmetic and certified real root
isolation.

Polynomials are coefficient lists in ascending degree order.  Integer
polynomials stay in int; intermediate quotients use Fraction, so every
computation here is exact.  Root isolation is by Sturm-sequence sign
counting and bisection, which yields certified isolating intervals with
rational endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd as int_gcd
from typing import Optional, Sequence

Poly = list  # coefficients, ascending


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, [-c for c in q])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c) -> Poly:
    return trim([c * a for a in p])


def evaluate(p: Poly, x):
    """Horner evaluation; exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_exact(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Polynomial division over the rationals."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    rem = [Fraction(c) for c in p]
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    lead = Fraction(q[-1])
    while len(rem) >= len(q) and any(rem):
        rem = trim(rem)
        if len(rem) < len(q):
            break
        k = len(rem) - len(q)
        coef = rem[-1] / lead
        quo[k] = coef
        for i, c in enumerate(q):
            rem[k + i] -= coef * c
        rem.pop()
    return trim(quo), trim(rem)


def to_primitive_int(p: Poly) -> Poly:
    """Clear denominators and divide out the content; make the leading
    coefficient positive."""
    p = trim(p)
    if not p:
        return []
    denom = 1
    for c in p:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // int_gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive integer gcd via the Euclidean algorithm over Q."""
    a, b = trim(list(p)), trim(list(q))
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    return to_primitive_int(a) if a else []


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), as a primitive integer polynomial."""
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return to_primitive_int(p)
    q, r = divmod_exact(p, g)
    assert not r
    return to_primitive_int(q)


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain of a squarefree integer polynomial (primitive integer
    entries, signs preserved)."""
    chain = [to_primitive_int(p), to_primitive_int(derivative(p))]
    while degree(chain[-1]) > 0:
        _, r = divmod_exact(chain[-2], chain[-1])
        if not r:
            break
        neg = to_primitive_int(r)
        # to_primitive_int normalizes the sign; restore -rem's true sign
        if (r[-1] > 0) == (neg[-1] > 0):
            neg = [-c for c in neg]
        chain.append(neg)
    return [c for c in chain if c]


def sign_variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(p: Poly) -> Fraction:
    """All real roots lie in (-B, B)."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) for c in p) / lead


# ---------------------------------------------------------------------------
# root objects


@dataclass
class RealRoot:
    """One real root of an integer polynomial with a certified isolating
    interval.  `poly` is squarefree with this root simple; `multiplicity`
    is the multiplicity in the original polynomial."""

    poly: Poly
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    exact: Optional[Fraction] = None
    _sign_lo: int = field(default=0, repr=False)

    def __post_init__(self):
        if self.exact is None and self._sign_lo == 0:
            v = evaluate(self.poly, self.lo)
            self._sign_lo = 1 if v > 0 else -1

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction) -> None:
        """Bisect the isolating interval until it is at most `width`
        wide."""
        if self.exact is not None:
            self.lo = self.hi = self.exact
            return
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            v = evaluate(self.poly, mid)
            if v == 0:
                self.exact = mid
                self.lo = self.hi = mid
                return
            if (1 if v > 0 else -1) == self._sign_lo:
                self.lo = mid
            else:
                self.hi = mid

    def value(self, tol: float = 1e-12) -> float:
        self.refine(Fraction(tol))
        return float((self.lo + self.hi) / 2)

    def __float__(self) -> float:
        return self.value()


def _isolate_squarefree(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the real roots of a squarefree integer
    polynomial with no rational roots."""
    chain = sturm_sequence(p)
    bound = cauchy_bound(p)
    total = count_roots(chain, -bound, bound)
    out = []
    stack = [(-bound, bound, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        left = count_roots(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, k - left))
    return sorted(out)


def _rational_roots_monic(p: Poly) -> tuple[Poly, list[tuple[Fraction, int]]]:
    """Strip all rational (hence integer) roots of a monic integer
    polynomial; returns the remaining factor and (root, multiplicity)."""
    p = list(p)
    roots = []
    # root 0
    k = 0
    while p and p[0] == 0:
        p = p[1:]
        k += 1
    if k:
        roots.append((Fraction(0), k))
    # nonzero integer roots divide the constant term
    if degree(p) >= 1:
        candidates = set()
        c0 = abs(p[0])
        d = 1
        while d * d <= c0:
            if c0 % d == 0:
                candidates.update({d, -d, c0 // d, -(c0 // d)})
            d += 1
        for r in sorted(candidates):
            mult = 0
            while degree(p) >= 1 and evaluate(p, r) == 0:
                q, rem = divmod_exact(p, [-r, 1])
                assert not rem
                p = [int(c) for c in q]
                mult += 1
            if mult:
                roots.append((Fraction(r), mult))
    return p, roots


def real_roots(p: Poly) -> list[RealRoot]:
    """All real roots of an integer polynomial, with multiplicities,
    sorted ascending.  For the characteristic polynomial of a symmetric
    matrix every root is real, so the count equals the degree."""
    p = trim(list(p))
    if degree(p) < 1:
        return []
    if p[-1] < 0:
        p = [-c for c in p]
    core, rational = _rational_roots_monic(p)
    roots = [RealRoot([-int(r), 1] if r else [0, 1], r, r,
                      multiplicity=m, exact=r, _sign_lo=1)
             for r, m in rational]
    if degree(core) >= 1:
        sf = squarefree_part(core)
        # gcd chain: root has multiplicity 1 + (number of g_i vanishing there)
        gcd_chain = []
        g = poly_gcd(core, derivative(core))
        while degree(g) >= 1:
            gcd_chain.append((g, sturm_sequence(squarefree_part(g))))
            g = poly_gcd(g, derivative(g))
        for lo, hi in _isolate_squarefree(sf):
            mult = 1
            for _, chain in gcd_chain:
                if count_roots(chain, lo, hi) >= 1:
                    mult += 1
            roots.append(RealRoot(sf, lo, hi, multiplicity=mult))
    roots.sort(key=cmp_to_key(compare_roots))
    return roots


def compare_roots(a: RealRoot, b: RealRoot) -> int:
    """Certified comparison of two real algebraic numbers.

    Returns -1, 0 or +1.  Intervals are refined until disjoint; equality
    is decided exactly by a polynomial gcd."""
    if a.exact is not None and b.exact is not None:
        return (a.exact > b.exact) - (a.exact < b.exact)
    width = max(a.width(), b.width(), Fraction(1, 2))
    for _ in range(200):
        if a.hi < b.lo:
            return -1
        if b.hi < a.lo:
            return 1
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        g = poly_gcd(a.poly, b.poly)
        if degree(g) >= 1:
            chain = sturm_sequence(squarefree_part(g))
            if count_roots(chain, lo, hi) >= 1:
                # both isolating intervals contain a common root; since
                # each contains exactly one root, the roots are equal
                if count_roots(sturm_sequence(a.poly), lo, hi) >= 1 and \
                        count_roots(sturm_sequence(b.poly), lo, hi) >= 1:
                    return 0
        width /= 2
        a.refine(width)
        b.refine(width)
    raise RuntimeError("root comparison did not converge")
