"""Bounded factorisation of integer polynomials.

Only what the pipeline needs: rational-root stripping plus a Kronecker
interpolation search for factors of degree >= 2.  The search is exact
and deterministic, but it is a small-degree tool -- callers pass a
degree cap (8 by default) and a work budget (covering both divisor
enumeration and interpolation candidates), and anything that cannot be
certified within those limits is handed back unresolved rather than
guessed at.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt

from .poly import Poly, gcd_primitive

DEFAULT_MAX_DEGREE = 8
DEFAULT_BUDGET = 400_000


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of a nonzero integer polynomial, sorted."""
    roots = []
    k = p.lowest_power()
    if k > 0:
        roots.append(Fraction(0))
        p = Poly(p.coeffs[k:])
    if p.degree < 1:
        return roots
    for num in _divisors(p.constant_term):
        for den in _divisors(p.leading):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and p.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _root_to_linear(r: Fraction) -> Poly:
    """Primitive linear polynomial with root r, positive lead."""
    return Poly((-r.numerator, r.denominator))


def _interpolation_points(count: int) -> list[int]:
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def _kronecker_factor(
    p: Poly, budget: list[int], max_factor: int | None = None
) -> Poly | None:
    """Search for a nonconstant proper factor of p (primitive, no
    rational roots) of degree at most ``max_factor``.  Returns a factor,
    or None if none was found or the budget ran out (budget[0] goes
    negative in that case)."""
    n = p.degree
    top = n // 2 if max_factor is None else min(n // 2, max_factor)
    for d in range(2, top + 1):
        pts = _interpolation_points(d + 1)
        values = [p.evaluate(x) for x in pts]
        choices = []
        for i, v in enumerate(values):
            # divisor enumeration is trial division up to sqrt(v);
            # charge it to the budget so huge values cannot stall us
            budget[0] -= isqrt(abs(v)) + 1
            if budget[0] < 0:
                return None
            divs = _divisors(v)
            if i == 0:
                # a factor is determined up to sign; pin the first value
                choices.append(divs)
            else:
                choices.append([s * t for t in divs for s in (1, -1)])
        # Lagrange basis over the chosen points, computed once
        basis = []
        for i, xi in enumerate(pts):
            num = Poly.one()
            den = 1
            for j, xj in enumerate(pts):
                if i != j:
                    num = num * Poly((-xj, 1))
                    den *= xi - xj
            basis.append([Fraction(c, den) for c in num.coeffs])
        for combo in itertools.product(*choices):
            budget[0] -= 1
            if budget[0] < 0:
                return None
            coeffs = [Fraction(0)] * (d + 1)
            for v, b in zip(combo, basis):
                for k, c in enumerate(b):
                    coeffs[k] += v * c
            if any(c.denominator != 1 for c in coeffs):
                continue
            g = Poly(coeffs)
            if g.degree != d:
                continue
            if p.leading % g.leading or p.constant_term % g.constant_term:
                continue
            q, r = divmod(p, g)
            if r.is_zero():
                return g.primitive()
    return None


def split_squarefree(
    p: Poly,
    max_degree: int = DEFAULT_MAX_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> tuple[list[Poly], list[Poly]]:
    """Split a primitive square-free integer polynomial into certified
    irreducible factors plus unresolved remainders.

    Returns (irreducible, unresolved); each list holds primitive
    polynomials with positive leading coefficient, sorted by degree and
    then coefficientwise.  Factor degrees up to ``max_degree`` are
    searched, so a remainder is certified irreducible only when that
    covers half its degree; otherwise it lands in ``unresolved``, as
    does anything left when the candidate budget runs out.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    irreducible: list[Poly] = []
    unresolved: list[Poly] = []
    work = [p.primitive()]
    remaining = [budget]
    while work:
        q = work.pop()
        if q.degree < 1:
            continue
        roots = _rational_roots(q)
        for r in roots:
            lin = _root_to_linear(r)
            while True:
                quo, rem = divmod(q, lin)
                if rem.is_zero():
                    irreducible.append(lin)
                    q = quo.clear_denominators().primitive()
                else:
                    break
        if q.degree < 1:
            continue
        if q.degree == 1:
            irreducible.append(q.primitive())
            continue
        g = _kronecker_factor(q, remaining, max_degree)
        if g is None:
            if remaining[0] < 0 or q.degree // 2 > max_degree:
                unresolved.append(q.primitive())
            else:
                irreducible.append(q.primitive())
        else:
            work.append(g)
            work.append(q.exact_div(g).clear_denominators().primitive())
    key = lambda f: (f.degree, f.coeffs)
    return sorted(irreducible, key=key), sorted(unresolved, key=key)


def is_irreducible(
    p: Poly,
    max_degree: int = DEFAULT_MAX_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> bool | None:
    """Decide irreducibility of a nonconstant integer polynomial.

    Returns True/False when certified, None when a complete search would
    need factor degrees above ``max_degree`` or the budget ran out.
    """
    p = p.primitive()
    if p.degree < 1:
        raise ValueError("irreducibility is for nonconstant polynomials")
    if p.degree == 1:
        return True
    g = gcd_primitive(p, p.derivative())
    if g.degree >= 1:
        return False
    if _rational_roots(p):
        return False
    remaining = [budget]
    g = _kronecker_factor(p, remaining, max_degree)
    if g is not None:
        return False
    if remaining[0] < 0 or p.degree // 2 > max_degree:
        return None
    return True
