from __future__ import annotations

import random

from formzeros.factor import is_irreducible, split_squarefree
from formzeros.poly import Poly, radical


def test_splits_product_of_quadratics():
    p = Poly((1, 0, 1, 0, 1))  # t^4 + t^2 + 1
    irr, unresolved = split_squarefree(p)
    assert unresolved == []
    assert sorted(f.format() for f in irr) == ["t^2 + t + 1", "t^2 - t + 1"]


def test_rational_roots_stripped_first():
    p = Poly((1, -5, 6))  # (2t-1)(3t-1)
    irr, unresolved = split_squarefree(p)
    assert unresolved == []
    assert set(f.coeffs for f in irr) == {(-1, 2), (-1, 3)}


def test_irreducible_stays_whole():
    p = Poly((1, -1, 1))
    irr, unresolved = split_squarefree(p)
    assert irr == [p] and unresolved == []


def test_degree_cap_splits_small_factors_only():
    # t^8 + t + 1 = (t^2 + t + 1)(t^6 - t^5 + t^3 - t^2 + 1); with the
    # factor search capped at degree 2 the quadratic is still split off
    # but the sextic cannot be certified (that needs degree 3).
    p = Poly((1, 1) + (0,) * 6 + (1,))
    irr, unresolved = split_squarefree(p, max_degree=2)
    assert irr == [Poly((1, 1, 1))]
    assert unresolved == [Poly((1, 0, -1, 1, 0, -1, 1))]
    # a wider cap resolves everything
    irr4, un4 = split_squarefree(p, max_degree=4)
    assert un4 == [] and [f.degree for f in irr4] == [2, 6]


def test_is_irreducible_verdicts():
    assert is_irreducible(Poly((1, -1, 1))) is True
    assert is_irreducible(Poly((1, 0, 1, 0, 1))) is False
    assert is_irreducible(Poly((1, 1))) is True
    # squares are reducible without any search
    assert is_irreducible(Poly((1, 2, 1))) is False


def test_is_irreducible_uncertified_above_cap():
    sextic = Poly((1, 0, -1, 1, 0, -1, 1))
    assert is_irreducible(sextic, max_degree=2) is None
    assert is_irreducible(sextic, max_degree=3) is True


def test_random_products_recovered():
    """Multiply certified-irreducible pieces, then recover the set."""
    rng = random.Random(404)
    pool = [
        Poly((1, 1)),
        Poly((-1, 1)),
        Poly((1, -1, 1)),
        Poly((1, 1, 1)),
        Poly((3, 0, 1)),
        Poly((-2, 0, 0, 1)),
        Poly((1, 0, -1, 1)),
    ]
    for _ in range(25):
        picks = rng.sample(pool, rng.randint(1, 3))
        prod = Poly.one()
        for f in picks:
            prod = prod * f
        prod = radical(prod)  # the splitter expects square-free input
        irr, unresolved = split_squarefree(prod)
        assert unresolved == []
        assert sorted(f.coeffs for f in irr) == sorted(f.coeffs for f in set(picks))
