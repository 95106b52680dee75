"""Seeded random generators for property testing.

The complex generator works backwards from validity: each next
boundary is drawn from the kernel of the previous one, computed
exactly over the fraction field and then cleared of denominators, so
d o d = 0 holds by construction.  Entry size is kept inside the
advertised budget (degree <= 3, |coefficients| <= 9) by resampling and
falling back to a zero map when a level refuses to stay small.
"""

from __future__ import annotations

import random

from .complexes import ChainComplex
from .deformation import Generator, GroupRingPresentation, GroupWordSum
from .factor import is_irreducible
from .fields import AlgebraicNumberSpec
from .matrix import Matrix, int_det
from .poly import Poly, gcd_primitive

MAX_ENTRY_DEGREE = 3
MAX_ENTRY_COEFF = 9


class _RatFn:
    """Reduced fraction of integer polynomials; generator-local."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = Poly.one()
        else:
            num = num.clear_denominators()
            den = den.clear_denominators()
            g = gcd_primitive(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            if den.leading < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "_RatFn":
        return cls(p, Poly.one())

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        return _RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _RatFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return _RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other:
            raise ZeroDivisionError
        return _RatFn(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return _RatFn(-self.num, self.den)


def kernel_basis(d: Matrix) -> list[list[Poly]]:
    """Basis of the kernel of a polynomial matrix over the fraction
    field, with denominators cleared: integer-polynomial columns."""
    nr, nc = d.nrows, d.ncols
    rows = [[_RatFn.from_poly(x) for x in row] for row in d.rows]
    pivots: list[int] = []
    rk = 0
    for col in range(nc):
        pr = None
        for r in range(rk, nr):
            if rows[r][col]:
                pr = r
                break
        if pr is None:
            continue
        rows[rk], rows[pr] = rows[pr], rows[rk]
        inv = rows[rk][col]
        rows[rk] = [x / inv for x in rows[rk]]
        for r in range(nr):
            if r != rk and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rk])]
        pivots.append(col)
        rk += 1
        if rk == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        vec = [_RatFn.from_poly(Poly.zero())] * nc
        vec[f] = _RatFn.from_poly(Poly.one())
        for i, c in enumerate(pivots):
            vec[c] = -rows[i][f]
        den = Poly.one()
        for x in vec:
            g = gcd_primitive(den, x.den)
            den = den * x.den.exact_div(g)
        cleared = [x.num * den.exact_div(x.den) for x in vec]
        basis.append([p.clear_denominators() for p in cleared])
    return basis


def _random_entry(rng: random.Random) -> Poly:
    roll = rng.random()
    if roll < 0.5:
        return Poly.zero()
    if roll < 0.85:
        return Poly.constant(rng.choice([-2, -1, 1, 2]))
    return Poly((rng.randint(-2, 2), rng.choice([-1, 1])))


def _within_budget(m: Matrix) -> bool:
    for row in m.rows:
        for p in row:
            if p.degree > MAX_ENTRY_DEGREE:
                return False
            if any(abs(c) > MAX_ENTRY_COEFF for c in p.coeffs):
                return False
    return True


def random_complex(
    rng: random.Random, max_modules: int = 5, max_rank: int = 6
) -> ChainComplex:
    """A random valid complex over Z[t] within the entry budget."""
    n_modules = rng.randint(2, max_modules)
    ranks = [rng.randint(0, max_rank) for _ in range(n_modules)]
    boundaries = []
    prev: Matrix | None = None
    for i in range(1, n_modules):
        nr, nc = ranks[i - 1], ranks[i]
        if prev is None:
            for _ in range(30):
                cand = Matrix(nr, nc, [[_random_entry(rng) for _ in range(nc)] for _ in range(nr)])
                if _within_budget(cand):
                    break
            else:
                cand = Matrix.zeros(nr, nc, Poly.zero())
        else:
            basis = kernel_basis(prev)
            cand = None
            if basis:
                cols = [list(col) for col in zip(*basis)]  # nr x len(basis)
                kmat = Matrix(nr, len(basis), cols)
                for _ in range(30):
                    rmat = Matrix(
                        len(basis),
                        nc,
                        [
                            [Poly.constant(rng.choice([-1, 0, 0, 1])) for _ in range(nc)]
                            for _ in range(len(basis))
                        ],
                    )
                    trial = kmat.mul(rmat)
                    if _within_budget(trial):
                        cand = trial
                        break
            if cand is None:
                cand = Matrix.zeros(nr, nc, Poly.zero())
        boundaries.append(cand)
        prev = cand
    cx = ChainComplex(ranks, boundaries)
    cx.validate()
    return cx


def random_unimodular(rng: random.Random, n: int, ops: int = 6) -> list[list[int]]:
    """Random element of GL(n, Z) as a list of rows, via elementary moves."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randint(0, 2)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                rows[i][k] += c * rows[j][k]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            for k in range(n):
                rows[i][k] = -rows[i][k]
    assert int_det(rows) in (1, -1)
    return rows


def random_algebraic_spec(
    rng: random.Random,
    max_degree: int = 4,
    algebraic_integer: bool | None = None,
) -> AlgebraicNumberSpec:
    """A random algebraic number with certified-irreducible minimal
    polynomial; ``algebraic_integer`` forces or forbids monicity."""
    while True:
        d = rng.randint(1, max_degree)
        coeffs = [rng.randint(-5, 5) for _ in range(d)]
        if algebraic_integer is True:
            lead = 1
        elif algebraic_integer is False:
            lead = rng.randint(2, 5)
        else:
            lead = rng.randint(1, 5)
        coeffs.append(lead)
        if coeffs[0] == 0:
            coeffs[0] = rng.choice([-3, -2, -1, 1, 2, 3])
        p = Poly(coeffs).primitive()
        if algebraic_integer is True and p.leading != 1:
            continue
        if algebraic_integer is False and p.leading == 1:
            continue
        if p.degree != d or is_irreducible(p) is not True:
            continue
        return AlgebraicNumberSpec(p.monic())


def random_presentation(
    rng: random.Random,
    max_gens: int = 3,
    max_m: int = 3,
    max_modules: int = 4,
    max_rank: int = 3,
) -> GroupRingPresentation:
    """A random presentation whose boundaries square to zero.

    Built as a random integer complex with every level multiplied by a
    common group-ring scalar: (A s)(B s') = (A B) s s' = 0 whatever the
    monodromies do, so validity survives the block substitution.
    """
    m = rng.randint(1, max_m)
    names = ["g", "h", "k"][: rng.randint(1, max_gens)]
    gens = {
        name: Generator(name, -rng.randint(0, 2), Matrix(m, m, random_unimodular(rng, m, ops=4)))
        for name in names
    }

    def random_scalar() -> GroupWordSum:
        terms = {}
        for _ in range(rng.randint(1, 2)):
            word = tuple(rng.choice(names) for _ in range(rng.randint(0, 2)))
            terms[word] = terms.get(word, 0) + rng.choice([-2, -1, 1, 1, 2])
        return GroupWordSum(terms)

    n_modules = rng.randint(2, max_modules)
    ranks = [rng.randint(0, max_rank) for _ in range(n_modules)]
    boundaries = []
    prev: Matrix | None = None
    zero = GroupWordSum({})
    for i in range(1, n_modules):
        nr, nc = ranks[i - 1], ranks[i]
        if prev is None:
            ints = Matrix(
                nr, nc, [[Poly.constant(rng.randint(-2, 2)) for _ in range(nc)] for _ in range(nr)]
            )
        else:
            basis = kernel_basis(prev)
            if basis:
                cols = [list(col) for col in zip(*basis)]
                kmat = Matrix(nr, len(basis), cols)
                rmat = Matrix(
                    len(basis),
                    nc,
                    [
                        [Poly.constant(rng.choice([-1, 0, 1])) for _ in range(nc)]
                        for _ in range(len(basis))
                    ],
                )
                ints = kmat.mul(rmat)
            else:
                ints = Matrix.zeros(nr, nc, Poly.zero())
        prev = ints
        s = random_scalar()
        level = []
        for row in ints.rows:
            out_row = []
            for p in row:
                c = p.constant_term
                if c == 0 or not s.terms:
                    out_row.append(zero)
                else:
                    out_row.append(GroupWordSum({w: c * k for w, k in s.terms.items()}))
            level.append(out_row)
        boundaries.append(level)
    return GroupRingPresentation(m, gens, ranks, boundaries)
