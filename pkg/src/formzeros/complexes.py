"""Finite free chain complexes over Z[t] and their specialisations.

A complex stores the ranks of its modules in degrees 0..m and the
boundary matrices d_1..d_m, where d_i maps degree i to degree i-1 and
therefore has shape ranks[i-1] x ranks[i].  Specialising the entries
at a field target and counting pivot ranks gives the Betti numbers by
rank-nullity; everything downstream (Poincare polynomials, the
divisibility partial order on them, the two-ideal comparison) happens
on those exact integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    ComplexAxiomViolation,
    DegreeOverflow,
    PreconditionViolation,
    SchemaError,
)
from .fields import (
    AlgebraicNumberSpec,
    FieldTarget,
    PrimeField,
    RationalFunctionField,
)
from .matrix import Matrix, rank as matrix_rank, specialize_matrix
from .poly import Poly

RING_TAG = "Z[t]"


class ChainComplex:
    """Ranks plus boundary matrices with polynomial entries."""

    __slots__ = ("ranks", "boundaries")

    def __init__(self, ranks, boundaries):
        ranks = tuple(int(r) for r in ranks)
        if not ranks or any(r < 0 for r in ranks):
            raise SchemaError("ranks must be a nonempty list of nonnegative ints")
        boundaries = tuple(boundaries)
        if len(boundaries) != len(ranks) - 1:
            raise SchemaError(
                f"expected {len(ranks) - 1} boundary matrices, got {len(boundaries)}"
            )
        for i, d in enumerate(boundaries, start=1):
            if (d.nrows, d.ncols) != (ranks[i - 1], ranks[i]):
                raise SchemaError(
                    f"boundary d_{i} has shape {d.nrows}x{d.ncols}, "
                    f"expected {ranks[i - 1]}x{ranks[i]}"
                )
        self.ranks = ranks
        self.boundaries = boundaries

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, i: int) -> Matrix:
        """d_i for 1 <= i <= m; zero-shaped matrices off the ends."""
        if 1 <= i <= self.top_degree:
            return self.boundaries[i - 1]
        if i == 0:
            return Matrix.zeros(0, self.ranks[0], Poly.zero())
        if i == self.top_degree + 1:
            return Matrix.zeros(self.ranks[-1], 0, Poly.zero())
        raise IndexError(f"no boundary in degree {i}")

    def validate(self) -> None:
        """Check d o d = 0 over Z[t]; name the first bad degree."""
        for i in range(1, self.top_degree):
            prod = self.boundary(i).mul(self.boundary(i + 1))
            if not prod.is_zero():
                raise ComplexAxiomViolation(
                    f"d_{i} composed with d_{i + 1} is nonzero"
                )

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.ranks == other.ranks and self.boundaries == other.boundaries

    def __repr__(self):
        return f"ChainComplex(ranks={self.ranks})"

    # -- serialisation ----------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ring": RING_TAG,
            "ranks": list(self.ranks),
            "boundaries": [
                [[entry.format() for entry in row] for row in d.rows]
                for d in self.boundaries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChainComplex":
        if not isinstance(data, dict):
            raise SchemaError("complex document must be a JSON object")
        if data.get("ring") != RING_TAG:
            raise SchemaError(f'complex must declare "ring": "{RING_TAG}"')
        ranks = data.get("ranks")
        bnds = data.get("boundaries")
        if not isinstance(ranks, list) or not isinstance(bnds, list):
            raise SchemaError('complex needs "ranks" and "boundaries" lists')
        matrices = []
        for i, rows in enumerate(bnds, start=1):
            if i >= len(ranks):
                raise SchemaError("more boundaries than rank transitions")
            nr, nc = ranks[i - 1], ranks[i]
            if not isinstance(rows, list) or len(rows) != nr:
                raise SchemaError(
                    f"boundary d_{i} must be a list of {nr} rows"
                )
            parsed = []
            for row in rows:
                if not isinstance(row, list) or len(row) != nc:
                    raise SchemaError(
                        f"boundary d_{i} rows must have length {nc}"
                    )
                parsed.append([Poly.parse(s) for s in row])
            matrices.append(Matrix(nr, nc, parsed))
        cx = cls(ranks, matrices)
        cx.validate()
        return cx

    @classmethod
    def from_json(cls, text: str) -> "ChainComplex":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers of a specialised complex, one per degree."""

    entries: tuple
    target: str

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def poincare(self) -> Poly:
        return Poly(self.entries)

    def total(self) -> int:
        return sum(self.entries)


def betti(cx: ChainComplex, target: FieldTarget) -> BettiVector:
    """Betti numbers over the target by rank-nullity.

    b_i = ranks[i] - rank(d_i) - rank(d_{i+1}) with the off-end
    boundaries read as zero.
    """
    m = cx.top_degree
    bd_ranks = [0] * (m + 2)
    for i in range(1, m + 1):
        spec = specialize_matrix(cx.boundary(i), target)
        bd_ranks[i] = matrix_rank(spec, target)
    entries = tuple(
        cx.ranks[i] - bd_ranks[i] - bd_ranks[i + 1] for i in range(m + 1)
    )
    return BettiVector(entries, target.describe())


def poincare(cx: ChainComplex, target: FieldTarget) -> Poly:
    return betti(cx, target).poincare()


def euler_characteristic(cx: ChainComplex, target: FieldTarget) -> int:
    """Alternating sum of Betti numbers; equals the alternating sum of
    the module ranks for every field target."""
    b = betti(cx, target)
    return sum((-1) ** i * v for i, v in enumerate(b.entries))


def dominates(p: Poly, q: Poly) -> tuple[bool, Poly | None]:
    """Divisibility order on counting polynomials.

    p >= q holds when p - q = (1 + t) * w for a polynomial w with
    nonnegative coefficients; returns (verdict, w or None).
    """
    diff = p - q
    if diff.is_zero():
        return True, Poly.zero()
    w, rem = divmod(diff, Poly((1, 1)))
    if not rem.is_zero():
        return False, None
    if any(c < 0 for c in w.coeffs):
        return False, None
    return True, w


def dominates_alternating(p: Poly, q: Poly) -> bool:
    """The same order via alternating partial sums.

    Requires sum_{j<=r} (-1)^j p_{r-j} >= sum_{j<=r} (-1)^j q_{r-j}
    for every r, including the stabilised tail beyond both degrees.
    """
    top = max(p.degree, q.degree) + 1
    sp = sq = 0
    for r in range(top + 1):
        sp = p[r] - sp
        sq = q[r] - sq
        if sp < sq:
            return False
    return True


def duality_transform(p: Poly, n: int) -> Poly:
    """Reverse coefficients within the degree window 0..n."""
    if p.degree > n:
        raise DegreeOverflow(
            f"polynomial degree {p.degree} exceeds the window {n}"
        )
    return p.reversal(window=n)


@dataclass(frozen=True)
class SpecializationOrderReport:
    """Outcome of comparing the two specialisations of one complex."""

    holds: bool
    poincare_modp: Poly
    poincare_at_inverse: Poly
    ideal_at_inverse: str
    boundary_ideal: str
    witness: Poly | None

    def to_json_dict(self) -> dict:
        return {
            "holds": self.holds,
            "poincare_modp": list(self.poincare_modp.coeffs),
            "poincare_at_inverse": list(self.poincare_at_inverse.coeffs),
            "ideal_at_inverse": self.ideal_at_inverse,
            "boundary_ideal": self.boundary_ideal,
            "witness": list(self.witness.coeffs) if self.witness is not None else None,
        }


def specialization_order_check(
    cx: ChainComplex, a: AlgebraicNumberSpec, p: int
) -> SpecializationOrderReport:
    """Check that the mod-p Betti data dominates the data at 1/a.

    Precondition: the vanishing ideal of 1/a must sit inside (p, t),
    i.e. the free term of the primitive minimal polynomial of 1/a must
    be divisible by p (vacuous for transcendental a).  Under that
    containment the domination is a theorem; a False verdict therefore
    flags an implementation bug and the CLI treats it as one.
    """
    modp_target = PrimeField(p)
    if a.is_algebraic:
        m_inv = a.inverse().primitive_minpoly()
        if m_inv.constant_term % p != 0:
            raise PreconditionViolation(
                f"ideal ({m_inv.format()}) is not contained in ({p}, t): "
                f"free term {m_inv.constant_term} is not divisible by {p}"
            )
        inv_target: FieldTarget = a.field_target(invert=True)
        ideal_a = f"({m_inv.format()})"
    else:
        inv_target = RationalFunctionField()
        ideal_a = "(0)"
    p_modp = poincare(cx, modp_target)
    p_inv = poincare(cx, inv_target)
    holds, witness = dominates(p_modp, p_inv)
    return SpecializationOrderReport(
        holds=holds,
        poincare_modp=p_modp,
        poincare_at_inverse=p_inv,
        ideal_at_inverse=ideal_a,
        boundary_ideal=f"({p}, t)",
        witness=witness,
    )
