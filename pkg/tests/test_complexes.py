"""Chain complexes over Z[t]: validation, Betti numbers, the
divisibility order, and the ideal-containment check."""

from __future__ import annotations

import json
import random

import pytest

from formzeros.complexes import (
    ChainComplex,
    betti,
    dominates,
    dominates_alternating,
    duality_transform,
    euler_characteristic,
    poincare,
    specialization_order_check,
)
from formzeros.errors import (
    ComplexAxiomViolation,
    DegreeOverflow,
    PreconditionViolation,
    SchemaError,
)
from formzeros.fields import (
    AlgebraicNumberSpec,
    NumberField,
    PrimeField,
    Rationals,
    RationalFunctionField,
)
from formzeros.matrix import Matrix
from formzeros.poly import Poly


def _cx(ranks, boundaries):
    mats = []
    for i, rows in enumerate(boundaries, start=1):
        nr, nc = ranks[i - 1], ranks[i]
        mats.append(Matrix(nr, nc, [[Poly.parse(e) for e in row] for row in rows]))
    return ChainComplex(tuple(ranks), mats)


def test_shape_mismatch_rejected():
    square = Matrix(1, 1, [[Poly.t()]])
    with pytest.raises(SchemaError):
        ChainComplex((1, 2), [square])


def test_d_squared_checked():
    # d1*d2 = (t)*(t) is nonzero
    bad = _cx((1, 1, 1), [[["t"]], [["t"]]])
    with pytest.raises(ComplexAxiomViolation):
        bad.validate()


def test_valid_complex_passes():
    good = _cx((1, 2, 1), [[["t - 1", "0"]], [["0"], ["t + 1"]]])
    good.validate()


def test_boundary_off_end_shapes():
    cx = _cx((2, 1), [[["t"], ["1"]]])
    assert cx.boundary(0).nrows == 0 and cx.boundary(0).ncols == 2
    assert cx.boundary(2).nrows == 1 and cx.boundary(2).ncols == 0


def test_json_round_trip():
    cx = _cx((1, 2, 1), [[["t - 1", "0"]], [["0"], ["t + 1"]]])
    text = cx.to_json()
    back = ChainComplex.from_json(text)
    assert back.ranks == cx.ranks
    assert all(back.boundary(i) == cx.boundary(i) for i in (1, 2))
    # documents carry the ring tag and reject unknown rings
    doc = json.loads(text)
    assert doc["ring"] == "Z[t]"
    doc["ring"] = "Z[x,y]"
    with pytest.raises(SchemaError):
        ChainComplex.from_json_dict(doc)


def test_from_json_validates_d_squared():
    doc = {
        "ring": "Z[t]",
        "ranks": [1, 1, 1],
        "boundaries": [[["t"]], [["t"]]],
    }
    with pytest.raises(ComplexAxiomViolation):
        ChainComplex.from_json_dict(doc)


def test_betti_rank_nullity_known():
    # d1 = [t - 1]: generic rank 1, so generic Betti numbers vanish
    cx = _cx((1, 1), [[["t - 1"]]])
    rff = RationalFunctionField()
    assert betti(cx, rff).entries == (0, 0)
    at_one = NumberField(Poly((-1, 1)))
    assert betti(cx, at_one).entries == (1, 1)
    assert betti(cx, Rationals()).entries == (0, 0)
    assert betti(cx, PrimeField(3)).entries == (0, 0)


def test_poincare_polynomial():
    cx = _cx((1, 1), [[["t - 1"]]])
    assert poincare(cx, NumberField(Poly((-1, 1)))) == Poly((1, 1))
    assert poincare(cx, RationalFunctionField()) == Poly.zero()


def test_euler_characteristic_target_independent():
    cx = _cx((1, 2, 1), [[["t - 1", "0"]], [["0"], ["t + 1"]]])
    targets = [RationalFunctionField(), Rationals(), PrimeField(2),
               NumberField(Poly((-1, 1))), NumberField(Poly((1, 1, 1)))]
    vals = {euler_characteristic(cx, t) for t in targets}
    assert vals == {sum((-1) ** i * r for i, r in enumerate(cx.ranks))}


# -- the divisibility order ------------------------------------------


def test_dominates_reflexive_with_zero_witness():
    p = Poly((1, 2, 1))
    holds, w = dominates(p, p)
    assert holds and w == Poly.zero()


def test_dominates_known_pairs():
    # (1+t)^2 over 0, witness 1+t
    holds, w = dominates(Poly((1, 2, 1)), Poly.zero())
    assert holds and w == Poly((1, 1))
    # t+1 over 1 fails: the tail sum goes negative
    holds, w = dominates(Poly((1, 1)), Poly((1,)))
    assert not holds and w is None
    # difference (1+t)*2t = 2t + 2t^2
    holds, w = dominates(Poly((0, 3, 2)), Poly((0, 1)))
    assert holds and w == Poly((0, 2))


def test_dominates_routes_agree_random():
    rng = random.Random(515)
    for _ in range(300):
        p = Poly([rng.randint(0, 4) for _ in range(rng.randint(0, 5))])
        q = Poly([rng.randint(0, 4) for _ in range(rng.randint(0, 5))])
        assert dominates(p, q)[0] == dominates_alternating(p, q)


def test_dominates_witness_certifies():
    rng = random.Random(516)
    lam = Poly((1, 1))
    for _ in range(200):
        p = Poly([rng.randint(0, 4) for _ in range(rng.randint(0, 5))])
        q = Poly([rng.randint(0, 4) for _ in range(rng.randint(0, 5))])
        holds, w = dominates(p, q)
        if holds:
            assert all(c >= 0 for c in w.coeffs)
            assert p - q == lam * w


def test_duality_transform():
    assert duality_transform(Poly((1, 2)), 3) == Poly((0, 0, 2, 1))
    assert duality_transform(Poly.zero(), 2) == Poly.zero()
    with pytest.raises(DegreeOverflow):
        duality_transform(Poly((0, 0, 1)), 1)


# -- ideal containment ------------------------------------------------


def test_order_check_known_case():
    cx = _cx((1, 1), [[["t - 2"]]])
    a = AlgebraicNumberSpec.from_rational(2).inverse()  # a = 1/2, 1/a = 2
    rep = specialization_order_check(cx, a, 2)
    assert rep.holds
    assert rep.poincare_at_inverse == Poly((1, 1))
    assert rep.poincare_modp == Poly((1, 1))
    assert rep.witness == Poly.zero()
    assert rep.ideal_at_inverse == "(t - 2)"
    assert rep.boundary_ideal == "(2, t)"


def test_order_check_rejects_bad_prime():
    cx = _cx((1, 1), [[["t - 2"]]])
    a = AlgebraicNumberSpec.from_rational(2).inverse()
    with pytest.raises(PreconditionViolation):
        specialization_order_check(cx, a, 5)


def test_order_check_transcendental_vacuous_ideal():
    cx = _cx((1, 1), [[["t - 2"]]])
    a = AlgebraicNumberSpec.transcendental()
    rep = specialization_order_check(cx, a, 7)
    assert rep.holds
    assert rep.ideal_at_inverse == "(0)"


def test_order_check_json_dict():
    cx = _cx((1, 1), [[["t - 2"]]])
    a = AlgebraicNumberSpec.from_rational(2).inverse()
    doc = specialization_order_check(cx, a, 2).to_json_dict()
    assert doc["holds"] is True
    assert doc["poincare_modp"] == [1, 1]
