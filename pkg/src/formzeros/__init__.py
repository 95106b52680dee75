"""Exact homological lower bounds for zeros of closed one-forms.

Everything is computed over Z[t] (t the deformation variable) with
exact arithmetic end to end: fraction-free elimination for ranks and
determinants, certified factorisation for jump loci, and divisibility
witnesses for every counting inequality.
"""

from __future__ import annotations

from .bounds import (
    BoundsReport,
    JumpFactor,
    JumpReport,
    PrimeSelection,
    UnitCertificate,
    UnitClassification,
    XiPolynomial,
    all_jump_points,
    classify,
    jump_points,
    select_prime,
    xi_degree,
    xi_top,
    xi_unit_certificate,
    zero_bounds,
)
from .complexes import (
    BettiVector,
    ChainComplex,
    SpecializationOrderReport,
    betti,
    dominates,
    dominates_alternating,
    duality_transform,
    euler_characteristic,
    poincare,
    specialization_order_check,
)
from .deformation import (
    BottCheckReport,
    BottComponentData,
    Generator,
    GroupRingPresentation,
    GroupWordSum,
    TrefoilSurgeryReport,
    alexander_block_complex,
    bott_inequality_check,
    build_deformation,
    mapping_torus,
    specialize_at_class,
    specialize_boundary_case,
    trefoil_model_complex,
    trefoil_surgery_example,
)
from .errors import (
    AllLevelsCancel,
    ComplexAxiomViolation,
    DegreeOverflow,
    DirichletUnitRefusal,
    DomainRefusal,
    FormzerosError,
    InputError,
    InvariantViolation,
    IsAlgebraicInteger,
    NonUnimodular,
    PolynomialParseError,
    PositiveXiWord,
    PreconditionViolation,
    SchemaError,
)
from .factor import is_irreducible, split_squarefree
from .fields import (
    AlgebraicNumberSpec,
    FieldTarget,
    NumberField,
    PrimeField,
    Rationals,
    RationalFunctionField,
)
from .matrix import Matrix, det, minor_gcd, rank, specialize_matrix
from .poly import Poly, gcd_primitive, radical

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumberSpec",
    "AllLevelsCancel",
    "BettiVector",
    "BottCheckReport",
    "BottComponentData",
    "BoundsReport",
    "ChainComplex",
    "ComplexAxiomViolation",
    "DegreeOverflow",
    "DirichletUnitRefusal",
    "DomainRefusal",
    "FieldTarget",
    "FormzerosError",
    "Generator",
    "GroupRingPresentation",
    "GroupWordSum",
    "InputError",
    "InvariantViolation",
    "IsAlgebraicInteger",
    "JumpFactor",
    "JumpReport",
    "Matrix",
    "NonUnimodular",
    "NumberField",
    "Poly",
    "PolynomialParseError",
    "PositiveXiWord",
    "PreconditionViolation",
    "PrimeField",
    "PrimeSelection",
    "Rationals",
    "RationalFunctionField",
    "SchemaError",
    "SpecializationOrderReport",
    "TrefoilSurgeryReport",
    "UnitCertificate",
    "UnitClassification",
    "XiPolynomial",
    "alexander_block_complex",
    "all_jump_points",
    "betti",
    "bott_inequality_check",
    "build_deformation",
    "classify",
    "det",
    "dominates",
    "dominates_alternating",
    "duality_transform",
    "euler_characteristic",
    "gcd_primitive",
    "is_irreducible",
    "jump_points",
    "mapping_torus",
    "minor_gcd",
    "poincare",
    "radical",
    "rank",
    "select_prime",
    "specialization_order_check",
    "specialize_at_class",
    "specialize_boundary_case",
    "specialize_matrix",
    "split_squarefree",
    "trefoil_model_complex",
    "trefoil_surgery_example",
    "xi_degree",
    "xi_top",
    "xi_unit_certificate",
    "zero_bounds",
]
