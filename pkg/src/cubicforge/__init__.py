"""Exact construction of points of infinite order on elliptic curves over
pure cubic fields, with anomalous-prime diagnostics."""

from .arith import (
    CubeClass,
    Factorization,
    Rat,
    cubefree_rat,
    factorize,
    is_prime,
    parse_rat,
    primes_up_to,
)
from .anomaly import (
    ConditionIIReport,
    CorrelationReport,
    DivisorReport,
    Lemma11Class,
    classify_divisors,
    condition_ii_check,
    correlation_scan,
    degree_pattern_scan,
    exception_set,
    is_anomalous,
    lemma11_classify,
)
from .ascent import (
    AscentBatch,
    AscentRecord,
    Branch,
    ConstructionPoly,
    ascend_range,
    build_polynomial,
    integer_params,
    lift_point,
    m_value,
    rational_params,
    verify_disc_formula,
    verify_phi_identity,
    verify_psi3_identity,
)
from .curves import (
    INFINITY,
    Curve,
    PrimeReport,
    TorsionVerdict,
    count_ext,
    count_points,
    is_admissible,
    is_on_curve,
    model_over_q,
    model_over_radical,
    point_add,
    point_neg,
    psi3,
    reduce_curve,
    reduce_point,
    scalar_mul,
    torsion_certify,
)
from .errors import (
    DegenerateParameter,
    DivisionByZero,
    FieldMismatch,
    ForgeError,
    InternalError,
    InvalidInput,
    InvalidParameter,
    OracleExhausted,
    PrimeExcluded,
    SingularCurve,
    WrongBranch,
)
from .fields import (
    ExtFieldElem,
    FpElem,
    RadicalElem,
    build_residue_fields,
    reduce_radical,
)
from .poly import (
    BiPolyQ,
    Irreducibility,
    PolyFp,
    PolyQ,
    ddf_pattern,
    discriminant,
    irreducibility_sieve,
    poly_to_json,
    poly_to_text,
    reduce_mod,
    resultant,
    roots_mod,
)

__version__ = "0.1.0"
