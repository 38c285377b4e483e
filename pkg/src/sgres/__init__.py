"""Exact graded free resolutions and invariants of numerical semigroup
rings of embedding dimension at most 4.

The pipeline: build a :class:`NumericalSemigroup`, :func:`classify` it,
:func:`resolve` the semigroup ring, then read invariants off the Betti
degrees (:func:`k_polynomial`, :func:`pf_from_betti`, :func:`hilbert_check`)
and decide strong indispensability (:func:`strong_indisp`,
:func:`cross_validate`).  Everything is exact integer arithmetic.
"""

from .errors import (
    ConsistencyFailure,
    CrossValidationMismatch,
    DegreeMismatch,
    DimensionMismatch,
    GcdNotOne,
    InvalidParameters,
    NonMinimalGenerator,
    NotHomogeneous,
    NotInClass,
    NotInSemigroup,
    NotSkewSymmetric,
    SgresError,
    UnsupportedClass,
    UnsupportedEmbeddingDimension,
    VerificationFailure,
    ZeroOrNegativeGenerator,
)
from .semigroup import (
    NumericalSemigroup,
    Representation,
    SymmetryType,
    is_representable,
    representations_of,
)
from .polyalg import (
    GradedMatrix,
    Poly,
    all_minors,
    mat_mul,
    minor,
    monomial,
    pfaffian4,
    poly_from_str,
    poly_to_str,
    sdegree,
    transpose_entries,
)
from .presentation import (
    BresinskyData,
    CI3Data,
    CI4CaseI,
    CI4CaseII,
    Classification,
    HerzogData,
    KomedaData,
    SemigroupClass,
    bresinsky,
    ci3,
    ci4,
    classify,
    from_bresinsky,
    from_komeda,
    generators_ideal,
    herzog,
    komeda,
)
from .resolution import (
    ComplexReport,
    DualityReport,
    GradedResolution,
    PfaffianReport,
    WitnessMinorReport,
    divide_exact,
    duality_check,
    koszul,
    resolve,
    verify_complex,
    verify_pfaffian,
    verify_witness_minors,
)
from .invariants import (
    DegreeRelations,
    KPolynomial,
    closed_form_pf,
    degree_relations,
    hilbert_check,
    hilbert_series,
    k_polynomial,
    pf_from_betti,
)
from .indispensability import (
    CrossValidationReport,
    IndispMethod,
    IndispensabilityReport,
    UniquenessResult,
    UniquenessStatus,
    Witness,
    cross_validate,
    differences_check,
    strong_indisp,
    uniqueness_check,
)

__version__ = "0.1.0"
