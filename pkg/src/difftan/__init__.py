"""Exact tangent-space dimensions and witnesses for based diffeological spaces.

The package computes, in exact rational/quadratic-surd arithmetic, the
dimensions and constructive witnesses of five tangent-space constructions
(internal, right, vincent, and the test-relative y-internal and y-right)
on three families of based spaces: Euclidean opens, irrational tori, and
orthogonal-group orbit spaces.
"""

__version__ = "0.1.0"

from .functor_core import (
    DEFAULT_SLOPE_POOL,
    DEFAULT_SLOPE_TEXTS,
    AxiomCheck,
    AxiomCheckReport,
    HypothesisNotMetError,
    catalog_spaces,
    distinguish,
    functor_axiom_check,
    tangent,
)
from .orbit_space import (
    GERM_DEGREE_BOUND,
    ORBIT_GENERATOR,
    Derivation,
    InvalidLiftError,
    InvariantGerm,
    LiftWitness,
    PolyLift,
    RankObstruction,
    classical_dims as classical_orbit_dims,
    compose_lifts,
    derivation_value,
    norm_square_poly,
    pushforward,
    random_valid_lift,
    rank_obstruction,
    standard_embedding,
    theorem2_dim,
    validate_lift,
)
from .polynomials import (
    MultiPoly,
    PolyParseError,
    UniPoly,
    compose_with,
    parse_polynomial,
)
from .quad_field import (
    ContinuedFraction,
    MobiusWitness,
    QuadraticIrrational,
    Rational,
    SurdParseError,
    cf_expand,
    format_surd,
    gl2z_equivalent,
    mobius_apply,
    mobius_compose,
    mobius_witness,
    parse_quadratic,
    same_field,
    squarefree_split,
)
from .spaces import (
    COMPUTED,
    REGISTERED,
    UNDETERMINED,
    EuclideanSpace,
    FunctorKind,
    IrrationalTorus,
    OrbitSpace,
    TangentReport,
    parse_space,
)
from .torus import (
    CONSTANT_GERMS,
    TORUS_GENERATOR,
    TorusHomReport,
    classical_dims as classical_torus_dims,
    compose_hom,
    diffeomorphic,
    hom_nonconstant,
    y_internal_dim,
)

__all__ = [
    "__version__",
    "AxiomCheck",
    "AxiomCheckReport",
    "CONSTANT_GERMS",
    "COMPUTED",
    "ContinuedFraction",
    "ORBIT_GENERATOR",
    "DEFAULT_SLOPE_POOL",
    "DEFAULT_SLOPE_TEXTS",
    "Derivation",
    "EuclideanSpace",
    "FunctorKind",
    "GERM_DEGREE_BOUND",
    "HypothesisNotMetError",
    "InvalidLiftError",
    "InvariantGerm",
    "IrrationalTorus",
    "LiftWitness",
    "MobiusWitness",
    "MultiPoly",
    "OrbitSpace",
    "PolyLift",
    "PolyParseError",
    "QuadraticIrrational",
    "RankObstruction",
    "Rational",
    "REGISTERED",
    "SurdParseError",
    "TORUS_GENERATOR",
    "TangentReport",
    "TorusHomReport",
    "UNDETERMINED",
    "UniPoly",
    "catalog_spaces",
    "cf_expand",
    "classical_orbit_dims",
    "classical_torus_dims",
    "compose_hom",
    "compose_lifts",
    "derivation_value",
    "diffeomorphic",
    "distinguish",
    "format_surd",
    "functor_axiom_check",
    "gl2z_equivalent",
    "hom_nonconstant",
    "mobius_apply",
    "mobius_compose",
    "mobius_witness",
    "norm_square_poly",
    "compose_with",
    "parse_polynomial",
    "parse_quadratic",
    "parse_space",
    "pushforward",
    "random_valid_lift",
    "rank_obstruction",
    "same_field",
    "squarefree_split",
    "standard_embedding",
    "tangent",
    "theorem2_dim",
    "validate_lift",
    "y_internal_dim",
]
