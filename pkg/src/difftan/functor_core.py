"""Dispatch, axiom checks, and separation search for tangent constructions.

tangent() answers "what is the dimension of this tangent construction on
this based space" for every combination of catalog space (Euclidean
opens, irrational tori, orbit spaces) and construction (internal, right,
vincent, and the test-relative y-internal / y-right).  Each answer is a
TangentReport carrying generators, witnesses where meaningful, a status
-- computed here, registered from a proved classification, or
undetermined -- and a one-line justification.

The undetermined corner is deliberate: maps from an irrational torus into
an orbit space fall outside the registered classifications, so the
y-internal cells of a torus tested against an orbit space report
undetermined rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import orbit_space as orbit
from . import torus as torus_mod
from .orbit_space import PolyLift, compose_lifts
from .polynomials import MultiPoly
from .quad_field import QuadraticIrrational, parse_quadratic
from .spaces import (
    COMPUTED,
    REGISTERED,
    UNDETERMINED,
    EuclideanSpace,
    FunctorKind,
    IrrationalTorus,
    OrbitSpace,
    Space,
    TangentReport,
)

DEFAULT_SLOPE_TEXTS = (
    "sqrt(2)",
    "1+sqrt(2)",
    "(1+sqrt(5))/2",
    "sqrt(5)",
    "sqrt(3)",
    "2+sqrt(3)",
    "sqrt(7)",
)
DEFAULT_SLOPE_POOL: tuple[QuadraticIrrational, ...] = tuple(
    parse_quadratic(text) for text in DEFAULT_SLOPE_TEXTS
)


class HypothesisNotMetError(ValueError):
    """The test space lacks the nonzero tangent vector the check needs."""


def _euclidean_generators(k: int) -> tuple[str, ...]:
    return tuple(f"∂/∂x{i + 1}" for i in range(k))


def _internal_dim(space: Space) -> int:
    """Classical internal tangent dimension (registered facts)."""
    if isinstance(space, EuclideanSpace):
        return space.dim
    if isinstance(space, IrrationalTorus):
        return 1
    return 0


def _right_dim(space: Space) -> int:
    """Classical right tangent dimension (registered facts)."""
    if isinstance(space, EuclideanSpace):
        return space.dim
    if isinstance(space, IrrationalTorus):
        return 0
    return 1


_EUCLIDEAN_CLASSICAL = (
    "on a Euclidean open every construction returns the classical tangent "
    "space at the basepoint"
)
_EUCLIDEAN_RELATIVE = (
    "the test space carries a nonzero tangent vector of the relevant kind, "
    "so the construction agrees with the classical tangent functor on "
    "Euclidean spaces"
)
_POINT_TEST = (
    "the only germ into the one-point space is constant, so the refining "
    "relation identifies all plot vectors"
)
_TEST_INTERNAL_ZERO = (
    "the internal tangent space of the test space vanishes, so every "
    "pushforward is zero and the refining relation identifies all plot "
    "vectors"
)
_SPACE_INTERNAL_ZERO = (
    "the internal tangent space of an orbit space vanishes, and this "
    "construction is a quotient of it"
)
_TORUS_RIGHT_ZERO = (
    "the right tangent space of an irrational torus vanishes, and this "
    "construction selects a subspace of it"
)
_TEST_RIGHT_ZERO = (
    "the right tangent space of the test space vanishes, so there is "
    "nothing to push forward"
)
_AXIS_REDUCTION = (
    "each coordinate derivation is the pushforward of the curve derivation "
    "along an axis inclusion, so the span reduces to the span over curves, "
    "which vanishes on an orbit space"
)
_TORUS_ORBIT_GAP = (
    "maps from an irrational torus into an orbit space fall outside the "
    "registered classifications; no computation rule applies"
)


def _report(space, functor, dim, generators, status, justification, witness=None):
    return TangentReport(
        space=space,
        functor=functor,
        dimension=dim,
        generators=generators,
        witness=witness,
        status=status,
        justification=justification,
    )


def _classical(space: Space, functor: FunctorKind) -> TangentReport:
    if isinstance(space, EuclideanSpace):
        return _report(
            space,
            functor,
            space.dim,
            _euclidean_generators(space.dim),
            REGISTERED,
            _EUCLIDEAN_CLASSICAL,
        )
    if isinstance(space, IrrationalTorus):
        return torus_mod.classical_dims(space)[functor.name]
    return orbit.classical_dims(space)[functor.name]


def _y_internal(space: Space, functor: FunctorKind) -> TangentReport:
    test = functor.test
    if isinstance(space, OrbitSpace):
        return _report(space, functor, 0, (), COMPUTED, _SPACE_INTERNAL_ZERO)
    if isinstance(space, EuclideanSpace):
        if _internal_dim(test) >= 1:
            return _report(
                space,
                functor,
                space.dim,
                _euclidean_generators(space.dim),
                REGISTERED,
                _EUCLIDEAN_RELATIVE,
            )
        if isinstance(test, EuclideanSpace):
            return _report(space, functor, 0, (), COMPUTED, _POINT_TEST)
        return _report(space, functor, 0, (), COMPUTED, _TEST_INTERNAL_ZERO)
    # Irrational torus space.
    if isinstance(test, IrrationalTorus):
        return torus_mod.y_internal_dim(space, test)
    if isinstance(test, EuclideanSpace):
        return _report(
            space, functor, 0, (), COMPUTED, torus_mod.CONSTANT_GERMS
        )
    return _report(space, functor, None, (), UNDETERMINED, _TORUS_ORBIT_GAP)


def _y_right(space: Space, functor: FunctorKind) -> TangentReport:
    test = functor.test
    if isinstance(space, IrrationalTorus):
        return _report(space, functor, 0, (), COMPUTED, _TORUS_RIGHT_ZERO)
    if _right_dim(test) == 0:
        return _report(space, functor, 0, (), COMPUTED, _TEST_RIGHT_ZERO)
    if isinstance(space, EuclideanSpace):
        return _report(
            space,
            functor,
            space.dim,
            _euclidean_generators(space.dim),
            REGISTERED,
            _EUCLIDEAN_RELATIVE,
        )
    # Orbit space with a test that has derivations: another orbit space or
    # a Euclidean open of positive dimension.
    if isinstance(test, OrbitSpace):
        return orbit.theorem2_dim(test.n, space.n)
    return _report(space, functor, 0, (), COMPUTED, _AXIS_REDUCTION)


def tangent(space: Space, functor: FunctorKind) -> TangentReport:
    """Dimension, generators, witness, and provenance for one tangent cell."""
    if functor.name in ("internal", "vincent", "right"):
        return _classical(space, functor)
    if functor.name == "y-internal":
        return _y_internal(space, functor)
    return _y_right(space, functor)


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AxiomCheckReport:
    functor: FunctorKind
    checks: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


_Matrix = tuple[tuple[Fraction, ...], ...]

# Sample linear maps (name, source dim, target dim, rows) used to probe
# functoriality; every composable pair below is checked.
_SAMPLE_LINEAR_MAPS: tuple[tuple[str, int, int, _Matrix], ...] = (
    ("dbl", 1, 2, ((Fraction(1),), (Fraction(2),))),
    ("proj", 2, 1, ((Fraction(1), Fraction(1)),)),
    ("mix", 2, 3, ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)))),
)


def _lift_of_matrix(source: int, target: int, rows: _Matrix) -> PolyLift:
    comps = []
    for i in range(target):
        poly = MultiPoly.zero(source)
        for j in range(source):
            if rows[i][j] != 0:
                poly = poly + rows[i][j] * MultiPoly.variable(source, j)
        comps.append(poly)
    return PolyLift(source, target, tuple(comps))


def _linear_part(lift: PolyLift) -> _Matrix:
    return tuple(comp.linear_coeffs() for comp in lift.components)


def _mat_mul(a: _Matrix, b: _Matrix) -> _Matrix:
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
            for j in range(len(b[0]))
        )
        for i in range(len(a))
    )


def _identity_matrix(k: int) -> _Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(k)) for i in range(k)
    )


def functor_axiom_check(functor: FunctorKind) -> AxiomCheckReport:
    """Check tangent-functor behavior on Euclidean opens.

    Verifies that the construction returns dimension k on R^k for
    k in 0..3, that identity maps push forward to identity matrices, and
    that pushforwards of sample linear maps compose functorially (the
    composite computed by polynomial substitution must match the matrix
    product).  Raises HypothesisNotMetError when the functor's test space
    has no tangent vector of the relevant kind, in which case the
    construction is degenerate rather than tangent-functorial.
    """
    if functor.name == "y-internal" and _internal_dim(functor.test) == 0:
        raise HypothesisNotMetError(
            f"hypothesis not met: the internal tangent space of "
            f"{functor.test.label} vanishes"
        )
    if functor.name == "y-right" and _right_dim(functor.test) == 0:
        raise HypothesisNotMetError(
            f"hypothesis not met: the right tangent space of "
            f"{functor.test.label} vanishes"
        )

    dims_ok = all(
        tangent(EuclideanSpace(k), functor).dimension == k for k in range(4)
    )
    dim_check = AxiomCheck(
        "euclidean-dimensions", dims_ok, "dimension k on R^k for k in 0..3"
    )

    identity_ok = True
    for k in range(1, 4):
        ident = _lift_of_matrix(k, k, _identity_matrix(k))
        if _linear_part(ident) != _identity_matrix(k):
            identity_ok = False
    id_check = AxiomCheck(
        "identity-law", identity_ok, "identity maps act as identity matrices"
    )

    pairs = 0
    compose_ok = True
    for f_name, f_src, f_tgt, f_rows in _SAMPLE_LINEAR_MAPS:
        for g_name, g_src, g_tgt, g_rows in _SAMPLE_LINEAR_MAPS:
            if f_tgt != g_src:
                continue
            pairs += 1
            composite = compose_lifts(
                _lift_of_matrix(g_src, g_tgt, g_rows),
                _lift_of_matrix(f_src, f_tgt, f_rows),
            )
            if _linear_part(composite) != _mat_mul(g_rows, f_rows):
                compose_ok = False
    comp_check = AxiomCheck(
        "composition-law",
        compose_ok,
        f"{pairs} composable sample pairs agree with matrix products",
    )

    return AxiomCheckReport(functor, (dim_check, id_check, comp_check))


# ---------------------------------------------------------------------------
# Separation search
# ---------------------------------------------------------------------------


def catalog_spaces(
    slopes: Optional[Sequence[QuadraticIrrational]] = None,
) -> tuple[Space, ...]:
    """The search catalog: R^0..R^3, the slope-pool tori, orbit spaces 1..4."""
    pool = DEFAULT_SLOPE_POOL if slopes is None else tuple(slopes)
    spaces: list[Space] = [EuclideanSpace(k) for k in range(4)]
    spaces.extend(IrrationalTorus(slope) for slope in pool)
    spaces.extend(OrbitSpace(n) for n in range(1, 5))
    return tuple(spaces)


def distinguish(
    first: FunctorKind,
    second: FunctorKind,
    slopes: Optional[Sequence[QuadraticIrrational]] = None,
) -> Optional[Space]:
    """First catalog space on which the two constructions disagree.

    Only cells determined for both constructions can separate; an
    undetermined cell never counts as a difference.  Returns None when
    every comparable cell agrees.
    """
    for space in catalog_spaces(slopes):
        r1 = tangent(space, first)
        r2 = tangent(space, second)
        if r1.determined and r2.determined and r1.dimension != r2.dimension:
            return space
    return None
