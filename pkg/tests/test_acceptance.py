"""Acceptance gate: nine checks covering the headline results end to end.

Each test prints one PASS line naming the criterion it verifies; running
`pytest -v tests/test_acceptance.py` therefore yields one pass/fail line
per criterion.  Dimension checks are exact integer equality; the only
tolerances are the pinned wall-clock bounds, asserted where stated.
"""

import json
import random
import time
from fractions import Fraction

import pytest
import sympy

from difftan import (
    DEFAULT_SLOPE_POOL,
    DEFAULT_SLOPE_TEXTS,
    Derivation,
    EuclideanSpace,
    FunctorKind,
    HypothesisNotMetError,
    InvariantGerm,
    IrrationalTorus,
    OrbitSpace,
    UniPoly,
    derivation_value,
    distinguish,
    functor_axiom_check,
    gl2z_equivalent,
    mobius_apply,
    mobius_witness,
    pushforward,
    random_valid_lift,
    rank_obstruction,
    tangent,
)
from difftan.cli import EXIT_OK, main
from test_quad_field import brute_force_equivalent, unimodular_matrices

# Same-field blocks inside DEFAULT_SLOPE_TEXTS, by index.
_POOL_BLOCKS = ({0, 1}, {2, 3}, {4, 5}, {6})


def _block_of(index):
    for block in _POOL_BLOCKS:
        if index in block:
            return block
    raise AssertionError(f"index {index} outside the pool")


def test_criterion_1_orbit_table_is_the_subset_indicator(capsys):
    started = time.perf_counter()
    code = main(["table", "orbit", "--max", "4", "--json"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - started
    assert code == EXIT_OK
    records = json.loads(out)
    assert len(records) == 16
    for record in records:
        m = int(record["test"].split(":")[1])
        n = int(record["space"].split(":")[1])
        assert record["dimension"] == int(m <= n), (m, n)
    assert elapsed < 1.0, f"orbit table took {elapsed:.3f}s"
    print(
        "PASS criterion 1: table orbit --max 4 equals [m <= n] on all 16 "
        f"cells in {elapsed:.3f}s"
    )


def test_criterion_2_torus_matrix_is_the_same_field_indicator(capsys):
    started = time.perf_counter()
    code = main(["table", "torus", "--slopes", ",".join(DEFAULT_SLOPE_TEXTS), "--json"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - started
    assert code == EXIT_OK
    records = json.loads(out)
    assert len(records) == 49
    labels = [f"torus:{text}" for text in DEFAULT_SLOPE_TEXTS]
    grid = {(r["test"], r["space"]): r["dimension"] for r in records}
    for i, test in enumerate(labels):
        for j, space in enumerate(labels):
            expected = 1 if j in _block_of(i) else 0
            assert grid[(test, space)] == expected, (test, space)
    assert elapsed < 1.0, f"torus table took {elapsed:.3f}s"
    print(
        "PASS criterion 2: y-internal torus matrix over the 7-slope pool "
        f"matches the same-field blocks in {elapsed:.3f}s"
    )


def test_criterion_3_classical_dimension_table():
    for k in range(4):
        space = EuclideanSpace(k)
        dims = tuple(
            tangent(space, FunctorKind(name)).dimension
            for name in ("internal", "vincent", "right")
        )
        assert dims == (k, k, k), space.label
    for slope in DEFAULT_SLOPE_POOL[:2]:
        torus = IrrationalTorus(slope)
        dims = tuple(
            tangent(torus, FunctorKind(name)).dimension
            for name in ("internal", "vincent", "right")
        )
        assert dims == (1, 0, 0), torus.label
    for n in range(1, 5):
        orbit = OrbitSpace(n)
        dims = tuple(
            tangent(orbit, FunctorKind(name)).dimension
            for name in ("internal", "vincent", "right")
        )
        assert dims == (0, 0, 1), orbit.label
    print(
        "PASS criterion 3: classical table gives (k,k,k) on R^k, (1,0,0) "
        "on tori, (0,0,1) on orbit spaces"
    )


def test_criterion_4_witness_soundness_on_all_pool_pairs():
    pairs = mobius_found = unimodular_found = 0
    for x in DEFAULT_SLOPE_POOL:
        for y in DEFAULT_SLOPE_POOL:
            pairs += 1
            witness = mobius_witness(x, y)
            if witness is not None:
                mobius_found += 1
                assert mobius_apply(witness, y) == x
            unimodular = gl2z_equivalent(x, y)
            if unimodular is not None:
                unimodular_found += 1
                assert abs(unimodular.det) == 1
                assert mobius_apply(unimodular, y) == x
    assert pairs == 49
    # Every same-field pair (4 + 4 + 4 + 1 index pairs -> 13) has a Moebius
    # witness; the unimodular ones are a subset of those.
    assert mobius_found == 13
    assert 7 <= unimodular_found <= mobius_found
    print(
        f"PASS criterion 4: all {mobius_found} Moebius witnesses apply "
        f"exactly and all {unimodular_found} unimodular witnesses have "
        "|det| = 1 over the 49 pool pairs"
    )


def test_criterion_5_gl2z_agrees_with_brute_force():
    started = time.perf_counter()
    matrices = unimodular_matrices(5)
    for x in DEFAULT_SLOPE_POOL:
        for y in DEFAULT_SLOPE_POOL:
            assert (gl2z_equivalent(x, y) is not None) == brute_force_equivalent(
                x, y, matrices
            )
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"oracle comparison took {elapsed:.3f}s"
    print(
        "PASS criterion 5: gl2z_equivalent matches the [-5, 5] det-unit "
        f"enumeration on all 49 pool pairs in {elapsed:.3f}s"
    )


def test_criterion_6_rank_obstruction_on_random_lifts():
    started = time.perf_counter()
    pairs = [(m, n) for m in range(2, 5) for n in range(1, m)]
    checked = 0
    for m, n in pairs:
        for seed in range(200):
            lift = random_valid_lift(m, n, seed=seed)
            assert pushforward(lift, Derivation(1)).coeff == 0
            assert rank_obstruction(lift).scalar == 0
            checked += 1
    elapsed = time.perf_counter() - started
    assert checked == 1200
    assert elapsed < 10.0, f"rank-obstruction sweep took {elapsed:.3f}s"
    print(
        "PASS criterion 6: 200 seeded lifts for each (m, n) with "
        f"n < m <= 4 ({checked} total) all push forward to 0 in {elapsed:.3f}s"
    )


def test_criterion_7_derivation_formula_against_symbolic_oracle():
    rng = random.Random(20260816)
    t = sympy.Symbol("t")
    for _ in range(50):
        n = rng.randint(1, 3)
        degree = rng.randint(1, 6)
        coeffs = [
            Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3, 4)))
            for _ in range(degree + 1)
        ]
        psi = UniPoly(tuple(coeffs))
        germ = InvariantGerm(psi)
        xs = sympy.symbols(f"x1:{n + 1}")
        profile = sum(
            (sympy.Rational(c) * t**i for i, c in enumerate(psi.coeffs)),
            sympy.Integer(0),
        )
        composite = profile.subs(t, sum(x**2 for x in xs))
        origin = {x: 0 for x in xs}
        symbolic = sympy.diff(composite, xs[0], 2).subs(origin) / 2
        assert symbolic == sympy.Rational(derivation_value(Derivation(1), germ))
    print(
        "PASS criterion 7: 50 random profiles (degree <= 6, n <= 3) match "
        "the symbolic half-second-derivative evaluation exactly"
    )


def test_criterion_8_functor_axiom_suite():
    sqrt2_torus = IrrationalTorus(DEFAULT_SLOPE_POOL[0])
    passing = [
        FunctorKind.internal(),
        FunctorKind.right(),
        FunctorKind.vincent(),
        FunctorKind.y_internal(sqrt2_torus),
        FunctorKind.y_right(OrbitSpace(1)),
        FunctorKind.y_right(OrbitSpace(2)),
        FunctorKind.y_right(OrbitSpace(3)),
    ]
    for functor in passing:
        report = functor_axiom_check(functor)
        assert report.passed, functor.label
        assert {c.name for c in report.checks} == {
            "euclidean-dimensions",
            "identity-law",
            "composition-law",
        }
    with pytest.raises(HypothesisNotMetError, match="hypothesis not met"):
        functor_axiom_check(FunctorKind.y_right(sqrt2_torus))
    print(
        "PASS criterion 8: axiom checks pass for internal, right, vincent, "
        "y-internal(torus), y-right(orbit:1..3) and refuse y-right(torus)"
    )


def test_criterion_9_pairwise_distinction():
    # Cross-block torus pairs must separate...
    for i, alpha in enumerate(DEFAULT_SLOPE_POOL):
        for j, beta in enumerate(DEFAULT_SLOPE_POOL):
            if j in _block_of(i) or i == j:
                continue
            first = FunctorKind.y_internal(IrrationalTorus(alpha))
            second = FunctorKind.y_internal(IrrationalTorus(beta))
            found = distinguish(first, second)
            assert found is not None, (alpha, beta)
            assert isinstance(found, IrrationalTorus)
    # ...and so must distinct orbit tests.
    for m in range(1, 5):
        for m_prime in range(1, 5):
            if m == m_prime:
                continue
            found = distinguish(
                FunctorKind.y_right(OrbitSpace(m)),
                FunctorKind.y_right(OrbitSpace(m_prime)),
            )
            assert found is not None, (m, m_prime)
            assert isinstance(found, OrbitSpace)
    print(
        "PASS criterion 9: distinguish separates every cross-block torus "
        "test pair and every pair of distinct orbit tests up to 4"
    )
