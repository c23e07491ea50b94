import pytest

from difftan import parse_quadratic

# Slope pool used by the acceptance gate: same-field blocks are
# {sqrt(2), 1+sqrt(2)}, {(1+sqrt(5))/2, sqrt(5)}, {sqrt(3), 2+sqrt(3)},
# {sqrt(7)}.
ACCEPTANCE_SLOPES = (
    "sqrt(2)",
    "1+sqrt(2)",
    "(1+sqrt(5))/2",
    "sqrt(5)",
    "sqrt(3)",
    "2+sqrt(3)",
    "sqrt(7)",
)

# Wider pool for the quadratic-field unit properties.  Values are chosen
# so that every truly equivalent pair has a unimodular witness with
# entries inside the brute-force enumeration bound.
FIELD_POOL = ACCEPTANCE_SLOPES + (
    "(sqrt(2))/2",
    "1+sqrt(5)",
    "2+sqrt(5)",
    "sqrt(6)",
)


@pytest.fixture(scope="session")
def acceptance_pool():
    return tuple(parse_quadratic(text) for text in ACCEPTANCE_SLOPES)


@pytest.fixture(scope="session")
def field_pool():
    return tuple(parse_quadratic(text) for text in FIELD_POOL)
