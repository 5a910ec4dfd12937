import os
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from lpa.field import FieldCtx
from lpa.graph import Graph
from lpa.sampling import random_rep

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

GRAPHS = {
    "bouquet2": Graph.bouquet(2),
    "bouquet3": Graph.bouquet(3),
    "line2": Graph.line(2),
    "circle2": Graph.circle(2),
}
FIELDS = [FieldCtx.Fp(2), FieldCtx.Fp(3), FieldCtx.Fp(5), FieldCtx.Q()]


@st.composite
def reps(draw, graphs=tuple(GRAPHS.values()), fields=tuple(FIELDS), max_dim=3):
    """Random representations driven by a hypothesis-drawn seed."""
    g = draw(st.sampled_from(graphs))
    F = draw(st.sampled_from(fields))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.sampled_from([0.3, 0.7, 1.0]))
    return random_rep(g, F, random.Random(seed), max_dim=max_dim, density=density)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def Q():
    return FieldCtx.Q()


@pytest.fixture(scope="session")
def F2():
    return FieldCtx.Fp(2)


@pytest.fixture(scope="session")
def bouquet2():
    return GRAPHS["bouquet2"]


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
