import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orthofam import LinearFamily, Triangle, Vec2

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F = Fraction

# small rationals keep exact arithmetic fast
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)
points = st.builds(Vec2, rationals, rationals)
triangles = st.builds(Triangle, points, points, points)
nondegenerate_triangles = triangles.filter(lambda T: not T.is_degenerate())
families = st.builds(LinearFamily, triangles, triangles)


@pytest.fixture
def fstar():
    """Base triangles (0,0),(1,0),(0,1) and (0,0),(0,1),(1,0)."""
    return LinearFamily(
        Triangle(Vec2(F(0), F(0)), Vec2(F(1), F(0)), Vec2(F(0), F(1))),
        Triangle(Vec2(F(0), F(0)), Vec2(F(0), F(1)), Vec2(F(1), F(0))),
    )


def tri(*pts) -> Triangle:
    return Triangle(*(Vec2(F(x), F(y)) for x, y in pts))


# acceptance criteria report one line each at the end of the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"{status} criterion {key:2d}: {text}")
