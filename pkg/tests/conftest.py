import math

import numpy as np
import pytest
from hypothesis import strategies as st

from kitecc.domain import INV_SQRT3, SQRT3, Region, in_region_mask

settings_kw = dict(deadline=None, max_examples=60)


def _in(region):
    def check(p):
        return bool(in_region_mask(region, p[0], p[1]))
    return check


convex_shapes = st.tuples(
    st.floats(INV_SQRT3 + 1e-3, SQRT3 - 1e-3),
    st.floats(0.0, 1.0),
).map(lambda t: (t[0], math.hypot(t[0], 1) - t[0] + 1e-3 + t[1] * (2 * t[0] - math.hypot(t[0], 1) - 1e-3)))
convex_shapes = convex_shapes.filter(_in(Region.CONVEX))

concave1_shapes = st.tuples(
    st.floats(SQRT3 + 1e-3, 2 + SQRT3 - 1e-3), st.floats(1e-3, 1 - 1e-3),
).map(lambda t: (t[0], -SQRT3 + t[1] * (-(t[0] - 1 / t[0]) / 2 + SQRT3))).filter(_in(Region.CONCAVE1))

concave2_shapes = st.tuples(
    st.floats(1 + 1e-3, SQRT3 - 1e-3), st.floats(1e-3, 1 - 1e-3),
).map(lambda t: (t[0], -(t[0] - 1 / t[0]) / 2 * (1 - t[1]))).filter(_in(Region.CONCAVE2))

any_region_shapes = st.one_of(convex_shapes, concave1_shapes, concave2_shapes)

mass_triples = st.tuples(
    st.floats(0.01, 1.0), st.floats(0.01, 1.0), st.floats(0.01, 1.0),
).map(lambda t: tuple(v / sum(t) for v in t))


def random_shapes(region, n, seed=0):
    """Uniform samples from a region by rejection from its bounding box."""
    from kitecc.domain import bounding_box
    rng = np.random.default_rng(seed)
    x0, x1, y0, y1 = bounding_box(region)
    out = []
    while len(out) < n:
        x, y = rng.uniform(x0, x1), rng.uniform(y0, y1)
        if in_region_mask(region, x, y):
            out.append((float(x), float(y)))
    return out


@pytest.fixture
def square():
    from kitecc.domain import MassTriple
    return (1.0, 1.0), MassTriple(0.25, 0.25, 0.5)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    if rep.when == "setup" and rep.passed:
        return
    _criteria[n] = (title, rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}  {'PASS' if ok else 'FAIL'}  {title}")
