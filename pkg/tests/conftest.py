import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from conway import Arena
from conway.randgames import GameGenerator

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
settings.load_profile("default")

# shared by hypothesis tests; caches are pure so sharing is safe
ARENA = Arena()


@pytest.fixture
def arena():
    return Arena()


@pytest.fixture
def gen(arena):
    return GameGenerator(arena, seed=1234)


def trees(max_depth=3, max_branch=3):
    """Nested (left, right) tuples of bounded depth and branching."""
    leaf = st.just(((), ()))
    return st.recursive(
        leaf,
        lambda kids: st.tuples(st.lists(kids, max_size=max_branch).map(tuple),
                               st.lists(kids, max_size=max_branch).map(tuple)),
        max_leaves=12,
    ).filter(lambda t: _depth(t) <= max_depth)


def _depth(t):
    opts = t[0] + t[1]
    return 1 + max(map(_depth, opts)) if opts else 0


def intern(arena, t):
    return arena.make_game([intern(arena, x) for x in t[0]],
                           [intern(arena, x) for x in t[1]])


def as_oracle(t):
    return (frozenset(as_oracle(x) for x in t[0]), frozenset(as_oracle(x) for x in t[1]))


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
