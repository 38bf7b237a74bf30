import random
import time

import pytest
from hypothesis import strategies as st

from fsplit import Ideal, Ring

ACCEPTANCE = pytest.StashKey[list]()

# (p, variables, generators): graded ideals used wherever a corpus is needed
CORPUS_TEXTS = {
    "x": [["x"], ["x^2"], []],
    "xy": [["x"], ["y"], ["x*y"], ["x + y"], ["x - y"], ["x^2"], ["x", "y^2"],
           ["x^2", "x*y"], ["x^2 + y^2"], ["x*y", "y^2"], ["x", "y"], ["x^2*y + x*y^2"]],
    "xyz": [["x*y*z"], ["x*y", "z"], ["x*y - z^2"], ["x*y - z^2", "x^2 - y*z"],
            ["x + y + z"], ["x*y", "x*z", "y*z"], ["x^2", "y"], ["x*z", "y*z"],
            ["x", "y", "z"], ["x*y + y*z"], ["x*z", "y"]],
}


def corpus():
    out = []
    for p in (2, 3):
        for names, gens_list in CORPUS_TEXTS.items():
            ring = Ring(p, tuple(names))
            for gens in gens_list:
                out.append(Ideal.parse(ring, gens))
    return out


@pytest.fixture(scope="session")
def ideal_corpus():
    return corpus()


@pytest.fixture
def R2():
    return Ring(2, ("x", "y"))


@pytest.fixture
def R3():
    return Ring(3, ("x", "y", "z"))


def random_poly(ring, rng: random.Random, terms=4, degree=3):
    coeffs = {}
    for _ in range(rng.randint(0, terms)):
        e = tuple(rng.randint(0, degree) for _ in range(ring.nvars))
        coeffs[e] = rng.randrange(ring.p)
    return ring.poly(coeffs)


@st.composite
def polynomials(draw, ring, terms=4, degree=3):
    n = ring.nvars
    items = draw(st.lists(
        st.tuples(st.tuples(*[st.integers(0, degree)] * n), st.integers(0, ring.p - 1)),
        max_size=terms))
    return ring.poly(items)


@pytest.fixture
def criterion(request):
    """Time a block and record a pass/fail line for the terminal summary."""
    log = request.config.stash.setdefault(ACCEPTANCE, [])

    class Recorder:
        def __init__(self):
            self.name = request.node.name
            self.start = time.perf_counter()

        def elapsed(self):
            return time.perf_counter() - self.start

    rec = Recorder()
    yield rec
    failed = getattr(request.node, "rep_call", None)
    status = "FAIL" if failed is None or failed.failed else "PASS"
    log.append(f"{status}  {rec.name}  ({rec.elapsed():.2f}s)")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
