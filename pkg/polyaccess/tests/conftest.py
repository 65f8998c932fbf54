import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Ensure the project root is on the path so that ``import polyaccess`` and
# ``import runner`` resolve to the repository root modules. ``parents[2]``
# points to the repository root.
sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from polyaccess.conf import settings  # noqa: E402
from polyaccess.lie.fields import SystemSpec, VectorField  # noqa: E402
from polyaccess.poly.core import VarTable  # noqa: E402
from polyaccess.poly.parser import parse_polynomial  # noqa: E402
from polyaccess.sysfile import parse_file  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long symbolic computation")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def fresh_settings():
    settings.reset()
    yield
    settings.reset()


def random_poly(table, rng, degree=3, terms=3):
    p = table.zero
    for _ in range(int(rng.integers(0, terms + 1))):
        exps = [0] * table.n
        for _ in range(int(rng.integers(0, degree + 1))):
            exps[int(rng.integers(table.n))] += 1
        p += table.ring.term_new(tuple(exps), table.ring.domain(int(rng.integers(-4, 5))))
    return p


def random_rational_point(rng, n, zeros=0.0):
    """Small rational coordinates; each is zero with probability ``zeros``."""
    return tuple(
        Fraction(0) if rng.random() < zeros else Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 4)))
        for _ in range(n)
    )


def make_system(names, drift, inputs, order="degrevlex"):
    """Build a SystemSpec from component strings; ``drift=None`` means zero."""
    table = VarTable(tuple(names), order)

    def field(label, comps):
        return VectorField(table, tuple(parse_polynomial(c, table) for c in comps), label)

    f = VectorField.zero(table, "f") if drift is None else field("f", drift)
    return SystemSpec(table, f, tuple(field(label, comps) for label, comps in inputs))


def system_path(name):
    return settings.SYSTEMS_DIR / f"{name}.sys"


@pytest.fixture
def planar():
    """x1' = u1 x2, x2' = u2 x1^2."""
    return make_system(["x1", "x2"], None, [("g1", ["x2", "0"]), ("g2", ["0", "x1^2"])])


@pytest.fixture
def cylinder():
    h = "x2^2 + x3^2 - 1"
    return make_system(["x1", "x2", "x3"], ["0", h, "0"], [("g", ["x2", "x2*x3", "-x2^2"])])


@pytest.fixture
def unicycle_file():
    return parse_file(system_path("unicycle"))


@pytest.fixture
def pendulum_file():
    return parse_file(system_path("pendulum"))


@pytest.fixture
def sine_drive_file():
    return parse_file(system_path("sine_drive"))
