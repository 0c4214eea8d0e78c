"""Shared rings and ideals for the test suites."""
import pytest

import config
from core.fields import FF
from core.rings import RingPresentation


@pytest.fixture
def qxyz():
    return RingPresentation(("x", "y", "z"), name="R")


@pytest.fixture
def qxy():
    return RingPresentation(("x", "y"), name="S")


@pytest.fixture
def hypersurface():
    """QQ[x,y,z]/(x^2 - y^2): a two-dimensional singular Gorenstein ring."""
    return RingPresentation(("x", "y", "z"), quotient=("x^2 - y^2",), name="H")


@pytest.fixture
def curve():
    """QQ[x,y]/(x^2 - y^2): one-dimensional, Gorenstein, not regular."""
    return RingPresentation(("x", "y"), quotient=("x^2 - y^2",), name="C")


@pytest.fixture
def semigroup_ring():
    return RingPresentation(("x", "y", "z"), quotient=("x*z - y^2", "x^3 - y*z", "x^2*y - z^2"), name="G")


@pytest.fixture
def embedded_point():
    """QQ[x,y]/(x^2, xy): not Cohen-Macaulay."""
    return RingPresentation(("x", "y"), quotient=("x^2", "x*y"), name="E")


@pytest.fixture
def artinian_cube():
    return RingPresentation(("x", "y"), quotient=("x^3", "x^2*y", "x*y^2", "y^3"), name="A")


@pytest.fixture
def ff_xyz():
    return RingPresentation(("x", "y", "z"), field=FF(32003), name="P")


@pytest.fixture
def example_link(qxyz):
    """J = (x, y^2, z^2) and I = J : m = (x, y^2, yz, z^2)."""
    J = qxyz.ideal(["x", "y^2", "z^2"])
    I = qxyz.ideal(["x", "y^2", "y*z", "z^2"])
    return qxyz, J, I


@pytest.fixture
def archive_path(tmp_path, monkeypatch):
    from core import database
    path = str(tmp_path / "runs.db")
    monkeypatch.setattr(config, "DB_PATH", path)
    database.close_connection()
    yield path
    database.close_connection()
