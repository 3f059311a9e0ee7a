# tests/conftest.py
"""
Test configuration and fixtures
"""
import pytest

from trigonal.models.curve import TrigonalCurve
from trigonal.services.curve_service import make_curve, random_curve
from trigonal.services.dessin_service import build_dessin
from trigonal.services.polytext import parse_poly

# resolution used by every traced dessin in the suite
RESOLUTION = 100


def curve_of(y1: str, y2: str, y3: str) -> TrigonalCurve:
    """Curve from three polynomial strings"""
    return make_curve(parse_poly(y1, "y1"), parse_poly(y2, "y2"), parse_poly(y3, "y3"))


@pytest.fixture
def linear_curve() -> TrigonalCurve:
    """(x, -x, 1): the unique n = 1 type [2, 2, 2]"""
    return curve_of("x", "-x", "1")


@pytest.fixture
def cubic_curve() -> TrigonalCurve:
    """(x^3, -x^2, 1) of type [6, 6, 2, 2, 2]"""
    return curve_of("x^3", "-x^2", "1")


@pytest.fixture
def annulus_curve() -> TrigonalCurve:
    """(x^2 - 1, -x, x): type [4, 2, 2, 2, 2], two components"""
    return curve_of("x^2 - 1", "-x", "x")


@pytest.fixture
def paired_curve() -> TrigonalCurve:
    """(x^2 - 1, -x, x + 4): type [4, 4, 2, 2], two regions with two crosses"""
    return curve_of("x^2 - 1", "-x", "x + 4")


@pytest.fixture
def random_curve_factory():
    """Seeded generic curves"""
    def factory(n: int, seed: int = 7, real: bool = False) -> TrigonalCurve:
        return random_curve(n, seed, real)
    return factory


@pytest.fixture(scope="session")
def linear_dessin():
    return build_dessin(curve_of("x", "-x", "1"), RESOLUTION)


@pytest.fixture(scope="session")
def cubic_dessin():
    return build_dessin(curve_of("x^3", "-x^2", "1"), RESOLUTION)


@pytest.fixture(scope="session")
def annulus_dessin():
    return build_dessin(curve_of("x^2 - 1", "-x", "x"), RESOLUTION)


@pytest.fixture(scope="session")
def paired_dessin():
    return build_dessin(curve_of("x^2 - 1", "-x", "x + 4"), RESOLUTION)


@pytest.fixture
def curve_from():
    """Factory building a curve from three polynomial strings"""
    return curve_of
