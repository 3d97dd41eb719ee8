import pytest

from sofl.geom import Color, ColoredPoint
from sofl.instance import generate, parse_instance


def B(i, x, y, w=1.0):
    return ColoredPoint(i, x, y, Color.BLUE, w)


def R(i, x, y, w=-1.0):
    return ColoredPoint(i, x, y, Color.RED, w)


def random_instance(seed, n, k, variant="csofl", **kw):
    """Deterministic instance via the documented generator."""
    return parse_instance(generate(seed, n, k, variant, **kw))


@pytest.fixture
def mk_points():
    return B, R
