import pytest
from lattice_trig import create_app
from lattice_trig.curvature import BrokenLine

config_dict = {
    "TESTING": True,
    "APP_ENUMERATE_MAX_BBOX": 4,
}


@pytest.fixture(scope="module")
def app():
    """Get a Flask application object."""

    app = create_app(config_dict)
    with app.app_context():
        yield app


@pytest.fixture
def quadrangle():
    return BrokenLine.polygon((4, -1), (0, 0), (2, 3), (3, 3))


@pytest.fixture
def pentagon():
    return BrokenLine.polygon((8, 0), (0, 0), (2, 3), (3, 4), (5, 3))
