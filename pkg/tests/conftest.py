import pytest
from click.testing import CliRunner

from app import create_app, db
from models import counting


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run timing experiments")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_tables():
    counting.clear_tables()
    yield


@pytest.fixture
def app():
    app = create_app({
        'TESTING': True,
        'SQLALCHEMY_DATABASE_URI': 'sqlite:///:memory:',
        'GENERATE_MAX_LIMIT': 50,
        'BENCH_MAX_REPETITIONS': 3,
    })
    yield app
    with app.app_context():
        db.session.remove()
        db.drop_all()


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    return CliRunner()
