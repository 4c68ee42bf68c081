import pathlib

import pytest

from lcgraph import load_graph

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fig1():
    return load_graph(FIXTURES / "fig1.ofg")


@pytest.fixture(scope="session")
def fig2():
    return load_graph(FIXTURES / "fig2.ofg")


@pytest.fixture(scope="session")
def k2():
    return load_graph(FIXTURES / "k2.ofg")


@pytest.fixture(scope="session")
def triangle():
    return load_graph(FIXTURES / "triangle.ofg")


@pytest.fixture(scope="session")
def k4():
    return load_graph(FIXTURES / "k4.ofg")
