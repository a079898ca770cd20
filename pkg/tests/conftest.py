import pytest
from fastapi.testclient import TestClient

from app.characters import LabelGroup, SupercuspidalLabel
from app.cli import SessionConfig
from app.main import app

# Konfigurera pytest-asyncio
pytest_plugins = ['pytest_asyncio']


@pytest.fixture
def labels():
    """Etikettgrupp med en ramifierad karaktär av ordning 6 och en generisk etikett."""
    return LabelGroup.from_declarations("zeta:6,xi:generic")


@pytest.fixture
def session(labels):
    """Sessionskonfiguration för Sp4 med JSON-utmatning och q0 = 3."""
    return SessionConfig(group="Sp4", labels=labels, output_format="json", q0=3)


@pytest.fixture
def client():
    """HTTP-klient mot FastAPI-appen."""
    return TestClient(app)


@pytest.fixture
def gl2_self_dual(labels):
    """Självdual GL2-superkuspidal med trivial centralkaraktär."""
    return SupercuspidalLabel(group="GL2", ref="rho", central_char=labels.one(), self_dual=True)


@pytest.fixture
def sp2_sigma(labels):
    """Sp2-superkuspidal där F_σ^× bara ser η."""
    return SupercuspidalLabel(group="Sp2", ref="sigma", central_char=labels.one(),
                              fsigma_trivial=(labels.label("eta"),))
