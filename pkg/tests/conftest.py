import pytest
from fastapi.testclient import TestClient
import os
import sys

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from src.main import app
from src.bwb.spaces import GR24, LGR, PV
from src.total_space.hom import MINUS_SUMMANDS, PLUS_SUMMANDS
from src.verifier.models import ClaimId, VerificationReport, Verdict


@pytest.fixture(scope="function")
def client():
    """Create a test client for the HTTP surface."""
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def spaces():
    """The three closed bases."""
    return {"PV": PV, "Gr24": GR24, "LGr": LGR}


@pytest.fixture
def plus_summands():
    return {s.name: s for s in PLUS_SUMMANDS}


@pytest.fixture
def minus_summands():
    return {s.name: s for s in MINUS_SUMMANDS}


@pytest.fixture
def sample_report():
    """A verified report with nested tuples and integer keys, as checks produce them."""
    return VerificationReport(
        claim=ClaimId.LGR_VANISHING,
        title="sample",
        verdict=Verdict.VERIFIED,
        parameters={"k": (0, 3), "m": (-1, 3)},
        tables={"boundary_rows": [{"weight": (-1, -2), "dimensions": (0, 0, 0, 0)}], "by_degree": {2: 5}},
        notes=["sample note"],
        wall_clock_seconds=0.125,
    )


@pytest.fixture
def failed_report():
    return VerificationReport(
        claim=ClaimId.GR24_VANISHING,
        title="sample failure",
        verdict=Verdict.FAILED,
        parameters={"k": [0, 1], "m": [-2, 1]},
        counterexamples=[{"point": {"k": 0, "m": -2}, "dimensions": [0, 1, 0, 0, 0]}],
    )
