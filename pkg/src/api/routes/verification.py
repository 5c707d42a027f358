from fastapi import APIRouter, HTTPException
from typing import Any, Dict, Optional

from src.api.models.verification import CompareRequest, ConventionsResponse, LemmaRequest, TiltingRequest
from src.core.config import settings
from src.core.exceptions import FlopVerifyError, InternalCheckError, UnknownClaimError
from src.core.utils import logger
from src.total_space.hom import Side
from src.verifier.compare import compare_end_algebras
from src.verifier.lemmas import verify_lemma
from src.verifier.models import VerificationReport, report_conventions
from src.verifier.tilting import verify_tilting

router = APIRouter()


def _document(report: VerificationReport) -> Dict[str, Any]:
    return report.model_dump(mode="json", by_alias=True)


@router.get("/conventions", response_model=ConventionsResponse)
async def get_conventions():
    """
    Weight conventions embedded in every report.
    """
    return ConventionsResponse(
        version=settings.VERSION,
        schema_version=settings.SCHEMA_VERSION,
        conventions=report_conventions(),
    )


@router.post("/lemmas/{lemma_id}")
def run_lemma(lemma_id: str, request: Optional[LemmaRequest] = None):
    """
    Verify one lemma over the requested ranges.
    """
    request = request or LemmaRequest()
    try:
        report = verify_lemma(lemma_id, **request.model_dump())
    except UnknownClaimError as e:
        raise HTTPException(status_code=404, detail=str(e))
    except InternalCheckError as e:
        logger.error("Internal consistency check failed", error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    except FlopVerifyError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Lemma verification crashed", lemma_id=lemma_id, error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    return _document(report)


@router.post("/tilting/{side}")
def run_tilting(side: Side, request: Optional[TiltingRequest] = None):
    """
    Higher self-Ext vanishing for the tilting bundle on one side of the flop.
    """
    request = request or TiltingRequest()
    try:
        report = verify_tilting(side, degree_max=request.degree_max)
    except InternalCheckError as e:
        logger.error("Internal consistency check failed", error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    except FlopVerifyError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Tilting verification crashed", side=side.value, error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    return _document(report)


@router.post("/compare")
def run_compare(request: Optional[CompareRequest] = None):
    """
    Fiber-degree comparison of the two endomorphism algebras.
    """
    request = request or CompareRequest()
    try:
        report = compare_end_algebras(degree_max=request.degree_max)
    except InternalCheckError as e:
        logger.error("Internal consistency check failed", error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    except FlopVerifyError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error("Comparison crashed", error=str(e))
        raise HTTPException(status_code=500, detail=str(e))
    return _document(report)
