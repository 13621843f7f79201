from fastapi import APIRouter, HTTPException, Query
from typing import Optional

from app.core.exceptions import SeshadriError
from app.schemas.seshadri import CounterexampleResponse
from app.services.positivity_service import PositivityService
from app.utils.json_helper import run_cached

router = APIRouter()


@router.get("/counterexample/{name}", response_model=CounterexampleResponse)
async def get_counterexample(
    name: str,
    dmax: Optional[int] = Query(default=None, ge=1, le=20, description="Degree bound of the rational scan"),
):
    """Ten or thirteen point blow-up where -K is positive on rational curves only"""
    service = PositivityService()
    if name not in service.available_counterexamples():
        raise HTTPException(
            status_code=404,
            detail={"error": "unknown_counterexample", "message": f"Choose one of {service.available_counterexamples()}"},
        )
    try:
        return await run_cached(f"counterexample:{name}:{dmax}", service.counterexample, name, dmax)
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())
