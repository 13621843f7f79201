from fastapi import APIRouter, HTTPException, Query
from typing import Optional

from app.core.config import settings
from app.core.exceptions import SeshadriError
from app.models.points import PointSpec
from app.schemas.seshadri import OracleResponse, SeshadriResultResponse, TheoremTableResponse
from app.services.seshadri_service import SeshadriService
from app.utils.json_helper import run_cached, sanitize_for_json

router = APIRouter()


@router.get("/seshadri/{r}", response_model=SeshadriResultResponse)
async def get_seshadri_constant(
    r: int,
    point: str = Query(default="general", description="general | node | distinguished:<d:a1,...>"),
):
    """Seshadri constant of -K on X_r at the given point"""
    try:
        p = PointSpec.parse(point, r)
        return sanitize_for_json(SeshadriService().seshadri_constant(r, p))
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())


@router.get("/theorem-table", response_model=TheoremTableResponse)
async def get_theorem_table():
    """Every case of the classification, with witnesses"""
    rows = await run_cached("theorem_table", SeshadriService().theorem_table)
    return {"rows": rows}


@router.get("/oracle/{r}", response_model=OracleResponse, response_model_exclude_none=True)
async def get_oracle(
    r: int,
    point: str = Query(default="general"),
    dmax: Optional[int] = Query(default=None, ge=1, le=30, description="Degree bound of the candidate scan"),
):
    """Brute-force infimum over candidate curves, compared with the nef threshold"""
    if dmax is None:
        dmax = settings.ORACLE_DMAX
    try:
        p = PointSpec.parse(point, r)
        return await run_cached(f"oracle:{r}:{point}:{dmax}", SeshadriService().oracle_report, r, p, dmax)
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())
