from fastapi import APIRouter, HTTPException, Query

from app.core.exceptions import InvalidLinearSystemError, SeshadriError
from app.schemas.seshadri import ExceptionalResponse, ExpectedDimResponse
from app.services.curve_atlas_service import CurveAtlasService
from app.services.linear_system_service import LinearSystemService, LinearSystemSpec

router = APIRouter()


@router.get("/exceptional/{r}", response_model=ExceptionalResponse)
async def get_exceptional_classes(r: int):
    """All (-1)-classes of X_r"""
    try:
        return CurveAtlasService().summary(r)
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())


@router.get("/expected-dim", response_model=ExpectedDimResponse)
async def get_expected_dim(
    d: int = Query(..., description="Plane degree"),
    mults: str = Query(default="", description="Comma separated multiplicities"),
):
    """Expected dimension of plane curves of degree d with assigned multiplicities"""
    try:
        values = tuple(int(m) for m in mults.split(",") if m.strip())
    except ValueError:
        e = InvalidLinearSystemError(f"Malformed multiplicity list '{mults}'")
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())
    try:
        return LinearSystemService().describe(LinearSystemSpec(d, values))
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())
