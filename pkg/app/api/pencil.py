from fastapi import APIRouter, HTTPException, Query
from typing import List

from app.core.exceptions import SeshadriError
from app.schemas.seshadri import PencilNodesResponse
from app.services.seshadri_service import SeshadriService
from app.utils.json_helper import run_cached

router = APIRouter()


@router.get("/pencil-nodes", response_model=PencilNodesResponse)
async def get_pencil_nodes(
    sample: List[int] = Query(default=[], description="Seeds of random 8-point samples"),
):
    """Nodal members of a general cubic pencil, optionally certified on random samples"""
    seeds = sorted(set(sample))
    try:
        return await run_cached(
            f"pencil_nodes:{','.join(map(str, seeds))}", SeshadriService().node_count_report, seeds
        )
    except SeshadriError as e:
        raise HTTPException(status_code=e.http_status, detail=e.to_dict())
