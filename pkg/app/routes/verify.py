from fastapi import APIRouter, HTTPException, Query

from app.models.schemas import ClosureReport
from app.services import families
from config.settings import settings


router = APIRouter()


@router.get("/closure", response_model=ClosureReport, response_model_by_alias=True)
async def closure(rule: str, max_n: int = Query(default=6, ge=0)):
    try:
        parsed = families.parse_rule(rule)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return families.verify_closure(parsed, max_n, cap=settings.limits.exhaustive_cap)
