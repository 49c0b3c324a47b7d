from typing import List

from fastapi import APIRouter, HTTPException, Path, Query

from app.models.schemas import CountsRow, ExceptionalDelta, GroupSeries, GroupType, Side, SpringerSet
from app.services import springer
from app.utils.errors import check_cap
from config.settings import settings


router = APIRouter()


def _group_series(name: str) -> GroupSeries:
    try:
        return GroupSeries(name.upper())
    except ValueError:
        raise HTTPException(status_code=404, detail=f"Unknown type {name!r}")


# fixed segments first so they are not read as a rank
@router.get("/exceptional/{group_type}/{p}", response_model=ExceptionalDelta)
async def exceptional(group_type: str, p: int):
    return springer.exceptional_delta(group_type, p)


@router.get("/{group_type}/counts", response_model=List[CountsRow])
async def counts(group_type: str, max_n: int = Query(ge=0)):
    return springer.counts(_group_series(group_type), max_n, cap=settings.limits.exhaustive_cap)


@router.get("/{group_type}/{n}", response_model=SpringerSet)
async def springer_set(group_type: str, n: int = Path(ge=0), side: Side = Side.ALGEBRA):
    check_cap(n, settings.limits.enumerate_cap)
    return springer.springer_set(GroupType(series=_group_series(group_type), n=n), side)


@router.get("/{group_type}/{n}/tau")
async def tau(group_type: str, n: int = Path(ge=0)):
    check_cap(n, settings.limits.enumerate_cap)
    mapping = springer.tau(GroupType(series=_group_series(group_type), n=n))
    return {
        "group": str(mapping.group),
        "pairs": [{"from": source, "to": target} for source, target in mapping.pairs],
        "unhit": mapping.unhit,
        "injective": mapping.injective,
        "bijective": mapping.bijective,
    }
