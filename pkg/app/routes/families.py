from typing import List

from fastapi import APIRouter, HTTPException, Query
from pydantic import BaseModel

from app.models.schemas import FamilyId, SymbolPair
from app.services import families
from config.settings import settings


router = APIRouter()


class MembershipResult(BaseModel):
    pair: SymbolPair
    family: FamilyId
    member: bool


def _family(tag: str) -> FamilyId:
    try:
        return FamilyId(tag.lower())
    except ValueError:
        raise HTTPException(status_code=404, detail=f"Unknown family {tag!r}")


@router.get("/{tag}", response_model=List[SymbolPair])
async def list_family(tag: str, n: int = Query(ge=0)):
    return families.enumerate_family(_family(tag), n, cap=settings.limits.enumerate_cap)


@router.post("/{tag}/member", response_model=MembershipResult)
async def check_member(tag: str, pair: SymbolPair):
    family = _family(tag)
    return MembershipResult(pair=pair, family=family, member=families.member(pair, family))
