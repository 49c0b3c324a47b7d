from typing import List

from fastapi import APIRouter, HTTPException

from app.models.schemas import Leaf, Series, SymbolPair
from app.services import decomp


router = APIRouter()


def _series(name: str) -> Series:
    try:
        return Series(name.lower())
    except ValueError:
        raise HTTPException(status_code=404, detail=f"Unknown series {name!r}")


@router.post("/{series}/step")
async def step(series: str, pair: SymbolPair, eager: bool = False):
    """One decomposition step; `{"kind": "terminal"}` or the full split."""
    return decomp.decompose_step(pair, _series(series), eager=eager).as_json()


@router.post("/{series}/atomize", response_model=List[Leaf])
async def atomize(series: str, pair: SymbolPair):
    return decomp.atomize(pair, _series(series))
