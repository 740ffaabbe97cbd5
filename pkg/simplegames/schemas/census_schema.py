"""
Pydantic schemas for enumeration, closures, tables and the census
"""
from pydantic import BaseModel, Field
from typing import Optional, List


class CensusRecord(BaseModel):
    """One ipsodual game with its invariants (one JSON line in dumps)"""
    mask_hex: str = Field(..., description="Winning-coalition bitmask, uppercase hex")
    n: int = Field(..., description="Number of voters")
    weight: int = Field(..., description="Weight")
    depth: int = Field(..., description="Depth")
    quota: Optional[str] = Field(default=None, description="Quota notation, null if not a quota game")
    transitive: bool = Field(..., description="Automorphism group is transitive")
    canonical: bool = Field(default=True, description="The mask is its class's canonical representative")

    class Config:
        json_schema_extra = {
            "examples": [
                {"mask_hex": "E8", "n": 3, "weight": 1, "depth": 1, "quota": "(111)_2", "transitive": True, "canonical": True}
            ]
        }


class EnumerationRecord(BaseModel):
    """Ipsodual games on n voters"""
    voters: int = Field(..., description="Number of voters")
    count: int = Field(..., description="Number of games (or classes with iso)")
    iso: bool = Field(default=False, description="Counted up to isomorphism")
    games: List[str] = Field(default=[], description="Hex masks in ascending order")


class LayerRecord(BaseModel):
    """Per-layer sizes of a closure"""
    voters: int = Field(..., description="Number of voters")
    operation: str = Field(..., description="median or chi")
    layers: List[int] = Field(..., description="Games first reached at each layer")
    total: int = Field(..., description="Closure size")


class TableRecord(BaseModel):
    """W(n) or D(n) for n = 1..max"""
    measure: str = Field(..., description="weight or depth")
    values: List[int] = Field(..., description="Values for n = 1, 2, ...")
