"""
Pydantic schemas for single-game command output
"""
from pydantic import BaseModel, Field
from typing import Optional, List


class GameRecord(BaseModel):
    """A game in both machine and table notation"""
    n: int = Field(..., description="Number of voters")
    mask_hex: str = Field(..., description="Winning-coalition bitmask, uppercase hex")
    text: str = Field(..., description="Quota notation when recognizable, else n:HEX")

    class Config:
        json_schema_extra = {
            "examples": [
                {"n": 3, "mask_hex": "E8", "text": "(111)_2"}
            ]
        }


class QuotaGameRecord(BaseModel):
    """Integer weights and quota"""
    weights: List[int] = Field(..., description="Weight per voter, voter 1 first")
    quota: int = Field(..., description="Smallest winning total")


class ClassificationRecord(BaseModel):
    """Dual comparison of a game"""
    game: GameRecord
    simple: bool = Field(..., description="S <= S*: no two disjoint winning coalitions")
    strong: bool = Field(..., description="S >= S*: some side of every split wins")
    ipsodual: bool = Field(..., description="S = S*")
    powerful: List[int] = Field(default=[], description="Voters that are not dummies")
    dummies: List[int] = Field(default=[], description="Dummy voters")


class QuotaRecord(BaseModel):
    """Result of quota recognition"""
    game: GameRecord
    is_quota: bool = Field(..., description="Whether integer weights and a quota exist")
    witness: Optional[QuotaGameRecord] = Field(default=None, description="Weights and quota reproducing the game")
    note: str = Field(default="", description="Infeasibility note when no witness exists")


class InfluenceRecord(BaseModel):
    """Influence pre-order of a game"""
    game: GameRecord
    total: bool = Field(..., description="Every pair of voters is comparable")
    order: str = Field(..., description="Classes strongest first, e.g. '1 > 2~3'")
    classes: List[List[int]] = Field(default=[], description="Equivalence classes, strongest first")
    comparable: List[List[int]] = Field(default=[], description="Pairs (i, j) of distinct voters with j at least as influential as i")


class ExpressionRecord(BaseModel):
    """A decomposition of a game"""
    game: GameRecord
    method: str = Field(..., description="median, chi, quota, tree or dnf")
    expression: str = Field(..., description="Expression in table notation")
    height: int = Field(..., description="Expression or tree height")
    verified: bool = Field(..., description="Evaluation reproduces the game")


class MeasureRecord(BaseModel):
    """Weight or depth with exactness"""
    game: GameRecord
    measure: str = Field(..., description="weight or depth")
    value: int = Field(..., description="Exact value, or a lower bound when exact is false")
    exact: bool = Field(..., description="False when only a lower bound is known")
