"""
Pydantic schemas for the classification table and its verification report
"""
from pydantic import BaseModel, Field
from typing import Optional, List, Literal


class Table1Row(BaseModel):
    """One row of the classification table, expressions kept as written"""
    n: int = Field(..., ge=1, description="Number of powerful voters")
    label: Optional[str] = Field(default=None, description="Quota string or game name; null for unnamed rows")
    w: int = Field(..., ge=0, description="Claimed weight")
    d: int = Field(..., ge=0, description="Claimed depth")
    median_expr: Optional[str] = Field(default=None, description="Median decomposition in table notation")
    chi_expr: Optional[str] = Field(default=None, description="Choice decomposition in table notation")
    flags: List[Literal["heart", "star", "star_q", "w_q", "d_q"]] = Field(
        default=[],
        description="heart: transitive; star/star_q: decomposition not known optimal; w_q/d_q: uncertain value"
    )

    @property
    def title(self) -> str:
        return self.label or f"unnamed {self.n}-voter row"

    class Config:
        json_schema_extra = {
            "examples": [
                {
                    "n": 5,
                    "label": "(32211)_5",
                    "w": 2,
                    "d": 3,
                    "median_expr": "m((11100)_2,(11010)_2,(10101)_2)",
                    "chi_expr": "chi_5((21110)_3,(11100)_2)",
                    "flags": []
                }
            ]
        }


class CheckResult(BaseModel):
    """Outcome of one check on one row"""
    name: Literal["median", "chi", "label", "weight", "depth", "transitive"] = Field(..., description="Check name")
    status: Literal["pass", "bound", "skip", "fail"] = Field(..., description="Check status")
    detail: str = Field(default="", description="What was compared or why the check was skipped")


class RowReport(BaseModel):
    """All checks for one table row"""
    row: str = Field(..., description="Row label")
    n: int = Field(..., description="Number of powerful voters")
    checks: List[CheckResult] = Field(default=[], description="Checks in evaluation order")

    @property
    def failed(self) -> bool:
        return any(check.status == "fail" for check in self.checks)


class VerificationReport(BaseModel):
    """Report over the selected rows, in table order"""
    status: Literal["success", "failure"] = Field(..., description="failure iff some check failed")
    count: int = Field(..., description="Number of rows checked")
    rows: List[RowReport] = Field(default=[], description="Per-row reports")

    class Config:
        json_schema_extra = {
            "examples": [
                {
                    "status": "success",
                    "count": 1,
                    "rows": [
                        {
                            "row": "(111)_2",
                            "n": 3,
                            "checks": [
                                {"name": "median", "status": "pass", "detail": "ipsodual"},
                                {"name": "weight", "status": "pass", "detail": "computed 1"}
                            ]
                        }
                    ]
                }
            ]
        }


class ErrorResponse(BaseModel):
    """Error record written to stderr with --json"""
    status: Literal["error"] = Field(default="error", description="Always 'error'")
    error: str = Field(..., description="Exception class name")
    details: str = Field(..., description="Error message")
