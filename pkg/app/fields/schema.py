from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from app.abelian import canonical_rows, canonical_types
from app.errors import NotationError


class FieldKind(str, Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


class DistributionLevel(str, Enum):
    SECOND = "second"
    TOWER = "tower"


class FieldRecord(BaseModel):
    d: int = Field(description="Fundamental discriminant of the quadratic field")
    kind: FieldKind = Field(description="real or imaginary")
    kappa: Optional[str] = Field(None, description="First-layer kernel digits, e.g. 2143")
    tau1: Optional[str] = Field(None, description="First-layer IPAD components, e.g. (21)^4")
    secondOrder: Optional[List[str]] = Field(None, description="Rendered rows (tau0H;tau1H[;tau2H])")
    provenance: str = Field(description="Where the field data was transcribed from")
    note: Optional[str] = Field(None)

    @field_validator("kappa")
    @classmethod
    def _digits(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and (len(value) != 4 or not all(ch in "01234" for ch in value)):
            raise ValueError(f"kernel string must be four digits 0..4, got {value!r}")
        return value

    @field_validator("tau1")
    @classmethod
    def _tau1_parses(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            try:
                canonical_types(value)
            except NotationError as e:
                raise ValueError(str(e)) from e
        return value

    @field_validator("secondOrder")
    @classmethod
    def _rows_parse(cls, value: Optional[List[str]]) -> Optional[List[str]]:
        for row in value or []:
            try:
                canonical_rows(row)
            except NotationError as e:
                raise ValueError(str(e)) from e
        return value

    @model_validator(mode="after")
    def _has_pattern(self) -> "FieldRecord":
        if self.kappa is None and self.tau1 is None:
            raise ValueError("a record needs kappa or tau1")
        if (self.d > 0) != (self.kind == FieldKind.REAL):
            raise ValueError(f"sign of d={self.d} does not match kind {self.kind.value}")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "d": 214712,
                "kind": "real",
                "kappa": "2143",
                "tau1": "(21)^4",
                "secondOrder": ["(21;1^4,(21^2)^3)", "(21;1^4,(21)^3)^3"],
                "provenance": "G.19 real quadratic fields d<10^7",
                "note": None
            }
        }


class VertexStatistics(BaseModel):
    vertex: str = Field(description="Identifier key, a batch joined with | or an order bound")
    md: int = Field(description="Discriminant of smallest absolute value with this vertex")
    af: int = Field(ge=1, description="Number of fields with this vertex")


class DistributionReport(BaseModel):
    level: DistributionLevel
    vertices: List[VertexStatistics] = Field(default_factory=list)
    shares: Dict[str, float] = Field(default_factory=dict, description="Percentage of fields per vertex")

    class Config:
        json_schema_extra = {
            "example": {
                "level": "tower",
                "vertices": [{"vertex": "<2187,311>", "md": 214712, "af": 55}],
                "shares": {"<2187,311>": 85.9}
            }
        }


class ErrorResponse(BaseModel):
    error: str = Field(description="Error message")
    detail: Optional[str] = Field(None, description="Detailed error information")

    class Config:
        json_schema_extra = {
            "example": {
                "error": "Validation Error",
                "detail": "line 3: a record needs kappa or tau1"
            }
        }
