from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class VerdictStatus(str, Enum):
    PROVEN = "PROVEN"
    CONJECTURAL = "CONJECTURAL"
    LOWER_BOUND = "LOWER_BOUND"
    UNRESOLVED = "UNRESOLVED"
    NEEDS_DATA = "NEEDS_DATA"


COVER_SINGLETON = "cover-singleton"
SECOND_ORDER_MATCH = "second-order-match"


class Certificate(BaseModel):
    criterion: str = Field(description="Name of the criterion that fired")
    evidence: str = Field(description="Pattern data the criterion matched")


class Verdict(BaseModel):
    d: Optional[int] = Field(None, description="Discriminant of the field the verdict is about")
    status: VerdictStatus
    criterion: str = Field(description="Decision flow that produced the verdict")
    typeName: Optional[str] = Field(None, description="Principalization type of the kernel orbit")
    secondGroup: List[str] = Field(default_factory=list, description="Second 3-class group, a batch when ambiguous")
    towerGroup: List[str] = Field(default_factory=list, description="3-class tower group, a batch when ambiguous")
    length: Optional[int] = Field(None, description="Exact tower length")
    lengthAtLeast: Optional[int] = Field(None, description="Lower bound on the tower length")
    lo: Optional[int] = Field(None, description="Logarithmic order of the tower group, when known")
    orderAtLeast: Optional[int] = Field(None, description="Lower bound on the logarithmic order of the tower group")
    missing: Optional[str] = Field(None, description="Pattern components needed to decide")
    certificates: List[Certificate] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def tower_key(self) -> str:
        if self.towerGroup:
            return "|".join(self.towerGroup)
        if self.orderAtLeast is not None:
            return f"order>=3^{self.orderAtLeast}"
        return ""

    @property
    def second_key(self) -> str:
        return "|".join(self.secondGroup)

    class Config:
        json_schema_extra = {
            "example": {
                "d": 8632716,
                "status": "PROVEN",
                "criterion": "E.8/E.9 tower length",
                "typeName": "E.8",
                "secondGroup": ["<2187,304>"],
                "towerGroup": ["<2187,304>"],
                "length": 2,
                "lengthAtLeast": None,
                "lo": 7,
                "orderAtLeast": None,
                "missing": None,
                "certificates": [
                    {"criterion": "cover-singleton", "evidence": "(21;2^21,(21)^3)^3"},
                    {"criterion": "polarization", "evidence": "A(3,5)=32, c=5"}
                ],
                "notes": []
            }
        }
