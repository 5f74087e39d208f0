from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class Provenance(str, Enum):
    PAPER = "PAPER"
    DERIVED = "DERIVED"


class CatalogEntryModel(BaseModel):
    id: str = Field(description="Canonical identifier <order,counter[|counter]> with relative steps")
    lo: int = Field(ge=0, description="Logarithmic order")
    table: str = Field(description="Fixture table the entry comes from")
    typeName: Optional[str] = Field(None, description="Principalization type, e.g. E.6")
    kappa: str = Field(description="First-layer kernel digits as transcribed")
    tau1: str = Field(description="First-layer targets, derived from the row heads")
    expectedPattern: str = Field(description="Multi-layered second-order pattern [t0;rows]")
    provenance: Provenance = Field(description="PAPER for transcribed rows, DERIVED for computed ones")
    verifiable: bool = Field(description="True when a presentation backs the entry")
    mainline: bool = Field(False, description="Vertex lies on the coclass-1 mainline")
    relationRank: Optional[int] = Field(None, description="Relation rank d2, when known")
    metabelianization: Optional[str] = Field(None, description="Second derived quotient of a tower group")
    source: str = Field(description="Table title the row was transcribed from")
    note: Optional[str] = Field(None)

    class Config:
        json_schema_extra = {
            "example": {
                "id": "<729,49>",
                "lo": 6,
                "table": "treeQ",
                "typeName": "c.18",
                "kappa": "0122",
                "tau1": "2^2,1^3,(21)^2",
                "expectedPattern": "[1^2;(2^2;(21^2)^4;1^3,(21)^12),(21;21^2,(21)^3;1^3,(21)^3)^2,"
                                   "(1^3;21^2,(1^3)^3,(1^2)^9;1^3,(21)^3,(1^2)^9)]",
                "provenance": "PAPER",
                "verifiable": False,
                "mainline": False,
                "relationRank": None,
                "metabelianization": None,
                "source": "3-groups on the coclass-2 tree rooted at <243,6>",
                "note": None
            }
        }
