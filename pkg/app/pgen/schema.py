from pydantic import BaseModel, Field
from typing import Optional


class TreeNodeRecord(BaseModel):
    id: str = Field(description="Relative identifier parent-#s;i, or the root name")
    parent: Optional[str] = Field(None, description="Identifier of the parent vertex")
    step: int = Field(ge=0, description="Step size of the edge from the parent")
    ordinal: int = Field(ge=0, description="Position among the deduplicated siblings")
    lo: int = Field(ge=0, description="Logarithmic order")
    nilpotencyClass: int = Field(ge=0)
    coclass: int = Field(ge=0)
    centerLo: int = Field(ge=0, description="Logarithmic order of the centre")
    tau0: str = Field(description="Abelianization")
    tau1: str = Field(description="First-layer transfer targets, accumulated")
    kappa: str = Field(description="Kernel-type orbit representative")
    secondOrder: str = Field(description="Second-order rows without the third component")
    catalogId: Optional[str] = Field(None, description="Catalog identifier bound to the vertex")

    class Config:
        json_schema_extra = {
            "example": {
                "id": "<9,2>-#1;2",
                "parent": "<9,2>",
                "step": 1,
                "ordinal": 2,
                "lo": 3,
                "nilpotencyClass": 2,
                "coclass": 1,
                "centerLo": 1,
                "tau0": "1^2",
                "tau1": "1^2,(2)^3",
                "kappa": "1111",
                "secondOrder": "(2;1)^3,(1^2;(1)^4)",
                "catalogId": "<27,4>"
            }
        }
