from pydantic import BaseModel, Field
from typing import List, Optional


class GroupSummary(BaseModel):
    name: Optional[str] = Field(None, description="Catalog identifier or relative name")
    prime: int = Field(description="The prime p")
    logOrder: int = Field(ge=0, description="Logarithmic order lo = log_p |G|")
    nilpotencyClass: int = Field(ge=0, description="Nilpotency class c")
    coclass: int = Field(ge=0, description="Coclass r = lo - c")
    derivedLength: int = Field(ge=0, description="Length of the derived series")
    abelianization: str = Field(description="Abelian type of G/G' in bracket notation")
    centerOrder: int = Field(description="Order of the centre")
    defect: Optional[int] = Field(None, description="Defect of commutativity k, when characterized")
    consistencyFailures: List[str] = Field(default_factory=list, description="Failing consistency test words")

    class Config:
        json_schema_extra = {
            "example": {
                "name": "<27,3>",
                "prime": 3,
                "logOrder": 3,
                "nilpotencyClass": 2,
                "coclass": 1,
                "derivedLength": 2,
                "abelianization": "1^2",
                "centerOrder": 3,
                "defect": 0,
                "consistencyFailures": []
            }
        }
