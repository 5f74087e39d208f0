from typing import List

from pydantic import BaseModel, Field


class ClassGroupModel(BaseModel):
    d: int = Field(lt=0, description="Fundamental discriminant of the imaginary quadratic field")
    h: int = Field(ge=1, description="Class number")
    structure: List[int] = Field(description="Invariant factors of the class group, each dividing the previous")
    pPart: List[int] = Field(description="Exponents of the 3-class group, e.g. [1, 1] for (3,3)")
    threeRank: int = Field(ge=0, description="Number of cyclic factors in the 3-class group")

    class Config:
        json_schema_extra = {
            "example": {
                "d": -4027,
                "h": 9,
                "structure": [3, 3],
                "pPart": [1, 1],
                "threeRank": 2
            }
        }
