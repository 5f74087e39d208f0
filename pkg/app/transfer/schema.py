from pydantic import BaseModel, Field
from typing import List, Optional


class LayerData(BaseModel):
    layer: int = Field(ge=0, description="Layer index n (subgroups of index p^n above G')")
    targets: str = Field(description="Transfer target types of the layer, accumulated")
    kernels: List[int] = Field(description="Kernel codes aligned with the layer ordering")


class ArtinPatternModel(BaseModel):
    name: Optional[str] = Field(None, description="Catalog identifier or relative name")
    tau0: str = Field(description="Abelianization G/G'")
    ipad: str = Field(description="[tau0;tau1] in bracket notation")
    kappa: str = Field(description="First-layer kernel codes; digits when every code is below 10")
    kappaName: Optional[str] = Field(None, description="Named principalization type of the kernel orbit")
    layers: List[LayerData] = Field(default_factory=list, description="Full restricted pattern by layer")
    secondOrder: Optional[str] = Field(None, description="Second-order rows (t0H;t1H[;t2H]) grouped as row^k")

    class Config:
        json_schema_extra = {
            "example": {
                "name": "<27,4>",
                "tau0": "1^2",
                "ipad": "[1^2;1^2,(2)^3]",
                "kappa": "1111",
                "kappaName": "A.1",
                "layers": [
                    {"layer": 0, "targets": "1^2", "kernels": [1]},
                    {"layer": 1, "targets": "1^2,(2)^3", "kernels": [1, 1, 1, 1]},
                    {"layer": 2, "targets": "1", "kernels": [0]}
                ],
                "secondOrder": "[1^2;(2;1)^3,(1^2;(1)^4)]"
            }
        }
