import logging
from typing import Optional

from app.abelian import render_type, render_types

from .kernel_types import canonical_tkt
from .schema import ArtinPatternModel, LayerData
from .service import ArtinPattern

logger = logging.getLogger(__name__)


def pattern_model(pattern: ArtinPattern, name: Optional[str] = None) -> ArtinPatternModel:
    kappa = pattern.kappa1
    digits = all(v <= 9 for v in kappa)
    kappa_text = "".join(map(str, kappa)) if digits else ",".join(map(str, kappa))
    kappa_name = None
    if digits and len(kappa) == 4:
        kappa_name = canonical_tkt(kappa_text).name
    layers = [LayerData(layer=n, targets=render_types(ts), kernels=[k.value for k in ks])
              for n, (ts, ks) in enumerate(zip(pattern.ttt, pattern.tkt))]
    return ArtinPatternModel(
        name=name,
        tau0=render_type(pattern.tau0),
        ipad=pattern.ipad_text(),
        kappa=kappa_text,
        kappaName=kappa_name,
        layers=layers,
        secondOrder=pattern.second_order_text(with_tau2=any(r[2] for r in pattern.second_order))
        if pattern.second_order else None,
    )
