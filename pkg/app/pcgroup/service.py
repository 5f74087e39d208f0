import logging
from typing import Optional

from app.abelian import render_type
from app.errors import DefectError

from .defect import defect
from .presentation import PcPresentation
from .schema import GroupSummary
from .subgroups import abelianization, center, derived_length, nilpotency_class

logger = logging.getLogger(__name__)


def describe_group(pc: PcPresentation, name: Optional[str] = None) -> GroupSummary:
    failures = pc.consistency_check()
    if failures:
        return GroupSummary(name=name or pc.name, prime=pc.p, logOrder=pc.n, nilpotencyClass=0,
                            coclass=0, derivedLength=0, abelianization="?", centerOrder=0,
                            consistencyFailures=failures)
    c = nilpotency_class(pc)
    try:
        k = defect(pc)
    except DefectError as e:
        logger.info(f"Defect left open: {e}")
        k = None
    return GroupSummary(
        name=name or pc.name,
        prime=pc.p,
        logOrder=pc.n,
        nilpotencyClass=c,
        coclass=pc.n - c,
        derivedLength=derived_length(pc),
        abelianization=render_type(abelianization(pc)),
        centerOrder=center(pc).order,
        defect=k,
    )
