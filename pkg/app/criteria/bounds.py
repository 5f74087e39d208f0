"""Order estimates for groups with elementary abelianization of rank three.

Every subgroup H of index 3^n gives lo(G) >= n + lo(H/H'), with equality only
when H is abelian. For a metabelian G the order is lo(G/G') + lo(G').
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Union

from app.abelian import AbelianType, parse_type, parse_types, render_type
from app.abelian.notation import normalize_text, split_top
from app.errors import NotationError, ScopeError

logger = logging.getLogger(__name__)

IPOD_RANGE = range(0, 14)
_OCCUPANT = re.compile(r"^\(?(\d+)\)?(?:\^(\d+))?$")

TypeList = Union[str, Sequence[AbelianType]]


@dataclass
class OrderBound:
    bound: int
    per_layer: Dict[int, int] = field(default_factory=dict)
    exact: Optional[int] = None
    non_abelian: List[str] = field(default_factory=list)
    possibly_abelian: List[str] = field(default_factory=list)

    @property
    def all_maximal_non_abelian(self) -> bool:
        return bool(self.non_abelian) and not self.possibly_abelian


@dataclass
class Occupation:
    histogram: Dict[int, int]

    @property
    def maximum(self) -> int:
        return max(self.histogram.values(), default=0)


def order_bounds(layers: Mapping[int, TypeList], metabelian: bool = False,
                 derived: Optional[Union[str, AbelianType]] = None,
                 tau0: Union[str, AbelianType] = "1^3") -> OrderBound:
    """Lower bound on lo(G) from the abelianizations in each layer.

    ``layers`` maps n to the accumulated abelian types of the subgroups of
    index 3^n. Maximal subgroups whose abelianization is too small to reach
    the bound cannot be abelian and are reported in ``non_abelian``.
    """
    t0 = parse_type(tau0) if isinstance(tau0, str) else tau0
    types = {n: (parse_types(v) if isinstance(v, str) else list(v)) for n, v in layers.items()}
    types.setdefault(0, [t0])
    per_layer = {}
    for n, ts in sorted(types.items()):
        if n < 0:
            raise ScopeError(f"layer index must be non-negative, got {n}")
        if ts:
            per_layer[n] = n + max(t.lo for t in ts)
    result = OrderBound(bound=max(per_layer.values()), per_layer=per_layer)

    for t in sorted(set(types.get(1, [])), key=lambda x: x.sort_key(), reverse=True):
        target = result.non_abelian if 1 + t.lo < result.bound else result.possibly_abelian
        target.append(render_type(t))

    if metabelian and derived is not None:
        d = parse_type(derived) if isinstance(derived, str) else derived
        result.exact = t0.lo + d.lo
        if result.exact < result.bound:
            logger.warning(f"Metabelian order 3^{result.exact} contradicts the layer bound 3^{result.bound}")
        result.bound = max(result.bound, result.exact)
    logger.debug(f"Order bound 3^{result.bound} from layers {sorted(per_layer)}")
    return result


def ipod_occupation(values: Union[str, Sequence[int]]) -> Occupation:
    """Occupation numbers of an accumulated IPOD such as ``[1,2,6,(8)^6,9]``."""
    if isinstance(values, str):
        text = normalize_text(values).strip("[]")
        entries: List[int] = []
        for item in split_top(text, ",;") if text else []:
            m = _OCCUPANT.match(item)
            if not m:
                raise NotationError(f"cannot parse IPOD entry {item!r}")
            entries.extend([int(m.group(1))] * int(m.group(2) or 1))
    else:
        entries = list(values)
    outside = [v for v in entries if v not in IPOD_RANGE]
    if outside:
        raise ScopeError(f"IPOD entries must lie in 0..13, got {outside}")
    return Occupation(histogram=dict(sorted(Counter(entries).items())))
