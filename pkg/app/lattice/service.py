import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from app.errors import ScopeError
from app.pcgroup import (Element, PcPresentation, Subgroup, abelian_quotient, closure,
                         derived_subgroup, full_group)

from .subspaces import Vector, rref_subspaces

logger = logging.getLogger(__name__)


@dataclass
class Layer:
    n: int
    subgroups: List[Subgroup]
    # echelon basis of H/G' inside G/G', aligned with subgroups
    images: List[Tuple[Vector, ...]] = field(default_factory=list)


def _lift(group: PcPresentation, positions: Sequence[int], vector: Vector) -> Element:
    x = [0] * group.n
    for pos, v in zip(positions, vector):
        x[pos] = v
    return tuple(x)


def layers(group: PcPresentation) -> List[Layer]:
    """Lyr_0 .. Lyr_rho: normal subgroups between G' and G by index p^n."""
    derived = derived_subgroup(group)
    if not abelian_quotient(full_group(group), derived).type.is_elementary:
        raise ScopeError(f"{group!r} has a non-elementary abelianization")
    free = [i for i in range(group.n) if i not in derived.depths]
    rho = len(free)
    out: List[Layer] = []
    for n in range(rho + 1):
        bases = sorted(rref_subspaces(rho, rho - n, group.p))
        subs = [closure(group, [_lift(group, free, v) for v in basis], seed=derived) for basis in bases]
        out.append(Layer(n=n, subgroups=subs, images=bases))
    logger.debug(f"{group!r}: layer sizes {[len(layer.subgroups) for layer in out]}")
    return out


def image_in_abelianization(group: PcPresentation, derived: Subgroup, x: Element) -> Vector:
    free = [i for i in range(group.n) if i not in derived.depths]
    reduced = derived.reduce(x)
    return tuple(reduced[i] for i in free)


def _maximal_between(group: PcPresentation, k: Subgroup, n_sub: Subgroup) -> List[Subgroup]:
    p = group.p
    gens = [group.power(b, p) for b in k.basis]
    gens += [group.comm(x, y) for a, x in enumerate(k.basis) for y in k.basis[:a]]
    frattini = closure(group, gens, seed=n_sub)
    top = [b for d, b in zip(k.depths, k.basis) if d not in frattini.depths]
    t = len(top)
    out = []
    for basis in rref_subspaces(t, t - 1, p):
        lifts = [group.product(*(group.power(b, e) for b, e in zip(top, v))) for v in basis]
        out.append(closure(group, lifts, seed=frattini))
    return out


def intermediate_subgroups(k: Subgroup, n: int, n_sub: Subgroup) -> List[Subgroup]:
    """Subgroups U with N <= U <= K and (K:U) = p^n; N must contain K'."""
    group = k.group
    level: Dict[tuple, Subgroup] = {k.key: k}
    for _ in range(n):
        nxt: Dict[tuple, Subgroup] = {}
        for sub in level.values():
            if sub.lo <= n_sub.lo:
                continue
            for u in _maximal_between(group, sub, n_sub):
                nxt.setdefault(u.key, u)
        level = nxt
    return [level[key] for key in sorted(level)]
