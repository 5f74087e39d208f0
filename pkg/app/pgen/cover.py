"""p-covering groups by the tails construction.

Every defining relation of G gets a new central generator of order p (its
tail). Collecting the consistency test words in this extension gives linear
conditions on the tails; solving them leaves a consistent central extension E
of G. The p-covering group G* is the subgroup of E generated by lifts of a
minimal generating set of G, its p-multiplicator is G* ∩ tails and its nucleus
is P_c(G*) for the lower exponent-p class c of G.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from app.errors import PresentationError
from app.lattice import row_reduce
from app.pcgroup import (PcPresentation, Subgroup, closure, lower_exponent_p_series, minimal_generators,
                         p_class, subgroup_presentation)

logger = logging.getLogger(__name__)


@dataclass
class PCover:
    group: PcPresentation
    cover: PcPresentation
    multiplicator: Subgroup
    nucleus: Subgroup

    @property
    def multiplicator_rank(self) -> int:
        return self.multiplicator.lo

    @property
    def nuclear_rank(self) -> int:
        return self.nucleus.lo

    def multiplicator_coordinates(self, x) -> Tuple[int, ...]:
        """Coordinates of an element of the multiplicator in its unit basis."""
        n = self.group.n
        return tuple(x[n:])


def _tail_relations(group: PcPresentation) -> List[Tuple[str, tuple]]:
    relations: List[Tuple[str, tuple]] = [("power", (i,)) for i in range(group.n)]
    relations += [("comm", (j, i)) for j in range(group.n) for i in range(j)]
    return relations


def _extension(group: PcPresentation, tails: Dict[int, Tuple[int, ...]], width: int,
               name: str) -> PcPresentation:
    """G with relation r extended by the tail vector tails[r] on ``width`` new generators."""
    n, m = group.n, group.n + width
    powers, comms = {}, {}
    for r, (kind, idx) in enumerate(_tail_relations(group)):
        if kind == "power":
            base = group.power_rhs.get(idx[0], group.identity)
        else:
            base = group.comm_rhs.get(idx, group.identity)
        vec = tuple(base) + tuple(tails.get(r, (0,) * width))
        if kind == "power":
            powers[idx[0]] = vec
        else:
            comms[idx] = vec
    return PcPresentation(group.p, m, powers, comms, name=name)


def p_cover(group: PcPresentation) -> PCover:
    p, n = group.p, group.n
    relations = _tail_relations(group)
    t = len(relations)
    unit = {r: tuple(1 if k == r else 0 for k in range(t)) for r in range(t)}
    free_ext = _extension(group, unit, t, name=f"{group.name or 'G'}~tails")

    conditions = []
    for label, left, right in free_ext.test_words():
        diff = [(a - b) % p for a, b in zip(left[n:], right[n:])]
        if any(left[k] != right[k] for k in range(n)):
            raise PresentationError(f"{group!r} is inconsistent at {label}")
        if any(diff):
            conditions.append(diff)
    reduced = row_reduce(conditions, p) if conditions else []
    pivots = {}
    for row in reduced:
        lead = next(k for k, v in enumerate(row) if v)
        pivots[lead] = row
    free_tails = [r for r in range(t) if r not in pivots]
    slot = {r: a for a, r in enumerate(free_tails)}
    f = len(free_tails)

    tails: Dict[int, Tuple[int, ...]] = {}
    for r in range(t):
        vec = [0] * f
        if r in slot:
            vec[slot[r]] = 1
        else:
            for k, v in enumerate(pivots[r]):
                if k != r and v:
                    vec[slot[k]] = (vec[slot[k]] - v) % p
        tails[r] = tuple(vec)
    extension = _extension(group, tails, f, name=f"{group.name or 'G'}~ext")

    lifts = [extension.generator(i) for i in minimal_generators(group)]
    star = closure(extension, lifts)
    cover, _ = subgroup_presentation(star, name=f"{group.name or 'G'}*")
    mu = cover.n - n
    multiplicator = Subgroup(cover, {a: cover.generator(a) for a in range(n, cover.n)})
    c = p_class(group)
    series = lower_exponent_p_series(cover)
    nucleus = series[c] if c < len(series) else Subgroup(cover, {})
    logger.debug(f"{group!r}: {len(conditions)} tail conditions, multiplicator rank {mu}, "
                 f"nuclear rank {nucleus.lo}")
    return PCover(group=group, cover=cover, multiplicator=multiplicator, nucleus=nucleus)


def relation_rank(group: PcPresentation) -> int:
    """d2 of G, equal to the p-multiplicator rank."""
    return p_cover(group).multiplicator_rank


def nuclear_rank(group: PcPresentation) -> int:
    return p_cover(group).nuclear_rank
