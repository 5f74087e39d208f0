import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from app.abelian import render_rows, render_type, render_types
from app.config import get_settings
from app.errors import ScopeError
from app.lattice import rank_mod_p, rref_subspaces
from app.pcgroup import (PcPresentation, Subgroup, abelianization, center, format_presentation,
                         nilpotency_class, quotient)
from app.transfer import TransferService, orbit_representative, total_kernel_count

from .cover import PCover, p_cover
from .isomorphism import find_isomorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fingerprint:
    lo: int
    nilpotency_class: int
    coclass: int
    center_lo: int
    tau0: str
    tau1: str
    kappa: str
    second_order: str
    order_stats: Tuple[Tuple[int, int], ...]

    @property
    def total_kernels(self) -> int:
        return total_kernel_count(self.kappa) if self.kappa else 0

    def sort_key(self) -> tuple:
        return (self.lo, self.coclass, self.tau1, self.kappa, self.second_order,
                self.center_lo, self.order_stats)

    def as_dict(self) -> Dict[str, object]:
        return {
            "lo": self.lo,
            "class": self.nilpotency_class,
            "coclass": self.coclass,
            "centerLo": self.center_lo,
            "tau0": self.tau0,
            "tau1": self.tau1,
            "kappa": self.kappa,
            "secondOrder": self.second_order,
        }


@dataclass
class NodePattern:
    """First and second order data of a vertex, when its abelianization is elementary."""

    tau1: list = field(default_factory=list)
    kappa: str = ""
    rows: list = field(default_factory=list)


def node_pattern(group: PcPresentation) -> Optional[NodePattern]:
    if not abelianization(group).is_elementary or group.n < 2:
        return None
    svc = TransferService(group)
    kappa = svc.ipod()
    kappa_text = "".join(map(str, kappa)) if all(v <= 9 for v in kappa) else ",".join(map(str, kappa))
    return NodePattern(tau1=svc.ttt(1), kappa=kappa_text,
                       rows=[svc.second_order_row(h) for h in svc.layers[1].subgroups])


def fingerprint(group: PcPresentation, pattern: Optional[NodePattern] = None) -> Fingerprint:
    c = nilpotency_class(group)
    pattern = pattern if pattern is not None else node_pattern(group)
    stats = Counter(group.element_order(x) for x in group.elements())
    kappa = ""
    if pattern is not None and pattern.kappa:
        kappa = orbit_representative(pattern.kappa) if "," not in pattern.kappa else pattern.kappa
    return Fingerprint(
        lo=group.n,
        nilpotency_class=c,
        coclass=group.n - c,
        center_lo=center(group).lo,
        tau0=render_type(abelianization(group)),
        tau1=render_types(pattern.tau1) if pattern else "",
        kappa=kappa,
        second_order=render_rows(pattern.rows, with_tau2=False) if pattern else "",
        order_stats=tuple(sorted(stats.items())),
    )


@dataclass(eq=False)
class TreeNode:
    """Vertex of a descendant tree; ``name`` is the relative identifier parent-#s;i."""

    group: PcPresentation
    name: str
    parent: Optional["TreeNode"] = None
    step: int = 0
    ordinal: int = 0
    fingerprint: Optional[Fingerprint] = None
    pattern: Optional[NodePattern] = None
    catalog_id: Optional[str] = None
    iso_unresolved: bool = False
    _cover: Optional[PCover] = field(default=None, repr=False)

    @classmethod
    def root(cls, group: PcPresentation, name: Optional[str] = None) -> "TreeNode":
        pattern = node_pattern(group)
        return cls(group=group, name=name or group.name or "root",
                   fingerprint=fingerprint(group, pattern), pattern=pattern)

    @property
    def lo(self) -> int:
        return self.group.n

    @property
    def cover(self) -> PCover:
        if self._cover is None:
            self._cover = p_cover(self.group)
        return self._cover

    @property
    def nuclear_rank(self) -> int:
        return self.cover.nuclear_rank

    @property
    def is_capable(self) -> bool:
        return self.nuclear_rank > 0

    def path(self) -> List["TreeNode"]:
        out, node = [], self
        while node is not None:
            out.append(node)
            node = node.parent
        return list(reversed(out))


def allowable_subgroups(cov: PCover, s: int) -> List[Subgroup]:
    """Subgroups M of index p^s in the multiplicator with M * nucleus = multiplicator."""
    mu, p = cov.multiplicator_rank, cov.group.p
    n = cov.group.n
    nucleus_rows = [cov.multiplicator_coordinates(x) for x in cov.nucleus.basis]
    out = []
    for basis in rref_subspaces(mu, mu - s, p):
        if rank_mod_p(list(basis) + nucleus_rows, p) != mu:
            continue
        table = {}
        for row in basis:
            lead = next(k for k, v in enumerate(row) if v)
            table[n + lead] = (0,) * n + tuple(row)
        out.append(Subgroup(cov.cover, table))
    return out


def descendants(parent: Union[TreeNode, PcPresentation], s: int,
                iso_limit: Optional[int] = None) -> List[TreeNode]:
    """Immediate descendants of step size s, one per isomorphism class found."""
    node = parent if isinstance(parent, TreeNode) else TreeNode.root(parent)
    cov = node.cover
    if not 1 <= s <= cov.nuclear_rank:
        raise ScopeError(f"step size {s} outside 1..{cov.nuclear_rank} for {node.name}")
    limit = iso_limit if iso_limit is not None else get_settings().iso_limit

    candidates = []
    for m in allowable_subgroups(cov, s):
        child, _ = quotient(cov.cover, m)
        pattern = node_pattern(child)
        candidates.append((child, pattern, fingerprint(child, pattern)))
    logger.debug(f"{node.name}: {len(candidates)} allowable subgroups of step {s}")

    kept: List[Tuple[PcPresentation, NodePattern, Fingerprint, bool]] = []
    by_print: Dict[Fingerprint, List[int]] = {}
    for child, pattern, fp in candidates:
        unresolved = False
        duplicate = False
        for idx in by_print.get(fp, []):
            result = find_isomorphism(child, kept[idx][0], limit)
            if result.isomorphic:
                duplicate = True
                break
            unresolved = unresolved or result.exhausted
        if duplicate:
            continue
        by_print.setdefault(fp, []).append(len(kept))
        kept.append((child, pattern, fp, unresolved))

    kept.sort(key=lambda item: (item[2].sort_key(), format_presentation(item[0])))
    children = []
    for i, (child, pattern, fp, unresolved) in enumerate(kept, start=1):
        name = f"{node.name}-#{s};{i}"
        child.name = name
        children.append(TreeNode(group=child, name=name, parent=node, step=s, ordinal=i,
                                 fingerprint=fp, pattern=pattern, iso_unresolved=unresolved))
    logger.info(f"{node.name}: {len(children)} descendants of step size {s}")
    return children


def sibling_batches(children: List[TreeNode]) -> List[List[TreeNode]]:
    """Siblings grouped by equal first and second order pattern."""
    groups: Dict[tuple, List[TreeNode]] = {}
    for child in children:
        fp = child.fingerprint
        groups.setdefault((fp.tau1, fp.kappa, fp.second_order), []).append(child)
    return [groups[k] for k in sorted(groups)]


__all__ = ["Fingerprint", "NodePattern", "TreeNode", "node_pattern", "fingerprint",
           "allowable_subgroups", "descendants", "sibling_batches"]
