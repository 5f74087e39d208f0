import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from app.abelian import AbelianType, parse_type, parse_types, render_type, render_types
from app.catalog import CatalogEntry, load_catalog
from app.config import get_settings
from app.errors import ScopeError
from app.pcgroup import derived_length
from app.pgen import GrowthPolicy, TargetPattern, TreeNode, grow_tree

from .classify import IpadClassification, classify_ipad

logger = logging.getLogger(__name__)

PATTERN_TABLES = ("coclass1", "treeQ", "treeU", "sporadicH4", "sporadicG19")
FIELD_KINDS = ("real", "imaginary")


@dataclass
class ContestantSet:
    tau1: str
    classification: IpadClassification
    entries: List[CatalogEntry] = field(default_factory=list)
    nodes: List[TreeNode] = field(default_factory=list)
    bound_hit: bool = False

    @property
    def ids(self) -> List[str]:
        if self.entries:
            return [e.id for e in self.entries]
        return [n.catalog_id or n.name for n in self.nodes]

    def __len__(self) -> int:
        return len(self.entries) or len(self.nodes)


def admissible_branch(entry: CatalogEntry) -> bool:
    """Coclass-1 vertices of order 3^4 and beyond only occur on every other branch."""
    if entry.table != "coclass1" or entry.lo < 4:
        return True
    return entry.lo % 2 == 0


def contestants(tau0: Union[str, AbelianType], tau1: Union[str, Sequence[AbelianType]],
                max_lo: Optional[int] = None, mode: str = "catalog",
                quadratic: bool = False) -> ContestantSet:
    """Metabelian groups with the given first-layer IPAD, up to order 3^max_lo.

    ``mode="catalog"`` reads the transcribed tables; ``mode="tree"`` grows the
    descendant tree of <9,2> and reports whether the order bound was reached.
    """
    t0 = parse_type(tau0) if isinstance(tau0, str) else tau0
    if render_type(t0) != "1^2":
        raise ScopeError(f"contestants need abelianization 1^2, got {render_type(t0)}")
    ts = parse_types(tau1) if isinstance(tau1, str) else list(tau1)
    max_lo = max_lo or get_settings().max_lo
    classification = classify_ipad(ts)
    result = ContestantSet(tau1=render_types(ts), classification=classification)
    if classification.malformed:
        logger.info(f"IPAD {result.tau1} is malformed, no contestants")
        return result

    if mode == "catalog":
        result.entries = [e for e in load_catalog()
                          if e.table in PATTERN_TABLES and e.rows and e.lo <= max_lo
                          and e.tau1_text == result.tau1]
        if quadratic:
            result.entries = [e for e in result.entries if admissible_branch(e)]
    elif mode == "tree":
        root = load_catalog().resolve("<9,2>")
        policy = GrowthPolicy(max_lo=max_lo, target=TargetPattern(tau1=ts),
                              max_coclass=max(classification.coclasses))
        report = grow_tree(root.presentation, policy)
        result.nodes = [n for n in report.matches if derived_length(n.group) <= 2]
        result.bound_hit = report.bound_hit
        if result.bound_hit:
            logger.warning(f"Contestants of {result.tau1} may continue beyond order 3^{max_lo}")
    else:
        raise ScopeError(f"unknown contestant mode {mode!r}")
    logger.info(f"{len(result)} contestants for tau1={result.tau1} up to 3^{max_lo}")
    return result


def shafarevich_filter(candidates: Sequence[CatalogEntry], field_kind: str, rho: int = 2
                       ) -> List[CatalogEntry]:
    """Keep candidates with rho <= d2 <= rho + unit rank; unknown d2 is kept."""
    if field_kind not in FIELD_KINDS:
        raise ScopeError(f"field kind must be real or imaginary, got {field_kind!r}")
    upper = rho + (1 if field_kind == "real" else 0)
    kept = []
    for entry in candidates:
        d2 = entry.d2
        if d2 is None or rho <= d2 <= upper:
            kept.append(entry)
        else:
            logger.debug(f"{entry.id} removed: relation rank {d2} outside {rho}..{upper}")
    return kept


def unknown_relation_rank(candidates: Sequence[CatalogEntry]) -> List[str]:
    return [e.id for e in candidates if e.d2 is None]
